#pragma once

// Orbit invariants of G0 on V1 in characteristic 2 and the classifier built
// on them.
//
// Every x in V1 lifts to a root element y = u e_delta with y^delta = 1 and
// y^alpha = x^alpha on the first layer, where
//   u = x_{-delta}(a) * prod_{gamma in Phi_{-1}} x_gamma(x^{delta+gamma}).
// The coefficient t of y at h_{alpha_k} does not depend on a, and changing a
// moves y^{-delta} by a^2 + a t, so (t, class of y^{-delta} under ~_t) is an
// invariant. When both vanish the rank profile of ad x separates the
// singular, shiny and luminous orbits.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chevorb/liealg.hpp"

namespace chevorb {

enum class OrbitKind { Zero, Singular, Shiny, Luminous, Fam };

struct OrbitLabel {
  OrbitKind kind = OrbitKind::Zero;
  Fel s;  // Fam only: the invariant t, nonzero
  Fel c;  // Fam only: Artin-Schreier class representative under ~_s

  static OrbitLabel zero() { return {OrbitKind::Zero, {}, {}}; }
  static OrbitLabel singular() { return {OrbitKind::Singular, {}, {}}; }
  static OrbitLabel shiny() { return {OrbitKind::Shiny, {}, {}}; }
  static OrbitLabel luminous() { return {OrbitKind::Luminous, {}, {}}; }
  static OrbitLabel fam(Fel s, Fel c) { return {OrbitKind::Fam, s, c}; }

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// "Zero", "Singular", ..., "Fam(s=2,c=1)".
std::string to_string(const OrbitLabel& label);
/// Angle adjective where one is determined: singular, shiny, luminous, dark.
/// Fam(s, 0) is luminous only over GF(2); otherwise no adjective is returned.
std::optional<std::string> adjective(const OrbitLabel& label, const Field& field);

struct Signature {
  bool is_zero = false;
  Fel t;
  Fel cls;
  std::optional<std::pair<int, int>> rank_profile;  // set when t = 0 and cls = 0

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

/// y = u e_delta with the Phi_{-1} factors acting in canonical root order
/// (first root first) and x_{-delta}(a) acting last. Throws
/// std::invalid_argument when x is not in V1.
ChevVec lift(const ChevVec& x, Fel a);
/// Same, with the Phi_{-1} factors acting in the given order.
ChevVec lift(const ChevVec& x, Fel a, std::span<const RootIndex> gamma_order);

Fel t_of(const ChevVec& x);
Fel delta_class_of(const ChevVec& x);
/// The unique lift with y^{-delta} = 0. Throws std::domain_error unless
/// t_of(x) = 0 and delta_class_of(x) = 0.
ChevVec zero_lift(const ChevVec& x);
/// (rank ad x, rank (ad x)^2).
std::pair<int, int> rank_signature(const ChevVec& x);

Signature signature_of(const ChevVec& x);

/// Representatives built on find_quadruple(): 0, e_l, e_l + e_m, e_l + e_m + e_n,
/// and e_l + s e_{d-l} + e_m + e_n + c e_x for Fam(s, c). Throws
/// std::invalid_argument for labels that are invalid over the field.
ChevVec canonical_rep(const RootSystem& sys, const Field& field, const OrbitLabel& label);

/// All orbit labels over a finite field: 4 + 2(|K| - 1) of them.
std::vector<OrbitLabel> all_labels(const Field& field);

/// Signature -> label resolution for one (system, field) pair. The
/// rank-profile table is derived from canonical_rep at construction, which
/// throws std::logic_error if two labels share a signature.
class Classifier {
 public:
  Classifier(const RootSystem& sys, const Field& field);

  const RootSystem& sys() const { return *sys_; }
  const Field& field() const { return *field_; }

  /// Throws std::domain_error for the t = 0, class != 0 branch (imperfect
  /// fields only) or an unknown rank profile.
  OrbitLabel label_of(const Signature& sig) const;
  OrbitLabel classify(const ChevVec& x) const { return label_of(signature_of(x)); }

  const std::pair<int, int>& profile(OrbitKind kind) const;

 private:
  const RootSystem* sys_;
  const Field* field_;
  std::pair<int, int> singular_{}, shiny_{}, luminous_{};
};

/// Cached classifier per (system, field).
const Classifier& classifier(const RootSystem& sys, const Field& field);
OrbitLabel classify(const ChevVec& x);

}  // namespace chevorb
