#pragma once

// The Chevalley Lie algebra V(Phi) over GF(2^k). In characteristic 2 every
// structure constant is 1, so the bracket and the action of the elementary
// root elements x_alpha(a) are sign-free.

#include <span>
#include <vector>

#include "chevorb/gf2k.hpp"
#include "chevorb/rootsys.hpp"

namespace chevorb {

/// An element sum_alpha x^alpha e_alpha + x^h of V, stored densely: one
/// coefficient per root (canonical order) plus rank Cartan coordinates over
/// the simple coroots. The system and field are borrowed and must outlive
/// the vector (the cached root_system() / gf() instances always do).
class ChevVec {
 public:
  ChevVec(const RootSystem& sys, const Field& field)
      : sys_(&sys), field_(&field), e_(static_cast<std::size_t>(sys.size())), h_(static_cast<std::size_t>(sys.rank())) {}

  static ChevVec basis_e(const RootSystem& sys, const Field& field, RootIndex beta, Fel c = kOne) {
    ChevVec v(sys, field);
    v.e(beta) = c;
    return v;
  }

  const RootSystem& sys() const { return *sys_; }
  const Field& field() const { return *field_; }

  Fel& e(RootIndex beta) { return e_[static_cast<std::size_t>(beta)]; }
  Fel e(RootIndex beta) const { return e_[static_cast<std::size_t>(beta)]; }
  Fel& h(int i) { return h_[static_cast<std::size_t>(i)]; }
  Fel h(int i) const { return h_[static_cast<std::size_t>(i)]; }
  std::span<const Fel> epart() const { return e_; }
  std::span<const Fel> hpart() const { return h_; }

  bool is_zero() const;
  bool hpart_zero() const;
  /// Roots carrying a nonzero coefficient, in canonical order.
  std::vector<RootIndex> support() const;
  int support_size() const;
  /// True when x has zero hpart and every nonzero coefficient sits on the
  /// first layer relative to delta.
  bool in_v1() const;

  /// Adds c * h_beta (beta's simple coordinates mod 2).
  void add_h_of_root(RootIndex beta, Fel c);

  ChevVec& operator+=(const ChevVec& o);
  friend ChevVec operator+(ChevVec a, const ChevVec& b) { return a += b; }
  ChevVec scaled(Fel c) const;

  friend bool operator==(const ChevVec& a, const ChevVec& b);

 private:
  const RootSystem* sys_;
  const Field* field_;
  std::vector<Fel> e_;
  std::vector<Fel> h_;
};

/// <beta, h> = sum_i h_i (beta, alpha_i) mod 2.
Fel cartan_pairing(const ChevVec& v, RootIndex beta);

/// Lie bracket. Throws std::invalid_argument for mixed systems or fields.
ChevVec bracket(const ChevVec& u, const ChevVec& v);

/// One factor x_alpha(a) of a group word.
struct Factor {
  RootIndex root = -1;
  Fel scalar;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// The product x_{a1}(c1) x_{a2}(c2) ... x_{an}(cn). It acts on a vector
/// right to left: the last factor acts first.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  /// g * this: g acts after the current word.
  GroupWord& left_multiply(const GroupWord& g);
  GroupWord& left_multiply(Factor f);
  /// Factors reversed; x_alpha(a)^-1 = x_alpha(a) in characteristic 2.
  GroupWord inverse() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Factor> factors_;
};

/// x_alpha(a) v.
ChevVec apply_x(RootIndex alpha, Fel a, const ChevVec& v);
/// Root-valued overload; throws std::invalid_argument when alpha is not a root.
ChevVec apply_x(const Root& alpha, Fel a, const ChevVec& v);
ChevVec apply_word(const GroupWord& w, const ChevVec& v);

/// w_alpha(a) = x_{-alpha}(a^2 + a) x_alpha(1/a) x_{-alpha}(a + 1) x_alpha(1),
/// which scales e_beta by 1/a, 1, a as (alpha, beta) = 1, 0, -1.
/// Throws std::domain_error for a = 0.
GroupWord w_word(const RootSystem& sys, const Field& field, RootIndex alpha, Fel a);

/// Rank over K of (ad v)^power on the full basis of V. power is 1 or 2.
int ad_rank(const ChevVec& v, int power);

}  // namespace chevorb
