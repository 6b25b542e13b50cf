#include "chevorb/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace chevorb {

std::string to_string(const OrbitLabel& label) {
  switch (label.kind) {
    case OrbitKind::Zero: return "Zero";
    case OrbitKind::Singular: return "Singular";
    case OrbitKind::Shiny: return "Shiny";
    case OrbitKind::Luminous: return "Luminous";
    case OrbitKind::Fam: return "Fam(s=" + to_hex(label.s) + ",c=" + to_hex(label.c) + ")";
  }
  return "?";
}

std::optional<std::string> adjective(const OrbitLabel& label, const Field& field) {
  switch (label.kind) {
    case OrbitKind::Zero: return std::nullopt;
    case OrbitKind::Singular: return "singular";
    case OrbitKind::Shiny: return "shiny";
    case OrbitKind::Luminous: return "luminous";
    case OrbitKind::Fam:
      if (!label.c.is_zero()) return "dark";
      if (field.degree() == 1) return "luminous";
      return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(const Signature& sig) {
  std::string out = sig.is_zero ? "zero" : "t=" + to_hex(sig.t) + ",class=" + to_hex(sig.cls);
  if (sig.rank_profile)
    out += ",ranks=(" + std::to_string(sig.rank_profile->first) + "," + std::to_string(sig.rank_profile->second) + ")";
  return out;
}

ChevVec lift(const ChevVec& x, Fel a, std::span<const RootIndex> gamma_order) {
  if (!x.in_v1()) throw std::invalid_argument("lift expects a vector of V1");
  const RootSystem& sys = x.sys();
  const RootIndex delta = sys.delta();
  ChevVec y = ChevVec::basis_e(sys, x.field(), delta);
  for (RootIndex g : gamma_order) {
    if (sys.degree(g) != -1) throw std::invalid_argument("lift factor roots must lie in layer -1");
    const Fel c = x.e(*sys.sum_root(delta, g));
    if (!c.is_zero()) y = apply_x(g, c, y);
  }
  return apply_x(sys.neg(delta), a, y);
}

ChevVec lift(const ChevVec& x, Fel a) { return lift(x, a, x.sys().layer(-1)); }

Fel t_of(const ChevVec& x) { return lift(x, kZero).h(x.sys().alpha_k()); }

Fel delta_class_of(const ChevVec& x) {
  const ChevVec y = lift(x, kZero);
  const Fel t = y.h(x.sys().alpha_k());
  return x.field().as_class_of(t, y.e(x.sys().neg(x.sys().delta())));
}

ChevVec zero_lift(const ChevVec& x) {
  const ChevVec y = lift(x, kZero);
  const RootSystem& sys = x.sys();
  const Fel t = y.h(sys.alpha_k());
  const Fel m = y.e(sys.neg(sys.delta()));
  if (!t.is_zero() || !x.field().as_class_of(t, m).is_zero())
    throw std::domain_error("zero_lift requires t = 0 and a zero Artin-Schreier class");
  // y^{-delta} moves by a^2 when t = 0.
  return lift(x, x.field().sqrt(m));
}

std::pair<int, int> rank_signature(const ChevVec& x) { return {ad_rank(x, 1), ad_rank(x, 2)}; }

Signature signature_of(const ChevVec& x) {
  if (!x.in_v1()) throw std::invalid_argument("signature_of expects a vector of V1");
  if (x.is_zero()) return Signature{true, kZero, kZero, std::make_pair(0, 0)};
  const RootSystem& sys = x.sys();
  const ChevVec y = lift(x, kZero);
  Signature sig;
  sig.t = y.h(sys.alpha_k());
  sig.cls = x.field().as_class_of(sig.t, y.e(sys.neg(sys.delta())));
  if (sig.t.is_zero() && sig.cls.is_zero()) sig.rank_profile = rank_signature(x);
  return sig;
}

ChevVec canonical_rep(const RootSystem& sys, const Field& field, const OrbitLabel& label) {
  const Quadruple q = sys.find_quadruple();
  ChevVec v(sys, field);
  switch (label.kind) {
    case OrbitKind::Zero: break;
    case OrbitKind::Luminous: v.e(q.nu) = kOne; [[fallthrough]];
    case OrbitKind::Shiny: v.e(q.mu) = kOne; [[fallthrough]];
    case OrbitKind::Singular: v.e(q.lambda) = kOne; break;
    case OrbitKind::Fam: {
      if (label.s.is_zero() || !field.contains(label.s) || !field.contains(label.c))
        throw std::invalid_argument("Fam label needs s != 0 and both parameters in the field");
      if (field.as_class_of(label.s, label.c) != label.c)
        throw std::invalid_argument("Fam label class " + to_hex(label.c) + " is not a class representative under ~_" +
                                    to_hex(label.s));
      v.e(q.lambda) = kOne;
      v.e(sys.require_index(sys.root(sys.delta()) - sys.root(q.lambda))) = label.s;
      v.e(q.mu) = kOne;
      v.e(q.nu) = kOne;
      v.e(q.xi) = label.c;
      break;
    }
  }
  return v;
}

std::vector<OrbitLabel> all_labels(const Field& field) {
  std::vector<OrbitLabel> out{OrbitLabel::zero(), OrbitLabel::singular(), OrbitLabel::shiny(), OrbitLabel::luminous()};
  for (std::uint32_t s = 1; s < field.order(); ++s) {
    const Fel fs(static_cast<std::uint16_t>(s));
    for (Fel c : field.as_class_reps(fs)) out.push_back(OrbitLabel::fam(fs, c));
  }
  return out;
}

Classifier::Classifier(const RootSystem& sys, const Field& field) : sys_(&sys), field_(&field) {
  std::pair<int, int>* slots[3] = {&singular_, &shiny_, &luminous_};
  const OrbitLabel labels[3] = {OrbitLabel::singular(), OrbitLabel::shiny(), OrbitLabel::luminous()};
  for (int i = 0; i < 3; ++i) {
    const Signature sig = signature_of(canonical_rep(sys, field, labels[i]));
    if (!sig.t.is_zero() || !sig.cls.is_zero() || !sig.rank_profile)
      throw std::logic_error(to_string(labels[i]) + " representative has nonzero t or class");
    *slots[i] = *sig.rank_profile;
  }
  const std::pair<int, int> zero{0, 0};
  if (singular_ == shiny_ || singular_ == luminous_ || shiny_ == luminous_ || singular_ == zero || shiny_ == zero ||
      luminous_ == zero)
    throw std::logic_error("rank profile collision among singular/shiny/luminous representatives in " +
                           std::string(to_string(sys.id())) + " over GF(2^" + std::to_string(field.degree()) + ")");
}

const std::pair<int, int>& Classifier::profile(OrbitKind kind) const {
  switch (kind) {
    case OrbitKind::Singular: return singular_;
    case OrbitKind::Shiny: return shiny_;
    case OrbitKind::Luminous: return luminous_;
    default: throw std::invalid_argument("rank profiles are tabulated for singular, shiny and luminous only");
  }
}

OrbitLabel Classifier::label_of(const Signature& sig) const {
  if (sig.is_zero) return OrbitLabel::zero();
  if (!sig.t.is_zero()) return OrbitLabel::fam(sig.t, sig.cls);
  if (!sig.cls.is_zero())
    throw std::domain_error("t = 0 with a nonzero Artin-Schreier class: input over an imperfect field is unsupported");
  if (!sig.rank_profile) throw std::domain_error("signature lacks the rank profile");
  if (*sig.rank_profile == singular_) return OrbitLabel::singular();
  if (*sig.rank_profile == shiny_) return OrbitLabel::shiny();
  if (*sig.rank_profile == luminous_) return OrbitLabel::luminous();
  throw std::domain_error("unrecognized rank profile (" + std::to_string(sig.rank_profile->first) + "," +
                          std::to_string(sig.rank_profile->second) + ")");
}

const Classifier& classifier(const RootSystem& sys, const Field& field) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Classifier>> cache;
  const auto key = std::make_pair(static_cast<int>(sys.id()), field.degree());
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<Classifier>(root_system(sys.id()), gf(field.degree()));
  return *slot;
}

OrbitLabel classify(const ChevVec& x) { return classifier(x.sys(), x.field()).classify(x); }

}  // namespace chevorb
