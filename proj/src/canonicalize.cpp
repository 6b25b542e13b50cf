#include "chevorb/canonicalize.hpp"

#include <stdexcept>

namespace chevorb {

namespace {

// Scales the leading slots of a degenerate frame e_l, e_l + e_m, e_l + e_m + e_n
// to 1 with w_alpha words; alpha has inner 1 with the slot and 0 with the others.
std::optional<GroupWord> scale_prefix(const RootSystem& sys, const Field& field, QuintupleVec& q) {
  const RootIndex roots[3] = {q.quad.lambda, q.quad.mu, q.quad.nu};
  Fel* coeff[3] = {&q.lambda, &q.mu, &q.nu};
  GroupWord word;
  for (int s = 0; s < 3; ++s) {
    if (coeff[s]->is_zero() || *coeff[s] == kOne) continue;
    std::vector<std::pair<RootIndex, int>> cons;
    for (int o = 0; o < 3; ++o)
      if (o == s || !coeff[o]->is_zero()) cons.emplace_back(roots[o], o == s ? 1 : 0);
    auto alpha = sys.find_angle_root(cons);
    if (!alpha) return std::nullopt;
    word.left_multiply(w_word(sys, field, *alpha, *coeff[s]));
    *coeff[s] = kOne;
  }
  return word;
}

}  // namespace

Canonical canonicalize(const ChevVec& x, const ReduceOptions& opts) {
  if (!x.in_v1()) throw std::invalid_argument("canonicalize expects a vector of V1");
  const RootSystem& sys = x.sys();
  const Field& field = x.field();
  const OrbitLabel label = classify(x);
  const ChevVec rep = canonical_rep(sys, field, label);
  if (x.is_zero()) return {label, rep, GroupWord{}};

  auto reduced = reduce_to_quintuple(x, opts);
  if (!reduced) return {label, rep, std::nullopt};
  auto [q, word] = *reduced;

  if (!q.lambda.is_zero() && !q.mu.is_zero() && !q.nu.is_zero()) {
    auto [nq, nword] = normalize_scales(sys, field, q);
    word.left_multiply(nword);
    const Fel s = nq.delta_minus_lambda;
    // With unit scales the sweep moves x^xi by k s + k^2.
    const Fel target = s.is_zero() ? kZero : field.as_class_of(s, nq.xi);
    Fel k = kZero;
    if (s.is_zero()) {
      k = field.sqrt(nq.xi);
    } else {
      for (std::uint32_t c = 0; c < field.order(); ++c) {
        const Fel cand(static_cast<std::uint16_t>(c));
        if (nq.xi + field.artin_schreier(s, cand) == target) {
          k = cand;
          break;
        }
      }
    }
    if (!k.is_zero()) {
      auto [sq, sword] = sweep_xi(sys, field, nq, k);
      word.left_multiply(sword);
      nq = sq;
    }
    ChevVec out = to_chevvec(sys, field, nq);
    if (!(out == rep)) throw std::logic_error("canonical form disagrees with the invariant label " + to_string(label));
    return {label, rep, word};
  }

  if (q.delta_minus_lambda.is_zero() && q.xi.is_zero()) {
    if (auto sword = scale_prefix(sys, field, q)) {
      if (to_chevvec(sys, field, q) == rep) {
        word.left_multiply(*sword);
        return {label, rep, word};
      }
    }
  }
  return {label, rep, std::nullopt};
}

}  // namespace chevorb
