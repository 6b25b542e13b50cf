#pragma once

// Constructive reductions of vectors of V1 under G0, each returning the group
// word that witnesses the move.

#include <cstdint>
#include <optional>
#include <utility>

#include "chevorb/liealg.hpp"

namespace chevorb {

/// x^lambda e_lambda + x^{delta-lambda} e_{delta-lambda} + x^mu e_mu + x^nu e_nu + x^xi e_xi.
struct QuintupleVec {
  Quadruple quad;
  Fel lambda;
  Fel delta_minus_lambda;
  Fel mu;
  Fel nu;
  Fel xi;

  friend bool operator==(const QuintupleVec&, const QuintupleVec&) = default;
};

RootIndex delta_minus(const RootSystem& sys, RootIndex beta);

ChevVec to_chevvec(const RootSystem& sys, const Field& field, const QuintupleVec& q);
/// Reads the five coefficients back; none when x has support elsewhere.
std::optional<QuintupleVec> as_quintuple(const ChevVec& x, const Quadruple& quad);

/// Scales x^lambda, x^mu, x^nu to 1 with w_alpha words. Afterwards
/// x^{delta-lambda} is the old x^lambda x^{delta-lambda} and x^xi is the old
/// product x^lambda x^mu x^nu x^xi. Throws std::invalid_argument when one of
/// x^lambda, x^mu, x^nu is zero.
std::pair<QuintupleVec, GroupWord> normalize_scales(const RootSystem& sys, const Field& field, const QuintupleVec& x);

/// Applies x_{delta-lambda-mu}(k x^nu / x^lambda) x_{delta-lambda-nu}(k x^mu / x^lambda) x_{delta-mu-nu}(k),
/// which changes only x^xi, to x^xi + k x^{delta-lambda} + k^2 x^mu x^nu / x^lambda.
/// Throws std::invalid_argument when x^lambda is zero.
std::pair<QuintupleVec, GroupWord> sweep_xi(const RootSystem& sys, const Field& field, const QuintupleVec& x, Fel k);

struct ReduceOptions {
  std::uint64_t seed = 1;
  int budget = 10000;     // moves applied, across all restarts
  int restart_after = 400;  // non-improving moves before restarting from the input
};

/// Greedy support-shrinking search over moves x_alpha(a), alpha in the zero
/// layer, towards the quintuple frame of find_quadruple(). Returns none when
/// the budget runs out. Throws std::invalid_argument when x is not in V1.
std::optional<std::pair<QuintupleVec, GroupWord>> reduce_to_quintuple(const ChevVec& x, const ReduceOptions& opts = {});

}  // namespace chevorb
