#pragma once

// Randomized consistency checks shared by the `selftest` subcommand and the
// test suites, plus the random generators they draw from.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chevorb/reduce.hpp"

namespace chevorb {

using Rng = std::mt19937_64;

Fel random_fel(const Field& field, Rng& rng);
Fel random_nonzero_fel(const Field& field, Rng& rng);
/// Uniform vector of V1.
ChevVec random_v1(const RootSystem& sys, const Field& field, Rng& rng);
/// Uniform vector of the whole algebra.
ChevVec random_vec(const RootSystem& sys, const Field& field, Rng& rng);
/// Word of uniform length in [1, max_len] with roots from the zero layer.
GroupWord random_g0_word(const RootSystem& sys, const Field& field, int max_len, Rng& rng);
QuintupleVec random_quintuple(const RootSystem& sys, const Field& field, Rng& rng);

/// The lift of a quintuple vector with a = 0, written term by term:
/// y = e_d + x^l e_l + x^m e_m + ... + x^{d-l} x^l h_l + x^{d-l} x^x x^l e_{x-d}.
/// The e_{-l} coefficient is x^x x^n x^m + (x^{d-l})^2 x^l. Matches lift()
/// when the lambda - delta factor acts before the -lambda factor, which holds
/// for the default quadruple.
ChevVec lift_closed_form(const RootSystem& sys, const Field& field, const QuintupleVec& q);

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// w_word(alpha, a) scales every e_beta by 1/a, 1 or a, for all alpha in the
/// zero layer and all a in K*.
CheckResult check_w_diagonal(const RootSystem& sys, const Field& field);
CheckResult check_lift_closed_form(const RootSystem& sys, const Field& field, int n, std::uint64_t seed);
/// x_alpha(a)[u, v] = [x_alpha(a) u, x_alpha(a) v].
CheckResult check_automorphism(const RootSystem& sys, const Field& field, int n, std::uint64_t seed);

std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace chevorb
