#pragma once

#include <optional>

#include "chevorb/invariants.hpp"
#include "chevorb/reduce.hpp"

namespace chevorb {

struct Canonical {
  OrbitLabel label;
  ChevVec representative;
  /// apply_word(*witness, x) == representative; none when the reduction
  /// failed or ended in a degenerate frame.
  std::optional<GroupWord> witness;
};

/// reduce_to_quintuple -> normalize_scales -> sweep_xi, with the sweep
/// parameter chosen to move x^xi to its Artin-Schreier class representative.
/// The label always comes from the invariants, so a failed reduction still
/// yields the label and canonical_rep(label). Throws std::invalid_argument
/// when x is not in V1.
Canonical canonicalize(const ChevVec& x, const ReduceOptions& opts = {});

}  // namespace chevorb
