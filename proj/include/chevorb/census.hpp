#pragma once

// Independent verification of the orbit classification: exhaustive BFS over
// all 2^dim(V1) vectors for GF(2), and sampled signature censuses otherwise.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevorb/invariants.hpp"

namespace chevorb {

struct OrbitRecord {
  OrbitLabel label;
  ChevVec representative;
  std::uint64_t size = 0;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// x_root(scalar) restricted to V1, in the canonical first-layer basis order.
struct GenMatrix {
  RootIndex root = -1;
  Fel scalar;
  int dim = 0;
  std::vector<Fel> entries;  // column-major: entries[col * dim + row]

  Fel at(int row, int col) const { return entries[static_cast<std::size_t>(col * dim + row)]; }
};

/// One matrix per (alpha in the zero layer, c in the polynomial GF(2)-basis of K).
std::vector<GenMatrix> generator_matrices(const RootSystem& sys, const Field& field);

/// Raised when a requested census exceeds the supported budget.
class BudgetRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit i of a state is the GF(2) coefficient at layer(1)[i].
using State = std::uint32_t;
ChevVec state_to_vec(const RootSystem& sys, const Field& field, State s);
State vec_to_state(const ChevVec& v);

struct BfsOptions {
  int threads = 1;
  /// E7 over GF(2) needs a 2^32-bit visited set (512 MiB); refused unless set.
  bool allow_large = false;
  /// Nonzero: generators are shuffled with this seed before the search.
  std::uint64_t generator_shuffle_seed = 0;
  std::uint64_t sample_seed = 1;
  int sample_per_orbit = 1000;
  /// Orbits up to this size are checked member by member.
  std::uint64_t exhaustive_limit = 1u << 16;
  /// Keep a per-state orbit index (E6 only: 1 MiB).
  bool keep_orbit_ids = false;
};

struct OrbitCheck {
  State min_state = 0;
  std::uint64_t members_checked = 0;
  std::uint64_t mismatches = 0;
  bool exhaustive = false;
};

struct BfsCensus {
  std::vector<OrbitRecord> records;  // in order of minimal state
  std::vector<OrbitCheck> checks;    // parallel to records
  std::vector<std::uint8_t> orbit_id;  // filled when keep_orbit_ids

  std::uint64_t total() const;
};

/// Partitions V1 over GF(2) into G0-orbits. Representatives are the
/// numerically smallest state of each orbit; labels come from the classifier
/// and are checked on a sample of members. Throws BudgetRefused for E8, for
/// |K| > 2, and for E7 without allow_large.
BfsCensus bfs_census(const RootSystem& sys, const Field& field, const BfsOptions& opts = {});

using SignatureHistogram = std::map<Signature, std::uint64_t>;

/// Signatures of n pseudorandom vectors of V1, deterministic in seed. The
/// support size is uniform in [0, dim V1], so the small orbits (zero,
/// singular) are reached, which uniform vectors over |K| > 2 almost never do.
SignatureHistogram sample_census(const RootSystem& sys, const Field& field, std::uint64_t n, std::uint64_t seed);

/// 4 + 2(|K| - 1).
std::uint64_t expected_orbit_count(const Field& field);

struct CensusFile {
  RootSystemId phi = RootSystemId::E6;
  int field_degree = 1;
  std::vector<OrbitRecord> orbits;
};

inline constexpr int kCensusVersion = 1;

void save_census(const std::vector<OrbitRecord>& records, const std::string& path);
/// Throws std::runtime_error on a missing or malformed file or a version
/// other than kCensusVersion.
CensusFile load_census(const std::string& path);

}  // namespace chevorb
