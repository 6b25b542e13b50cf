#pragma once

// Simply-laced exceptional root systems E6, E7, E8 in the simple-root basis
// (Bourbaki numbering), graded by the inner product with the maximal root.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chevorb {

enum class RootSystemId { E6, E7, E8 };

std::string_view to_string(RootSystemId id);
/// Accepts "E6", "E7", "E8"; throws std::invalid_argument otherwise.
RootSystemId parse_root_system_id(std::string_view text);

inline constexpr int kMaxRank = 8;

/// Integer coordinates over the simple roots. Unused trailing slots are zero.
struct Root {
  std::array<std::int8_t, kMaxRank> c{};
  int rank = 0;

  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  int height() const;
  bool is_zero() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend Root operator+(Root a, const Root& b);
  friend Root operator-(Root a, const Root& b);
  friend Root operator-(Root a);
  friend Root operator*(int s, Root a);
};

/// "1,2,2,3,2,1"
std::string to_string(const Root& r);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Root parse_root(std::string_view text, int rank);

/// Index of a root in the canonical order (ascending height, then
/// lexicographic on coordinates).
using RootIndex = int;

/// Pairwise orthogonal roots of the first layer with
/// lambda + mu + nu + xi = 2 delta.
struct Quadruple {
  RootIndex lambda = -1;
  RootIndex mu = -1;
  RootIndex nu = -1;
  RootIndex xi = -1;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

class RootSystem {
 public:
  /// Full closure of the simple roots under addition. Immutable afterwards.
  static RootSystem build(RootSystemId id);

  RootSystemId id() const { return id_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  /// dim of the Lie algebra: |Phi| + rank.
  int algebra_dim() const { return size() + rank_; }

  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootIndex i) const { return roots_[static_cast<std::size_t>(i)]; }
  std::optional<RootIndex> index_of(const Root& r) const;
  /// Throws std::invalid_argument when r is not a root of this system.
  RootIndex require_index(const Root& r) const;

  RootIndex delta() const { return delta_; }
  /// The simple root (0-based slot) not orthogonal to delta.
  int alpha_k() const { return alpha_k_; }
  RootIndex simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }

  int inner(RootIndex a, RootIndex b) const { return inner_[idx(a, b)]; }
  int inner(const Root& a, const Root& b) const;
  /// a + b when it is a root, otherwise none.
  std::optional<RootIndex> sum_root(RootIndex a, RootIndex b) const {
    const int s = sum_[idx(a, b)];
    return s < 0 ? std::nullopt : std::optional<RootIndex>(s);
  }
  std::optional<Root> sum_root(const Root& a, const Root& b) const;
  RootIndex neg(RootIndex a) const { return neg_[static_cast<std::size_t>(a)]; }

  /// Roots beta with (beta, alpha) = i, in canonical order.
  std::vector<RootIndex> phi_layer(RootIndex alpha, int i) const;
  /// Cached layers relative to delta, i in [-2, 2].
  const std::vector<RootIndex>& layer(int i) const { return layers_[static_cast<std::size_t>(i + 2)]; }
  /// (beta, delta).
  int degree(RootIndex beta) const { return inner(beta, delta_); }
  /// Position of a first-layer root in layer(1); -1 for other roots.
  int v1_position(RootIndex beta) const { return v1_pos_[static_cast<std::size_t>(beta)]; }

  /// Bit i set iff the i-th simple coordinate of beta is odd (h_beta mod 2).
  std::uint32_t coroot_parity(RootIndex beta) const { return coroot_parity_[static_cast<std::size_t>(beta)]; }
  /// Bit i set iff (beta, alpha_i) is odd.
  std::uint32_t pairing_parity(RootIndex beta) const { return pairing_parity_[static_cast<std::size_t>(beta)]; }

  /// First quadruple in lexicographic (canonical index) order, with the given
  /// lambda when supplied. Throws std::invalid_argument if lambda is not in
  /// the first layer.
  Quadruple find_quadruple(std::optional<RootIndex> lambda = std::nullopt) const;
  /// First alpha in the zero layer (canonical order) with (alpha, r) = c for
  /// every constraint.
  std::optional<RootIndex> find_angle_root(std::span<const std::pair<RootIndex, int>> constraints) const;

 private:
  std::size_t idx(RootIndex a, RootIndex b) const {
    return static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b);
  }

  RootSystemId id_ = RootSystemId::E6;
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<Root> roots_;
  std::unordered_map<std::string, RootIndex> index_;
  std::vector<RootIndex> simple_;
  RootIndex delta_ = -1;
  int alpha_k_ = -1;
  std::vector<std::int8_t> inner_;
  std::vector<int> sum_;
  std::vector<RootIndex> neg_;
  std::array<std::vector<RootIndex>, 5> layers_;
  std::vector<int> v1_pos_;
  std::vector<std::uint32_t> coroot_parity_;
  std::vector<std::uint32_t> pairing_parity_;
};

/// Process-lifetime cached root systems.
const RootSystem& root_system(RootSystemId id);

/// Bourbaki Cartan matrix, row-major.
std::vector<int> cartan_matrix(RootSystemId id);
int rank_of(RootSystemId id);

}  // namespace chevorb
