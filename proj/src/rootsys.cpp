#include "chevorb/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace chevorb {

std::string_view to_string(RootSystemId id) {
  switch (id) {
    case RootSystemId::E6: return "E6";
    case RootSystemId::E7: return "E7";
    case RootSystemId::E8: return "E8";
  }
  return "?";
}

RootSystemId parse_root_system_id(std::string_view text) {
  if (text == "E6") return RootSystemId::E6;
  if (text == "E7") return RootSystemId::E7;
  if (text == "E8") return RootSystemId::E8;
  throw std::invalid_argument("unknown root system '" + std::string(text) + "' (expected E6, E7 or E8)");
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::int8_t v) { return v == 0; });
}

Root operator+(Root a, const Root& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] = static_cast<std::int8_t>(a.c[i] + b.c[i]);
  return a;
}

Root operator-(Root a, const Root& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] = static_cast<std::int8_t>(a.c[i] - b.c[i]);
  return a;
}

Root operator-(Root a) {
  for (auto& v : a.c) v = static_cast<std::int8_t>(-v);
  return a;
}

Root operator*(int s, Root a) {
  for (auto& v : a.c) v = static_cast<std::int8_t>(s * v);
  return a;
}

std::string to_string(const Root& r) {
  std::string out;
  for (int i = 0; i < r.rank; ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out;
}

Root parse_root(std::string_view text, int rank) {
  Root r;
  r.rank = rank;
  int i = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    if (i >= rank) throw std::invalid_argument("too many root coordinates in '" + std::string(text) + "'");
    int v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v < -127 || v > 127)
      throw std::invalid_argument("malformed root coordinates '" + std::string(text) + "'");
    r.c[static_cast<std::size_t>(i++)] = static_cast<std::int8_t>(v);
    pos = comma + 1;
  }
  if (i != rank) throw std::invalid_argument("expected " + std::to_string(rank) + " root coordinates in '" + std::string(text) + "'");
  return r;
}

int rank_of(RootSystemId id) {
  switch (id) {
    case RootSystemId::E6: return 6;
    case RootSystemId::E7: return 7;
    case RootSystemId::E8: return 8;
  }
  return 0;
}

std::vector<int> cartan_matrix(RootSystemId id) {
  const int n = rank_of(id);
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto edge = [&](int i, int j) {  // 1-based Bourbaki labels
    a[static_cast<std::size_t>((i - 1) * n + (j - 1))] = -1;
    a[static_cast<std::size_t>((j - 1) * n + (i - 1))] = -1;
  };
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 2;
  edge(1, 3);
  edge(2, 4);
  for (int i = 3; i < n; ++i) edge(i, i + 1);
  return a;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * cartan(i, j) * b[j];
  return s;
}

std::optional<RootIndex> RootSystem::index_of(const Root& r) const {
  if (r.rank != rank_) return std::nullopt;
  auto it = index_.find(to_string(r));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::require_index(const Root& r) const {
  auto i = index_of(r);
  if (!i) throw std::invalid_argument("not a root of " + std::string(to_string(id_)) + ": " + to_string(r));
  return *i;
}

std::optional<Root> RootSystem::sum_root(const Root& a, const Root& b) const {
  auto s = sum_root(require_index(a), require_index(b));
  if (!s) return std::nullopt;
  return root(*s);
}

RootSystem RootSystem::build(RootSystemId id) {
  RootSystem sys;
  sys.id_ = id;
  sys.rank_ = rank_of(id);
  sys.cartan_ = cartan_matrix(id);
  const int n = sys.rank_;

  // Positive roots level by level: beta + alpha_i is a root iff (beta, alpha_i) = -1.
  std::vector<Root> positive;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.rank = n;
    r.c[static_cast<std::size_t>(i)] = 1;
    level.push_back(r);
  }
  while (!level.empty()) {
    positive.insert(positive.end(), level.begin(), level.end());
    std::vector<Root> next;
    for (const Root& b : level) {
      for (int i = 0; i < n; ++i) {
        Root a;
        a.rank = n;
        a.c[static_cast<std::size_t>(i)] = 1;
        if (sys.inner(b, a) != -1) continue;
        Root s = b + a;
        if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(s);
      }
    }
    level = std::move(next);
  }

  sys.roots_ = positive;
  for (const Root& r : positive) sys.roots_.push_back(-r);
  std::sort(sys.roots_.begin(), sys.roots_.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.c < b.c;
  });

  const std::size_t m = sys.roots_.size();
  for (std::size_t i = 0; i < m; ++i) sys.index_.emplace(to_string(sys.roots_[i]), static_cast<RootIndex>(i));

  for (int i = 0; i < n; ++i) {
    Root a;
    a.rank = n;
    a.c[static_cast<std::size_t>(i)] = 1;
    sys.simple_.push_back(sys.require_index(a));
  }
  sys.delta_ = static_cast<RootIndex>(m - 1);

  sys.inner_.resize(m * m);
  sys.sum_.assign(m * m, -1);
  sys.neg_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    sys.neg_[i] = sys.require_index(-sys.roots_[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const int ip = sys.inner(sys.roots_[i], sys.roots_[j]);
      sys.inner_[i * m + j] = static_cast<std::int8_t>(ip);
      if (ip == -1) sys.sum_[i * m + j] = sys.require_index(sys.roots_[i] + sys.roots_[j]);
    }
  }

  for (int i = 0; i < n; ++i) {
    if (sys.inner(sys.delta_, sys.simple_[static_cast<std::size_t>(i)]) != 0) {
      if (sys.alpha_k_ >= 0) throw std::logic_error("more than one simple root is not orthogonal to delta");
      sys.alpha_k_ = i;
    }
  }

  for (int i = -2; i <= 2; ++i) sys.layers_[static_cast<std::size_t>(i + 2)] = sys.phi_layer(sys.delta_, i);
  sys.v1_pos_.assign(m, -1);
  const auto& v1 = sys.layer(1);
  for (std::size_t p = 0; p < v1.size(); ++p) sys.v1_pos_[static_cast<std::size_t>(v1[p])] = static_cast<int>(p);

  sys.coroot_parity_.resize(m);
  sys.pairing_parity_.resize(m);
  for (std::size_t b = 0; b < m; ++b) {
    std::uint32_t cp = 0, pp = 0;
    for (int i = 0; i < n; ++i) {
      if (sys.roots_[b][i] & 1) cp |= 1u << i;
      if (sys.inner(static_cast<RootIndex>(b), sys.simple_[static_cast<std::size_t>(i)]) & 1) pp |= 1u << i;
    }
    sys.coroot_parity_[b] = cp;
    sys.pairing_parity_[b] = pp;
  }
  return sys;
}

std::vector<RootIndex> RootSystem::phi_layer(RootIndex alpha, int i) const {
  std::vector<RootIndex> out;
  for (RootIndex b = 0; b < size(); ++b)
    if (inner(b, alpha) == i) out.push_back(b);
  return out;
}

Quadruple RootSystem::find_quadruple(std::optional<RootIndex> lambda) const {
  const auto& v1 = layer(1);
  if (lambda && v1_position(*lambda) < 0)
    throw std::invalid_argument("lambda must lie in the first layer relative to delta");
  const Root two_delta = 2 * root(delta_);
  for (RootIndex l : v1) {
    if (lambda && l != *lambda) continue;
    for (RootIndex mu : v1) {
      if (inner(l, mu) != 0) continue;
      for (RootIndex nu : v1) {
        if (inner(l, nu) != 0 || inner(mu, nu) != 0) continue;
        const auto xi = index_of(two_delta - root(l) - root(mu) - root(nu));
        if (!xi || v1_position(*xi) < 0) continue;
        if (inner(*xi, l) != 0 || inner(*xi, mu) != 0 || inner(*xi, nu) != 0) continue;
        return Quadruple{l, mu, nu, *xi};
      }
    }
  }
  throw std::logic_error("no orthogonal quadruple found in " + std::string(to_string(id_)));
}

std::optional<RootIndex> RootSystem::find_angle_root(std::span<const std::pair<RootIndex, int>> constraints) const {
  for (RootIndex a : layer(0)) {
    bool ok = std::all_of(constraints.begin(), constraints.end(),
                          [&](const auto& rc) { return inner(a, rc.first) == rc.second; });
    if (ok) return a;
  }
  return std::nullopt;
}

const RootSystem& root_system(RootSystemId id) {
  static std::mutex mu;
  static std::array<std::unique_ptr<RootSystem>, 3> cache;
  const auto slot = static_cast<std::size_t>(id);
  std::lock_guard lock(mu);
  if (!cache[slot]) cache[slot] = std::make_unique<RootSystem>(RootSystem::build(id));
  return *cache[slot];
}

}  // namespace chevorb
