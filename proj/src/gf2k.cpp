#include "chevorb/gf2k.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace chevorb {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int k) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << k)) a ^= poly;
  }
  return acc;
}

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

Field Field::make(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("field degree must lie in [1, 16], got " + std::to_string(k));
  Field f;
  f.k_ = k;
  for (std::uint32_t p = (1u << k) | 1u; p < (2u << k); p += 2) {
    if (is_irreducible(p)) {
      f.poly_ = p;
      break;
    }
  }

  const std::uint32_t q = 1u << k;
  const std::uint32_t n = q - 1;
  // Search for a primitive element: its powers must cover K* before returning to 1.
  for (std::uint32_t g = (k == 1 ? 1u : 2u); g < q; ++g) {
    std::vector<std::uint16_t> ex(2 * n);
    std::uint32_t cur = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i > 0 && cur == 1) {
        primitive = false;
        break;
      }
      ex[i] = static_cast<std::uint16_t>(cur);
      cur = poly_mulmod(cur, g, f.poly_, k);
    }
    if (!primitive || cur != 1) continue;
    for (std::uint32_t i = 0; i < n; ++i) ex[i + n] = ex[i];
    f.exp_ = std::move(ex);
    f.log_.assign(q, 0);
    for (std::uint32_t i = 0; i < n; ++i) f.log_[f.exp_[i]] = i;
    return f;
  }
  throw std::logic_error("no primitive element found");  // unreachable for a field
}

Fel Field::inv(Fel a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in GF(2^k)");
  const std::uint32_t n = order() - 1;
  return Fel(exp_[(n - log_[a.bits]) % n]);
}

Fel Field::pow(Fel a, std::uint64_t e) const {
  if (e == 0) return kOne;
  if (a.is_zero()) return kZero;
  const std::uint64_t n = order() - 1;
  return Fel(exp_[(static_cast<std::uint64_t>(log_[a.bits]) * (e % n)) % n]);
}

Fel Field::sqrt(Fel a) const {
  // a^(2^(k-1)) squares to a^(2^k) = a.
  Fel r = a;
  for (int i = 1; i < k_; ++i) r = square(r);
  return r;
}

std::vector<Fel> Field::additive_basis() const {
  std::vector<Fel> basis;
  for (int i = 0; i < k_; ++i) basis.emplace_back(static_cast<std::uint16_t>(1u << i));
  return basis;
}

std::vector<Fel> Field::as_image_basis(Fel s) const {
  // Reduced echelon form keyed by leading bit.
  std::array<std::uint16_t, 16> pivot{};
  for (Fel b : additive_basis()) {
    std::uint16_t v = artin_schreier(s, b).bits;
    for (int bit = k_ - 1; bit >= 0 && v != 0; --bit) {
      if (!(v >> bit & 1u)) continue;
      if (pivot[bit] == 0) {
        pivot[bit] = v;
        v = 0;
      } else {
        v ^= pivot[bit];
      }
    }
  }
  for (int bit = 0; bit < k_; ++bit) {
    if (pivot[bit] == 0) continue;
    for (int other = bit + 1; other < k_; ++other) {
      if (pivot[other] >> bit & 1u) pivot[other] ^= pivot[bit];
    }
  }
  std::vector<Fel> out;
  for (int bit = k_ - 1; bit >= 0; --bit)
    if (pivot[bit] != 0) out.emplace_back(pivot[bit]);
  return out;
}

Fel Field::as_class_of(Fel s, Fel a) const {
  std::uint16_t v = a.bits;
  for (Fel p : as_image_basis(s)) {
    const int top = std::bit_width(p.bits) - 1;
    if (v >> top & 1u) v ^= p.bits;
  }
  return Fel(v);
}

int Field::as_class_count(Fel s) const {
  return 1 << (k_ - static_cast<int>(as_image_basis(s).size()));
}

std::vector<Fel> Field::as_class_reps(Fel s) const {
  std::vector<Fel> reps;
  for (std::uint32_t a = 0; a < order(); ++a) {
    const Fel e(static_cast<std::uint16_t>(a));
    if (as_class_of(s, e) == e) reps.push_back(e);
  }
  return reps;
}

const Field& gf(int k) {
  static std::mutex mu;
  static std::array<std::unique_ptr<Field>, 17> cache;
  if (k < 1 || k > 16) throw std::invalid_argument("field degree must lie in [1, 16], got " + std::to_string(k));
  std::lock_guard lock(mu);
  if (!cache[k]) cache[k] = std::make_unique<Field>(Field::make(k));
  return *cache[k];
}

std::string to_hex(Fel a) {
  static constexpr char digits[] = "0123456789abcdef";
  if (a.bits == 0) return "0";
  std::string out;
  for (std::uint16_t v = a.bits; v != 0; v >>= 4) out.insert(out.begin(), digits[v & 0xf]);
  return out;
}

Fel fel_from_hex(const std::string& text) {
  if (text.empty() || text.size() > 4) throw std::invalid_argument("bad field element hex: '" + text + "'");
  std::uint32_t v = 0;
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("bad field element hex: '" + text + "'");
    v = v << 4 | static_cast<std::uint32_t>(d);
  }
  return Fel(static_cast<std::uint16_t>(v));
}

}  // namespace chevorb
