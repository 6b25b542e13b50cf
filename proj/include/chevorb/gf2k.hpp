#pragma once

// Arithmetic in the finite fields GF(2^k), 1 <= k <= 16, together with the
// Artin-Schreier equivalence a ~_s b  <=>  a = b + l*s + l^2 for some l.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chevorb {

/// A field element: the coefficient bits of a polynomial residue.
struct Fel {
  std::uint16_t bits = 0;

  constexpr Fel() = default;
  constexpr explicit Fel(std::uint16_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  constexpr explicit operator bool() const { return bits != 0; }

  friend constexpr auto operator<=>(Fel, Fel) = default;

  // Characteristic 2: addition and subtraction coincide with XOR.
  friend constexpr Fel operator+(Fel a, Fel b) { return Fel(static_cast<std::uint16_t>(a.bits ^ b.bits)); }
  friend constexpr Fel operator-(Fel a, Fel b) { return a + b; }
  constexpr Fel& operator+=(Fel b) {
    bits ^= b.bits;
    return *this;
  }
};

inline constexpr Fel kZero{};
inline constexpr Fel kOne{1};

/// GF(2^k) presented as GF(2)[x] / (poly). Multiplication goes through
/// log/antilog tables over a primitive element found at construction.
class Field {
 public:
  /// Builds GF(2^k) on the lexicographically least irreducible polynomial of
  /// degree k with nonzero constant term. Throws std::invalid_argument for k
  /// outside [1, 16].
  static Field make(int k);

  int degree() const { return k_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t order() const { return 1u << k_; }
  Fel primitive() const { return Fel(exp_[1]); }

  bool contains(Fel a) const { return a.bits < order(); }

  Fel mul(Fel a, Fel b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    return Fel(exp_[log_[a.bits] + log_[b.bits]]);
  }
  Fel square(Fel a) const { return mul(a, a); }
  /// Throws std::domain_error on zero.
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, std::uint64_t e) const;
  /// The unique square root; Frobenius is a bijection on a finite field.
  Fel sqrt(Fel a) const;

  /// l^2 + l*s, the displacement of the relation ~_s.
  Fel artin_schreier(Fel s, Fel l) const { return square(l) + mul(l, s); }

  /// GF(2)-basis of the additive image {l^2 + l*s : l in K}, reduced so that
  /// each vector owns a distinct leading bit absent from all others.
  std::vector<Fel> as_image_basis(Fel s) const;
  /// Canonical representative of a's class under ~_s: the numerically smallest
  /// element of the coset a + image(l -> l^2 + l*s).
  Fel as_class_of(Fel s, Fel a) const;
  /// Number of classes of ~_s: 2^(k - dim image).
  int as_class_count(Fel s) const;
  /// All class representatives of ~_s in increasing order.
  std::vector<Fel> as_class_reps(Fel s) const;

  /// Pseudo-GF(2) basis {1, x, ..., x^(k-1)} of K.
  std::vector<Fel> additive_basis() const;

  friend bool operator==(const Field& a, const Field& b) { return a.k_ == b.k_ && a.poly_ == b.poly_; }

 private:
  Field() = default;

  int k_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<std::uint16_t> exp_;  // length 2 * (order - 1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Process-lifetime cached field instances, safe to hold by reference.
const Field& gf(int k);

/// Carry-less multiplication reduced modulo poly; the reference product used
/// to build and validate the tables.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int k);
bool is_irreducible(std::uint32_t poly);

std::string to_hex(Fel a);
/// Parses lowercase or uppercase hex without prefix; throws std::invalid_argument.
Fel fel_from_hex(const std::string& text);

}  // namespace chevorb
