#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <set>

#include "chevorb/gf2k.hpp"

using namespace chevorb;

TEST_CASE("defining polynomials") {
  CHECK(gf(1).poly() == 0x3);
  CHECK(gf(2).poly() == 0x7);
  CHECK(gf(3).poly() == 0xb);
  for (int k = 1; k <= 16; ++k) {
    const std::uint32_t p = gf(k).poly();
    CHECK((p >> k) == 1u);
    CHECK((p & 1u) == 1u);
    CHECK(oracle::irreducible_by_trial(p));
    CHECK(is_irreducible(p));
    for (std::uint32_t q = (1u << k) | 1u; q < p; q += 2) CHECK_FALSE(oracle::irreducible_by_trial(q));
  }
  CHECK_THROWS_AS(Field::make(0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(17), std::invalid_argument);
}

TEST_CASE("GF(4) values") {
  const Field& f = gf(2);
  const Fel w(2);
  CHECK(f.mul(w, w) == (w + kOne));
  CHECK(f.sqrt(w) == (w + kOne));
  CHECK(f.sqrt(kOne) == kOne);
  CHECK(f.inv(w) == (w + kOne));
}

TEST_CASE("multiplication matches the carry-less oracle exhaustively for k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    const Field& f = gf(k);
    bool ok = true;
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        const auto want = oracle::clmul_mod(a, b, f.poly(), k);
        ok = ok && f.mul(Fel(static_cast<std::uint16_t>(a)), Fel(static_cast<std::uint16_t>(b))).bits == want;
        ok = ok && poly_mulmod(a, b, f.poly(), k) == want;
      }
    CHECK_MESSAGE(ok, "k = " << k);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int k : {4, 9, 12, 16}) {
    const Field& f = gf(k);
    auto r = [&] { return Fel(static_cast<std::uint16_t>(rng() % f.order())); };
    for (int i = 0; i < 2000; ++i) {
      const Fel a = r(), b = r(), c = r();
      CHECK((a + a).is_zero());
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b + c) == (f.mul(a, b) + f.mul(a, c)));
      CHECK(f.square(a + b) == (f.square(a) + f.square(b)));
      CHECK(f.mul(a, b).bits == oracle::clmul_mod(a.bits, b.bits, f.poly(), k));
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == kOne);
      CHECK(f.square(f.sqrt(a)) == a);
    }
  }
  CHECK_THROWS_AS(gf(3).inv(kZero), std::domain_error);
}

TEST_CASE("sqrt is exact for all elements, k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    const Field& f = gf(k);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const Fel x(static_cast<std::uint16_t>(a));
      CHECK(f.square(f.sqrt(x)) == x);
    }
  }
}

TEST_CASE("Artin-Schreier displacement") {
  const Field& f = gf(3);
  for (std::uint32_t s = 0; s < 8; ++s)
    for (std::uint32_t l = 0; l < 8; ++l)
      for (std::uint32_t m = 0; m < 8; ++m) {
        const Fel S(static_cast<std::uint16_t>(s)), L(static_cast<std::uint16_t>(l)), M(static_cast<std::uint16_t>(m));
        CHECK(f.artin_schreier(S, L + M) == (f.artin_schreier(S, L) + f.artin_schreier(S, M)));
        CHECK(f.artin_schreier(S, kZero).is_zero());
        CHECK(f.artin_schreier(S, S).is_zero());
      }
  CHECK(gf(1).artin_schreier(kOne, kZero).is_zero());
  CHECK(gf(1).artin_schreier(kOne, kOne).is_zero());
}

TEST_CASE("Artin-Schreier classes by brute-force cosets, k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    const Field& f = gf(k);
    bool ok = true;
    for (std::uint32_t s = 0; s < f.order(); ++s) {
      const Fel S(static_cast<std::uint16_t>(s));
      std::set<std::uint16_t> image;
      for (std::uint32_t l = 0; l < f.order(); ++l) {
        const Fel L(static_cast<std::uint16_t>(l));
        image.insert(static_cast<std::uint16_t>((f.mul(L, L).bits ^ f.mul(L, S).bits)));
      }
      std::set<std::uint16_t> reps;
      for (std::uint32_t a = 0; a < f.order(); ++a) {
        std::uint16_t least = 0xffff;
        for (auto d : image) least = std::min<std::uint16_t>(least, static_cast<std::uint16_t>(a ^ d));
        ok = ok && f.as_class_of(S, Fel(static_cast<std::uint16_t>(a))).bits == least;
        reps.insert(least);
      }
      const int expect = s == 0 ? 1 : 2;
      ok = ok && static_cast<int>(reps.size()) == expect && f.as_class_count(S) == expect;
      std::vector<Fel> listed = f.as_class_reps(S);
      ok = ok && listed.size() == reps.size();
      for (Fel r : listed) ok = ok && reps.count(r.bits) == 1;
    }
    CHECK_MESSAGE(ok, "k = " << k);
  }
}

TEST_CASE("Artin-Schreier spot values") {
  CHECK(gf(1).as_class_of(kOne, kOne) == kOne);
  CHECK(gf(1).as_class_of(kOne, kZero) == kZero);
  CHECK(gf(1).as_class_count(kOne) == 2);
  CHECK(gf(2).as_class_count(kZero) == 1);
  for (std::uint16_t a = 0; a < 4; ++a) CHECK(gf(2).as_class_of(kZero, Fel(a)) == kZero);
  for (std::uint16_t s = 1; s < 8; ++s) CHECK(gf(3).as_class_count(Fel(s)) == 2);
  for (std::uint16_t s = 0; s < 16; ++s) CHECK(gf(4).as_class_of(Fel(s), kZero) == kZero);
}

TEST_CASE("hex round trip") {
  CHECK(to_hex(kZero) == "0");
  CHECK(to_hex(Fel(0xab)) == "ab");
  CHECK(fel_from_hex("AB") == Fel(0xab));
  CHECK(fel_from_hex("ffff") == Fel(0xffff));
  CHECK_THROWS_AS(fel_from_hex(""), std::invalid_argument);
  CHECK_THROWS_AS(fel_from_hex("12345"), std::invalid_argument);
  CHECK_THROWS_AS(fel_from_hex("g"), std::invalid_argument);
}
