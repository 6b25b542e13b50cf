#include "doctest.h"

#include <algorithm>

#include "chevorb/canonicalize.hpp"
#include "chevorb/census.hpp"
#include "chevorb/selftest.hpp"

using namespace chevorb;

namespace {

QuintupleVec quint(const RootSystem& sys, std::uint16_t l, std::uint16_t dl, std::uint16_t m, std::uint16_t n, std::uint16_t x) {
  return QuintupleVec{sys.find_quadruple(), Fel(l), Fel(dl), Fel(m), Fel(n), Fel(x)};
}

bool word_in_g0(const RootSystem& sys, const GroupWord& w) {
  for (const Factor& f : w.factors())
    if (sys.degree(f.root) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("quintuple round trip") {
  const RootSystem& sys = root_system(RootSystemId::E7);
  const QuintupleVec q = quint(sys, 1, 2, 3, 0, 1);
  const ChevVec v = to_chevvec(sys, gf(2), q);
  CHECK(v.support_size() == 4);
  CHECK(as_quintuple(v, q.quad) == q);
  const RootIndex frame[] = {q.quad.lambda, delta_minus(sys, q.quad.lambda), q.quad.mu, q.quad.nu, q.quad.xi};
  for (RootIndex b : sys.layer(1)) {
    if (std::find(std::begin(frame), std::end(frame), b) != std::end(frame)) continue;
    ChevVec w = v;
    w.e(b) = kOne;
    CHECK_FALSE(as_quintuple(w, q.quad));
  }
  CHECK(delta_minus(sys, q.quad.lambda) == sys.require_index(sys.root(sys.delta()) - sys.root(q.quad.lambda)));
}

TEST_CASE("normalize_scales") {
  const RootSystem& sys = root_system(RootSystemId::E6);
  const Field& f = gf(2);
  {
    const QuintupleVec q = quint(sys, 1, 1, 1, 1, 1);
    auto [out, w] = normalize_scales(sys, f, q);
    CHECK(out == q);
    CHECK(apply_word(w, to_chevvec(sys, f, q)) == to_chevvec(sys, f, q));
  }
  {
    auto [out, w] = normalize_scales(sys, f, quint(sys, 2, 0, 1, 1, 1));
    CHECK(out == quint(sys, 1, 0, 1, 1, 2));
    CHECK(apply_word(w, to_chevvec(sys, f, quint(sys, 2, 0, 1, 1, 1))) == to_chevvec(sys, f, out));
  }
  CHECK_THROWS_AS(normalize_scales(sys, f, quint(sys, 1, 1, 0, 1, 1)), std::invalid_argument);

  Rng rng(21);
  for (auto id : {RootSystemId::E6, RootSystemId::E7, RootSystemId::E8}) {
    const RootSystem& s = root_system(id);
    for (int k : {2, 3}) {
      const Field& fk = gf(k);
      for (int i = 0; i < 40; ++i) {
        QuintupleVec q = random_quintuple(s, fk, rng);
        q.lambda = random_nonzero_fel(fk, rng);
        q.mu = random_nonzero_fel(fk, rng);
        q.nu = random_nonzero_fel(fk, rng);
        auto [out, w] = normalize_scales(s, fk, q);
        CHECK(out.lambda == kOne);
        CHECK(out.mu == kOne);
        CHECK(out.nu == kOne);
        CHECK(out.delta_minus_lambda == fk.mul(q.lambda, q.delta_minus_lambda));
        CHECK(out.xi == fk.mul(fk.mul(q.lambda, q.mu), fk.mul(q.nu, q.xi)));
        CHECK(word_in_g0(s, w));
        const ChevVec x = to_chevvec(s, fk, q);
        CHECK(apply_word(w, x) == to_chevvec(s, fk, out));
        CHECK(classify(to_chevvec(s, fk, out)) == classify(x));
      }
    }
  }
}

TEST_CASE("sweep_xi") {
  const RootSystem& sys = root_system(RootSystemId::E6);
  const Field& f1 = gf(1);
  {
    auto [out, w] = sweep_xi(sys, f1, quint(sys, 1, 0, 1, 1, 1), kOne);
    CHECK(out == quint(sys, 1, 0, 1, 1, 0));
    CHECK(apply_word(w, to_chevvec(sys, f1, quint(sys, 1, 0, 1, 1, 1))) == to_chevvec(sys, f1, out));
    CHECK(w.size() == 3);
  }
  {
    const QuintupleVec q = quint(sys, 1, 1, 1, 0, 1);
    auto [out, w] = sweep_xi(sys, f1, q, kZero);
    CHECK(out == q);
    CHECK(apply_word(w, to_chevvec(sys, f1, q)) == to_chevvec(sys, f1, q));
  }
  CHECK_THROWS_AS(sweep_xi(sys, f1, quint(sys, 0, 1, 1, 1, 1), kOne), std::invalid_argument);

  Rng rng(8);
  for (int k : {1, 2, 3}) {
    const Field& f = gf(k);
    for (int i = 0; i < 100; ++i) {
      QuintupleVec q = random_quintuple(sys, f, rng);
      q.lambda = random_nonzero_fel(f, rng);
      const Fel kk = random_fel(f, rng);
      auto [out, w] = sweep_xi(sys, f, q, kk);
      CHECK(word_in_g0(sys, w));
      CHECK(apply_word(w, to_chevvec(sys, f, q)) == to_chevvec(sys, f, out));
      CHECK(out.lambda == q.lambda);
      CHECK(out.delta_minus_lambda == q.delta_minus_lambda);
      CHECK(out.mu == q.mu);
      CHECK(out.nu == q.nu);
      // With unit scales the change is an Artin-Schreier displacement.
      if (q.mu == kOne && q.nu == kOne && q.lambda == kOne)
        CHECK(out.xi == q.xi + f.artin_schreier(q.delta_minus_lambda, kk));
    }
  }
}

TEST_CASE("reduce_to_quintuple") {
  const RootSystem& sys = root_system(RootSystemId::E6);
  const Field& f = gf(1);
  {
    const ChevVec x = to_chevvec(sys, f, quint(sys, 1, 0, 1, 1, 0));
    auto r = reduce_to_quintuple(x);
    REQUIRE(r);
    CHECK(r->second.empty());
    CHECK(to_chevvec(sys, f, r->first) == x);
  }
  CHECK_THROWS_AS(reduce_to_quintuple(ChevVec::basis_e(sys, f, sys.delta())), std::invalid_argument);

  BfsOptions opts;
  opts.keep_orbit_ids = true;
  opts.sample_per_orbit = 0;
  opts.exhaustive_limit = 0;
  const BfsCensus census = bfs_census(sys, f, opts);
  Rng rng(99);
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const ChevVec x = random_v1(sys, f, rng);
    ReduceOptions ro;
    ro.seed = static_cast<std::uint64_t>(i) + 1;
    auto r = reduce_to_quintuple(x, ro);
    if (!r) continue;
    ++ok;
    const ChevVec y = to_chevvec(sys, f, r->first);
    CHECK(apply_word(r->second, x) == y);
    CHECK(word_in_g0(sys, r->second));
    CHECK(census.orbit_id[vec_to_state(x)] == census.orbit_id[vec_to_state(y)]);
  }
  CHECK(ok == 1000);
}

TEST_CASE("canonicalize examples") {
  const RootSystem& sys = root_system(RootSystemId::E6);
  {
    const Canonical c = canonicalize(ChevVec(sys, gf(1)));
    CHECK(c.label == OrbitLabel::zero());
    CHECK(c.representative.is_zero());
    REQUIRE(c.witness);
    CHECK(c.witness->empty());
  }
  {
    const ChevVec x = to_chevvec(sys, gf(1), quint(sys, 1, 0, 1, 1, 1));
    const Canonical c = canonicalize(x);
    CHECK(c.label == OrbitLabel::luminous());
    CHECK(c.representative == to_chevvec(sys, gf(1), quint(sys, 1, 0, 1, 1, 0)));
    REQUIRE(c.witness);
    CHECK(apply_word(*c.witness, x) == c.representative);
  }
  {
    const ChevVec x = to_chevvec(sys, gf(2), quint(sys, 1, 2, 1, 1, 0));
    const Canonical c = canonicalize(x);
    CHECK(c.label == OrbitLabel::fam(Fel(2), kZero));
    REQUIRE(c.witness);
    CHECK(apply_word(*c.witness, x) == c.representative);
  }
  CHECK_THROWS_AS(canonicalize(ChevVec::basis_e(sys, gf(1), sys.delta())), std::invalid_argument);
}

TEST_CASE("canonicalize witnesses on random inputs") {
  Rng rng(4);
  for (int k : {1, 2}) {
    const RootSystem& sys = root_system(RootSystemId::E6);
    const Field& f = gf(k);
    int witnessed = 0;
    for (int i = 0; i < 60; ++i) {
      const ChevVec x = random_v1(sys, f, rng);
      const Canonical c = canonicalize(x);
      CHECK(c.label == classify(x));
      CHECK(c.representative == canonical_rep(sys, f, c.label));
      if (c.witness) {
        ++witnessed;
        CHECK(word_in_g0(sys, *c.witness));
        CHECK(apply_word(*c.witness, x) == c.representative);
      }
    }
    CHECK(witnessed > 0);
  }
}
