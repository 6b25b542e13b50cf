#include "chevorb/selftest.hpp"

#include "chevorb/invariants.hpp"

namespace chevorb {

Fel random_fel(const Field& field, Rng& rng) { return Fel(static_cast<std::uint16_t>(rng() % field.order())); }

Fel random_nonzero_fel(const Field& field, Rng& rng) {
  return Fel(static_cast<std::uint16_t>(1 + rng() % (field.order() - 1)));
}

ChevVec random_v1(const RootSystem& sys, const Field& field, Rng& rng) {
  ChevVec x(sys, field);
  for (RootIndex b : sys.layer(1)) x.e(b) = random_fel(field, rng);
  return x;
}

ChevVec random_vec(const RootSystem& sys, const Field& field, Rng& rng) {
  ChevVec x(sys, field);
  for (RootIndex b = 0; b < sys.size(); ++b) x.e(b) = random_fel(field, rng);
  for (int i = 0; i < sys.rank(); ++i) x.h(i) = random_fel(field, rng);
  return x;
}

GroupWord random_g0_word(const RootSystem& sys, const Field& field, int max_len, Rng& rng) {
  const auto& zero = sys.layer(0);
  const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
  std::vector<Factor> fs;
  for (int i = 0; i < len; ++i) fs.push_back(Factor{zero[rng() % zero.size()], random_fel(field, rng)});
  return GroupWord(std::move(fs));
}

QuintupleVec random_quintuple(const RootSystem& sys, const Field& field, Rng& rng) {
  QuintupleVec q;
  q.quad = sys.find_quadruple();
  q.lambda = random_fel(field, rng);
  q.delta_minus_lambda = random_fel(field, rng);
  q.mu = random_fel(field, rng);
  q.nu = random_fel(field, rng);
  q.xi = random_fel(field, rng);
  return q;
}

ChevVec lift_closed_form(const RootSystem& sys, const Field& field, const QuintupleVec& q) {
  const Root& d = sys.root(sys.delta());
  const Root& l = sys.root(q.quad.lambda);
  const Root& m = sys.root(q.quad.mu);
  const Root& n = sys.root(q.quad.nu);
  const Root& x = sys.root(q.quad.xi);
  auto mul = [&](std::initializer_list<Fel> fs) {
    Fel acc = kOne;
    for (Fel f : fs) acc = field.mul(acc, f);
    return acc;
  };
  const Fel xl = q.lambda, xm = q.mu, xn = q.nu, xx = q.xi, s = q.delta_minus_lambda;

  ChevVec y(sys, field);
  auto put = [&](const Root& r, Fel c) { y.e(sys.require_index(r)) += c; };
  put(d, kOne);
  put(l, xl);
  put(m, xm);
  put(m + l - d, mul({xm, xl}));
  put(n, xn);
  put(n + l - d, mul({xn, xl}));
  put(n + m - d, mul({xn, xm}));
  put(-x, mul({xn, xm, xl}));
  put(x, xx);
  put(x + l - d, mul({xx, xl}));
  put(x + m - d, mul({xx, xm}));
  put(-n, mul({xx, xm, xl}));
  put(x + n - d, mul({xx, xn}));
  put(-m, mul({xx, xn, xl}));
  put(-l, mul({xx, xn, xm}) + mul({s, s, xl}));
  put(-d, mul({xx, xn, xm, xl}));
  put(d - l, s);
  y.add_h_of_root(q.quad.lambda, mul({s, xl}));
  put(m - d, mul({s, xm, xl}));
  put(n - d, mul({s, xn, xl}));
  put(x - d, mul({s, xx, xl}));
  return y;
}

CheckResult check_w_diagonal(const RootSystem& sys, const Field& field) {
  CheckResult r{"w-diagonal " + std::string(to_string(sys.id())) + "/GF(2^" + std::to_string(field.degree()) + ")"};
  for (RootIndex alpha : sys.layer(0)) {
    for (std::uint32_t av = 1; av < field.order(); ++av) {
      const Fel a(static_cast<std::uint16_t>(av));
      const GroupWord w = w_word(sys, field, alpha, a);
      for (RootIndex b = 0; b < sys.size(); ++b) {
        ++r.cases;
        const int ip = sys.inner(alpha, b);
        Fel expect = kOne;
        if (ip == 1) expect = field.inv(a);
        else if (ip == -1) expect = a;
        else if (ip != 0) continue;  // +-alpha itself
        const ChevVec img = apply_word(w, ChevVec::basis_e(sys, field, b));
        if (!(img == ChevVec::basis_e(sys, field, b, expect))) ++r.failures;
      }
    }
  }
  return r;
}

CheckResult check_lift_closed_form(const RootSystem& sys, const Field& field, int n, std::uint64_t seed) {
  CheckResult r{"lift-closed-form " + std::string(to_string(sys.id())) + "/GF(2^" + std::to_string(field.degree()) + ")"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const QuintupleVec q = random_quintuple(sys, field, rng);
    ++r.cases;
    if (!(lift(to_chevvec(sys, field, q), kZero) == lift_closed_form(sys, field, q))) ++r.failures;
  }
  return r;
}

CheckResult check_automorphism(const RootSystem& sys, const Field& field, int n, std::uint64_t seed) {
  CheckResult r{"automorphism " + std::string(to_string(sys.id())) + "/GF(2^" + std::to_string(field.degree()) + ")"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const RootIndex alpha = static_cast<RootIndex>(rng() % static_cast<std::uint64_t>(sys.size()));
    const Fel a = random_fel(field, rng);
    const ChevVec u = random_vec(sys, field, rng);
    const ChevVec v = random_vec(sys, field, rng);
    ++r.cases;
    if (!(apply_x(alpha, a, bracket(u, v)) == bracket(apply_x(alpha, a, u), apply_x(alpha, a, v)))) ++r.failures;
  }
  return r;
}

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_w_diagonal(root_system(RootSystemId::E6), gf(2)));
  for (auto id : {RootSystemId::E6, RootSystemId::E7, RootSystemId::E8}) {
    const RootSystem& sys = root_system(id);
    for (int k = 1; k <= 3; ++k) out.push_back(check_lift_closed_form(sys, gf(k), 100, seed + static_cast<std::uint64_t>(k)));
    out.push_back(check_automorphism(sys, gf(2), 100, seed));
  }
  return out;
}

}  // namespace chevorb
