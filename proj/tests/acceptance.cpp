// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "chevorb/census.hpp"
#include "chevorb/selftest.hpp"

using namespace chevorb;

namespace {

constexpr RootSystemId kAll[] = {RootSystemId::E6, RootSystemId::E7, RootSystemId::E8};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double peak_rss_mib() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<double>(ru.ru_maxrss) / 1024.0;
}

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) out.require(secs < limit_s, "time limit " + std::to_string(limit_s) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %2d %s (%.2f s) %s\n", out.ok ? "PASS" : "FAIL", n, name, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

std::string field_name(const Field& f) { return "GF(" + std::to_string(f.order()) + ")"; }

ChevVec five_factor_lift(const RootSystem& sys, const Field& f, const QuintupleVec& q) {
  const Root& d = sys.root(sys.delta());
  const std::pair<Root, Fel> fs[] = {
      {sys.root(q.quad.lambda) - d, q.lambda}, {-sys.root(q.quad.lambda), q.delta_minus_lambda},
      {sys.root(q.quad.mu) - d, q.mu},         {sys.root(q.quad.nu) - d, q.nu},
      {sys.root(q.quad.xi) - d, q.xi},
  };
  ChevVec y = ChevVec::basis_e(sys, f, sys.delta());
  for (const auto& [r, c] : fs) y = apply_x(r, c, y);
  return y;
}

}  // namespace

int main() {
  criterion(1, "lift of quintuples equals the closed form, 1000 cases x GF(2,4,8) x E6/E7/E8", 30, [](Outcome& o) {
    std::uint64_t cases = 0;
    for (auto id : kAll) {
      const RootSystem& sys = root_system(id);
      for (int k = 1; k <= 3; ++k) {
        const Field& f = gf(k);
        Rng rng(1000 + static_cast<std::uint64_t>(k) * 10 + static_cast<std::uint64_t>(id));
        for (int i = 0; i < 1000; ++i, ++cases) {
          const QuintupleVec q = random_quintuple(sys, f, rng);
          const ChevVec closed = lift_closed_form(sys, f, q);
          const std::string where = std::string(to_string(id)) + "/" + field_name(f);
          o.require(five_factor_lift(sys, f, q) == closed, "product oracle vs closed form " + where);
          o.require(lift(to_chevvec(sys, f, q), kZero) == closed, "lift vs closed form " + where);
        }
      }
    }
    o.detail << cases << " cases";
  });

  criterion(2, "w_alpha(a) diagonal with eigenvalues 1/a, 1, a on E6, all alpha in the zero layer, a in GF(4)*", 5, [](Outcome& o) {
    const RootSystem& sys = root_system(RootSystemId::E6);
    const Field& f = gf(2);
    std::uint64_t checked = 0;
    for (RootIndex al : sys.layer(0))
      for (std::uint16_t av = 1; av < 4; ++av) {
        const Fel a(av);
        const GroupWord w = w_word(sys, f, al, a);
        for (RootIndex b = 0; b < sys.size(); ++b, ++checked) {
          const ChevVec img = apply_word(w, ChevVec::basis_e(sys, f, b));
          o.require(img.support() == std::vector<RootIndex>{b} && img.hpart_zero(), "diagonal");
          const Fel ev = img.e(b);
          switch (sys.inner(al, b)) {
            case 1: o.require(ev == f.inv(a), "eigenvalue 1/a"); break;
            case 0: o.require(ev == kOne, "eigenvalue 1"); break;
            case -1: o.require(ev == a, "eigenvalue a"); break;
            case 2: o.require(ev == f.inv(f.square(a)), "eigenvalue 1/a^2 on e_alpha"); break;
            default: o.require(ev == f.square(a), "eigenvalue a^2 on e_-alpha"); break;
          }
        }
      }
    o.detail << checked << " basis images";
  });

  criterion(3, "BFS census of E6 over GF(2): 6 orbits, canonical reps in distinct orbits, labels constant", 60, [](Outcome& o) {
    const RootSystem& sys = root_system(RootSystemId::E6);
    const Field& f = gf(1);
    BfsOptions opts;
    opts.keep_orbit_ids = true;
    opts.sample_per_orbit = 1000;
    const BfsCensus c = bfs_census(sys, f, opts);
    o.require(c.records.size() == 6, "orbit count");
    o.require(c.total() == (std::uint64_t{1} << 20), "sizes sum to 2^20");
    std::set<std::uint8_t> orbits;
    for (const auto& l : all_labels(f)) orbits.insert(c.orbit_id[vec_to_state(canonical_rep(sys, f, l))]);
    o.require(orbits.size() == 6, "canonical reps in distinct orbits");
    std::uint64_t checked = 0;
    std::set<OrbitLabel> labels;
    for (std::size_t i = 0; i < c.records.size(); ++i) {
      o.require(c.checks[i].mismatches == 0, "signature constant on orbit");
      o.require(c.checks[i].members_checked >= std::min<std::uint64_t>(1000, c.records[i].size), "1000 members checked");
      labels.insert(c.records[i].label);
      checked += c.checks[i].members_checked;
    }
    o.require(labels.size() == 6, "six labels");
    const double mib = peak_rss_mib();
    o.require(mib < 1024, "memory below 1 GiB");
    o.detail << c.records.size() << " orbits, " << checked << " members checked, peak RSS " << static_cast<int>(mib) << " MiB";
  });

  criterion(4, "sampled census of E6 over GF(4) and GF(8): 10 and 18 signatures, reps stable under 1000 words", 300, [](Outcome& o) {
    const RootSystem& sys = root_system(RootSystemId::E6);
    for (int k : {2, 3}) {
      const Field& f = gf(k);
      const SignatureHistogram hist = sample_census(sys, f, 100000, 2024 + static_cast<std::uint64_t>(k));
      o.require(hist.size() == expected_orbit_count(f), "signature count over " + field_name(f));
      const Classifier& cls = classifier(sys, f);
      Rng rng(77 + static_cast<std::uint64_t>(k));
      for (const auto& label : all_labels(f)) {
        const ChevVec rep = canonical_rep(sys, f, label);
        const Signature sig = signature_of(rep);
        o.require(hist.count(sig) == 1 && cls.label_of(sig) == label, "rep realizes its signature: " + to_string(label));
        for (int i = 0; i < 1000; ++i) {
          const ChevVec moved = apply_word(random_g0_word(sys, f, 20, rng), rep);
          o.require(cls.classify(moved) == label, "word moved " + to_string(label));
        }
      }
      o.detail << field_name(f) << ": " << hist.size() << " signatures; ";
    }
  });

  criterion(5, "classification invariant under random G0 words", 0, [](Outcome& o) {
    std::uint64_t pairs = 0;
    auto run = [&](RootSystemId id, int k, int n) {
      const RootSystem& sys = root_system(id);
      const Field& f = gf(k);
      Rng rng(5000 + static_cast<std::uint64_t>(id) * 7 + static_cast<std::uint64_t>(k));
      for (int i = 0; i < n; ++i, ++pairs) {
        const ChevVec x = random_v1(sys, f, rng);
        const GroupWord w = random_g0_word(sys, f, 20, rng);
        o.require(classify(apply_word(w, x)) == classify(x), std::string(to_string(id)) + "/" + field_name(f));
      }
    };
    for (auto id : {RootSystemId::E6, RootSystemId::E7})
      for (int k : {1, 2}) run(id, k, 10000);
    run(RootSystemId::E8, 1, 100);
    o.detail << pairs << " pairs";
  });

  criterion(6, "sweep_xi postcondition equals its three-factor word; all-ones quadruple loses xi over GF(2)", 0, [](Outcome& o) {
    const RootSystem& sys = root_system(RootSystemId::E6);
    std::uint64_t cases = 0;
    for (int k = 1; k <= 3; ++k) {
      const Field& f = gf(k);
      Rng rng(600 + static_cast<std::uint64_t>(k));
      for (int i = 0; i < 1000; ++i, ++cases) {
        QuintupleVec q = random_quintuple(sys, f, rng);
        q.lambda = random_nonzero_fel(f, rng);
        const Fel kk = random_fel(f, rng);
        auto [out, w] = sweep_xi(sys, f, q, kk);
        QuintupleVec want = q;
        want.xi = q.xi + f.mul(kk, q.delta_minus_lambda) + f.div(f.mul(f.square(kk), f.mul(q.mu, q.nu)), q.lambda);
        o.require(out == want, "closed form");
        o.require(w.size() == 3 && apply_word(w, to_chevvec(sys, f, q)) == to_chevvec(sys, f, want), "word application");
      }
    }
    const Field& f2 = gf(1);
    const Quadruple quad = sys.find_quadruple();
    const QuintupleVec v{quad, kOne, kZero, kOne, kOne, kOne};
    auto [iv, w] = sweep_xi(sys, f2, v, kOne);
    o.require(iv == QuintupleVec{quad, kOne, kZero, kOne, kOne, kZero}, "all-ones quadruple sweep");
    o.require(apply_word(w, to_chevvec(sys, f2, v)) == to_chevvec(sys, f2, iv), "all-ones quadruple sweep word");
    o.detail << cases << " cases";
  });

  criterion(7, "x_alpha(a) is a bracket automorphism, 1000 cases per system", 0, [](Outcome& o) {
    for (auto id : kAll) {
      const CheckResult r = check_automorphism(root_system(id), gf(3), 1000, 700 + static_cast<std::uint64_t>(id));
      o.require(r.ok() && r.cases == 1000, r.name);
      o.detail << r.name << " " << r.failures << "/" << r.cases << "; ";
    }
  });

  criterion(8, "Artin-Schreier classes exhaustive for k <= 8", 0, [](Outcome& o) {
    for (int k = 1; k <= 8; ++k) {
      const Field& f = gf(k);
      for (std::uint32_t s = 0; s < f.order(); ++s) {
        const Fel S(static_cast<std::uint16_t>(s));
        std::vector<bool> in_image(f.order(), false);
        for (std::uint32_t l = 0; l < f.order(); ++l) in_image[f.artin_schreier(S, Fel(static_cast<std::uint16_t>(l))).bits] = true;
        std::set<std::uint16_t> reps;
        for (std::uint32_t a = 0; a < f.order(); ++a) {
          const Fel A(static_cast<std::uint16_t>(a));
          const Fel ca = f.as_class_of(S, A);
          reps.insert(ca.bits);
          o.require(in_image[(A + ca).bits], "class rep lies in the coset");
          for (std::uint32_t b = 0; b < f.order(); ++b) {
            const Fel B(static_cast<std::uint16_t>(b));
            o.require((f.as_class_of(S, B) == ca) == in_image[(A + B).bits], "constant exactly on cosets");
          }
        }
        const std::size_t expect = s == 0 ? 1 : 2;
        o.require(reps.size() == expect && f.as_class_count(S) == static_cast<int>(expect), "class count");
      }
    }
    o.detail << "k = 1..8";
  });

  criterion(9, "V1 stable under x_alpha(a) for alpha in the zero layer, all systems", 0, [](Outcome& o) {
    std::uint64_t images = 0;
    for (auto id : kAll) {
      const RootSystem& sys = root_system(id);
      for (int k : {1, 2}) {
        const Field& f = gf(k);
        for (RootIndex al : sys.layer(0))
          for (std::uint32_t a = 1; a < f.order(); ++a)
            for (RootIndex b : sys.layer(1)) {
              ++images;
              o.require(apply_x(al, Fel(static_cast<std::uint16_t>(a)), ChevVec::basis_e(sys, f, b)).in_v1(), "stays in V1");
            }
      }
    }
    o.detail << images << " images";
  });

  criterion(10, "rank profiles separate singular/shiny/luminous and match the BFS orbits", 0, [](Outcome& o) {
    const RootSystem& e6 = root_system(RootSystemId::E6);
    const Field& f = gf(1);
    const Classifier& cls = classifier(e6, f);
    const auto p2 = cls.profile(OrbitKind::Singular), p3 = cls.profile(OrbitKind::Shiny), p4 = cls.profile(OrbitKind::Luminous);
    o.require(p2 != p3 && p3 != p4 && p2 != p4, "profiles pairwise distinct");
    BfsOptions opts;
    opts.keep_orbit_ids = true;
    opts.sample_per_orbit = 0;
    opts.exhaustive_limit = 0;
    const BfsCensus c = bfs_census(e6, f, opts);
    std::set<std::uint8_t> ids;
    for (const auto& label : {OrbitLabel::singular(), OrbitLabel::shiny(), OrbitLabel::luminous()}) {
      const ChevVec rep = canonical_rep(e6, f, label);
      const auto id = c.orbit_id[vec_to_state(rep)];
      ids.insert(id);
      o.require(rank_signature(c.records[id].representative) == cls.profile(label.kind), "BFS orbit profile");
      o.require(c.records[id].label == label, "BFS orbit label");
    }
    o.require(ids.size() == 3, "three distinct BFS orbits");
    int built = 0;
    for (auto id : kAll)
      for (int k = 1; k <= 16; ++k, ++built) {
        const Classifier table(root_system(id), gf(k));
        if (k <= 3) {
          std::set<Signature> sigs;
          for (const auto& l : all_labels(gf(k))) sigs.insert(signature_of(canonical_rep(root_system(id), gf(k), l)));
          o.require(sigs.size() == expected_orbit_count(gf(k)), "distinct signatures for all labels");
        }
      }
    o.detail << "profiles (" << p2.first << "," << p2.second << ") (" << p3.first << "," << p3.second << ") (" << p4.first
             << "," << p4.second << "); " << built << " signature tables built";
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
