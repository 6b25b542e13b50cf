// chevorb: batch command-line front end.
//
//   chevorb rootsys  --phi E6
//   chevorb classify --in vec.json [--json]
//   chevorb canon    --in vec.json [--seed S] [--json]
//   chevorb census   --phi E6 --field 1 --mode bfs|sample [--n N --seed S] [--out FILE] [--json]
//   chevorb selftest [--seed S] [--json]
//
// Exit codes: 0 success, 1 domain error, 2 budget refusal.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chevorb/canonicalize.hpp"
#include "chevorb/census.hpp"
#include "chevorb/json_io.hpp"
#include "chevorb/selftest.hpp"

using namespace chevorb;

namespace {

struct Common {
  std::optional<std::string> phi;
  std::optional<int> field;
  std::uint64_t seed = 1;
  bool json_out = false;
  std::string out;
  std::string in;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--phi", c.phi, "root system")->check(CLI::IsMember({"E6", "E7", "E8"}));
  sub->add_option("--field", c.field, "k, for GF(2^k)")->check(CLI::Range(1, 16));
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_flag("--json", c.json_out, "structured JSON on standard output");
  sub->add_option("--out", c.out, "output file");
  sub->add_option("--in", c.in, "input vector JSON (default: standard input)");
}

ChevVec read_vector(const Common& c) {
  std::string text;
  if (c.in.empty() || c.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream is(c.in);
    if (!is) throw std::invalid_argument("cannot read " + c.in);
    text.assign(std::istreambuf_iterator<char>(is), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed vector JSON: ") + e.what());
  }
  ChevVec v = vec_from_json(j);
  if (c.phi && *c.phi != to_string(v.sys().id())) throw std::invalid_argument("--phi disagrees with the vector's \"phi\"");
  if (c.field && *c.field != v.field().degree()) throw std::invalid_argument("--field disagrees with the vector's field");
  if (!v.in_v1()) throw std::invalid_argument("vector is not supported on the first layer (V1)");
  return v;
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json_out) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

int cmd_rootsys(const Common& c) {
  const RootSystem& sys = root_system(parse_root_system_id(c.phi.value_or("E6")));
  std::cout << rootsys_to_json(sys).dump(2) << '\n';
  return 0;
}

int cmd_classify(const Common& c) {
  const ChevVec x = read_vector(c);
  const Signature sig = signature_of(x);
  const OrbitLabel label = classifier(x.sys(), x.field()).label_of(sig);
  json j = {{"label", label_to_json(label, x.field())}, {"t", to_hex(sig.t)}, {"class", to_hex(sig.cls)}};
  j["rank_profile"] = sig.rank_profile ? json::array({sig.rank_profile->first, sig.rank_profile->second}) : json(nullptr);
  emit(c, j, to_string(label) + "  (" + to_string(sig) + ")\n");
  return 0;
}

int cmd_canon(const Common& c) {
  const ChevVec x = read_vector(c);
  ReduceOptions opts;
  opts.seed = c.seed;
  const Canonical res = canonicalize(x, opts);
  json j = {{"label", label_to_json(res.label, x.field())},
            {"representative", vec_to_json(res.representative)},
            {"witness", res.witness ? word_to_json(x.sys(), *res.witness) : json(nullptr)}};
  std::string text = to_string(res.label) + "\nrepresentative: " + vec_to_json(res.representative)["e"].dump() + "\n";
  text += res.witness ? "witness: " + std::to_string(res.witness->size()) + " factors\n" : "witness: none\n";
  emit(c, j, text);
  return 0;
}

int cmd_census(const Common& c, const std::string& mode, std::uint64_t n, int threads, bool allow_large) {
  const RootSystem& sys = root_system(parse_root_system_id(c.phi.value_or("E6")));
  const Field& field = gf(c.field.value_or(1));
  const std::uint64_t expected = expected_orbit_count(field);
  std::ostringstream text;
  json j = {{"phi", std::string(to_string(sys.id()))}, {"field", field_to_json(field)}, {"mode", mode}, {"expected", expected}};

  if (mode == "bfs") {
    BfsOptions opts;
    opts.threads = threads;
    opts.allow_large = allow_large;
    opts.sample_seed = c.seed;
    const BfsCensus census = bfs_census(sys, field, opts);
    json orbits = json::array();
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < census.records.size(); ++i) {
      const auto& r = census.records[i];
      const auto& chk = census.checks[i];
      mismatches += chk.mismatches;
      orbits.push_back({{"label", label_to_json(r.label, field)},
                        {"rep", vec_to_json(r.representative)},
                        {"size", r.size},
                        {"checked", chk.members_checked},
                        {"mismatches", chk.mismatches}});
      text << to_string(r.label) << "\tsize " << r.size << "\tchecked " << chk.members_checked
           << (chk.exhaustive ? " (all)" : "") << "\tmismatches " << chk.mismatches << '\n';
    }
    j["orbits"] = orbits;
    j["count"] = census.records.size();
    j["total"] = census.total();
    text << census.records.size() << " orbits (expected " << expected << "), " << census.total() << " vectors\n";
    if (!c.out.empty()) save_census(census.records, c.out);
    emit(c, j, text.str());
    return mismatches == 0 ? 0 : 1;
  }

  const SignatureHistogram hist = sample_census(sys, field, n, c.seed);
  const Classifier& cls = classifier(sys, field);
  json sigs = json::array();
  std::vector<OrbitRecord> records;
  for (const auto& [sig, count] : hist) {
    const OrbitLabel label = cls.label_of(sig);
    sigs.push_back({{"signature", signature_to_json(sig)}, {"label", label_to_json(label, field)}, {"count", count}});
    records.push_back(OrbitRecord{label, canonical_rep(sys, field, label), count});
    text << to_string(label) << "\t" << to_string(sig) << "\tcount " << count << '\n';
  }
  j["n"] = n;
  j["seed"] = c.seed;
  j["signatures"] = sigs;
  j["count"] = hist.size();
  text << hist.size() << " signatures (expected " << expected << ") from " << n << " samples\n";
  if (!c.out.empty()) save_census(records, c.out);
  emit(c, j, text.str());
  return 0;
}

int cmd_selftest(const Common& c) {
  const auto results = run_selftest(c.seed);
  json arr = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    arr.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
    text << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures << " failures)\n";
  }
  emit(c, {{"checks", arr}, {"ok", ok}}, text.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of G0 on V1 for E6/E7/E8 Chevalley algebras in characteristic 2"};
  app.require_subcommand(1);

  Common common;
  std::string mode = "bfs";
  std::uint64_t n = 100000;
  int threads = 1;
  bool allow_large = false;

  auto* rootsys = app.add_subcommand("rootsys", "dump roots, delta, alpha_k and layer sizes as JSON");
  auto* classify_cmd = app.add_subcommand("classify", "orbit label and invariants of a V1 vector");
  auto* canon = app.add_subcommand("canon", "canonical representative with a witness word");
  auto* census = app.add_subcommand("census", "exhaustive or sampled orbit census");
  auto* selftest = app.add_subcommand("selftest", "w_alpha diagonality, lift closed form and automorphism checks");
  for (auto* sub : {rootsys, classify_cmd, canon, census, selftest}) add_common(sub, common);
  census->add_option("--mode", mode, "bfs or sample")->check(CLI::IsMember({"bfs", "sample"}));
  census->add_option("--n", n, "sample size");
  census->add_option("--threads", threads, "BFS worker threads")->check(CLI::Range(1, 256));
  census->add_flag("--allow-large", allow_large, "permit the E7 BFS (512 MiB visited set)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*rootsys) return cmd_rootsys(common);
    if (*classify_cmd) return cmd_classify(common);
    if (*canon) return cmd_canon(common);
    if (*census) return cmd_census(common, mode, n, threads, allow_large);
    if (*selftest) return cmd_selftest(common);
  } catch (const BudgetRefused& e) {
    if (common.json_out) std::cout << json{{"error", e.what()}, {"kind", "budget"}}.dump() << '\n';
    else std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    if (common.json_out) std::cout << json{{"error", e.what()}, {"kind", "domain"}}.dump() << '\n';
    else std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
