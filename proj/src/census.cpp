#include "chevorb/census.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <thread>

#include "chevorb/json_io.hpp"

namespace chevorb {

std::vector<GenMatrix> generator_matrices(const RootSystem& sys, const Field& field) {
  const auto& v1 = sys.layer(1);
  const int dim = static_cast<int>(v1.size());
  std::vector<GenMatrix> out;
  for (RootIndex a : sys.layer(0)) {
    for (Fel c : field.additive_basis()) {
      GenMatrix g{a, c, dim, std::vector<Fel>(static_cast<std::size_t>(dim * dim))};
      for (int col = 0; col < dim; ++col) {
        const ChevVec img = apply_x(a, c, ChevVec::basis_e(sys, field, v1[static_cast<std::size_t>(col)]));
        for (RootIndex b : img.support()) {
          const int row = sys.v1_position(b);
          if (row < 0) throw std::logic_error("generator leaves V1");
          g.entries[static_cast<std::size_t>(col * dim + row)] = img.e(b);
        }
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

ChevVec state_to_vec(const RootSystem& sys, const Field& field, State s) {
  ChevVec v(sys, field);
  const auto& v1 = sys.layer(1);
  for (std::size_t i = 0; i < v1.size(); ++i)
    if (s >> i & 1u) v.e(v1[i]) = kOne;
  return v;
}

State vec_to_state(const ChevVec& v) {
  if (v.field().degree() != 1 || !v.in_v1()) throw std::invalid_argument("states encode vectors of V1 over GF(2)");
  State s = 0;
  const auto& v1 = v.sys().layer(1);
  for (std::size_t i = 0; i < v1.size(); ++i)
    if (!v.e(v1[i]).is_zero()) s |= State{1} << i;
  return s;
}

std::uint64_t BfsCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& r : records) t += r.size;
  return t;
}

namespace {

// Byte-sliced lookup tables: image(s) = XOR over bytes b of table[b][byte_b(s)].
class GeneratorTables {
 public:
  GeneratorTables(const std::vector<GenMatrix>& gens, int dim) : bytes_((dim + 7) / 8) {
    tables_.resize(gens.size() * static_cast<std::size_t>(bytes_) * 256);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<State> cols(static_cast<std::size_t>(dim));
      for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r)
          if (!gens[g].at(r, c).is_zero()) cols[static_cast<std::size_t>(c)] |= State{1} << r;
      for (int b = 0; b < bytes_; ++b) {
        for (int v = 0; v < 256; ++v) {
          State img = 0;
          for (int bit = 0; bit < 8; ++bit) {
            const int c = b * 8 + bit;
            if (c < dim && (v >> bit & 1)) img ^= cols[static_cast<std::size_t>(c)];
          }
          tables_[(g * static_cast<std::size_t>(bytes_) + static_cast<std::size_t>(b)) * 256 + static_cast<std::size_t>(v)] = img;
        }
      }
    }
    count_ = gens.size();
  }

  std::size_t count() const { return count_; }

  State apply(std::size_t g, State s) const {
    const State* t = &tables_[g * static_cast<std::size_t>(bytes_) * 256];
    State img = 0;
    for (int b = 0; b < bytes_; ++b, t += 256) img ^= t[(s >> (8 * b)) & 0xffu];
    return img;
  }

 private:
  int bytes_;
  std::size_t count_ = 0;
  std::vector<State> tables_;
};

class Bitset {
 public:
  explicit Bitset(std::uint64_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return words_[i >> 6] >> (i & 63) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

BfsCensus bfs_census(const RootSystem& sys, const Field& field, const BfsOptions& opts) {
  if (field.degree() != 1) throw BudgetRefused("exhaustive BFS census is limited to GF(2)");
  if (sys.id() == RootSystemId::E8) throw BudgetRefused("exhaustive BFS census of E8 (2^56 states) is refused; use sample mode");
  if (sys.id() == RootSystemId::E7 && !opts.allow_large)
    throw BudgetRefused("E7 BFS census needs a 512 MiB visited set; pass the opt-in flag");

  const int dim = static_cast<int>(sys.layer(1).size());
  auto gens = generator_matrices(sys, field);
  if (opts.generator_shuffle_seed != 0) {
    std::mt19937_64 rng(opts.generator_shuffle_seed);
    std::shuffle(gens.begin(), gens.end(), rng);
  }
  const GeneratorTables tables(gens, dim);
  const std::uint64_t n_states = std::uint64_t{1} << dim;
  const int threads = std::max(1, opts.threads);
  const Classifier& cls = classifier(sys, field);

  Bitset visited(n_states);
  BfsCensus out;
  if (opts.keep_orbit_ids) {
    if (dim > 24) throw BudgetRefused("per-state orbit ids are only kept for E6");
    out.orbit_id.assign(n_states, 0);
  }

  std::vector<State> frontier, next;
  std::vector<std::vector<State>> partial(static_cast<std::size_t>(threads));

  for (std::uint64_t s0 = 0; s0 < n_states; ++s0) {
    if (visited.test(s0)) continue;
    const auto orbit_index = out.records.size();
    std::mt19937_64 rng(opts.sample_seed ^ (0x9e3779b97f4a7c15ull * (orbit_index + 1)));
    std::vector<State> sample;
    std::vector<State> members;
    bool keep_members = true;
    std::uint64_t size = 0;

    auto admit = [&](State s) {
      visited.set(s);
      if (opts.keep_orbit_ids) out.orbit_id[s] = static_cast<std::uint8_t>(orbit_index);
      ++size;
      if (static_cast<int>(sample.size()) < opts.sample_per_orbit) {
        sample.push_back(s);
      } else if (opts.sample_per_orbit > 0) {
        const std::uint64_t j = rng() % size;
        if (j < static_cast<std::uint64_t>(opts.sample_per_orbit)) sample[j] = s;
      }
      if (keep_members) {
        if (size > opts.exhaustive_limit) {
          keep_members = false;
          members.clear();
          members.shrink_to_fit();
        } else {
          members.push_back(s);
        }
      }
    };

    admit(static_cast<State>(s0));
    frontier.assign(1, static_cast<State>(s0));
    while (!frontier.empty()) {
      // Expansion reads the visited set only; admission is sequential in
      // block order, so the result does not depend on the thread count.
      const std::size_t block = (frontier.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
      auto expand = [&](int t) {
        auto& local = partial[static_cast<std::size_t>(t)];
        local.clear();
        const std::size_t lo = std::min(frontier.size(), block * static_cast<std::size_t>(t));
        const std::size_t hi = std::min(frontier.size(), lo + block);
        for (std::size_t i = lo; i < hi; ++i)
          for (std::size_t g = 0; g < tables.count(); ++g) {
            const State img = tables.apply(g, frontier[i]);
            if (!visited.test(img)) local.push_back(img);
          }
      };
      if (threads == 1 || frontier.size() < 4096) {
        for (int t = 0; t < threads; ++t) expand(t);
      } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(expand, t);
      }
      next.clear();
      for (const auto& local : partial)
        for (State s : local)
          if (!visited.test(s)) {
            admit(s);
            next.push_back(s);
          }
      frontier.swap(next);
    }

    const ChevVec rep = state_to_vec(sys, field, static_cast<State>(s0));
    const Signature rep_sig = signature_of(rep);
    OrbitRecord rec{cls.label_of(rep_sig), rep, size};
    OrbitCheck check{static_cast<State>(s0), 0, 0, keep_members};
    const auto& to_check = keep_members ? members : sample;
    for (State s : to_check) {
      ++check.members_checked;
      if (!(signature_of(state_to_vec(sys, field, s)) == rep_sig)) ++check.mismatches;
    }
    out.records.push_back(std::move(rec));
    out.checks.push_back(check);
  }
  return out;
}

SignatureHistogram sample_census(const RootSystem& sys, const Field& field, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SignatureHistogram hist;
  std::vector<RootIndex> v1 = sys.layer(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::size_t weight = static_cast<std::size_t>(rng() % (v1.size() + 1));
    // Partial Fisher-Yates: the first `weight` slots are a uniform subset.
    for (std::size_t j = 0; j < weight; ++j) std::swap(v1[j], v1[j + static_cast<std::size_t>(rng() % (v1.size() - j))]);
    ChevVec x(sys, field);
    for (std::size_t j = 0; j < weight; ++j) x.e(v1[j]) = Fel(static_cast<std::uint16_t>(1 + rng() % (field.order() - 1)));
    ++hist[signature_of(x)];
  }
  return hist;
}

std::uint64_t expected_orbit_count(const Field& field) { return 4 + 2 * (std::uint64_t{field.order()} - 1); }

void save_census(const std::vector<OrbitRecord>& records, const std::string& path) {
  if (records.empty()) throw std::invalid_argument("cannot save an empty census");
  const ChevVec& first = records.front().representative;
  json orbits = json::array();
  for (const auto& r : records)
    orbits.push_back({{"label", label_to_json(r.label, first.field())}, {"rep", vec_to_json(r.representative)}, {"size", r.size}});
  const json doc = {{"version", kCensusVersion},
                    {"phi", std::string(to_string(first.sys().id()))},
                    {"field", field_to_json(first.field())},
                    {"orbits", orbits}};
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open census file for writing: " + path);
  os << doc.dump(2) << '\n';
  if (!os) throw std::runtime_error("failed writing census file: " + path);
}

CensusFile load_census(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("census file not found: " + path);
  try {
    const json doc = json::parse(is);
    if (!doc.contains("version") || doc["version"] != kCensusVersion)
      throw std::runtime_error("unsupported census version in " + path + " (expected " + std::to_string(kCensusVersion) + ")");
    CensusFile out;
    out.phi = parse_root_system_id(doc.at("phi").get<std::string>());
    const Field& field = field_from_json(doc.at("field"));
    out.field_degree = field.degree();
    for (const auto& o : doc.at("orbits")) {
      ChevVec rep = vec_from_json(o.at("rep"));
      if (rep.sys().id() != out.phi || !(rep.field() == field))
        throw std::runtime_error("orbit representative disagrees with the census header");
      out.orbits.push_back(OrbitRecord{label_from_json(o.at("label")), std::move(rep), o.at("size").get<std::uint64_t>()});
    }
    return out;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed census file " + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("malformed census file " + path + ": " + e.what());
  }
}

}  // namespace chevorb
