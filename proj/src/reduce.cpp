#include "chevorb/reduce.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace chevorb {

RootIndex delta_minus(const RootSystem& sys, RootIndex beta) {
  return sys.require_index(sys.root(sys.delta()) - sys.root(beta));
}

ChevVec to_chevvec(const RootSystem& sys, const Field& field, const QuintupleVec& q) {
  ChevVec v(sys, field);
  v.e(q.quad.lambda) += q.lambda;
  v.e(delta_minus(sys, q.quad.lambda)) += q.delta_minus_lambda;
  v.e(q.quad.mu) += q.mu;
  v.e(q.quad.nu) += q.nu;
  v.e(q.quad.xi) += q.xi;
  return v;
}

std::optional<QuintupleVec> as_quintuple(const ChevVec& x, const Quadruple& quad) {
  const RootSystem& sys = x.sys();
  if (!x.hpart_zero()) return std::nullopt;
  const RootIndex dml = delta_minus(sys, quad.lambda);
  for (RootIndex b : x.support())
    if (b != quad.lambda && b != dml && b != quad.mu && b != quad.nu && b != quad.xi) return std::nullopt;
  return QuintupleVec{quad, x.e(quad.lambda), x.e(dml), x.e(quad.mu), x.e(quad.nu), x.e(quad.xi)};
}

std::pair<QuintupleVec, GroupWord> normalize_scales(const RootSystem& sys, const Field& field, const QuintupleVec& x) {
  if (x.lambda.is_zero() || x.mu.is_zero() || x.nu.is_zero())
    throw std::invalid_argument("normalize_scales needs nonzero coefficients at lambda, mu and nu");
  const Quadruple& q = x.quad;
  QuintupleVec out = x;
  GroupWord word;

  // alpha with inner 1 against the slot being scaled, 0 against the other two
  // of lambda/mu/nu and -1 against xi: w_alpha(c) divides the slot by c and
  // multiplies x^xi by c. Against delta-lambda the inner product is -1 only
  // for the lambda step.
  const RootIndex slots[3] = {q.lambda, q.mu, q.nu};
  Fel* coeff[3] = {&out.lambda, &out.mu, &out.nu};
  for (int s = 0; s < 3; ++s) {
    const Fel c = *coeff[s];
    if (c == kOne) continue;
    std::pair<RootIndex, int> cons[4] = {
        {slots[0], s == 0 ? 1 : 0}, {slots[1], s == 1 ? 1 : 0}, {slots[2], s == 2 ? 1 : 0}, {q.xi, -1}};
    auto alpha = sys.find_angle_root(cons);
    if (!alpha) throw std::logic_error("no admissible root for scale normalization");
    word.left_multiply(w_word(sys, field, *alpha, c));
    *coeff[s] = kOne;
    out.xi = field.mul(out.xi, c);
    if (s == 0) out.delta_minus_lambda = field.mul(out.delta_minus_lambda, c);
  }
  return {out, word};
}

std::pair<QuintupleVec, GroupWord> sweep_xi(const RootSystem& sys, const Field& field, const QuintupleVec& x, Fel k) {
  if (x.lambda.is_zero()) throw std::invalid_argument("sweep_xi needs x^lambda != 0");
  const Quadruple& q = x.quad;
  const Root& d = sys.root(sys.delta());
  const Root& l = sys.root(q.lambda);
  const Root& m = sys.root(q.mu);
  const Root& n = sys.root(q.nu);
  const Fel inv_l = field.inv(x.lambda);

  GroupWord word({
      Factor{sys.require_index(d - l - m), field.mul(k, field.mul(x.nu, inv_l))},
      Factor{sys.require_index(d - l - n), field.mul(k, field.mul(x.mu, inv_l))},
      Factor{sys.require_index(d - m - n), k},
  });
  QuintupleVec out = x;
  out.xi = x.xi + field.mul(k, x.delta_minus_lambda) + field.mul(field.square(k), field.mul(field.mul(x.mu, x.nu), inv_l));
  return {out, word};
}

namespace {

// A move restricted to V1 as a sparse matrix (src position, dst position, coefficient).
struct Move {
  GroupWord word;
  std::vector<std::tuple<int, int, Fel>> entries;
};

Move make_move(const RootSystem& sys, const Field& field, GroupWord word) {
  Move mv{std::move(word), {}};
  const auto& v1 = sys.layer(1);
  for (std::size_t p = 0; p < v1.size(); ++p) {
    const ChevVec img = apply_word(mv.word, ChevVec::basis_e(sys, field, v1[p]));
    for (RootIndex b : img.support()) {
      const int pos = sys.v1_position(b);
      if (pos < 0) throw std::logic_error("move leaves V1");
      mv.entries.emplace_back(static_cast<int>(p), pos, img.e(b));
    }
  }
  return mv;
}

using State = std::vector<Fel>;

State apply_move(const Field& f, const Move& mv, const State& x) {
  State out(x.size());
  for (const auto& [src, dst, c] : mv.entries) {
    if (!x[static_cast<std::size_t>(src)].is_zero())
      out[static_cast<std::size_t>(dst)] += f.mul(c, x[static_cast<std::size_t>(src)]);
  }
  return out;
}

struct Frame {
  std::vector<bool> inside;
  int slot[5];  // positions of lambda, mu, nu, xi, delta-lambda
};

using Cost = std::tuple<int, int, int>;

Cost cost_of(const Frame& fr, const State& x) {
  int outside = 0, total = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    ++total;
    if (!fr.inside[p]) ++outside;
  }
  // Prefer the prefix patterns lambda, lambda+mu, lambda+mu+nu, ... so that
  // degenerate reductions land on the canonical slots.
  bool nz[4];
  for (int i = 0; i < 4; ++i) nz[i] = !x[static_cast<std::size_t>(fr.slot[i])].is_zero();
  int penalty = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!nz[i] && nz[j]) ++penalty;
  if (!nz[0] && !x[static_cast<std::size_t>(fr.slot[4])].is_zero()) ++penalty;
  return {outside, total, penalty};
}

}  // namespace

std::optional<std::pair<QuintupleVec, GroupWord>> reduce_to_quintuple(const ChevVec& x, const ReduceOptions& opts) {
  if (!x.in_v1()) throw std::invalid_argument("reduce_to_quintuple expects a vector of V1");
  const RootSystem& sys = x.sys();
  const Field& field = x.field();
  const Quadruple quad = sys.find_quadruple();
  if (auto q = as_quintuple(x, quad)) {
    // Already in the frame; the pattern tiebreak only matters for degenerate shapes.
    const bool prefix = !(q->lambda.is_zero() && (!q->mu.is_zero() || !q->nu.is_zero() || !q->xi.is_zero() ||
                                                  !q->delta_minus_lambda.is_zero()));
    if (prefix || x.is_zero()) return std::make_pair(*q, GroupWord{});
  }

  const auto& v1 = sys.layer(1);
  Frame fr{std::vector<bool>(v1.size(), false), {}};
  const RootIndex frame_roots[5] = {quad.lambda, quad.mu, quad.nu, quad.xi, delta_minus(sys, quad.lambda)};
  for (int i = 0; i < 5; ++i) {
    fr.slot[i] = sys.v1_position(frame_roots[i]);
    fr.inside[static_cast<std::size_t>(fr.slot[i])] = true;
  }

  std::vector<Fel> scalars;
  if (field.order() <= 16) {
    for (std::uint32_t a = 1; a < field.order(); ++a) scalars.emplace_back(static_cast<std::uint16_t>(a));
  } else {
    for (int i = 0; i < 15; ++i) scalars.push_back(field.pow(field.primitive(), static_cast<std::uint64_t>(i)));
  }

  std::vector<Move> moves;
  for (RootIndex a : sys.layer(0)) {
    for (Fel c : scalars) moves.push_back(make_move(sys, field, GroupWord({Factor{a, c}})));
    // n_alpha = x_alpha(1) x_{-alpha}(1) x_alpha(1) permutes the basis.
    moves.push_back(make_move(sys, field, GroupWord({Factor{a, kOne}, Factor{sys.neg(a), kOne}, Factor{a, kOne}})));
  }

  State start(v1.size());
  for (std::size_t p = 0; p < v1.size(); ++p) start[p] = x.e(v1[p]);

  std::mt19937_64 rng(opts.seed);
  State cur = start;
  GroupWord word;
  Cost cur_cost = cost_of(fr, cur);
  std::optional<std::pair<State, GroupWord>> best;
  Cost best_cost{1 << 30, 0, 0};
  int stall = 0;

  std::vector<std::size_t> ties;
  for (int step = 0; step < opts.budget; ++step) {
    if (std::get<0>(cur_cost) == 0 && (!best || cur_cost < best_cost)) {
      best = std::make_pair(cur, word);
      best_cost = cur_cost;
      if (std::get<2>(cur_cost) == 0) break;
    }
    Cost min_cost{1 << 30, 0, 0};
    ties.clear();
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const Cost c = cost_of(fr, apply_move(field, moves[i], cur));
      if (c < min_cost) {
        min_cost = c;
        ties.assign(1, i);
      } else if (c == min_cost) {
        ties.push_back(i);
      }
    }
    std::size_t pick;
    if (min_cost < cur_cost) {
      pick = ties[rng() % ties.size()];
      stall = 0;
    } else {
      pick = min_cost == cur_cost && rng() % 2 == 0 ? ties[rng() % ties.size()] : rng() % moves.size();
      ++stall;
    }
    if (stall > opts.restart_after) {
      if (best) break;
      cur = start;
      word = GroupWord{};
      cur_cost = cost_of(fr, cur);
      stall = 0;
      continue;
    }
    cur = apply_move(field, moves[pick], cur);
    word.left_multiply(moves[pick].word);
    cur_cost = cost_of(fr, cur);
  }
  if (std::get<0>(cur_cost) == 0 && (!best || cur_cost < best_cost)) best = std::make_pair(cur, word);
  if (!best) return std::nullopt;

  const State& s = best->first;
  auto at = [&](int slot) { return s[static_cast<std::size_t>(fr.slot[slot])]; };
  QuintupleVec q{quad, at(0), at(4), at(1), at(2), at(3)};
  return std::make_pair(q, best->second);
}

}  // namespace chevorb
