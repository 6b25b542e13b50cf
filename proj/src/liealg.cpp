#include "chevorb/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevorb {

bool ChevVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Fel c) { return c.is_zero(); }) && hpart_zero();
}

bool ChevVec::hpart_zero() const {
  return std::all_of(h_.begin(), h_.end(), [](Fel c) { return c.is_zero(); });
}

std::vector<RootIndex> ChevVec::support() const {
  std::vector<RootIndex> out;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].is_zero()) out.push_back(static_cast<RootIndex>(i));
  return out;
}

int ChevVec::support_size() const {
  return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](Fel c) { return !c.is_zero(); }));
}

bool ChevVec::in_v1() const {
  if (!hpart_zero()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].is_zero() && sys_->degree(static_cast<RootIndex>(i)) != 1) return false;
  return true;
}

void ChevVec::add_h_of_root(RootIndex beta, Fel c) {
  const std::uint32_t parity = sys_->coroot_parity(beta);
  for (int i = 0; i < sys_->rank(); ++i)
    if (parity >> i & 1u) h(i) += c;
}

ChevVec& ChevVec::operator+=(const ChevVec& o) {
  if (sys_ != o.sys_ || !(*field_ == *o.field_)) throw std::invalid_argument("adding vectors over different systems or fields");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] += o.h_[i];
  return *this;
}

ChevVec ChevVec::scaled(Fel c) const {
  ChevVec out(*sys_, *field_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->mul(c, e_[i]);
  for (std::size_t i = 0; i < h_.size(); ++i) out.h_[i] = field_->mul(c, h_[i]);
  return out;
}

bool operator==(const ChevVec& a, const ChevVec& b) {
  return a.sys_ == b.sys_ && *a.field_ == *b.field_ && a.e_ == b.e_ && a.h_ == b.h_;
}

Fel cartan_pairing(const ChevVec& v, RootIndex beta) {
  const std::uint32_t parity = v.sys().pairing_parity(beta);
  Fel s;
  for (int i = 0; i < v.sys().rank(); ++i)
    if (parity >> i & 1u) s += v.h(i);
  return s;
}

namespace {

void require_compatible(const ChevVec& u, const ChevVec& v) {
  if (&u.sys() != &v.sys() || !(u.field() == v.field()))
    throw std::invalid_argument("operands belong to different systems or fields");
}

}  // namespace

ChevVec bracket(const ChevVec& u, const ChevVec& v) {
  require_compatible(u, v);
  const RootSystem& sys = u.sys();
  const Field& f = u.field();
  ChevVec out(sys, f);
  const auto su = u.support();
  const auto sv = v.support();
  for (RootIndex a : su) {
    for (RootIndex b : sv) {
      const Fel c = f.mul(u.e(a), v.e(b));
      if (auto s = sys.sum_root(a, b)) out.e(*s) += c;
      else if (b == sys.neg(a)) out.add_h_of_root(a, c);
    }
  }
  // [h, e_beta] = <beta, h> e_beta; the sign of [e_beta, h] is invisible mod 2.
  if (!u.hpart_zero())
    for (RootIndex b : sv) out.e(b) += f.mul(cartan_pairing(u, b), v.e(b));
  if (!v.hpart_zero())
    for (RootIndex a : su) out.e(a) += f.mul(cartan_pairing(v, a), u.e(a));
  return out;
}

GroupWord& GroupWord::left_multiply(const GroupWord& g) {
  factors_.insert(factors_.begin(), g.factors_.begin(), g.factors_.end());
  return *this;
}

GroupWord& GroupWord::left_multiply(Factor f) {
  factors_.insert(factors_.begin(), f);
  return *this;
}

GroupWord GroupWord::inverse() const {
  return GroupWord(std::vector<Factor>(factors_.rbegin(), factors_.rend()));
}

ChevVec apply_x(RootIndex alpha, Fel a, const ChevVec& v) {
  const RootSystem& sys = v.sys();
  if (alpha < 0 || alpha >= sys.size()) throw std::invalid_argument("factor root index out of range");
  ChevVec out = v;
  if (a.is_zero()) return out;
  const Field& f = v.field();
  const RootIndex neg = sys.neg(alpha);
  for (RootIndex b = 0; b < sys.size(); ++b) {
    const Fel c = v.e(b);
    if (c.is_zero()) continue;
    if (b == neg) {
      // x_alpha(a) e_{-alpha} = e_{-alpha} + a h_alpha + a^2 e_alpha
      out.add_h_of_root(alpha, f.mul(a, c));
      out.e(alpha) += f.mul(f.square(a), c);
    } else if (sys.inner(alpha, b) == -1) {
      out.e(*sys.sum_root(alpha, b)) += f.mul(a, c);
    }
  }
  // x_alpha(a) h = h + <alpha, h> a e_alpha
  if (!v.hpart_zero()) out.e(alpha) += f.mul(a, cartan_pairing(v, alpha));
  return out;
}

ChevVec apply_x(const Root& alpha, Fel a, const ChevVec& v) {
  return apply_x(v.sys().require_index(alpha), a, v);
}

ChevVec apply_word(const GroupWord& w, const ChevVec& v) {
  ChevVec out = v;
  const auto& fs = w.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) out = apply_x(it->root, it->scalar, out);
  return out;
}

GroupWord w_word(const RootSystem& sys, const Field& field, RootIndex alpha, Fel a) {
  if (a.is_zero()) throw std::domain_error("w_alpha(a) requires a != 0");
  const RootIndex neg = sys.neg(alpha);
  return GroupWord({
      Factor{neg, field.square(a) + a},
      Factor{alpha, field.inv(a)},
      Factor{neg, a + kOne},
      Factor{alpha, kOne},
  });
}

namespace {

// Incremental row echelon basis over GF(2^k).
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, std::size_t n) : f_(f), n_(n) {}

  bool insert(std::vector<Fel> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Fel c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!row[j].is_zero()) v[j] += f_.mul(c, row[j]);
    }
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const Fel inv = f_.inv(v[p]);
    for (std::size_t j = p; j < n_; ++j) v[j] = f_.mul(inv, v[j]);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  const Field& f_;
  std::size_t n_;
  std::vector<std::vector<Fel>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

int ad_rank(const ChevVec& v, int power) {
  if (power != 1 && power != 2) throw std::invalid_argument("ad_rank power must be 1 or 2");
  const RootSystem& sys = v.sys();
  const Field& f = v.field();
  const int m = sys.size();
  const int n = sys.algebra_dim();

  // ad v shifts the delta-grading by d when v is homogeneous of degree d, so
  // columns from different source degrees occupy disjoint rows and the rank
  // splits into a sum over source degrees.
  int degree = 0;
  bool homogeneous = true;
  bool seen = !v.hpart_zero();
  for (RootIndex b : v.support()) {
    const int d = sys.degree(b);
    if (seen && d != degree) homogeneous = false;
    degree = d;
    seen = true;
  }

  auto source_degree = [&](int basis) { return homogeneous && basis < m ? sys.degree(basis) : 0; };

  int total = 0;
  for (int group = -2; group <= 2; ++group) {
    EchelonBasis basis(f, static_cast<std::size_t>(n));
    bool any = false;
    for (int b = 0; b < n; ++b) {
      if (homogeneous ? source_degree(b) != group : group != 0) continue;
      any = true;
      ChevVec x(sys, f);
      if (b < m) x.e(b) = kOne;
      else x.h(b - m) = kOne;
      for (int p = 0; p < power; ++p) x = bracket(v, x);
      if (x.is_zero()) continue;
      std::vector<Fel> col(static_cast<std::size_t>(n));
      for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = x.e(i);
      for (int i = 0; i < sys.rank(); ++i) col[static_cast<std::size_t>(m + i)] = x.h(i);
      basis.insert(std::move(col));
    }
    if (any) total += basis.rank();
  }
  return total;
}

}  // namespace chevorb
