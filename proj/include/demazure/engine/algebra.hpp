#pragma once

// sl_{n+1} (x) C[t]/(t^N) in the matrix-unit basis.
//
// x^+_{i,j} = E_{i,j+1}, x^-_{i,j} = E_{j+1,i}, h_k = E_{k,k} - E_{k+1,k+1};
// matrix indices run over 1..n+1.

#include "demazure/cartan.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace demazure::engine {

/// E_{a,b} (a != b) or the diagonal difference E_{a,a} - E_{b,b}, tensored with t^r.
struct Gen {
  enum Kind : std::uint8_t { Off, Diag };
  Kind kind = Off;
  int a = 0;
  int b = 0;
  int r = 0;

  static Gen lowering(int i, int j, int r) { return {Off, j + 1, i, r}; }
  static Gen raising(int i, int j, int r) { return {Off, i, j + 1, r}; }
  static Gen cartan(int k, int r) { return {Diag, k, k + 1, r}; }

  bool is_lowering() const { return kind == Off && a > b; }
  bool is_raising() const { return kind == Off && a < b; }
  bool is_diag() const { return kind == Diag; }
  /// The root range of a lowering or raising element.
  RootRange root() const {
    if (is_lowering()) return {b, a - 1};
    if (is_raising()) return {a, b - 1};
    throw std::logic_error("diagonal element has no root");
  }

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

inline std::string to_string(const Gen& g) {
  std::string s;
  if (g.is_diag())
    s = "(E" + std::to_string(g.a) + std::to_string(g.a) + "-E" + std::to_string(g.b) + std::to_string(g.b) + ")";
  else
    s = "E" + std::to_string(g.a) + "," + std::to_string(g.b);
  return s + "t^" + std::to_string(g.r);
}

/// [x, y] as coefficient * generator; nullopt when zero. No truncation is applied here.
inline std::optional<std::pair<int, Gen>> bracket(const Gen& x, const Gen& y) {
  const int r = x.r + y.r;
  if (x.kind == Gen::Diag && y.kind == Gen::Diag) return std::nullopt;
  if (x.kind == Gen::Diag) {
    const int c = (x.a == y.a) - (x.a == y.b) - (x.b == y.a) + (x.b == y.b);
    if (c == 0) return std::nullopt;
    return std::make_pair(c, Gen{Gen::Off, y.a, y.b, r});
  }
  if (y.kind == Gen::Diag) {
    auto v = bracket(y, x);
    if (v) v->first = -v->first;
    return v;
  }
  // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
  const bool bc = x.b == y.a;
  const bool da = y.b == x.a;
  if (bc && da) return std::make_pair(1, Gen{Gen::Diag, x.a, x.b, r});
  if (bc) return std::make_pair(1, Gen{Gen::Off, x.a, y.b, r});
  if (da) return std::make_pair(-1, Gen{Gen::Off, y.a, x.b, r});
  return std::nullopt;
}

/// Value of a weight on E_aa - E_bb: eps_a - eps_b.
inline int eval_diag(const Weight& mu, int a, int b) {
  const auto e = to_epsilon(mu);
  return e[static_cast<std::size_t>(a - 1)] - e[static_cast<std::size_t>(b - 1)];
}

/// Weight of a generator, as a weight of sl_{n+1}.
inline Weight weight_of(const Gen& g, int n) {
  if (g.is_diag()) return Weight(n);
  const Weight w = g.root().as_weight(n);
  return g.is_lowering() ? -w : w;
}

/// Finite-dimensional truncated current algebra g (x) C[t]/(t^N); used for bracket sanity checks.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(int n, int N) : n_(n), N_(N) {
    RankContext ctx(n);
    if (N < 1) throw std::invalid_argument("truncation must be at least 1");
  }
  int n() const { return n_; }
  int N() const { return N_; }

  /// Off-diagonal E_ab and h_k, each with t^r for r < N.
  std::vector<Gen> basis() const {
    std::vector<Gen> out;
    for (int r = 0; r < N_; ++r) {
      for (int a = 1; a <= n_ + 1; ++a)
        for (int b = 1; b <= n_ + 1; ++b)
          if (a != b) out.push_back({Gen::Off, a, b, r});
      for (int k = 1; k <= n_; ++k) out.push_back(Gen::cartan(k, r));
    }
    return out;
  }

  /// Elements as dense coordinate vectors over the basis (x) t^r: (n+1)^2 - 1 slots per power of t.
  using Element = std::vector<long>;

  std::size_t slot_count() const { return static_cast<std::size_t>(((n_ + 1) * (n_ + 1) - 1) * N_); }

  Element element(const Gen& g, long coef = 1) const {
    Element v(slot_count(), 0);
    add_gen(v, g, coef);
    return v;
  }

  Element bracket(const Element& x, const Element& y) const {
    Element out(slot_count(), 0);
    const auto gens = slot_gens();
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x[p] == 0) continue;
      for (std::size_t q = 0; q < y.size(); ++q) {
        if (y[q] == 0) continue;
        auto v = engine::bracket(gens[p], gens[q]);
        if (v && v->second.r < N_) add_gen(out, v->second, x[p] * y[q] * v->first);
      }
    }
    return out;
  }

 private:
  std::size_t per_degree() const { return static_cast<std::size_t>((n_ + 1) * (n_ + 1) - 1); }

  std::vector<Gen> slot_gens() const {
    std::vector<Gen> gens(slot_count());
    for (int r = 0; r < N_; ++r) {
      const std::size_t base = per_degree() * static_cast<std::size_t>(r);
      std::size_t k = 0;
      for (int a = 1; a <= n_ + 1; ++a)
        for (int b = 1; b <= n_ + 1; ++b)
          if (a != b) gens[base + k++] = {Gen::Off, a, b, r};
      for (int c = 1; c <= n_; ++c) gens[base + k++] = Gen::cartan(c, r);
    }
    return gens;
  }

  void add_gen(Element& v, const Gen& g, long coef) const {
    if (g.r >= N_) return;
    const std::size_t base = per_degree() * static_cast<std::size_t>(g.r);
    if (g.kind == Gen::Off) {
      // row-major over off-diagonal positions
      std::size_t k = static_cast<std::size_t>((g.a - 1) * n_ + (g.b - 1) - (g.b > g.a ? 1 : 0));
      v[base + k] += coef;
      return;
    }
    // E_aa - E_bb = sum of h_k between them, with sign
    const int lo = std::min(g.a, g.b), hi = std::max(g.a, g.b);
    const long s = g.a < g.b ? coef : -coef;
    const std::size_t off = static_cast<std::size_t>(n_ * (n_ + 1));
    for (int k = lo; k < hi; ++k) v[base + off + static_cast<std::size_t>(k - 1)] += s;
  }

  int n_;
  int N_;
};

/// Lowering generators x^-_{i,j} (x) t^r, indexed so that the index order is (r, height, i).
class LoweringIndex {
 public:
  explicit LoweringIndex(int n) : n_(n) {
    for (int h = 1; h <= n; ++h)
      for (int i = 1; i + h - 1 <= n; ++i) roots_.emplace_back(i, i + h - 1);
    pos_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
    for (std::size_t p = 0; p < roots_.size(); ++p) pos_[key(roots_[p].i, roots_[p].j)] = static_cast<int>(p);
  }

  int n() const { return n_; }
  int root_count() const { return static_cast<int>(roots_.size()); }

  int index(const Gen& g) const {
    const RootRange rr = g.root();
    return g.r * root_count() + pos_[key(rr.i, rr.j)];
  }
  Gen gen(int idx) const {
    const RootRange& rr = roots_[static_cast<std::size_t>(idx % root_count())];
    return Gen::lowering(rr.i, rr.j, idx / root_count());
  }
  const RootRange& root(int idx) const { return roots_[static_cast<std::size_t>(idx % root_count())]; }
  int degree(int idx) const { return idx / root_count(); }

 private:
  std::size_t key(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }

  int n_;
  std::vector<RootRange> roots_;
  std::vector<int> pos_;
};

}  // namespace demazure::engine
