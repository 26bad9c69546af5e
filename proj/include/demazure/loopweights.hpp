#pragma once

// Loop weights with spectral parameters in q^Z: a factor (i, m) stands for
// omega_{i, q^m}. Only exponents of q are stored.

#include "demazure/cartan.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace demazure {

struct LoopFactor {
  int node;
  int exponent;

  friend bool operator==(const LoopFactor&, const LoopFactor&) = default;
  friend auto operator<=>(const LoopFactor&, const LoopFactor&) = default;
};

class LoopWeight {
 public:
  explicit LoopWeight(int rank, std::vector<LoopFactor> factors = {}) : rank_(rank), factors_(std::move(factors)) {
    RankContext ctx(rank);
    for (const auto& f : factors_)
      if (!ctx.valid_node(f.node)) throw std::out_of_range("loop weight node " + std::to_string(f.node) + " out of range");
  }

  int rank() const { return rank_; }
  const std::vector<LoopFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Factors sorted by node, then exponent.
  std::vector<LoopFactor> sorted() const {
    auto f = factors_;
    std::sort(f.begin(), f.end());
    return f;
  }

  /// Shifted so that the first factor (by node) has exponent 0.
  LoopWeight normalized() const {
    auto f = sorted();
    if (!f.empty()) {
      const int s = f.front().exponent;
      for (auto& x : f) x.exponent -= s;
    }
    return LoopWeight(rank_, f);
  }

  LoopWeight shifted(int s) const {
    auto f = factors_;
    for (auto& x : f) x.exponent += s;
    return LoopWeight(rank_, f);
  }

  /// Monoid product: multiset union.
  friend LoopWeight operator*(const LoopWeight& a, const LoopWeight& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch between loop weights");
    auto f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return LoopWeight(a.rank_, f);
  }

  /// Multiset equality.
  friend bool operator==(const LoopWeight& a, const LoopWeight& b) {
    return a.rank_ == b.rank_ && a.sorted() == b.sorted();
  }

 private:
  int rank_;
  std::vector<LoopFactor> factors_;
};

inline std::string to_string(const LoopWeight& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.factors().size(); ++k) {
    if (k) s += ",";
    s += "[" + std::to_string(p.factors()[k].node) + "," + std::to_string(p.factors()[k].exponent) + "]";
  }
  return s + "]";
}

inline Weight weight_of(const LoopWeight& p) {
  Weight w(p.rank());
  for (const auto& f : p.factors()) w.coord(f.node) += 1;
  return w;
}

enum class Orientation { Plus, Minus };

/// Membership in P^+_Z(1): distinct nodes, gaps m_j - m_{j+1} = +-(i_{j+1} - i_j + 2) with alternating signs.
inline bool in_P1(const LoopWeight& p) {
  const auto f = p.sorted();
  int prev_sign = 0;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    const int gap = f[j + 1].node - f[j].node;
    if (gap == 0) return false;
    const int diff = f[j].exponent - f[j + 1].exponent;
    if (std::abs(diff) != gap + 2) return false;
    const int sign = diff > 0 ? 1 : -1;
    if (sign == prev_sign) return false;
    prev_sign = sign;
  }
  return true;
}

/// Plus when the exponent increases from the first to the second factor; Plus for k <= 1.
inline Orientation orientation_of(const LoopWeight& p) {
  const auto f = p.sorted();
  if (f.size() >= 2 && f[1].exponent < f[0].exponent) return Orientation::Minus;
  return Orientation::Plus;
}

/// (pi^o, pi^e): factors at odd and even positions along increasing nodes.
inline std::pair<LoopWeight, LoopWeight> oe_split(const LoopWeight& p) {
  if (!in_P1(p)) throw std::invalid_argument("oe_split needs a loop weight in P^+_Z(1)");
  std::vector<LoopFactor> odd, even;
  const auto f = p.sorted();
  for (std::size_t k = 0; k < f.size(); ++k) (k % 2 == 0 ? odd : even).push_back(f[k]);
  return {LoopWeight(p.rank(), odd), LoopWeight(p.rank(), even)};
}

inline bool is_pair_nonsingular(int jr, int br, int js, int bs, int n) {
  const int lo = std::max(jr, js) + 1;  // smallest admissible p+1
  const int hi = std::min(jr + js, n + 1);
  for (int p1 = lo; p1 <= hi; ++p1)
    if (br - bs == 2 * p1 - js - jr) return false;
  return true;
}

inline bool tensor_irreducible(const std::vector<LoopFactor>& list, int n) {
  for (std::size_t r = 0; r < list.size(); ++r)
    for (std::size_t s = 0; s < list.size(); ++s)
      if (r != s && !is_pair_nonsingular(list[r].node, list[r].exponent, list[s].node, list[s].exponent, n))
        return false;
  return true;
}

inline bool has_simple_socle(const std::vector<LoopFactor>& list, int n) {
  for (std::size_t r = 0; r < list.size(); ++r)
    for (std::size_t s = r + 1; s < list.size(); ++s)
      if (!is_pair_nonsingular(list[r].node, list[r].exponent, list[s].node, list[s].exponent, n)) return false;
  return true;
}

/// Exponents negated if needed to reach the Plus orientation, then shifted to start at 0.
inline LoopWeight plus_normalized(const LoopWeight& p) {
  if (orientation_of(p) == Orientation::Plus) return p.normalized();
  auto f = p.factors();
  for (auto& x : f) x.exponent = -x.exponent;
  return LoopWeight(p.rank(), f).normalized();
}

/// pi^o and pi^e tensor irreducible and pi^o followed by pi^e with simple socle, for p in the Plus orientation.
inline bool check_oe_factorization(const LoopWeight& p) {
  const LoopWeight q = plus_normalized(p);
  const auto [o, e] = oe_split(q);
  auto both = o.sorted();
  const auto es = e.sorted();
  both.insert(both.end(), es.begin(), es.end());
  return tensor_irreducible(o.sorted(), q.rank()) && tensor_irreducible(es, q.rank()) && has_simple_socle(both, q.rank());
}

/// r_1..r_k in closed form for nodes i_1 < ... < i_k in the Plus orientation.
inline std::vector<int> rj_closed_form(const std::vector<int>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<int> r(k, 0);
  auto i = [&](std::size_t j) { return nodes[j - 1]; };  // 1-based
  for (std::size_t j = 2; j <= k; ++j) {
    if (j == 2) {
      r[1] = i(2) - i(1) + 2;
      continue;
    }
    // alternating sum i_2 - i_3 + ... ending at i_{j-1}
    int alt = 0;
    for (std::size_t t = 2; t <= j - 1; ++t) alt += (t % 2 == 0 ? 1 : -1) * i(t);
    if (j % 2 == 1)
      r[j - 1] = -i(1) + 2 * alt - i(j);
    else
      r[j - 1] = -i(1) + 2 * alt + i(j) + 2;
  }
  return r;
}

/// r_1..r_k with exponents m_j = r_j + m; requires the Plus orientation and first exponent m.
inline std::vector<int> rj_sequence(const LoopWeight& p, int m) {
  if (!in_P1(p)) throw std::invalid_argument("rj_sequence needs a loop weight in P^+_Z(1)");
  if (orientation_of(p) != Orientation::Plus) throw std::invalid_argument("rj_sequence needs the plus orientation");
  const auto f = p.sorted();
  std::vector<int> nodes;
  for (const auto& x : f) nodes.push_back(x.node);
  auto r = rj_closed_form(nodes);
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j].exponent != r[j] + m) throw std::invalid_argument("loop weight is not anchored at exponent " + std::to_string(m));
  return r;
}

/// The Plus-orientation element of P^+_Z(1) on the given nodes, first exponent m.
inline LoopWeight loop_weight_from_nodes(int rank, const std::vector<int>& nodes, int m = 0) {
  const auto r = rj_closed_form(nodes);
  std::vector<LoopFactor> f;
  for (std::size_t j = 0; j < nodes.size(); ++j) f.push_back({nodes[j], r[j] + m});
  return LoopWeight(rank, f);
}

/// All of P^+_Z(1) up to global shift (first exponent 0), ordered by node set then orientation.
inline std::vector<LoopWeight> enumerate_P1(int n) {
  RankContext ctx(n);
  std::vector<LoopWeight> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1u) nodes.push_back(i);
    const LoopWeight plus = loop_weight_from_nodes(n, nodes);
    out.push_back(plus);
    if (nodes.size() >= 2) {
      std::vector<LoopFactor> f = plus.factors();
      for (auto& x : f) x.exponent = -x.exponent;
      out.emplace_back(n, f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Height functions and quivers.

class HeightFunction {
 public:
  explicit HeightFunction(std::vector<int> kappa) : kappa_(std::move(kappa)) {
    if (kappa_.empty()) throw std::invalid_argument("height function needs at least one vertex");
    for (std::size_t i = 0; i + 1 < kappa_.size(); ++i)
      if (std::abs(kappa_[i + 1] - kappa_[i]) != 1) throw std::invalid_argument("height function must change by 1 along each edge");
  }
  int rank() const { return static_cast<int>(kappa_.size()); }
  int operator()(int i) const { return kappa_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return kappa_; }

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

 private:
  std::vector<int> kappa_;
};

class Quiver {
 public:
  /// forward[i-1] is true for the arrow i -> i+1.
  explicit Quiver(std::vector<bool> forward) : forward_(std::move(forward)) {}

  int rank() const { return static_cast<int>(forward_.size()) + 1; }
  bool forward(int i) const { return forward_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<bool>& edges() const { return forward_; }

  /// No arrow of the subquiver on [a,b] leaves j.
  bool is_sink(int j, int a, int b) const {
    if (a == b) return true;
    if (j > a && !forward(j - 1)) return false;
    if (j < b && forward(j)) return false;
    return true;
  }
  bool is_source(int j, int a, int b) const {
    if (a == b) return false;
    if (j > a && forward(j - 1)) return false;
    if (j < b && !forward(j)) return false;
    return true;
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<bool> forward_;
};

inline Quiver quiver_of(const HeightFunction& k) {
  std::vector<bool> f;
  for (int i = 1; i < k.rank(); ++i) f.push_back(k(i) < k(i + 1));
  return Quiver(f);
}

/// Sources of the subquiver on [a,b] get exponent kappa(j), sinks kappa(j)+2.
/// Arrows point up the height function, so sources are local minima and sinks local maxima.
inline LoopWeight prime_of_subset(const HeightFunction& k, int a, int b) {
  if (a < 1 || b > k.rank() || a > b) throw std::invalid_argument("prime_of_subset needs a nonempty interval of nodes");
  const Quiver q = quiver_of(k);
  std::vector<LoopFactor> f;
  for (int j = a; j <= b; ++j) {
    if (q.is_sink(j, a, b))
      f.push_back({j, k(j) + 2});
    else if (q.is_source(j, a, b))
      f.push_back({j, k(j)});
  }
  return LoopWeight(k.rank(), f);
}

/// A height function whose prime on [i_1, i_k] is p.
inline HeightFunction height_of_prime(const LoopWeight& p) {
  if (!in_P1(p)) throw std::invalid_argument("height_of_prime needs a loop weight in P^+_Z(1)");
  const int n = p.rank();
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  const auto f = p.sorted();
  if (f.empty()) {
    for (int i = 0; i < n; ++i) kappa[static_cast<std::size_t>(i)] = i % 2;
    return HeightFunction(kappa);
  }
  auto K = [&](int i) -> int& { return kappa[static_cast<std::size_t>(i - 1)]; };
  // First node: a source (minimum) in the Plus orientation with k >= 2, otherwise a sink.
  bool is_min = f.size() >= 2 && orientation_of(p) == Orientation::Plus;
  K(f[0].node) = is_min ? f[0].exponent : f[0].exponent - 2;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    const int step = is_min ? 1 : -1;
    for (int i = f[j].node + 1; i <= f[j + 1].node; ++i) K(i) = K(i - 1) + step;
    is_min = !is_min;
  }
  for (int i = f.front().node - 1; i >= 1; --i) K(i) = K(i + 1) - 1;
  for (int i = f.back().node + 1; i <= n; ++i) K(i) = K(i - 1) - 1;
  return HeightFunction(kappa);
}

}  // namespace demazure
