#pragma once

// Weight and root lattice of sl_{n+1} (type A_n).
//
// Weights are stored in fundamental-weight coordinates, so the value of a
// weight on the simple coroot h_i is just its i-th coordinate. Node indices
// in the public API are 1-based, matching the Dynkin labelling 1..n.

#include "demazure/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace demazure {

class RankContext {
 public:
  explicit RankContext(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
  }
  int n() const { return n_; }
  bool valid_node(int i) const { return 1 <= i && i <= n_; }

  friend bool operator==(const RankContext&, const RankContext&) = default;

 private:
  int n_;
};

class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank) : coords_(static_cast<std::size_t>(rank), 0) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  }
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("weight needs at least one coordinate");
  }
  Weight(std::initializer_list<int> coords) : Weight(std::vector<int>(coords)) {}

  static Weight zero(int rank) { return Weight(rank); }
  /// omega_i, 1-based.
  static Weight fundamental(int rank, int i) {
    Weight w(rank);
    w.coord(i) = 1;
    return w;
  }
  /// alpha_i written in fundamental weights: the i-th column of the Cartan matrix.
  static Weight simple_root(int rank, int i) {
    Weight w(rank);
    w.coord(i) = 2;
    if (i > 1) w.coord(i - 1) = -1;
    if (i < rank) w.coord(i + 1) = -1;
    return w;
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }

  int& coord(int i) { return coords_.at(static_cast<std::size_t>(check_node(i) - 1)); }
  int coord(int i) const { return coords_.at(static_cast<std::size_t>(check_node(i) - 1)); }

  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
  }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
  }
  int coord_sum() const {
    int s = 0;
    for (int c : coords_) s += c;
    return s;
  }
  /// Nodes with nonzero coordinate, increasing.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 1; i <= rank(); ++i)
      if (coord(i) != 0) s.push_back(i);
    return s;
  }

  Weight& operator+=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Weight& operator*=(int s) {
    for (int& c : coords_) c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

  void check_same_rank(const Weight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("rank mismatch between weights");
  }

 private:
  int check_node(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
    return i;
  }

  std::vector<int> coords_;
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(w.coord(i));
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

/// Positive root alpha_{i,j} = alpha_i + ... + alpha_j.
struct RootRange {
  int i;
  int j;

  RootRange(int i_, int j_) : i(i_), j(j_) {
    if (i_ < 1 || j_ < i_) throw std::invalid_argument("root range needs 1 <= i <= j");
  }
  void check(const RankContext& ctx) const {
    if (j > ctx.n()) throw std::out_of_range("root range exceeds rank");
  }
  int height() const { return j - i + 1; }
  Weight as_weight(int rank) const {
    check(RankContext(rank));
    Weight w(rank);
    for (int k = i; k <= j; ++k) w += Weight::simple_root(rank, k);
    return w;
  }

  friend bool operator==(const RootRange&, const RootRange&) = default;
  friend auto operator<=>(const RootRange&, const RootRange&) = default;
};

inline std::vector<RootRange> positive_roots(int n) {
  std::vector<RootRange> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) roots.emplace_back(i, j);
  return roots;
}

inline int cartan_entry(int i, int j) {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

/// lambda(h_{i,j}) = sum of coordinates i..j.
inline int pair_coroot(const Weight& lambda, const RootRange& r) {
  r.check(RankContext(lambda.rank()));
  int s = 0;
  for (int k = r.i; k <= r.j; ++k) s += lambda.coord(k);
  return s;
}

/// Entry (i,j) of the inverse Cartan matrix scaled by n+1; always an integer.
inline long scaled_inverse_cartan(int n, int i, int j) {
  return static_cast<long>(std::min(i, j)) * (n + 1 - std::max(i, j));
}

/// (n+1) * (lambda, mu); integral, used wherever exact small-integer arithmetic suffices.
inline long scaled_inner_product(const Weight& a, const Weight& b) {
  a.check_same_rank(b);
  const int n = a.rank();
  long s = 0;
  for (int i = 1; i <= n; ++i) {
    if (a.coord(i) == 0) continue;
    for (int j = 1; j <= n; ++j) s += a.coord(i) * scaled_inverse_cartan(n, i, j) * b.coord(j);
  }
  return s;
}

/// Invariant form normalised so that (alpha_i, alpha_i) = 2.
inline Rational inner_product(const Weight& a, const Weight& b) {
  return make_rational(scaled_inner_product(a, b), a.rank() + 1);
}

/// Coefficients of w in the simple-root basis (rational in general).
inline std::vector<Rational> root_coordinates(const Weight& w) {
  const int n = w.rank();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    long s = 0;
    for (int j = 1; j <= n; ++j) s += scaled_inverse_cartan(n, i, j) * w.coord(j);
    out.push_back(make_rational(s, n + 1));
  }
  return out;
}

/// Converts an integer vector of simple-root coefficients into a weight.
inline Weight weight_from_root_coordinates(const std::vector<int>& gamma) {
  const int n = static_cast<int>(gamma.size());
  Weight w(n);
  for (int i = 1; i <= n; ++i)
    if (gamma[static_cast<std::size_t>(i - 1)] != 0)
      w += gamma[static_cast<std::size_t>(i - 1)] * Weight::simple_root(n, i);
  return w;
}

/// Simple-root coefficients of w when w lies in the root lattice; throws otherwise.
inline std::vector<int> integral_root_coordinates(const Weight& w) {
  std::vector<int> out;
  for (const Rational& q : root_coordinates(w)) {
    if (!is_integral(q)) throw std::invalid_argument("weight " + to_string(w) + " is not in the root lattice");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

inline bool is_in_P1(const Weight& lambda) {
  return std::all_of(lambda.coords().begin(), lambda.coords().end(), [](int c) { return c == 0 || c == 1; });
}

/// mu = 2 nu + lambda with nu dominant and lambda in P^+(1).
inline std::pair<Weight, Weight> parity_decompose(const Weight& mu) {
  if (!mu.is_dominant()) throw std::invalid_argument("parity_decompose needs a dominant weight");
  Weight nu(mu.rank()), lambda(mu.rank());
  for (int i = 1; i <= mu.rank(); ++i) {
    lambda.coord(i) = mu.coord(i) % 2;
    nu.coord(i) = mu.coord(i) / 2;
  }
  return {nu, lambda};
}

/// Splits lambda in P^+(1): the 1st, 3rd, 5th, ... supported nodes go to the first component.
inline std::pair<Weight, Weight> odd_even_split(const Weight& lambda) {
  if (!is_in_P1(lambda)) throw std::invalid_argument("odd_even_split needs a weight in P^+(1)");
  Weight odd(lambda.rank()), even(lambda.rank());
  const auto supp = lambda.support();
  for (std::size_t k = 0; k < supp.size(); ++k) (k % 2 == 0 ? odd : even).coord(supp[k]) = 1;
  return {odd, even};
}

// ---------------------------------------------------------------------------
// Finite Weyl group (symmetric group) via epsilon coordinates.

/// Epsilon coordinates e_1..e_{n+1} with e_{n+1} = 0; omega_i = e_1 + ... + e_i.
inline std::vector<int> to_epsilon(const Weight& w) {
  const int n = w.rank();
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  for (int k = n; k >= 1; --k) e[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(k)] + w.coord(k);
  return e;
}

inline Weight from_epsilon(const std::vector<int>& e) {
  const int n = static_cast<int>(e.size()) - 1;
  Weight w(n);
  for (int k = 1; k <= n; ++k) w.coord(k) = e[static_cast<std::size_t>(k - 1)] - e[static_cast<std::size_t>(k)];
  return w;
}

/// s_i(w) = w - w(h_i) alpha_i.
inline Weight reflect_classical(int i, const Weight& w) {
  const int c = w.coord(i);
  if (c == 0) return w;
  return w - c * Weight::simple_root(w.rank(), i);
}

inline Weight dominant_conjugate(const Weight& w) {
  auto e = to_epsilon(w);
  std::sort(e.begin(), e.end(), std::greater<>());
  return from_epsilon(e);
}

/// The W-orbit of w (distinct elements, sorted).
inline std::vector<Weight> weyl_orbit(const Weight& w) {
  auto e = to_epsilon(w);
  std::sort(e.begin(), e.end());
  std::vector<Weight> out;
  do {
    out.push_back(from_epsilon(e));
  } while (std::next_permutation(e.begin(), e.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// w0(w) = -w^* where * reverses the diagram.
inline Weight longest_element_action(const Weight& w) {
  const int n = w.rank();
  Weight out(n);
  for (int i = 1; i <= n; ++i) out.coord(i) = -w.coord(n + 1 - i);
  return out;
}

/// Height of a root-lattice element given in simple-root coordinates.
inline int height(const std::vector<int>& gamma) {
  int h = 0;
  for (int g : gamma) h += g;
  return h;
}

/// Dimension of V(lambda) by the Weyl dimension formula.
inline mpz_class weyl_dimension(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dimension needs a dominant weight");
  Rational d = 1;
  for (const auto& r : positive_roots(lambda.rank())) d *= make_rational(pair_coroot(lambda, r) + r.height(), r.height());
  return d.get_num();
}

/// All dominant weights nu with lambda - nu in Q^+ (lambda dominant), sorted by depth then lexicographically.
inline std::vector<Weight> dominant_weights_below(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("dominant_weights_below needs a dominant weight");
  const int n = lambda.rank();
  // Dominant weights have nonnegative root coordinates, so gamma is bounded by lambda's.
  std::vector<int> cap;
  for (const Rational& q : root_coordinates(lambda)) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    cap.push_back(static_cast<int>(fl.get_si()));
  }
  std::vector<std::pair<int, Weight>> found;
  std::vector<int> gamma(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      Weight nu = lambda - weight_from_root_coordinates(gamma);
      if (nu.is_dominant()) found.emplace_back(height(gamma), nu);
      return;
    }
    for (int g = 0; g <= cap[static_cast<std::size_t>(k)]; ++g) {
      gamma[static_cast<std::size_t>(k)] = g;
      rec(k + 1);
    }
    gamma[static_cast<std::size_t>(k)] = 0;
  };
  rec(0);
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace demazure
