#pragma once

// Affine weights of sl_{n+1}^ and the extended affine Weyl group acting on them.
//
// An affine weight is classical + level * Lambda_0 + degree * delta. The
// extended affine Weyl group is represented by words in the simple
// reflections s_0..s_n and lattice translations t_mu, applied right to left.

#include "demazure/cartan.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace demazure {

struct AffineWeight {
  Weight classical;
  int level = 0;
  Rational degree = 0;

  AffineWeight() = default;
  AffineWeight(Weight c, int l, Rational d = 0) : classical(std::move(c)), level(l), degree(std::move(d)) {}

  int rank() const { return classical.rank(); }

  /// Lambda_i = omega_i + Lambda_0, with Lambda_0 for i = 0.
  static AffineWeight fundamental(int rank, int i) {
    Weight c(rank);
    if (i != 0) c.coord(i) = 1;
    return {c, 1, 0};
  }
  static AffineWeight delta(int rank) { return {Weight(rank), 0, 1}; }
  /// alpha_0 = delta - theta, alpha_i classical.
  static AffineWeight simple_root(int rank, int i) {
    if (i == 0) return {-RootRange(1, rank).as_weight(rank), 0, 1};
    return {Weight::simple_root(rank, i), 0, 0};
  }

  AffineWeight& operator+=(const AffineWeight& o) {
    classical += o.classical;
    level += o.level;
    degree += o.degree;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    classical -= o.classical;
    level -= o.level;
    degree -= o.degree;
    return *this;
  }
  AffineWeight& operator*=(int s) {
    classical *= s;
    level *= s;
    degree *= s;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(int s, AffineWeight a) { return a *= s; }

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.level == b.level && a.classical == b.classical && a.degree == b.degree;
  }
  friend std::strong_ordering operator<=>(const AffineWeight& a, const AffineWeight& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    if (auto c = a.classical <=> b.classical; c != 0) return c;
    int d = cmp(a.degree, b.degree);
    return d < 0 ? std::strong_ordering::less : d > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

inline std::string to_string(const AffineWeight& a) {
  return to_string(a.classical) + "+" + std::to_string(a.level) + "L0+" + a.degree.get_str() + "d";
}

inline std::ostream& operator<<(std::ostream& os, const AffineWeight& a) { return os << to_string(a); }

inline int eval_affine_coroot(const AffineWeight& w, int i) {
  const int n = w.rank();
  if (i < 0 || i > n) throw std::out_of_range("affine node " + std::to_string(i) + " out of range");
  if (i == 0) return w.level - w.classical.coord_sum();
  return w.classical.coord(i);
}

/// s_i(L) = L - L(h_i) alpha_i.
inline AffineWeight reflect(int i, const AffineWeight& w) {
  const int c = eval_affine_coroot(w, i);
  if (c == 0) return w;
  return w - c * AffineWeight::simple_root(w.rank(), i);
}

/// t_mu(L) = L + level*mu - ((cl L, mu) + level*(mu,mu)/2) delta.
inline AffineWeight translate(const Weight& mu, const AffineWeight& w) {
  w.classical.check_same_rank(mu);
  AffineWeight out = w;
  out.classical += w.level * mu;
  out.degree -= inner_product(w.classical, mu) + Rational(w.level) * inner_product(mu, mu) / 2;
  return out;
}

inline bool is_affine_dominant(const AffineWeight& w) {
  for (int i = 0; i <= w.rank(); ++i)
    if (eval_affine_coroot(w, i) < 0) return false;
  return true;
}

/// A reflection index or a translation weight.
using AffineLetter = std::variant<int, Weight>;

class AffineWord {
 public:
  AffineWord() = default;
  explicit AffineWord(std::vector<AffineLetter> letters) : letters_(std::move(letters)) {}

  static AffineWord reflections(const std::vector<int>& idx) {
    AffineWord w;
    for (int i : idx) w.letters_.emplace_back(i);
    return w;
  }
  static AffineWord translation(const Weight& mu) { return AffineWord({AffineLetter(mu)}); }

  const std::vector<AffineLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Applies the rightmost letter first.
  AffineWeight apply(AffineWeight w) const {
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      if (const int* i = std::get_if<int>(&*it))
        w = reflect(*i, w);
      else
        w = translate(std::get<Weight>(*it), w);
    }
    return w;
  }

  /// (a * b)(x) = a(b(x)).
  friend AffineWord operator*(const AffineWord& a, const AffineWord& b) {
    AffineWord out = a;
    out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    return out;
  }

  /// Reflection indices, if the word has no translation letters.
  std::optional<std::vector<int>> reflection_indices() const {
    std::vector<int> out;
    for (const auto& l : letters_) {
      if (!std::holds_alternative<int>(l)) return std::nullopt;
      out.push_back(std::get<int>(l));
    }
    return out;
  }

 private:
  std::vector<AffineLetter> letters_;
};

inline std::string to_string(const AffineWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += " ";
    if (const int* i = std::get_if<int>(&l))
      s += "s" + std::to_string(*i);
    else
      s += "t" + to_string(std::get<Weight>(l));
  }
  return s;
}

/// Equality of group elements, tested on the basis Lambda_0..Lambda_n, delta.
inline bool same_action(const AffineWord& a, const AffineWord& b, int rank) {
  if (a.apply(AffineWeight::delta(rank)) != b.apply(AffineWeight::delta(rank))) return false;
  for (int i = 0; i <= rank; ++i)
    if (a.apply(AffineWeight::fundamental(rank, i)) != b.apply(AffineWeight::fundamental(rank, i))) return false;
  return true;
}

enum class TieBreak { Smallest, Largest };

struct Straightening {
  /// Lambda = s_{word[0]} s_{word[1]} ... s_{word[K-1]} dominant.
  std::vector<int> word;
  AffineWeight dominant;
};

inline Straightening make_dominant(const AffineWeight& w, TieBreak rule = TieBreak::Smallest) {
  if (w.level < 1) throw std::invalid_argument("make_dominant needs level >= 1");
  Straightening out{{}, w};
  const int n = w.rank();
  for (;;) {
    int pick = -1;
    for (int k = 0; k <= n; ++k) {
      const int i = rule == TieBreak::Smallest ? k : n - k;
      if (eval_affine_coroot(out.dominant, i) < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return out;
    out.dominant = reflect(pick, out.dominant);
    out.word.push_back(pick);
  }
}

/// Finite Weyl group word u (reflections 1..n) with u(w) dominant.
inline std::vector<int> finite_dominating_word(Weight w) {
  std::vector<int> applied;
  const int n = w.rank();
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= n && !pick; ++i)
      if (w.coord(i) < 0) pick = i;
    if (!pick) break;
    w = reflect_classical(pick, w);
    applied.push_back(pick);
  }
  return {applied.rbegin(), applied.rend()};
}

struct SplitResult {
  AffineWord word;
  AffineWeight odd_image;
  AffineWeight even_image;
  /// Number of recursive reduction steps that used the explicit reflection word.
  int recursive_steps = 0;
  /// True when some step could not be completed by the reflection word and the translation construction was used.
  bool used_translation_fallback = false;
};

namespace detail {

inline Weight sum_of_fundamentals(int n, const std::vector<int>& nodes) {
  Weight w(n);
  for (int i : nodes)
    if (i >= 1 && i <= n) w.coord(i) += 1;
  return w;
}

/// s_{i_3} s_{i_3+1} ... s_n s_{i_{k-2}-1} ... s_1 s_0 for supp = i_1 < ... < i_k, k >= 3.
inline AffineWord reduction_word(const std::vector<int>& supp, int n) {
  const std::size_t k = supp.size();
  std::vector<int> idx;
  for (int j = supp[2]; j <= n; ++j) idx.push_back(j);
  for (int j = supp[k - 3] - 1; j >= 1; --j) idx.push_back(j);
  idx.push_back(0);
  return AffineWord::reflections(idx);
}

/// u t_{-lambda^e}: sends lambda^e + Lambda_0 to Lambda_0 + p delta and lambda^o + Lambda_0 to some Lambda_j + q delta.
inline AffineWord translation_word(const Weight& odd, const Weight& even) {
  const Weight d = odd - even;
  AffineWord u = AffineWord::reflections(finite_dominating_word(d));
  return u * AffineWord::translation(-even);
}

/// One reduction step: w with w(lambda^o + L0), w(lambda^e + L0) equal to mu^o + L0, mu^e + L0 up to delta,
/// mu < lambda in P^+(1), roles of o/e possibly exchanged.
inline std::optional<std::pair<AffineWord, Weight>> reduce_step(const Weight& lambda) {
  const int n = lambda.rank();
  const auto supp = lambda.support();
  const auto [odd, even] = odd_even_split(lambda);
  AffineWord w = reduction_word(supp, n);
  const AffineWeight io = w.apply({odd, 1, 0});
  const AffineWeight ie = w.apply({even, 1, 0});
  if (!is_integral(io.degree) || !is_integral(ie.degree)) return std::nullopt;
  const Weight mu = io.classical + ie.classical;
  if (!is_in_P1(mu)) return std::nullopt;
  const auto [mo, me] = odd_even_split(mu);
  const bool matches = (mo == io.classical && me == ie.classical) || (mo == ie.classical && me == io.classical);
  if (!matches) return std::nullopt;
  const Weight diff = lambda - mu;
  if (diff.is_zero()) return std::nullopt;
  for (const Rational& q : root_coordinates(diff))
    if (!is_integral(q) || q < 0) return std::nullopt;
  return std::make_pair(w, mu);
}

inline AffineWord split_word(const Weight& lambda, int& steps, bool& fallback) {
  if (lambda.support().size() <= 2) return {};
  if (auto step = reduce_step(lambda)) {
    ++steps;
    return split_word(step->second, steps, fallback) * step->first;
  }
  fallback = true;
  const auto [odd, even] = odd_even_split(lambda);
  return translation_word(odd, even);
}

}  // namespace detail

/// w with w(nu + lambda^o + Lambda_0) and w(nu + lambda^e + Lambda_0) both affine dominant.
inline SplitResult split_dominant(const Weight& nu, const Weight& lambda) {
  nu.check_same_rank(lambda);
  if (!nu.is_dominant()) throw std::invalid_argument("split_dominant needs dominant nu");
  if (!is_in_P1(lambda)) throw std::invalid_argument("split_dominant needs lambda in P^+(1)");
  SplitResult r;
  AffineWord w = detail::split_word(lambda, r.recursive_steps, r.used_translation_fallback);
  const Weight wnu = w.apply({nu, 0, 0}).classical;
  if (!wnu.is_zero()) w = AffineWord::translation(-wnu) * w;
  const auto [odd, even] = odd_even_split(lambda);
  r.odd_image = w.apply({nu + odd, 1, 0});
  r.even_image = w.apply({nu + even, 1, 0});
  r.word = std::move(w);
  return r;
}

}  // namespace demazure
