#pragma once

// Characters: classical (Freudenthal), graded Demazure characters via
// Demazure operators along a straightening word, and character products.

#include "demazure/affine.hpp"
#include "demazure/cartan.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace demazure {

using Multiplicity = std::int64_t;

struct ClassicalCharacter {
  std::map<Weight, Multiplicity> terms;

  Multiplicity at(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  Multiplicity dimension() const {
    Multiplicity d = 0;
    for (const auto& [w, m] : terms) d += m;
    return d;
  }
  void add(const Weight& w, Multiplicity m) {
    if (m == 0) return;
    auto& slot = terms[w];
    slot += m;
    if (slot == 0) terms.erase(w);
  }
  friend bool operator==(const ClassicalCharacter&, const ClassicalCharacter&) = default;
};

using GradedKey = std::pair<Weight, int>;

struct GradedCharacter {
  std::map<GradedKey, Multiplicity> terms;

  Multiplicity at(const Weight& w, int grade) const {
    auto it = terms.find({w, grade});
    return it == terms.end() ? 0 : it->second;
  }
  Multiplicity dimension() const {
    Multiplicity d = 0;
    for (const auto& [k, m] : terms) d += m;
    return d;
  }
  void add(const Weight& w, int grade, Multiplicity m) {
    if (m == 0) return;
    GradedKey key{w, grade};
    auto& slot = terms[key];
    slot += m;
    if (slot == 0) terms.erase(key);
  }
  int max_grade() const {
    int g = 0;
    for (const auto& [k, m] : terms) g = std::max(g, k.second);
    return g;
  }
  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;
};

// ---------------------------------------------------------------------------
// Classical characters.

namespace detail {

inline Weight rho(int n) {
  Weight r(n);
  for (int i = 1; i <= n; ++i) r.coord(i) = 1;
  return r;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V(lambda), by Freudenthal's recursion.
inline std::map<Weight, Multiplicity> dominant_multiplicities(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_character needs a dominant weight");
  const int n = lambda.rank();
  const Weight rho = detail::rho(n);
  const auto roots = positive_roots(n);
  std::vector<Weight> root_weights;
  for (const auto& r : roots) root_weights.push_back(r.as_weight(n));
  const long top = scaled_inner_product(lambda + rho, lambda + rho);

  std::map<Weight, Multiplicity> mult;
  auto lookup = [&](const Weight& w) -> std::pair<bool, Multiplicity> {
    auto it = mult.find(dominant_conjugate(w));
    if (it == mult.end()) return {false, 0};
    return {true, it->second};
  };
  for (const Weight& mu : dominant_weights_below(lambda)) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    long num = 0;
    for (const Weight& a : root_weights) {
      for (int k = 1;; ++k) {
        const Weight up = mu + k * a;
        auto [inside, m] = lookup(up);
        if (!inside) break;
        num += m * scaled_inner_product(up, a);
      }
    }
    const long den = top - scaled_inner_product(mu + rho, mu + rho);
    if (den <= 0 || (2 * num) % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    const Multiplicity m = 2 * num / den;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

inline ClassicalCharacter weyl_character(const Weight& lambda) {
  ClassicalCharacter ch;
  for (const auto& [mu, m] : dominant_multiplicities(lambda))
    for (const Weight& w : weyl_orbit(mu)) ch.terms[w] = m;
  return ch;
}

inline ClassicalCharacter multiply(const ClassicalCharacter& a, const ClassicalCharacter& b) {
  ClassicalCharacter out;
  for (const auto& [wa, ma] : a.terms)
    for (const auto& [wb, mb] : b.terms) out.add(wa + wb, ma * mb);
  return out;
}

inline ClassicalCharacter trivial_character(int rank) {
  ClassicalCharacter ch;
  ch.terms[Weight(rank)] = 1;
  return ch;
}

inline ClassicalCharacter power(const ClassicalCharacter& a, int e, int rank) {
  ClassicalCharacter out = trivial_character(rank);
  for (int k = 0; k < e; ++k) out = multiply(out, a);
  return out;
}

/// m(w) = m(s_i w) for all nodes i.
inline bool is_weyl_invariant(const ClassicalCharacter& ch) {
  for (const auto& [w, m] : ch.terms)
    for (int i = 1; i <= w.rank(); ++i)
      if (ch.at(reflect_classical(i, w)) != m) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Affine workspace and Demazure operators.

/// Formal sum of e^{Lambda} over affine weights of one level, keyed by (classical part, delta offset from base).
struct AffineCharacterWorkspace {
  int level = 0;
  Rational base_degree = 0;
  std::map<std::pair<Weight, int>, Multiplicity> terms;

  AffineCharacterWorkspace() = default;
  explicit AffineCharacterWorkspace(const AffineWeight& w) : level(w.level), base_degree(w.degree) {
    terms[{w.classical, 0}] = 1;
  }

  void add(const Weight& c, int offset, Multiplicity m) {
    if (m == 0) return;
    std::pair<Weight, int> key{c, offset};
    auto& slot = terms[key];
    slot += m;
    if (slot == 0) terms.erase(key);
  }
  AffineWeight weight_of(const std::pair<Weight, int>& key) const {
    return {key.first, level, base_degree + key.second};
  }
  friend bool operator==(const AffineCharacterWorkspace& a, const AffineCharacterWorkspace& b) {
    return a.level == b.level && a.base_degree == b.base_degree && a.terms == b.terms;
  }
};

/// D_i on e^mu: the string mu, mu - alpha_i, ..., s_i mu when mu(h_i) >= 0; 0 at -1; minus the inner string below -1.
inline AffineCharacterWorkspace demazure_op(int i, const AffineCharacterWorkspace& ws) {
  AffineCharacterWorkspace out;
  out.level = ws.level;
  out.base_degree = ws.base_degree;
  bool have_rank = !ws.terms.empty();
  if (!have_rank) return out;
  const int n = ws.terms.begin()->first.first.rank();
  if (i < 0 || i > n) throw std::out_of_range("affine node out of range");
  const Weight a = i == 0 ? -RootRange(1, n).as_weight(n) : Weight::simple_root(n, i);
  const int a_off = i == 0 ? 1 : 0;
  for (const auto& [key, coef] : ws.terms) {
    const Weight& c = key.first;
    const int off = key.second;
    const int m = i == 0 ? ws.level - c.coord_sum() : c.coord(i);
    if (m >= 0) {
      for (int k = 0; k <= m; ++k) out.add(c - k * a, off - k * a_off, coef);
    } else if (m <= -2) {
      for (int k = 1; k <= -m - 1; ++k) out.add(c + k * a, off + k * a_off, -coef);
    }
  }
  return out;
}

/// D_{word[0]} ... D_{word[K-1]} applied to ws (rightmost first).
inline AffineCharacterWorkspace apply_demazure_word(const std::vector<int>& word, AffineCharacterWorkspace ws) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) ws = demazure_op(*it, ws);
  return ws;
}

/// Graded character of D(l, lambda); the lambda-weight generator sits at grade 0.
inline GradedCharacter demazure_character(int level, const Weight& lambda, TieBreak rule = TieBreak::Smallest) {
  if (level < 1) throw std::invalid_argument("demazure_character needs level >= 1");
  if (!lambda.is_dominant()) throw std::invalid_argument("demazure_character needs a dominant weight");
  const AffineWeight xi{longest_element_action(lambda), level, 0};
  const Straightening s = make_dominant(xi, rule);
  const AffineCharacterWorkspace ws = apply_demazure_word(s.word, AffineCharacterWorkspace(s.dominant));

  // Offset of the lambda term.
  bool found = false;
  int top = 0;
  for (const auto& [key, coef] : ws.terms) {
    if (key.first == lambda) {
      if (found || coef != 1) throw std::logic_error("highest weight term of a Demazure character must be simple");
      found = true;
      top = key.second;
    }
  }
  if (!found) throw std::logic_error("Demazure character is missing its highest weight term");
  GradedCharacter out;
  for (const auto& [key, coef] : ws.terms) {
    const int grade = key.second - top;
    if (coef < 0 || grade < 0) throw std::logic_error("Demazure character has a negative coefficient or grade");
    out.add(key.first, grade, coef);
  }
  return out;
}

inline ClassicalCharacter classicalize(const GradedCharacter& ch) {
  ClassicalCharacter out;
  for (const auto& [key, m] : ch.terms) out.add(key.first, m);
  return out;
}

/// Tensor product with grades adding.
inline GradedCharacter graded_multiply(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter out;
  for (const auto& [ka, ma] : a.terms)
    for (const auto& [kb, mb] : b.terms) out.add(ka.first + kb.first, ka.second + kb.second, ma * mb);
  return out;
}

/// Coefficientwise a <= b.
inline bool dominated_by(const GradedCharacter& a, const GradedCharacter& b) {
  for (const auto& [k, m] : a.terms)
    if (m > b.at(k.first, k.second)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Character-level identities.

/// g-character of D(2, 2nu + lambda) equals prod_i ch V(2 omega_i)^{nu_i} times the g-character of D(2, lambda).
inline bool check_fusion(const Weight& nu, const Weight& lambda) {
  nu.check_same_rank(lambda);
  if (!nu.is_dominant()) throw std::invalid_argument("check_fusion needs dominant nu");
  if (!is_in_P1(lambda)) throw std::invalid_argument("check_fusion needs lambda in P^+(1)");
  const int n = nu.rank();
  const ClassicalCharacter lhs = classicalize(demazure_character(2, 2 * nu + lambda));
  ClassicalCharacter rhs = classicalize(demazure_character(2, lambda));
  for (int i = 1; i <= n; ++i)
    if (nu.coord(i) > 0) rhs = multiply(rhs, power(weyl_character(2 * Weight::fundamental(n, i)), nu.coord(i), n));
  return lhs == rhs;
}

/// mu^o = nu + lambda^o, mu^e = nu + lambda^e for mu = 2 nu + lambda.
inline std::pair<Weight, Weight> odd_even_parts(const Weight& mu) {
  const auto [nu, lambda] = parity_decompose(mu);
  const auto [lo, le] = odd_even_split(lambda);
  return {nu + lo, nu + le};
}

/// Graded ch D(2, mu) <= graded ch D(1, mu^o) * ch D(1, mu^e).
inline bool check_embedding_bound(const Weight& mu) {
  const auto [mo, me] = odd_even_parts(mu);
  return dominated_by(demazure_character(2, mu), graded_multiply(demazure_character(1, mo), demazure_character(1, me)));
}

/// Graded ch D(l+1, mu) <= graded ch D(l, mu).
inline bool check_level_monotone(int level, const Weight& mu) {
  return dominated_by(demazure_character(level + 1, mu), demazure_character(level, mu));
}

}  // namespace demazure
