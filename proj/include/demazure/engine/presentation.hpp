#pragma once

// Presentations of cyclic graded modules: a highest weight plus a list of
// relation words applied to the generator v. Raising annihilation
// (x^+ (x) C[t]) v = 0 and (h (x) t^s) v = delta_{s,0} mu(h) v are implicit.

#include "demazure/cartan.hpp"
#include "demazure/engine/algebra.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace demazure::engine {

enum class Label { Lower, Raise, Cartan };

/// (label (x) t^t)^power.
struct RelationFactor {
  Label label;
  int i;
  int j;  // ignored for Cartan
  int t;
  int power;

  Gen gen() const {
    switch (label) {
      case Label::Lower: return Gen::lowering(i, j, t);
      case Label::Raise: return Gen::raising(i, j, t);
      case Label::Cartan: return Gen::cartan(i, t);
    }
    throw std::logic_error("bad label");
  }
  friend bool operator==(const RelationFactor&, const RelationFactor&) = default;
};

/// Product of factors, leftmost applied last.
struct Relation {
  std::vector<RelationFactor> factors;

  friend bool operator==(const Relation&, const Relation&) = default;
};

inline Relation lower(int i, int j, int t, int power = 1) { return {{{Label::Lower, i, j, t, power}}}; }

struct Presentation {
  Weight highest_weight;
  std::vector<Relation> relations;
  std::string name;

  int rank() const { return highest_weight.rank(); }
  int max_t_exponent() const {
    int m = 0;
    for (const auto& r : relations)
      for (const auto& f : r.factors) m = std::max(m, f.t);
    return m;
  }
};

inline std::string to_string(const Relation& r) {
  std::string s;
  for (const auto& f : r.factors) {
    if (!s.empty()) s += " ";
    switch (f.label) {
      case Label::Lower: s += "x-[" + std::to_string(f.i) + "," + std::to_string(f.j) + "]"; break;
      case Label::Raise: s += "x+[" + std::to_string(f.i) + "," + std::to_string(f.j) + "]"; break;
      case Label::Cartan: s += "h[" + std::to_string(f.i) + "]"; break;
    }
    s += "t^" + std::to_string(f.t);
    if (f.power != 1) s += "^" + std::to_string(f.power);
  }
  return s + " v";
}

/// M(nu, lambda): highest weight 2nu + lambda.
inline Presentation present_M(const Weight& nu, const Weight& lambda) {
  nu.check_same_rank(lambda);
  if (!nu.is_dominant()) throw std::invalid_argument("present_M needs dominant nu");
  if (!is_in_P1(lambda)) throw std::invalid_argument("present_M needs lambda in P^+(1)");
  const int n = nu.rank();
  Presentation p{2 * nu + lambda, {}, "M(" + to_string(nu) + "," + to_string(lambda) + ")"};
  for (int i = 1; i <= n; ++i) p.relations.push_back(lower(i, i, 0, p.highest_weight.coord(i) + 1));
  for (int i = 1; i <= n; ++i) p.relations.push_back(lower(i, i, nu.coord(i) + lambda.coord(i)));
  const auto supp = lambda.support();
  for (std::size_t j = 0; j + 1 < supp.size(); ++j) {
    const RootRange r(supp[j], supp[j + 1]);
    p.relations.push_back(lower(r.i, r.j, pair_coroot(nu, r) + 1));
  }
  return p;
}

/// mu(h_{i,j}) = (s-1) l + m with 0 < m <= l; s = 0 when mu(h_{i,j}) = 0.
struct DemazureExponents {
  int s;
  int m;
};

inline DemazureExponents demazure_exponents(int level, int value) {
  if (value == 0) return {0, 0};
  const int s1 = (value - 1) / level;
  return {s1 + 1, value - s1 * level};
}

/// D(l, mu) by generators and relations. With refined, the power relations that are consequences of the rest are dropped.
inline Presentation present_D(int level, const Weight& mu, bool refined = false) {
  if (level < 1) throw std::invalid_argument("present_D needs level >= 1");
  if (!mu.is_dominant()) throw std::invalid_argument("present_D needs a dominant weight");
  const int n = mu.rank();
  Presentation p{mu, {}, "D(" + std::to_string(level) + "," + to_string(mu) + (refined ? ",refined" : "") + ")"};
  for (int i = 1; i <= n; ++i) p.relations.push_back(lower(i, i, 0, mu.coord(i) + 1));
  for (const auto& r : positive_roots(n)) {
    const auto [s, m] = demazure_exponents(level, pair_coroot(mu, r));
    p.relations.push_back(lower(r.i, r.j, s));
    if (s - 1 < 0) continue;
    if (refined && (level == 2 || m == level)) continue;
    p.relations.push_back(lower(r.i, r.j, s - 1, m + 1));
  }
  return p;
}

/// Relations common to both presentations of V(2^a 1^b): (x^-)^{|xi|+1} v = 0.
inline Presentation v_xi_base(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("present_V_xi needs a, b >= 0");
  const int size = 2 * a + b;
  Presentation p{Weight{size}, {}, "V(2^" + std::to_string(a) + " 1^" + std::to_string(b) + ")"};
  p.relations.push_back(lower(1, 1, 0, size + 1));
  return p;
}

/// Whether (x^+ (x) t)^s (x^-)^{s+r} v = 0 is imposed for the partition 2^a 1^b.
inline bool v_xi_condition(int a, int b, int s, int r) {
  std::vector<int> xi(static_cast<std::size_t>(a), 2);
  xi.insert(xi.end(), static_cast<std::size_t>(b), 1);
  const int parts = static_cast<int>(xi.size());
  for (int k = 0; k <= parts; ++k) {
    int tail = 0;
    for (int p = k + 1; p <= parts; ++p) tail += xi[static_cast<std::size_t>(p - 1)];
    if (s + r >= 1 + r * k + tail) return true;
  }
  return false;
}

/// V(xi) for xi = 2^a 1^b, rank 1.
inline Presentation present_V_xi(int a, int b) {
  Presentation p = v_xi_base(a, b);
  const int size = 2 * a + b;
  for (int s = 0; s <= size; ++s)
    for (int r = 0; s + r <= size; ++r) {
      if (s + r == 0 || !v_xi_condition(a, b, s, r)) continue;
      Relation rel;
      if (s > 0) rel.factors.push_back({Label::Raise, 1, 1, 1, s});
      rel.factors.push_back({Label::Lower, 1, 1, 0, s + r});
      p.relations.push_back(rel);
    }
  return p;
}

/// V(2^a 1^b) by the single extra relation (x^- (x) t^{a+b}) v = 0.
inline Presentation present_V_xi_alternate(int a, int b) {
  Presentation p = v_xi_base(a, b);
  p.name += " alt";
  p.relations.push_back(lower(1, 1, a + b));
  return p;
}

/// Local Weyl module: (x^-_i)^{mu_i + 1} v = 0 only.
inline Presentation present_local_weyl(const Weight& mu) {
  if (!mu.is_dominant()) throw std::invalid_argument("present_local_weyl needs a dominant weight");
  Presentation p{mu, {}, "W(" + to_string(mu) + ")"};
  for (int i = 1; i <= mu.rank(); ++i) p.relations.push_back(lower(i, i, 0, mu.coord(i) + 1));
  return p;
}

}  // namespace demazure::engine
