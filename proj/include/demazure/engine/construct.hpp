#pragma once

// Graded weight-space dimensions of the module presented by a Presentation.
//
// W = U(n^-[t]) v is the induced module, R the relation vectors,
// T = U(b[t]) R and K = U(n^-[t]) T the submodule generated by R. Everything
// splits into blocks (gamma, grade) with gamma = mu - weight in Q^+, and
// dim M_{gamma,g} = #PBW monomials - rank K_{gamma,g}. Grades are computed in
// increasing order; since M[g+1] = (g (x) t) M[g], the computation stops at the
// first grade that vanishes. Computing grades below N needs nothing beyond
// t^{N-1}, so this is the same as working over g (x) C[t]/(t^N).

#include "demazure/cartan.hpp"
#include "demazure/characters.hpp"
#include "demazure/engine/linalg.hpp"
#include "demazure/engine/presentation.hpp"
#include "demazure/engine/straighten.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace demazure::engine {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructOptions {
  /// Number of grades to compute; 0 grows until a grade vanishes.
  int truncation = 0;
  /// Height cutoff for gamma; negative computes dominant weights only and fills in Weyl orbits.
  int bound = -1;
  /// Safety cap for automatic truncation.
  int max_truncation = 64;
};

struct GradedModule {
  Presentation presentation;
  GradedCharacter dims;
  /// One past the last grade computed (the first vanishing grade).
  int truncation = 0;
  int bound = -1;

  std::int64_t dimension() const { return dims.dimension(); }
};

namespace detail {

using Gamma = std::vector<int>;
using BlockKey = std::pair<Gamma, int>;

inline int height_of(const Gamma& g) { return height(g); }

inline void boxes_below(const Gamma& top, std::set<Gamma>& out) {
  Gamma g(top.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == top.size()) {
      out.insert(g);
      return;
    }
    for (int x = 0; x <= top[k]; ++x) {
      g[k] = x;
      rec(k + 1);
    }
    g[k] = 0;
  };
  rec(0);
}

inline void gammas_up_to_height(int n, int h, std::set<Gamma>& out) {
  Gamma g(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.insert(g);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      g[static_cast<std::size_t>(k)] = x;
      rec(k + 1, left - x);
    }
    g[static_cast<std::size_t>(k)] = 0;
  };
  rec(0, h);
}

/// Number of PBW monomials in a block.
class MonomialCounter {
 public:
  explicit MonomialCounter(const LoweringIndex& idx) : idx_(idx) {}

  std::int64_t count(const Gamma& gamma, int grade) {
    return rec(gamma, grade, (grade + 1) * idx_.root_count());
  }

 private:
  std::int64_t rec(const Gamma& gamma, int grade, int k) {
    if (grade == 0 && std::all_of(gamma.begin(), gamma.end(), [](int x) { return x == 0; })) return 1;
    if (k == 0) return 0;
    auto key = std::make_tuple(gamma, grade, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = rec(gamma, grade, k - 1);
    const int item = k - 1;
    const RootRange& r = idx_.root(item);
    const int d = idx_.degree(item);
    Gamma rest = gamma;
    bool ok = d <= grade;
    for (int t = r.i; t <= r.j && ok; ++t)
      if (--rest[static_cast<std::size_t>(t - 1)] < 0) ok = false;
    if (ok) total += rec(rest, grade - d, k);
    memo_.emplace(key, total);
    return total;
  }

  const LoweringIndex& idx_;
  std::map<std::tuple<Gamma, int, int>, std::int64_t> memo_;
};

inline QTerms act_q(PbwModule& W, const Gen& e, const QTerms& v) {
  std::map<Monomial, Rational> acc;
  for (const auto& [m, c] : v)
    for (const auto& [mm, x] : W.act(e, m)) acc[mm] += c * Rational(static_cast<long>(x));
  QTerms out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

}  // namespace detail

inline GradedModule construct(const Presentation& p, const ConstructOptions& opt = {}) {
  using namespace detail;
  const Weight& mu = p.highest_weight;
  if (!mu.is_dominant()) throw std::invalid_argument("presentation needs a dominant highest weight");
  const int n = mu.rank();
  PbwModule W(mu);
  MonomialCounter counter(W.index());

  // Relation vectors by block.
  std::map<BlockKey, std::vector<IntTerms>> relations;
  std::set<Gamma> t_domain;
  for (const Relation& rel : p.relations) {
    IntTerms v = W.evaluate(rel);
    if (v.empty()) continue;
    const Gamma g = W.depth(v.front().first);
    const int gr = W.grade(v.front().first);
    for (const auto& [m, c] : v)
      if (W.depth(m) != g || W.grade(m) != gr) throw std::logic_error("relation is not weight homogeneous");
    relations[{g, gr}].push_back(std::move(v));
    boxes_below(g, t_domain);
  }

  // Region of gamma where K is computed, and the targets whose dimensions are reported.
  std::set<Gamma> region, targets;
  const bool box = opt.bound >= 0;
  if (box) {
    gammas_up_to_height(n, opt.bound + 1, region);
    targets = region;
  } else {
    for (const Weight& nu : dominant_weights_below(mu)) {
      Gamma g = integral_root_coordinates(mu - nu);
      targets.insert(g);
      boxes_below(g, region);
    }
  }
  auto by_height = [](const std::set<Gamma>& s, bool ascending) {
    std::vector<Gamma> v(s.begin(), s.end());
    std::stable_sort(v.begin(), v.end(), [&](const Gamma& a, const Gamma& b) {
      return ascending ? height_of(a) < height_of(b) : height_of(a) > height_of(b);
    });
    return v;
  };
  const std::vector<Gamma> t_order = by_height(t_domain, false);
  const std::vector<Gamma> k_order = by_height(region, true);

  std::map<BlockKey, Echelon> T, K;
  std::map<BlockKey, std::int64_t> dims;
  const int limit = opt.truncation > 0 ? opt.truncation : opt.max_truncation;
  int grade = 0;
  for (;; ++grade) {
    if (grade >= limit) {
      throw TruncationError("module " + p.name + " is nonzero in grade " + std::to_string(grade - 1) +
                            "; truncation " + std::to_string(limit) + " is too small");
    }
    // T: grade ascending, height descending.
    for (const Gamma& g : t_order) {
      Echelon& blk = T[{g, grade}];
      if (auto it = relations.find({g, grade}); it != relations.end())
        for (const auto& v : it->second) blk.insert(v);
      for (int i = 1; i <= n; ++i) {
        Gamma up = g;
        ++up[static_cast<std::size_t>(i - 1)];
        if (!t_domain.count(up)) continue;
        for (int s = 0; s <= grade; ++s) {
          auto src = T.find({up, grade - s});
          if (src == T.end()) continue;
          for (std::size_t k = 0; k < src->second.rank(); ++k)
            blk.insert(act_q(W, Gen::raising(i, i, s), src->second.basis_vector(k)));
        }
      }
      for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= grade; ++s) {
          auto src = T.find({g, grade - s});
          if (src == T.end()) continue;
          for (std::size_t k = 0; k < src->second.rank(); ++k)
            blk.insert(act_q(W, Gen::cartan(i, s), src->second.basis_vector(k)));
        }
    }
    // K: grade ascending, height ascending.
    bool any = false;
    for (const Gamma& g : k_order) {
      const std::int64_t total = counter.count(g, grade);
      Echelon& blk = K[{g, grade}];
      auto full = [&] { return static_cast<std::int64_t>(blk.rank()) >= total; };
      if (auto it = T.find({g, grade}); it != T.end())
        for (std::size_t k = 0; k < it->second.rank() && !full(); ++k) blk.insert(it->second.basis_vector(k));
      for (int i = 1; i <= n && !full(); ++i) {
        Gamma down = g;
        if (--down[static_cast<std::size_t>(i - 1)] < 0) continue;
        for (int s = 0; s <= grade && !full(); ++s) {
          auto src = K.find({down, grade - s});
          if (src == K.end()) continue;
          const int idx = W.index().index(Gen::lowering(i, i, s));
          for (std::size_t k = 0; k < src->second.rank() && !full(); ++k) {
            std::map<Monomial, Rational> acc;
            for (const auto& [m, c] : src->second.basis_vector(k))
              for (const auto& [mm, x] : W.left_lower(idx, m)) acc[mm] += c * Rational(static_cast<long>(x));
            QTerms v;
            for (auto& [m, c] : acc)
              if (c != 0) v.emplace_back(m, std::move(c));
            blk.insert(v);
          }
        }
      }
      if (targets.count(g)) {
        const std::int64_t d = total - static_cast<std::int64_t>(blk.rank());
        if (d > 0) {
          dims[{g, grade}] = d;
          any = true;
        }
      }
    }
    if (!any) break;
  }

  GradedModule out{p, {}, grade + 1, box ? opt.bound : -1};
  for (const auto& [key, d] : dims) {
    const Weight w = mu - weight_from_root_coordinates(key.first);
    if (box) {
      if (height_of(key.first) == opt.bound + 1)
        throw BoundError("module " + p.name + " has weights beyond height bound " + std::to_string(opt.bound));
      out.dims.add(w, key.second, d);
    } else {
      for (const Weight& x : weyl_orbit(w)) out.dims.add(x, key.second, d);
    }
  }
  return out;
}

/// Graded character of M(nu, lambda) equals that of D(2, 2nu + lambda).
inline bool verify_presentation_identity(const Weight& nu, const Weight& lambda, const ConstructOptions& opt = {}) {
  return construct(present_M(nu, lambda), opt).dims == demazure_character(2, 2 * nu + lambda);
}

/// dim V(2^a 1^b) = dim V(2^a 1^{b-2}) + dim V(2^{a+1} 1^{b-2}).
inline bool verify_ses_dims(int a, int b, const ConstructOptions& opt = {}) {
  if (b < 2) throw std::invalid_argument("verify_ses_dims needs b >= 2");
  return construct(present_V_xi(a, b), opt).dimension() ==
         construct(present_V_xi(a, b - 2), opt).dimension() + construct(present_V_xi(a + 1, b - 2), opt).dimension();
}

}  // namespace demazure::engine
