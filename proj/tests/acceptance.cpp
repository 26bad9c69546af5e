// One PASS/FAIL line per acceptance criterion, with timing against its runtime limit.

#include "demazure/affine.hpp"
#include "demazure/characters.hpp"
#include "demazure/engine/construct.hpp"
#include "demazure/loopweights.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace demazure;

namespace {

struct Tally {
  long passed = 0;
  long total = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      check(f(), what);
    } catch (const std::exception& e) {
      check(false, what + " threw " + e.what());
    }
  }
};

std::string key(const Weight& nu, const Weight& lambda) { return "nu=" + to_string(nu) + " lambda=" + to_string(lambda); }

/// (nu, lambda) with 2nu + lambda in the identity ranges.
std::vector<std::pair<Weight, Weight>> identity_range() {
  std::vector<std::pair<Weight, Weight>> out;
  for (int m = 0; m <= 5; ++m) out.push_back(parity_decompose(Weight{m}));
  for (const Weight& mu : oracle::small_dominant(2, 4)) out.push_back(parity_decompose(mu));
  out.emplace_back(Weight(3), Weight{1, 0, 1});
  out.emplace_back(Weight(3), Weight{1, 1, 1});
  return out;
}

void split_dominant_exhaustive(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    for (const Weight& lambda : oracle::p1_weights(n))
      for (const Weight& nu : oracle::small_dominant(n, 3))
        t.guarded(key(nu, lambda), [&] {
          const SplitResult r = split_dominant(nu, lambda);
          const auto [lo, le] = odd_even_split(lambda);
          const AffineWeight o = r.word.apply({nu + lo, 1, 0});
          const AffineWeight e = r.word.apply({nu + le, 1, 0});
          return o == r.odd_image && e == r.even_image && is_affine_dominant(o) && is_affine_dominant(e);
        });
}

void presentation_identity(Tally& t) {
  for (const auto& [nu, lambda] : identity_range())
    t.guarded(key(nu, lambda), [&] {
      return engine::construct(engine::present_M(nu, lambda)).dims == demazure_character(2, 2 * nu + lambda);
    });
}

void sl2_dimension(Tally& t) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 1 && a + b <= 3; ++b)
      t.guarded("a=" + std::to_string(a) + " b=" + std::to_string(b), [&] {
        long expect = 1;
        for (int k = 0; k < a; ++k) expect *= 3;
        for (int k = 0; k < b; ++k) expect *= 2;
        return engine::construct(engine::present_M(Weight{a}, Weight{b})).dimension() == expect;
      });
}

void fusion(Tally& t) {
  for (const auto& [nu, lambda] : identity_range()) t.guarded(key(nu, lambda), [&] { return check_fusion(nu, lambda); });
}

void embedding_bound(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (const Weight& mu : oracle::small_dominant(n, 4)) t.guarded("mu=" + to_string(mu), [&] { return check_embedding_bound(mu); });
}

void redundancy(Tally& t) {
  for (int n = 1; n <= 2; ++n)
    for (const Weight& mu : oracle::small_dominant(n, 4))
      t.guarded("mu=" + to_string(mu), [&] {
        return engine::construct(engine::present_D(2, mu, true)).dims == engine::construct(engine::present_D(2, mu, false)).dims;
      });
}

void sl2_modules(Tally& t) {
  using engine::construct;
  for (int b = 0; b <= 5; ++b)
    t.guarded("V(1^" + std::to_string(b) + ")", [&] { return construct(engine::present_V_xi(0, b)).dims == demazure_character(1, Weight{b}); });
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b)
      t.guarded("V(2^" + std::to_string(a) + " 1^" + std::to_string(b) + ")",
                [&] { return construct(engine::present_V_xi(a, b)).dims == demazure_character(2, Weight{2 * a + b}); });
  for (int a = 0; a <= 1; ++a)
    for (int b = 2; b <= 3; ++b)
      t.guarded("ses a=" + std::to_string(a) + " b=" + std::to_string(b), [&] {
        return construct(engine::present_V_xi(a, b)).dimension() ==
               construct(engine::present_V_xi(a, b - 2)).dimension() + construct(engine::present_V_xi(a + 1, b - 2)).dimension();
      });
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      t.guarded("two presentations a=" + std::to_string(a) + " b=" + std::to_string(b),
                [&] { return construct(engine::present_V_xi(a, b)).dims == construct(engine::present_V_xi_alternate(a, b)).dims; });
}

void evaluation(Tally& t) {
  for (int n = 1; n <= 4; ++n)
    for (int l = 1; l <= 3; ++l)
      for (const Weight& mu : oracle::small_dominant(n, l))
        t.guarded("l=" + std::to_string(l) + " mu=" + to_string(mu), [&] {
          const GradedCharacter ch = demazure_character(l, mu);
          return ch.max_grade() == 0 && ch.dimension() == weyl_dimension(mu).get_si();
        });
}

AffineCharacterWorkspace random_workspace(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(-3, 3), off(-2, 2), coef(-2, 2), level(1, 3), terms(1, 5);
  AffineCharacterWorkspace ws;
  ws.level = level(rng);
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    Weight w(n);
    for (int j = 1; j <= n; ++j) w.coord(j) = coord(rng);
    const int c = coef(rng);
    ws.add(w, off(rng), c == 0 ? 1 : c);
  }
  return ws;
}

void demazure_operators(Tally& t) {
  for (int n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
    for (int s = 0; s < 100; ++s) {
      const auto ws = random_workspace(rng, n);
      for (int i = 0; i <= n; ++i) {
        const auto di = demazure_op(i, ws);
        t.check(demazure_op(i, di) == di, "idempotence n=" + std::to_string(n) + " i=" + std::to_string(i));
        for (int j = i + 1; j <= n; ++j) {
          const bool adjacent = n > 1 && (j - i == 1 || (i == 0 && j == n));
          if (n == 1) continue;
          const std::string what = "braid n=" + std::to_string(n) + " " + std::to_string(i) + "," + std::to_string(j);
          if (adjacent)
            t.check(apply_demazure_word({i, j, i}, ws) == apply_demazure_word({j, i, j}, ws), what);
          else
            t.check(apply_demazure_word({i, j}, ws) == apply_demazure_word({j, i}, ws), what);
        }
      }
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> rank(1, 3), level(1, 3), c(0, 2);
  for (int s = 0; s < 50; ++s) {
    const int n = rank(rng);
    Weight mu(n);
    for (int i = 1; i <= n; ++i) mu.coord(i) = c(rng);
    const int l = level(rng);
    t.guarded("tie-break l=" + std::to_string(l) + " mu=" + to_string(mu),
              [&] { return demazure_character(l, mu, TieBreak::Smallest) == demazure_character(l, mu, TieBreak::Largest); });
  }
}

void socle(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    for (const LoopWeight& p : enumerate_P1(n)) {
      const LoopWeight q = plus_normalized(p);
      const auto [o, e] = oe_split(q);
      auto both = o.sorted();
      const auto es = e.sorted();
      both.insert(both.end(), es.begin(), es.end());
      t.check(tensor_irreducible(o.sorted(), n) && tensor_irreducible(es, n) && has_simple_socle(both, n),
              "n=" + std::to_string(n) + " pi=" + to_string(p));
    }
}

void quiver_roundtrip(Tally& t) {
  for (int n = 1; n <= 6; ++n) {
    for (const LoopWeight& p : enumerate_P1(n)) {
      if (p.empty()) continue;
      const auto f = p.sorted();
      t.guarded("roundtrip n=" + std::to_string(n) + " pi=" + to_string(p), [&] {
        const LoopWeight q = prime_of_subset(height_of_prime(p), f.front().node, f.back().node);
        return in_P1(q) && q.normalized() == p.normalized();
      });
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> k{0};
      for (int i = 1; i < n; ++i) k.push_back(k.back() + ((mask >> (i - 1) & 1u) ? 1 : -1));
      const HeightFunction h(k);
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) t.check(in_P1(prime_of_subset(h, a, b)), "prime n=" + std::to_string(n));
    }
  }
}

void level_monotone(Tally& t) {
  for (int n = 1; n <= 2; ++n)
    for (int l = 1; l <= 2; ++l)
      for (const Weight& mu : oracle::small_dominant(n, 4))
        t.guarded("l=" + std::to_string(l) + " mu=" + to_string(mu), [&] { return check_level_monotone(l, mu); });
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"split-dominant: both images affine dominant, n<=6", 30, split_dominant_exhaustive},
      {"presentation-identity: ch M(nu,lambda) = ch D(2,2nu+lambda)", 600, presentation_identity},
      {"sl2-dimension: dim M(a,b) = 3^a 2^b", 60, sl2_dimension},
      {"fusion: g-character factorization", 600, fusion},
      {"embedding-bound: D(2,mu) <= D(1,mu^o) * D(1,mu^e)", 300, embedding_bound},
      {"redundancy: refined and full presentations of D(2,mu) agree", 300, redundancy},
      {"sl2-modules: V(xi) presentations, short exact sequence", 300, sl2_modules},
      {"evaluation: D(l,lambda) is V(lambda) in grade 0", 60, evaluation},
      {"demazure-operators: idempotence, braid relations, tie-break", 60, demazure_operators},
      {"socle: odd/even factorization, n<=6", 10, socle},
      {"quiver-roundtrip: height function roundtrip and primes in P1(Z), n<=6", 10, quiver_roundtrip},
      {"level-monotone: D(l+1,mu) <= D(l,mu)", 120, level_monotone},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    c.run(t);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = t.total > 0 && t.passed == t.total && secs <= c.limit_seconds;
    failed += !ok;
    std::printf("%s  %s  %ld/%ld  %.2f s (limit %.0f s)", ok ? "PASS" : "FAIL", c.name.c_str(), t.passed, t.total, secs, c.limit_seconds);
    if (!t.first_failure.empty()) std::printf("  first failure: %s", t.first_failure.c_str());
    if (secs > c.limit_seconds) std::printf("  over time limit");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
