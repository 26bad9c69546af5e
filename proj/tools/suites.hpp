#pragma once

// Verification sweeps behind `demazure verify <id>`.

#include "demazure/affine.hpp"
#include "demazure/characters.hpp"
#include "demazure/engine/construct.hpp"
#include "demazure/loopweights.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace demazure::cli {

struct RunConfig {
  int rank = 0;  // 0: the sweep's default range
  int trunc = 0;
  int bound = -1;
  int jobs = 1;
  std::uint64_t seed = 1;

  engine::ConstructOptions construct_options() const {
    engine::ConstructOptions o;
    o.truncation = trunc;
    o.bound = bound;
    return o;
  }
  int max_rank(int fallback) const { return rank > 0 ? rank : fallback; }
};

struct Instance {
  std::string key;
  std::function<bool()> run;
};

struct Outcome {
  std::string key;
  bool ok = false;
  double seconds = 0;
  std::string error;
};

inline std::vector<Outcome> run_all(const std::vector<Instance>& xs, int jobs) {
  std::vector<Outcome> out(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < xs.size();) {
      const auto t0 = std::chrono::steady_clock::now();
      Outcome& o = out[k];
      o.key = xs[k].key;
      try {
        o.ok = xs[k].run();
      } catch (const std::exception& e) {
        o.ok = false;
        o.error = e.what();
      }
      o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const Outcome& a, const Outcome& b) { return a.key < b.key; });
  return out;
}

// ---------------------------------------------------------------------------
// Ranges.

inline std::vector<Weight> weights_with_sum_at_most(int n, int s) {
  std::vector<Weight> out;
  Weight w(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > n) {
      out.push_back(w);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      w.coord(i) = x;
      rec(i + 1, left - x);
    }
    w.coord(i) = 0;
  };
  rec(1, s);
  return out;
}

inline std::vector<Weight> p1_weights(int n) {
  std::vector<Weight> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Weight w(n);
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1u) w.coord(i) = 1;
    out.push_back(w);
  }
  return out;
}

/// (nu, lambda) pairs: rank 1 with 2nu+lambda <= 5, rank 2 with coordinate sum <= 4, two rank 3 cases.
inline std::vector<std::pair<Weight, Weight>> identity_range(int max_rank) {
  std::vector<std::pair<Weight, Weight>> out;
  if (max_rank >= 1)
    for (int m = 0; m <= 5; ++m) out.push_back(parity_decompose(Weight{m}));
  if (max_rank >= 2)
    for (const Weight& mu : weights_with_sum_at_most(2, 4)) out.push_back(parity_decompose(mu));
  if (max_rank >= 3) {
    out.emplace_back(Weight(3), Weight{1, 0, 1});
    out.emplace_back(Weight(3), Weight{1, 1, 1});
  }
  return out;
}

inline std::string pair_key(const Weight& a, const Weight& b) {
  return "n=" + std::to_string(a.rank()) + " nu=" + to_string(a) + " lambda=" + to_string(b);
}

/// Random level-l workspace with a handful of terms.
inline AffineCharacterWorkspace random_workspace(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(-3, 3), off(-2, 2), coef(-2, 2), level(1, 3), terms(1, 5);
  AffineCharacterWorkspace ws;
  ws.level = level(rng);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Weight w(n);
    for (int i = 1; i <= n; ++i) w.coord(i) = coord(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    ws.add(w, off(rng), c);
  }
  return ws;
}

inline bool affine_adjacent(int i, int j, int n) {
  if (n == 1) return false;
  const int d = (i - j + n + 1) % (n + 1);
  return d == 1 || d == n;
}

// ---------------------------------------------------------------------------
// Sweeps.

inline const std::vector<std::string>& sweep_ids() {
  static const std::vector<std::string> ids = {
      "split-dominant", "presentation-identity", "sl2-dimension", "fusion",  "embedding-bound",  "redundancy",
      "sl2-modules",    "evaluation",            "demazure-operators", "socle", "quiver-roundtrip", "level-monotone"};
  return ids;
}

inline std::vector<Instance> build_sweep(const std::string& id, const RunConfig& cfg) {
  std::vector<Instance> xs;
  const auto opt = cfg.construct_options();
  if (id == "split-dominant") {
    for (int n = 1; n <= cfg.max_rank(6); ++n)
      for (const Weight& lambda : p1_weights(n))
        for (const Weight& nu : weights_with_sum_at_most(n, 3))
          xs.push_back({pair_key(nu, lambda), [nu, lambda] {
                          const auto r = split_dominant(nu, lambda);
                          return is_affine_dominant(r.odd_image) && is_affine_dominant(r.even_image);
                        }});
  } else if (id == "presentation-identity") {
    for (const auto& [nu, lambda] : identity_range(cfg.max_rank(3)))
      xs.push_back({pair_key(nu, lambda), [nu, lambda, opt] { return engine::verify_presentation_identity(nu, lambda, opt); }});
  } else if (id == "sl2-dimension") {
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 1 && a + b <= 3; ++b)
        xs.push_back({"a=" + std::to_string(a) + " b=" + std::to_string(b), [a, b, opt] {
                        std::int64_t expect = 1;
                        for (int k = 0; k < a; ++k) expect *= 3;
                        for (int k = 0; k < b; ++k) expect *= 2;
                        return engine::construct(engine::present_M(Weight{a}, Weight{b}), opt).dimension() == expect;
                      }});
  } else if (id == "fusion") {
    for (const auto& [nu, lambda] : identity_range(cfg.max_rank(3)))
      xs.push_back({pair_key(nu, lambda), [nu, lambda] { return check_fusion(nu, lambda); }});
  } else if (id == "embedding-bound") {
    for (int n = 1; n <= cfg.max_rank(3); ++n)
      for (const Weight& mu : weights_with_sum_at_most(n, 4))
        xs.push_back({"mu=" + to_string(mu), [mu] { return check_embedding_bound(mu); }});
  } else if (id == "redundancy") {
    for (int n = 1; n <= cfg.max_rank(2); ++n)
      for (const Weight& mu : weights_with_sum_at_most(n, 4))
        xs.push_back({"mu=" + to_string(mu), [mu, opt] {
                        return engine::construct(engine::present_D(2, mu, true), opt).dims ==
                               engine::construct(engine::present_D(2, mu, false), opt).dims;
                      }});
  } else if (id == "sl2-modules") {
    for (int b = 0; b <= 5; ++b)
      xs.push_back({"V(1^" + std::to_string(b) + ")=D(1," + std::to_string(b) + ")", [b, opt] {
                      return engine::construct(engine::present_V_xi(0, b), opt).dims == demazure_character(1, Weight{b});
                    }});
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 1; ++b)
        xs.push_back({"V(2^" + std::to_string(a) + " 1^" + std::to_string(b) + ")=D(2," + std::to_string(2 * a + b) + ")",
                      [a, b, opt] {
                        return engine::construct(engine::present_V_xi(a, b), opt).dims == demazure_character(2, Weight{2 * a + b});
                      }});
    for (int a = 0; a <= 1; ++a)
      for (int b = 2; b <= 3; ++b)
        xs.push_back({"ses a=" + std::to_string(a) + " b=" + std::to_string(b), [a, b, opt] { return engine::verify_ses_dims(a, b, opt); }});
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        xs.push_back({"alternate a=" + std::to_string(a) + " b=" + std::to_string(b), [a, b, opt] {
                        return engine::construct(engine::present_V_xi(a, b), opt).dims ==
                               engine::construct(engine::present_V_xi_alternate(a, b), opt).dims;
                      }});
  } else if (id == "evaluation") {
    for (int n = 1; n <= cfg.max_rank(4); ++n)
      for (int level = 1; level <= 3; ++level)
        for (const Weight& mu : weights_with_sum_at_most(n, level))
          xs.push_back({"l=" + std::to_string(level) + " mu=" + to_string(mu), [level, mu] {
                          const GradedCharacter ch = demazure_character(level, mu);
                          return ch.max_grade() == 0 && ch.dimension() == weyl_dimension(mu).get_si();
                        }});
  } else if (id == "demazure-operators") {
    for (int n = 1; n <= cfg.max_rank(3); ++n)
      xs.push_back({"n=" + std::to_string(n) + " operators", [n, seed = cfg.seed] {
                      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
                      for (int t = 0; t < 100; ++t) {
                        const auto ws = random_workspace(rng, n);
                        for (int i = 0; i <= n; ++i) {
                          const auto di = demazure_op(i, ws);
                          if (!(demazure_op(i, di) == di)) return false;
                          for (int j = i + 1; j <= n && n > 1; ++j) {
                            if (affine_adjacent(i, j, n)) {
                              if (!(demazure_op(i, demazure_op(j, di)) == demazure_op(j, demazure_op(i, demazure_op(j, ws)))))
                                return false;
                            } else if (!(demazure_op(i, demazure_op(j, ws)) == demazure_op(j, di))) {
                              return false;
                            }
                          }
                        }
                      }
                      return true;
                    }});
    xs.push_back({"tie-break", [seed = cfg.seed, cap = cfg.max_rank(3)] {
                    std::mt19937_64 rng(seed);
                    std::uniform_int_distribution<int> rank(1, cap), level(1, 3), c(0, 2);
                    for (int t = 0; t < 50; ++t) {
                      const int n = rank(rng);
                      Weight mu(n);
                      for (int i = 1; i <= n; ++i) mu.coord(i) = c(rng);
                      const int l = level(rng);
                      if (!(demazure_character(l, mu, TieBreak::Smallest) == demazure_character(l, mu, TieBreak::Largest)))
                        return false;
                    }
                    return true;
                  }});
  } else if (id == "socle") {
    for (int n = 1; n <= cfg.max_rank(6); ++n)
      for (const LoopWeight& p : enumerate_P1(n))
        xs.push_back({"n=" + std::to_string(n) + " pi=" + to_string(p), [p] { return check_oe_factorization(p); }});
  } else if (id == "quiver-roundtrip") {
    for (int n = 1; n <= cfg.max_rank(6); ++n)
      for (const LoopWeight& p : enumerate_P1(n)) {
        if (p.empty()) continue;
        xs.push_back({"n=" + std::to_string(n) + " pi=" + to_string(p), [p] {
                        const auto f = p.sorted();
                        const LoopWeight q = prime_of_subset(height_of_prime(p), f.front().node, f.back().node);
                        return in_P1(q) && q.normalized() == p.normalized();
                      }});
      }
  } else if (id == "level-monotone") {
    for (int n = 1; n <= cfg.max_rank(2); ++n)
      for (int level = 1; level <= 2; ++level)
        for (const Weight& mu : weights_with_sum_at_most(n, 4))
          xs.push_back({"l=" + std::to_string(level) + " mu=" + to_string(mu), [level, mu] { return check_level_monotone(level, mu); }});
  } else {
    throw std::invalid_argument("unknown verification id '" + id + "'");
  }
  return xs;
}

}  // namespace demazure::cli
