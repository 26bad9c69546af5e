#pragma once

// The induced module U(g[t]) (x)_{U(b[t])} C_mu, identified with U(n^-[t])
// through ordered PBW monomials. Elements act by straightening.

#include "demazure/cartan.hpp"
#include "demazure/engine/algebra.hpp"
#include "demazure/engine/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace demazure::engine {

/// Lowering-generator indices in weakly decreasing order; leftmost acts last.
using Monomial = std::vector<std::uint16_t>;

/// Sorted, duplicate-free, nonzero integer combination of monomials.
using IntTerms = std::vector<std::pair<Monomial, std::int64_t>>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.size();
    for (auto x : m) h = h * 1000003u ^ x;
    return h;
  }
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow while straightening");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow while straightening");
  return r;
}

class Accumulator {
 public:
  void add(const Monomial& m, std::int64_t c) {
    if (c == 0) return;
    auto& slot = acc_[m];
    slot = checked_add(slot, c);
  }
  void add(const IntTerms& t, std::int64_t c) {
    for (const auto& [m, x] : t) add(m, checked_mul(x, c));
  }
  IntTerms take() {
    IntTerms out;
    for (auto& [m, c] : acc_)
      if (c != 0) out.emplace_back(m, c);
    acc_.clear();
    return out;
  }

 private:
  std::map<Monomial, std::int64_t> acc_;
};

}  // namespace detail

class PbwModule {
 public:
  explicit PbwModule(const Weight& mu) : mu_(mu), n_(mu.rank()), index_(mu.rank()) {}

  const Weight& highest_weight() const { return mu_; }
  int n() const { return n_; }
  const LoweringIndex& index() const { return index_; }

  /// Depth below mu in simple-root coordinates.
  std::vector<int> depth(const Monomial& m) const {
    std::vector<int> g(static_cast<std::size_t>(n_), 0);
    for (auto x : m) {
      const RootRange& r = index_.root(x);
      for (int k = r.i; k <= r.j; ++k) ++g[static_cast<std::size_t>(k - 1)];
    }
    return g;
  }
  int grade(const Monomial& m) const {
    int g = 0;
    for (auto x : m) g += index_.degree(x);
    return g;
  }

  /// y_idx . m
  const IntTerms& left_lower(int idx, const Monomial& m) {
    auto& slot = lower_memo_[memo_key(idx, m)];
    if (slot.computed) return slot.value;
    IntTerms result;
    if (m.empty() || idx >= m.front()) {
      Monomial out;
      out.reserve(m.size() + 1);
      out.push_back(static_cast<std::uint16_t>(idx));
      out.insert(out.end(), m.begin(), m.end());
      result.emplace_back(std::move(out), 1);
    } else {
      // y y1 rest = y1 (y rest) + [y, y1] rest
      const int y1 = m.front();
      const Monomial rest(m.begin() + 1, m.end());
      detail::Accumulator acc;
      const IntTerms inner = left_lower(idx, rest);
      for (const auto& [mm, c] : inner) acc.add(left_lower(y1, mm), c);
      if (auto br = bracket(index_.gen(idx), index_.gen(y1))) {
        const IntTerms tail = left_lower(index_.index(br->second), rest);
        acc.add(tail, br->first);
      }
      result = acc.take();
    }
    auto& again = lower_memo_[memo_key(idx, m)];
    again.computed = true;
    again.value = std::move(result);
    return again.value;
  }

  /// e . m for an arbitrary generator e.
  IntTerms act(const Gen& e, const Monomial& m) {
    if (e.is_lowering()) return left_lower(index_.index(e), m);
    if (m.empty()) {
      if (e.is_raising()) return {};
      if (e.r != 0) return {};
      const int v = eval_diag(mu_, e.a, e.b);
      if (v == 0) return {};
      return {{Monomial{}, v}};
    }
    const ActKey key{e, m};
    if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
    const int y1 = m.front();
    const Monomial rest(m.begin() + 1, m.end());
    detail::Accumulator acc;
    for (const auto& [mm, c] : act(e, rest)) acc.add(left_lower(y1, mm), c);
    if (auto br = bracket(e, index_.gen(y1))) acc.add(act(br->second, rest), br->first);
    IntTerms result = acc.take();
    act_memo_.emplace(key, result);
    return result;
  }

  IntTerms act(const Gen& e, const IntTerms& v) {
    detail::Accumulator acc;
    for (const auto& [m, c] : v) acc.add(act(e, m), c);
    return acc.take();
  }

  /// The relation word applied to the generator v.
  IntTerms evaluate(const Relation& rel) {
    IntTerms v{{Monomial{}, 1}};
    for (auto it = rel.factors.rbegin(); it != rel.factors.rend(); ++it)
      for (int k = 0; k < it->power; ++k) v = act(it->gen(), v);
    return v;
  }

 private:
  struct LowerSlot {
    bool computed = false;
    IntTerms value;
  };
  struct ActKey {
    Gen e;
    Monomial m;
    bool operator==(const ActKey&) const = default;
  };
  struct ActKeyHash {
    std::size_t operator()(const ActKey& k) const noexcept {
      std::size_t h = MonomialHash{}(k.m);
      h = h * 31 + static_cast<std::size_t>(k.e.kind);
      h = h * 31 + static_cast<std::size_t>(k.e.a);
      h = h * 31 + static_cast<std::size_t>(k.e.b);
      return h * 31 + static_cast<std::size_t>(k.e.r);
    }
  };

  static Monomial memo_key(int idx, const Monomial& m) {
    Monomial k;
    k.reserve(m.size() + 1);
    k.push_back(static_cast<std::uint16_t>(idx));
    k.insert(k.end(), m.begin(), m.end());
    return k;
  }

  Weight mu_;
  int n_;
  LoweringIndex index_;
  std::unordered_map<Monomial, LowerSlot, MonomialHash> lower_memo_;
  std::unordered_map<ActKey, IntTerms, ActKeyHash> act_memo_;
};

}  // namespace demazure::engine
