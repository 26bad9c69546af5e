#pragma once

// Incremental row echelon form over Q with sparse rows and lazily indexed columns.

#include "demazure/engine/straighten.hpp"
#include "demazure/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace demazure::engine {

using QTerms = std::vector<std::pair<Monomial, Rational>>;

class Echelon {
 public:
  using Row = std::vector<std::pair<int, Rational>>;

  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(const QTerms& v) {
    std::map<int, Rational> acc;
    for (const auto& [m, c] : v)
      if (c != 0) acc[column(m)] += c;
    Row row;
    for (auto& [k, c] : acc)
      if (c != 0) row.emplace_back(k, std::move(c));
    return insert_row(std::move(row));
  }

  bool insert(const IntTerms& v) {
    QTerms q;
    q.reserve(v.size());
    for (const auto& [m, c] : v) q.emplace_back(m, Rational(static_cast<long>(c)));
    return insert(q);
  }

  /// Basis vector k in monomial form.
  QTerms basis_vector(std::size_t k) const {
    QTerms out;
    for (const auto& [col, c] : rows_[k]) out.emplace_back(cols_[static_cast<std::size_t>(col)], c);
    return out;
  }

 private:
  int column(const Monomial& m) {
    auto [it, fresh] = index_.try_emplace(m, static_cast<int>(cols_.size()));
    if (fresh) {
      cols_.push_back(m);
      pivot_.push_back(-1);
    }
    return it->second;
  }

  bool insert_row(Row row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      const int p = pivot_[static_cast<std::size_t>(lead)];
      if (p < 0) {
        const Rational inv = 1 / row.front().second;
        for (auto& [k, c] : row) c *= inv;
        pivot_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = subtract(row, row.front().second, rows_[static_cast<std::size_t>(p)]);
    }
    return false;
  }

  /// a - f * b; both sorted by column, leading entries cancel.
  static Row subtract(const Row& a, const Rational& f, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -f * b[j].second);
        ++j;
      } else {
        Rational c = a[i].second - f * b[j].second;
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<Monomial, int> index_;
  std::vector<Monomial> cols_;
  std::vector<int> pivot_;
  std::vector<Row> rows_;
};

}  // namespace demazure::engine
