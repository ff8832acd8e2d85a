#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/matrix.hpp"
#include "vbraid/series.hpp"

namespace vbraid {

namespace detail {

using SparseRow = std::vector<std::pair<std::uint64_t, Int>>;  // sorted by index

inline SparseRow sparse_combine(const SparseRow& a, const Int& ca, const SparseRow& b,
                                const Int& cb) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      Int v = ca * a[i].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      Int v = cb * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Int v = ca * a[i].second + cb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace detail

// Hermite-form basis of the relation-ideal lattice inside Z^{B(d)}: rows
// echelon with positive pivots, entries above pivots reduced into [0, pivot).
// The constant coordinate (index 0) is zero in every row, since relator
// deviations have zero augmentation.
class IdealBasis {
public:
  IdealBasis(int m, int d) : ix_(m, d) {}

  const MonomialIndexer& indexer() const { return ix_; }
  std::size_t rank() const { return rows_.size(); }
  std::uint64_t dimension() const { return ix_.size(); }  // B(d)
  long quotient_rank() const { return static_cast<long>(dimension()) - static_cast<long>(rank()); }

  void insert(detail::SparseRow row) {
    while (!row.empty()) {
      std::uint64_t c = row.front().first;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        if (row.front().second < 0) {
          for (auto& [idx, v] : row) v = -v;
        }
        rows_.emplace(c, std::move(row));
        return;
      }
      detail::SparseRow& b = it->second;
      const Int& pivot = b.front().second;
      const Int& lead = row.front().second;
      if (lead % pivot == 0) {
        row = detail::sparse_combine(row, 1, b, -(lead / pivot));
      } else {
        Int g, x, y;
        RowEchelon::xgcd(pivot, lead, g, x, y);
        detail::SparseRow nb = detail::sparse_combine(b, x, row, y);
        detail::SparseRow rem = detail::sparse_combine(row, pivot / g, b, -(lead / g));
        if (nb.front().second < 0)
          for (auto& [idx, v] : nb) v = -v;
        it->second = std::move(nb);
        row = std::move(rem);
      }
    }
  }

  // full Hermite normalization: entries above each pivot reduced into [0, pivot)
  void normalize() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      for (auto jt = rows_.begin(); jt->first < it->first; ++jt) {
        detail::SparseRow& r = jt->second;
        auto pos = std::lower_bound(r.begin(), r.end(), it->first,
                                    [](const auto& p, std::uint64_t c) { return p.first < c; });
        if (pos == r.end() || pos->first != it->first) continue;
        Int q = detail::floor_div(pos->second, it->second.front().second);
        if (q != 0) jt->second = detail::sparse_combine(r, 1, it->second, -q);
      }
    }
  }

  // canonical coset representative: pivot coordinates reduced into [0, pivot)
  void reduce(std::vector<Int>& v) const {
    for (const auto& [c, row] : rows_) {
      if (v[c] == 0) continue;
      Int q = detail::floor_div(v[c], row.front().second);
      if (q == 0) continue;
      for (const auto& [idx, val] : row) v[idx] -= q * val;
    }
  }

  std::vector<Int> reduce(const TruncatedSeries& s) const {
    std::vector<Int> v(dimension());
    for (const auto& [i, c] : s.coeffs) v[i] = c;
    reduce(v);
    return v;
  }

  bool reduces_to_zero(const TruncatedSeries& s) const {
    std::vector<Int> v = reduce(s);
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }

  // cache format: "gpv-basis n=<n> d=<d> m=<m>" then dense rows, pivot order
  void save(std::ostream& out, int n) const {
    out << "gpv-basis n=" << n << " d=" << ix_.degree() << " m=" << ix_.symbols() << "\n";
    for (const auto& [c, row] : rows_) {
      std::vector<Int> dense(dimension());
      for (const auto& [idx, v] : row) dense[idx] = v;
      for (std::uint64_t j = 0; j < dimension(); ++j) {
        if (j) out << ' ';
        out << dense[j];
      }
      out << "\n";
    }
  }

  static IdealBasis load(std::istream& in, int n, int m, int d) {
    std::string header;
    std::getline(in, header);
    std::ostringstream want;
    want << "gpv-basis n=" << n << " d=" << d << " m=" << m;
    if (header != want.str()) throw std::invalid_argument("gpv basis cache header mismatch");
    IdealBasis basis(m, d);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      detail::SparseRow row;
      std::string tok;
      std::uint64_t idx = 0;
      while (ls >> tok) {
        Int v(tok);
        if (v != 0) row.emplace_back(idx, v);
        ++idx;
      }
      if (idx != basis.dimension()) throw std::invalid_argument("gpv basis cache row length mismatch");
      if (!row.empty()) basis.rows_.emplace(row.front().first, std::move(row));
    }
    return basis;
  }

  const std::map<std::uint64_t, detail::SparseRow>& rows() const { return rows_; }

private:
  MonomialIndexer ix_;
  std::map<std::uint64_t, detail::SparseRow> rows_;  // pivot column -> row
};

// Lattice spanned by the coefficient vectors of u·(expand(r) - 1)·v over all
// relators r and monomials u, v with deg u + deg v + 1 <= d. The quotient
// Z^{B(d)} / lattice represents Z[G]/I^{d+1}; completeness within degree d
// holds because the Magnus images of group words span the whole truncated
// algebra, so every element of the relation ideal is a Z-combination of
// monomial-bordered rows.
inline IdealBasis ideal_basis(const Presentation& p, int d) {
  if (d < 1) throw std::invalid_argument("ideal_basis requires d >= 1");
  const int m = p.generators();
  IdealBasis basis(m, d);
  const MonomialIndexer& ix = basis.indexer();
  for (const Relator& r : p.relators) {
    TruncatedSeries dev = magnus_expand(r, ix);
    dev.add(0, -1);
    if (dev.is_zero()) continue;
    int mindeg = ix.length_of(dev.coeffs.begin()->first);
    for (int lu = 0; lu + mindeg <= d; ++lu) {
      for (int lv = 0; lu + lv + mindeg <= d && lu + lv + 1 <= d; ++lv) {
        for (std::uint64_t u = 0; u < ix.pow_m(lu); ++u) {
          std::uint64_t iu = ix.offset(lu) + u;
          for (std::uint64_t v = 0; v < ix.pow_m(lv); ++v) {
            std::uint64_t iv = ix.offset(lv) + v;
            detail::SparseRow row;
            for (const auto& [im, c] : dev.coeffs) {
              int lm = ix.length_of(im);
              if (lu + lm + lv > d) continue;
              row.emplace_back(ix.concat(ix.concat(iu, lu, im, lm), lu + lm, iv, lv), c);
            }
            // concat keeps the length-lex order of dev's monomials, so row stays sorted
            if (!row.empty()) basis.insert(std::move(row));
          }
        }
      }
    }
  }
  basis.normalize();
  return basis;
}

}  // namespace vbraid
