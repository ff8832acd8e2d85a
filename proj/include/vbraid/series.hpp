#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbraid/bigint.hpp"
#include "vbraid/presentation.hpp"

namespace vbraid {

// Dense indexing of noncommutative monomials over m symbols, length 0..d,
// length-then-lexicographic: index = offset(len) + base-m digits of the
// symbol sequence. B(d) = sum_{k<=d} m^k coordinates.
class MonomialIndexer {
public:
  MonomialIndexer(int m, int d) : m_(m), d_(d), offset_(d + 2, 0) {
    if (m < 1 || d < 0) throw std::invalid_argument("bad monomial space parameters");
    for (int k = 0; k <= d; ++k) {
      offset_[k + 1] = offset_[k] + pow_m(k);
    }
  }

  int symbols() const { return m_; }
  int degree() const { return d_; }
  std::uint64_t size() const { return offset_[d_ + 1]; }  // B(d)
  std::uint64_t offset(int len) const { return offset_[len]; }

  std::uint64_t pow_m(int k) const {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(m_);
    return p;
  }

  int length_of(std::uint64_t index) const {
    int l = 0;
    while (index >= offset_[l + 1]) ++l;
    return l;
  }

  std::uint64_t encode(const std::vector<int>& symbols) const {
    std::uint64_t v = 0;
    for (int s : symbols) v = v * m_ + static_cast<std::uint64_t>(s);
    return offset_[symbols.size()] + v;
  }

  std::vector<int> decode(std::uint64_t index) const {
    int l = length_of(index);
    std::uint64_t v = index - offset_[l];
    std::vector<int> out(l);
    for (int i = l - 1; i >= 0; --i) {
      out[i] = static_cast<int>(v % m_);
      v /= m_;
    }
    return out;
  }

  // index of the concatenation of two monomials (length sum must be <= d)
  std::uint64_t concat(std::uint64_t a, int la, std::uint64_t b, int lb) const {
    std::uint64_t wa = a - offset_[la], wb = b - offset_[lb];
    return offset_[la + lb] + wa * pow_m(lb) + wb;
  }

private:
  int m_, d_;
  std::vector<std::uint64_t> offset_;
};

// Element of the degree-truncated group ring in coordinates a_g = (g - 1):
// integer coefficients on monomials of length <= d, zeros never stored.
struct TruncatedSeries {
  int m = 1, d = 0;
  std::map<std::uint64_t, Int> coeffs;

  TruncatedSeries() = default;
  TruncatedSeries(int m_, int d_) : m(m_), d(d_) {}

  static TruncatedSeries one(int m, int d) {
    TruncatedSeries s(m, d);
    s.coeffs[0] = 1;
    return s;
  }

  void add(std::uint64_t idx, const Int& c) {
    auto it = coeffs.find(idx);
    if (it == coeffs.end()) {
      if (c != 0) coeffs.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  bool operator==(const TruncatedSeries& o) const {
    return m == o.m && d == o.d && coeffs == o.coeffs;
  }

  bool is_zero() const { return coeffs.empty(); }
};

inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const MonomialIndexer& ix) {
  TruncatedSeries r(a.m, a.d);
  for (const auto& [ia, ca] : a.coeffs) {
    int la = ix.length_of(ia);
    for (const auto& [ib, cb] : b.coeffs) {
      int lb = ix.length_of(ib);
      if (la + lb > a.d) continue;
      r.add(ix.concat(ia, la, ib, lb), ca * cb);
    }
  }
  return r;
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  for (const auto& [i, c] : b.coeffs) r.add(i, c);
  return r;
}

inline TruncatedSeries scale(const TruncatedSeries& a, const Int& c) {
  TruncatedSeries r(a.m, a.d);
  if (c != 0)
    for (const auto& [i, v] : a.coeffs) r.coeffs[i] = v * c;
  return r;
}

// g^{+1} -> 1 + a_g ; g^{-1} -> 1 - a_g + a_g^2 - ... ± a_g^d (the truncated
// geometric series, so that the two expand to mutually inverse series).
inline TruncatedSeries magnus_letter(int g, int sign, const MonomialIndexer& ix) {
  TruncatedSeries s(ix.symbols(), ix.degree());
  s.coeffs[0] = 1;
  if (sign == 1) {
    if (ix.degree() >= 1) s.coeffs[ix.encode({g})] = 1;
    return s;
  }
  std::vector<int> mono;
  int sgn = -1;
  for (int k = 1; k <= ix.degree(); ++k) {
    mono.push_back(g);
    s.coeffs[ix.encode(mono)] = sgn;
    sgn = -sgn;
  }
  return s;
}

// Multiplicative expansion of a word over generator symbols 0..m-1.
inline TruncatedSeries magnus_expand(const Relator& word, const MonomialIndexer& ix) {
  TruncatedSeries acc = TruncatedSeries::one(ix.symbols(), ix.degree());
  for (auto [g, s] : word) {
    if (g < 0 || g >= ix.symbols()) throw std::invalid_argument("letter outside symbol range");
    acc = mul(acc, magnus_letter(g, s, ix), ix);
  }
  return acc;
}

}  // namespace vbraid
