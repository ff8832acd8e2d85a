#pragma once

#include <stdexcept>
#include <vector>

#include "vbraid/bigint.hpp"
#include "vbraid/presentation.hpp"

namespace vbraid {

// Normal form in the free class-2 nilpotent group on m generators:
// g_1^{e_1}..g_m^{e_m} * prod_{a>b} c_{ab}^{k_{ab}}, with c_{ab} = [g_a, g_b]
// central ([u,v] = u^-1 v^-1 u v). Commutator coordinates are indexed by
// pairs a > b (0-based), position a(a-1)/2 + b, lexicographic in (a,b).
struct Class2Vector {
  std::vector<Int> e;  // length m
  std::vector<Int> k;  // length m(m-1)/2

  static std::size_t comm_index(std::size_t a, std::size_t b) {  // a > b
    return a * (a - 1) / 2 + b;
  }

  bool operator==(const Class2Vector& o) const { return e == o.e && k == o.k; }
};

namespace detail {

// Sorting g^e g^f into normal form moves each right-hand g_b^{f_b} past every
// left-hand g_a^{e_a} with a > b, producing [g_a^{e_a}, g_b^{f_b}] = c_{ab}^{e_a f_b}
// (class-2 identity). Hence the product correction is P(e, f) = sum_{a>b} e_a f_b c_{ab}.
inline void add_product_correction(std::vector<Int>& k, const std::vector<Int>& e,
                                   const std::vector<Int>& f) {
  const std::size_t m = e.size();
  for (std::size_t a = 1; a < m; ++a) {
    if (e[a] == 0) continue;
    for (std::size_t b = 0; b < a; ++b)
      if (f[b] != 0) k[Class2Vector::comm_index(a, b)] += e[a] * f[b];
  }
}

}  // namespace detail

// class-2 multiplication: (e,k)·(f,l) = (e+f, k+l+P(e,f)); fixed so that
// collect_class2 of g2^-1 g1^-1 g2 g1 = [g2,g1] has k = +1 on c_{21}.
inline Class2Vector class2_mul(const Class2Vector& x, const Class2Vector& y) {
  Class2Vector r = x;
  detail::add_product_correction(r.k, x.e, y.e);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += y.e[i];
  for (std::size_t i = 0; i < r.k.size(); ++i) r.k[i] += y.k[i];
  return r;
}

inline Class2Vector class2_identity(std::size_t m) {
  return {std::vector<Int>(m), std::vector<Int>(m * (m - 1) / 2)};
}

// Normal form of a word in the free class-2 group.
inline Class2Vector collect_class2(const Relator& word, std::size_t m) {
  Class2Vector acc = class2_identity(m);
  for (auto [g, s] : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= m) throw std::invalid_argument("bad letter in collect_class2");
    // a single letter g^s has e = s·u_g, k = 0 (P(u_g, u_g) vanishes)
    for (std::size_t a = static_cast<std::size_t>(g) + 1; a < m; ++a)
      if (acc.e[a] != 0) acc.k[Class2Vector::comm_index(a, g)] += acc.e[a] * s;
    acc.e[g] += s;
  }
  return acc;
}

// Antisymmetrized bracket form [e, u_j]: the class-2 commutator of an element
// with exponent vector e and the generator g_j. Conjugation by g_j adds
// exactly this to the k-part: collect(g_j^-1 r g_j) = (e_r, k_r + [e_r, u_j]).
inline std::vector<Int> bracket_with_generator(const std::vector<Int>& e, std::size_t j,
                                               std::size_t m) {
  std::vector<Int> row(m * (m - 1) / 2);
  for (std::size_t a = j + 1; a < m; ++a)
    if (e[a] != 0) row[Class2Vector::comm_index(a, j)] += e[a];  // P(e, u_j)
  for (std::size_t b = 0; b < j; ++b)
    if (e[b] != 0) row[Class2Vector::comm_index(j, b)] -= e[b];  // -P(u_j, e)
  return row;
}

}  // namespace vbraid
