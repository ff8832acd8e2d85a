#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "vbraid/class2.hpp"
#include "vbraid/matrix.hpp"
#include "vbraid/presentation.hpp"

namespace vbraid {

// Invariant factors of a finitely generated abelian group:
// Z^rank + Z/d1 + Z/d2 + ... with d1 | d2 | ...
struct AbelianInvariants {
  long rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }

  bool operator==(const AbelianInvariants& o) const {
    return rank == o.rank && torsion == o.torsion;
  }

  std::string str() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (rank > 0) {
      out << "Z^" << rank;
      first = false;
    }
    for (const Int& d : torsion) {
      if (!first) out << " + ";
      out << "Z/" << d;
      first = false;
    }
    return out.str();
  }
};

// invariants of Z^cols / (row lattice of A)
inline AbelianInvariants quotient_invariants(const IntMatrix& A) {
  AbelianInvariants inv;
  if (A.rows() == 0) {
    inv.rank = static_cast<long>(A.cols());
    return inv;
  }
  SmithForm f = smith_normal_form(A);
  auto d = f.diagonal();
  inv.rank = static_cast<long>(A.cols()) - static_cast<long>(d.size());
  for (const Int& v : d)
    if (v > 1) inv.torsion.push_back(v);
  return inv;
}

// Gamma_1/Gamma_2: Smith form of the relator exponent matrix.
inline AbelianInvariants abelianization(const Presentation& p) {
  IntMatrix A(p.relators.size(), p.generators());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (auto [g, s] : p.relators[r]) A.at(r, g) += s;
  return quotient_invariants(A);
}

// Gamma_2/Gamma_3 of the presented group, by lattice algebra in the free
// class-2 group. With F free on the generators and N the normal closure of
// the relators, gr_2(F/N) = (Gamma_2 F) / (Gamma_3 F · (N ∩ Gamma_2 F ...)),
// concretely Z^C modulo the k-parts reachable from N. Every element of N is
// a product of conjugates w r^{±1} w^{-1}; its class-2 value is
// (±e_r, ±k_r + [e_r, e_w] + cross terms), and all correction terms are
// Z-combinations of the bracket rows [e_r, u_j] since the bracket is
// bilinear and e_w runs over Z^m. Hence the lattice
//     L = span{ (e_r, k_r) } + span{ (0, [e_r, u_j]) }
// satisfies L ∩ (0 ⊕ Z^C) = image of N in gr_2, and the quotient invariants
// of Z^C / (L ∩ Z^C) are Gamma_2/Gamma_3.
inline AbelianInvariants gamma2_mod_gamma3(const Presentation& p) {
  const std::size_t m = p.generators();
  const std::size_t C = m * (m - 1) / 2;
  RowEchelon ech(m + C);
  for (const Relator& r : p.relators) {
    Class2Vector v = collect_class2(r, m);
    std::vector<Int> row(m + C);
    for (std::size_t i = 0; i < m; ++i) row[i] = v.e[i];
    for (std::size_t i = 0; i < C; ++i) row[m + i] = v.k[i];
    ech.insert(std::move(row));
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Int> br = bracket_with_generator(v.e, j, m);
      bool nonzero = false;
      for (const Int& x : br) nonzero |= (x != 0);
      if (!nonzero) continue;
      std::vector<Int> crow(m + C);
      for (std::size_t i = 0; i < C; ++i) crow[m + i] = br[i];
      ech.insert(std::move(crow));
    }
  }
  // rows of the echelon whose support avoids the e-block span L ∩ (0 ⊕ Z^C)
  std::vector<std::vector<Int>> inter;
  for (auto& row : ech.sorted_rows()) {
    bool e_zero = true;
    for (std::size_t i = 0; i < m && e_zero; ++i) e_zero = (row[i] == 0);
    if (e_zero) inter.push_back(std::vector<Int>(row.begin() + m, row.end()));
  }
  IntMatrix K(inter.size(), C);
  for (std::size_t i = 0; i < inter.size(); ++i)
    for (std::size_t j = 0; j < C; ++j) K.at(i, j) = inter[i][j];
  return quotient_invariants(K);
}

}  // namespace vbraid
