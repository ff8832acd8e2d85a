#pragma once

#include <string>

#include "vbraid/perm.hpp"

namespace vbraid {

// Element of M_n = S_n ⋊ S_n, the right factor acting on the left by
// conjugation: (a,b)·(c,d) = (a·bcb⁻¹, b·d). Houses s_i = (rho_i, id)
// and t_i = (id, rho_i).
struct MElement {
  Perm left;
  Perm right;

  static MElement identity(int n) { return {Perm::identity(n), Perm::identity(n)}; }

  static MElement s(int i, int n) {
    return {Perm::transposition_adjacent(i, n), Perm::identity(n)};
  }
  static MElement t(int i, int n) {
    return {Perm::identity(n), Perm::transposition_adjacent(i, n)};
  }

  MElement operator*(const MElement& o) const {
    return {left * (right * o.left * right.inverse()), right * o.right};
  }

  MElement inverse() const {
    Perm ri = right.inverse();
    return {ri * left.inverse() * right, ri};
  }

  bool is_identity() const { return left.is_identity() && right.is_identity(); }

  bool operator==(const MElement& o) const { return left == o.left && right == o.right; }
  bool operator!=(const MElement& o) const { return !(*this == o); }
  bool operator<(const MElement& o) const {
    return left < o.left || (left == o.left && right < o.right);
  }

  std::string str() const { return "(" + left.cycle_string() + " ; " + right.cycle_string() + ")"; }

  std::size_t hash() const { return left.hash() * 1000003 + right.hash(); }
};

struct MElementHash {
  std::size_t operator()(const MElement& m) const { return m.hash(); }
};

}  // namespace vbraid
