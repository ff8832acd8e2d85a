#pragma once

#include "vbraid/alphabet.hpp"
#include "vbraid/melement.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

// mu: sigma_i -> 1, rho_i -> rho_i. ker mu = H_n.
inline Perm mu(const BraidWord& w) {
  Perm p = Perm::identity(w.strands);
  for (const Letter& l : w.letters)
    if (l.kind == LetterKind::Rho) p = p * Perm::transposition_adjacent(l.index, w.strands);
  return p;
}

// nu: sigma_i -> rho_i, rho_i -> rho_i. ker nu = VP_n.
inline Perm nu(const BraidWord& w) {
  Perm p = Perm::identity(w.strands);
  for (const Letter& l : w.letters)
    p = p * Perm::transposition_adjacent(l.index, w.strands);
  return p;
}

// chi: sigma_i -> s_i, rho_i -> t_i in the concrete M_n. ker chi = EP_n.
inline MElement chi(const BraidWord& w) {
  int n = w.strands;
  return evaluate<MElement>(
      w,
      [n](LetterKind k, int i) {
        return k == LetterKind::Sigma ? MElement::s(i, n) : MElement::t(i, n);
      },
      [](const MElement& a, const MElement& b) { return a * b; },
      [](const MElement& a) { return a.inverse(); }, MElement::identity(n));
}

inline Perm eta1(const MElement& m) { return m.right; }
inline Perm eta2(const MElement& m) { return m.left * m.right; }

// epsilon(x_{i,j}) = epsilon(x_{j,i}) = rho_i conjugated by rho_{i+1}..rho_{j-1}
// for i < j; evaluates x-words into S_n. Coincides with nu restricted to H_n.
inline Perm epsilon_image(const PairLetter& l, int n) {
  if (l.alphabet != Alphabet::X) throw std::invalid_argument("epsilon expects x letters");
  int a = std::min(l.i, l.j), b = std::max(l.i, l.j);
  Perm p = Perm::transposition_adjacent(a, n);
  for (int k = a + 1; k <= b - 1; ++k) {
    Perm r = Perm::transposition_adjacent(k, n);
    p = r * p * r;  // conjugation by an involution
  }
  return p;
}

inline Perm epsilon(const AlphabetWord& w) {
  if (w.alphabet != Alphabet::X) throw std::invalid_argument("epsilon expects x letters");
  Perm p = Perm::identity(w.strands);
  for (const PairLetter& l : w.letters) {
    Perm g = epsilon_image(l, w.strands);
    p = p * (l.sign == 1 ? g : g.inverse());
  }
  return p;
}

struct MembershipFlags {
  bool in_H;
  bool in_VP;
  bool in_EP;
};

// in_H <=> mu = id, in_VP <=> nu = id, in_EP <=> chi = id. The three are
// computed independently; in_EP <=> in_H && in_VP is a theorem, not assumed.
inline MembershipFlags membership(const BraidWord& w) {
  return {mu(w).is_identity(), nu(w).is_identity(), chi(w).is_identity()};
}

}  // namespace vbraid
