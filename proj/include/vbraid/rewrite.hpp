#pragma once

#include <stdexcept>
#include <string>

#include "vbraid/alphabet.hpp"
#include "vbraid/projections.hpp"
#include "vbraid/transversal.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

enum class RewriteTarget { H, VP };

struct KernelError : std::domain_error {
  explicit KernelError(const std::string& msg) : std::domain_error(msg) {}
};

// Result of omega / h_decompose: pure kernel part plus the permutation.
struct SemidirectElt {
  AlphabetWord pure;
  Perm perm;
};

namespace detail {

// Conjugation by a transversal word k permutes Schreier-generator indices.
// With left-to-right word evaluation pi_k, the action is i -> pi_k^{-1}(i):
// for a single letter, r_a x_{i,j} r_a = x_{ra(i),ra(j)}, and prepending a
// letter to k applies it last, i.e. composes on the outside.
inline Perm coset_index_action(const Perm& prefix_image) { return prefix_image.inverse(); }

}  // namespace detail

// The rewriting process tau. Walks w maintaining the coset representative of
// the processed prefix (its S_n image under mu resp. nu); rho letters emit
// nothing, a sigma_i^e letter emits
//   target H :  x_{c(i),c(i+1)}^e        with c from the prefix before the
//               letter (the representative is unchanged by sigma),
//   target VP:  lambda_{c(i),c(i+1)}^-e  with c from the prefix before the
//               letter when e = +1, and including it when e = -1,
// where c is the index action of the segment representative. The lambda sign
// is -e because e·sigma_i·rep(s_i)^{-1} = sigma_i rho_i = lambda_{i,i+1}^{-1}.
inline AlphabetWord rewrite(const BraidWord& w, RewriteTarget target) {
  const bool to_h = target == RewriteTarget::H;
  Perm image = to_h ? mu(w) : nu(w);
  if (!image.is_identity()) {
    throw KernelError(std::string("word is not in ") + (to_h ? "H_n: mu" : "VP_n: nu") +
                      "(w) = " + image.cycle_string());
  }
  AlphabetWord out(to_h ? Alphabet::X : Alphabet::Lambda, w.strands);
  Perm prefix = Perm::identity(w.strands);
  for (const Letter& l : w.letters) {
    if (l.kind == LetterKind::Rho) {
      prefix = prefix * Perm::transposition_adjacent(l.index, w.strands);
      continue;
    }
    if (to_h) {
      Perm c = detail::coset_index_action(prefix);
      out.push(PairLetter::x(c.apply(l.index), c.apply(l.index + 1), l.sign));
    } else {
      Perm after = prefix * Perm::transposition_adjacent(l.index, w.strands);
      Perm c = detail::coset_index_action(l.sign == 1 ? prefix : after);
      out.push(PairLetter::lambda(c.apply(l.index), c.apply(l.index + 1), -l.sign));
      prefix = after;
    }
  }
  return out;
}

// Raw Schreier expansion: concatenates rep(prefix)·a^e·rep(next)^{-1} over
// every position (including rho positions, whose Schreier generator is
// trivial but whose raw form is not freely trivial). The middle
// representatives cancel freely, so this must free-reduce exactly to
// free_reduce(w) — the telescoping correctness check.
inline BraidWord raw_schreier_expansion(const BraidWord& w, RewriteTarget target,
                                        const Transversal& tr) {
  if (tr.strands() != w.strands) throw std::invalid_argument("transversal strand mismatch");
  const bool to_h = target == RewriteTarget::H;
  BraidWord out(w.strands);
  Perm prefix = Perm::identity(w.strands);
  for (const Letter& l : w.letters) {
    Perm step = to_h && l.kind == LetterKind::Sigma
                    ? Perm::identity(w.strands)
                    : Perm::transposition_adjacent(l.index, w.strands);
    Perm next = prefix * step;
    out = concat(out, tr.rep(prefix));
    out.letters.push_back(l);
    out = concat(out, invert(tr.rep(next)));
    prefix = next;
  }
  return out;
}

// omega: VB_n -> VP_n ⋊ S_n, v -> (v·(s∘nu(v))^{-1}, nu(v)).
inline SemidirectElt omega(const BraidWord& w, const Transversal& tr) {
  Perm p = nu(w);
  BraidWord pure_braid = free_reduce(concat(w, invert(tr.rep(p))));
  return {rewrite(pure_braid, RewriteTarget::VP), p};
}

// The H_n analogue: VB_n -> H_n ⋊ S_n via mu.
inline SemidirectElt h_decompose(const BraidWord& w, const Transversal& tr) {
  Perm p = mu(w);
  BraidWord pure_braid = free_reduce(concat(w, invert(tr.rep(p))));
  return {rewrite(pure_braid, RewriteTarget::H), p};
}

// Exact normal form in VB_2 = <s1> * <r1 | r1^2>: alternating syllables
// s1^a (a != 0) and r1. Two words are equal in VB_2 iff normal forms agree.
inline BraidWord vb2_normal_form(const BraidWord& w) {
  if (w.strands != 2) throw std::invalid_argument("vb2_normal_form requires n = 2");
  // Syllable stack (is_rho, exponent); the stack stays alternating, so a
  // letter either merges with the top syllable or starts a new one.
  std::vector<std::pair<bool, long long>> syl;
  for (const Letter& l : w.letters) {
    bool is_rho = l.kind == LetterKind::Rho;
    long long e = is_rho ? 1 : l.sign;
    if (!syl.empty() && syl.back().first == is_rho) {
      if (is_rho) {
        syl.pop_back();  // r1^2 = 1
      } else if ((syl.back().second += e) == 0) {
        syl.pop_back();
      }
      continue;
    }
    syl.push_back({is_rho, e});
  }
  BraidWord out(2);
  for (auto [is_rho, e] : syl) {
    if (is_rho)
      out.letters.push_back(Letter::rho(1));
    else
      for (long long k = 0; k < (e > 0 ? e : -e); ++k)
        out.letters.push_back(Letter::sigma(1, e > 0 ? 1 : -1));
  }
  return out;
}

}  // namespace vbraid
