#pragma once

#include <cstdint>
#include <random>

#include "vbraid/projections.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/transversal.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

// Deterministic word generators for the randomized property suites.
inline BraidWord random_braid_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w(n);
  std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 2);
  for (int i = 0; i < len; ++i) {
    int k = kind(rng);
    if (k == 2)
      w.letters.push_back(Letter::rho(idx(rng)));
    else
      w.letters.push_back(Letter::sigma(idx(rng), k == 0 ? 1 : -1));
  }
  return w;
}

// A random element of the kernel: a random word times the inverse of its
// coset representative.
inline BraidWord random_kernel_word(std::mt19937_64& rng, int n, int len, RewriteTarget target,
                                    const Transversal& tr) {
  BraidWord w = random_braid_word(rng, n, len);
  Perm p = target == RewriteTarget::H ? mu(w) : nu(w);
  return free_reduce(concat(w, invert(tr.rep(p))));
}

}  // namespace vbraid
