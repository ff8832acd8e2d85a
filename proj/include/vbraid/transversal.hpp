#pragma once

#include <unordered_map>
#include <vector>

#include "vbraid/perm.hpp"
#include "vbraid/projections.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

// Schreier transversal Lambda_n for S_n: canonical rho-words of the form
// (r_{i1} r_{i1-1} .. r_{i1-k1}) (r_{i2} ..) ... with i1 < i2 < ... < ip and
// each run descending inside. Exactly n! words with distinct evaluations.
// Built once per n, read-only afterwards.
class Transversal {
public:
  explicit Transversal(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("strand count must be >= 2");
    BraidWord prefix(n);
    build(1, prefix);
  }

  int strands() const { return n_; }
  const std::vector<BraidWord>& words() const { return words_; }

  // the unique Lambda_n-form word evaluating to p; identity -> empty word
  const BraidWord& rep(const Perm& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) throw std::invalid_argument("permutation size mismatch in rep lookup");
    return words_[it->second];
  }

private:
  void build(int start, BraidWord& prefix) {
    if (start > n_ - 1) {
      words_.push_back(prefix);
      lookup_.emplace(mu(prefix), words_.size() - 1);
      return;
    }
    build(start + 1, prefix);  // no run starting at `start`
    std::size_t base = prefix.letters.size();
    for (int bottom = start; bottom >= 1; --bottom) {
      prefix.letters.erase(prefix.letters.begin() + static_cast<long>(base), prefix.letters.end());
      for (int k = start; k >= bottom; --k) prefix.letters.push_back(Letter::rho(k));
      build(start + 1, prefix);
    }
    prefix.letters.erase(prefix.letters.begin() + static_cast<long>(base), prefix.letters.end());
  }

  int n_;
  std::vector<BraidWord> words_;
  std::unordered_map<Perm, std::size_t, PermHash> lookup_;
};

}  // namespace vbraid
