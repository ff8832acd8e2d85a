#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/alphabet.hpp"
#include "vbraid/ideal.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/projections.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/transversal.hpp"

namespace vbraid {

// Everything needed to evaluate the universal degree-d invariant on n
// strands: the VP_n presentation, its monomial space, and the Hermite basis
// of the relation-ideal lattice (optionally cached on disk).
class GpvContext {
public:
  GpvContext(int n, int d, std::optional<std::string> cache_dir = std::nullopt)
      : n_(n),
        d_(d),
        vp_(build_presentation(Family::VP, n)),
        transversal_(n),
        basis_(load_or_build(vp_, n, d, cache_dir)) {
    for (int g = 0; g < vp_.generators(); ++g) pair_index_[vp_.gen_pairs[g]] = g;
  }

  int strands() const { return n_; }
  int degree() const { return d_; }
  const Presentation& vp() const { return vp_; }
  const Transversal& transversal() const { return transversal_; }
  const IdealBasis& basis() const { return basis_; }
  const MonomialIndexer& indexer() const { return basis_.indexer(); }

  int generator_index(const PairLetter& l) const {
    auto it = pair_index_.find({l.i, l.j});
    if (it == pair_index_.end()) throw std::invalid_argument("pair letter outside VP_n");
    return it->second;
  }

  Relator to_generator_word(const AlphabetWord& w) const {
    if (w.alphabet != Alphabet::Lambda) throw std::invalid_argument("expected a lambda word");
    Relator out;
    out.reserve(w.size());
    for (const PairLetter& l : w.letters) out.push_back({generator_index(l), l.sign});
    return out;
  }

  TruncatedSeries expand(const AlphabetWord& w) const {
    return magnus_expand(to_generator_word(w), indexer());
  }

  std::vector<Int> reduce(const TruncatedSeries& s) const { return basis_.reduce(s); }

private:
  static IdealBasis load_or_build(const Presentation& vp, int n, int d,
                                  const std::optional<std::string>& cache_dir) {
    if (d == 0) return IdealBasis(vp.generators(), 0);  // I^1 needs no relator rows
    if (cache_dir) {
      std::filesystem::path path =
          std::filesystem::path(*cache_dir) /
          ("gpv-n" + std::to_string(n) + "-d" + std::to_string(d) + ".basis");
      if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
          return IdealBasis::load(in, n, vp.generators(), d);
        } catch (const std::invalid_argument&) {
          // stale cache: fall through and rebuild
        }
      }
      IdealBasis basis = ideal_basis(vp, d);
      std::filesystem::create_directories(path.parent_path());
      std::ofstream out(path);
      basis.save(out, n);
      return basis;
    }
    return ideal_basis(vp, d);
  }

  int n_, d_;
  Presentation vp_;
  Transversal transversal_;
  IdealBasis basis_;
  std::map<std::pair<int, int>, int> pair_index_;
};

// Value of the universal degree-d invariant: the permutation tag (the Z[S_n]
// tensor factor) and the canonical Hermite-reduced coordinate vector of the
// pure part in Z[VP_n]/I^{d+1}.
struct GPVCoordinates {
  Perm perm;
  std::vector<Int> coords;

  bool operator==(const GPVCoordinates& o) const { return perm == o.perm && coords == o.coords; }
  bool operator!=(const GPVCoordinates& o) const { return !(*this == o); }

  std::string coords_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out << ' ';
      out << coords[i];
    }
    return out.str();
  }
};

// Omega followed by truncated expansion: perm = nu(w), coords = reduction of
// the Magnus expansion of the rewritten pure part w·rep(nu(w))^{-1}.
inline GPVCoordinates universal_gpv(const BraidWord& w, const GpvContext& ctx) {
  if (w.strands != ctx.strands()) throw std::invalid_argument("strand count mismatch");
  Perm p = nu(w);
  BraidWord pure = free_reduce(concat(w, invert(ctx.transversal().rep(p))));
  AlphabetWord lw = rewrite(pure, RewriteTarget::VP);
  return {p, ctx.reduce(ctx.expand(lw))};
}

struct DistinguishVerdict {
  bool distinguished = false;
  int degree = -1;      // least distinguishing degree when distinguished
  int max_degree = 0;   // the probed bound

  std::string str() const {
    if (distinguished) return "distinguished at degree " + std::to_string(degree);
    // never "equal": indistinguishability is only up to the probed degree
    return "indistinguishable at degree <= " + std::to_string(max_degree);
  }
};

// Compares the universal invariant at degrees 0..d and reports the least
// distinguishing degree.
inline DistinguishVerdict distinguish(const BraidWord& w1, const BraidWord& w2, int d,
                                      std::optional<std::string> cache_dir = std::nullopt) {
  if (w1.strands != w2.strands) throw std::invalid_argument("strand count mismatch");
  for (int k = 0; k <= d; ++k) {
    GpvContext ctx(w1.strands, k, cache_dir);
    if (universal_gpv(w1, ctx) != universal_gpv(w2, ctx)) return {true, k, d};
  }
  return {false, -1, d};
}

// Formal integer combination of braid words on a common strand count.
struct Combination {
  int strands = 2;
  std::vector<std::pair<Int, BraidWord>> terms;
};

// Grammar: "<int> * ( <word> ) ± <int> * ( <word> ) ..." — word may be empty.
inline Combination parse_combination(const std::string& text, int n) {
  Combination c;
  c.strands = n;
  std::istringstream in(text);
  std::string tok;
  bool expect_sign = false;
  while (in >> tok) {
    Int sign = 1;
    if (expect_sign) {
      if (tok == "+")
        sign = 1;
      else if (tok == "-")
        sign = -1;
      else
        throw std::invalid_argument("expected '+' or '-', got '" + tok + "'");
      if (!(in >> tok)) throw std::invalid_argument("dangling sign in combination");
    }
    Int coeff;
    try {
      coeff = Int(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected integer coefficient, got '" + tok + "'");
    }
    if (!(in >> tok) || tok != "*") throw std::invalid_argument("expected '*' after coefficient");
    if (!(in >> tok) || tok != "(") throw std::invalid_argument("expected '(' in combination");
    std::string word_text;
    while (in >> tok && tok != ")") word_text += (word_text.empty() ? "" : " ") + tok;
    if (tok != ")") throw std::invalid_argument("unterminated '(' in combination");
    c.terms.push_back({sign * coeff, parse_word(word_text, n)});
    expect_sign = true;
  }
  if (c.terms.empty()) throw std::invalid_argument("empty combination");
  return c;
}

// Membership in J^d: under Omega the combination lies in I^d(VP_n)⊗Z[S_n]
// iff for each permutation class the combined expansion of the pure parts
// vanishes in Z[VP_n]/I^d, i.e. reduces to zero at truncation degree d-1.
inline bool jpower_membership(const Combination& c, int d,
                              std::optional<std::string> cache_dir = std::nullopt) {
  if (d < 1) throw std::invalid_argument("jpower_membership requires d >= 1");
  GpvContext ctx(c.strands, d - 1, cache_dir);
  std::map<Perm, TruncatedSeries> per_class;
  for (const auto& [coeff, w] : c.terms) {
    if (w.strands != c.strands) throw std::invalid_argument("mixed strand counts in combination");
    Perm p = nu(w);
    BraidWord pure = free_reduce(concat(w, invert(ctx.transversal().rep(p))));
    TruncatedSeries s = ctx.expand(rewrite(pure, RewriteTarget::VP));
    auto [it, fresh] = per_class.try_emplace(p, s.m, s.d);
    it->second = add(it->second, scale(s, coeff));
  }
  for (const auto& [p, s] : per_class)
    if (!ctx.basis().reduces_to_zero(s)) return false;
  return true;
}

}  // namespace vbraid
