#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vbraid/gpv.hpp"
#include "vbraid/melement.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/projections.hpp"
#include "vbraid/quotients.hpp"
#include "vbraid/randwords.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/transversal.hpp"

namespace vbraid {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void check(const std::string& key, bool ok) {
    lines.push_back(key + ": " + (ok ? "ok" : "FAILED"));
    pass &= ok;
  }
  void note(const std::string& key, const std::string& value) {
    lines.push_back(key + ": " + value);
  }
};

// Telescoping correctness of tau: raw Schreier expansions free-reduce back
// to the input, for both targets.
inline SuiteResult verify_telescoping(std::uint64_t seed, int words_per_target = 10000) {
  SuiteResult res;
  res.name = "telescoping";
  std::mt19937_64 rng(seed);
  for (RewriteTarget target : {RewriteTarget::H, RewriteTarget::VP}) {
    int failures = 0;
    int done = 0;
    for (int n = 2; n <= 5; ++n) {
      Transversal tr(n);
      int quota = words_per_target / 4;
      for (int t = 0; t < quota; ++t, ++done) {
        BraidWord w = random_kernel_word(rng, n, 20, target, tr);
        if (!(free_reduce(raw_schreier_expansion(w, target, tr)) == free_reduce(w))) ++failures;
      }
    }
    std::ostringstream key;
    key << "telescoping " << (target == RewriteTarget::H ? "H" : "VP") << " (" << done
        << " words)";
    res.check(key.str(), failures == 0);
  }
  return res;
}

// rewrite of rho-conjugates equals the index-permuted rewrite, letterwise,
// for every generator rho_i.
inline SuiteResult verify_equivariance(std::uint64_t seed, int words_total = 1000) {
  SuiteResult res;
  res.name = "equivariance";
  std::mt19937_64 rng(seed);
  for (RewriteTarget target : {RewriteTarget::H, RewriteTarget::VP}) {
    int failures = 0, checks = 0;
    for (int n = 2; n <= 5; ++n) {
      Transversal tr(n);
      for (int t = 0; t < words_total / 4; ++t) {
        BraidWord w = random_kernel_word(rng, n, 16, target, tr);
        AlphabetWord base = rewrite(w, target);
        for (int i = 1; i < n; ++i) {
          BraidWord rho(n);
          rho.letters.push_back(Letter::rho(i));
          BraidWord conj = concat(concat(rho, w), rho);
          ++checks;
          if (!(rewrite(conj, target) == act(Perm::transposition_adjacent(i, n), base)))
            ++failures;
        }
      }
    }
    std::ostringstream key;
    key << "equivariance " << (target == RewriteTarget::H ? "H" : "VP") << " (" << checks
        << " checks)";
    res.check(key.str(), failures == 0);
  }
  return res;
}

struct Lemma5Verdict {
  std::string identity;
  int agree = 0;
  int total = 0;
  // identity 4.2 is verified and reported but never gates a suite: it does
  // not hold as written (every instantiation disagrees in degree-3
  // coordinates), and the policy is to record the verdict, not to correct
  // the formula.
  bool report_only = false;

  bool clean() const { return agree == total; }
};

namespace detail {

inline AlphabetWord lam1(int n, int i, int j, int s = 1) {
  AlphabetWord w(Alphabet::Lambda, n);
  w.push(PairLetter::lambda(i, j, s));
  return w;
}

inline AlphabetWord conj_word(const AlphabetWord& a, const AlphabetWord& b) {  // a^b = b^-1 a b
  return concat(concat(invert(b), a), b);
}

}  // namespace detail

// Degree-3 GPV verdicts for the four conjugation formula families governing
// the action on the top-index generators.
inline std::vector<Lemma5Verdict> lemma5_verdicts(int n, const GpvContext& ctx) {
  using detail::conj_word;
  using detail::lam1;
  std::vector<Lemma5Verdict> out;
  auto reduced = [&](const AlphabetWord& w) { return ctx.reduce(ctx.expand(w)); };

  Lemma5Verdict v1{"1"};
  for (int l = 1; l < n; ++l)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (i == j || i == l || j == l) continue;
        for (int eps : {1, -1}) {
          ++v1.total;
          AlphabetWord lhs = conj_word(lam1(n, n, l), lam1(n, i, j, eps));
          v1.agree += reduced(lhs) == reduced(lam1(n, n, l));
        }
      }
  out.push_back(v1);

  Lemma5Verdict v2a{"2.1"}, v2b{"2.2"}, v3a{"3.1"}, v3b{"3.2"}, v4a{"4.1"}, v4b{"4.2"};
  v4b.report_only = true;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      AlphabetWord lij = lam1(n, i, j), lij_inv = lam1(n, i, j, -1);
      // 2.1: l[i,n]^l[i,j] = (l[n,j]^l[i,j]) l[i,n] l[n,j]^-1
      ++v2a.total;
      v2a.agree += reduced(conj_word(lam1(n, i, n), lij)) ==
                   reduced(concat(concat(conj_word(lam1(n, n, j), lij), lam1(n, i, n)),
                                  lam1(n, n, j, -1)));
      // 2.2: l[i,n]^(l[i,j]^-1) = l[n,j]^-1 l[i,n] (l[n,j]^(l[i,j]^-1))
      ++v2b.total;
      v2b.agree += reduced(conj_word(lam1(n, i, n), lij_inv)) ==
                   reduced(concat(concat(lam1(n, n, j, -1), lam1(n, i, n)),
                                  conj_word(lam1(n, n, j), lij_inv)));
      // 3.1: l[n,i]^l[i,j] = l[n,j] l[n,i] (l[n,j]^-1)^l[i,j]
      ++v3a.total;
      v3a.agree += reduced(conj_word(lam1(n, n, i), lij)) ==
                   reduced(concat(concat(lam1(n, n, j), lam1(n, n, i)),
                                  conj_word(lam1(n, n, j, -1), lij)));
      // 3.2: l[n,i]^(l[i,j]^-1) = (l[n,j]^-1)^(l[i,j]^-1) l[n,i] l[n,j]
      ++v3b.total;
      v3b.agree += reduced(conj_word(lam1(n, n, i), lij_inv)) ==
                   reduced(concat(concat(conj_word(lam1(n, n, j, -1), lij_inv), lam1(n, n, i)),
                                  lam1(n, n, j)));
      // 4.1: l[j,n]^l[i,j] = l[i,n] l[j,n] l[n,j] l[i,n]^-1 (l[n,j]^-1)^l[i,j]
      ++v4a.total;
      {
        AlphabetWord rhs = lam1(n, i, n);
        rhs = concat(rhs, lam1(n, j, n));
        rhs = concat(rhs, lam1(n, n, j));
        rhs = concat(rhs, lam1(n, i, n, -1));
        rhs = concat(rhs, conj_word(lam1(n, n, j, -1), lij));
        v4a.agree += reduced(conj_word(lam1(n, j, n), lij)) == reduced(rhs);
      }
      // 4.2 (reported only; does not hold as written): l[j,n]^(l[i,j]^-1) =
      //   (l[j,n]^-1)^(l[i,n]^-1) l[i,j]^-1 l[j,n] l[n,j] l[i,j]
      ++v4b.total;
      {
        AlphabetWord rhs = conj_word(lam1(n, j, n, -1), lam1(n, i, n, -1));
        rhs = concat(rhs, lij_inv);
        rhs = concat(rhs, lam1(n, j, n));
        rhs = concat(rhs, lam1(n, n, j));
        rhs = concat(rhs, lij);
        v4b.agree += reduced(conj_word(lam1(n, j, n), lij_inv)) == reduced(rhs);
      }
    }
  out.push_back(v2a);
  out.push_back(v2b);
  out.push_back(v3a);
  out.push_back(v3b);
  out.push_back(v4a);
  out.push_back(v4b);
  return out;
}

inline SuiteResult verify_lemma5(const std::optional<std::string>& cache_dir = std::nullopt) {
  SuiteResult res;
  res.name = "lemma5";
  for (int n : {3, 4}) {
    GpvContext ctx(n, 3, cache_dir);
    for (const Lemma5Verdict& v : lemma5_verdicts(n, ctx)) {
      std::ostringstream key;
      key << "identity " << v.identity << " at n=" << n;
      std::ostringstream val;
      val << v.agree << "/" << v.total << " instantiations agree";
      if (v.clean()) {
        res.note(key.str(), val.str());
      } else if (v.report_only) {
        res.note(key.str(), "DISCREPANCY " + val.str() +
                                " (verdict recorded as data; the formula is not corrected)");
      } else {
        res.note(key.str(), "DISCREPANCY " + val.str());
        res.pass = false;
      }
    }
  }
  return res;
}

// Homomorphism certificates: chi on VB relators, epsilon on H relators, the
// concrete M_n model, the chi-image closure order, and the defining quotient
// maps on expanded VP/H relators.
inline SuiteResult verify_relations() {
  SuiteResult res;
  res.name = "relations";
  auto mul_m = [](const MElement& a, const MElement& b) { return a * b; };
  auto inv_m = [](const MElement& a) { return a.inverse(); };
  auto eq_m = [](const MElement& a, const MElement& b) { return a == b; };
  auto mul_p = [](const Perm& a, const Perm& b) { return a * b; };
  auto inv_p = [](const Perm& a) { return a.inverse(); };
  auto eq_p = [](const Perm& a, const Perm& b) { return a == b; };

  for (int n = 2; n <= 6; ++n) {
    Presentation vb = build_presentation(Family::VB, n);
    std::vector<MElement> images;
    for (const std::string& g : vb.gen_names) {
      int idx = std::stoi(g.substr(1));
      images.push_back(g[0] == 's' ? MElement::s(idx, n) : MElement::t(idx, n));
    }
    res.check("chi kills VB relators, n=" + std::to_string(n),
              check_homomorphism<MElement>(vb, images, mul_m, inv_m, eq_m, MElement::identity(n))
                  .ok);
  }
  for (int n = 2; n <= 6; ++n) {
    Presentation h = build_presentation(Family::H, n);
    std::vector<Perm> images;
    for (auto [i, j] : h.gen_pairs) images.push_back(epsilon_image(PairLetter::x(i, j), n));
    res.check("epsilon kills H relators, n=" + std::to_string(n),
              check_homomorphism<Perm>(h, images, mul_p, inv_p, eq_p, Perm::identity(n)).ok);
  }
  for (int n = 2; n <= 6; ++n) {
    Presentation m = build_presentation(Family::M, n);
    std::vector<MElement> images;
    for (const std::string& g : m.gen_names) {
      int idx = std::stoi(g.substr(1));
      images.push_back(g[0] == 's' ? MElement::s(idx, n) : MElement::t(idx, n));
    }
    res.check("M_n relation families hold concretely, n=" + std::to_string(n),
              check_homomorphism<MElement>(m, images, mul_m, inv_m, eq_m, MElement::identity(n))
                  .ok);
  }
  for (int n = 2; n <= 3; ++n) {
    std::set<MElement> closure;
    std::vector<MElement> gens;
    for (int i = 1; i < n; ++i) {
      gens.push_back(MElement::s(i, n));
      gens.push_back(MElement::t(i, n));
    }
    std::vector<MElement> frontier = {MElement::identity(n)};
    closure.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<MElement> next;
      for (const MElement& e : frontier)
        for (const MElement& g : gens)
          if (MElement prod = e * g; closure.insert(prod).second) next.push_back(prod);
      frontier = std::move(next);
    }
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    res.check("chi-image subgroup order (n!)^2, n=" + std::to_string(n),
              closure.size() == fact * fact);
  }
  // expanded relators die under their defining quotient maps
  for (int n = 2; n <= 4; ++n) {
    Presentation vp = build_presentation(Family::VP, n);
    bool ok = true;
    for (const Relator& r : vp.relators) {
      AlphabetWord w(Alphabet::Lambda, n);
      for (auto [g, s] : r) w.push(PairLetter::lambda(vp.gen_pairs[g].first, vp.gen_pairs[g].second, s));
      ok &= nu(expand(w)).is_identity();
    }
    res.check("nu kills expanded VP relators, n=" + std::to_string(n), ok);

    Presentation h = build_presentation(Family::H, n);
    ok = true;
    for (const Relator& r : h.relators) {
      AlphabetWord w(Alphabet::X, n);
      for (auto [g, s] : r) w.push(PairLetter::x(h.gen_pairs[g].first, h.gen_pairs[g].second, s));
      ok &= mu(expand(w)).is_identity();
    }
    res.check("mu kills expanded H relators, n=" + std::to_string(n), ok);
  }
  return res;
}

// Closed-form checks: abelianizations, gamma_2/gamma_3 sections including
// the VP rank formula, and the free VP_2 group-ring ranks.
inline SuiteResult verify_formula_ranks() {
  SuiteResult res;
  res.name = "formula-ranks";
  for (int n = 2; n <= 5; ++n) {
    AbelianInvariants vb = abelianization(build_presentation(Family::VB, n));
    res.check("VB" + std::to_string(n) + " abelianization = Z^1 + Z/2",
              vb.rank == 1 && vb.torsion == std::vector<Int>{2});
    AbelianInvariants vp = abelianization(build_presentation(Family::VP, n));
    res.check("VP" + std::to_string(n) + " abelianization = Z^" + std::to_string(n * (n - 1)),
              vp.rank == n * (n - 1) && vp.torsion.empty());
  }
  {
    AbelianInvariants h3 = abelianization(build_presentation(Family::H, 3));
    res.check("H3 abelianization = Z^2", h3.rank == 2 && h3.torsion.empty());
    for (int n : {4, 5}) {
      AbelianInvariants h = abelianization(build_presentation(Family::H, n));
      res.check("H" + std::to_string(n) + " abelianization = Z^1",
                h.rank == 1 && h.torsion.empty());
    }
  }
  {
    AbelianInvariants vb3 = gamma2_mod_gamma3(build_presentation(Family::VB, 3));
    res.check("VB3 gamma2/gamma3 = Z/2", vb3.rank == 0 && vb3.torsion == std::vector<Int>{2});
    for (int n : {4, 5})
      res.check("VB" + std::to_string(n) + " gamma2/gamma3 trivial",
                gamma2_mod_gamma3(build_presentation(Family::VB, n)).trivial());
    for (int n : {3, 4, 5}) {
      AbelianInvariants vp = gamma2_mod_gamma3(build_presentation(Family::VP, n));
      long want = static_cast<long>(n) * (n - 1) * (2 * n - 3) / 2;
      res.check("VP" + std::to_string(n) + " gamma2/gamma3 = Z^" + std::to_string(want),
                vp.rank == want && vp.torsion.empty());
    }
  }
  {
    Presentation vp2 = build_presentation(Family::VP, 2);
    bool ok = true;
    for (int d = 1; d <= 6; ++d)
      ok &= ideal_basis(vp2, d).quotient_rank() == (1L << (d + 1)) - 1;
    res.check("Z[VP_2]/I^{d+1} rank = 2^{d+1}-1 for d <= 6", ok);
  }
  return res;
}

}  // namespace vbraid
