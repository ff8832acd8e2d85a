#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "vbraid/gpv.hpp"
#include "vbraid/ideal.hpp"
#include "vbraid/series.hpp"

using namespace vbraid;

namespace {

Relator gen_word(std::initializer_list<std::pair<int, int>> ls) {
  Relator r;
  for (auto p : ls) r.push_back(p);
  return r;
}

// dense independent oracle: row-reduce (over Q) the full set of bordered
// relator rows, no Hermite shortcuts, to get the quotient rank
long dense_quotient_rank(const Presentation& p, int d) {
  MonomialIndexer ix(p.generators(), d);
  std::vector<std::vector<double>> rows;
  for (const Relator& r : p.relators) {
    TruncatedSeries dev = magnus_expand(r, ix);
    dev.add(0, -1);
    if (dev.is_zero()) continue;
    for (int lu = 0; lu <= d; ++lu)
      for (std::uint64_t u = 0; u < ix.pow_m(lu); ++u)
        for (int lv = 0; lu + lv + 1 <= d; ++lv)
          for (std::uint64_t v = 0; v < ix.pow_m(lv); ++v) {
            std::vector<double> row(ix.size(), 0.0);
            bool nonzero = false;
            for (const auto& [im, c] : dev.coeffs) {
              int lm = ix.length_of(im);
              if (lu + lm + lv > d) continue;
              std::uint64_t iu = ix.offset(lu) + u, iv = ix.offset(lv) + v;
              row[ix.concat(ix.concat(iu, lu, im, lm), lu + lm, iv, lv)] +=
                  static_cast<double>(c);
              nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
          }
  }
  // Gaussian elimination with partial pivoting
  std::size_t rank = 0;
  std::size_t width = ix.size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
    if (rows.empty() || std::abs(rows[best][col]) < 1e-9) continue;
    std::swap(rows[rank], rows[best]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || std::abs(rows[i][col]) < 1e-12) continue;
      double f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < width; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return static_cast<long>(width) - static_cast<long>(rank);
}

}  // namespace

TEST_CASE("magnus_expand examples") {
  MonomialIndexer ix(2, 2);  // symbols: 0 = a12, 1 = a21
  TruncatedSeries s1 = magnus_expand(gen_word({{0, 1}}), ix);
  CHECK(s1.coeffs == std::map<std::uint64_t, Int>{{0, 1}, {ix.encode({0}), 1}});

  TruncatedSeries s2 = magnus_expand(gen_word({{0, -1}}), ix);
  CHECK(s2.coeffs ==
        std::map<std::uint64_t, Int>{{0, 1}, {ix.encode({0}), -1}, {ix.encode({0, 0}), 1}});

  // [l12, l21] -> 1 + a12 a21 - a21 a12
  TruncatedSeries s3 = magnus_expand(gen_word({{0, -1}, {1, -1}, {0, 1}, {1, 1}}), ix);
  CHECK(s3.coeffs == std::map<std::uint64_t, Int>{
                         {0, 1}, {ix.encode({0, 1}), 1}, {ix.encode({1, 0}), -1}});

  // inverse letters via geometric series: g * g^-1 expands to 1
  TruncatedSeries inv_check = magnus_expand(gen_word({{0, 1}, {0, -1}}), ix);
  CHECK(inv_check.coeffs == std::map<std::uint64_t, Int>{{0, 1}});
}

TEST_CASE("magnus_expand is multiplicative (randomized)") {
  MonomialIndexer ix(3, 3);
  std::mt19937_64 rng(42);
  auto random_gw = [&](int len) {
    Relator w;
    for (int i = 0; i < len; ++i) w.push_back({static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
    return w;
  };
  for (int trial = 0; trial < 10000; ++trial) {
    Relator u = random_gw(static_cast<int>(rng() % 6));
    Relator v = random_gw(static_cast<int>(rng() % 6));
    Relator uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(magnus_expand(uv, ix) == mul(magnus_expand(u, ix), magnus_expand(v, ix), ix));
  }
}

TEST_CASE("ideal_basis examples") {
  // VP_2 is free: empty basis at any degree
  Presentation vp2 = build_presentation(Family::VP, 2);
  for (int d = 1; d <= 6; ++d) {
    IdealBasis b = ideal_basis(vp2, d);
    CHECK(b.rank() == 0);
    CHECK(b.quotient_rank() == (1L << (d + 1)) - 1);  // 2^{d+1} - 1
  }

  // <g1,g2 | [g1,g2]> at d = 2: quotient rank 6 (commutative monomial count)
  Presentation zz;
  zz.family = Family::VP;
  zz.n = 2;
  zz.gen_names = {"g1", "g2"};
  zz.relators = {{{0, -1}, {1, -1}, {0, 1}, {1, 1}}};
  IdealBasis b = ideal_basis(zz, 2);
  CHECK(b.quotient_rank() == 6);
}

TEST_CASE("ideal_basis quotient rank matches the dense oracle") {
  Presentation vp3 = build_presentation(Family::VP, 3);
  for (int d = 1; d <= 2; ++d) {
    IdealBasis b = ideal_basis(vp3, d);
    CHECK(b.quotient_rank() == dense_quotient_rank(vp3, d));
  }
  // frozen values from the same oracle
  CHECK(ideal_basis(vp3, 1).quotient_rank() == 7);
  CHECK(ideal_basis(vp3, 2).quotient_rank() == 37);
}

TEST_CASE("well-definedness: VP relators expand to zero deviation mod the ideal") {
  for (int n : {3, 4}) {
    Presentation vp = build_presentation(Family::VP, n);
    for (int d = 1; d <= 3; ++d) {
      IdealBasis basis = ideal_basis(vp, d);
      const MonomialIndexer& ix = basis.indexer();
      for (const Relator& r : vp.relators) {
        // split LHS RHS^{-1}: first half is LHS, inverse of second half is RHS
        Relator lhs(r.begin(), r.begin() + r.size() / 2);
        Relator rhs;
        for (auto it = r.rbegin(); it != r.rbegin() + r.size() / 2; ++it)
          rhs.push_back({it->first, -it->second});
        TruncatedSeries diff =
            add(magnus_expand(lhs, ix), scale(magnus_expand(rhs, ix), -1));
        CHECK(basis.reduces_to_zero(diff));
      }
    }
  }
}

TEST_CASE("universal_gpv examples") {
  GpvContext ctx(2, 1);
  GPVCoordinates g1 = universal_gpv(parse_word("s1", 2), ctx);
  CHECK(g1.perm == Perm::transposition(1, 2, 2));
  // coords of 1 - a12: basis empty, dense vector [1, -1, 0]
  CHECK(g1.coords == std::vector<Int>{1, -1, 0});

  GPVCoordinates g2 = universal_gpv(parse_word("r1", 2), ctx);
  CHECK(g2.perm == Perm::transposition(1, 2, 2));
  CHECK(g2.coords == std::vector<Int>{1, 0, 0});

  GPVCoordinates g3 = universal_gpv(BraidWord(2), ctx);
  CHECK(g3.perm.is_identity());
  CHECK(g3.coords == std::vector<Int>{1, 0, 0});
}

TEST_CASE("distinguish examples") {
  DistinguishVerdict v1 = distinguish(parse_word("s1", 2), parse_word("r1", 2), 1);
  CHECK(v1.distinguished);
  CHECK(v1.degree == 1);
  CHECK(v1.str() == "distinguished at degree 1");

  BraidWord w = parse_word("s1 r1 s1^-1", 2);
  DistinguishVerdict v2 = distinguish(w, w, 2);
  CHECK_FALSE(v2.distinguished);
  CHECK(v2.str() == "indistinguishable at degree <= 2");

  DistinguishVerdict v3 = distinguish(parse_word("s1", 2), parse_word("s1^-1", 2), 1);
  CHECK(v3.distinguished);
  CHECK(v3.degree == 1);

  CHECK_THROWS_AS(distinguish(parse_word("s1", 2), parse_word("s1", 3), 1),
                  std::invalid_argument);
}

TEST_CASE("jpower membership") {
  Combination c1 = parse_combination("1 * ( s1 ) - 1 * ( r1 )", 2);
  CHECK(jpower_membership(c1, 1));
  CHECK_FALSE(jpower_membership(c1, 2));

  Combination c2 = parse_combination("1 * ( s1 ) - 1 * ( s1^-1 )", 2);
  CHECK(jpower_membership(c2, 1));
  CHECK_FALSE(jpower_membership(c2, 2));  // degree-1 residual -a12 - a21

  // different permutation classes never cancel
  Combination c3 = parse_combination("1 * ( s1 ) - 1 * ( )", 2);
  CHECK_FALSE(jpower_membership(c3, 1));

  CHECK_THROWS_AS(jpower_membership(c1, 0), std::invalid_argument);
}

TEST_CASE("combination parsing errors") {
  CHECK_THROWS_AS(parse_combination("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_combination("2 ( s1 )", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_combination("1 * ( s1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_combination("1 * ( s1 ) 1 * ( r1 )", 2), std::invalid_argument);
  Combination ok = parse_combination("-2 * ( s1 s1 ) + 1 * ( )", 2);
  CHECK(ok.terms.size() == 2);
  CHECK(ok.terms[0].first == -2);
}

TEST_CASE("vanishing on J^{d+1} (randomized)") {
  std::mt19937_64 rng(606);
  for (int n : {2, 3}) {
    for (int d = 0; d <= 2; ++d) {
      GpvContext ctx(n, d);
      for (int trial = 0; trial < 25; ++trial) {
        // random product of d+1 factors (s_i - r_i), alternated with words
        std::vector<std::pair<Int, BraidWord>> terms = {{1, BraidWord(n)}};
        for (int f = 0; f <= d; ++f) {
          int i = 1 + static_cast<int>(rng() % (n - 1));
          BraidWord filler(n);
          int len = static_cast<int>(rng() % 4);
          for (int k = 0; k < len; ++k) {
            int kk = static_cast<int>(rng() % 3);
            int idx = 1 + static_cast<int>(rng() % (n - 1));
            filler.letters.push_back(kk == 2 ? Letter::rho(idx)
                                             : Letter::sigma(idx, kk == 0 ? 1 : -1));
          }
          std::vector<std::pair<Int, BraidWord>> next;
          for (auto& [c, w] : terms) {
            BraidWord ws = w;
            ws.letters.push_back(Letter::sigma(i));
            next.push_back({c, concat(ws, filler)});
            BraidWord wr = w;
            wr.letters.push_back(Letter::rho(i));
            next.push_back({-c, concat(wr, filler)});
          }
          terms = std::move(next);
        }
        // sum of coordinate vectors per permutation class reduces to zero
        std::map<Perm, std::vector<Int>> acc;
        for (auto& [c, w] : terms) {
          GPVCoordinates g = universal_gpv(w, ctx);
          auto [it, fresh] = acc.try_emplace(g.perm, g.coords.size());
          for (std::size_t k = 0; k < g.coords.size(); ++k) it->second[k] += c * g.coords[k];
        }
        for (auto& [p, v] : acc) {
          ctx.basis().reduce(v);
          bool zero = true;
          for (const Int& x : v) zero &= (x == 0);
          CHECK(zero);
        }
      }
    }
  }
}

TEST_CASE("invariance under relator insertion (randomized)") {
  std::mt19937_64 rng(909);
  for (int n : {2, 3, 4}) {
    Presentation vb = build_presentation(Family::VB, n);
    for (int d = 0; d <= 2; ++d) {
      GpvContext ctx(n, d);
      for (int trial = 0; trial < 112; ++trial) {
        BraidWord w(n);
        int len = static_cast<int>(rng() % 10);
        for (int k = 0; k < len; ++k) {
          int kk = static_cast<int>(rng() % 3);
          int idx = 1 + static_cast<int>(rng() % (n - 1));
          w.letters.push_back(kk == 2 ? Letter::rho(idx)
                                      : Letter::sigma(idx, kk == 0 ? 1 : -1));
        }
        GPVCoordinates base = universal_gpv(w, ctx);
        const Relator& rel = vb.relators[rng() % vb.relators.size()];
        BraidWord ins(n);
        for (auto [g, s] : rel) {
          int idx = std::stoi(vb.gen_names[g].substr(1));
          bool is_sigma = vb.gen_names[g][0] == 's';
          ins.letters.push_back(is_sigma ? Letter::sigma(idx, s) : Letter::rho(idx));
        }
        std::size_t at = w.letters.empty() ? 0 : rng() % (w.letters.size() + 1);
        BraidWord pert = w;
        pert.letters.insert(pert.letters.begin() + static_cast<long>(at), ins.letters.begin(),
                            ins.letters.end());
        CHECK(universal_gpv(pert, ctx) == base);
      }
    }
  }
}

TEST_CASE("conjugation compatibility under rho generators") {
  std::mt19937_64 rng(1111);
  int n = 3, d = 2;
  GpvContext ctx(n, d);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w(n);
    int len = static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) {
      int kk = static_cast<int>(rng() % 3);
      int idx = 1 + static_cast<int>(rng() % (n - 1));
      w.letters.push_back(kk == 2 ? Letter::rho(idx) : Letter::sigma(idx, kk == 0 ? 1 : -1));
    }
    for (int i = 1; i < n; ++i) {
      Perm p = Perm::transposition_adjacent(i, n);
      BraidWord conj(n);
      conj.letters.push_back(Letter::rho(i));
      conj = concat(concat(conj, w), conj);
      // index-permute the raw expansion of w's pure part, then reduce
      Perm q = nu(w);
      BraidWord pure = free_reduce(concat(w, invert(ctx.transversal().rep(q))));
      AlphabetWord lw = rewrite(pure, RewriteTarget::VP);
      TruncatedSeries s = ctx.expand(act(p, lw));
      std::vector<Int> expect = ctx.reduce(s);
      GPVCoordinates got = universal_gpv(conj, ctx);
      CHECK(got.perm == p * q * p);
      CHECK(got.coords == expect);
    }
  }
}

TEST_CASE("omega multiplicativity holds in degree-2 coordinates") {
  std::mt19937_64 rng(2222);
  int n = 3;
  GpvContext ctx(n, 2);
  Transversal tr(n);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord u(n), v(n);
    for (BraidWord* w : {&u, &v}) {
      int len = static_cast<int>(rng() % 8);
      for (int k = 0; k < len; ++k) {
        int kk = static_cast<int>(rng() % 3);
        int idx = 1 + static_cast<int>(rng() % (n - 1));
        w->letters.push_back(kk == 2 ? Letter::rho(idx) : Letter::sigma(idx, kk == 0 ? 1 : -1));
      }
    }
    SemidirectElt eu = omega(u, tr), ev = omega(v, tr);
    AlphabetWord prod = concat(eu.pure, act(eu.perm.inverse(), ev.pure));
    GPVCoordinates direct = universal_gpv(concat(u, v), ctx);
    CHECK(direct.perm == eu.perm * ev.perm);
    CHECK(direct.coords == ctx.reduce(ctx.expand(prod)));
  }
}

TEST_CASE("ideal basis rows avoid the constant coordinate") {
  IdealBasis b = ideal_basis(build_presentation(Family::VP, 3), 3);
  CHECK(b.rank() > 0);
  for (const auto& [pivot, row] : b.rows()) {
    CHECK(pivot != 0);
    for (const auto& [idx, v] : row) CHECK(idx != 0);
  }
}

TEST_CASE("naming consistency holds in degree-3 coordinates") {
  // expand(rewrite(w, VP)) and w agree under the universal invariant
  std::mt19937_64 rng(3333);
  int n = 3;
  GpvContext ctx(n, 3);
  Transversal tr(n);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord base(n);
    int len = static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) {
      int kk = static_cast<int>(rng() % 3);
      int idx = 1 + static_cast<int>(rng() % (n - 1));
      base.letters.push_back(kk == 2 ? Letter::rho(idx) : Letter::sigma(idx, kk == 0 ? 1 : -1));
    }
    BraidWord w = free_reduce(concat(base, invert(tr.rep(nu(base)))));  // kernel word
    BraidWord back = expand(rewrite(w, RewriteTarget::VP));
    CHECK(universal_gpv(back, ctx) == universal_gpv(w, ctx));
  }
}

TEST_CASE("basis cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "vbraid-test-cache";
  fs::remove_all(dir);
  fs::create_directories(dir);

  GpvContext cold(3, 2, dir.string());
  fs::path file = dir / "gpv-n3-d2.basis";
  REQUIRE(fs::exists(file));
  GpvContext warm(3, 2, dir.string());

  BraidWord w = parse_word("s1 s2^-1 r1", 3);
  CHECK(universal_gpv(w, cold) == universal_gpv(w, warm));

  // header mismatch invalidates the cache
  {
    std::ofstream out(file);
    out << "gpv-basis n=3 d=9 m=6\n";
  }
  GpvContext rebuilt(3, 2, dir.string());
  CHECK(universal_gpv(w, rebuilt) == universal_gpv(w, cold));
  // the stale file was replaced with a fresh one
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "gpv-basis n=3 d=2 m=6");
  fs::remove_all(dir);
}
