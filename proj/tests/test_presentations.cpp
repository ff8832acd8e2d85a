#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "vbraid/melement.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/projections.hpp"

using namespace vbraid;

namespace {

HomReport check_in_sn(const Presentation& p, const std::vector<Perm>& images, int n) {
  return check_homomorphism<Perm>(
      p, images, [](const Perm& a, const Perm& b) { return a * b; },
      [](const Perm& a) { return a.inverse(); },
      [](const Perm& a, const Perm& b) { return a == b; }, Perm::identity(n));
}

HomReport check_in_mn(const Presentation& p, const std::vector<MElement>& images, int n) {
  return check_homomorphism<MElement>(
      p, images, [](const MElement& a, const MElement& b) { return a * b; },
      [](const MElement& a) { return a.inverse(); },
      [](const MElement& a, const MElement& b) { return a == b; }, MElement::identity(n));
}

std::vector<MElement> chi_images(const Presentation& p, int n) {
  std::vector<MElement> images;
  for (const std::string& g : p.gen_names) {
    int idx = std::stoi(g.substr(1));
    images.push_back(g[0] == 's' ? MElement::s(idx, n) : MElement::t(idx, n));
  }
  return images;
}

}  // namespace

TEST_CASE("relator counts match closed forms") {
  for (int n = 2; n <= 6; ++n) {
    Presentation vp = build_presentation(Family::VP, n);
    CHECK(vp.generators() == n * (n - 1));
    std::size_t comm = static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 2;
    std::size_t mixed = static_cast<std::size_t>(n) * (n - 1) * (n - 2);
    CHECK(vp.relators.size() == comm + mixed);

    Presentation h = build_presentation(Family::H, n);
    CHECK(h.generators() == n * (n - 1));
    CHECK(h.relators.size() == comm + mixed);
  }
}

TEST_CASE("small presentation instances") {
  Presentation vp3 = build_presentation(Family::VP, 3);
  CHECK(vp3.generators() == 6);
  CHECK(vp3.relators.size() == 6);

  Presentation vp2 = build_presentation(Family::VP, 2);
  CHECK(vp2.generators() == 2);
  CHECK(vp2.relators.empty());

  Presentation vb3 = build_presentation(Family::VB, 3);
  CHECK(vb3.generators() == 4);
  CHECK(vb3.relators.size() == 5);  // 1 braid + 1 rho-braid + 2 involutions + 1 mixed

  CHECK_THROWS_AS(build_presentation(Family::VB, 1), std::invalid_argument);
}

TEST_CASE("VP generator order mirrors the basic-commutator order") {
  Presentation vp = build_presentation(Family::VP, 3);
  std::vector<std::string> want = {"l[1,2]", "l[2,1]", "l[1,3]", "l[2,3]", "l[3,1]", "l[3,2]"};
  CHECK(vp.gen_names == want);
}

TEST_CASE("presentation text format") {
  Presentation vb2 = build_presentation(Family::VB, 2);
  CHECK(vb2.str() == "group VB n=2\ngen s1\ngen r1\nrel r1 r1\n");

  Presentation vp3 = build_presentation(Family::VP, 3);
  // first relator: (k,i,j) = (1,2,3), LHS l[1,2] l[1,3] l[2,3]
  CHECK(vp3.relator_string(vp3.relators[0]) ==
        "l[1,2] l[1,3] l[2,3] l[1,2]^-1 l[1,3]^-1 l[2,3]^-1");
}

TEST_CASE("chi kills all VB relators in concrete M_n, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    Presentation vb = build_presentation(Family::VB, n);
    CHECK(check_in_mn(vb, chi_images(vb, n), n).ok);
  }
}

TEST_CASE("a wrong assignment fails the braid relator") {
  Presentation vb = build_presentation(Family::VB, 3);
  std::vector<Perm> images;
  for (const std::string& g : vb.gen_names) {
    int idx = std::stoi(g.substr(1));
    if (g == "s1")
      images.push_back(Perm::transposition(1, 2, 3));
    else if (g[0] == 's')
      images.push_back(Perm::identity(3));
    else
      images.push_back(Perm::transposition_adjacent(idx, 3));
  }
  HomReport rep = check_in_sn(vb, images, 3);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.failing.size() >= 1);
  CHECK(rep.failing[0] == 0);  // the sigma braid relator
}

TEST_CASE("epsilon kills all H relators in S_n, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    Presentation h = build_presentation(Family::H, n);
    std::vector<Perm> images;
    for (auto [i, j] : h.gen_pairs)
      images.push_back(epsilon_image(PairLetter::x(i, j), n));
    CHECK(check_in_sn(h, images, n).ok);
  }
}

TEST_CASE("all nine M_n relation families hold in the concrete model, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    Presentation m = build_presentation(Family::M, n);
    CHECK(check_in_mn(m, chi_images(m, n), n).ok);
  }
}

TEST_CASE("S_n presentation holds under rho images") {
  for (int n = 2; n <= 6; ++n) {
    Presentation s = build_presentation(Family::S, n);
    std::vector<Perm> images;
    for (int i = 1; i < n; ++i) images.push_back(Perm::transposition_adjacent(i, n));
    CHECK(check_in_sn(s, images, n).ok);
  }
}

TEST_CASE("chi-image subgroup has order (n!)^2 for n <= 3") {
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
        for (const MElement& g : gens) {
          MElement prod = e * g;
          if (closure.insert(prod).second) next.push_back(prod);
        }
      frontier = std::move(next);
    }
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(closure.size() == fact * fact);
  }
}

TEST_CASE("split_components") {
  Presentation h3 = build_presentation(Family::H, 3);
  ComponentSplit split = split_components(h3);
  REQUIRE(split.parts.size() == 2);
  auto names = [&](const std::vector<int>& part) {
    std::set<std::string> s;
    for (int g : part) s.insert(h3.gen_names[g]);
    return s;
  };
  std::set<std::string> g1 = {"x[1,2]", "x[2,3]", "x[3,1]"};
  std::set<std::string> g2 = {"x[1,3]", "x[3,2]", "x[2,1]"};
  bool forward = names(split.parts[0]) == g1 && names(split.parts[1]) == g2;
  bool backward = names(split.parts[0]) == g2 && names(split.parts[1]) == g1;
  CHECK((forward || backward));
  CHECK(split.part_relators[0].size() + split.part_relators[1].size() == h3.relators.size());

  // VP_2 splits into two singletons (no relators)
  ComponentSplit vp2 = split_components(build_presentation(Family::VP, 2));
  CHECK(vp2.parts.size() == 2);

  // VB_3 is connected through the mixed relator
  ComponentSplit vb3 = split_components(build_presentation(Family::VB, 3));
  CHECK(vb3.parts.size() == 1);
}

TEST_CASE("check_homomorphism rejects wrong image count") {
  Presentation vb = build_presentation(Family::VB, 3);
  std::vector<Perm> too_few = {Perm::identity(3)};
  CHECK_THROWS_AS(check_in_sn(vb, too_few, 3), std::invalid_argument);
}
