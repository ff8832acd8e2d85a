#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vbraid {

enum class Family { VB, VP, H, M, S };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::VB: return "VB";
    case Family::VP: return "VP";
    case Family::H: return "H";
    case Family::M: return "M";
    case Family::S: return "S";
  }
  throw std::invalid_argument("unknown family");
}

inline Family family_from_string(const std::string& s) {
  if (s == "VB" || s == "vb") return Family::VB;
  if (s == "VP" || s == "vp") return Family::VP;
  if (s == "H" || s == "h") return Family::H;
  if (s == "M" || s == "m") return Family::M;
  if (s == "S" || s == "s") return Family::S;
  throw std::invalid_argument("unknown family '" + s + "'");
}

// Relator letter: generator index into gen_names, with sign.
using GenLetter = std::pair<int, int>;
using Relator = std::vector<GenLetter>;

struct Presentation {
  Family family;
  int n = 2;
  std::vector<std::string> gen_names;
  // for VP/H generators, the (i,j) index pair; empty otherwise
  std::vector<std::pair<int, int>> gen_pairs;
  std::vector<Relator> relators;

  int generators() const { return static_cast<int>(gen_names.size()); }

  int gen_index(const std::string& name) const {
    for (int i = 0; i < generators(); ++i)
      if (gen_names[i] == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "'");
  }

  std::string relator_string(const Relator& r) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? " " : "") << gen_names[r[i].first];
      if (r[i].second == -1) out << "^-1";
    }
    return out.str();
  }

  // text format: "group <family> n=<n>", then gen lines, then rel lines
  std::string str() const {
    std::ostringstream out;
    out << "group " << family_name(family) << " n=" << n << "\n";
    for (const std::string& g : gen_names) out << "gen " << g << "\n";
    for (const Relator& r : relators) out << "rel " << relator_string(r) << "\n";
    return out.str();
  }
};

namespace detail {

inline Relator with_inverse_of(Relator lhs, const Relator& rhs) {
  for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) lhs.push_back({it->first, -it->second});
  return lhs;
}

// generator order for VP/H: for m = 2..n first (1,m)..(m-1,m) then (m,1)..(m,m-1);
// this mirrors the basic-commutator order used for the class-2 quotients.
inline std::vector<std::pair<int, int>> pair_generator_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= n; ++m) {
    for (int i = 1; i < m; ++i) out.push_back({i, m});
    for (int i = 1; i < m; ++i) out.push_back({m, i});
  }
  return out;
}

inline void pair_family_relators(Presentation& p, bool braid_style) {
  std::map<std::pair<int, int>, int> gi;
  for (int k = 0; k < p.generators(); ++k) gi[p.gen_pairs[k]] = k;
  int n = p.n;
  // commuting family: ordered pairs (i,j) < (k,l) lexicographically, all
  // four indices distinct
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) pairs.push_back({i, j});
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i == k || i == l || j == k || j == l) continue;
      p.relators.push_back({{gi[{i, j}], 1}, {gi[{k, l}], 1}, {gi[{i, j}], -1}, {gi[{k, l}], -1}});
    }
  // three-index family, over ordered distinct triples:
  //   VP (braid_style = false), triple (k,i,j):
  //     l[k,i] l[k,j] l[i,j] = l[i,j] l[k,j] l[k,i]
  //   H  (braid_style = true), triple (i,k,j):
  //     x[i,k] x[k,j] x[i,k] = x[k,j] x[i,k] x[k,j]
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || a == c || b == c) continue;
        Relator lhs, rhs;
        if (braid_style) {
          int u = gi[{a, b}], v = gi[{b, c}];
          lhs = {{u, 1}, {v, 1}, {u, 1}};
          rhs = {{v, 1}, {u, 1}, {v, 1}};
        } else {
          lhs = {{gi[{a, b}], 1}, {gi[{a, c}], 1}, {gi[{b, c}], 1}};
          rhs = {{gi[{b, c}], 1}, {gi[{a, c}], 1}, {gi[{a, b}], 1}};
        }
        p.relators.push_back(with_inverse_of(lhs, rhs));
      }
}

}  // namespace detail

// The four presentations of the artifact plus S_n, parametric in n.
// Relators are stored as single words LHS·RHS^{-1}.
inline Presentation build_presentation(Family f, int n) {
  if (n < 2) throw std::invalid_argument("presentation requires n >= 2");
  Presentation p;
  p.family = f;
  p.n = n;
  auto S = [&](int i) { return i - 1; };          // sigma block first
  auto R = [&](int i) { return (n - 1) + i - 1; };  // rho/t block second
  switch (f) {
    case Family::VB: {
      for (int i = 1; i < n; ++i) p.gen_names.push_back("s" + std::to_string(i));
      for (int i = 1; i < n; ++i) p.gen_names.push_back("r" + std::to_string(i));
      for (int i = 1; i <= n - 2; ++i)  // (1) braid sigma
        p.relators.push_back(detail::with_inverse_of(
            {{S(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}}));
      for (int i = 1; i <= n - 1; ++i)  // (2) commuting sigma
        for (int j = i + 2; j <= n - 1; ++j)
          p.relators.push_back({{S(i), 1}, {S(j), 1}, {S(i), -1}, {S(j), -1}});
      for (int i = 1; i <= n - 2; ++i)  // (3) braid rho
        p.relators.push_back(detail::with_inverse_of(
            {{R(i), 1}, {R(i + 1), 1}, {R(i), 1}}, {{R(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}}));
      for (int i = 1; i <= n - 1; ++i)  // (4) commuting rho
        for (int j = i + 2; j <= n - 1; ++j)
          p.relators.push_back({{R(i), 1}, {R(j), 1}, {R(i), -1}, {R(j), -1}});
      for (int i = 1; i <= n - 1; ++i)  // (5) involutions
        p.relators.push_back({{R(i), 1}, {R(i), 1}});
      for (int i = 1; i <= n - 1; ++i)  // (6) mixed commuting, all ordered pairs
        for (int j = 1; j <= n - 1; ++j)
          if (j >= i + 2 || j <= i - 2)
            p.relators.push_back({{S(i), 1}, {R(j), 1}, {S(i), -1}, {R(j), -1}});
      for (int i = 1; i <= n - 2; ++i)  // (7) mixed braid r_i r_{i+1} s_i = s_{i+1} r_i r_{i+1}
        p.relators.push_back(detail::with_inverse_of(
            {{R(i), 1}, {R(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}}));
      break;
    }
    case Family::VP:
    case Family::H: {
      p.gen_pairs = detail::pair_generator_order(n);
      for (auto [i, j] : p.gen_pairs)
        p.gen_names.push_back((f == Family::VP ? "l[" : "x[") + std::to_string(i) + "," +
                              std::to_string(j) + "]");
      detail::pair_family_relators(p, f == Family::H);
      break;
    }
    case Family::M: {
      for (int i = 1; i < n; ++i) p.gen_names.push_back("s" + std::to_string(i));
      for (int i = 1; i < n; ++i) p.gen_names.push_back("t" + std::to_string(i));
      auto T = R;
      for (int i = 1; i <= n - 1; ++i)  // (1) involutions t_i, s_i
        p.relators.push_back({{T(i), 1}, {T(i), 1}});
      for (int i = 1; i <= n - 1; ++i)
        p.relators.push_back({{S(i), 1}, {S(i), 1}});
      for (int i = 1; i <= n - 1; ++i)  // (2) commuting s
        for (int j = i + 2; j <= n - 1; ++j)
          p.relators.push_back({{S(i), 1}, {S(j), 1}, {S(i), -1}, {S(j), -1}});
      for (int i = 1; i <= n - 2; ++i)  // (3) braid s
        p.relators.push_back(detail::with_inverse_of(
            {{S(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}}));
      for (int i = 1; i <= n - 1; ++i)  // (4) commuting t
        for (int j = i + 2; j <= n - 1; ++j)
          p.relators.push_back({{T(i), 1}, {T(j), 1}, {T(i), -1}, {T(j), -1}});
      for (int i = 1; i <= n - 2; ++i)  // (5) braid t
        p.relators.push_back(detail::with_inverse_of(
            {{T(i), 1}, {T(i + 1), 1}, {T(i), 1}}, {{T(i + 1), 1}, {T(i), 1}, {T(i + 1), 1}}));
      for (int i = 1; i <= n - 1; ++i)  // (6) t_i s_j t_i = s_j, |i-j| >= 2
        for (int j = 1; j <= n - 1; ++j)
          if (j >= i + 2 || j <= i - 2)
            p.relators.push_back({{T(i), 1}, {S(j), 1}, {T(i), 1}, {S(j), -1}});
      for (int i = 1; i <= n - 1; ++i)  // (7) t_i s_i t_i = s_i
        p.relators.push_back({{T(i), 1}, {S(i), 1}, {T(i), 1}, {S(i), -1}});
      for (int i = 1; i <= n - 2; ++i)  // (8) t_{i+1} s_i t_{i+1} = s_{i+1} s_i s_{i+1}
        p.relators.push_back(detail::with_inverse_of(
            {{T(i + 1), 1}, {S(i), 1}, {T(i + 1), 1}},
            {{S(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}}));
      for (int i = 2; i <= n - 1; ++i)  // (9) t_{i-1} s_i t_{i-1} = s_{i-1} s_i s_{i-1}
        p.relators.push_back(detail::with_inverse_of(
            {{T(i - 1), 1}, {S(i), 1}, {T(i - 1), 1}},
            {{S(i - 1), 1}, {S(i), 1}, {S(i - 1), 1}}));
      break;
    }
    case Family::S: {
      for (int i = 1; i < n; ++i) p.gen_names.push_back("r" + std::to_string(i));
      auto G = S;
      for (int i = 1; i <= n - 2; ++i)
        p.relators.push_back(detail::with_inverse_of(
            {{G(i), 1}, {G(i + 1), 1}, {G(i), 1}}, {{G(i + 1), 1}, {G(i), 1}, {G(i + 1), 1}}));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
          p.relators.push_back({{G(i), 1}, {G(j), 1}, {G(i), -1}, {G(j), -1}});
      for (int i = 1; i <= n - 1; ++i) p.relators.push_back({{G(i), 1}, {G(i), 1}});
      break;
    }
  }
  return p;
}

struct HomReport {
  bool ok = true;
  std::vector<std::size_t> failing;  // relator indices
};

// Certifies that generator images kill every relator in a concrete target
// group; lists offenders otherwise.
template <class Elt, class Mul, class Inv, class Eq>
HomReport check_homomorphism(const Presentation& p, const std::vector<Elt>& images, Mul mul,
                             Inv inv, Eq eq, Elt id) {
  if (static_cast<int>(images.size()) != p.generators())
    throw std::invalid_argument("image count does not match generator count");
  HomReport rep;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    Elt acc = id;
    for (auto [g, s] : p.relators[r]) acc = mul(acc, s == 1 ? images[g] : inv(images[g]));
    if (!eq(acc, id)) {
      rep.ok = false;
      rep.failing.push_back(r);
    }
  }
  return rep;
}

struct ComponentSplit {
  std::vector<std::vector<int>> parts;                 // generator indices, each sorted
  std::vector<std::vector<std::size_t>> part_relators; // relator indices per part
};

// Finest partition of the generators such that every relator's support lies
// inside one part.
inline ComponentSplit split_components(const Presentation& p) {
  std::vector<int> parent(p.generators());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Relator& r : p.relators)
    for (std::size_t k = 1; k < r.size(); ++k) parent[find(r[k].first)] = find(r[0].first);
  std::map<int, int> roots;
  ComponentSplit out;
  for (int g = 0; g < p.generators(); ++g) {
    int root = find(g);
    auto [it, fresh] = roots.try_emplace(root, static_cast<int>(out.parts.size()));
    if (fresh) {
      out.parts.emplace_back();
      out.part_relators.emplace_back();
    }
    out.parts[it->second].push_back(g);
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (!p.relators[r].empty())
      out.part_relators[roots.at(find(p.relators[r][0].first))].push_back(r);
  return out;
}

}  // namespace vbraid
