#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/perm.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

enum class Alphabet { Lambda, X };

// Schreier generator name: lambda_{i,j} or x_{i,j} with i != j.
struct PairLetter {
  Alphabet alphabet;
  int i, j;  // 1-based strand indices, distinct
  int sign;  // +1 or -1

  PairLetter(Alphabet a, int i_, int j_, int s) : alphabet(a), i(i_), j(j_), sign(s) {
    if (i < 1 || j < 1) throw std::invalid_argument("pair letter index must be >= 1");
    if (i == j) throw std::invalid_argument("pair letter indices must be distinct");
    if (s != 1 && s != -1) throw std::invalid_argument("pair letter sign must be +1 or -1");
  }

  static PairLetter lambda(int i, int j, int s = 1) { return PairLetter(Alphabet::Lambda, i, j, s); }
  static PairLetter x(int i, int j, int s = 1) { return PairLetter(Alphabet::X, i, j, s); }

  PairLetter inverse() const { return PairLetter(alphabet, i, j, -sign); }

  bool operator==(const PairLetter& o) const {
    return alphabet == o.alphabet && i == o.i && j == o.j && sign == o.sign;
  }
  bool operator!=(const PairLetter& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = (alphabet == Alphabet::Lambda ? "l[" : "x[") + std::to_string(i) + "," +
                    std::to_string(j) + "]";
    if (sign == -1) s += "^-1";
    return s;
  }
};

// Word over one alphabet of pair letters; carrier for elements of VP_n / H_n.
struct AlphabetWord {
  Alphabet alphabet = Alphabet::Lambda;
  int strands = 2;
  std::vector<PairLetter> letters;

  AlphabetWord() = default;
  AlphabetWord(Alphabet a, int n) : alphabet(a), strands(n) {
    if (n < 2) throw std::invalid_argument("strand count must be >= 2");
  }
  AlphabetWord(Alphabet a, int n, std::vector<PairLetter> ls)
      : alphabet(a), strands(n), letters(std::move(ls)) {
    for (const PairLetter& l : letters) check_letter(l);
  }

  void check_letter(const PairLetter& l) const {
    if (l.alphabet != alphabet) throw std::invalid_argument("mixed alphabets in word");
    if (l.i > strands || l.j > strands)
      throw std::invalid_argument("pair letter index out of range for strand count");
  }

  void push(const PairLetter& l) {
    check_letter(l);
    letters.push_back(l);
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const AlphabetWord& o) const {
    return alphabet == o.alphabet && strands == o.strands && letters == o.letters;
  }

  std::string str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) out << (i ? " " : "") << letters[i].str();
    return out.str();
  }
};

inline AlphabetWord invert(const AlphabetWord& w) {
  AlphabetWord out(w.alphabet, w.strands);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

inline AlphabetWord concat(const AlphabetWord& a, const AlphabetWord& b) {
  if (a.alphabet != b.alphabet || a.strands != b.strands)
    throw std::invalid_argument("alphabet/strand mismatch in concat");
  AlphabetWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline AlphabetWord free_reduce(const AlphabetWord& w) {
  AlphabetWord out(w.alphabet, w.strands);
  for (const PairLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().inverse() == l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

// Grammar: "l[i,j]", "l[i,j]^-1", "x[i,j]", "x[i,j]^-1", whitespace-separated.
inline AlphabetWord parse_alphabet_word(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<PairLetter> ls;
  Alphabet alpha = Alphabet::Lambda;
  bool seen = false;
  while (in >> tok) {
    if (tok.size() < 6 || (tok[0] != 'l' && tok[0] != 'x') || tok[1] != '[')
      throw std::invalid_argument("malformed token '" + tok + "'");
    Alphabet a = tok[0] == 'l' ? Alphabet::Lambda : Alphabet::X;
    if (seen && a != alpha) throw std::invalid_argument("mixed alphabets in word");
    alpha = a;
    seen = true;
    int sign = 1;
    std::string body = tok.substr(2);
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body = body.substr(0, body.size() - 3);
    }
    if (body.empty() || body.back() != ']') throw std::invalid_argument("malformed token '" + tok + "'");
    body.pop_back();
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("malformed token '" + tok + "'");
    int i = 0, j = 0;
    try {
      i = std::stoi(body.substr(0, comma));
      j = std::stoi(body.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed token '" + tok + "'");
    }
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("indices out of range in '" + tok + "'");
    ls.push_back(PairLetter(alpha, i, j, sign));
  }
  AlphabetWord w(alpha, n);
  for (const PairLetter& l : ls) w.push(l);
  return w;
}

// S_n action by permutation of indices; sign preserved.
inline PairLetter act(const Perm& p, const PairLetter& l) {
  return PairLetter(l.alphabet, p.apply(l.i), p.apply(l.j), l.sign);
}

inline AlphabetWord act(const Perm& p, const AlphabetWord& w) {
  AlphabetWord out(w.alphabet, w.strands);
  for (const PairLetter& l : w.letters) out.push(act(p, l));
  return out;
}

// The forgetting map on lambda words: deletes letters touching strand n,
// reindexes nothing (remaining indices are < n already).
inline AlphabetWord forget(const AlphabetWord& w, int n) {
  if (w.alphabet != Alphabet::Lambda) throw std::invalid_argument("forget requires the lambda alphabet");
  if (w.strands != n || n < 3) throw std::invalid_argument("forget requires matching n >= 3");
  AlphabetWord out(Alphabet::Lambda, n - 1);
  for (const PairLetter& l : w.letters)
    if (l.i != n && l.j != n) out.push(l);
  return out;
}

// Defining braid word of a Schreier generator.
//   x_{i,i+1} = s_i                x_{i+1,i} = r_i s_i r_i
//   x_{i,j}   = r_{j-1}..r_{i+1} s_i r_{i+1}..r_{j-1}              (i < j-1)
//   x_{j,i}   = r_{j-1}..r_{i+1} r_i s_i r_i r_{i+1}..r_{j-1}      (i < j-1)
//   lambda_{i,i+1} = r_i s_i^-1    lambda_{i+1,i} = s_i^-1 r_i
//   with the same r-conjugation pattern for distant indices.
inline BraidWord expand(const PairLetter& l, int n) {
  if (l.i > n || l.j > n) throw std::invalid_argument("pair letter out of range");
  int a = std::min(l.i, l.j), b = std::max(l.i, l.j);
  bool ascending = l.i < l.j;  // first index smaller
  BraidWord core(n);
  if (l.alphabet == Alphabet::X) {
    if (ascending)
      core.letters = {Letter::sigma(a)};
    else
      core.letters = {Letter::rho(a), Letter::sigma(a), Letter::rho(a)};
  } else {
    if (ascending)
      core.letters = {Letter::rho(a), Letter::sigma(a, -1)};
    else
      core.letters = {Letter::sigma(a, -1), Letter::rho(a)};
  }
  BraidWord out(n);
  for (int k = b - 1; k >= a + 1; --k) out.letters.push_back(Letter::rho(k));
  out.letters.insert(out.letters.end(), core.letters.begin(), core.letters.end());
  for (int k = a + 1; k <= b - 1; ++k) out.letters.push_back(Letter::rho(k));
  return l.sign == 1 ? out : invert(out);
}

inline BraidWord expand(const AlphabetWord& w) {
  BraidWord out(w.strands);
  for (const PairLetter& l : w.letters) {
    BraidWord e = expand(l, w.strands);
    out.letters.insert(out.letters.end(), e.letters.begin(), e.letters.end());
  }
  return out;
}

}  // namespace vbraid
