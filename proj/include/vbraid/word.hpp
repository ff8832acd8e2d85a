#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

enum class LetterKind { Sigma, Rho };

// One generator occurrence. rho letters are involutions and carry no sign:
// the constructor normalizes them to +1.
struct Letter {
  LetterKind kind;
  int index;  // 1-based strand position, 1 <= index <= n-1
  int sign;   // +1 or -1; always +1 for rho

  Letter(LetterKind k, int idx, int s) : kind(k), index(idx), sign(k == LetterKind::Rho ? 1 : s) {
    if (idx < 1) throw std::invalid_argument("letter index must be >= 1");
    if (s != 1 && s != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }

  static Letter sigma(int i, int s = 1) { return Letter(LetterKind::Sigma, i, s); }
  static Letter rho(int i) { return Letter(LetterKind::Rho, i, 1); }

  Letter inverse() const { return Letter(kind, index, -sign); }

  bool operator==(const Letter& o) const {
    return kind == o.kind && index == o.index && sign == o.sign;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }

  // cancels against a following letter under free reduction
  bool cancels(const Letter& next) const {
    if (kind != next.kind || index != next.index) return false;
    return kind == LetterKind::Rho || sign == -next.sign;
  }

  std::string str() const {
    std::string s = (kind == LetterKind::Sigma ? "s" : "r") + std::to_string(index);
    if (sign == -1) s += "^-1";
    return s;
  }
};

// A word in the sigma/rho generators on n strands. Immutable by convention:
// all operations return fresh words. The empty word is the identity.
struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;

  BraidWord() = default;
  explicit BraidWord(int n) : strands(n) {
    if (n < 2) throw std::invalid_argument("strand count must be >= 2");
  }
  BraidWord(int n, std::vector<Letter> ls) : strands(n), letters(std::move(ls)) {
    if (n < 2) throw std::invalid_argument("strand count must be >= 2");
    for (const Letter& l : letters) check_letter(l);
  }

  void check_letter(const Letter& l) const {
    if (l.index >= strands) throw std::invalid_argument("letter index out of range for strand count");
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }

  std::string str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) out << (i ? " " : "") << letters[i].str();
    return out.str();
  }
};

// Grammar: whitespace-separated tokens; "s<k>" / "s<k>^-1" / "r<k>";
// "r<k>^-1" is accepted and normalized to "r<k>". Empty string = identity.
inline BraidWord parse_word(std::string_view text, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be >= 2");
  BraidWord w(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'r'))
      throw std::invalid_argument("malformed token '" + tok + "'");
    LetterKind kind = tok[0] == 's' ? LetterKind::Sigma : LetterKind::Rho;
    int sign = 1;
    std::string_view body(tok);
    body.remove_prefix(1);
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body.remove_suffix(3);
    }
    int idx = 0;
    for (char c : body) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed token '" + tok + "'");
      idx = idx * 10 + (c - '0');
    }
    if (idx < 1 || idx > n - 1)
      throw std::invalid_argument("index out of range [1," + std::to_string(n - 1) + "] in '" + tok + "'");
    w.letters.push_back(Letter(kind, idx, sign));
  }
  return w;
}

// Free reduction: deletes adjacent s_i^+ s_i^-, s_i^- s_i^+ and r_i r_i pairs
// until none remain. Only free cancellation plus the rho involution; braid and
// mixed relations are never applied here.
inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out(w.strands);
  out.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().cancels(l))
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

inline BraidWord invert(const BraidWord& w) {
  BraidWord out(w.strands);
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

// Juxtaposition; free reduction is NOT applied (callers choose).
inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch in concat");
  BraidWord out(a.strands);
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

// Generic homomorphic evaluation: left-to-right product of generator images.
// images(kind, index) must be defined for every generator occurring in w;
// sign -1 uses inv.
template <class T, class Images, class Mul, class Inv>
T evaluate(const BraidWord& w, Images images, Mul mul, Inv inv, T id) {
  T acc = id;
  for (const Letter& l : w.letters) {
    T g = images(l.kind, l.index);
    acc = mul(acc, l.sign == 1 ? g : inv(g));
  }
  return acc;
}

}  // namespace vbraid
