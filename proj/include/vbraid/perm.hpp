#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbraid {

// Permutation of {1..n}. Composition is left-to-right throughout the
// library: (p * q)(i) = q(p(i)), matching word evaluation order.
class Perm {
public:
  Perm() = default;

  static Perm identity(int n) {
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 1);
    return p;
  }

  // adjacent transposition (i, i+1), 1 <= i <= n-1
  static Perm transposition_adjacent(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  static Perm transposition(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition out of range");
    Perm p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  static Perm from_images(std::vector<int> images) {
    Perm p;
    p.img_ = std::move(images);
    std::vector<char> seen(p.img_.size(), 0);
    for (int v : p.img_) {
      if (v < 1 || v > static_cast<int>(p.img_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = 1;
    }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i - 1]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  Perm operator*(const Perm& q) const {  // apply *this first, then q
    if (size() != q.size()) throw std::invalid_argument("size mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i) r.img_[i] = q.img_[img_[i] - 1];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i) r.img_[img_[i] - 1] = i + 1;
    return r;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // cycle notation, e.g. "(1 3)(2 4)"; the identity prints as "identity"
  std::string cycle_string() const {
    std::ostringstream out;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int i = 1; i <= size(); ++i) {
      if (done[i - 1] || apply(i) == i) continue;
      any = true;
      out << '(' << i;
      done[i - 1] = 1;
      for (int j = apply(i); j != i; j = apply(j)) {
        out << ' ' << j;
        done[j - 1] = 1;
      }
      out << ')';
    }
    return any ? out.str() : "identity";
  }

  // one-line notation "[3 4 1 2]"
  std::string oneline_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < size(); ++i) out << (i ? " " : "") << img_[i];
    out << ']';
    return out.str();
  }

  std::size_t hash() const {
    std::size_t h = img_.size();
    for (int v : img_) h = h * 131 + static_cast<std::size_t>(v);
    return h;
  }

private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace vbraid
