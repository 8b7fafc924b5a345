#include "tw/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tw {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::transposition(std::size_t degree, int i, int j) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > degree ||
      static_cast<std::size_t>(j) > degree || i == j) {
    throw std::invalid_argument("transposition: sheets must be distinct labels in 1..d");
  }
  Permutation p(degree);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      ++moved;
      if (images_[images_[i]] != static_cast<int>(i)) return false;
    }
  }
  return moved == 2;
}

std::pair<int, int> Permutation::transposed_pair() const {
  if (!is_transposition()) throw std::logic_error("not a transposition");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return {static_cast<int>(i) + 1, images_[i] + 1};
  }
  return {0, 0};
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation degree mismatch");
  std::vector<int> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << "(";
    bool first = true;
    for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << j + 1;
      first = false;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

std::vector<std::vector<int>> orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("orbits: generator degree mismatch");
    for (std::size_t i = 0; i < degree; ++i) {
      const int a = find(static_cast<int>(i));
      const int b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(degree, -1);
  for (std::size_t i = 0; i < degree; ++i) {
    const int r = find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<int>(i));
  }
  return out;
}

bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens) {
  return orbits(degree, gens).size() <= 1;
}

}  // namespace tw
