#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tw {

/// Bijection on {0..d-1}. Printed and serialized with 1-based labels.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<int> images);

  /// Transposition swapping 1-based sheets i and j.
  static Permutation transposition(std::size_t degree, int i, int j);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_transposition() const;
  /// 1-based pair moved by a transposition.
  std::pair<int, int> transposed_pair() const;

  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle lengths, sorted descending, fixed points included.
  std::vector<int> cycle_type() const;
  std::string to_string() const;

private:
  std::vector<int> images_;
};

/// Orbits of the group generated by gens on {0..d-1}; each orbit sorted,
/// orbits ordered by smallest element.
std::vector<std::vector<int>> orbits(std::size_t degree, const std::vector<Permutation>& gens);

bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace tw
