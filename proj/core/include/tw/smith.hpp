#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tw {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
/// dividing the next, all non-negative.
struct SmithDecomposition {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D
  IntMatrix right;     // V
  std::vector<std::int64_t> invariant_factors;  // min(rows, cols) diagonal entries
  std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // each > 1, divisibility chain

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of a (rows x cols) matrix viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& a);

/// Integer solution x of A x = b, if one exists.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a,
                                                       std::span<const std::int64_t> b);

std::int64_t gcd_of(std::span<const std::int64_t> v);

}  // namespace tw
