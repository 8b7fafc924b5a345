#include "tw/smith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace tw {

namespace {

using Big = boost::multiprecision::cpp_int;

class BigMatrix {
public:
  BigMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit BigMatrix(const IntMatrix& a) : BigMatrix(a.rows(), a.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = a(i, j);
  }
  static BigMatrix identity(std::size_t n) {
    BigMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Big& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Big& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_, cols_;
  std::vector<Big> data_;
};

std::int64_t narrow(const Big& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer overflow in Smith normal form");
  return static_cast<std::int64_t>(v);
}

IntMatrix narrow(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = narrow(m(i, j));
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix product");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix product");
  return r;
}

// row_dst -= q * row_src
void row_axpy(BigMatrix& m, std::size_t dst, std::size_t src, const Big& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(BigMatrix& m, std::size_t dst, std::size_t src, const Big& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

struct BigSmith {
  BigMatrix u, d, v;
};

BigSmith smith_big(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  BigSmith s{BigMatrix::identity(m), BigMatrix(a), BigMatrix::identity(n)};
  auto& [u, d, v] = s;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Move the smallest nonzero entry of the trailing block (or of the
    // pivot row and column) to the pivot.
    auto bring_min_to_pivot = [&](bool whole_block) -> bool {
      std::size_t bi = m, bj = n;
      Big best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole_block && i != t && j != t) continue;
          const Big val = abs(d(i, j));
          if (val != 0 && (best == 0 || val < best)) {
            best = val;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) return false;
      swap_rows(d, t, bi);
      swap_rows(u, t, bi);
      swap_cols(d, t, bj);
      swap_cols(v, t, bj);
      return true;
    };

    if (!bring_min_to_pivot(true)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const Big q = d(i, t) / d(t, t);
        if (q != 0) {
          row_axpy(d, i, t, q);
          row_axpy(u, i, t, q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const Big q = d(t, j) / d(t, t);
        if (q != 0) {
          col_axpy(d, j, t, q);
          col_axpy(v, j, t, q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(false);
        continue;
      }
      // Enforce the divisibility chain.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(u, t, i, -1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
  return s;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const auto s = smith_big(a);
  SmithDecomposition out;
  const std::size_t steps = std::min(a.rows(), a.cols());
  out.invariant_factors.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.invariant_factors[i] = narrow(s.d(i, i));
    if (s.d(i, i) != 0) ++out.rank;
  }
  out.left = narrow(s.u);
  out.diagonal = narrow(s.d);
  out.right = narrow(s.v);
  return out;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (auto t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& a) {
  AbelianGroup g;
  const auto s = smith_big(a);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (s.d(i, i) != 0) ++rank;
    if (s.d(i, i) > 1) g.torsion.push_back(narrow(s.d(i, i)));
  }
  g.free_rank = static_cast<int>(a.rows() - rank);
  return g;
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a,
                                                       std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const auto s = smith_big(a);
  std::vector<Big> c(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) c[i] += s.u(i, k) * b[k];

  std::vector<Big> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Big di = i < std::min(a.rows(), a.cols()) ? s.d(i, i) : Big(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  std::vector<std::int64_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Big xi = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) xi += s.v(i, k) * y[k];
    x[i] = narrow(xi);
  }
  return x;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace tw
