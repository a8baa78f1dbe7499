#ifndef RANKFORGE_INT_MATRIX_HPP_
#define RANKFORGE_INT_MATRIX_HPP_

// Dense matrices of arbitrary-precision integers and the Smith normal form.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace rankforge {

  using BigInt = boost::multiprecision::cpp_int;

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
      _rows = rows.size();
      _cols = _rows == 0 ? 0 : rows.begin()->size();
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw InvalidInput("ragged matrix literal");
        }
        for (auto x : r) {
          _data.emplace_back(x);
        }
      }
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    // Columns given as vectors of equal length `rows`.
    static IntMatrix from_columns(std::size_t                             rows,
                                  std::vector<std::vector<BigInt>> const& cols) {
      IntMatrix m(rows, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) {
          throw InvalidInput("column " + std::to_string(j) + " has length "
                             + std::to_string(cols[j].size()) + ", expected "
                             + std::to_string(rows));
        }
        for (std::size_t i = 0; i < rows; ++i) {
          m(i, j) = cols[j][i];
        }
      }
      return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }

    BigInt& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    [[nodiscard]] std::vector<BigInt> column(std::size_t j) const {
      std::vector<BigInt> out;
      out.reserve(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        out.push_back((*this)(i, j));
      }
      return out;
    }

    [[nodiscard]] bool is_zero() const {
      return std::all_of(
          _data.begin(), _data.end(), [](BigInt const& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }
    void swap_cols(std::size_t a, std::size_t b) {
      for (std::size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, BigInt const& k) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(dst, j) += k * (*this)(src, j);
      }
    }
    void add_col(std::size_t dst, std::size_t src, BigInt const& k) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, dst) += k * (*this)(i, src);
      }
    }
    void negate_row(std::size_t r) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(r, j) = -(*this)(r, j);
      }
    }

    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<BigInt> _data;
  };

  [[nodiscard]] inline IntMatrix operator*(IntMatrix const& a,
                                           IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InvalidInput("matrix dimensions do not match for product");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  // Fraction-free Gaussian elimination (Bareiss); exact for square matrices.
  [[nodiscard]] inline BigInt determinant(IntMatrix m) {
    if (m.rows() != m.cols()) {
      throw InvalidInput("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        m.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  struct SnfResult {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal with d_1 | d_2 | ...
    IntMatrix V;  // cols x cols, unimodular

    [[nodiscard]] std::vector<BigInt> diagonal() const {
      std::vector<BigInt> out;
      for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
        out.push_back(D(i, i));
      }
      return out;
    }
  };

  // U * A * V = D. Pivots on the entry of least absolute value to keep
  // intermediate entries small.
  [[nodiscard]] inline SnfResult snf(IntMatrix const& A) {
    std::size_t const rows = A.rows();
    std::size_t const cols = A.cols();
    IntMatrix         D    = A;
    IntMatrix         U    = IntMatrix::identity(rows);
    IntMatrix         V    = IntMatrix::identity(cols);

    auto row_swap = [&](std::size_t a, std::size_t b) {
      if (a != b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
      }
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
      if (a != b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
      }
    };
    auto row_add = [&](std::size_t dst, std::size_t src, BigInt const& k) {
      D.add_row(dst, src, k);
      U.add_row(dst, src, k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, BigInt const& k) {
      D.add_col(dst, src, k);
      V.add_col(dst, src, k);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      while (true) {
        // least nonzero |entry| in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (D(i, j) != 0
                && (pi == rows || abs(D(i, j)) < abs(D(pi, pj)))) {
              pi = i;
              pj = j;
            }
          }
        }
        if (pi == rows) {
          return {std::move(U), std::move(D), std::move(V)};
        }
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (D(i, t) != 0) {
            BigInt q = D(i, t) / D(t, t);
            row_add(i, t, -q);
            dirty = dirty || D(i, t) != 0;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D(t, j) != 0) {
            BigInt q = D(t, j) / D(t, t);
            col_add(j, t, -q);
            dirty = dirty || D(t, j) != 0;
          }
        }
        if (dirty) {
          continue;  // a smaller remainder now exists; pivot on it
        }
        // divisibility: fold a non-multiple into row t and go again
        for (std::size_t i = t + 1; i < rows && !dirty; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (D(i, j) % D(t, t) != 0) {
              row_add(t, i, 1);
              dirty = true;
              break;
            }
          }
        }
        if (!dirty) {
          break;
        }
      }
      if (D(t, t) < 0) {
        D.negate_row(t);
        U.negate_row(t);
      }
    }
    return {std::move(U), std::move(D), std::move(V)};
  }

  [[nodiscard]] inline BigInt gcd(BigInt const& a, BigInt const& b) {
    return boost::multiprecision::gcd(a, b);
  }

  [[nodiscard]] inline BigInt lcm(BigInt const& a, BigInt const& b) {
    if (a == 0 || b == 0) {
      return 0;
    }
    return abs(a / gcd(a, b) * b);
  }

}  // namespace rankforge

#endif  // RANKFORGE_INT_MATRIX_HPP_
