#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellrep/errors.hpp"

namespace cellrep {

// Dense integer matrix with exact arithmetic only. Dimensions may be zero
// (empty representations use 0xN and Nx0 action matrices).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, long long fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  long long operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<long long>& data() const { return data_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_positive() const;
  long long max_entry() const;

  long long trace() const;  // square only
  IntMatrix transpose() const;

  IntMatrix& operator+=(const IntMatrix& other);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(long long k, IntMatrix a);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  // Lexicographic on (rows, cols, entries); used for canonical forms and set storage.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;  // e.g. [[1,2],[3,4]]

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_exact(const IntMatrix& a);

// Determinant by Bareiss elimination; square input required.
long long det_exact(const IntMatrix& a);

// Exact min and max column sums of a square matrix with entries >= 0.
std::pair<long long, long long> column_sum_bounds(const IntMatrix& a);

struct QuasiIdempotentResult {
  bool holds = false;     // A*A == m*A
  bool positive = false;  // all entries > 0
  bool rank1 = false;
  std::optional<long long> pf_eigenvalue;  // = m when holds and A != 0
};

// Checks A^2 = mA exactly. When that holds and A is nonzero the spectrum is
// contained in {0, m}, so m is the dominant eigenvalue; no floating point.
QuasiIdempotentResult quasi_idempotent_check(const IntMatrix& a, long long m);

struct CorollaryResult {
  bool applicable = false;     // positive, rank one, trace == m, and a column-sum bound meets m
  bool columns_equal = false;  // all columns identical (always reported)
};

CorollaryResult corollary_check(const IntMatrix& a, long long m);

// p given by ascending coefficients with p[0] == 0; evaluates p(A).
IntMatrix eval_matrix_poly(const std::vector<long long>& coeffs, const IntMatrix& a);

}  // namespace cellrep
