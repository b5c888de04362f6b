#include "cellrep/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cellrep {

IntMatrix::IntMatrix(int rows, int cols, long long fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::invalid_input, "matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      fail(Errc::invalid_input, "ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n, 0);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](long long v) { return v == 0; });
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](long long v) { return v >= 0; });
}

bool IntMatrix::is_positive() const {
  if (data_.empty()) return false;
  return std::all_of(data_.begin(), data_.end(), [](long long v) { return v > 0; });
}

long long IntMatrix::max_entry() const {
  if (data_.empty()) return 0;
  return *std::max_element(data_.begin(), data_.end());
}

long long IntMatrix::trace() const {
  if (!is_square()) fail(Errc::precondition, "trace of a non-square matrix");
  long long t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(Errc::invalid_input, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::invalid_input, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_, 0);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      long long v = a(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

IntMatrix operator*(long long k, IntMatrix a) {
  for (auto& v : a.data_) v *= k;
  return a;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Bareiss fraction-free elimination; returns (rank, det if square else 0).
// Intermediate values are minors of the input, held in __int128; the matrices
// in this artifact are tiny (dimension <= ~10, small entries).
std::pair<int, long long> bareiss(const IntMatrix& a) {
  const int n = a.rows();
  const int m = a.cols();
  std::vector<std::vector<__int128>> w(n, std::vector<__int128>(m));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) w[r][c] = a(r, c);

  __int128 prev = 1;
  int rank = 0;
  int sign = 1;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (w[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(w[pivot], w[rank]);
      sign = -sign;
    }
    for (int r = rank + 1; r < n; ++r) {
      for (int c = col + 1; c < m; ++c)
        w[r][c] = (w[rank][col] * w[r][c] - w[r][col] * w[rank][c]) / prev;
      w[r][col] = 0;
    }
    prev = w[rank][col];
    ++rank;
  }

  long long det = 0;
  if (n == m) {
    if (rank < n)
      det = 0;
    else
      det = static_cast<long long>(sign * prev);
  }
  return {rank, det};
}

}  // namespace

int rank_exact(const IntMatrix& a) { return bareiss(a).first; }

long long det_exact(const IntMatrix& a) {
  if (!a.is_square()) fail(Errc::precondition, "determinant of a non-square matrix");
  return bareiss(a).second;
}

std::pair<long long, long long> column_sum_bounds(const IntMatrix& a) {
  if (!a.is_square()) fail(Errc::precondition, "column_sum_bounds requires a square matrix");
  if (!a.is_nonnegative())
    fail(Errc::precondition, "column_sum_bounds requires non-negative entries");
  if (a.cols() == 0) fail(Errc::precondition, "column_sum_bounds of an empty matrix");
  long long lo = 0, hi = 0;
  for (int c = 0; c < a.cols(); ++c) {
    long long s = 0;
    for (int r = 0; r < a.rows(); ++r) s += a(r, c);
    if (c == 0) {
      lo = hi = s;
    } else {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return {lo, hi};
}

QuasiIdempotentResult quasi_idempotent_check(const IntMatrix& a, long long m) {
  if (!a.is_square()) fail(Errc::precondition, "quasi_idempotent_check requires a square matrix");
  if (m < 1) fail(Errc::precondition, "quasi_idempotent_check requires m >= 1");
  QuasiIdempotentResult res;
  res.holds = (a * a == m * a);
  res.positive = a.is_positive();
  res.rank1 = (rank_exact(a) == 1);
  if (res.holds && !a.is_zero()) res.pf_eigenvalue = m;
  return res;
}

CorollaryResult corollary_check(const IntMatrix& a, long long m) {
  if (!a.is_square()) fail(Errc::precondition, "corollary_check requires a square matrix");
  CorollaryResult res;
  bool cols_equal = a.cols() > 0;
  for (int c = 1; c < a.cols() && cols_equal; ++c)
    for (int r = 0; r < a.rows(); ++r)
      if (a(r, c) != a(r, 0)) {
        cols_equal = false;
        break;
      }
  res.columns_equal = cols_equal;

  if (!a.is_positive() || rank_exact(a) != 1) return res;
  // For a positive rank-one matrix the dominant eigenvalue equals the trace.
  if (a.trace() != m) return res;
  auto [lo, hi] = column_sum_bounds(a);
  if (lo != m && hi != m) return res;
  res.applicable = true;
  if (!res.columns_equal)
    fail(Errc::internal, "column-sum equality without coinciding columns on " + a.to_string());
  return res;
}

IntMatrix eval_matrix_poly(const std::vector<long long>& coeffs, const IntMatrix& a) {
  if (!a.is_square()) fail(Errc::precondition, "polynomial of a non-square matrix");
  if (coeffs.empty() || coeffs[0] != 0)
    fail(Errc::invalid_input, "polynomial must have zero constant term");
  const int n = a.rows();
  IntMatrix acc(n, n, 0);
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t d = 1; d < coeffs.size(); ++d) {
    power = power * a;
    if (coeffs[d] != 0) acc += coeffs[d] * power;
  }
  return acc;
}

}  // namespace cellrep
