#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles. All reductions over the inner
/// dimension run in ascending index order with a single accumulator per
/// entry, so results are bit-reproducible and match a naive triple loop.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major, size rows*cols

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline void check_dims(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("dimension mismatch: " + what);
}

/// c[i,j] = sum_k a[i,k] b[k,j], k ascending. The kernel tiles rows of a for
/// B-row reuse but never reorders the k accumulation, so every entry equals
/// the naive triple-loop result bit for bit.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  check_dims(a.cols == b.rows, "matmul " + std::to_string(a.rows) + "x" +
                                   std::to_string(a.cols) + " * " +
                                   std::to_string(b.rows) + "x" +
                                   std::to_string(b.cols));
  Matrix c(a.rows, b.cols);
  const std::size_t m = a.rows, kk = a.cols, n = b.cols;
  constexpr std::size_t MR = 4;
  std::size_t i = 0;
  for (; i + MR <= m; i += MR) {
    const double* a0 = a.row(i);
    const double* a1 = a.row(i + 1);
    const double* a2 = a.row(i + 2);
    const double* a3 = a.row(i + 3);
    double* c0 = c.row(i);
    double* c1 = c.row(i + 1);
    double* c2 = c.row(i + 2);
    double* c3 = c.row(i + 3);
    for (std::size_t k = 0; k < kk; ++k) {
      const double* bk = b.row(k);
      const double x0 = a0[k], x1 = a1[k], x2 = a2[k], x3 = a3[k];
      for (std::size_t j = 0; j < n; ++j) {
        const double bj = bk[j];
        c0[j] += x0 * bj;
        c1[j] += x1 * bj;
        c2[j] += x2 * bj;
        c3[j] += x3 * bj;
      }
    }
  }
  for (; i < m; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (std::size_t k = 0; k < kk; ++k) {
      const double x = ai[k];
      const double* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) ci[j] += x * bk[j];
    }
  }
  return c;
}

/// c[i,j] = sum_k a[k,i] b[k,j] (i.e. a^T b) without materializing a^T.
inline Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  check_dims(a.rows == b.rows, "matmul_tn");
  Matrix c(a.cols, b.cols);
  const std::size_t kk = a.rows, m = a.cols, n = b.cols;
  for (std::size_t k = 0; k < kk; ++k) {
    const double* ak = a.row(k);
    const double* bk = b.row(k);
    for (std::size_t i = 0; i < m; ++i) {
      const double x = ak[i];
      double* ci = c.row(i);
      for (std::size_t j = 0; j < n; ++j) ci[j] += x * bk[j];
    }
  }
  return c;
}

/// c[i,j] = sum_k a[i,k] b[j,k] (i.e. a b^T); rows of b are contiguous.
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  check_dims(a.cols == b.cols, "matmul_nt");
  Matrix c(a.rows, b.rows);
  const std::size_t kk = a.cols;
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (std::size_t j = 0; j < b.rows; ++j) {
      const double* bj = b.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < kk; ++k) s += ai[k] * bj[k];
      ci[j] = s;
    }
  }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

enum class Elementwise { relu, tanh, relu_grad };

/// relu_grad uses the convention relu'(0) = 0.
inline double apply_elementwise(Elementwise op, double x) {
  switch (op) {
    case Elementwise::relu: return x > 0.0 ? x : 0.0;
    case Elementwise::tanh: return std::tanh(x);
    case Elementwise::relu_grad: return x > 0.0 ? 1.0 : 0.0;
  }
  return 0.0;  // unreachable
}

inline Matrix elementwise(Elementwise op, const Matrix& m) {
  Matrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i)
    out.data[i] = apply_elementwise(op, m.data[i]);
  return out;
}

// -- small vector helpers used throughout ------------------------------------

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sq_norm(std::span<const double> a) { return dot(a, a); }

inline double sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

/// y = beta * y + alpha * x
inline void blend_into(double beta, std::span<double> y, double alpha,
                       std::span<const double> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = beta * y[i] + alpha * x[i];
}

}  // namespace gp
