#include "spectight/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spectight {

std::vector<double> Matrix::multiply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matvec dimension mismatch");
  std::vector<double> y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* r = a_.data() + static_cast<size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

double offdiag_sum(const Matrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows() - 1; ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += std::abs(a(p, q));
  return s;
}

void fix_column_sign(Matrix& v, int k) {
  int best = 0;
  double mag = 0.0;
  for (int i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i, k)) > mag) {
      mag = std::abs(v(i, k));
      best = i;
    }
  }
  if (v(best, k) < 0.0)
    for (int i = 0; i < v.rows(); ++i) v(i, k) = -v(i, k);
}

double residual_against(const Matrix& a, const std::vector<double>& values, const Matrix& vecs) {
  double worst = 0.0;
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = 0.0;
      for (int j = 0; j < n; ++j) r += a(i, j) * vecs(j, k);
      r -= values[k] * vecs(i, k);
      s += r * r;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

}  // namespace

SymmetricEigen jacobi_eigendecompose(const Matrix& a0, int max_sweeps) {
  if (a0.rows() != a0.cols()) throw std::invalid_argument("jacobi: matrix not square");
  const int n = a0.rows();

  Matrix a = a0;
  Matrix v = Matrix::identity(n);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i);
  std::vector<double> b = d, z(n, 0.0);

  auto rotate = [&](Matrix& m, int i, int j, int k, int l, double s, double tau) {
    const double g = m(i, j), h = m(k, l);
    m(i, j) = g - s * (h + g * tau);
    m(k, l) = h + s * (g - h * tau);
  };

  int sweep = 1;
  bool converged = false;
  for (; sweep <= max_sweeps; ++sweep) {
    const double off = offdiag_sum(a);
    if (off == 0.0) {
      converged = true;
      break;
    }
    const double thresh = (sweep < 4) ? 0.2 * off / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a(p, q));
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) && std::abs(d[q]) + g == std::abs(d[q])) {
          a(p, q) = 0.0;
        } else if (std::abs(a(p, q)) > thresh) {
          double h = d[q] - d[p];
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = a(p, q) / h;
          } else {
            const double theta = 0.5 * h / a(p, q);
            t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a(p, q);
          z[p] -= h;
          z[q] += h;
          d[p] -= h;
          d[q] += h;
          a(p, q) = 0.0;
          for (int j = 0; j < p; ++j) rotate(a, j, p, j, q, s, tau);
          for (int j = p + 1; j < q; ++j) rotate(a, p, j, j, q, s, tau);
          for (int j = q + 1; j < n; ++j) rotate(a, p, j, q, j, s, tau);
          for (int j = 0; j < n; ++j) rotate(v, j, p, j, q, s, tau);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }

  if (!converged) {
    SymmetricEigen partial;
    partial.values = d;
    partial.vectors = v;
    const double best = residual_against(a0, d, v);
    throw EigensolverError("jacobi: no convergence within " + std::to_string(max_sweeps) + " sweeps", best);
  }

  // sort ascending, carrying columns along
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    fix_column_sign(out.vectors, k);
  }
  out.residual_norm = residual_against(a0, out.values, out.vectors);
  out.sweeps = sweep;
  return out;
}

std::vector<double> singular_values(const Matrix& a) {
  const int n = a.rows(), m = a.cols();
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a(k, i) * a(k, j);
      gram(i, j) = gram(j, i) = s;
    }
  SymmetricEigen eig = jacobi_eigendecompose(gram);
  std::vector<double> sv(m);
  for (int i = 0; i < m; ++i) sv[i] = std::sqrt(std::max(0.0, eig.values[m - 1 - i]));
  return sv;  // descending
}

int numerical_rank(const Matrix& a, double rel_tol) {
  const std::vector<double> sv = singular_values(a);
  if (sv.empty() || sv[0] == 0.0) return 0;
  int r = 0;
  for (double s : sv)
    if (s >= rel_tol * sv[0]) ++r;
  return r;
}

}  // namespace spectight
