#include "qv/dense.hpp"

#include <cassert>
#include <cmath>

namespace qv {

Mat Mat::adjoint() const {
  Mat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols == o.rows);
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      cxd v = at(i, k);
      if (v == 0.0) continue;
      const cxd* src = &o.a[static_cast<size_t>(k) * o.cols];
      cxd* dst = &r.a[static_cast<size_t>(i) * o.cols];
      for (int j = 0; j < o.cols; ++j) dst[j] += v * src[j];
    }
  return r;
}

Mat Mat::scaled(cxd s) const {
  Mat r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = s * a[k];
  return r;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const cxd& v : a) m = std::max(m, std::abs(v));
  return m;
}

double Mat::frob_norm() const {
  double s = 0.0;
  for (const cxd& v : a) s += std::norm(v);
  return std::sqrt(s);
}

Mat kron(const Mat& x, const Mat& y) {
  Mat r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      cxd v = x.at(i, j);
      if (v == 0.0) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int s = 0; s < y.cols; ++s)
          r.at(i * y.rows + p, j * y.cols + s) = v * y.at(p, s);
    }
  return r;
}

EigResult hermitian_eig(const Mat& h) {
  assert(h.rows == h.cols);
  int n = h.rows;
  Mat a = h;
  Mat v = Mat::identity(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a.at(i, j)));
  if (scale == 0.0) scale = 1.0;
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(a.at(i, j)));
    if (off <= tol) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cxd apq = a.at(p, q);
        double r = std::abs(apq);
        if (r <= tol) continue;
        cxd phase = apq / r;
        double app = a.at(p, p).real(), aqq = a.at(q, q).real();
        double tau = (aqq - app) / (2.0 * r);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // columns: col_p' = c col_p - s conj(phase) col_q ; col_q' = s phase col_p + c col_q
        for (int i = 0; i < n; ++i) {
          cxd aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * phase * aip + c * aiq;
          cxd vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = c * vip - s * std::conj(phase) * viq;
          v.at(i, q) = s * phase * vip + c * viq;
        }
        for (int j = 0; j < n; ++j) {
          cxd apj = a.at(p, j), aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * phase * aqj;
          a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
      }
  }

  EigResult out;
  out.values.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = a.at(i, i).real();
  out.vectors = std::move(v);
  // selection sort ascending, permuting eigenvector columns along
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j < n; ++j)
      if (out.values[static_cast<size_t>(j)] < out.values[static_cast<size_t>(best)]) best = j;
    if (best != i) {
      std::swap(out.values[static_cast<size_t>(i)], out.values[static_cast<size_t>(best)]);
      for (int k = 0; k < n; ++k)
        std::swap(out.vectors.at(k, i), out.vectors.at(k, best));
    }
  }
  return out;
}

std::vector<double> singular_values(const Mat& m) {
  // Gram matrix on the smaller side
  Mat g = m.rows <= m.cols ? m * m.adjoint() : m.adjoint() * m;
  auto eig = hermitian_eig(g);
  std::vector<double> out;
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
    out.push_back(std::sqrt(std::max(*it, 0.0)));
  return out;
}

double op_norm(const Mat& m) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  return singular_values(m)[0];
}

double op_norm_cols(const Mat& m, const std::vector<bool>& keep) {
  int kept = 0;
  for (bool b : keep) kept += b ? 1 : 0;
  Mat sub(m.rows, kept);
  int jj = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (!keep[static_cast<size_t>(j)]) continue;
    for (int i = 0; i < m.rows; ++i) sub.at(i, jj) = m.at(i, j);
    ++jj;
  }
  return op_norm(sub);
}

double op_norm_power(const Mat& m, const std::vector<bool>& keep, int iters) {
  // Iterate v <- M^* (M v) on the kept columns; the deterministic start has a
  // component on every singular direction in the generic case, and the result
  // is only used as a residual magnitude, not a certified bound.
  int n = m.cols;
  std::vector<cxd> v(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    v[static_cast<size_t>(j)] =
        keep[static_cast<size_t>(j)] ? cxd(1.0 + 0.1 * std::sin(0.7 * j + 0.3),
                                           0.1 * std::cos(1.3 * j))
                                     : cxd(0);
  std::vector<cxd> w(static_cast<size_t>(m.rows));
  double sigma = 0.0;
  for (int it = 0; it < iters; ++it) {
    double nv = 0.0;
    for (const cxd& x : v) nv += std::norm(x);
    nv = std::sqrt(nv);
    if (nv == 0.0) return 0.0;
    for (cxd& x : v) x /= nv;
    for (int i = 0; i < m.rows; ++i) {
      cxd acc = 0;
      const cxd* row = &m.a[static_cast<size_t>(i) * m.cols];
      for (int j = 0; j < n; ++j) acc += row[j] * v[static_cast<size_t>(j)];
      w[static_cast<size_t>(i)] = acc;
    }
    double nw = 0.0;
    for (const cxd& x : w) nw += std::norm(x);
    sigma = std::sqrt(nw);
    for (int j = 0; j < n; ++j) {
      if (!keep[static_cast<size_t>(j)]) {
        v[static_cast<size_t>(j)] = 0;
        continue;
      }
      cxd acc = 0;
      for (int i = 0; i < m.rows; ++i)
        acc += std::conj(m.a[static_cast<size_t>(i) * m.cols + j]) * w[static_cast<size_t>(i)];
      v[static_cast<size_t>(j)] = acc;
    }
  }
  return sigma;
}

uint64_t Rng::next_u64() {
  // splitmix64
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (have_spare) {
    have_spare = false;
    return spare;
  }
  double u1 = 0.0;
  while (u1 <= 1e-300) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double th = 2.0 * 3.141592653589793238462643383279502884 * u2;
  spare = r * std::sin(th);
  have_spare = true;
  return r * std::cos(th);
}

}  // namespace qv
