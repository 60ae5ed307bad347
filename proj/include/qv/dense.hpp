#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qv {

using cxd = std::complex<double>;

// Dense row-major complex matrix; sized for the truncated representations used
// here (a few hundred rows), so no attempt at blocking or sparsity.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<cxd> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  cxd& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const cxd& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Mat adjoint() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(cxd s) const;

  double max_abs() const;
  double frob_norm() const;
};

inline Mat operator*(cxd s, const Mat& m) { return m.scaled(s); }

Mat kron(const Mat& x, const Mat& y);

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
// values ascending; vectors holds the eigenvectors as columns.
struct EigResult {
  std::vector<double> values;
  Mat vectors;
};
EigResult hermitian_eig(const Mat& h);

// Largest singular value (computed from the Hermitian eigenproblem of M^* M,
// using the smaller Gram side).
double op_norm(const Mat& m);

// Operator norm of the column submatrix selected by `keep` (size = cols).
double op_norm_cols(const Mat& m, const std::vector<bool>& keep);

// Power-iteration estimate of the operator norm (deterministic start); used
// where the matrix is too large for the dense eigensolver.
double op_norm_power(const Mat& m, const std::vector<bool>& keep, int iters = 200);

// Singular values of m, descending.
std::vector<double> singular_values(const Mat& m);

// Deterministic random source.  Gaussians use Box-Muller on the raw 64-bit
// stream so sequences are reproducible across standard libraries.
struct Rng {
  explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next_u64();
  double uniform();  // [0,1)
  double gauss();
  cxd cgauss() { return {gauss(), gauss()}; }

 private:
  uint64_t state;
  bool have_spare = false;
  double spare = 0.0;
};

}  // namespace qv
