#pragma once

#include <string>

#include "qv/dense.hpp"
#include "qv/verify.hpp"

namespace qv {

// Point of the group S = { (s,t,r) : st + r^2 = 0, |s| + |t| = 1 }.
struct SPoint {
  cxd s, t, r;
};

struct InvariantDrift : std::runtime_error {
  explicit InvariantDrift(const std::string& m) : std::runtime_error(m) {}
};
struct NonOrthogonalOutput : std::runtime_error {
  explicit NonOrthogonalOutput(const std::string& m) : std::runtime_error(m) {}
};
struct NotADensityMatrix : std::runtime_error {
  explicit NotADensityMatrix(const std::string& m) : std::runtime_error(m) {}
};
struct NotUnitary : std::runtime_error {
  explicit NotUnitary(const std::string& m) : std::runtime_error(m) {}
};
struct SamplerExhausted : std::runtime_error {
  explicit SamplerExhausted(const std::string& m) : std::runtime_error(m) {}
};

// max of the two defining-constraint residuals |st + r^2|, ||s|+|t| - 1|
double s_constraint(const SPoint& p);

SPoint s_unit();
// group law; throws InvariantDrift when the output violates the constraints
// far beyond the input's own drift
SPoint s_mul(const SPoint& p, const SPoint& p2);
SPoint s_inv(const SPoint& p);

// Haar-distributed point (push-forward of the uniform measure on the unit
// quaternions through w |-> w n w*)
SPoint haar_spoint(Rng& rng);

// N(p) = [[-r, s], [t, r]]: the image of n under the point automorphism
Mat n_of(const SPoint& p);
// m = a nn* + b n + c n* + d n*n  |->  a NN* + b N + c N* + d N*N
Mat act_matrix(const Mat& N, const Mat& m);

// induced rotation on the traceless self-adjoint part of M2 (Pauli basis);
// throws NonOrthogonalOutput
Mat s_to_so3(const SPoint& p);

struct Classification {
  double q = 0.0;
  Mat u;  // 2x2 unitary with canonical column phases
  std::string note;
};

// Eigendecompose a density matrix into u diag(1, q^2)/(1+q^2) u*.
// q within snap_tol of 0 or 1 snaps exactly; at q = 1 returns u = identity.
Classification classify_state(const Mat& rho, double tol = 1e-9,
                              double snap_tol = 1e-9);

// density matrix of the family rho_q = diag(1, q^2) / (1 + q^2)
Mat rho_q(double q);

// A concrete classical action on M2: the coaction of `preset` ("circle" or
// "so3-classical"), optionally conjugated: m |-> u* Phi_g(u m u*) u.
struct ActionSpec {
  std::string preset = "circle";
  Mat u = Mat::identity(2);
};

// conjugate an action by a further unitary v; throws NotUnitary
ActionSpec conjugate_action(const ActionSpec& a, const Mat& v);

// the 2x2 value of the action at one sample point applied to m
Mat action_apply(const ActionSpec& a, const Mat& N_point, const Mat& m);

// n_samples sample points of the action's group: circle uses uniform
// quadrature (exact for the degree-1 coaction), so3 uses Haar sampling
std::vector<Mat> action_sample_points(const ActionSpec& a, int n_samples,
                                      uint64_t seed);

// eta = (phi (x) h) Psi: the Haar average of phi composed with the action,
// returned as a density matrix.  `invariance_residual`, when non-null, gets
// max_g,m |eta(Phi_g(m)) - eta(m)| over a fresh sample set.
Mat invariant_state(const ActionSpec& a, const Mat& phi, int n_samples,
                    uint64_t seed, double* invariance_residual = nullptr);

struct PipelineResult {
  double q = 0.0;
  Mat u;
  std::string target;  // circle / sqo3 / so3-classical
  bool ergodic = false;
  CheckReport report;
};

// invariant_state from several independent states -> ergodicity probe ->
// classify_state -> verify the conjugated action preserves omega_q.
PipelineResult classify_action_pipeline(const ActionSpec& a, double tol,
                                        uint64_t seed, int n_samples = 0);

}  // namespace qv
