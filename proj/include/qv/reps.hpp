#pragma once

#include "qv/dense.hpp"
#include "qv/presentation.hpp"

namespace qv {

struct RelationResidualTooLarge : std::runtime_error {
  explicit RelationResidualTooLarge(const std::string& m) : std::runtime_error(m) {}
};

// Concrete matrices for the generators of a presentation at a numeric q.
// Truncated representations keep `max_shift` (the largest index shift any
// generator performs) so callers can mask boundary columns: results are only
// meaningful on the interior columns 0 .. dim - margin*max_shift - 1.
struct Rep {
  const Presentation* pres = nullptr;
  double q = 1.0;
  int dim = 0;
  std::vector<Mat> mats;  // one per generator
  int max_shift = 0;
  int margin = 2;

  int interior_cut() const { return margin * max_shift; }
  // per-leg interior column mask of length dim^legs
  std::vector<bool> interior_mask(int legs) const;

  Mat eval_leg(const Word& w, int leg) const;  // product of the letters on `leg`
  Mat eval(const Poly& p) const;               // single-leg polynomial
  Mat eval2(const Poly& p) const;              // two-leg, via Kronecker product
  // three-leg polynomial applied to a vector in C^(dim^3), matrix-free
  std::vector<cxd> apply3(const Poly& p, const std::vector<cxd>& v) const;

  // operator norm of eval(rel) restricted to interior columns
  double interior_residual(const Poly& rel) const;
  double interior_residual2(const Poly& rel) const;  // two-leg version
};

// Highest-weight-style truncated representation of Podles quantum SO(3) on
// C^dim (0 < q < 1).  K, G diagonal; A and L lower the index by 1 and 2.
Rep rep_sqo3(double q, int dim, int margin = 2);

// qmap-powers matrices obtained by pushing the sqo3 rep through
// beta -> L, gamma -> -qG, delta -> (1/q)A.
Rep rep_powers(double q, int dim, int margin = 2);

// qmap-m2 matrices via alpha -> -qA, beta -> L, gamma -> -qG, delta -> (1/q)A.
Rep rep_qmapm2(double q, int dim, int margin = 2);

// Push an existing rep through a generator map (target rep -> source algebra).
Rep pushforward(const GensMap& f, const Rep& target_rep);

// Weighted-shift counterexample: at the q with q^4 + q^2 = 1 the relations
// A*A = C*C = K - K^2, AA* = CC* = q^2 K - q^4 K^2, AK = q^2 KA hold exactly
// on the interior while ||CK - q^2 KC|| = q^9.
struct CkExample {
  double q;
  int dim;
  Mat A, C, K;
  int swap_lo, swap_hi;  // the transposed basis pair breaking normality of C
};
CkExample ck_counterexample(int dim = 40);

// Commutative q=1 analogue on a grid with a position flip: AK = KA, AC = CA
// and CK = (1-K)C hold exactly but C fails to commute with K.
struct FlipExample {
  int grid;
  Mat A, C, K;
};
FlipExample flip_counterexample(int grid = 128);

// q=0 model on C^(3h): beta is the inverse-interleave isometry (a proper
// coisometry), delta the partial shift between the last two blocks.
Rep rep_q0(int h);

// One-dimensional characters for the commutative presets.
Rep rep_circle_point(cxd u);
Rep rep_so3_point(cxd s, cxd t, cxd r);
// Diagonal rep of a commutative preset from sampled points (column k of pts
// holds the generator values at sample k).
Rep rep_diag_points(const Presentation& pres, const std::vector<std::vector<cxd>>& pts);

// m2 itself: n as the 2x2 nilpotent matrix unit.
Rep rep_m2();

// Throw unless every relation of rep.pres holds on the interior within tol.
void validate_rep(const Rep& rep, double tol);

}  // namespace qv
