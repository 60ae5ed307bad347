#include <cmath>

#include "qv/presets.hpp"
#include "qv/verify.hpp"

namespace qv {

namespace {

struct Replay {
  double q;
  int dim, cut;
  double tol;
  CheckReport out;
  Mat I;

  Replay(double q_, int dim_, int cut_, double tol_)
      : q(q_), dim(dim_), cut(cut_), tol(tol_), I(Mat::identity(dim_)) {}

  double ir(const Mat& m) const {
    std::vector<bool> keep(static_cast<size_t>(m.cols), true);
    for (int j = m.cols - cut; j < m.cols; ++j) keep[static_cast<size_t>(j)] = false;
    return op_norm_cols(m, keep);
  }

  // operator norm over interior columns of each of the four dim-blocks
  double big_ir(const Mat& m) const {
    std::vector<bool> keep(static_cast<size_t>(4 * dim), true);
    for (int blk = 0; blk < 4; ++blk)
      for (int j = dim - cut; j < dim; ++j)
        keep[static_cast<size_t>(blk * dim + j)] = false;
    return op_norm_cols(m, keep);
  }

  void check(const std::string& name, const Mat& m, const char* context,
             double entry_tol) {
    CheckEntry e;
    e.name = name;
    e.context = context;
    e.residual = ir(m);
    e.status = e.residual < entry_tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
    out.add(std::move(e));
  }
  void check(const std::string& name, const Mat& m, const char* context) {
    check(name, m, context, tol);
  }
  void check_big(const std::string& name, const Mat& m, const char* context,
                 double entry_tol) {
    CheckEntry e;
    e.name = name;
    e.context = context;
    e.residual = big_ir(m);
    e.status = e.residual < entry_tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
    out.add(std::move(e));
  }
};

using M4 = std::array<std::array<Mat, 4>, 4>;

Mat blocked(const M4& m, int dim) {
  Mat r(4 * dim, 4 * dim);
  for (int bi = 0; bi < 4; ++bi)
    for (int bj = 0; bj < 4; ++bj)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          r.at(bi * dim + i, bj * dim + j) =
              m[static_cast<size_t>(bi)][static_cast<size_t>(bj)].at(i, j);
  return r;
}

}  // namespace

CheckReport proof_replay(double q, int dim, double tol) {
  Rep rep = rep_sqo3(q, dim);
  const Presentation& pres = *rep.pres;
  Replay rp(q, dim, rep.interior_cut(), tol);
  const Mat& A = rep.mats[static_cast<size_t>(pres.gen_index("A"))];
  const Mat& C = rep.mats[static_cast<size_t>(pres.gen_index("C"))];
  const Mat& G = rep.mats[static_cast<size_t>(pres.gen_index("G"))];
  const Mat& K = rep.mats[static_cast<size_t>(pres.gen_index("K"))];
  const Mat& L = rep.mats[static_cast<size_t>(pres.gen_index("L"))];
  const Mat& I = rp.I;
  auto S = [](double x) { return cxd(x); };
  double q2 = q * q, q3 = q2 * q, q4 = q2 * q2;

  // generators of the embedded q-family: b, c, d
  Mat b = L, c = S(-q) * G, d = S(1.0 / q) * A;
  Mat bs = b.adjoint(), cs = c.adjoint(), ds = d.adjoint();

  // dotted images recovering the Podles generators from b, c, d
  Mat Ad = S(q) * d;
  Mat Cd = b * ds - S(q2) * (d * cs);
  Mat Gd = S(-1.0 / q) * c;
  Mat Kd = S(q2) * (ds * d) + S(1.0 / q2) * (cs * c);
  Mat Ld = b;
  Mat Ads = Ad.adjoint(), Cds = Cd.adjoint(), Gds = Gd.adjoint(), Lds = Ld.adjoint();

  // relations of the image algebra in b, c, d
  rp.check("images/rel-01", S(q4) * (ds * d) + cs * c + S(q4) * (d * ds) + b * bs - I,
           "q^4 d*d + c*c + q^4 dd* + bb* = 1");
  rp.check("images/rel-02", bs * b + ds * d + c * cs + d * ds - I,
           "b*b + d*d + cc* + dd* = 1");
  rp.check("images/rel-03",
           S(q4) * (ds * d) + cs * c + S(q2) * (bs * b) + S(q2) * (ds * d) - S(q2) * I,
           "q^4 d*d + c*c + q^2 b*b + q^2 d*d = q^2");
  rp.check("images/rel-04",
           S(q4) * (d * ds) + b * bs + S(q2) * (c * cs) + S(q2) * (d * ds) - I,
           "q^4 dd* + bb* + q^2 cc* + q^2 dd* = 1");
  rp.check("images/rel-05", cs * d - S(q2) * (ds * b) + b * ds - S(q2) * (d * cs),
           "c*d - q^2 d*b + bd* - q^2 dc* = 0");
  rp.check("images/rel-06", b * c + S(q4) * (d * d), "bc + q^4 d^2 = 0");
  rp.check("images/rel-07", c * b + d * d, "cb + d^2 = 0");
  rp.check("images/rel-08", b * d - S(q2) * (d * b), "bd = q^2 db");
  rp.check("images/rel-09", d * c - S(q2) * (c * d), "dc = q^2 cd");

  // entries of the defining corepresentation identity, in dotted form
  rp.check("unitary/entry-12",
           S(q) * ((I - S(q2) * Kd) * Cds) - Ad * Lds + S(q3) * (Ads * Gd) -
               S(q) * (Kd * Cds),
           "q(1-q^2 K)C* - AL* + q^3 A*G - qKC* = 0");
  rp.check("unitary/entry-13",
           (I - S(q2) * Kd) * Cd + Ad * Gds - S(q) * (Ads * Ld) - Kd * Cd,
           "(1-q^2 K)C + AG* - qA*L - KC = 0");
  rp.check("unitary/entry-22",
           S(q2) * (Cd * Cds) + Ld * Lds + S(q4) * (Gds * Gd) + Cd * Cds - I,
           "q^2 CC* + LL* + q^4 G*G + CC* = 1");
  rp.check("unitary/entry-33",
           Cds * Cd + Gd * Gds + Lds * Ld + S(1.0 / q2) * (Cds * Cd) - I,
           "C*C + GG* + L*L + q^-2 C*C = 1");
  rp.check("unitary/entry-43",
           S(q) * (Kd * Cd) - S(1.0 / q) * (Ad * Gds) + Ads * Ld -
               S(1.0 / q) * ((I - Kd) * Cd),
           "qKC - q^-1 AG* + A*L - q^-1 (1-K)C = 0");
  rp.check("unitary/entry-44",
           S(q2) * (Kd * Kd) + S(1.0 / q2) * (Ad * Ads) + Ads * Ad +
               (I - Kd) * (I - Kd) - I,
           "q^2 K^2 + q^-2 AA* + A*A + (1-K)^2 = 1");
  rp.check("unitary/col-22",
           Ads * Ad + Lds * Ld + Gds * Gd + S(1.0 / q2) * (Ads * Ad) - I,
           "A*A + L*L + G*G + q^-2 A*A = 1");
  rp.check("unitary/col-44",
           S(q2) * (Kd * Kd) + Cds * Cd + S(1.0 / q2) * (Cd * Cds) +
               (I - Kd) * (I - Kd) - I,
           "q^2 K^2 + C*C + q^-2 CC* + (1-K)^2 = 1");

  // intermediate identities
  rp.check("step2/A2",
           Lds * Ld + S(1.0 / q2) * (Ads * Ad) + S(q2) * (Gd * Gds) +
               S(1.0 / q2) * (Ad * Ads) - I,
           "L*L + q^-2 A*A + q^2 GG* + q^-2 AA* = 1");
  rp.check("step2/GG", Kd - Cds * Cd - Gd * Gds, "K = C*C + GG*");
  rp.check("step2/AC", Ads * Ad - Cds * Cd, "A*A = C*C");
  rp.check("step1/GGGG", Gds * Gd - Gd * Gds, "G is normal");
  rp.check("step2/LG-adj", Ld * Gds - S(q4) * (Gds * Ld), "LG* = q^4 G*L");
  rp.check("step2/AG-adj", Ad * Gds - S(q2) * (Gds * Ad), "AG* = q^2 G*A");
  rp.check("step2/CC-AA", Cd * Cds - Ad * Ads, "CC* = AA*");
  rp.check("step2/AA-sym",
           Ads * Ad + S(1.0 / q2) * (Ad * Ads) - S(2) * Kd + Kd * Kd +
               S(q2) * (Kd * Kd),
           "A*A + q^-2 AA* = 2K - (1+q^2) K^2");
  rp.check("step2/AA-skew",
           Ads * Ad - S(1.0 / q2) * (Ad * Ads) - S(q2 - 1.0) * (Gd * Gds),
           "A*A - q^-2 AA* = (q^2-1) GG*");
  rp.check("step2/naG",
           S(2) * (Ads * Ad) - S(q2) * (Gds * Gd) + S(q2) * (Kd * Kd) - S(2) * Kd +
               Gds * Gd + Kd * Kd,
           "2A*A = (q^2-1) G*G + 2K - (1+q^2) K^2");
  rp.check("step2/KK-GG", Kd * Kd - Gds * Gd, "K^2 = G*G");
  rp.check("step2/AA-K", Ads * Ad - Kd + Kd * Kd, "A*A = K - K^2");
  rp.check("step2/AA-K-adj", Ad * Ads - S(q2) * Kd + S(q4) * (Kd * Kd),
           "AA* = q^2 K - q^4 K^2");
  rp.check("stage/left", S(1.0 / q) * (Ld * Ads) + S(q2) * (Ad * Gds) - Cd,
           "C = q^-1 LA* + q^2 AG*");
  rp.check("stage/right", S(q) * (Ads * Ld) + Gds * Ad - Cd,
           "C = q A*L + G*A");
  rp.check("step3/AC-commute", Cd * Ad - Ad * Cd, "CA = AC");
  rp.check("step4/KA", Kd * Ad - S(1.0 / q2) * (Ad * Kd), "KA = q^-2 AK");
  rp.check("step4/LK", Ld * Kd - S(q4) * (Kd * Ld), "LK = q^4 KL");

  // the full relation list in the dotted generators
  {
    Rep dotted = rep;
    dotted.mats[static_cast<size_t>(pres.gen_index("A"))] = Ad;
    dotted.mats[static_cast<size_t>(pres.gen_index("C"))] = Cd;
    dotted.mats[static_cast<size_t>(pres.gen_index("G"))] = Gd;
    dotted.mats[static_cast<size_t>(pres.gen_index("K"))] = Kd;
    dotted.mats[static_cast<size_t>(pres.gen_index("L"))] = Ld;
    for (size_t i = 0; i < pres.relations.size(); ++i) {
      CheckEntry e;
      e.name = "dotted/" + pres.relation_names[i];
      e.context = "relation in the dotted generators";
      e.residual = dotted.interior_residual(pres.relations[i]);
      e.status = e.residual < tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
      rp.out.add(std::move(e));
    }
  }

  // the 4x4 matrix built from b, c, d versus its display in dotted form
  M4 am = {{{S(q4) * (d * ds) + b * bs, S(-q) * d, S(-q2) * ds,
             S(q3) * (ds * d) + S(1.0 / q) * (cs * c)},
            {S(q) * (b * ds) - S(q3) * (d * cs), b, S(q) * cs,
             cs * d - S(q2) * (ds * b)},
            {d * bs - S(q2) * (c * ds), S(1.0 / q) * c, bs,
             S(1.0 / q) * (ds * c) - S(q) * (bs * d)},
            {S(q) * (c * cs) + S(q) * (d * ds), d, S(q) * ds, bs * b + ds * d}}};
  M4 nw = {{{I - S(q2) * Kd, S(-1) * Ad, S(-q) * Ads, S(q) * Kd},
            {S(q) * Cd, Ld, S(-q2) * Gds, S(-1) * Cd},
            {Cds, S(-1) * Gd, Lds, S(-1.0 / q) * Cds},
            {S(q) * Kd, S(1.0 / q) * Ad, Ads, I - Kd}}};
  {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, rp.ir(am[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                      nw[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    CheckEntry e;
    e.name = "matrix/aprop-vs-nowa";
    e.context = "entrywise agreement of the two displays of the 4x4 matrix";
    e.residual = worst;
    e.status = worst < tol / 10.0 ? CheckStatus::PassNumeric : CheckStatus::Fail;
    rp.out.add(std::move(e));
  }
  Mat Ablk = blocked(am, dim);
  Mat I4 = Mat::identity(4 * dim);
  rp.check_big("matrix/a-star-a", Ablk.adjoint() * Ablk - I4, "a* a = 1", tol);
  rp.check_big("matrix/a-a-star", Ablk * Ablk.adjoint() - I4, "a a* = 1", tol);

  // antipode table applied entrywise, then the inverse identity
  Mat kA = S(-q) * Cds, kAs = S(-1.0 / q) * Cd, kC = S(-1.0 / q) * Ads,
      kCs = S(-q) * Ad, kG = S(q2) * Gd, kGs = S(1.0 / q2) * Gds, kL = Lds,
      kLs = Ld, kK = Kd;
  M4 bm = {{{I - S(q2) * kK, S(-1) * kA, S(-q) * kAs, S(q) * kK},
            {S(q) * kC, kL, S(-q2) * kGs, S(-1) * kC},
            {kCs, S(-1) * kG, kLs, S(-1.0 / q) * kCs},
            {S(q) * kK, S(1.0 / q) * kA, kAs, I - kK}}};
  Mat Bblk = blocked(bm, dim);
  rp.check_big("antipode/right-inverse", Ablk * Bblk - I4, "a kappa(a) = 1", tol);
  rp.check_big("antipode/left-inverse", Bblk * Ablk - I4, "kappa(a) a = 1", tol);

  return rp.out;
}

}  // namespace qv
