// Floating-point laboratory for the explicit matrix models: moment maps,
// null-cone sampling, rank-profile orbit identification, Jacobian-rank
// dimension estimation, stabilizer/codimension checks, the beta map on
// stabilizers and the Case-II projection.

#ifndef THETA_MOMENTMAP_HPP
#define THETA_MOMENTMAP_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "theta/dualpair.hpp"
#include "theta/partition.hpp"

namespace theta {

using CMat = Eigen::MatrixXcd;

/// Block coordinates (w+; w1, w2) on W_H = M_{p,n} + M_{q,n} + M_{t,n}.
struct NullConePoint {
    CMat wplus;  // p x n
    CMat w1;     // q x n
    CMat w2;     // t x n

    int p() const { return static_cast<int>(wplus.rows()); }
    int q() const { return static_cast<int>(w1.rows()); }
    int t() const { return static_cast<int>(w2.rows()); }
    int n() const { return static_cast<int>(wplus.cols()); }
};

/// Isotropic frame E_{p,n} = [I_n; 0; i I_n] for the standard symmetric form.
CMat isotropic_frame(int p, int n);
/// I_{p,n}: identity block over zeros.
CMat eye_frame(int p, int n);

/// Gram matrix [[0,0,I_k],[0,I_{m-2k},0],[I_k,0,0]]: the first k coordinates
/// span an isotropic subspace dual to the last k.  k = 0 gives the identity.
CMat split_gram(int m, int k);

struct MomentImages {
    CMat x;          // p x q, w+ w1^T
    CMat psi_plus;   // n x n, w+^T S_p w+
    CMat psi_minus;  // n x n, w1^T w1
    CMat psi2;       // n x n, w2^T w2
};

/// Images of the two moment maps; gram_p defaults to the identity.
MomentImages moment_images(const NullConePoint& pt, const CMat* gram_p = nullptr);

/// max(|psi_plus|, |psi_minus + psi2|), infinity norm.
double on_cone_residual(const NullConePoint& pt, const CMat* gram_p = nullptr);

/// Numerical rank by singular value thresholding at rel_tol * s_max,
/// rejecting ambiguous spectra: the gap s_r / s_{r+1} around the cut must be
/// at least gap_factor (ignored when the matrix is exactly zero-ranked or
/// full-ranked by a clear margin).
struct RankInfo {
    int rank = 0;
    double gap = 0.0;   // ratio across the threshold; +inf when clean
    bool clear = true;  // false when the gap guard fails
};
RankInfo svd_rank(const CMat& m, double rel_tol = 1e-8, double gap_factor = 10.0);

struct RankProfile {
    int rank_wplus = 0;
    int rank_w1 = 0;
    int rank_w1tw1 = 0;
    int rank_x = 0;
    double tolerance = 1e-8;
    bool in_open_stratum = false;  // rank(w1)=min(q,n) and rank(w1^T w1)=min(n,t)
};

RankProfile rank_profile(const NullConePoint& pt, double tol = 1e-8);

enum class SampleStratum { generic, boundary };

/// Deterministic samples of the null cone psi_plus = 0, psi_minus + psi2 = 0
/// for the pair (O(p,q+t), Sp(2n,R)): group motions of the reference frames
/// z0 = (E_{p,n}; E_{q+t,n}).  Generic samples use K x K^t x K' motions;
/// boundary samples degenerate rank(w1) below min(q,n) first.
std::vector<NullConePoint> sample_null_cone(const DualPairParams& pp, std::uint64_t seed,
                                            int count, SampleStratum stratum);

enum class ActionGroup { K, Kprime, KxKprime };

/// Orbit dimension as the rank of the linearized action at the point.
/// K: so(p) + so(q) acting on x in M_{p,q} by (a,b).x = a x + x b^T.
/// Kprime: gl(n) acting on a symmetric n x n value by c.y = c y + y c^T.
/// KxKprime: the action on W-points (aw+ - w+c, b w1 + w1 c^T).
long numeric_orbit_dim(const CMat& x, ActionGroup group);
long numeric_orbit_dim_point(const NullConePoint& pt);  // KxKprime at (w+,w1,w2)

/// Jordan type of the nilpotent p-part element attached to x (ranks of
/// powers of [[0,x],[-x^T S_p,0]]).  gram_p defaults to the identity.
Partition numeric_orbit_partition(const CMat& x, const CMat* gram_p = nullptr,
                                  double tol = 1e-8);

struct StabilizerCheck {
    int dim_S0_formula = 0;    // (n^2-n+q^2-q+t^2-t)/2 + n(n-q-t+1)
    int codim = 0;             // 1 + n - t
    int dim_S0_numeric = 0;    // null space of the linearized action at E_{q+t,n}
    bool match = false;
};

/// Stabilizer dimension of E_{q+t,n} in O(q) x O(t) x GL(n) against the
/// closed formula; requires q > n > t.  Throws on a formula/numeric
/// mismatch beyond integer rounding.
StabilizerCheck stabilizer_codim_check(int q, int t, int n);

/// Case-I reference data for the beta map: y = pr(z0), x = phi(y).
struct CaseIReference {
    int p, q, t, n;
    CMat yplus;  // E_{p,n}
    CMat yminus; // first q rows of E_{q+t,n}
    CMat x;      // yplus * yminus^T
};
CaseIReference case1_reference(int p, int q, int t, int n);

struct BetaResult {
    CMat beta;        // n x n, the GL(n) Levi component of k^p
    double residual;  // |(k, beta(k)) . y - y|
};

/// beta(k) for k = (k_p, k_q) stabilizing x: solves k_p y+ = y+ B in the
/// least-squares sense and certifies the action residual.  Throws when the
/// residual exceeds tol (k is not in K_x).
BetaResult beta_map(const CMat& kp, const CMat& kq, const CaseIReference& ref,
                    double tol = 1e-10);

/// Deterministic elements of the stabilizer K_x (exponentials of null-space
/// samples of the linearized action) at the Case-I reference point.
std::pair<CMat, CMat> sample_stabilizer_element(const CaseIReference& ref,
                                                std::uint64_t seed, std::uint64_t index);

/// O(p,C)-element acting as g on the column space of E_{p,n}, as g^{-T} on
/// the conjugate frame and trivially on the orthogonal complement.
CMat levi_orthogonal_element(const CMat& g, int p, int n);

/// Case-II matrix model (q < n <= q+t): C^p carries the split Gram pairing
/// the first q coordinates with the last q, with a split middle block for
/// the O(p-2q) subgroup.
struct Case2Model {
    int p, q, t, n;
    CMat gram_p;    // p x p
    CMat gram_mid;  // (p-2q) x (p-2q), form of the O(p-2q) factor

    int ps() const { return p - 2 * q; }   // O(p-2q, t-q) side
    int ts() const { return t - q; }
    int ns() const { return n - q; }
};

Case2Model case2_model(int p, int q, int t, int n);

/// Reference point z0 of the Case-II model; on-cone for gram_p.
NullConePoint case2_z0(const Case2Model& model);

/// pi(w) = (A1, B1, A1 B2^T) with A1 the first q rows of w+, B1 = w1,
/// B2 = w2.
struct Case2Projection {
    CMat m1, m2, m3;  // q x n, q x n, q x t
};
Case2Projection case2_projection(const Case2Model& model, const NullConePoint& pt);

/// m = (I_{q,n}, I_{q,n}, i I_{q,t}).
Case2Projection case2_reference_m(const Case2Model& model);

double projection_distance(const Case2Projection& a, const Case2Projection& b);

/// Fiber point over m determined by (A_s, B_s); T maps it back to (A_s,B_s).
NullConePoint case2_fiber_point(const Case2Model& model, const CMat& As, const CMat& Bs);

struct Case2Fiber {
    CMat As;             // (p-2q) x (n-q)
    CMat Bs;             // (t-q) x (n-q)
    double psi_residual; // null-cone residual for the subpair (O(p-2q,t-q), Sp(2(n-q)))
};

/// Extracts (A_s, B_s) from a point lying over m; throws when the point is
/// not over m within tol.
Case2Fiber case2_extract_fiber(const Case2Model& model, const NullConePoint& pt,
                               double tol = 1e-10);

/// Deterministic on-cone samples of the subpair null cone (A_s, B_s).
std::pair<CMat, CMat> sample_subpair_point(const Case2Model& model, std::uint64_t seed,
                                           std::uint64_t index);

/// Q = (diag K^q) x K^t x K' motion of a Case-II point (u is the O(p-2q)
/// component of the Levi; pass identity when unused).
NullConePoint case2_q_action(const Case2Model& model, const CMat& r1, const CMat& r2,
                             const CMat& g, const CMat& u, const NullConePoint& pt);
Case2Projection case2_q_action_on_m(const CMat& r1, const CMat& r2, const CMat& g,
                                    const Case2Projection& m);

/// Deterministic element of the complex orthogonal group of the Gram matrix.
CMat random_orthogonal(const CMat& gram, std::uint64_t seed, std::string_view op,
                       std::uint64_t index, double scale = 0.4);
CMat random_gl(int n, std::uint64_t seed, std::string_view op, std::uint64_t index,
               double scale = 0.4);

struct ImageClosureReport {
    int samples = 0;
    int contained = 0;          // rank(psi^-(w1)) <= d
    int generic_attained = 0;   // x-image matches the predicted partition
    Partition predicted;        // unsigned shape of the predicted lift (if defined)
    bool have_prediction = false;
    Partition observed;         // Jordan type observed on generic samples
    bool pass = false;
};

/// Samples the null cone of (O(p,q+t), Sp(2n,R)) and checks that psi(pr(w))
/// lies in the closure of O'_d (rank <= d) and that generic samples attain
/// the full rank profile of the lifted orbit.
ImageClosureReport verify_image_closure(const DualPairParams& pp, std::uint64_t seed,
                                        int count);

struct NullConeDimCheck {
    long dim_nullcone = 0;      // Jacobian rank of the action parametrization at z0
    long rank_composite = 0;    // rank of D(phi . pr) restricted to T N
    long k_orbit_dim = 0;       // partition-formula K-orbit dimension of the image
    bool match = false;         // rank_composite == k_orbit_dim
};

/// Consistency of the lift definition: the tangent image of phi . pr on the
/// null cone has the dimension of the lifted K-orbit.
NullConeDimCheck nullcone_dim_check(const DualPairParams& pp);

}  // namespace theta

#endif
