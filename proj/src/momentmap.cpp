#include "theta/momentmap.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "theta/orbitlift.hpp"
#include "theta/rng.hpp"

namespace theta {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

CMat random_complex(int rows, int cols, CounterRng& rng) {
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

/// so(gram) sample: gram^{-1} X with X antisymmetric.  The grams here are
/// indefinite permutation-like matrices, so use a pivoted LU solve.
CMat random_so(const CMat& gram, CounterRng& rng, double scale) {
    const int m = static_cast<int>(gram.rows());
    if (m == 0) return CMat::Zero(0, 0);
    CMat x = random_complex(m, m, rng);
    CMat anti = (x - x.transpose()) * (scale / 2.0);
    return gram.partialPivLu().solve(anti);
}

}  // namespace

CMat isotropic_frame(int p, int n) {
    if (p < 2 * n) throw std::invalid_argument("isotropic_frame: needs p >= 2n");
    CMat e = CMat::Zero(p, n);
    for (int j = 0; j < n; ++j) {
        e(j, j) = 1.0;
        e(p - n + j, j) = kI;
    }
    return e;
}

CMat eye_frame(int p, int n) {
    if (p < n) throw std::invalid_argument("eye_frame: needs p >= n");
    CMat e = CMat::Zero(p, n);
    for (int j = 0; j < n; ++j) e(j, j) = 1.0;
    return e;
}

CMat split_gram(int m, int k) {
    if (m < 2 * k) throw std::invalid_argument("split_gram: needs m >= 2k");
    CMat s = CMat::Zero(m, m);
    for (int i = 0; i < k; ++i) {
        s(i, m - k + i) = 1.0;
        s(m - k + i, i) = 1.0;
    }
    for (int i = k; i < m - k; ++i) s(i, i) = 1.0;
    return s;
}

MomentImages moment_images(const NullConePoint& pt, const CMat* gram_p) {
    MomentImages mi;
    if (gram_p) {
        if (gram_p->rows() != pt.p() || gram_p->cols() != pt.p())
            throw std::invalid_argument("moment_images: gram shape mismatch");
        mi.psi_plus = pt.wplus.transpose() * (*gram_p) * pt.wplus;
    } else {
        mi.psi_plus = pt.wplus.transpose() * pt.wplus;
    }
    mi.psi_minus = pt.w1.transpose() * pt.w1;
    mi.psi2 = pt.w2.transpose() * pt.w2;
    mi.x = pt.wplus * pt.w1.transpose();
    return mi;
}

double on_cone_residual(const NullConePoint& pt, const CMat* gram_p) {
    const MomentImages mi = moment_images(pt, gram_p);
    const double a = mi.psi_plus.cwiseAbs().maxCoeff();
    const double b = (mi.psi_minus + mi.psi2).cwiseAbs().maxCoeff();
    return std::max(a, b);
}

RankInfo svd_rank(const CMat& m, double rel_tol, double gap_factor) {
    RankInfo info;
    if (m.rows() == 0 || m.cols() == 0) {
        info.gap = std::numeric_limits<double>::infinity();
        return info;
    }
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    if (smax == 0.0) {
        info.gap = std::numeric_limits<double>::infinity();
        return info;
    }
    const double cut = rel_tol * smax;
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    info.rank = r;
    if (r == s.size()) {
        info.gap = std::numeric_limits<double>::infinity();
    } else {
        const double below = s(r);
        info.gap = below == 0.0 ? std::numeric_limits<double>::infinity() : s(r - (r > 0)) / below;
        if (r > 0) info.gap = s(r - 1) / (below == 0.0 ? cut * 1e-300 : below);
        if (below == 0.0) info.gap = std::numeric_limits<double>::infinity();
    }
    info.clear = info.gap >= gap_factor;
    return info;
}

namespace {

double operator_norm(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return Eigen::JacobiSVD<CMat>(m).singularValues()(0);
}

/// Rank with an absolute cut tol * scale; for images of quadratic maps the
/// scale of the arguments is the honest reference, not the image itself
/// (an exactly-zero image is all rounding noise).
int rank_at_scale(const CMat& m, double scale, double tol) {
    if (m.rows() == 0 || m.cols() == 0 || scale == 0.0) return 0;
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& s = svd.singularValues();
    const double cut = tol * scale;
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

}  // namespace

RankProfile rank_profile(const NullConePoint& pt, double tol) {
    RankProfile rp;
    rp.tolerance = tol;
    rp.rank_wplus = svd_rank(pt.wplus, tol).rank;
    rp.rank_w1 = svd_rank(pt.w1, tol).rank;
    const double s1 = operator_norm(pt.w1);
    const double sp = operator_norm(pt.wplus);
    rp.rank_w1tw1 = rank_at_scale(pt.w1.transpose() * pt.w1, s1 * s1, tol);
    rp.rank_x = rank_at_scale(pt.wplus * pt.w1.transpose(), sp * s1, tol);
    rp.in_open_stratum = rp.rank_w1 == std::min(pt.q(), pt.n()) &&
                         rp.rank_w1tw1 == std::min(pt.n(), pt.t());
    return rp;
}

CMat random_orthogonal(const CMat& gram, std::uint64_t seed, std::string_view op,
                       std::uint64_t index, double scale) {
    CounterRng rng(seed, op, index);
    if (gram.rows() == 0) return CMat::Zero(0, 0);
    return random_so(gram, rng, scale).exp();
}

CMat random_gl(int n, std::uint64_t seed, std::string_view op, std::uint64_t index,
               double scale) {
    CounterRng rng(seed, op, index);
    if (n == 0) return CMat::Zero(0, 0);
    CMat a = random_complex(n, n, rng) * scale;
    return a.exp();
}

std::vector<NullConePoint> sample_null_cone(const DualPairParams& pp, std::uint64_t seed,
                                            int count, SampleStratum stratum) {
    if (pp.family != PairFamily::OSp)
        throw std::invalid_argument("sample_null_cone: osp family only");
    if (count < 1) throw std::invalid_argument("sample_null_cone: count >= 1");
    const int p = pp.p, q = pp.q, t = pp.t, n = pp.n;
    if (p < 2 * n || q + t < 2 * n)
        throw std::invalid_argument("sample_null_cone: needs min(p,q+t) >= 2n");

    // Reference frames.  Generic: z0 = (E_{p,n}; E_{q+t,n}) split into the
    // q- and t-row blocks.  Boundary: w1 = 0 and an isotropic w2 of the
    // largest feasible rank, so rank(w1) < min(q,n) by construction.
    const CMat ep = isotropic_frame(p, n);
    CMat w1ref, w2ref;
    if (stratum == SampleStratum::generic) {
        const CMat em = isotropic_frame(q + t, n);
        w1ref = em.topRows(q);
        w2ref = em.bottomRows(t);
    } else {
        if (std::min(q, n) == 0)
            throw std::invalid_argument("sample_null_cone: boundary stratum needs q,n >= 1");
        w1ref = CMat::Zero(q, n);
        const int r = std::min(n, t / 2);
        w2ref = CMat::Zero(t, n);
        if (r > 0) w2ref.leftCols(r) = isotropic_frame(t, r);
    }

    const CMat ip = CMat::Identity(p, p), iq = CMat::Identity(q, q), it = CMat::Identity(t, t);
    std::vector<NullConePoint> out;
    out.reserve(count);
    const char* op = stratum == SampleStratum::generic ? "sample_null_cone/generic"
                                                       : "sample_null_cone/boundary";
    for (int k = 0; k < count; ++k) {
        const CMat op_p = random_orthogonal(ip, seed, std::string(op) + ":op", k);
        const CMat op_q = random_orthogonal(iq, seed, std::string(op) + ":oq", k);
        const CMat op_t = random_orthogonal(it, seed, std::string(op) + ":ot", k);
        const CMat g = random_gl(n, seed, std::string(op) + ":g", k);
        const CMat ginv = g.inverse();
        NullConePoint pt;
        pt.wplus = op_p * ep * ginv;
        pt.w1 = op_q * w1ref * g.transpose();
        pt.w2 = op_t * w2ref * g.transpose();
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

/// Columns index a basis of so(m) (antisymmetric matrices), vectorized.
std::vector<std::pair<int, int>> so_basis_indices(int m) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) idx.emplace_back(i, j);
    return idx;
}

void vec_into(const CMat& m, CMat& target, int col, int row_offset) {
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            target(row_offset + j * m.rows() + i, col) = m(i, j);
}

}  // namespace

long numeric_orbit_dim(const CMat& x, ActionGroup group) {
    if (group == ActionGroup::K) {
        const int p = static_cast<int>(x.rows()), q = static_cast<int>(x.cols());
        const auto bi = so_basis_indices(p);
        const auto bj = so_basis_indices(q);
        CMat jac = CMat::Zero(p * q, bi.size() + bj.size());
        int col = 0;
        for (auto [i, j] : bi) {
            CMat a = CMat::Zero(p, p);
            a(i, j) = 1.0;
            a(j, i) = -1.0;
            vec_into(a * x, jac, col++, 0);
        }
        for (auto [i, j] : bj) {
            CMat b = CMat::Zero(q, q);
            b(i, j) = 1.0;
            b(j, i) = -1.0;
            vec_into(x * b.transpose(), jac, col++, 0);
        }
        return svd_rank(jac).rank;
    }
    if (group == ActionGroup::Kprime) {
        const int n = static_cast<int>(x.rows());
        if (x.cols() != n) throw std::invalid_argument("numeric_orbit_dim: square input expected");
        CMat jac = CMat::Zero(n * n, n * n);
        int col = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CMat c = CMat::Zero(n, n);
                c(i, j) = 1.0;
                vec_into(c * x + x * c.transpose(), jac, col++, 0);
            }
        return svd_rank(jac).rank;
    }
    throw std::invalid_argument("numeric_orbit_dim: use numeric_orbit_dim_point for KxKprime");
}

long numeric_orbit_dim_point(const NullConePoint& pt) {
    const int p = pt.p(), q = pt.q(), t = pt.t(), n = pt.n();
    const auto bp = so_basis_indices(p);
    const auto bq = so_basis_indices(q);
    const auto bt = so_basis_indices(t);
    const int wdim = (p + q + t) * n;
    CMat jac = CMat::Zero(wdim, bp.size() + bq.size() + bt.size() + n * n);
    int col = 0;
    auto emit = [&](const CMat& dwp, const CMat& dw1, const CMat& dw2) {
        vec_into(dwp, jac, col, 0);
        vec_into(dw1, jac, col, p * n);
        vec_into(dw2, jac, col, (p + q) * n);
        ++col;
    };
    for (auto [i, j] : bp) {
        CMat a = CMat::Zero(p, p);
        a(i, j) = 1.0;
        a(j, i) = -1.0;
        emit(a * pt.wplus, CMat::Zero(q, n), CMat::Zero(t, n));
    }
    for (auto [i, j] : bq) {
        CMat b = CMat::Zero(q, q);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        emit(CMat::Zero(p, n), b * pt.w1, CMat::Zero(t, n));
    }
    for (auto [i, j] : bt) {
        CMat b = CMat::Zero(t, t);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        emit(CMat::Zero(p, n), CMat::Zero(q, n), b * pt.w2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat c = CMat::Zero(n, n);
            c(i, j) = 1.0;
            emit(-pt.wplus * c, pt.w1 * c.transpose(), pt.w2 * c.transpose());
        }
    return svd_rank(jac).rank;
}

Partition numeric_orbit_partition(const CMat& x, const CMat* gram_p, double tol) {
    const int p = static_cast<int>(x.rows()), q = static_cast<int>(x.cols());
    CMat xi = CMat::Zero(p + q, p + q);
    xi.topRightCorner(p, q) = x;
    if (gram_p)
        xi.bottomLeftCorner(q, p) = -x.transpose() * (*gram_p);
    else
        xi.bottomLeftCorner(q, p) = -x.transpose();
    // Rank of xi^k thresholded at tol * s_max(xi)^k, the natural scale of
    // the k-th power; a relative threshold on xi^k itself would misread a
    // numerically-zero power as full of rank.
    const double s1 = Eigen::JacobiSVD<CMat>(xi).singularValues()(0);
    if (s1 == 0.0) return Partition(std::vector<int>(p + q, 1));
    std::vector<int> ranks;  // rank(xi^k), k = 1, 2, ...
    CMat power = xi;
    double cut = tol * s1;
    for (;;) {
        int r = 0;
        double gap = std::numeric_limits<double>::infinity();
        if (power.rows() > 0) {
            Eigen::JacobiSVD<CMat> svd(power);
            const auto& s = svd.singularValues();
            while (r < s.size() && s(r) > cut) ++r;
            if (r > 0 && r < s.size() && s(r) > 0) gap = s(r - 1) / s(r);
        }
        if (gap < 10.0) {
            std::ostringstream os;
            os << "numeric_orbit_partition: ambiguous spectrum at power " << ranks.size() + 1
               << " (gap " << gap << ")";
            throw std::runtime_error(os.str());
        }
        ranks.push_back(r);
        if (r == 0) break;
        if (static_cast<int>(ranks.size()) > p + q)
            throw std::runtime_error("numeric_orbit_partition: element is not nilpotent");
        power = power * xi;
        cut *= s1;
    }
    std::vector<int> cols;  // number of parts >= k
    int prev = p + q;
    for (int r : ranks) {
        cols.push_back(prev - r);
        prev = r;
    }
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    for (size_t i = 1; i < cols.size(); ++i)
        if (cols[i] > cols[i - 1])
            throw std::runtime_error("numeric_orbit_partition: rank profile is not a partition");
    if (cols.empty()) return Partition(std::vector<int>(p + q, 1));
    return Partition(std::move(cols)).transpose();
}

StabilizerCheck stabilizer_codim_check(int q, int t, int n) {
    if (!(q > n && n > t))
        throw std::invalid_argument("stabilizer_codim_check: requires q > n > t");
    if (q + t < 2 * n)
        throw std::invalid_argument(
            "stabilizer_codim_check: reference frame needs q+t >= 2n");
    StabilizerCheck sc;
    sc.dim_S0_formula = (n * n - n + q * q - q + t * t - t) / 2 + n * (n - q - t + 1);
    sc.codim = 1 + n - t;

    const CMat em = isotropic_frame(q + t, n);
    const CMat w1 = em.topRows(q), w2 = em.bottomRows(t);
    const auto bq = so_basis_indices(q);
    const auto bt = so_basis_indices(t);
    const int kdim = static_cast<int>(bq.size() + bt.size()) + n * n;
    CMat jac = CMat::Zero((q + t) * n, kdim);
    int col = 0;
    auto emit = [&](const CMat& d1, const CMat& d2) {
        vec_into(d1, jac, col, 0);
        vec_into(d2, jac, col, q * n);
        ++col;
    };
    for (auto [i, j] : bq) {
        CMat b = CMat::Zero(q, q);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        emit(b * w1, CMat::Zero(t, n));
    }
    for (auto [i, j] : bt) {
        CMat b = CMat::Zero(t, t);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        emit(CMat::Zero(q, n), b * w2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat c = CMat::Zero(n, n);
            c(i, j) = 1.0;
            emit(w1 * c.transpose(), w2 * c.transpose());
        }
    sc.dim_S0_numeric = kdim - static_cast<int>(svd_rank(jac).rank);
    sc.match = sc.dim_S0_numeric == sc.dim_S0_formula;
    if (!sc.match) {
        std::ostringstream os;
        os << "stabilizer_codim_check: numeric " << sc.dim_S0_numeric << " != formula "
           << sc.dim_S0_formula << " at (q,t,n)=(" << q << "," << t << "," << n << ")";
        throw std::runtime_error(os.str());
    }
    return sc;
}

CaseIReference case1_reference(int p, int q, int t, int n) {
    CaseIReference ref{p, q, t, n, {}, {}, {}};
    ref.yplus = isotropic_frame(p, n);
    ref.yminus = isotropic_frame(q + t, n).topRows(q);
    ref.x = ref.yplus * ref.yminus.transpose();
    return ref;
}

BetaResult beta_map(const CMat& kp, const CMat& kq, const CaseIReference& ref, double tol) {
    // k_p stabilizes col(y+), so k_p y+ = y+ B has an exact solution B.
    const CMat& yp = ref.yplus;
    const CMat gram = yp.adjoint() * yp;
    BetaResult res;
    res.beta = gram.ldlt().solve(yp.adjoint() * (kp * yp));
    // residual of (k, beta(k)) . y = (k_p y+ beta^{-1}, k_q y- beta^T) vs y
    const CMat binv = res.beta.inverse();
    const double r1 = (kp * yp * binv - yp).cwiseAbs().maxCoeff();
    const double r2 = (kq * ref.yminus * res.beta.transpose() - ref.yminus).cwiseAbs().maxCoeff();
    res.residual = std::max(r1, r2);
    if (res.residual > tol) {
        std::ostringstream os;
        os << "beta_map: residual " << res.residual << " exceeds " << tol
           << "; (k_p,k_q) does not stabilize the reference point";
        throw std::runtime_error(os.str());
    }
    return res;
}

std::pair<CMat, CMat> sample_stabilizer_element(const CaseIReference& ref, std::uint64_t seed,
                                                std::uint64_t index) {
    const int p = ref.p, q = ref.q;
    const auto bp = so_basis_indices(p);
    const auto bq = so_basis_indices(q);
    CMat jac = CMat::Zero(p * q, bp.size() + bq.size());
    int col = 0;
    for (auto [i, j] : bp) {
        CMat a = CMat::Zero(p, p);
        a(i, j) = 1.0;
        a(j, i) = -1.0;
        vec_into(a * ref.x, jac, col++, 0);
    }
    for (auto [i, j] : bq) {
        CMat b = CMat::Zero(q, q);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        vec_into(ref.x * b.transpose(), jac, col++, 0);
    }
    Eigen::JacobiSVD<CMat> svd(jac, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = 1e-10 * (s.size() ? s(0) : 1.0);
    std::vector<int> null_cols;
    for (int i = 0; i < svd.matrixV().cols(); ++i)
        if (i >= s.size() || s(i) <= cut) null_cols.push_back(i);
    CounterRng rng(seed, "stabilizer_element", index);
    Eigen::VectorXcd combo = Eigen::VectorXcd::Zero(jac.cols());
    for (int c : null_cols) combo += rng.complex_normal() * svd.matrixV().col(c);
    combo *= 0.4 / std::max(1.0, combo.norm());
    CMat a = CMat::Zero(p, p), b = CMat::Zero(q, q);
    col = 0;
    for (auto [i, j] : bp) {
        a(i, j) += combo(col);
        a(j, i) -= combo(col);
        ++col;
    }
    for (auto [i, j] : bq) {
        b(i, j) += combo(col);
        b(j, i) -= combo(col);
        ++col;
    }
    return {a.exp(), b.exp()};
}

CMat levi_orthogonal_element(const CMat& g, int p, int n) {
    const CMat e = isotropic_frame(p, n);
    const CMat ebar = e.conjugate();
    const CMat half = 0.5 * (e * ebar.transpose() + ebar * e.transpose());
    const CMat p0 = CMat::Identity(p, p) - half;
    return 0.5 * (e * g * ebar.transpose() + ebar * g.inverse().transpose() * e.transpose()) + p0;
}

Case2Model case2_model(int p, int q, int t, int n) {
    if (!(q < n && n <= q + t))
        throw std::invalid_argument("case2_model: requires q < n <= q+t");
    if (p < 2 * n)
        throw std::invalid_argument("case2_model: requires p >= 2n");
    Case2Model m{p, q, t, n, {}, {}};
    m.gram_mid = split_gram(p - 2 * q, n - q);
    CMat s = CMat::Zero(p, p);
    for (int i = 0; i < q; ++i) {
        s(i, p - q + i) = 1.0;
        s(p - q + i, i) = 1.0;
    }
    s.block(q, q, p - 2 * q, p - 2 * q) = m.gram_mid;
    m.gram_p = s;
    return m;
}

NullConePoint case2_z0(const Case2Model& model) {
    const int p = model.p, q = model.q, t = model.t, n = model.n;
    NullConePoint pt;
    pt.wplus = eye_frame(p, n);
    pt.w1 = CMat::Zero(q, n);
    pt.w1.leftCols(q) = CMat::Identity(q, q);
    pt.w2 = CMat::Zero(t, n);
    pt.w2.block(0, 0, q, q) = kI * CMat::Identity(q, q);
    pt.w2.block(q, q, t - q, n - q) = isotropic_frame(t - q, n - q);
    return pt;
}

Case2Projection case2_projection(const Case2Model& model, const NullConePoint& pt) {
    Case2Projection pr;
    pr.m1 = pt.wplus.topRows(model.q);
    pr.m2 = pt.w1;
    pr.m3 = pr.m1 * pt.w2.transpose();
    return pr;
}

Case2Projection case2_reference_m(const Case2Model& model) {
    Case2Projection m;
    m.m1 = eye_frame(model.n, model.q).transpose();  // I_{q,n}, q <= n here
    m.m2 = m.m1;
    m.m3 = kI * eye_frame(model.t, model.q).transpose();
    return m;
}

double projection_distance(const Case2Projection& a, const Case2Projection& b) {
    return std::max({(a.m1 - b.m1).cwiseAbs().maxCoeff(), (a.m2 - b.m2).cwiseAbs().maxCoeff(),
                     (a.m3 - b.m3).cwiseAbs().maxCoeff()});
}

NullConePoint case2_fiber_point(const Case2Model& model, const CMat& As, const CMat& Bs) {
    const int p = model.p, q = model.q, t = model.t, n = model.n;
    if (As.rows() != p - 2 * q || As.cols() != n - q || Bs.rows() != t - q ||
        Bs.cols() != n - q)
        throw std::invalid_argument("case2_fiber_point: shape mismatch");
    NullConePoint pt;
    pt.wplus = CMat::Zero(p, n);
    pt.wplus.block(0, 0, q, q) = CMat::Identity(q, q);
    pt.wplus.block(q, q, p - 2 * q, n - q) = As;
    pt.w1 = CMat::Zero(q, n);
    pt.w1.leftCols(q) = CMat::Identity(q, q);
    pt.w2 = CMat::Zero(t, n);
    pt.w2.block(0, 0, q, q) = kI * CMat::Identity(q, q);
    pt.w2.block(q, q, t - q, n - q) = Bs;
    return pt;
}

Case2Fiber case2_extract_fiber(const Case2Model& model, const NullConePoint& pt, double tol) {
    const Case2Projection pr = case2_projection(model, pt);
    const Case2Projection m = case2_reference_m(model);
    const double dist = projection_distance(pr, m);
    if (dist > tol) {
        std::ostringstream os;
        os << "case2_extract_fiber: point is not over m (distance " << dist << ")";
        throw std::runtime_error(os.str());
    }
    Case2Fiber f;
    f.As = pt.wplus.block(model.q, model.q, model.ps(), model.ns());
    f.Bs = pt.w2.block(model.q, model.q, model.ts(), model.ns());
    const double ra = (f.As.transpose() * model.gram_mid * f.As).cwiseAbs().maxCoeff();
    const double rb = (f.Bs.transpose() * f.Bs).cwiseAbs().maxCoeff();
    f.psi_residual = std::max(ra, rb);
    return f;
}

std::pair<CMat, CMat> sample_subpair_point(const Case2Model& model, std::uint64_t seed,
                                           std::uint64_t index) {
    const int ps = model.ps(), ts = model.ts(), ns = model.ns();
    const CMat o = random_orthogonal(model.gram_mid, seed, "case2_subpair:o", index);
    const CMat o2 = random_orthogonal(CMat::Identity(ts, ts), seed, "case2_subpair:o2", index);
    const CMat g = random_gl(ns, seed, "case2_subpair:g", index);
    const CMat as = o * eye_frame(ps, ns) * g.inverse();
    const CMat bs = o2 * isotropic_frame(ts, ns) * g.transpose();
    return {as, bs};
}

NullConePoint case2_q_action(const Case2Model& model, const CMat& r1, const CMat& r2,
                             const CMat& g, const CMat& u, const NullConePoint& pt) {
    const int p = model.p, q = model.q;
    CMat levi = CMat::Zero(p, p);
    levi.block(0, 0, q, q) = r1;
    levi.block(q, q, p - 2 * q, p - 2 * q) = u;
    levi.block(p - q, p - q, q, q) = r1;  // r1^{-T} = r1 for orthogonal r1
    NullConePoint out;
    out.wplus = levi * pt.wplus * g.inverse();
    out.w1 = r1 * pt.w1 * g.transpose();
    out.w2 = r2 * pt.w2 * g.transpose();
    return out;
}

Case2Projection case2_q_action_on_m(const CMat& r1, const CMat& r2, const CMat& g,
                                    const Case2Projection& m) {
    Case2Projection out;
    out.m1 = r1 * m.m1 * g.inverse();
    out.m2 = r1 * m.m2 * g.transpose();
    out.m3 = r1 * m.m3 * r2.transpose();
    return out;
}

ImageClosureReport verify_image_closure(const DualPairParams& pp, std::uint64_t seed,
                                        int count) {
    if (!in_stable_range(pp))
        throw std::invalid_argument("verify_image_closure: requires the stable range");
    ImageClosureReport rep;
    rep.samples = count;
    const int d = std::min(pp.t, pp.n);
    const auto lift = lift_Od(pp.p, pp.q, pp.t, pp.n);
    rep.have_prediction = lift.ok();
    if (lift.ok()) rep.predicted = lift.value().shape();

    const auto pts = sample_null_cone(pp, seed, count, SampleStratum::generic);
    bool first = true;
    for (const auto& pt : pts) {
        const CMat xprime = pt.w1.transpose() * pt.w1;
        const double s1 = operator_norm(pt.w1);
        if (rank_at_scale(xprime, s1 * s1, 1e-8) <= d) ++rep.contained;
        const Partition shape = numeric_orbit_partition(pt.wplus * pt.w1.transpose());
        if (first) {
            rep.observed = shape;
            first = false;
        }
        if (rep.have_prediction && shape == rep.predicted) ++rep.generic_attained;
    }
    rep.pass = rep.contained == rep.samples &&
               (!rep.have_prediction || rep.generic_attained == rep.samples);
    return rep;
}

NullConeDimCheck nullcone_dim_check(const DualPairParams& pp) {
    NullConeDimCheck chk;
    const auto pts = sample_null_cone(pp, 7, 1, SampleStratum::generic);
    const NullConePoint& z = pts[0];
    chk.dim_nullcone = numeric_orbit_dim_point(z);

    // Composite D(phi . pr) restricted to the tangent space of the orbit:
    // columns are images of the Lie algebra directions.
    const int p = z.p(), q = z.q(), t = z.t(), n = z.n();
    const auto bp = so_basis_indices(p);
    const auto bq = so_basis_indices(q);
    const auto bt = so_basis_indices(t);
    CMat jac = CMat::Zero(p * q, bp.size() + bq.size() + bt.size() + n * n);
    int col = 0;
    auto emit = [&](const CMat& dwp, const CMat& dw1) {
        vec_into(dwp * z.w1.transpose() + z.wplus * dw1.transpose(), jac, col++, 0);
    };
    for (auto [i, j] : bp) {
        CMat a = CMat::Zero(p, p);
        a(i, j) = 1.0;
        a(j, i) = -1.0;
        emit(a * z.wplus, CMat::Zero(q, n));
    }
    for (auto [i, j] : bq) {
        CMat b = CMat::Zero(q, q);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        emit(CMat::Zero(p, n), b * z.w1);
    }
    for (size_t k = 0; k < bt.size(); ++k) emit(CMat::Zero(p, n), CMat::Zero(q, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat c = CMat::Zero(n, n);
            c(i, j) = 1.0;
            emit(-z.wplus * c, z.w1 * c.transpose());
        }
    chk.rank_composite = svd_rank(jac).rank;

    const auto lift = lift_Od(pp.p, pp.q, pp.t, pp.n);
    if (lift.ok()) {
        chk.k_orbit_dim = orbit_dim(lift.value(), OrbitLevel::K_orbit);
        chk.match = chk.rank_composite == chk.k_orbit_dim;
    } else {
        const Partition shape = numeric_orbit_partition(z.wplus * z.w1.transpose());
        chk.k_orbit_dim =
            orbit_dim(shape, LieType::so(pp.p + pp.q), OrbitLevel::K_orbit);
        chk.match = chk.rank_composite == chk.k_orbit_dim;
    }
    return chk;
}

}  // namespace theta
