#include "theta/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace theta {

namespace {

// ---- twisted variable collections ------------------------------------------
//
// A variable carries a torus weight and, per O-factor, its behaviour under
// the component reflection: even O factors swap the last split pair (a
// permutation of variables), odd O factors act by -1 (a sign).

struct VariableSet {
    ProductGroup group;
    std::vector<Weight> weights;              // full-rank torus weight per variable
    // reflection data per factor index: permutation image and sign
    std::map<int, std::vector<int>> perm;     // factor -> permutation of variables
    std::map<int, std::vector<int>> sign;     // factor -> +-1 per variable

    int count() const { return static_cast<int>(weights.size()); }
};

/// Split-basis weight of coordinate a of C^m: +eps for the first k indices,
/// -eps for the next k, 0 for the odd leftover.
void o_coordinate_weight(int m, int a, std::vector<int>& block) {
    const int k = m / 2;
    std::fill(block.begin(), block.end(), 0);
    if (a < k)
        block[a] = 1;
    else if (a < 2 * k)
        block[a - k] = -1;
}

/// Variables of C[W] for W = M_{p,n} + M_{q,n}: group O(p) x O(q) x U(n).
VariableSet fock_variables(int p, int q, int n) {
    VariableSet vs;
    vs.group.factors = {GroupFactor{FactorKind::O, p}, GroupFactor{FactorKind::O, q},
                        GroupFactor{FactorKind::U, n}};
    const int kp = p / 2, kq = q / 2;
    const int rank = kp + kq + n;
    auto add_side = [&](int m, int offset, int ucharge) {
        std::vector<int> oblock(m / 2, 0);
        for (int a = 0; a < m; ++a)
            for (int j = 0; j < n; ++j) {
                Weight w(rank, 0);
                o_coordinate_weight(m, a, oblock);
                std::copy(oblock.begin(), oblock.end(), w.begin() + offset);
                w[kp + kq + j] = ucharge;
                vs.weights.push_back(std::move(w));
            }
    };
    add_side(p, 0, +1);
    add_side(q, kp, -1);

    auto reflection = [&](int factor, int m, int var_base) {
        std::vector<int> pm(vs.count()), sg(vs.count(), 1);
        std::iota(pm.begin(), pm.end(), 0);
        const int k = m / 2;
        if (m % 2 == 1) {
            // -I on C^m: every variable of this side flips sign
            for (int a = 0; a < m; ++a)
                for (int j = 0; j < n; ++j) sg[var_base + a * n + j] = -1;
        } else if (k >= 1) {
            // swap the split pair (k-1) <-> (2k-1)
            for (int j = 0; j < n; ++j)
                std::swap(pm[var_base + (k - 1) * n + j], pm[var_base + (2 * k - 1) * n + j]);
        }
        vs.perm[factor] = std::move(pm);
        vs.sign[factor] = std::move(sg);
    };
    reflection(0, p, 0);
    reflection(1, q, p * n);
    return vs;
}

/// Variables spanning p' = psi-pullback directions: U(n)-weights
/// +-(eps_j + eps_l), trivial O-weights and reflections.
VariableSet pprime_variables(int p, int q, int n) {
    VariableSet vs;
    vs.group.factors = {GroupFactor{FactorKind::O, p}, GroupFactor{FactorKind::O, q},
                        GroupFactor{FactorKind::U, n}};
    const int kp = p / 2, kq = q / 2;
    const int rank = kp + kq + n;
    for (int s : {+1, -1})
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                Weight w(rank, 0);
                w[kp + kq + j] += s;
                w[kp + kq + l] += s;
                vs.weights.push_back(std::move(w));
            }
    for (int f : {0, 1}) {
        std::vector<int> pm(vs.count());
        std::iota(pm.begin(), pm.end(), 0);
        vs.perm[f] = pm;
        vs.sign[f] = std::vector<int>(vs.count(), 1);
    }
    return vs;
}

/// Projects a full-rank weight onto the mask layout (drop the last torus
/// coordinate of twisted even-O blocks).
Weight project_weight(const ProductGroup& g, std::uint32_t mask, const Weight& w) {
    Weight out;
    const auto off = g.offsets();
    for (size_t i = 0; i < g.factors.size(); ++i) {
        int r = g.factors[i].torus_rank();
        if ((mask & (1u << i)) && g.factors[i].is_even_o()) r -= 1;
        out.insert(out.end(), w.begin() + off[i], w.begin() + off[i] + r);
    }
    return out;
}

/// Power sums p_j of the (torus x reflection_S)-action on the variable
/// span, as weight maps in the mask layout.
std::vector<WeightMap> power_sums(const VariableSet& vs, std::uint32_t mask, int jmax) {
    const int nv = vs.count();
    std::vector<int> pm(nv), sg(nv, 1);
    std::iota(pm.begin(), pm.end(), 0);
    for (size_t i = 0; i < vs.group.factors.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        auto it = vs.perm.find(static_cast<int>(i));
        if (it == vs.perm.end()) continue;
        std::vector<int> pm2(nv), sg2(nv);
        for (int v = 0; v < nv; ++v) {
            pm2[v] = it->second[pm[v]];
            sg2[v] = sg[pm[v]] * vs.sign.at(static_cast<int>(i))[pm[v]];
        }
        pm = std::move(pm2);
        sg = std::move(sg2);
    }

    std::vector<WeightMap> p(jmax + 1);
    std::vector<char> seen(nv, 0);
    for (int v0 = 0; v0 < nv; ++v0) {
        if (seen[v0]) continue;
        // walk the cycle of v0
        std::vector<int> cycle;
        int v = v0;
        do {
            seen[v] = 1;
            cycle.push_back(v);
            v = pm[v];
        } while (v != v0);
        const int L = static_cast<int>(cycle.size());
        // sign of one full traversal and total weight along it
        int eps = 1;
        Weight omega(twisted_rank(vs.group, mask), 0);
        for (int u : cycle) {
            eps *= sg[u];
            const Weight pw = project_weight(vs.group, mask, vs.weights[u]);
            for (size_t i = 0; i < omega.size(); ++i) omega[i] += pw[i];
        }
        for (int j = L; j <= jmax; j += L) {
            const int rep = j / L;
            const long long coeff =
                static_cast<long long>(L) * ((eps < 0 && rep % 2 == 1) ? -1 : 1);
            Weight w(omega.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = rep * omega[i];
            p[j][w] += coeff;
        }
    }
    return p;
}

/// Symmetric-power traces h_0..h_dmax from the power sums (Newton).
std::vector<WeightMap> sym_powers(const VariableSet& vs, std::uint32_t mask, int dmax,
                                  std::size_t weight_cap) {
    const auto p = power_sums(vs, mask, dmax);
    std::vector<WeightMap> h(dmax + 1);
    h[0] = {{Weight(twisted_rank(vs.group, mask), 0), 1}};
    for (int d = 1; d <= dmax; ++d) {
        WeightMap acc;
        for (int j = 1; j <= d; ++j) add_scaled(acc, convolve(p[j], h[d - j]), 1);
        WeightMap& out = h[d];
        for (const auto& [w, c] : acc) {
            if (c % d != 0) {
                std::ostringstream os;
                os << "sym_powers: non-integral trace at d=" << d << " mask=" << mask
                   << " c=" << c << " w=[";
                for (int x : w) os << x << ",";
                os << "]";
                throw std::logic_error(os.str());
            }
            if (c != 0) out[w] = c / d;
        }
        if (out.size() > weight_cap)
            throw std::runtime_error("sym_powers: weight map exceeds the configured cap");
    }
    return h;
}

GradedCharacter graded_from_sym(const VariableSet& vs, int dmax, std::size_t cap) {
    GradedCharacter gc;
    gc.group = vs.group;
    gc.degree.assign(dmax + 1, FormalCharacter(vs.group));
    FormalCharacter probe(vs.group);
    for (const auto mask : probe.masks()) {
        auto h = sym_powers(vs, mask, dmax, cap);
        for (int d = 0; d <= dmax; ++d) gc.degree[d].slice_mut(mask) = std::move(h[d]);
    }
    return gc;
}

}  // namespace

GradedCharacter fock_graded_character(int p, int q, int n, int dmax, std::size_t cap) {
    if (p < 1 || q < 0 || n < 1 || dmax < 0)
        throw std::invalid_argument("fock_graded_character: bad parameters");
    return graded_from_sym(fock_variables(p, q, n), dmax, cap);
}

GradedCharacter nullcone_graded_character(int p, int q, int n, int dmax, std::size_t cap) {
    if (!in_stable_range(DualPairParams::osp(p, q, 0, n)))
        throw std::invalid_argument("nullcone_graded_character: requires the stable range");
    GradedCharacter w = fock_graded_character(p, q, n, dmax, cap);
    GradedCharacter sym;
    sym.group = w.group;
    {
        const VariableSet pv = pprime_variables(p, q, n);
        sym = graded_from_sym(pv, dmax / 2, cap);
    }
    GradedCharacter nc;
    nc.group = w.group;
    nc.degree.assign(dmax + 1, FormalCharacter(w.group));
    for (int d = 0; d <= dmax; ++d) {
        FormalCharacter acc = w.degree[d];
        for (int e = 1; 2 * e <= d && e <= sym.dmax(); ++e)
            acc.add_scaled_char(sym.degree[e].tensor(nc.degree[d - 2 * e]), -1);
        // freeness of C[W] over S(p') in the stable range makes every
        // coefficient nonnegative; a negative one is a hard failure
        for (const auto& [wt, c] : acc.slice(0))
            if (c < 0)
                throw std::runtime_error(
                    "nullcone_graded_character: negative coefficient at degree " +
                    std::to_string(d) + " (freeness violated)");
        nc.degree[d] = std::move(acc);
    }
    return nc;
}

GradedCharacter theta_sigma_spectrum(int p, int q, int n, int dmax, std::size_t cap) {
    if ((p + q) % 2 != 0)
        throw std::invalid_argument("theta_sigma_spectrum: p+q must be even");
    GradedCharacter nc = nullcone_graded_character(p, q, n, dmax, cap);
    GradedCharacter out;
    out.group.factors = {GroupFactor{FactorKind::O, p}, GroupFactor{FactorKind::O, q}};
    out.degree.reserve(dmax + 1);
    const std::vector<int> alabel(n, (q - p) / 2);  // invariants of (.) (x) det^{(p-q)/2}
    for (int d = 0; d <= dmax; ++d)
        out.degree.push_back(extract_u_factor(nc.degree[d], 2, alabel));
    return out;
}

std::vector<KTypeEntry> ktype_table(const FormalCharacter& ch) {
    const auto& g = ch.group();
    if (g.factors.size() != 2 || g.factors[0].kind != FactorKind::O ||
        g.factors[1].kind != FactorKind::O)
        throw std::invalid_argument("ktype_table: expects an O x O character");
    std::vector<KTypeEntry> out;
    for (const auto& [lab, m] : ch.decompose())
        out.push_back(KTypeEntry{lab.o[0], lab.o[1], m});
    return out;
}

OLabel effective_compact_label(const GenuineCompactType& mu, int t, int n) {
    if (mu.half_twist != (n % 2 == 1))
        throw std::invalid_argument(
            "effective_compact_label: half_twist must match the parity of n");
    const Partition pt = mu.partition.transpose();
    if (pt.row(0) + pt.row(1) > t)
        throw std::invalid_argument("effective_compact_label: label does not fit O(t)");
    // varsigma_2 (x) mu with varsigma_2^2 = det^{n mod 2}; only the parity
    // of the twist survives on the compact orthogonal group
    return canonical_o_label(mu.partition, (mu.det_twist + n) % 2, t);
}

long long genuine_type_dim(const GenuineCompactType& mu, int t) {
    return o_irrep_dim(canonical_o_label(mu.partition, mu.det_twist, t), t);
}

long long case1_isotropy_dim(const GenuineCompactType& mu, int t, int n) {
    if (t <= n) return genuine_type_dim(mu, t);
    const OLabel tau = effective_compact_label(mu, t, n);
    const auto restricted = branch_O(tau, t, n);  // down to O(t-n)
    auto it = restricted.find(OLabel{Partition(), 0});
    return it == restricted.end() ? 0 : it->second;
}

Case2Isotropy case2_isotropy_dim(const DualPairParams& pp, const GenuineCompactType& mu,
                                 int dmax, int window) {
    if (pp.family != PairFamily::OSp)
        throw std::invalid_argument("case2_isotropy_dim: osp family only");
    if (!in_stable_range(pp) || classify_case(pp) != LiftCase::II)
        throw std::invalid_argument("case2_isotropy_dim: requires stable range and q < n");
    const int ps = pp.p - 2 * pp.q, ts = pp.t - pp.q, ns = pp.n - pp.q;
    if (!in_stable_range(DualPairParams::osp(ps, ts, 0, ns)))
        throw std::logic_error("case2_isotropy_dim: subpair left the stable range");

    // mu restricted to O(t-q), dimension-weighted over the O(q) side
    const OLabel mu_eff = effective_compact_label(mu, pp.t, pp.n);
    const auto mu_rest = branch_O(mu_eff, pp.t, pp.q);

    const GradedCharacter spec = theta_sigma_spectrum(ps, ts, ns, dmax);
    Case2Isotropy res;
    long long acc = 0;
    int stable_run = 0;
    for (int d = 0; d <= dmax; ++d) {
        long long contrib = 0;
        for (const auto& e : ktype_table(spec.degree[d])) {
            auto it = mu_rest.find(e.second);
            if (it == mu_rest.end()) continue;
            contrib += e.mult * it->second * o_irrep_dim(e.first, ps);
        }
        acc += contrib;
        res.partial.push_back(acc);
        stable_run = contrib == 0 ? stable_run + 1 : 0;
        if (stable_run >= window) {
            res.stabilized = true;
            res.degree_reached = d;
            break;
        }
    }
    res.dim = acc;
    if (!res.stabilized) res.degree_reached = dmax;
    return res;
}

ThetaLCycle assoc_cycle_theta_L(const DualPairParams& pp, const GenuineCompactType& mu,
                                int dmax, int window) {
    if (pp.family != PairFamily::OSp)
        throw std::invalid_argument("assoc_cycle_theta_L: osp family only");
    if (!in_stable_range(pp))
        throw std::invalid_argument("assoc_cycle_theta_L: requires eq-(16) range");
    ThetaLCycle out;
    auto lift = lift_Od(pp.p, pp.q, pp.t, pp.n);
    out.provenance = lift.provenance;
    if (!lift.ok()) {
        out.orbit_flagged = true;
        out.diagnostic = lift.diagnostic;
        return out;
    }
    long long mult = 0;
    if (classify_case(pp) == LiftCase::I) {
        mult = case1_isotropy_dim(mu, pp.t, pp.n);
    } else {
        auto c2 = case2_isotropy_dim(pp, mu, dmax, window);
        out.stabilized = c2.stabilized;
        mult = c2.dim;
        if (!c2.stabilized)
            out.diagnostic = "case II truncation did not stabilize within dmax=" +
                             std::to_string(dmax);
    }
    out.nonzero = mult > 0;
    if (mult > 0) out.cycle.add(mult, lift.value());
    return out;
}

}  // namespace theta
