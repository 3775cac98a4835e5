#include "theta/dualpair.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

std::string to_string(PairFamily f) {
    switch (f) {
        case PairFamily::OSp: return "osp";
        case PairFamily::UU: return "uu";
        case PairFamily::SpOstar: return "spostar";
    }
    return "?";
}

std::optional<PairFamily> parse_family(const std::string& s) {
    if (s == "osp" || s == "OSp") return PairFamily::OSp;
    if (s == "uu" || s == "UU") return PairFamily::UU;
    if (s == "spostar" || s == "SpOstar" || s == "spo") return PairFamily::SpOstar;
    return std::nullopt;
}

void DualPairParams::check_basic() const {
    if (p < 0 || q < 0 || t < 0 || n1 < 0 || n2 < 0)
        throw std::invalid_argument("DualPairParams: negative parameter");
    if (family != PairFamily::UU && n < 1)
        throw std::invalid_argument("DualPairParams: n must be positive");
    if (family == PairFamily::UU && n1 + n2 < 1)
        throw std::invalid_argument("DualPairParams: n1+n2 must be positive");
}

bool in_stable_range(const DualPairParams& pp) {
    pp.check_basic();
    switch (pp.family) {
        case PairFamily::OSp: {
            const int a = pp.p, b = pp.q + pp.t;
            return std::min(a, b) >= 2 * pp.n && std::max(a, b) > 2 * pp.n &&
                   (pp.p + pp.q + pp.t) % 2 == 0;
        }
        case PairFamily::UU:
            return pp.p >= pp.n1 + pp.n2 && pp.q + pp.t >= pp.n1 + pp.n2;
        case PairFamily::SpOstar:
            return pp.p >= pp.n && pp.q + pp.t >= pp.n;
    }
    return false;
}

LiftCase classify_case(const DualPairParams& pp) {
    if (!in_stable_range(pp))
        throw std::invalid_argument("classify_case: parameters not in stable range");
    switch (pp.family) {
        case PairFamily::OSp:
            return pp.q >= pp.n ? LiftCase::I : LiftCase::II;
        case PairFamily::UU:
            return (pp.q >= pp.n1 && pp.q >= pp.n2) ? LiftCase::I : LiftCase::II;
        case PairFamily::SpOstar:
            return 2 * pp.q >= pp.n ? LiftCase::I : LiftCase::II;
    }
    return LiftCase::I;
}

BoundaryCodim boundary_codim_ok(const DualPairParams& pp) {
    pp.check_basic();
    BoundaryCodim r;
    switch (pp.family) {
        case PairFamily::OSp: {
            if (pp.n <= std::min(pp.q, pp.t))
                throw std::invalid_argument(
                    "boundary_codim_ok: requires n > min(q,t) for family osp");
            // q > n > t and the symmetric branch swap the roles of q and t.
            r.codim = 1 + pp.n - std::min(pp.q, pp.t);
            r.ok = r.codim >= 2;
            return r;
        }
        case PairFamily::UU: {
            r.ok = std::max(pp.n1, pp.n2) > std::min({pp.t, pp.n1, pp.n2});
            return r;
        }
        case PairFamily::SpOstar: {
            r.ok = (pp.n > 2 * pp.t) || (pp.n % 2 == 1);
            return r;
        }
    }
    return r;
}

NormalizationResult normalize_outside_range(int p, int q, int t, int n) {
    DualPairParams pp = DualPairParams::osp(p, q, t, n);
    NormalizationResult res;
    res.params = pp;
    if (in_stable_range(pp))
        throw std::invalid_argument("normalize_outside_range: parameters are in stable range");

    if (p == q + t && p <= 2 * n) {  // case (A)
        if (n >= p) {
            res.applies = true;
            res.finite_dim = true;
            res.note = "finite dimensional; associated variety is the zero orbit";
            return res;
        }
        res.applies = true;
        res.n_effective = p - 1 - n;
        res.twist = Twist::none;
        res.note = "theta_n = theta_{p-1-n} on O(p,p)";
        return res;
    }
    if (q + t == p + 2 && n <= p && p <= 2 * n - 1) {  // case (B)
        res.applies = true;
        res.n_effective = p - n;
        res.twist = Twist::delta;
        res.note = "delta * theta_n = theta_{p-n} on O(p,p+2)";
        return res;
    }
    res.applies = false;
    res.note = "unhandled (lift is zero or requires the omitted analysis of case (A))";
    return res;
}

}  // namespace theta
