// Parameter records for the dual pairs and the range/case predicates:
// stable range, Case I/II, boundary codimension, outside-stable-range
// normalization.

#ifndef THETA_DUALPAIR_HPP
#define THETA_DUALPAIR_HPP

#include <optional>
#include <string>

namespace theta {

enum class PairFamily {
    OSp,      // (O(p,q), Sp(2n,R)); t is the size of the compact O(t) factor
    UU,       // (U(p,q), U(n1,n2))
    SpOstar,  // (Sp(2p,2q), O*(2n))
};

std::string to_string(PairFamily f);
std::optional<PairFamily> parse_family(const std::string& s);

/// Parameters of a dual pair.  Derived flags (stable, case, parity) are
/// always recomputed from the fields, never stored.
struct DualPairParams {
    PairFamily family = PairFamily::OSp;
    int p = 0;
    int q = 0;
    int t = 0;   // compact factor size (OSp and SpOstar); also used by UU
    int n = 1;   // OSp: Sp(2n,R); SpOstar: O*(2n)
    int n1 = 0;  // UU only
    int n2 = 0;  // UU only

    static DualPairParams osp(int p, int q, int t, int n) {
        DualPairParams pp;
        pp.family = PairFamily::OSp;
        pp.p = p; pp.q = q; pp.t = t; pp.n = n;
        return pp;
    }

    /// Throws std::invalid_argument on negative entries or n < 1.
    void check_basic() const;
};

enum class LiftCase { I, II };

/// OSp: min(p, q+t) >= 2n, max(p, q+t) > 2n and p+q+t even.
/// UU: p, q+t >= n1+n2.  SpOstar: p, q+t >= n.  The compact factor is
/// folded into q throughout, matching the OSp convention.
bool in_stable_range(const DualPairParams& pp);

/// OSp: Case I iff q >= n.  UU: I iff q >= n1 and q >= n2.
/// SpOstar: I iff 2q >= n.  Requires the stable range.
LiftCase classify_case(const DualPairParams& pp);

struct BoundaryCodim {
    bool ok = false;  // codim of the boundary of the open stratum is >= 2
    int codim = -1;   // the value where a closed formula exists (OSp), else -1
};

/// Codimension condition on the boundary of the open null-cone stratum.
/// OSp requires n > min(q,t) and evaluates 1+n-t (branch q > n > t) or the
/// symmetric 1+n-q (branch n > q); UU and SpOstar use the tabulated
/// predicates.  Throws when the OSp hypothesis n > min(q,t) fails.
BoundaryCodim boundary_codim_ok(const DualPairParams& pp);

enum class Twist { none, delta };

struct NormalizationResult {
    DualPairParams params;     // the input, for the record
    bool applies = false;      // false: zero lift or analysis omitted ("unhandled")
    bool finite_dim = false;   // lift is finite dimensional; AV is the zero orbit
    int n_effective = -1;      // remapped n when applies && !finite_dim
    Twist twist = Twist::none;
    std::string note;
};

/// Normalization of theta lifts of the unitary character outside the stable
/// range (family OSp, the compact factor folded into q+t):
///  (A) p = q+t <= 2n: n <= p-1 remaps to n_eff = p-1-n (no twist);
///      n >= p is finite dimensional.
///  (B) n <= p <= 2n-1 and q+t = p+2: remaps to n_eff = p-n with a
///      delta twist (det on O(p), trivial on O(p+2)).
/// Anything else is reported as not applying: either the lift is zero or
/// its analysis is omitted in the source normalization rules.
NormalizationResult normalize_outside_range(int p, int q, int t, int n);

}  // namespace theta

#endif
