// Theta lifts of nilpotent orbits and cycles, and associated-cycle
// computation for lifts of the unitary character and of unitary lowest
// weight modules.

#ifndef THETA_ORBITLIFT_HPP
#define THETA_ORBITLIFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "theta/dualpair.hpp"
#include "theta/partition.hpp"

namespace theta {

/// Formal nonnegative-integer combination of signed orbits (an associated
/// cycle).  Terms with equal orbit are merged; zero-multiplicity terms drop.
class OrbitCycle {
public:
    struct Term {
        long mult = 0;
        SignedPartition orbit;
        bool operator==(const Term&) const = default;
    };

    OrbitCycle() = default;
    explicit OrbitCycle(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    OrbitCycle& add(long mult, const SignedPartition& orbit);
    OrbitCycle operator+(const OrbitCycle& other) const;

    bool operator==(const OrbitCycle&) const = default;

private:
    std::vector<Term> terms_;
};

/// O(t)-irrep label together with the double-cover bookkeeping: only the
/// parity of genuine twists survives on compact orthogonal groups.
struct GenuineCompactType {
    Partition partition;   // label, first two column lengths must fit O(t)
    int det_twist = 0;     // 0 or 1
    bool half_twist = false;  // genuine double-cover marker; must match n parity

    bool operator==(const GenuineCompactType&) const = default;
};

/// Result of a combinatorial lift.  When the closed-form exponent turns
/// negative the diagram is not produced; `diagnostic` explains why and the
/// numerical orbit identifier is the fallback route.
struct LiftResult {
    std::optional<SignedPartition> orbit;
    std::string provenance;  // "eq6", "eq7" or "solver"
    std::string diagnostic;  // nonempty iff !orbit
    bool ok() const { return orbit.has_value(); }
    const SignedPartition& value() const;
};

/// O'_d = 2_-^d 1_+^{n-d} 1_-^{n-d} with d = min(t,n); the orbit of the
/// lowest weight module theta(mu) for the compact pair (O(t), Sp(2n,R)).
/// Symplectic family, signature (n,n).
SignedPartition lowest_weight_orbit(int n, int t);

/// O_{p,q} = 2_+^n 2_-^n 1_+^{p-2n} 1_-^{q-2n}, the lift of the zero orbit.
/// Requires the stable range with t = 0.
SignedPartition lift_zero(int p, int q, int n);

/// O_{p,q,t} = 3_+^d 2_+^{n-d} 2_-^{n-d} 1_+^{p-2n} 1_-^{q+d-2n} with
/// d = min(t,n).  Requires 2n <= min(p, q+t).  If q+d-2n < 0 the displayed
/// exponent convention has no meaning and the result is flagged instead.
LiftResult lift_Od(int p, int q, int t, int n);

/// Adds one box to the left of every row (forcing the new leading signs by
/// the alternation rule) and pads with length-1 rows so that the output has
/// signature (p,q).  Throws if no padding achieves the signature.
SignedPartition add_column_lift(const SignedPartition& sp, int p, int q);

/// Termwise lift of a cycle of symplectic orbits to the pair (p,q);
/// multiplicities are preserved.  Throws if any term fails to lift.
OrbitCycle lift_cycle(const OrbitCycle& c, const DualPairParams& target);

/// AC(theta(sigma')) = 1 [closure of O_{p,q}]; stable range, p+q even.
OrbitCycle assoc_cycle_theta_sigma(int p, int q, int n);

}  // namespace theta

#endif
