// Infinitesimal characters, the order-reversing duality d / d-check on
// nilpotent orbits, and the special-unipotency certificate.

#ifndef THETA_UNIPOTENT_HPP
#define THETA_UNIPOTENT_HPP

#include <string>
#include <vector>

#include "theta/partition.hpp"

namespace theta {

/// Multiset of half-integers, stored doubled (so 3/2 is 3).  Normalization
/// to a given rank only inserts or removes zeros.
class InfChar {
public:
    InfChar() = default;
    /// entries are doubled values; rank is the target length.
    InfChar(std::vector<int> doubled_entries, int rank);

    /// Sorted (descending) doubled entries.
    const std::vector<int>& doubled() const { return entries_; }
    int rank() const { return rank_; }
    bool normalized() const { return static_cast<int>(entries_.size()) == rank_; }

    /// Pads with zeros or removes zeros until |entries| == rank.
    /// Throws if surplus entries are nonzero.
    void normalize();

    bool contains_zero() const;
    bool same_multiset(const InfChar& other) const;

    std::string to_string() const;  // e.g. "{2,2,1,1,0,0}" or "{3/2,1/2}"

private:
    std::vector<int> entries_;  // doubled, kept sorted descending
    int rank_ = 0;
};

/// delta_N = (N/2-1, N/2-2, ...), length floor(N/2); the half sum of
/// positive roots of so(N).  Returned doubled.
std::vector<int> delta_vector(int N);

/// lambda = (delta_t, delta_{p+q-2n}, delta_{2n-t+2}) normalized to rank
/// floor((p+q)/2) by zero insertion/removal.
InfChar inf_char_theta_L(int p, int q, int t, int n);

/// The duality map between nilpotent orbits of g and of g-dual:
/// transpose, B<->C box adjustment (drop a box from the smallest part when
/// leaving type B, add one to the largest when leaving type C), then
/// collapse in the dual type.  D maps to D with no adjustment.
/// Returns the dual partition; dual_type(from) names its algebra.
Partition bv_dual(const Partition& p, const LieType& from);
LieType bv_dual_type(const LieType& from);

struct UnipotentCertificate {
    bool hypotheses_met = false;    // q+t >= 2n, q >= n >= t, dim mu = 1, lift defined
    std::string hypothesis_note;

    Partition orbit_C;              // unsigned shape of the lifted orbit
    LieType g;                      // so(p+q)
    Partition dual_dC;              // d(C)
    Partition expected_dC;          // (p+q-2n-1, 2n-t+1, t-1, eps) as a partition
    bool dual_matches_closed_form = false;

    bool special = false;           // d-check(d(C)) == C
    InfChar half_Hvee;              // (delta_{a_1+1}, delta_{a_2+1}, ...)
    InfChar lambda;                 // inf char of the lift
    bool inf_char_matches = false;  // multiset equality after normalization
    bool zero_entry_ambiguity = false;  // p+q even but lambda has no zero entry

    bool pass = false;              // all clauses
};

/// Certificate that the lift of a one-dimensional mu at (p,q,t,n) is
/// attached to a special orbit with the predicted dual and infinitesimal
/// character.  Hypothesis violations are reported in the certificate, not
/// thrown.
UnipotentCertificate check_special_unipotent(int p, int q, int t, int n, int dim_mu);

}  // namespace theta

#endif
