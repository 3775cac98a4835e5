// Graded Fock and null-cone characters, the K-spectrum of the character
// lift, and isotropy-representation dimensions for both cases of the
// lowest-weight-module lift.

#ifndef THETA_GRADED_HPP
#define THETA_GRADED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "theta/characters.hpp"
#include "theta/dualpair.hpp"
#include "theta/orbitlift.hpp"

namespace theta {

/// Degree-indexed characters up to a cutoff.
struct GradedCharacter {
    ProductGroup group;
    std::vector<FormalCharacter> degree;  // index = degree, 0..dmax

    int dmax() const { return static_cast<int>(degree.size()) - 1; }
};

/// C[W] for W = M_{p,n} + M_{q,n} as a graded O(p) x O(q) x U(n)-character
/// (geometric action; p-side coordinates carry U(n)-charge +1, q-side -1).
GradedCharacter fock_graded_character(int p, int q, int n, int dmax,
                                      std::size_t weight_cap = 5'000'000);

/// C[null cone] via the separation-of-variables recursion
///   N_d = W_d - sum_{e>=1} Sym^e(p') * N_{d-2e},
/// p' in degree 2.  Requires the stable range; a negative coefficient
/// anywhere is a hard failure (freeness violated).
GradedCharacter nullcone_graded_character(int p, int q, int n, int dmax,
                                          std::size_t weight_cap = 5'000'000);

/// Degreewise K = O(p) x O(q) character of B: null-cone character tensored
/// with det^{(p-q)/2} on U(n), then U(n)-invariants.  Requires p+q even.
GradedCharacter theta_sigma_spectrum(int p, int q, int n, int dmax,
                                     std::size_t weight_cap = 5'000'000);

struct KTypeEntry {
    OLabel first;   // O(p) label
    OLabel second;  // O(q) label
    long long mult;
};

/// Decomposition of one degree of a two-orthogonal-factor character.
std::vector<KTypeEntry> ktype_table(const FormalCharacter& ch);

/// Honest O(t)-label of varsigma_2 (x) mu: only the parity of the genuine
/// twist survives, via varsigma_2^2 = det^{n mod 2}.  Callers must pass mu
/// with half_twist matching the parity of n.
OLabel effective_compact_label(const GenuineCompactType& mu, int t, int n);

long long genuine_type_dim(const GenuineCompactType& mu, int t);

/// Case I isotropy dimension: dim mu for t <= n; for t > n the dimension of
/// the O(t-n)-invariants of varsigma_2 (x) mu, computed by branching.
long long case1_isotropy_dim(const GenuineCompactType& mu, int t, int n);

struct Case2Isotropy {
    long long dim = 0;
    bool stabilized = false;
    int degree_reached = -1;
    std::vector<long long> partial;  // accumulated dimension per degree
};

/// Case II isotropy dimension via the smaller stable-range pair
/// (O(p-2q, t-q), Sp(2(n-q))): the subpair spectrum is paired degreewise
/// with the branched mu and the K^{t-q}-invariants accumulated until the
/// total is constant over `window` consecutive degrees.
Case2Isotropy case2_isotropy_dim(const DualPairParams& pp, const GenuineCompactType& mu,
                                 int dmax, int window = 3);

struct ThetaLCycle {
    OrbitCycle cycle;
    bool nonzero = false;
    bool orbit_flagged = false;  // closed-form orbit rejected (negative exponent)
    bool stabilized = true;      // Case II truncation status
    std::string provenance;
    std::string diagnostic;
};

/// Associated cycle of the lift of L(mu'): multiplicity from the isotropy
/// dimension (Case I or II), orbit from the closed-form lift.
ThetaLCycle assoc_cycle_theta_L(const DualPairParams& pp, const GenuineCompactType& mu,
                                int dmax = 20, int window = 3);

}  // namespace theta

#endif
