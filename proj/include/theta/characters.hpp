// Exact formal-character engine for products of compact unitary and
// orthogonal groups.  Characters carry, besides the torus weight multiset,
// the traces on the disconnected components of the O factors (evaluated on
// a reflection coset), which is what resolves det-sectors exactly.
//
// Twisted traces of irreducibles follow the classical dictionary:
//   O(2k+1):  trace on (-1).T equals (-1)^{|lambda|+det} times the
//             untwisted so(2k+1) character;
//   O(2k):    trace on the reflection coset equals (-1)^{det} times the
//             sp(2k-2) character of the same label when the label has
//             fewer than k rows, and vanishes identically otherwise.

#ifndef THETA_CHARACTERS_HPP
#define THETA_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/partition.hpp"
#include "theta/weights.hpp"

namespace theta {

/// O(b)-irrep label in canonical form: at most floor(b/2) rows plus a
/// det-sector; for O(2k) labels with exactly k rows the two sectors agree
/// and det is normalized to 0.
struct OLabel {
    Partition part;
    int det = 0;

    bool operator==(const OLabel&) const = default;
    auto operator<=>(const OLabel&) const = default;
    std::string to_string() const;
};

/// Canonicalizes a label given as a partition with lambda'_1+lambda'_2 <= b
/// plus a det twist (tall partitions fold onto the associate label).
OLabel canonical_o_label(const Partition& p, int det, int b);
/// The inverse fold: the unique partition with lambda'_1 + lambda'_2 <= b
/// describing the label (tall when det = 1 and the associate is distinct).
Partition full_o_label(const OLabel& l, int b);

long long o_irrep_dim(const OLabel& l, int b);
long long u_irrep_dim(const std::vector<int>& hw);

/// Irrep label of a product group: one entry per factor.
struct IrrepLabel {
    std::vector<std::vector<int>> u;  // per U-factor highest weights (empty for O slots)
    std::vector<OLabel> o;            // per O-factor labels (ignored for U slots)
    // slot i uses u[i] when group.factors[i] is U, o[i] otherwise

    bool operator==(const IrrepLabel&) const = default;
    auto operator<=>(const IrrepLabel&) const = default;
};

class FormalCharacter {
public:
    FormalCharacter() = default;
    explicit FormalCharacter(ProductGroup g);

    static FormalCharacter irrep(const ProductGroup& g, const IrrepLabel& label);
    static FormalCharacter zero(const ProductGroup& g) { return FormalCharacter(g); }

    const ProductGroup& group() const { return group_; }

    /// Trace data on the component twisted by the O-factors in `mask`
    /// (bit i = factor i).  Mask 0 is the torus character.
    const WeightMap& slice(std::uint32_t mask) const;
    WeightMap& slice_mut(std::uint32_t mask);

    /// Masks meaningful for this group (subsets of O-factor indices).
    std::vector<std::uint32_t> masks() const;

    long long dim() const;  // total multiplicity of the torus slice
    bool is_zero() const;

    FormalCharacter& add_scaled_char(const FormalCharacter& other, long long scale);
    FormalCharacter tensor(const FormalCharacter& other) const;  // same group

    /// Full decomposition by iterated highest-weight stripping (all slices
    /// stripped in lockstep; sectors solved from the twisted traces).
    /// Throws when a negative multiplicity appears (input not a character).
    std::vector<std::pair<IrrepLabel, long long>> decompose() const;

    /// Multiplicity of one irrep via the same stripping.
    long long multiplicity(const IrrepLabel& label) const;

    bool operator==(const FormalCharacter&) const = default;

private:
    ProductGroup group_;
    std::map<std::uint32_t, WeightMap> data_;
};

/// Weight layout of a mask-twisted slice: every twisted even-O block loses
/// its last torus coordinate.
std::vector<int> twisted_offsets(const ProductGroup& g, std::uint32_t mask);
int twisted_rank(const ProductGroup& g, std::uint32_t mask);

/// Connected/twisted trace maps of a single O(b)-irrep.
WeightMap o_irrep_weights(const OLabel& l, int b);
WeightMap o_irrep_twisted(const OLabel& l, int b);  // reduced rank for even b

/// One-step branching O(b) -> O(b-1): interlacing of the full labels,
/// dropping candidates that violate the two-column bound.
std::vector<OLabel> branch_o_step(const OLabel& mu, int b);

/// Iterated branching O(t) -> O(t-k), multiplicities accumulated.
std::map<OLabel, long long> branch_O(const OLabel& mu, int t, int k);

/// Multiplicity of `target` as a U(a)-type on the given factor, leaving a
/// character of the remaining factors (Kostant/Klimyk alternating sum per
/// fiber).  `target` must be weakly decreasing of length a.
FormalCharacter extract_u_factor(const FormalCharacter& ch, int factor_index,
                                 const std::vector<int>& target);

}  // namespace theta

#endif
