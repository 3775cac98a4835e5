// Torus weights of products of compact unitary and orthogonal groups, and
// exact weight-multiplicity engines (Freudenthal + Weyl orbit expansion)
// for the classical root systems in epsilon coordinates.

#ifndef THETA_WEIGHTS_HPP
#define THETA_WEIGHTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace theta {

using Weight = std::vector<int>;
using WeightMap = std::map<Weight, long long>;

enum class FactorKind { U, O };

struct GroupFactor {
    FactorKind kind = FactorKind::U;
    int n = 1;  // U(n) or O(n)

    int torus_rank() const { return kind == FactorKind::U ? n : n / 2; }
    bool is_even_o() const { return kind == FactorKind::O && n % 2 == 0; }
    bool operator==(const GroupFactor&) const = default;
};

struct ProductGroup {
    std::vector<GroupFactor> factors;

    int torus_rank() const;
    /// Offset of each factor's block in an untwisted weight vector.
    std::vector<int> offsets() const;
    std::string to_string() const;  // e.g. "O(4) x O(4) x U(1)"
    bool operator==(const ProductGroup&) const = default;
};

/// Weight multiset of the gl(a) irrep with highest weight hw (weakly
/// decreasing integers, possibly negative).
WeightMap gl_weights(const std::vector<int>& hw);

/// Weight multiset of the so(2k+1) ('B'), sp(2k) ('C') or so(2k) ('D')
/// irrep with integral dominant highest weight hw (length = rank; for 'D'
/// the last entry may be negative).
WeightMap bcd_weights(char letter, int rank, const std::vector<int>& hw);

long long total_multiplicity(const WeightMap& m);

/// Blockwise concatenation (character of an outer tensor product across
/// factor blocks).
WeightMap tensor_concat(const WeightMap& a, const WeightMap& b);
/// Additive convolution of same-rank maps (product of characters of one
/// torus).
WeightMap convolve(const WeightMap& a, const WeightMap& b);
void add_scaled(WeightMap& into, const WeightMap& src, long long scale);

}  // namespace theta

#endif
