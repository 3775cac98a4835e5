// Exact arithmetic on partitions and signed Young diagrams:
// validation, signatures, transpose, B/C/D collapses, dominance order,
// orbit dimensions.

#ifndef THETA_PARTITION_HPP
#define THETA_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace theta {

/// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless rows are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int total() const;
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    /// Row i (0-based), 0 beyond the last row.
    int row(int i) const;

    Partition transpose() const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // e.g. "(3,3,2,2,1,1)", "()" if empty

private:
    std::vector<int> rows_;
};

/// so(m) for letters B (m odd) and D (m even); sp(m) for letter C (m even).
struct LieType {
    char letter = 'D';  // 'B', 'C' or 'D'
    int m = 0;          // rank carrier: algebra is so(m) or sp(m)

    LieType() = default;
    LieType(char l, int mm);  // validates parity of m against the letter

    /// so(m) of either parity.
    static LieType so(int m) { return LieType(m % 2 ? 'B' : 'D', m); }
    static LieType sp(int m) { return LieType('C', m); }

    bool is_orthogonal() const { return letter == 'B' || letter == 'D'; }
    long algebra_dim() const;  // dim so(m) = m(m-1)/2, dim sp(m) = m(m+1)/2

    bool operator==(const LieType&) const = default;
};

enum class Family { orthogonal, symplectic };
enum class BoxSign : std::int8_t { plus = +1, minus = -1 };

inline BoxSign flip(BoxSign s) {
    return s == BoxSign::plus ? BoxSign::minus : BoxSign::plus;
}
inline char sign_char(BoxSign s) { return s == BoxSign::plus ? '+' : '-'; }

/// Run of `mult` rows of equal length with equal leading sign.  Box signs
/// alternate within a row starting from the leading sign; they are derived,
/// never stored.
struct SignedRow {
    int len = 0;
    BoxSign lead = BoxSign::plus;
    int mult = 1;

    bool operator==(const SignedRow&) const = default;
};

struct SignedValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Signed Young diagram with a family tag; parametrizes nilpotent
/// K_C-orbits of the orthogonal (family tag `orthogonal`) or symplectic
/// (`symplectic`) real form.  Stored with multiplicities in canonical
/// order: length descending, then + before -.
class SignedPartition {
public:
    SignedPartition() = default;
    /// Rows are brought to canonical form (merged and sorted).  Throws on
    /// nonpositive lengths or multiplicities.  Validity of the sign pairing
    /// rules is *not* enforced here; see validate().
    SignedPartition(std::vector<SignedRow> rows, Family family);

    const std::vector<SignedRow>& rows() const { return rows_; }
    Family family() const { return family_; }

    /// Checks the family pairing rules:
    ///  - orthogonal: rows of even length occur in pairs of opposite
    ///    leading sign (the multiplicity of each even length splits evenly
    ///    between + and -);
    ///  - symplectic: same for rows of odd length.
    SignedValidation validate() const;

    /// (#+ boxes, #- boxes), counting alternating signs row by row.
    std::pair<int, int> signature() const;

    int total_boxes() const;

    /// Underlying partition, signs forgotten.
    Partition shape() const;

    /// Text form, rows joined by spaces: len, sign, optional ^mult.
    /// Example: "3+^2 2+ 2- 1+^2".  Empty diagram renders as "".
    std::string to_text() const;
    /// Unicode superscript rendering, e.g. "3₊²2₊2₋1₊²" without separators
    /// is hard to read in terminals; we render "3+^2 ..."-style in to_text
    /// and a superscripted variant here.
    std::string to_pretty() const;

    static SignedPartition parse(const std::string& text, Family family);

    bool operator==(const SignedPartition&) const = default;

private:
    std::vector<SignedRow> rows_;
    Family family_ = Family::orthogonal;
};

/// Prefix-sum comparison after zero padding; requires equal totals to be a
/// partial order but is defined for any pair.
bool dominance_leq(const Partition& a, const Partition& b);

/// True iff p satisfies the type parity constraint: even parts of an
/// orthogonal partition (resp. odd parts of a symplectic one) have even
/// multiplicity.  Does not check the total.
bool is_valid_for_type(const Partition& p, const LieType& t);

/// Dominance-maximal partition <= p of the same total satisfying the type
/// constraint (the B/C/D collapse).  Throws if total(p) != t.m.
Partition collapse(const Partition& p, const LieType& t);

enum class OrbitLevel { complex_orbit, K_orbit };

/// Dimension of the nilpotent orbit with Jordan type p.
/// complex level: dim of the complex adjoint orbit via the centralizer
/// formula dim Z = (sum (p^T_i)^2 -/+ #odd parts)/2 for so/sp.
/// K level: half of it (Kostant-Sekiguchi).
long orbit_dim(const Partition& p, const LieType& t, OrbitLevel level);
long orbit_dim(const SignedPartition& sp, OrbitLevel level);

}  // namespace theta

#endif
