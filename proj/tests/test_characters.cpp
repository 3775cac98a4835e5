#include "character_oracles.hpp"
#include "doctest.h"
#include "theta/characters.hpp"

using namespace theta;

namespace {

ProductGroup single_o(int b) { return ProductGroup{{GroupFactor{FactorKind::O, b}}}; }
ProductGroup single_u(int a) { return ProductGroup{{GroupFactor{FactorKind::U, a}}}; }

IrrepLabel olab(const ProductGroup& g, const OLabel& l) {
    IrrepLabel lab;
    lab.u.resize(g.factors.size());
    lab.o.assign(g.factors.size(), OLabel{});
    lab.o[0] = l;
    return lab;
}

IrrepLabel ulab(const ProductGroup& g, std::vector<int> hw) {
    IrrepLabel lab;
    lab.u.assign(g.factors.size(), {});
    lab.o.resize(g.factors.size());
    lab.u[0] = std::move(hw);
    return lab;
}

}  // namespace

TEST_CASE("gl weights match the tableau oracle") {
    for (int a = 1; a <= 4; ++a) {
        for (std::vector<int> part :
             {std::vector<int>{}, {1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}}) {
            if (static_cast<int>(part.size()) > a) continue;
            std::vector<int> hw = part;
            hw.resize(a, 0);
            CHECK(gl_weights(hw) == oracle::ssyt_weights(part, a));
        }
    }
    // shifts by the determinant twist negative weights
    auto w = gl_weights({0, -1});
    CHECK(w.size() == 2);
    CHECK(w.count({-1, 0}) == 1);
    CHECK(w.count({0, -1}) == 1);
    // spec anchors
    CHECK(gl_weights({1, 0}) == WeightMap{{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(u_irrep_dim({1, 0}) == 2);
    CHECK(gl_weights({5}) == WeightMap{{{5}, 1}});  // U(1) det^5
}

TEST_CASE("bcd weights: dimensions and anchors") {
    // O(3), partition (2): SO(3)-weights {2,1,0,-1,-2}
    WeightMap w = o_irrep_weights(OLabel{Partition({2}), 0}, 3);
    CHECK(total_multiplicity(w) == 5);
    for (int k = -2; k <= 2; ++k) CHECK(w.at({k}) == 1);
    CHECK(o_irrep_dim(OLabel{Partition({2}), 0}, 3) == 5);

    for (char letter : {'B', 'C', 'D'}) {
        for (int rank = 1; rank <= 3; ++rank) {
            for (std::vector<int> hw : {std::vector<int>{2, 1, 0}, {1, 1, 1}, {3, 0, 0},
                                        {2, 2, 1}}) {
                hw.resize(rank);
                std::sort(hw.rbegin(), hw.rend());
                CHECK(total_multiplicity(bcd_weights(letter, rank, hw)) ==
                      oracle::weyl_dim(letter, rank, hw));
            }
        }
    }
    // Weyl-group invariance of a sample character
    auto wm = bcd_weights('D', 3, {2, 1, 1});
    for (const auto& [wt, c] : wm) {
        Weight flipped = wt;
        flipped[0] = -flipped[0];
        flipped[1] = -flipped[1];
        CHECK(wm.at(flipped) == c);
    }
}

TEST_CASE("o label canonicalization") {
    // det of O(3) is the column (1,1,1)
    OLabel det3 = canonical_o_label(Partition({1, 1, 1}), 0, 3);
    CHECK(det3 == OLabel{Partition(), 1});
    CHECK(full_o_label(det3, 3) == Partition({1, 1, 1}));
    // (2,1) on O(3) is (2) * det
    OLabel l = canonical_o_label(Partition({2, 1}), 0, 3);
    CHECK(l == OLabel{Partition({2}), 1});
    CHECK(full_o_label(l, 3) == Partition({2, 1}));
    // O(4), two rows: sectors coincide
    OLabel m = canonical_o_label(Partition({1, 1}), 1, 4);
    CHECK(m == OLabel{Partition({1, 1}), 0});
    CHECK(o_irrep_dim(m, 4) == 6);  // the 6-dimensional second exterior power
}

TEST_CASE("twisted traces of O irreps") {
    // O(2): trivial has trace +1 on the reflection coset, det has -1
    CHECK(o_irrep_twisted(OLabel{Partition(), 0}, 2) == WeightMap{{{}, 1}});
    CHECK(o_irrep_twisted(OLabel{Partition(), 1}, 2) == WeightMap{{{}, -1}});
    // the 2-dimensional types vanish off SO(2)
    CHECK(o_irrep_twisted(OLabel{Partition({3}), 0}, 2).empty());
    // O(4): twisted trace of the standard rep is the Sp(2) character of (1)
    auto tw = o_irrep_twisted(OLabel{Partition({1}), 0}, 4);
    CHECK(tw == WeightMap{{{1}, 1}, {{-1}, 1}});
}

TEST_CASE("decompose: tensor products reconstruct exactly") {
    auto g3 = single_o(3);
    auto v2 = FormalCharacter::irrep(g3, olab(g3, OLabel{Partition({2}), 0}));
    auto v1 = FormalCharacter::irrep(g3, olab(g3, OLabel{Partition({1}), 0}));
    auto prod = v2.tensor(v1);
    auto dec = prod.decompose();
    // (2) x (1) over O(3): (3) + (2)*det + (1)  [classical]
    REQUIRE(dec.size() == 3);
    long long dim = 0;
    FormalCharacter rebuilt(g3);
    for (const auto& [lab, m] : dec) {
        CHECK(m == 1);
        dim += m * o_irrep_dim(lab.o[0], 3);
        rebuilt.add_scaled_char(FormalCharacter::irrep(g3, lab), m);
    }
    CHECK(dim == 15);
    CHECK(rebuilt == prod);
    CHECK(prod.multiplicity(olab(g3, OLabel{Partition({2}), 1})) == 1);
    CHECK(prod.multiplicity(olab(g3, OLabel{Partition({2}), 0})) == 0);

    // O(2): (1) x (1) = (2) + trivial + det
    auto g2 = single_o(2);
    auto e1 = FormalCharacter::irrep(g2, olab(g2, OLabel{Partition({1}), 0}));
    auto dec2 = e1.tensor(e1).decompose();
    REQUIRE(dec2.size() == 3);
    CHECK(e1.tensor(e1).multiplicity(olab(g2, OLabel{Partition(), 1})) == 1);

    // mult of trivial in (1,0) x (1,0)^* over U(2) is 1 (Schur)
    auto gu = single_u(2);
    auto std2 = FormalCharacter::irrep(gu, ulab(gu, {1, 0}));
    auto dual2 = FormalCharacter::irrep(gu, ulab(gu, {0, -1}));
    CHECK(std2.tensor(dual2).multiplicity(ulab(gu, {0, 0})) == 1);
}

TEST_CASE("decompose on a mixed product group") {
    ProductGroup g{{GroupFactor{FactorKind::O, 3}, GroupFactor{FactorKind::U, 2}}};
    IrrepLabel lab;
    lab.u = {{}, {2, 0}};
    lab.o = {OLabel{Partition({1}), 1}, OLabel{}};
    auto ch = FormalCharacter::irrep(g, lab);
    auto dec = ch.decompose();
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == lab);
    CHECK(dec[0].second == 1);
    // a sum with multiplicities round-trips
    IrrepLabel lab2 = lab;
    lab2.o[0] = OLabel{Partition({2}), 0};
    FormalCharacter sum(g);
    sum.add_scaled_char(FormalCharacter::irrep(g, lab), 2);
    sum.add_scaled_char(FormalCharacter::irrep(g, lab2), 3);
    auto dec2 = sum.decompose();
    REQUIRE(dec2.size() == 2);
    for (const auto& [l, m] : dec2) CHECK(m == (l == lab ? 2 : 3));
}

TEST_CASE("branching: one step anchors") {
    auto eq = [](const std::vector<OLabel>& got, std::vector<OLabel> want) {
        std::sort(want.begin(), want.end());
        return got == want;
    };
    // O(3)-(2) to O(2): (2) + (1) + trivial
    CHECK(eq(branch_o_step(OLabel{Partition({2}), 0}, 3),
             {OLabel{Partition({2}), 0}, OLabel{Partition({1}), 0}, OLabel{Partition(), 0}}));
    // trivial to trivial, det to det
    CHECK(eq(branch_o_step(OLabel{Partition(), 0}, 4), {OLabel{Partition(), 0}}));
    CHECK(eq(branch_o_step(OLabel{Partition(), 1}, 4), {OLabel{Partition(), 1}}));
    CHECK(eq(branch_o_step(OLabel{Partition(), 1}, 3), {OLabel{Partition(), 1}}));
    // (2)*det on O(3) to O(2): (2) + (1) + det
    CHECK(eq(branch_o_step(OLabel{Partition({2}), 1}, 3),
             {OLabel{Partition({2}), 0}, OLabel{Partition({1}), 0}, OLabel{Partition(), 1}}));
    // O(2) standard types to O(1): trivial plus the sign character
    CHECK(eq(branch_o_step(OLabel{Partition({2}), 0}, 2),
             {OLabel{Partition(), 1}, OLabel{Partition(), 0}}));

    // dimensions add up across one step, all labels with <= 2 columns
    for (int b = 2; b <= 6; ++b)
        for (int r1 = 0; r1 <= 2; ++r1)
            for (int r2 = 0; r2 <= r1; ++r2)
                for (int det = 0; det < 2; ++det) {
                    std::vector<int> rows;
                    rows.insert(rows.end(), r2, 2);
                    rows.insert(rows.end(), r1 - r2, 1);
                    Partition part{std::move(rows)};
                    if (part.transpose().row(0) + part.transpose().row(1) > b) continue;
                    OLabel mu = canonical_o_label(part, det, b);
                    long long total = 0;
                    for (const auto& nu : branch_o_step(mu, b))
                        total += o_irrep_dim(nu, b - 1);
                    CHECK(total == o_irrep_dim(mu, b));
                }
}

TEST_CASE("branching agrees with full character restriction, t <= 5") {
    for (int t = 2; t <= 5; ++t) {
        for (int r1 = 0; r1 <= 3; ++r1)
            for (int r2 = 0; r2 <= r1; ++r2)
                for (int det = 0; det < 2; ++det) {
                    std::vector<int> rows;
                    rows.insert(rows.end(), r2, 2);
                    rows.insert(rows.end(), r1 - r2, 1);
                    Partition part{std::move(rows)};
                    if (part.transpose().row(0) + part.transpose().row(1) > t) continue;
                    OLabel mu = canonical_o_label(part, det, t);
                    std::map<OLabel, long long> in{{mu, 1}};
                    auto want = oracle::restrict_o_sum(in, t);
                    std::map<OLabel, long long> got;
                    for (const auto& nu : branch_o_step(mu, t)) got[nu] += 1;
                    CHECK(got == want);
                }
    }
}

TEST_CASE("iterated branching") {
    // O(5) det down two steps stays det
    auto r = branch_O(OLabel{Partition(), 1}, 5, 2);
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == OLabel{Partition(), 1});
    // multiplicities accumulate
    auto r2 = branch_O(OLabel{Partition({2}), 0}, 4, 2);
    long long dim = 0;
    for (const auto& [lab, m] : r2) dim += m * o_irrep_dim(lab, 2);
    CHECK(dim == o_irrep_dim(OLabel{Partition({2}), 0}, 4));
}

TEST_CASE("extract_u_factor") {
    // O(3) x U(2): standard (x) (std (x) dual-std) has one U-invariant block
    ProductGroup g{{GroupFactor{FactorKind::O, 3}, GroupFactor{FactorKind::U, 2}}};
    IrrepLabel a;
    a.u = {{}, {1, 0}};
    a.o = {OLabel{Partition({1}), 0}, OLabel{}};
    IrrepLabel b;
    b.u = {{}, {0, -1}};
    b.o = {OLabel{Partition({1}), 0}, OLabel{}};
    auto prod = FormalCharacter::irrep(g, a).tensor(FormalCharacter::irrep(g, b));
    auto inv = extract_u_factor(prod, 1, {0, 0});
    // invariants: (std (x) std)^{U(2)-trivial} = std (x) std paired once
    REQUIRE(inv.group().factors.size() == 1);
    auto dec = inv.decompose();
    long long dim = 0;
    for (const auto& [lab, m] : dec) dim += m * o_irrep_dim(lab.o[0], 3);
    CHECK(dim == 9);  // 3x3 matrix space of the pairing
    // extracting a non-present label gives zero
    auto none = extract_u_factor(prod, 1, {3, 3});
    CHECK(none.is_zero());
}
