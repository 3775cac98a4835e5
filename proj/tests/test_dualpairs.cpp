#include "doctest.h"
#include "theta/dualpair.hpp"

using namespace theta;

TEST_CASE("stable range predicate") {
    CHECK(in_stable_range(DualPairParams::osp(8, 4, 2, 3)));
    CHECK_FALSE(in_stable_range(DualPairParams::osp(6, 6, 0, 3)));  // max not strict
    CHECK(in_stable_range(DualPairParams::osp(4, 4, 0, 1)));
    CHECK_FALSE(in_stable_range(DualPairParams::osp(8, 3, 2, 3)));  // parity

    DualPairParams uu;
    uu.family = PairFamily::UU;
    uu.p = 5; uu.q = 4; uu.n1 = 2; uu.n2 = 2;
    CHECK(in_stable_range(uu));
    uu.q = 3;
    CHECK_FALSE(in_stable_range(uu));

    DualPairParams spo;
    spo.family = PairFamily::SpOstar;
    spo.p = 3; spo.q = 3; spo.n = 3;
    CHECK(in_stable_range(spo));
    spo.q = 2;
    CHECK_FALSE(in_stable_range(spo));
}

TEST_CASE("case classification") {
    CHECK(classify_case(DualPairParams::osp(8, 4, 2, 3)) == LiftCase::I);
    CHECK(classify_case(DualPairParams::osp(10, 2, 6, 4)) == LiftCase::II);
    CHECK_THROWS(classify_case(DualPairParams::osp(3, 1, 0, 1)));

    DualPairParams spo;
    spo.family = PairFamily::SpOstar;
    spo.p = 4; spo.q = 2; spo.n = 4; spo.t = 2;
    CHECK(classify_case(spo) == LiftCase::I);  // 2q = n
    spo.q = 1; spo.t = 3;
    CHECK(classify_case(spo) == LiftCase::II);  // 2q < n
    spo.t = 0;
    CHECK_FALSE(in_stable_range(spo));

    DualPairParams uu;
    uu.family = PairFamily::UU;
    uu.p = 6; uu.q = 6; uu.n1 = 3; uu.n2 = 2;
    CHECK(classify_case(uu) == LiftCase::I);
    uu.p = 6; uu.q = 2; uu.t = 4; uu.n1 = 3; uu.n2 = 2;  // max(n1,n2) > q
    CHECK(classify_case(uu) == LiftCase::II);
}

TEST_CASE("classify_case partitions the stable range") {
    for (int p = 1; p <= 10; ++p)
        for (int q = 0; q <= 10; ++q)
            for (int t = 0; t <= 4; ++t)
                for (int n = 1; n <= 4; ++n) {
                    auto pp = DualPairParams::osp(p, q, t, n);
                    if (!in_stable_range(pp)) continue;
                    auto c = classify_case(pp);
                    CHECK(((c == LiftCase::I) == (q >= n)));
                    CHECK(((c == LiftCase::II) == (q < n)));
                    // purity: same input, same output
                    CHECK(classify_case(pp) == c);
                }
}

TEST_CASE("boundary codimension") {
    auto r = boundary_codim_ok(DualPairParams::osp(12, 5, 1, 3));
    CHECK(r.ok);
    CHECK(r.codim == 3);
    r = boundary_codim_ok(DualPairParams::osp(12, 5, 2, 3));
    CHECK(r.ok);
    CHECK(r.codim == 2);
    CHECK_THROWS(boundary_codim_ok(DualPairParams::osp(12, 5, 3, 3)));  // n <= min(q,t)

    DualPairParams spo;
    spo.family = PairFamily::SpOstar;
    spo.p = 4; spo.q = 4; spo.n = 3; spo.t = 2;  // n odd
    CHECK(boundary_codim_ok(spo).ok);
    spo.n = 4;  // n even, n <= 2t
    CHECK_FALSE(boundary_codim_ok(spo).ok);
}

TEST_CASE("normalization outside the stable range") {
    auto r = normalize_outside_range(4, 4, 0, 3);
    CHECK(r.applies);
    CHECK_FALSE(r.finite_dim);
    CHECK(r.n_effective == 0);
    CHECK(r.twist == Twist::none);

    r = normalize_outside_range(4, 4, 0, 5);
    CHECK(r.applies);
    CHECK(r.finite_dim);

    r = normalize_outside_range(3, 2, 3, 2);
    CHECK(r.applies);
    CHECK(r.n_effective == 1);
    CHECK(r.twist == Twist::delta);

    r = normalize_outside_range(5, 2, 1, 4);  // neither case
    CHECK_FALSE(r.applies);
    CHECK(r.note.find("unhandled") != std::string::npos);

    CHECK_THROWS(normalize_outside_range(8, 4, 2, 3));  // in stable range
}

TEST_CASE("remapped parameters land in the stable range") {
    for (int p = 1; p <= 9; ++p)
        for (int q = 0; q <= 9; ++q)
            for (int t = 0; t <= 4; ++t)
                for (int n = 1; n <= 6; ++n) {
                    auto pp = DualPairParams::osp(p, q, t, n);
                    if (in_stable_range(pp)) continue;
                    auto r = normalize_outside_range(p, q, t, n);
                    if (!r.applies || r.finite_dim) continue;
                    // the remap keeps (p, q+t) and replaces n
                    CHECK(r.n_effective >= 0);
                    if (r.n_effective >= 1)
                        CHECK(in_stable_range(DualPairParams::osp(p, q, t, r.n_effective)));
                }
}
