#include "doctest.h"
#include "theta/momentmap.hpp"
#include "theta/orbitlift.hpp"

using namespace theta;

TEST_CASE("reference frames are on the cone") {
    NullConePoint z0;
    z0.wplus = isotropic_frame(6, 2);
    const CMat em = isotropic_frame(4, 2);
    z0.w1 = em;
    z0.w2 = CMat::Zero(0, 2);
    CHECK(on_cone_residual(z0) == 0.0);

    auto mi = moment_images(z0);
    CHECK(mi.psi_plus.cwiseAbs().maxCoeff() == 0.0);
    CHECK(svd_rank(mi.x).rank == 2);  // x at pr(z0) has full rank n

    NullConePoint id;
    id.wplus = isotropic_frame(6, 2);
    id.w1 = eye_frame(4, 2);
    id.w2 = CMat::Zero(0, 2);
    CHECK((moment_images(id).psi_minus - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("null cone sampling is deterministic and on-cone") {
    auto pp = DualPairParams::osp(6, 4, 0, 2);
    auto a = sample_null_cone(pp, 1, 10, SampleStratum::generic);
    auto b = sample_null_cone(pp, 1, 10, SampleStratum::generic);
    REQUIRE(a.size() == 10);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(on_cone_residual(a[i]) < 1e-12);
        CHECK((a[i].wplus - b[i].wplus).cwiseAbs().maxCoeff() == 0.0);
        CHECK((a[i].w1 - b[i].w1).cwiseAbs().maxCoeff() == 0.0);
    }
    auto c = sample_null_cone(pp, 2, 10, SampleStratum::generic);
    CHECK((a[0].wplus - c[0].wplus).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("rank profile and the open stratum") {
    auto pp = DualPairParams::osp(6, 4, 0, 2);
    for (const auto& pt : sample_null_cone(pp, 3, 5, SampleStratum::generic)) {
        auto rp = rank_profile(pt);
        CHECK(rp.in_open_stratum);
        CHECK(rp.rank_w1 == 2);
        CHECK(rp.rank_w1tw1 == 0);
    }
    for (const auto& pt : sample_null_cone(pp, 3, 5, SampleStratum::boundary)) {
        auto rp = rank_profile(pt);
        CHECK_FALSE(rp.in_open_stratum);
        CHECK(rp.rank_w1 < 2);
        CHECK(on_cone_residual(pt) < 1e-12);
    }
    NullConePoint zero;
    zero.wplus = CMat::Zero(6, 2);
    zero.w1 = CMat::Zero(4, 2);
    zero.w2 = CMat::Zero(0, 2);
    CHECK_FALSE(rank_profile(zero).in_open_stratum);

    // profile is constant along sampled group motions
    auto pts = sample_null_cone(DualPairParams::osp(8, 4, 2, 3), 9, 8, SampleStratum::generic);
    auto first = rank_profile(pts[0]);
    for (const auto& pt : pts) {
        auto rp = rank_profile(pt);
        CHECK(rp.rank_w1 == first.rank_w1);
        CHECK(rp.rank_w1tw1 == first.rank_w1tw1);
        CHECK(rp.rank_x == first.rank_x);
        CHECK(rp.in_open_stratum);
    }
}

TEST_CASE("numeric orbit dimension matches the partition formula") {
    {
        auto pts = sample_null_cone(DualPairParams::osp(6, 4, 0, 2), 1, 3,
                                    SampleStratum::generic);
        for (const auto& pt : pts) {
            const CMat x = pt.wplus * pt.w1.transpose();
            CHECK(numeric_orbit_dim(x, ActionGroup::K) == 10);
        }
    }
    {
        auto pts = sample_null_cone(DualPairParams::osp(8, 4, 2, 3), 1, 3,
                                    SampleStratum::generic);
        for (const auto& pt : pts) {
            const CMat x = pt.wplus * pt.w1.transpose();
            CHECK(numeric_orbit_dim(x, ActionGroup::K) == 20);
        }
    }
    CHECK(numeric_orbit_dim(CMat::Zero(6, 4), ActionGroup::K) == 0);
}

TEST_CASE("numeric orbit partition identifies the lift") {
    auto pts = sample_null_cone(DualPairParams::osp(8, 4, 2, 3), 5, 3, SampleStratum::generic);
    for (const auto& pt : pts) {
        const CMat x = pt.wplus * pt.w1.transpose();
        CHECK(numeric_orbit_partition(x) == Partition({3, 3, 2, 2, 1, 1}));
    }
    CHECK(numeric_orbit_partition(CMat::Zero(5, 3)) == Partition(std::vector<int>(8, 1)));
}

TEST_CASE("stabilizer dimension formula") {
    auto sc = stabilizer_codim_check(5, 1, 3);
    CHECK(sc.dim_S0_formula == 7);
    CHECK(sc.dim_S0_numeric == 7);
    CHECK(sc.codim == 3);
    sc = stabilizer_codim_check(4, 1, 2);
    CHECK(sc.dim_S0_formula == 3);
    CHECK(sc.codim == 2);
    // codim >= 2 whenever q > n > t (and the frame exists)
    for (int q = 3; q <= 7; ++q)
        for (int n = 2; n < q; ++n)
            for (int t = 0; t < n; ++t) {
                if (q + t < 2 * n) continue;
                CHECK(stabilizer_codim_check(q, t, n).codim >= 2);
            }
    CHECK_THROWS(stabilizer_codim_check(3, 2, 2));
}

TEST_CASE("beta map") {
    auto ref = case1_reference(8, 4, 2, 3);
    // identity
    auto r = beta_map(CMat::Identity(8, 8), CMat::Identity(4, 4), ref);
    CHECK((r.beta - CMat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

    // Levi element with GL(n) block g: beta recovers g
    const CMat g = random_gl(3, 11, "test_levi", 0);
    const CMat kp = levi_orthogonal_element(g, 8, 3);
    // check kp is orthogonal
    CHECK((kp.transpose() * kp - CMat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
    // beta of kp from the defining relation kp y+ = y+ beta
    const CMat gram = ref.yplus.adjoint() * ref.yplus;
    const CMat beta = gram.ldlt().solve(ref.yplus.adjoint() * (kp * ref.yplus));
    CHECK((beta - g).cwiseAbs().maxCoeff() < 1e-10);

    // exponentials of stabilizer algebra samples satisfy the full property
    for (int i = 0; i < 20; ++i) {
        auto [sp, sq] = sample_stabilizer_element(ref, 21, i);
        auto res = beta_map(sp, sq, ref);
        CHECK(res.residual < 1e-10);
    }
    // multiplicativity on sampled pairs
    for (int i = 0; i < 5; ++i) {
        auto [a1, b1] = sample_stabilizer_element(ref, 22, 2 * i);
        auto [a2, b2] = sample_stabilizer_element(ref, 22, 2 * i + 1);
        auto r1 = beta_map(a1, b1, ref);
        auto r2 = beta_map(a2, b2, ref);
        auto r12 = beta_map(a1 * a2, b1 * b2, ref);
        CHECK((r12.beta - r1.beta * r2.beta).cwiseAbs().maxCoeff() < 1e-8);
    }
    // a non-stabilizing element is rejected
    CHECK_THROWS(beta_map(random_orthogonal(CMat::Identity(8, 8), 5, "bad", 0),
                          CMat::Identity(4, 4), ref));
}

TEST_CASE("case II model and projection") {
    auto model = case2_model(10, 2, 6, 4);
    auto z0 = case2_z0(model);
    CHECK(on_cone_residual(z0, &model.gram_p) < 1e-14);

    auto pr = case2_projection(model, z0);
    CHECK(projection_distance(pr, case2_reference_m(model)) == 0.0);

    // Q-equivariance of pi on sampled group elements
    const CMat iq = CMat::Identity(2, 2), it = CMat::Identity(6, 6);
    for (int i = 0; i < 6; ++i) {
        const CMat r1 = random_orthogonal(iq, 31, "c2:r1", i);
        const CMat r2 = random_orthogonal(it, 31, "c2:r2", i);
        const CMat g = random_gl(4, 31, "c2:g", i);
        const CMat u = random_orthogonal(model.gram_mid, 31, "c2:u", i);
        auto moved = case2_q_action(model, r1, r2, g, u, z0);
        CHECK(on_cone_residual(moved, &model.gram_p) < 1e-12);
        auto lhs = case2_projection(model, moved);
        auto rhs = case2_q_action_on_m(r1, r2, g, pr);
        CHECK(projection_distance(lhs, rhs) < 1e-12);
    }

    // fiber points over m extract to subpair null-cone points
    for (int i = 0; i < 20; ++i) {
        auto [as, bs] = sample_subpair_point(model, 41, i);
        auto pt = case2_fiber_point(model, as, bs);
        CHECK(on_cone_residual(pt, &model.gram_p) < 1e-12);
        auto fib = case2_extract_fiber(model, pt);
        CHECK(fib.psi_residual < 1e-10);
        CHECK((fib.As - as).cwiseAbs().maxCoeff() == 0.0);
        CHECK((fib.Bs - bs).cwiseAbs().maxCoeff() == 0.0);
    }
    // a moved point is no longer over m
    const CMat g = random_gl(4, 51, "c2:far", 0);
    auto far = case2_q_action(model, iq, it, g, CMat::Identity(6, 6), z0);
    CHECK_THROWS(case2_extract_fiber(model, far));

    // the subpair named by the model is in the stable range
    CHECK(in_stable_range(DualPairParams::osp(model.ps(), model.ts(), 0, model.ns())));
}

TEST_CASE("image closure containment") {
    auto rep = verify_image_closure(DualPairParams::osp(8, 4, 2, 3), 1, 20);
    CHECK(rep.contained == 20);
    CHECK(rep.generic_attained == 20);
    CHECK(rep.pass);

    rep = verify_image_closure(DualPairParams::osp(6, 4, 0, 2), 1, 10);
    CHECK(rep.pass);
    CHECK(rep.predicted == Partition({2, 2, 2, 2, 1, 1}));
}

TEST_CASE("null cone dimension consistency") {
    auto chk = nullcone_dim_check(DualPairParams::osp(6, 4, 0, 2));
    CHECK(chk.match);
    CHECK(chk.k_orbit_dim == 10);
    chk = nullcone_dim_check(DualPairParams::osp(8, 4, 2, 3));
    CHECK(chk.match);
    CHECK(chk.k_orbit_dim == 20);
}
