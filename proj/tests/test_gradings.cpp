#include "qla/build.hpp"
#include "qla/grading.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qla;
using namespace testsupport;

TEST_CASE("phase arithmetic normalizes into [0,1)") {
    CHECK(Phase(Rational(7, 2)).value == Rational(1, 2));
    CHECK(Phase(Rational(-1, 3)).value == Rational(2, 3));
    CHECK(Phase(Rational(2)).value == 0);
    CHECK((Phase(Rational(2, 3)) + Phase(Rational(2, 3))).value == Rational(1, 3));
    CHECK((-Phase(Rational(1, 4))).value == Rational(3, 4));
    CHECK((-Phase(Rational(0))).value == 0);
}

TEST_CASE("grading_from_torus: trivial element") {
    auto L = build_slmn(2, 0);
    auto g = grading_from_torus(L, TorusElement{{Rational(0)}});
    CHECK(g.order == 1);
    CHECK(g.trivial());
    CHECK(g.eigenspaces.size() == 1);
    CHECK(g.eigenspaces.at(Phase(Rational(0))).size() == L.dim());
}

TEST_CASE("grading_from_torus: sl(2) at alpha(h)=1/2") {
    auto L = build_slmn(2, 0);
    // alpha = (2) in the H(1) coordinate, so h_s = 1/4 realizes alpha(h_s) = 1/2
    auto g = grading_from_torus(L, TorusElement{{Rational(1, 4)}});
    CHECK(g.order == 2);
    CHECK(g.eigenspaces.at(Phase(Rational(0))).size() == 1);
    CHECK(g.eigenspaces.at(Phase(Rational(1, 2))).size() == 2);
    CHECK(grading_compatible(L, g));
}

TEST_CASE("grading_from_torus: gl(1|1) splits by parity at delta(h)=1/2") {
    auto L = build_glmn(1, 1);
    auto g = grading_from_torus(L, TorusElement{{Rational(1, 2), Rational(0)}});
    CHECK(g.order == 2);
    for (auto i : g.eigenspaces.at(Phase(Rational(0)))) CHECK(L.parity(i) == 0);
    for (auto i : g.eigenspaces.at(Phase(Rational(1, 2)))) CHECK(L.parity(i) == 1);
    CHECK(grading_compatible(L, g));
}

TEST_CASE("grading_from_torus refuses a non-weight basis") {
    auto sl2 = build_slmn(2, 0);
    QMat T(3, 3);
    std::size_t h = label_index(sl2, "H(1)"), e = label_index(sl2, "E(1,2)"),
                f = label_index(sl2, "E(2,1)");
    T(h, 0) = 1;
    T(e, 1) = 1;
    T(f, 1) = 1;
    T(e, 2) = 1;
    T(f, 2) = -1;
    auto twisted = change_basis(sl2, T, {0}, "sl2-rotated");
    CHECK_THROWS_AS(grading_from_torus(twisted, TorusElement{{Rational(1, 4)}}),
                    NotWeightBasis);
}

TEST_CASE("fixed point subalgebras") {
    auto L = build_slmn(2, 0);
    auto g0 = fixed_point_subalgebra(L, grading_from_torus(L, TorusElement{{Rational(0)}}));
    CHECK(g0.dim() == L.dim());

    auto half = fixed_point_subalgebra(L, grading_from_torus(L, TorusElement{{Rational(1, 4)}}));
    CHECK(half.dim() == 1);  // the Cartan line
    CHECK(validate(half).all_pass());

    auto gl = build_glmn(1, 1);
    auto gl0 = fixed_point_subalgebra(
        gl, grading_from_torus(gl, TorusElement{{Rational(1, 2), Rational(0)}}));
    CHECK(gl0.dim() == 2);
    for (std::size_t i = 0; i < gl0.dim(); ++i) {
        CHECK(gl0.parity(i) == 0);
        for (std::size_t j = 0; j < gl0.dim(); ++j)
            CHECK(gl0.bracket_basis(i, j).empty());  // abelian
    }
    CHECK(validate(gl0).all_pass());
}

TEST_CASE("fixed point subalgebra is basic type across sampled gradings") {
    DetRng rng(2024);
    for (const auto& spec : {"sl(2|1)", "osp(3|2)", "gl(2|2)"}) {
        auto L = algebra_from_spec(spec);
        for (int trial = 0; trial < 4; ++trial) {
            auto g = grading_from_torus(L, sample_torus_element(L, rng));
            auto L0 = fixed_point_subalgebra(L, g);
            auto rep = validate(L0);
            CHECK(rep.all_pass());  // in particular the restricted form is nondegenerate
        }
    }
}

TEST_CASE("sigma weyl data: trivial grading gives rho and z = 0") {
    for (const auto& spec : {"sl(2|1)", "osp(1|2)", "gl(2|1)"}) {
        auto L = algebra_from_spec(spec);
        auto g = grading_from_torus(L, TorusElement{QVec(L.cartan().size(), Rational(0))});
        auto swd = sigma_weyl_data(L, g);
        CHECK(swd.z_value == 0);
        CHECK(swd.rho_sigma == *swd.rd.rho);
    }
}

TEST_CASE("sigma weyl data: sl(2) at alpha(h)=1/2") {
    auto L = build_slmn(2, 0);
    auto g = grading_from_torus(L, TorusElement{{Rational(1, 4)}});
    auto swd = sigma_weyl_data(L, g);
    CHECK(swd.rho_j.at(Phase(Rational(0))) == Weight{0});
    CHECK(swd.rho_j.at(Phase(Rational(1, 2))) == Weight{0});
    CHECK(swd.rho_sigma == Weight{0});
    CHECK(swd.z_value == Rational(1, 8));
}

TEST_CASE("sigma weyl data: gl(1|1) at delta(h)=1/2") {
    auto L = build_glmn(1, 1);
    auto g = grading_from_torus(L, TorusElement{{Rational(1, 2), Rational(0)}});
    auto swd = sigma_weyl_data(L, g);
    CHECK(swd.sdim_j.at(Phase(Rational(1, 2))) == -2);
    CHECK(swd.z_value == Rational(-1, 8));
    // only j=0 contributes to rho_sigma (the j=1/2 weight factor vanishes)
    CHECK(swd.rho_sigma == swd.rho_j.at(Phase(Rational(0))));
    CHECK(is_zero(swd.rho_sigma));
}

TEST_CASE("grading invariants across sampled torus elements") {
    DetRng rng(77);
    for (const auto& spec : {"gl(2|1)", "sl(3|1)", "osp(3|2)", "osp(1|4)"}) {
        auto L = algebra_from_spec(spec);
        for (int trial = 0; trial < 5; ++trial) {
            auto g = grading_from_torus(L, sample_torus_element(L, rng));
            CHECK(grading_compatible(L, g));

            // superdimension accounting
            long total = 0;
            for (const auto& [p, idxs] : g.eigenspaces) total += g.sdim_of(L, p);
            CHECK(total == L.sdim());

            auto swd = sigma_weyl_data(L, g);
            // rho^{1-j} = -rho^j for j != 0
            for (const auto& [p, rho] : swd.rho_j) {
                if (p.is_zero()) continue;
                Phase opp = -p;
                REQUIRE(swd.rho_j.count(opp) == 1);
                CHECK(swd.rho_j.at(opp) == Rational(-1) * rho);
                CHECK(swd.sdim_j.at(p) == swd.sdim_j.at(opp));
            }

            // z is stable under relabeling phases j -> 1-j
            Rational z_relabeled = 0;
            for (const auto& [p, s] : swd.sdim_j) {
                Rational j = p.is_zero() ? Rational(0) : Rational(1) - p.value;
                z_relabeled += Rational(1, 2) * (j * (Rational(1) - j) / 2) * Rational(s);
            }
            CHECK(z_relabeled == swd.z_value);
        }
    }
}

TEST_CASE("indecomposability screen") {
    // genuinely indecomposable examples pass
    for (const auto& spec : {"sl(2|1)", "gl(1|1)", "osp(1|2)", "C(0|2)"}) {
        auto L = algebra_from_spec(spec);
        auto g = grading_from_torus(L, TorusElement{QVec(L.cartan().size(), Rational(0))});
        auto rep = indecomposability_screen(L, g);
        CHECK(rep.passed);
        CHECK(rep.failed_condition.empty());
    }

    // distinct Casimir eigenvalues on a scaled direct sum: condition (a) fails
    auto sum = direct_sum(build_slmn(2, 0), with_scaled_form(build_slmn(2, 0), 2));
    REQUIRE(validate(sum).all_pass());
    auto gsum = grading_from_torus(sum, TorusElement{QVec(sum.cartan().size(), Rational(0))});
    auto rep = indecomposability_screen(sum, gsum);
    CHECK(!rep.passed);
    CHECK(!rep.failed_condition.empty());

    // the screen is only a necessary condition: an equal-eigenvalue direct
    // sum slips through
    auto twin = direct_sum(build_slmn(2, 0), build_slmn(2, 0));
    auto gtwin = grading_from_torus(twin, TorusElement{QVec(twin.cartan().size(), Rational(0))});
    CHECK(indecomposability_screen(twin, gtwin).passed);

    // gl(m|n) with m != n splits as sl + center with eigenvalues {2(m-n), 0}
    auto gl21 = build_glmn(2, 1);
    auto g21 = grading_from_torus(gl21, TorusElement{QVec(3, Rational(0))});
    CHECK(!indecomposability_screen(gl21, g21).passed);
}

TEST_CASE("torus string round trip") {
    TorusElement t{{Rational(1, 2), Rational(-2, 3), Rational(0)}};
    CHECK(torus_to_string(t) == "1/2,-2/3,0");
    auto back = torus_from_string("1/2, -2/3, 0", 3);
    CHECK(back.coords == t.coords);
    CHECK_THROWS_AS(torus_from_string("1/2", 3), InvalidInput);
}

TEST_CASE("deterministic torus sampling") {
    auto L = build_slmn(2, 1);
    DetRng a(42), b(42);
    for (int i = 0; i < 10; ++i) {
        auto ta = sample_torus_element(L, a), tb = sample_torus_element(L, b);
        CHECK(ta.coords == tb.coords);
        for (const auto& c : ta.coords) {
            CHECK(denominator(c) <= 6);
            CHECK(numerator(c) >= -3);
            CHECK(numerator(c) <= 3);
        }
    }
}

TEST_CASE("the casimir correction has zero supertrace on every eigenspace") {
    DetRng rng(606);
    for (const auto& spec : {"gl(1|1)", "gl(2|2)"}) {
        auto L = algebra_from_spec(spec);
        auto cas = casimir(L);
        REQUIRE(!cas.c_g.is_zero());
        for (int trial = 0; trial < 4; ++trial) {
            auto g = grading_from_torus(L, sample_torus_element(L, rng));
            for (const auto& [p, idxs] : g.eigenspaces) {
                Rational str = 0;
                for (auto i : idxs)
                    str += Rational(parity_sign(L.parity(i))) * cas.c_g(i, i);
                CHECK(str == 0);
            }
        }
    }
}
