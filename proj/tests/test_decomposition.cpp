#include "qla/build.hpp"
#include "qla/decompose.hpp"
#include "qla/grading.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qla;
using namespace testsupport;

namespace {

std::vector<QVec> odd_part(const std::vector<QVec>& basis, const LieSuperalgebra& L) {
    std::vector<QVec> out;
    for (const auto& v : basis) {
        QVec proj(L.dim(), Rational(0));
        bool any = false;
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (L.parity(i) == 1 && v[i] != 0) {
                proj[i] = v[i];
                any = true;
            }
        QVec even = v - proj;
        if (any && is_zero(even)) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("isotypic: gl(1|1) is all trivial-part with Lambda+ = {delta}") {
    auto L = build_glmn(1, 1);
    auto rd = root_datum_with_positivity(L);
    auto iso = isotypic_g1(L, rd);
    CHECK(iso.semisimple_part.empty());  // g_0 abelian
    CHECK(iso.m_triv.size() == 2);
    CHECK(iso.m_lambda.size() == 2);
    REQUIRE(iso.lambda_plus.size() == 1);
    CHECK(iso.m_lambda.at(iso.lambda_plus[0]).size() == 1);
    for (const auto& comp : iso.components) CHECK(comp.dim_v == 1);
}

TEST_CASE("isotypic: C(0|2) is a single zero-weight trivial block") {
    auto L = build_odd_symplectic(1);
    auto rd = root_datum_with_positivity(L);
    auto iso = isotypic_g1(L, rd);
    CHECK(iso.m_triv.size() == 2);
    REQUIRE(iso.m_lambda.size() == 1);
    CHECK(iso.m_lambda.begin()->first == Weight{});  // empty Cartan, empty weight
    CHECK(iso.lambda_plus.empty());
}

TEST_CASE("isotypic: gl(2|1) has two 2-dimensional components and no trivial part") {
    auto L = build_glmn(2, 1);
    auto rd = root_datum_with_positivity(L);
    auto iso = isotypic_g1(L, rd);
    CHECK(iso.m_triv.empty());
    REQUIRE(iso.components.size() == 2);
    for (const auto& comp : iso.components) {
        CHECK(comp.dim_v == 2);
        CHECK(comp.hw_vectors.size() == 1);
    }
}

TEST_CASE("isotypic refuses a non-completely-reducible action") {
    // solvable g_0 = span(h, e) with [h,e] = e acting on three odd vectors:
    // [e,u] = v is a non-semisimple step, so the highest-weight vectors
    // cannot generate the odd part
    LieSuperalgebra L("bad", {0, 0, 1, 1, 1}, {"h", "e", "u", "v", "w"}, {0},
                      [] {
                          QMat f(5, 5);
                          f(0, 0) = 1;
                          f(1, 1) = 1;
                          f(2, 3) = 1;
                          f(3, 2) = -1;
                          return f;
                      }());
    L.set_bracket(0, 1, 1, 1);   // [h,e] = e
    L.set_bracket(0, 3, 3, 1);   // [h,v] = v
    L.set_bracket(0, 4, 4, -1);  // [h,w] = -w
    L.set_bracket(1, 2, 3, 1);   // [e,u] = v
    auto rd = root_datum_with_positivity(L);
    CHECK_THROWS_AS(isotypic_g1(L, rd), NotCompletelyReducible);
}

TEST_CASE("triangular: sl(2)") {
    auto L = build_slmn(2, 0);
    auto t = triangular(L);
    REQUIRE(t.n_basis.size() == 1);
    REQUIRE(t.h_basis.size() == 1);
    REQUIRE(t.n_minus_basis.size() == 1);
    CHECK(t.n_basis[0] == L.basis_vector(label_index(L, "E(1,2)")));
    CHECK(t.n_minus_basis[0] == L.basis_vector(label_index(L, "E(2,1)")));
    CHECK(t.h_plus.empty());  // (h,h) != 0: no isotropic line in a 1-dim Cartan
    CHECK(t.h_plus_maximal_certified);  // floor(1/2) = 0 reached
}

TEST_CASE("triangular: gl(1|1)") {
    auto L = build_glmn(1, 1);
    auto t = triangular(L);
    REQUIRE(t.n_basis.size() == 1);
    CHECK(t.n_basis[0] == L.basis_vector(label_index(L, "E(1,2)")));
    CHECK(t.h_basis.size() == 2);
    CHECK(t.n_minus_basis[0] == L.basis_vector(label_index(L, "E(2,1)")));

    // h+ is the central isotropic line spanned by E11+E22
    QVec id(L.dim(), Rational(0));
    id[label_index(L, "E(1,1)")] = 1;
    id[label_index(L, "E(2,2)")] = 1;
    REQUIRE(t.h_plus.size() == 1);
    CHECK(span_basis({t.h_plus[0], id}, L.dim()).size() == 1);
    CHECK(L.pair(id, id) == 0);
    CHECK(t.h_plus_maximal_certified);
}

TEST_CASE("triangular: C(0|2) polarizes the odd symplectic line pair") {
    auto L = build_odd_symplectic(1);
    auto t = triangular(L);
    CHECK(t.h_basis.empty());
    REQUIRE(t.m_plus.size() == 1);
    REQUIRE(t.m_minus.size() == 1);
    CHECK(t.n_basis.size() == 1);
    CHECK(t.n_minus_basis.size() == 1);
    CHECK(L.pair(t.m_plus[0], t.m_minus[0]) == 1);
}

TEST_CASE("triangular direct-sum and isotropy invariants across the catalog sample") {
    for (const auto& spec :
         {"gl(1|1)", "gl(2|1)", "gl(2|2)", "sl(2|1)", "sl(3|1)", "osp(1|2)", "osp(3|2)",
          "osp(2|2)", "osp(4|2)", "C(0|4)", "sl(3|0)", "osp(0|4)"}) {
        auto L = algebra_from_spec(spec);
        auto t = triangular(L);
        INFO(spec);

        // direct sum: dimensions add up and the union spans everything
        CHECK(t.n_basis.size() + t.h_basis.size() + t.n_minus_basis.size() == L.dim());
        std::vector<QVec> all;
        for (const auto* part : {&t.n_basis, &t.h_basis, &t.n_minus_basis})
            for (const auto& v : *part) all.push_back(v);
        CHECK(span_basis(all, L.dim()).size() == L.dim());

        // n and n_- are isotropic subalgebras orthogonal to h
        for (const auto* part : {&t.n_basis, &t.n_minus_basis}) {
            for (const auto& a : *part)
                for (const auto& b : *part) {
                    CHECK(L.pair(a, b) == 0);
                    CHECK(in_span(*part, L.bracket(a, b), L.dim()));
                }
        }
        for (const auto& a : t.h_basis)
            for (const auto& b : t.n_basis) CHECK(L.pair(a, b) == 0);

        // n pairs nondegenerately against n_-
        QMat gram(t.n_basis.size(), t.n_minus_basis.size());
        for (std::size_t r = 0; r < t.n_basis.size(); ++r)
            for (std::size_t c = 0; c < t.n_minus_basis.size(); ++c)
                gram(r, c) = L.pair(t.n_basis[r], t.n_minus_basis[c]);
        CHECK(inverse(gram).has_value());

        // trivial part commutes with the odd part of g^(2)
        auto g2_odd = odd_part(span_basis(t.g2_basis, L.dim()), L);
        std::vector<QVec> g2_odd_full;
        for (const auto& v : t.g2_basis) {
            QVec proj(L.dim(), Rational(0));
            for (std::size_t i = 0; i < L.dim(); ++i)
                if (L.parity(i) == 1) proj[i] = v[i];
            if (!is_zero(proj)) g2_odd_full.push_back(proj);
        }
        g2_odd_full = span_basis(g2_odd_full, L.dim());
        for (const auto& m : t.isotypic.m_triv)
            for (const auto& y : g2_odd_full) CHECK(is_zero(L.bracket(m, y)));

        // one-dimensional components evaluate to zero on h' = h cap [g,g]
        std::vector<QVec> h_units;
        for (auto c : L.cartan()) h_units.push_back(L.basis_vector(c));
        auto h_prime = intersect_spans(h_units, t.g1_basis, L.dim());
        for (const auto& comp : t.isotypic.components) {
            if (comp.dim_v != 1) continue;
            for (const auto& h : h_prime)
                CHECK(evaluate_weight(L, comp.lambda, h) == 0);
        }

        // generator-pair relations
        auto rd = t.rd;
        for (const auto& p : t.pairs) {
            CHECK(L.pair(p.e, p.f) == 1);
            if (p.kind == "simple-root")
                CHECK(p.h == coroot_vector(L, rd, p.alpha));
            else if (p.kind == "m-lambda")
                CHECK(p.h == coroot_vector(L, rd, p.alpha));
            else
                CHECK(is_zero(p.h));
        }
        for (std::size_t a = 0; a < t.pairs.size(); ++a)
            for (std::size_t b = 0; b < t.pairs.size(); ++b) {
                if (a == b) continue;
                const auto& P = t.pairs[a];
                const auto& Q = t.pairs[b];
                CHECK(is_zero(L.bracket(P.e, Q.f)));
            }
    }
}

TEST_CASE("triangular applies to fixed-point subalgebras of sampled gradings") {
    DetRng rng(99);
    for (const auto& spec : {"sl(2|1)", "gl(2|2)", "osp(3|2)"}) {
        auto L = algebra_from_spec(spec);
        for (int trial = 0; trial < 3; ++trial) {
            auto g = grading_from_torus(L, sample_torus_element(L, rng));
            auto L0 = fixed_point_subalgebra(L, g);
            auto t = triangular(L0);
            CHECK(t.n_basis.size() + t.h_basis.size() + t.n_minus_basis.size() == L0.dim());
        }
    }
}

TEST_CASE("isotropy certificate") {
    auto L = build_glmn(1, 1);
    auto t = triangular(L);

    // W = h+ + n: isotropic of dimension 1 + floor(2/2) = 2, certified maximal
    std::vector<QVec> w = t.h_plus;
    for (const auto& v : t.n_basis) w.push_back(v);
    auto cert = isotropy_certificate(L, w);
    CHECK(cert.isotropic);
    CHECK(cert.dim_w == 2);
    CHECK(cert.target_dim == 2);
    CHECK(cert.maximal_certified);
    CHECK(cert.pairing_nondegenerate);

    // the whole algebra is not isotropic
    std::vector<QVec> whole;
    for (std::size_t i = 0; i < L.dim(); ++i) whole.push_back(L.basis_vector(i));
    auto cert2 = isotropy_certificate(L, whole);
    CHECK(!cert2.isotropic);
    CHECK(cert2.status == "not isotropic");

    // the zero subspace is isotropic but not maximal
    auto cert3 = isotropy_certificate(L, {});
    CHECK(cert3.isotropic);
    CHECK(!cert3.maximal_certified);
    CHECK(cert3.dim_w == 0);

    // a definite Cartan form downgrades honestly: so(5) has no rational
    // isotropic Cartan vectors, so maximality over Q is not certified
    auto so5 = build_ospm2n(5, 0);
    auto t5 = triangular(so5);
    CHECK(t5.h_plus.empty());
    CHECK(!t5.h_plus_maximal_certified);
    std::vector<QVec> w5 = t5.n_basis;
    auto cert5 = isotropy_certificate(so5, w5);
    CHECK(cert5.isotropic);
    CHECK(!cert5.maximal_certified);
    CHECK(cert5.status == "isotropic, not maximal (dimension below dim n + floor(dim h/2))");
}

TEST_CASE("triangular rejects invalid isotropic seeds") {
    auto L = build_glmn(1, 1);
    // a non-isotropic seed: E11 has (E11,E11) = 1
    CHECK_THROWS_AS(triangular(L, {L.basis_vector(label_index(L, "E(1,1)"))}),
                    IsotropicSeedInvalid);
    // a seed outside the Cartan
    CHECK_THROWS_AS(triangular(L, {L.basis_vector(label_index(L, "E(1,2)"))}),
                    IsotropicSeedInvalid);
}
