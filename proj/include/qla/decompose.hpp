#pragma once

#include "qla/casimir.hpp"
#include "qla/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qla {

// ---------------------------------------------------------------------------
// Span utilities
// ---------------------------------------------------------------------------

/// Basis of span(A) intersected with span(B).
inline std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b,
                                         std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    QMat m(dim, a.size() + b.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = a[c][r];
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + c) = -b[c][r];
    std::vector<QVec> out;
    for (const auto& k : kernel(m)) {
        QVec v(dim, Rational(0));
        for (std::size_t c = 0; c < a.size(); ++c)
            if (k[c] != 0) v = v + k[c] * a[c];
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    return span_basis(out, dim);
}

inline bool in_span(const std::vector<QVec>& basis, const QVec& v, std::size_t dim) {
    auto with = basis;
    with.push_back(v);
    return span_basis(with, dim).size() == span_basis(basis, dim).size();
}

// ---------------------------------------------------------------------------
// Isotypic analysis of the odd part under g_0
// ---------------------------------------------------------------------------

struct IsotypicComponent {
    Weight lambda;                 // highest weight
    std::vector<QVec> hw_vectors;  // basis of the multiplicity space
    std::size_t dim_v;             // dimension of one copy of V(lambda)
};

struct IsotypicDecomposition {
    std::vector<IsotypicComponent> components;
    std::vector<QVec> m_triv;                      // centralizer of [g_0,g_0] in g_1
    std::map<Weight, std::vector<QVec>> m_lambda;  // weight split of m_triv
    std::vector<Weight> lambda_plus;               // positive members of Lambda \ {0}
    std::vector<QVec> semisimple_part;             // basis of [g_0, g_0]
};

namespace detail {

inline std::vector<QVec> joint_odd_kernel(const LieSuperalgebra& L,
                                          const std::vector<QVec>& operators,
                                          const std::vector<std::size_t>& odd_idx) {
    const std::size_t d = odd_idx.size();
    if (operators.empty()) {
        std::vector<QVec> all;
        for (auto i : odd_idx) all.push_back(L.basis_vector(i));
        return all;
    }
    QMat sys(operators.size() * L.dim(), d);
    for (std::size_t o = 0; o < operators.size(); ++o)
        for (std::size_t c = 0; c < d; ++c) {
            QVec img = L.bracket(operators[o], L.basis_vector(odd_idx[c]));
            for (std::size_t r = 0; r < L.dim(); ++r) sys(o * L.dim() + r, c) = img[r];
        }
    std::vector<QVec> out;
    for (const auto& k : kernel(sys)) {
        QVec v(L.dim(), Rational(0));
        for (std::size_t c = 0; c < d; ++c) v[odd_idx[c]] = k[c];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Splits g_1 into g_0-isotypic components: highest-weight vectors are the
/// joint kernel of the raising operators (positive even root vectors of the
/// chosen Borel of g_0), the trivial part is the centralizer of [g_0,g_0].
inline IsotypicDecomposition isotypic_g1(const LieSuperalgebra& L, const RootDatum& rd) {
    if (!rd.has_positivity) throw InvalidInput("isotypic_g1 needs a positivity choice");
    IsotypicDecomposition iso;
    const std::size_t n = L.dim();

    std::vector<std::size_t> odd_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (L.parity(i) == 1) odd_idx.push_back(i);

    // [g_0, g_0]
    std::vector<QVec> even_products;
    for (std::size_t i = 0; i < n; ++i) {
        if (L.parity(i) == 1) continue;
        for (std::size_t j = i; j < n; ++j) {
            if (L.parity(j) == 1) continue;
            const auto& terms = L.stored_triangle(i, j);
            if (terms.empty()) continue;
            QVec v(n, Rational(0));
            for (const auto& [k, c] : terms) v[k] = c;
            even_products.push_back(std::move(v));
        }
    }
    iso.semisimple_part = span_basis(even_products, n);

    // trivial isotypic part and its weight split
    iso.m_triv = detail::joint_odd_kernel(L, iso.semisimple_part, odd_idx);
    Weight zero(L.cartan().size(), Rational(0));
    {
        std::map<Weight, std::vector<QVec>> weight_spaces;
        for (const auto& root : rd.roots) {
            std::vector<QVec> span;
            for (auto i : root.space)
                if (L.parity(i) == 1) span.push_back(L.basis_vector(i));
            if (!span.empty()) weight_spaces[root.alpha] = span;
        }
        std::vector<QVec> zero_odd;
        for (auto i : rd.zero_space)
            if (L.parity(i) == 1) zero_odd.push_back(L.basis_vector(i));
        if (!zero_odd.empty()) weight_spaces[zero] = zero_odd;

        for (const auto& [w, space] : weight_spaces) {
            auto inter = intersect_spans(iso.m_triv, space, n);
            if (!inter.empty()) iso.m_lambda[w] = inter;
        }
        std::size_t split_total = 0;
        for (const auto& [w, v] : iso.m_lambda) split_total += v.size();
        if (split_total != iso.m_triv.size())
            throw InvalidInput("trivial isotypic part is not a sum of weight spaces");
    }
    for (const auto& [w, space] : iso.m_lambda) {
        if (w == zero) continue;
        if (detail::positivity_sign(rd.functional, w) == 1) iso.lambda_plus.push_back(w);
    }
    // Lambda^- = -Lambda^+ with matching dimensions
    for (const auto& lp : iso.lambda_plus) {
        Weight neg = Rational(-1) * lp;
        auto it = iso.m_lambda.find(neg);
        if (it == iso.m_lambda.end() || it->second.size() != iso.m_lambda.at(lp).size())
            throw InvalidInput("weight split of the trivial part is not symmetric");
    }

    // raising and lowering operators of g_0
    std::vector<QVec> raising, lowering;
    for (const auto& root : rd.roots)
        for (auto i : root.space) {
            if (L.parity(i) == 1) continue;
            (root.positive == 1 ? raising : lowering).push_back(L.basis_vector(i));
        }

    auto hw = detail::joint_odd_kernel(L, raising, odd_idx);

    // group highest-weight vectors by weight
    std::map<Weight, std::vector<QVec>> hw_by_weight;
    {
        std::map<Weight, std::vector<QVec>> weight_spaces;
        for (const auto& root : rd.roots) {
            std::vector<QVec> span;
            for (auto i : root.space)
                if (L.parity(i) == 1) span.push_back(L.basis_vector(i));
            if (!span.empty()) weight_spaces[root.alpha] = span;
        }
        std::vector<QVec> zero_odd;
        for (auto i : rd.zero_space)
            if (L.parity(i) == 1) zero_odd.push_back(L.basis_vector(i));
        if (!zero_odd.empty()) weight_spaces[zero] = zero_odd;

        std::size_t counted = 0;
        for (const auto& [w, space] : weight_spaces) {
            auto inter = intersect_spans(hw, space, n);
            if (!inter.empty()) {
                hw_by_weight[w] = inter;
                counted += inter.size();
            }
        }
        if (counted != hw.size())
            throw NotCompletelyReducible("highest-weight space is not a sum of weight spaces");
    }

    // generate each irreducible from one highest-weight vector
    std::vector<QVec> generated_all;
    for (const auto& [lambda, mult_basis] : hw_by_weight) {
        std::vector<QVec> module{mult_basis.front()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<QVec> next = module;
            for (const auto& f : lowering)
                for (const auto& v : module) {
                    QVec img = L.bracket(f, v);
                    if (!is_zero(img) && !in_span(next, img, n)) {
                        next.push_back(img);
                        next = span_basis(next, n);
                        grew = true;
                    }
                }
            module = span_basis(next, n);
        }
        iso.components.push_back({lambda, mult_basis, module.size()});
        for (const auto& v0 : mult_basis) {
            std::vector<QVec> copy{v0};
            bool more = true;
            while (more) {
                more = false;
                for (const auto& f : lowering)
                    for (const auto& v : std::vector<QVec>(copy)) {
                        QVec img = L.bracket(f, v);
                        if (!is_zero(img) && !in_span(copy, img, n)) {
                            copy.push_back(img);
                            copy = span_basis(copy, n);
                            more = true;
                        }
                    }
            }
            for (const auto& v : copy) generated_all.push_back(v);
        }
    }
    if (span_basis(generated_all, n).size() != odd_idx.size())
        throw NotCompletelyReducible(
            "highest-weight vectors do not generate the whole odd part");
    return iso;
}

// ---------------------------------------------------------------------------
// Triangular decomposition g = n + h + n_-
// ---------------------------------------------------------------------------

struct GeneratorPair {
    QVec e, f;         // dual pair, (e, f) = 1
    QVec h;            // [e, f]
    Weight alpha;      // weight of e (zero weight for polarization pairs)
    std::string kind;  // "simple-root" | "m-lambda" | "m-zero"
};

struct TriangularData {
    RootDatum rd;  // positivity and rho as used for the construction
    std::vector<QVec> n_basis, h_basis, n_minus_basis;
    std::vector<QVec> m_plus, m_minus;  // polarization of the zero-weight odd part
    std::vector<QVec> h_plus;           // isotropic subspace of h
    bool h_plus_maximal_certified = false;
    std::vector<QVec> g1_basis, g2_basis;
    IsotypicDecomposition isotypic;
    std::vector<GeneratorPair> pairs;
};

namespace detail {

/// Greedy hyperbolic extension of an isotropic family inside the Cartan.
/// Returns the extended family; `certified` reports whether floor(dim h / 2)
/// was reached, i.e. whether maximality holds over any field extension.
inline std::vector<QVec> extend_isotropic_in_cartan(const LieSuperalgebra& L,
                                                    std::vector<QVec> w, bool* extended_once) {
    const auto& cartan = L.cartan();
    if (extended_once) *extended_once = false;
    bool grew = true;
    while (grew) {
        grew = false;
        // candidates: h-vectors orthogonal to w, modulo span(w)
        QMat sys(w.size(), cartan.size());
        for (std::size_t r = 0; r < w.size(); ++r)
            for (std::size_t c = 0; c < cartan.size(); ++c) {
                Rational s = 0;
                for (std::size_t k = 0; k < cartan.size(); ++k)
                    s += L.form()(cartan[c], cartan[k]) * w[r][cartan[k]];
                sys(r, c) = s;
            }
        std::vector<QVec> candidates;
        for (const auto& k : kernel(sys)) {
            QVec v(L.dim(), Rational(0));
            for (std::size_t c = 0; c < cartan.size(); ++c) v[cartan[c]] = k[c];
            if (!in_span(w, v, L.dim())) candidates.push_back(std::move(v));
        }
        std::optional<QVec> found;
        for (const auto& v : candidates)
            if (L.pair(v, v) == 0) {
                found = v;
                break;
            }
        if (!found) {
            for (std::size_t a = 0; a < candidates.size() && !found; ++a)
                for (std::size_t b = a + 1; b < candidates.size() && !found; ++b) {
                    const QVec &u = candidates[a], &v = candidates[b];
                    Rational uu = L.pair(u, u), uv = L.pair(u, v), vv = L.pair(v, v);
                    // roots of Q(u + t v) = uu + 2t uv + t^2 vv
                    auto disc = exact_sqrt(uv * uv - uu * vv);
                    if (!disc) continue;
                    Rational t = (-uv + *disc) / vv;
                    QVec cand = u + t * v;
                    if (L.pair(cand, cand) == 0 && !in_span(w, cand, L.dim())) found = cand;
                }
        }
        if (found) {
            w.push_back(*found);
            w = span_basis(w, L.dim());
            grew = true;
            if (extended_once) *extended_once = true;
        }
    }
    return w;
}

/// Symplectic polarization of the odd zero-weight space by hyperbolic pairs.
inline void polarize(const LieSuperalgebra& L, std::vector<QVec> space, std::vector<QVec>& plus,
                     std::vector<QVec>& minus) {
    while (!space.empty()) {
        QVec v = space.front();
        std::optional<QVec> partner;
        for (const auto& u : space)
            if (L.pair(v, u) != 0) {
                partner = (Rational(1) / L.pair(v, u)) * u;
                break;
            }
        if (!partner)
            throw DegenerateForm("form degenerate on the zero-weight odd part");
        QVec w = *partner;
        std::vector<QVec> rest;
        for (const auto& u : space) {
            if (in_span({v, w}, u, L.dim())) continue;
            QVec red = u - L.pair(u, w) * v + L.pair(u, v) * w;
            if (!is_zero(red)) rest.push_back(red);
        }
        plus.push_back(v);
        minus.push_back(w);
        space = span_basis(rest, L.dim());
    }
}

}  // namespace detail

/// The structural decomposition: n collects the positive root spaces and one
/// half of the zero-weight odd polarization, h is the Cartan, n_- mirrors n.
/// h_plus is a maximal-by-greedy isotropic subspace of h containing the image
/// of the Casimir correction (and any caller-supplied seed).
inline TriangularData triangular(const LieSuperalgebra& L,
                                 const std::vector<QVec>& h_plus_seed = {}) {
    TriangularData t;
    t.rd = root_datum_with_positivity(L);
    const std::size_t n = L.dim();

    // the even zero-weight space must be exactly the Cartan
    for (auto z : t.rd.zero_space)
        if (L.parity(z) == 0 &&
            std::find(L.cartan().begin(), L.cartan().end(), z) == L.cartan().end())
            throw InvalidInput(
                "even zero-weight vectors outside the designated Cartan are unsupported");

    t.isotypic = isotypic_g1(L, t.rd);

    Weight zero(L.cartan().size(), Rational(0));
    std::vector<QVec> m_zero;
    if (auto it = t.isotypic.m_lambda.find(zero); it != t.isotypic.m_lambda.end())
        m_zero = it->second;
    std::size_t odd_zero_count = 0;
    for (auto z : t.rd.zero_space)
        if (L.parity(z) == 1) ++odd_zero_count;
    if (m_zero.size() != odd_zero_count)
        throw InvalidInput("odd zero-weight vectors outside the trivial isotypic part");

    detail::polarize(L, m_zero, t.m_plus, t.m_minus);

    for (const auto& root : t.rd.roots)
        for (auto i : root.space)
            (root.positive == 1 ? t.n_basis : t.n_minus_basis).push_back(L.basis_vector(i));
    for (const auto& v : t.m_plus) t.n_basis.push_back(v);
    for (const auto& v : t.m_minus) t.n_minus_basis.push_back(v);
    for (auto c : L.cartan()) t.h_basis.push_back(L.basis_vector(c));

    // isotropic subspace of h: seed with the Casimir correction image
    std::vector<QVec> seed;
    for (const auto& v : h_plus_seed) {
        QVec reduced = v;
        for (auto c : L.cartan()) reduced[c] = 0;
        if (!is_zero(reduced))
            throw IsotropicSeedInvalid("seed vector is not supported on the Cartan");
        seed.push_back(v);
    }
    try {
        auto cas = casimir(L);
        if (!cas.c_g.is_zero())
            for (std::size_t j = 0; j < n; ++j) {
                QVec col = matrix_column(cas.c_g, j);
                if (!is_zero(col)) seed.push_back(col);
            }
    } catch (const DecomposableAlgebra&) {
        // no unique Casimir eigenvalue: nothing forces directions into h_plus
    }
    seed = span_basis(seed, n);
    for (const auto& u : seed) {
        QVec reduced = u;
        for (auto c : L.cartan()) reduced[c] = 0;
        if (!is_zero(reduced))
            throw IsotropicSeedInvalid("mandated isotropic directions leave the Cartan");
        for (const auto& v : seed)
            if (L.pair(u, v) != 0)
                throw IsotropicSeedInvalid("seed vectors are not mutually isotropic");
    }
    t.h_plus = detail::extend_isotropic_in_cartan(L, seed, nullptr);
    t.h_plus_maximal_certified = (t.h_plus.size() == L.cartan().size() / 2);

    auto towers = derived_towers(L);
    t.g1_basis = std::move(towers.first);
    t.g2_basis = std::move(towers.second);

    // generator pairs: simple-root dual pairs and the trivial-part pairs
    auto make_dual_pairs = [&](const std::vector<QVec>& e_side, const std::vector<QVec>& f_side,
                               const Weight& alpha, const std::string& kind) {
        QMat gram(e_side.size(), f_side.size());
        for (std::size_t r = 0; r < e_side.size(); ++r)
            for (std::size_t c = 0; c < f_side.size(); ++c)
                gram(r, c) = L.pair(e_side[r], f_side[c]);
        auto inv = inverse(gram);
        if (!inv) throw DegenerateForm("opposite root spaces do not pair nondegenerately");
        for (std::size_t r = 0; r < e_side.size(); ++r) {
            QVec f(n, Rational(0));
            for (std::size_t c = 0; c < f_side.size(); ++c)
                f = f + (*inv)(c, r) * f_side[c];
            t.pairs.push_back({e_side[r], f, L.bracket(e_side[r], f), alpha, kind});
        }
    };

    // simple-root pairs are taken inside g^(2); root vectors living in the
    // trivial isotypic part are covered by the m-lambda pairs instead
    for (const auto& alpha : simple_positive_roots(t.rd)) {
        const Root* pos = t.rd.find(alpha);
        Weight neg = Rational(-1) * alpha;
        const Root* opp = t.rd.find(neg);
        if (!pos || !opp) continue;
        std::vector<QVec> pos_units, neg_units;
        for (auto i : pos->space) pos_units.push_back(L.basis_vector(i));
        for (auto i : opp->space) neg_units.push_back(L.basis_vector(i));
        auto e_side = intersect_spans(pos_units, t.g2_basis, n);
        auto f_side = intersect_spans(neg_units, t.g2_basis, n);
        if (e_side.empty() || f_side.empty()) continue;
        make_dual_pairs(e_side, f_side, alpha, "simple-root");
    }
    for (const auto& lp : t.isotypic.lambda_plus)
        make_dual_pairs(t.isotypic.m_lambda.at(lp),
                        t.isotypic.m_lambda.at(Rational(-1) * lp), lp, "m-lambda");
    if (!t.m_plus.empty()) {
        Weight zw(L.cartan().size(), Rational(0));
        make_dual_pairs(t.m_plus, t.m_minus, zw, "m-zero");
    }
    return t;
}

// ---------------------------------------------------------------------------
// Isotropy certificates
// ---------------------------------------------------------------------------

struct Certificate {
    bool isotropic = false;
    bool maximal_certified = false;
    bool pairing_nondegenerate = false;  // Gram(n, n_-) invertible
    std::size_t dim_w = 0;
    std::size_t target_dim = 0;  // dim n + floor(dim h / 2)
    std::string status;
};

/// Certifies exact isotropy of span(W). Maximality is certified only when
/// the dimension reaches dim n + floor(dim h / 2) and the Cartan form was
/// split by the greedy hyperbolic extension; otherwise the certificate
/// reports the honest weaker statement.
inline Certificate isotropy_certificate(const LieSuperalgebra& L, const std::vector<QVec>& w) {
    Certificate cert;
    auto basis = span_basis(w, L.dim());
    cert.dim_w = basis.size();
    cert.isotropic = true;
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (L.pair(a, b) != 0) cert.isotropic = false;

    auto t = triangular(L);
    cert.target_dim = t.n_basis.size() + L.cartan().size() / 2;
    {
        QMat gram(t.n_basis.size(), t.n_minus_basis.size());
        for (std::size_t r = 0; r < t.n_basis.size(); ++r)
            for (std::size_t c = 0; c < t.n_minus_basis.size(); ++c)
                gram(r, c) = L.pair(t.n_basis[r], t.n_minus_basis[c]);
        cert.pairing_nondegenerate = inverse(gram).has_value();
    }

    if (!cert.isotropic) {
        cert.status = "not isotropic";
        return cert;
    }
    bool h_split = (t.h_plus.size() == L.cartan().size() / 2);
    if (cert.dim_w == cert.target_dim && h_split) {
        cert.maximal_certified = true;
        cert.status = "isotropic, certified maximal";
    } else if (cert.dim_w < cert.target_dim) {
        cert.status = "isotropic, not maximal (dimension below dim n + floor(dim h/2))";
    } else {
        cert.status = "isotropic; maximality not certified over Q";
    }
    return cert;
}

}  // namespace qla
