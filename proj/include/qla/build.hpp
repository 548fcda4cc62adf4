#pragma once

#include "qla/algebra.hpp"

#include <string>
#include <vector>

namespace qla {

// ---------------------------------------------------------------------------
// Generic matrix realization: a list of homogeneous matrices acting on a
// Z/2-graded column space, bracket = supercommutator, form = scale * str(xy).
// Structure constants are obtained by solving exactly for coordinates.
// ---------------------------------------------------------------------------

namespace detail {

struct MatGen {
    QMat mat;
    std::string label;
};

inline Rational str_defining(const QMat& m, const std::vector<int>& def_parity) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        s += Rational(parity_sign(def_parity[i])) * m(i, i);
    return s;
}

inline int matrix_parity(const QMat& m, const std::vector<int>& def_parity,
                         const std::string& label) {
    int p = -1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) {
                int q = (def_parity[r] + def_parity[c]) % 2;
                if (p == -1) p = q;
                if (p != q) throw InvalidInput("generator " + label + " is not homogeneous");
            }
    if (p == -1) throw InvalidInput("generator " + label + " is zero");
    return p;
}

inline QMat super_commutator(const QMat& x, const QMat& y, int px, int py) {
    return x * y - (y * x) * Rational(parity_sign(px * py));
}

inline LieSuperalgebra from_matrix_realization(const std::string& name,
                                               const std::vector<MatGen>& gens,
                                               const std::vector<int>& def_parity,
                                               const Rational& form_scale,
                                               const std::vector<std::size_t>& cartan) {
    const std::size_t d = gens.size();
    const std::size_t N = def_parity.size();

    std::vector<int> parity(d);
    std::vector<std::string> labels(d);
    for (std::size_t i = 0; i < d; ++i) {
        parity[i] = matrix_parity(gens[i].mat, def_parity, gens[i].label);
        labels[i] = gens[i].label;
    }

    // coordinate map: solve C x = vec(target) through a fixed pivot block
    QMat coeff(N * N, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) coeff(r * N + c, i) = gens[i].mat(r, c);
    Echelon ech = reduced_row_echelon(coeff);
    if (ech.rank() != d) throw InvalidInput(name + ": generators are linearly dependent");
    // pivot rows of coeff^T give an invertible d x d block
    std::vector<std::size_t> pivot_rows;
    {
        Echelon et = reduced_row_echelon(coeff.transpose());
        pivot_rows = et.pivots;  // rows of coeff forming a basis of the row space
    }
    QMat block(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) block(r, c) = coeff(pivot_rows[r], c);
    auto block_inv = inverse(block);
    if (!block_inv) throw InvalidInput(name + ": coordinate block not invertible");

    auto coords_of = [&](const QMat& target) {
        QVec restricted(d);
        for (std::size_t r = 0; r < d; ++r) {
            std::size_t idx = pivot_rows[r];
            restricted[r] = target(idx / N, idx % N);
        }
        QVec x = block_inv->apply(restricted);
        // exactness check: the target must lie in the span
        QMat recon(N, N);
        for (std::size_t i = 0; i < d; ++i)
            if (x[i] != 0) recon = recon + gens[i].mat * x[i];
        if (!(recon == target)) throw InvalidInput(name + ": bracket leaves the span");
        return x;
    };

    QMat form(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            form(i, j) = form_scale * str_defining(gens[i].mat * gens[j].mat, def_parity);

    LieSuperalgebra L(name, parity, labels, cartan, form);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            if (i == j && parity[i] == 0) continue;
            QMat br = super_commutator(gens[i].mat, gens[j].mat, parity[i], parity[j]);
            QVec x = coords_of(br);
            for (std::size_t k = 0; k < d; ++k)
                if (x[k] != 0) L.set_bracket(i, j, k, x[k]);
        }
    return L;
}

inline QMat unit_matrix(std::size_t N, std::size_t r, std::size_t c) {
    QMat m(N, N);
    m(r, c) = 1;
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gl(m|n): all matrix units, form = supertrace
// ---------------------------------------------------------------------------

inline LieSuperalgebra build_glmn(std::size_t m, std::size_t n) {
    if (m + n < 1) throw InvalidInput("gl(m|n) needs m+n >= 1");
    const std::size_t N = m + n;
    std::vector<int> def_parity(N);
    for (std::size_t a = 0; a < N; ++a) def_parity[a] = a < m ? 0 : 1;

    std::vector<detail::MatGen> gens;
    std::vector<std::size_t> cartan;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) cartan.push_back(gens.size());
            gens.push_back({detail::unit_matrix(N, a, b),
                            "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"});
        }
    std::string name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    return detail::from_matrix_realization(name, gens, def_parity, 1, cartan);
}

// ---------------------------------------------------------------------------
// sl(m|n), m != n: supertraceless matrices, form = supertrace
// ---------------------------------------------------------------------------

inline LieSuperalgebra build_slmn(std::size_t m, std::size_t n) {
    if (m + n < 2) throw InvalidInput("sl(m|n) needs m+n >= 2");
    if (m == n)
        throw DegenerateForm("the supertrace form of sl(" + std::to_string(m) + "|" +
                             std::to_string(n) + ") is degenerate (supertraceless identity)");
    const std::size_t N = m + n;
    std::vector<int> def_parity(N);
    for (std::size_t a = 0; a < N; ++a) def_parity[a] = a < m ? 0 : 1;

    std::vector<detail::MatGen> gens;
    std::vector<std::size_t> cartan;
    // supertraceless diagonal combinations come first
    for (std::size_t i = 0; i + 1 < N; ++i) {
        QMat h(N, N);
        h(i, i) = 1;
        // str(E_ii - eps E_{i+1,i+1}) = 0 with eps = +1 inside a parity block,
        // -1 across the even/odd boundary
        h(i + 1, i + 1) = (def_parity[i] == def_parity[i + 1]) ? -1 : 1;
        cartan.push_back(gens.size());
        gens.push_back({h, "H(" + std::to_string(i + 1) + ")"});
    }
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            gens.push_back({detail::unit_matrix(N, a, b),
                            "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"});
        }
    std::string name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    return detail::from_matrix_realization(name, gens, def_parity, 1, cartan);
}

// ---------------------------------------------------------------------------
// osp(m|2n) in the split realization: the defining space carries the
// antidiagonal symmetric form on the even part and the antidiagonal
// symplectic form on the odd part, so that the Cartan subalgebra is diagonal
// and every basis element is a weight vector. Form = supertrace / 2.
// ---------------------------------------------------------------------------

inline LieSuperalgebra build_ospm2n(std::size_t m, std::size_t n) {
    if (m + n < 1) throw InvalidInput("osp(m|2n) needs m+n >= 1");
    const std::size_t N = m + 2 * n;
    std::vector<int> def_parity(N);
    for (std::size_t a = 0; a < N; ++a) def_parity[a] = a < m ? 0 : 1;

    auto refl = [&](std::size_t i) { return m - 1 - i; };           // orthogonal indices
    auto srefl = [&](std::size_t j) { return 2 * n - 1 - j; };      // symplectic indices
    auto eps = [&](std::size_t j) { return j < n ? 1 : -1; };       // symplectic sign

    std::vector<detail::MatGen> gens;
    std::vector<std::size_t> cartan;

    auto label = [](const char* fam, std::size_t i, std::size_t j) {
        return std::string(fam) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    // Cartan: diagonal so-part then diagonal sp-part
    for (std::size_t i = 0; i + 1 <= m / 2; ++i) {
        QMat h(N, N);
        h(i, i) = 1;
        h(refl(i), refl(i)) = -1;
        cartan.push_back(gens.size());
        gens.push_back({h, "HB(" + std::to_string(i + 1) + ")"});
    }
    for (std::size_t j = 0; j < n; ++j) {
        QMat h(N, N);
        h(m + j, m + j) = 1;
        h(m + srefl(j), m + srefl(j)) = -1;
        cartan.push_back(gens.size());
        gens.push_back({h, "HC(" + std::to_string(j + 1) + ")"});
    }

    // so block: B(i,j) = E_ij - E_{refl(j), refl(i)}, one per orbit
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;  // diagonal handled above
            std::size_t ri = refl(j), rj = refl(i);
            if (std::pair(i, j) == std::pair(ri, rj)) continue;  // zero vector
            if (std::pair(i, j) > std::pair(ri, rj)) continue;   // orbit representative
            QMat b(N, N);
            b(i, j) = 1;
            b(ri, rj) = -1;
            gens.push_back({b, label("B", i, j)});
        }

    // sp block: C(i,j) = E_{m+i,m+j} - eps_i eps_j E_{m+j',m+i'}
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            if (i == j && srefl(i) != j) continue;  // diagonal handled above
            std::size_t ri = srefl(j), rj = srefl(i);
            if (std::pair(i, j) > std::pair(ri, rj)) continue;
            QMat c(N, N);
            c(m + i, m + j) = 1;
            if (std::pair(i, j) == std::pair(ri, rj)) {
                // antidiagonal fixed points E_{i,i'} survive with coefficient 2;
                // keep them normalized to a single unit
            } else {
                c(m + ri, m + rj) = c(m + ri, m + rj) - Rational(eps(i) * eps(j));
            }
            gens.push_back({c, label("C", i, j)});
        }

    // odd block: F(i,j) pairs the even-odd unit with its symplectic partner
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            QMat f(N, N);
            f(i, m + j) = 1;
            f(m + srefl(j), refl(i)) = eps(j);
            gens.push_back({f, label("F", i, j)});
        }

    std::string name = "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
    if (gens.empty()) {
        return LieSuperalgebra(name, {}, {}, {}, QMat(0, 0));
    }
    return detail::from_matrix_realization(name, gens, def_parity, Rational(1, 2), cartan);
}

// ---------------------------------------------------------------------------
// C(0|2n): a symplectic vector space as a purely odd abelian superalgebra
// ---------------------------------------------------------------------------

inline LieSuperalgebra build_odd_symplectic(std::size_t n) {
    if (n < 1) throw InvalidInput("C(0|2n) needs n >= 1");
    std::vector<int> parity(2 * n, 1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e(" + std::to_string(i + 1) + ")");
    for (std::size_t i = 0; i < n; ++i) labels.push_back("f(" + std::to_string(i + 1) + ")");
    QMat form(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        form(i, n + i) = 1;
        form(n + i, i) = -1;
    }
    return LieSuperalgebra("C(0|" + std::to_string(2 * n) + ")", parity, labels, {}, form);
}

// ---------------------------------------------------------------------------
// Spec strings and the built-in catalog
// ---------------------------------------------------------------------------

/// Parses "gl(2|1)", "sl(3|0)", "osp(3|2)", "C(0|4)".
inline LieSuperalgebra algebra_from_spec(const std::string& spec) {
    auto open = spec.find('(');
    auto bar = spec.find('|');
    auto close = spec.find(')');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
        !(open < bar && bar < close))
        throw InvalidInput("cannot parse algebra spec '" + spec + "'");
    std::string fam = spec.substr(0, open);
    long p, q;
    try {
        p = std::stol(spec.substr(open + 1, bar - open - 1));
        q = std::stol(spec.substr(bar + 1, close - bar - 1));
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse algebra spec '" + spec + "'");
    }
    if (p < 0 || q < 0) throw InvalidInput("negative parameters in '" + spec + "'");
    if (fam == "gl") return build_glmn(p, q);
    if (fam == "sl") return build_slmn(p, q);
    if (fam == "osp") {
        if (q % 2 != 0) throw InvalidInput("osp(m|2n) needs an even odd-dimension, got " + spec);
        return build_ospm2n(p, q / 2);
    }
    if (fam == "C") {
        if (p != 0 || q % 2 != 0) throw InvalidInput("odd symplectic family is C(0|2n)");
        return build_odd_symplectic(q / 2);
    }
    throw InvalidInput("unknown family '" + fam + "' (known: gl, sl, osp, C)");
}

inline std::size_t osp_dimension(std::size_t m, std::size_t n) {
    return m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n;
}

/// The built-in verification catalog: gl(m|n) with 1 <= m+n <= 5,
/// sl(m|n) with m != n and m+n <= 5, osp(m|2n) with 1 <= dim <= 40,
/// and the purely odd C(0|2n) examples.
inline std::vector<std::string> catalog_specs() {
    std::vector<std::string> specs;
    for (std::size_t total = 1; total <= 5; ++total)
        for (std::size_t m = 0; m <= total; ++m)
            specs.push_back("gl(" + std::to_string(m) + "|" + std::to_string(total - m) + ")");
    for (std::size_t total = 2; total <= 5; ++total)
        for (std::size_t m = 0; m <= total; ++m) {
            std::size_t n = total - m;
            if (m == n) continue;
            specs.push_back("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
        }
    for (std::size_t m = 0; m <= 9; ++m)
        for (std::size_t n = 0; n <= 4; ++n) {
            std::size_t d = osp_dimension(m, n);
            if (d < 1 || d > 40) continue;
            specs.push_back("osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")");
        }
    specs.push_back("C(0|2)");
    specs.push_back("C(0|4)");
    return specs;
}

}  // namespace qla
