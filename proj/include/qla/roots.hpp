#pragma once

#include "qla/algebra.hpp"

#include <optional>
#include <vector>

namespace qla {

/// Element of h*, as exact coordinates over the designated Cartan basis:
/// coords[c] = value on the c-th Cartan generator.
using Weight = QVec;

struct Root {
    Weight alpha;
    std::vector<std::size_t> space;  // basis indices spanning g_alpha
    long sdim;                       // dim even part - dim odd part
    int positive = 0;                // +1, -1, or 0 before a positivity choice
};

/// Simultaneous eigenspace data of the Cartan action, with the induced form
/// on h* (through the inverse Cartan Gram matrix).
struct RootDatum {
    std::vector<Root> roots;
    std::vector<std::size_t> zero_space;  // every basis index of weight zero
    QMat cartan_gram;
    QMat cartan_gram_inv;
    bool has_positivity = false;
    Weight functional;  // user part of the positivity functional (may be empty)
    std::optional<Weight> rho;

    const Root* find(const Weight& w) const {
        for (const auto& r : roots)
            if (r.alpha == w) return &r;
        return nullptr;
    }
};

/// Weight of a single basis vector under the designated Cartan, or an error
/// if the vector is not a simultaneous eigenvector.
inline Weight basis_weight(const LieSuperalgebra& L, std::size_t j) {
    Weight w(L.cartan().size(), Rational(0));
    for (std::size_t c = 0; c < L.cartan().size(); ++c) {
        for (const auto& [k, coef] : L.bracket_basis(L.cartan()[c], j)) {
            if (k != j)
                throw NotDiagonalizable("basis vector " + std::to_string(j) +
                                        " is not an eigenvector of the Cartan action");
            w[c] = coef;
        }
    }
    return w;
}

/// Splits the basis into Cartan weight spaces. Requires every basis vector
/// to be a weight vector (true for all built-in constructors); otherwise the
/// Cartan action is reported as non-diagonal.
inline RootDatum root_decomposition(const LieSuperalgebra& L) {
    RootDatum rd;
    const std::size_t r = L.cartan().size();

    std::map<Weight, std::vector<std::size_t>> spaces;
    for (std::size_t j = 0; j < L.dim(); ++j) spaces[basis_weight(L, j)].push_back(j);

    Weight zero(r, Rational(0));
    for (auto& [w, idxs] : spaces) {
        if (w == zero) {
            rd.zero_space = idxs;
            continue;
        }
        long sdim = 0;
        for (auto i : idxs) sdim += L.parity(i) == 0 ? 1 : -1;
        rd.roots.push_back({w, idxs, sdim, 0});
    }
    if (rd.zero_space.empty() && r > 0) rd.zero_space = {};  // keep well-defined

    rd.cartan_gram = QMat(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            rd.cartan_gram(a, b) = L.form()(L.cartan()[a], L.cartan()[b]);
    auto inv = inverse(rd.cartan_gram);
    if (!inv) throw DegenerateForm("form restricted to the Cartan is degenerate");
    rd.cartan_gram_inv = *inv;
    return rd;
}

// ---------------------------------------------------------------------------
// The induced form on h*
// ---------------------------------------------------------------------------

inline Rational weight_pair(const RootDatum& rd, const Weight& a, const Weight& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0 && rd.cartan_gram_inv(i, j) != 0)
                s += a[i] * rd.cartan_gram_inv(i, j) * b[j];
    }
    return s;
}

inline Rational weight_norm2(const RootDatum& rd, const Weight& a) {
    return weight_pair(rd, a, a);
}

/// h_w: the Cartan element representing w through the form, as a full
/// coordinate vector of the algebra.
inline QVec coroot_vector(const LieSuperalgebra& L, const RootDatum& rd, const Weight& w) {
    QVec coords = rd.cartan_gram_inv.apply(w);
    QVec full(L.dim(), Rational(0));
    for (std::size_t c = 0; c < coords.size(); ++c) full[L.cartan()[c]] = coords[c];
    return full;
}

/// Evaluates a weight on a Cartan vector given in full coordinates; the
/// vector must be supported on the Cartan indices.
inline Rational evaluate_weight(const LieSuperalgebra& L, const Weight& w, const QVec& h) {
    QVec reduced = h;
    Rational s = 0;
    for (std::size_t c = 0; c < L.cartan().size(); ++c) {
        s += w[c] * h[L.cartan()[c]];
        reduced[L.cartan()[c]] = 0;
    }
    if (!is_zero(reduced)) throw InvalidInput("vector is not supported on the Cartan");
    return s;
}

// ---------------------------------------------------------------------------
// Positivity and the Weyl vector
// ---------------------------------------------------------------------------

namespace detail {

/// Sign of a root under the functional, falling back to coordinatewise
/// lexicographic comparison so that no root ever evaluates to zero. With an
/// empty functional this is the plain lexicographic rule (the exact
/// realization of weights (1, eps, eps^2, ...)).
inline int positivity_sign(const Weight& functional, const Weight& alpha) {
    if (!functional.empty()) {
        Rational s = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) s += functional[i] * alpha[i];
        if (s > 0) return 1;
        if (s < 0) return -1;
    }
    for (const auto& c : alpha) {
        if (c > 0) return 1;
        if (c < 0) return -1;
    }
    return 0;  // unreachable for a nonzero root
}

}  // namespace detail

/// Marks every root as positive or negative. The functional may vanish on
/// some roots; ties are broken lexicographically, which keeps the choice
/// deterministic and exact.
inline RootDatum choose_positive(RootDatum rd, const Weight& functional = {}) {
    if (!functional.empty() && functional.size() != rd.cartan_gram.rows())
        throw InvalidInput("positivity functional must have one entry per Cartan generator");
    for (auto& root : rd.roots) {
        root.positive = detail::positivity_sign(functional, root.alpha);
        if (root.positive == 0) throw InvalidInput("zero root in positivity assignment");
    }
    rd.has_positivity = true;
    rd.functional = functional;
    rd.rho.reset();
    return rd;
}

/// rho = 1/2 sum over positive roots of sdim(g_alpha) * alpha.
inline Weight weyl_vector(RootDatum& rd) {
    if (!rd.has_positivity) throw InvalidInput("weyl_vector needs a positivity choice");
    std::size_t r = rd.roots.empty() ? (rd.rho ? rd.rho->size() : rd.cartan_gram.rows())
                                     : rd.roots.front().alpha.size();
    Weight rho(r, Rational(0));
    for (const auto& root : rd.roots) {
        if (root.positive != 1) continue;
        for (std::size_t i = 0; i < r; ++i)
            rho[i] += Rational(root.sdim, 2) * root.alpha[i];
    }
    rd.rho = rho;
    return rho;
}

inline RootDatum root_datum_with_positivity(const LieSuperalgebra& L,
                                            const Weight& functional = {}) {
    RootDatum rd = choose_positive(root_decomposition(L), functional);
    weyl_vector(rd);
    return rd;
}

// ---------------------------------------------------------------------------
// Simple roots, highest root, marks (even simple algebras)
// ---------------------------------------------------------------------------

/// Positive roots that are not sums of two positive roots, in canonical
/// (coordinatewise lexicographic) order.
inline std::vector<Weight> simple_positive_roots(const RootDatum& rd) {
    std::vector<Weight> pos;
    for (const auto& r : rd.roots)
        if (r.positive == 1) pos.push_back(r.alpha);
    std::vector<Weight> simple;
    for (const auto& a : pos) {
        bool decomposable = false;
        for (const auto& b : pos) {
            if (decomposable) break;
            for (const auto& c : pos)
                if (b + c == a) {
                    decomposable = true;
                    break;
                }
        }
        if (!decomposable) simple.push_back(a);
    }
    std::sort(simple.begin(), simple.end());
    return simple;
}

struct HighestRootData {
    Weight theta;
    std::vector<Integer> marks;  // coefficients of theta over the simple roots
};

/// The highest root of a purely even simple root system together with its
/// expansion over the simple roots. Errors out when the system is not
/// irreducible (no unique maximal-height root) or coefficients fail to be
/// nonnegative integers.
inline HighestRootData highest_root(const RootDatum& rd, const std::vector<Weight>& simple) {
    const std::size_t n = simple.size();
    if (n == 0) throw InvalidInput("empty simple system");
    QMat sys(simple[0].size(), n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < simple[c].size(); ++r) sys(r, c) = simple[c][r];

    std::optional<HighestRootData> best;
    Rational best_height;
    bool tie = false;
    for (const auto& root : rd.roots) {
        if (root.positive != 1) continue;
        auto coeffs = solve(sys, root.alpha);
        if (!coeffs) throw InvalidInput("positive root outside the simple-root lattice");
        Rational height = 0;
        std::vector<Integer> marks;
        for (const auto& c : *coeffs) {
            if (c < 0 || denominator(c) != 1)
                throw InvalidInput("root coefficients are not nonnegative integers");
            marks.push_back(numerator(c));
            height += c;
        }
        if (!best || height > best_height) {
            best = HighestRootData{root.alpha, marks};
            best_height = height;
            tie = false;
        } else if (height == best_height) {
            tie = true;
        }
    }
    if (!best || tie)
        throw InvalidInput("no unique highest root; the root system is not irreducible");
    return *best;
}

}  // namespace qla
