#pragma once

#include "qla/algebra.hpp"

#include <sstream>

namespace qla {

/// The Casimir operator in the adjoint representation, its halved unique
/// eigenvalue g, and the nilpotent correction C = Omega - 2g.
struct CasimirData {
    QMat omega;
    Rational g_value;
    QMat c_g;
};

/// Omega = sum_i ad(x^i) ad(x_i), assembled sparsely. The dual family here
/// is the right one, (x_j, x^i) = delta_ij: with that pairing Omega commutes
/// with the whole adjoint action, which is what every downstream use needs.
inline QMat casimir_operator(const LieSuperalgebra& L) {
    const std::size_t n = L.dim();
    QMat duals = right_dual_basis(L);
    std::vector<SparseVec> dual_sparse(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (duals(k, i) != 0) dual_sparse[i].emplace_back(k, duals(k, i));

    QMat omega(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [mid, c1] : L.bracket_basis(i, j))
                for (const auto& [a, d] : dual_sparse[i])
                    for (const auto& [k, c2] : L.bracket_basis(a, mid))
                        omega(k, j) += d * c1 * c2;
    return omega;
}

/// Supertrace of the Casimir operator; equals 2g * sdim(g) whenever the
/// spectrum is a single eigenvalue 2g.
inline Rational casimir_supertrace(const LieSuperalgebra& L) {
    return L.supertrace(casimir_operator(L));
}

/// Extracts the unique eigenvalue 2g of Omega, erroring out with
/// DecomposableAlgebra when the (rational) spectrum has more than one
/// eigenvalue. The correction C = Omega - 2g is certified nilpotent by an
/// exact power computation, and C != 0 forces g = 0.
inline CasimirData casimir(const LieSuperalgebra& L) {
    CasimirData data;
    data.omega = casimir_operator(L);
    auto spaces = rational_spectrum_split(data.omega);
    if (L.dim() == 0) {
        data.g_value = 0;
        data.c_g = QMat(0, 0);
        return data;
    }
    if (spaces.size() != 1) {
        std::ostringstream os;
        os << L.name() << ": Casimir spectrum {";
        for (std::size_t i = 0; i < spaces.size(); ++i)
            os << (i ? ", " : "") << to_string(spaces[i].value);
        os << "} is not a single eigenvalue; the algebra splits into orthogonal ideals";
        throw DecomposableAlgebra(os.str());
    }
    data.g_value = spaces[0].value / 2;
    data.c_g = data.omega - QMat::identity(L.dim()) * spaces[0].value;
    if (!data.c_g.power(L.dim()).is_zero())
        throw InvalidInput(L.name() + ": Casimir correction is not nilpotent");
    if (!data.c_g.is_zero() && data.g_value != 0)
        throw InvalidInput(L.name() + ": nonzero Casimir correction with nonzero eigenvalue");
    return data;
}

/// (Omega a, b) = (a, Omega b) for all basis pairs; true for every valid
/// invariant form.
inline bool casimir_symmetry_check(const LieSuperalgebra& L) {
    QMat omega = casimir_operator(L);
    return omega.transpose() * L.form() == L.form() * omega;
}

}  // namespace qla
