#pragma once

#include "qla/matrix.hpp"
#include "qla/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qla {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional Lie superalgebra with a designated basis:
/// parity labels, sparse structure constants, an invariant supersymmetric
/// bilinear form, and the index set of a Cartan subalgebra of g_0.
///
/// Structure constants are stored for i <= j only; the other triangle is
/// derived through super-skew-symmetry, which makes that axiom structural.
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;

    LieSuperalgebra(std::string name, std::vector<int> parity, std::vector<std::string> labels,
                    std::vector<std::size_t> cartan, QMat form)
        : name_(std::move(name)),
          parity_(std::move(parity)),
          labels_(std::move(labels)),
          cartan_(std::move(cartan)),
          form_(std::move(form)),
          table_(parity_.size() * parity_.size()) {
        if (labels_.size() != parity_.size() || form_.rows() != parity_.size() ||
            form_.cols() != parity_.size())
            throw InvalidInput("inconsistent algebra data sizes");
        for (auto c : cartan_)
            if (c >= parity_.size() || parity_[c] != 0)
                throw InvalidInput("cartan indices must point at even basis vectors");
    }

    std::size_t dim() const { return parity_.size(); }
    int parity(std::size_t i) const { return parity_[i]; }
    const std::vector<int>& parities() const { return parity_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::size_t>& cartan() const { return cartan_; }
    const QMat& form() const { return form_; }
    const std::string& name() const { return name_; }

    long sdim() const {
        long s = 0;
        for (int p : parity_) s += (p == 0) ? 1 : -1;
        return s;
    }

    /// Registers c in [x_i, x_j] = sum_k c_ijk x_k. Pairs are normalized to
    /// i <= j; [x_i, x_i] = 0 is enforced for even i.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, Rational c) {
        if (c == 0) return;
        if (i > j) {
            c *= -Rational(parity_sign(parity_[i] * parity_[j]));
            std::swap(i, j);
        }
        if (i == j && parity_[i] == 0)
            throw InvalidInput("[x,x] must vanish for even x");
        auto& terms = table_[i * dim() + j];
        for (auto& [idx, coef] : terms)
            if (idx == k) {
                coef += c;
                if (coef == 0)
                    terms.erase(std::find_if(terms.begin(), terms.end(),
                                             [k](const auto& t) { return t.first == k; }));
                return;
            }
        terms.emplace_back(k, std::move(c));
    }

    /// [x_i, x_j] as a sparse coordinate vector.
    SparseVec bracket_basis(std::size_t i, std::size_t j) const {
        if (i <= j) return table_[i * dim() + j];
        SparseVec out = table_[j * dim() + i];
        Rational sign = -Rational(parity_sign(parity_[i] * parity_[j]));
        for (auto& [k, c] : out) c *= sign;
        return out;
    }

    const SparseVec& stored_triangle(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }

    /// Bilinear extension of the structure constants to coordinate vectors.
    QVec bracket(const QVec& a, const QVec& b) const {
        QVec out(dim(), Rational(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j] == 0) continue;
                Rational f = a[i] * b[j];
                for (const auto& [k, c] : bracket_basis(i, j)) out[k] += f * c;
            }
        }
        return out;
    }

    /// ad(x_i) as a dense matrix: column j holds [x_i, x_j].
    QMat ad_basis(std::size_t i) const {
        QMat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) = c;
        return m;
    }

    QMat ad(const QVec& a) const {
        QMat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            QVec unit(dim(), Rational(0));
            unit[j] = 1;
            QVec col = bracket(a, unit);
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
        }
        return m;
    }

    Rational pair(const QVec& a, const QVec& b) const {
        Rational s = 0;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j)
                if (b[j] != 0 && form_(i, j) != 0) s += a[i] * form_(i, j) * b[j];
        }
        return s;
    }

    QVec basis_vector(std::size_t i) const {
        QVec v(dim(), Rational(0));
        v[i] = 1;
        return v;
    }

    /// Supertrace of an operator on the algebra given as a matrix.
    Rational supertrace(const QMat& op) const {
        Rational s = 0;
        for (std::size_t i = 0; i < dim(); ++i)
            s += Rational(parity_sign(parity_[i])) * op(i, i);
        return s;
    }

    bool operator==(const LieSuperalgebra& o) const {
        return name_ == o.name_ && parity_ == o.parity_ && labels_ == o.labels_ &&
               cartan_ == o.cartan_ && form_ == o.form_ && table_ == o.table_;
    }

    std::string format_vector(const QVec& v) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i] == 0) continue;
            if (!first) os << (v[i] > 0 ? " + " : " - ");
            else if (v[i] < 0) os << "-";
            Rational a = v[i] > 0 ? v[i] : -v[i];
            if (a != 1) os << a.str() << "*";
            os << labels_[i];
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    std::string name_;
    std::vector<int> parity_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> cartan_;
    QMat form_;
    std::vector<SparseVec> table_;  // filled for i <= j only
};

// ---------------------------------------------------------------------------
// Axiom validation
// ---------------------------------------------------------------------------

struct AxiomCheck {
    std::string axiom;
    bool pass;
    std::string detail;  // first violation, when any
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

namespace detail {
inline std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}
}  // namespace detail

/// Checks every axiom of the data structure. Failures are reported, not
/// thrown; each failed axiom carries the first violating index tuple.
inline ValidationReport validate(const LieSuperalgebra& L) {
    ValidationReport rep;
    const std::size_t n = L.dim();

    {  // parity homogeneity of structure constants
        AxiomCheck c{"parity-homogeneity", true, ""};
        for (std::size_t i = 0; i < n && c.pass; ++i)
            for (std::size_t j = i; j < n && c.pass; ++j)
                for (const auto& [k, coef] : L.stored_triangle(i, j))
                    if ((L.parity(i) + L.parity(j)) % 2 != L.parity(k)) {
                        c.pass = false;
                        c.detail = detail::triple_str(i, j, k);
                        break;
                    }
        rep.checks.push_back(c);
    }

    rep.checks.push_back(
        {"super-skew-symmetry", true, "structural: lower triangle derived from upper"});

    {  // super Jacobi identity
        AxiomCheck c{"super-jacobi", true, ""};
        for (std::size_t i = 0; i < n && c.pass; ++i)
            for (std::size_t j = i; j < n && c.pass; ++j)
                for (std::size_t k = j; k < n && c.pass; ++k) {
                    QVec xi = L.basis_vector(i), xj = L.basis_vector(j), xk = L.basis_vector(k);
                    QVec lhs = L.bracket(xi, L.bracket(xj, xk));
                    QVec rhs = L.bracket(L.bracket(xi, xj), xk) +
                               Rational(parity_sign(L.parity(i) * L.parity(j))) *
                                   L.bracket(xj, L.bracket(xi, xk));
                    if (!is_zero(lhs - rhs)) {
                        c.pass = false;
                        c.detail = detail::triple_str(i, j, k);
                    }
                }
        rep.checks.push_back(c);
    }

    {  // supersymmetry of the form + parity block structure
        AxiomCheck c{"form-supersymmetric", true, ""};
        for (std::size_t i = 0; i < n && c.pass; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool ok = (L.parity(i) != L.parity(j))
                              ? L.form()(i, j) == 0
                              : L.form()(i, j) ==
                                    Rational(parity_sign(L.parity(i) * L.parity(j))) *
                                        L.form()(j, i);
                if (!ok) {
                    c.pass = false;
                    c.detail = detail::triple_str(i, j, 0);
                    break;
                }
            }
        rep.checks.push_back(c);
    }

    {  // invariance ([a,b],c) = (a,[b,c])
        AxiomCheck c{"form-invariant", true, ""};
        for (std::size_t i = 0; i < n && c.pass; ++i) {
            QVec xi = L.basis_vector(i);
            for (std::size_t j = 0; j < n && c.pass; ++j) {
                QVec xj = L.basis_vector(j);
                for (std::size_t k = 0; k < n; ++k) {
                    QVec xk = L.basis_vector(k);
                    if (L.pair(L.bracket(xi, xj), xk) != L.pair(xi, L.bracket(xj, xk))) {
                        c.pass = false;
                        c.detail = detail::triple_str(i, j, k);
                        break;
                    }
                }
            }
        }
        rep.checks.push_back(c);
    }

    {  // nondegeneracy
        AxiomCheck c{"form-nondegenerate", rank(L.form()) == n, ""};
        if (!c.pass) c.detail = "rank " + std::to_string(rank(L.form()));
        rep.checks.push_back(c);
    }

    {  // cartan: abelian, acting diagonally on the chosen basis
        AxiomCheck c{"cartan-diagonal-action", true, ""};
        for (auto h : L.cartan()) {
            for (auto h2 : L.cartan())
                if (!L.bracket_basis(h, h2).empty()) {
                    c.pass = false;
                    c.detail = "non-abelian pair (" + std::to_string(h) + "," +
                               std::to_string(h2) + ")";
                }
            for (std::size_t j = 0; j < n && c.pass; ++j)
                for (const auto& [k, coef] : L.bracket_basis(h, j))
                    if (k != j) {
                        c.pass = false;
                        c.detail = "ad(" + std::to_string(h) + ") not diagonal at " +
                                   std::to_string(j);
                        break;
                    }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Dual bases, Killing form, derived algebras
// ---------------------------------------------------------------------------

/// Coordinates of the dual basis: column i of the returned matrix holds x^i
/// with (x^i, x_j) = delta_ij. Each x^i is parity-homogeneous because the
/// form has zero even-odd blocks.
inline QMat dual_basis(const LieSuperalgebra& L) {
    auto inv = inverse(L.form());
    if (!inv) throw DegenerateForm("bilinear form of " + L.name() + " is degenerate");
    return inv->transpose();
}

/// Column i holds the right dual y^i with (x_j, y^i) = delta_ij.
inline QMat right_dual_basis(const LieSuperalgebra& L) {
    auto inv = inverse(L.form());
    if (!inv) throw DegenerateForm("bilinear form of " + L.name() + " is degenerate");
    return *inv;
}

inline QVec matrix_column(const QMat& m, std::size_t c) {
    QVec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

/// Killing form k(x,y) = str(ad x . ad y).
inline QMat killing_form(const LieSuperalgebra& L) {
    const std::size_t n = L.dim();
    std::vector<QMat> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
    QMat k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (ads[i](a, b) != 0 && ads[j](b, a) != 0)
                        s += Rational(parity_sign(L.parity(a))) * ads[i](a, b) * ads[j](b, a);
            k(i, j) = s;
        }
    return k;
}

/// Bases of g^(1) = [g,g] and g^(2) = [g^(1), g^(1)], as canonical spans of
/// all pairwise brackets.
inline std::pair<std::vector<QVec>, std::vector<QVec>> derived_towers(const LieSuperalgebra& L) {
    const std::size_t n = L.dim();
    std::vector<QVec> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const auto& terms = L.stored_triangle(i, j);
            if (terms.empty()) continue;
            QVec v(n, Rational(0));
            for (const auto& [k, c] : terms) v[k] = c;
            products.push_back(std::move(v));
        }
    auto g1 = span_basis(products, n);

    std::vector<QVec> products2;
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (std::size_t j = i; j < g1.size(); ++j) {
            QVec v = L.bracket(g1[i], g1[j]);
            if (!is_zero(v)) products2.push_back(std::move(v));
            if (i != j) {
                QVec w = L.bracket(g1[j], g1[i]);
                if (!is_zero(w)) products2.push_back(std::move(w));
            }
        }
    auto g2 = span_basis(products2, n);
    return {std::move(g1), std::move(g2)};
}

// ---------------------------------------------------------------------------
// Derived algebras from existing ones
// ---------------------------------------------------------------------------

/// Restriction of the algebra to a basis subset (which must be closed under
/// the bracket). Cartan indices outside the subset are dropped.
inline LieSuperalgebra subalgebra(const LieSuperalgebra& L, const std::vector<std::size_t>& keep,
                                  const std::string& name) {
    std::vector<std::size_t> where(L.dim(), SIZE_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) where[keep[i]] = i;

    std::vector<int> parity;
    std::vector<std::string> labels;
    for (auto k : keep) {
        parity.push_back(L.parity(k));
        labels.push_back(L.labels()[k]);
    }
    std::vector<std::size_t> cartan;
    for (auto c : L.cartan())
        if (where[c] != SIZE_MAX) cartan.push_back(where[c]);
    QMat form(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) form(i, j) = L.form()(keep[i], keep[j]);

    LieSuperalgebra sub(name, parity, labels, cartan, form);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i; j < keep.size(); ++j)
            for (const auto& [k, c] : L.stored_triangle(keep[i], keep[j])) {
                if (where[k] == SIZE_MAX)
                    throw InvalidInput("subset is not closed under the bracket");
                sub.set_bracket(i, j, where[k], c);
            }
    return sub;
}

inline LieSuperalgebra direct_sum(const LieSuperalgebra& A, const LieSuperalgebra& B) {
    std::vector<int> parity = A.parities();
    parity.insert(parity.end(), B.parities().begin(), B.parities().end());
    std::vector<std::string> labels;
    for (const auto& l : A.labels()) labels.push_back("L." + l);
    for (const auto& l : B.labels()) labels.push_back("R." + l);
    std::vector<std::size_t> cartan = A.cartan();
    for (auto c : B.cartan()) cartan.push_back(c + A.dim());
    QMat form(A.dim() + B.dim(), A.dim() + B.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) form(i, j) = A.form()(i, j);
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) form(A.dim() + i, A.dim() + j) = B.form()(i, j);

    LieSuperalgebra sum(A.name() + "+" + B.name(), parity, labels, cartan, form);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i; j < A.dim(); ++j)
            for (const auto& [k, c] : A.stored_triangle(i, j)) sum.set_bracket(i, j, k, c);
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = i; j < B.dim(); ++j)
            for (const auto& [k, c] : B.stored_triangle(i, j))
                sum.set_bracket(A.dim() + i, A.dim() + j, A.dim() + k, c);
    return sum;
}

/// Same algebra with the invariant form rescaled by c != 0.
inline LieSuperalgebra with_scaled_form(const LieSuperalgebra& L, const Rational& c) {
    if (c == 0) throw InvalidInput("form scale must be nonzero");
    LieSuperalgebra out(L.name(), L.parities(), L.labels(), L.cartan(), L.form() * c);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i; j < L.dim(); ++j)
            for (const auto& [k, coef] : L.stored_triangle(i, j)) out.set_bracket(i, j, k, coef);
    return out;
}

// ---------------------------------------------------------------------------
// Serialization (canonical structured text; consumed by the CLI and fixtures)
// ---------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json to_json(const LieSuperalgebra& L) {
    Json j;
    j["format"] = "qla-algebra-v1";
    j["name"] = L.name();
    j["dim"] = L.dim();
    j["labels"] = L.labels();
    j["parity"] = L.parities();
    j["cartan"] = L.cartan();
    Json triples = Json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t jdx = i; jdx < L.dim(); ++jdx) {
            auto terms = L.stored_triangle(i, jdx);
            std::sort(terms.begin(), terms.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [k, c] : terms)
                triples.push_back(Json::array({i, jdx, k, to_string(c)}));
        }
    j["brackets"] = triples;
    Json form = Json::array();
    for (std::size_t r = 0; r < L.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < L.dim(); ++c) row.push_back(to_string(L.form()(r, c)));
        form.push_back(row);
    }
    j["form"] = form;
    return j;
}

inline LieSuperalgebra algebra_from_json(const Json& j) {
    if (!j.contains("format") || j["format"] != "qla-algebra-v1")
        throw InvalidInput("unknown algebra serialization format");
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<int> parity = j.at("parity").get<std::vector<int>>();
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::size_t> cartan = j.at("cartan").get<std::vector<std::size_t>>();
    if (parity.size() != dim || labels.size() != dim)
        throw InvalidInput("algebra json: inconsistent sizes");
    QMat form(dim, dim);
    const auto& fj = j.at("form");
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            form(r, c) = parse_rational(fj.at(r).at(c).get<std::string>());
    LieSuperalgebra L(j.at("name").get<std::string>(), parity, labels, cartan, form);
    for (const auto& t : j.at("brackets")) {
        std::size_t i = t.at(0).get<std::size_t>();
        std::size_t jj = t.at(1).get<std::size_t>();
        std::size_t k = t.at(2).get<std::size_t>();
        if (i > jj) throw InvalidInput("algebra json: triples must satisfy i <= j");
        L.set_bracket(i, jj, k, parse_rational(t.at(3).get<std::string>()));
    }
    return L;
}

}  // namespace qla
