#pragma once

#include "qla/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace qla {

using QVec = std::vector<Rational>;

/// Dense matrix over Q, row-major. Small sizes only (algebras here stay
/// under dimension ~100), so no sparsity games.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    QMat transpose() const {
        QMat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    QMat operator+(const QMat& o) const {
        QMat s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
        return s;
    }
    QMat operator-(const QMat& o) const {
        QMat s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
        return s;
    }
    QMat operator*(const QMat& o) const {
        QMat p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(r, k);
                if (a == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    const Rational& b = o(k, c);
                    if (b != 0) p(r, c) += a * b;
                }
            }
        return p;
    }
    QMat operator*(const Rational& s) const {
        QMat m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
        return m;
    }

    QVec apply(const QVec& v) const {
        QVec out(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Rational trace() const {
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    QMat power(std::size_t e) const {
        QMat acc = identity(rows_), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = (e >>= 1) ? base * base : base;
        }
        return acc;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline QVec operator*(const Rational& s, const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}
inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Gaussian elimination
// ---------------------------------------------------------------------------

struct Echelon {
    QMat rref;                    // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

inline Echelon reduced_row_echelon(QMat m) {
    Echelon e{QMat(), {}, };
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(piv, c));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(m);
    return e;
}

inline std::size_t rank(const QMat& m) { return reduced_row_echelon(m).rank(); }

/// Basis of ker M. Returned vectors are exact; count = cols - rank.
inline std::vector<QVec> kernel(const QMat& m) {
    Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves M x = b; nullopt when inconsistent. For underdetermined systems
/// returns the solution with free coordinates set to zero.
inline std::optional<QVec> solve(const QMat& m, const QVec& b) {
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] == m.cols()) return std::nullopt;
    QVec x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, m.cols());
    return x;
}

inline std::optional<QMat> inverse(const QMat& m) {
    const std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    if (e.rank() != n || (n > 0 && e.pivots.back() >= n)) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (e.pivots[r] != r) return std::nullopt;
    QMat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

/// Row space basis of the stacked vectors; each returned vector is a row of
/// the RREF, so the basis is canonical for a given input span.
inline std::vector<QVec> span_basis(const std::vector<QVec>& vectors, std::size_t dim) {
    QMat m(vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
    Echelon e = reduced_row_echelon(std::move(m));
    std::vector<QVec> basis;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        QVec v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = e.rref(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational spectra
// ---------------------------------------------------------------------------

/// Coefficients c[0..n] of the monic characteristic polynomial
/// p(t) = c[n] t^n + ... + c[0], computed by the Faddeev-LeVerrier
/// recurrence (all divisions are by integers, hence exact over Q).
inline std::vector<Rational> char_poly(const QMat& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidInput("char_poly requires a square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMat acc = QMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational ck = -acc.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return c;
}

inline Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline QMat poly_eval(const std::vector<Rational>& p, const QMat& m) {
    QMat acc(m.rows(), m.cols());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += p[i];
    }
    return acc;
}

namespace detail {

inline std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    if (d.empty()) d.push_back(Rational(0));
    return d;
}

inline void poly_trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

inline std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& x : a) x /= a.back();
    return a;
}

/// Exact quotient of p by (t - root); requires the division to be exact.
inline std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    if (carry != 0) throw InvalidInput("deflate: not a root");
    return q;
}

/// Divisors of |n|, or nullopt when a factor exceeds the trial bound.
inline std::optional<std::vector<Integer>> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::map<Integer, int> fac;
    for (Integer p = 2; p * p <= n && p < 2000000; p == 2 ? p = 3 : p += 2)
        while (n % p == 0) {
            ++fac[p];
            n /= p;
        }
    if (n > 1) {
        if (n >= Integer(1) << 62) return std::nullopt;  // unfactored big cofactor
        ++fac[n];
    }
    std::vector<Integer> divs{1};
    for (auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

/// All rational roots of p with multiplicities, as (root, multiplicity).
/// Throws SpectrumNotRational when divisor enumeration cannot be completed.
inline std::vector<std::pair<Rational, std::size_t>> rational_roots(std::vector<Rational> p) {
    detail::poly_trim(p);
    if (p.size() <= 1) return {};

    std::vector<std::pair<Rational, std::size_t>> roots;
    // strip t^k
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(Rational(0), low);
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() <= 1) return roots;

    // square-free part keeps the candidate set small
    auto sf = p;
    if (p.size() > 2) {
        auto g = detail::poly_gcd(p, detail::poly_derivative(p));
        if (g.size() > 1) {
            // exact polynomial division p / g
            std::vector<Rational> q(p.size() - g.size() + 1, Rational(0));
            auto rem = p;
            for (std::size_t i = q.size(); i-- > 0;) {
                q[i] = rem[i + g.size() - 1] / g.back();
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < g.size(); ++j) rem[i + j] -= q[i] * g[j];
            }
            sf = std::move(q);
            detail::poly_trim(sf);
        }
    }

    // integerize: candidates num/den with num | a0, den | lead
    Integer scale = 1;
    for (const auto& c : sf) scale = int_lcm(scale, denominator(c));
    std::vector<Integer> ip(sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i)
        ip[i] = numerator(sf[i] * Rational(scale));
    Integer content = 0;
    for (const auto& c : ip) content = int_gcd(content, c);
    if (content > 1)
        for (auto& c : ip) c /= content;

    auto nds = detail::divisors(ip.front());
    auto dds = detail::divisors(ip.back());
    if (!nds || !dds)
        throw SpectrumNotRational("constant/leading coefficient too large to enumerate divisors");

    std::vector<Rational> found;
    for (const auto& den : *dds)
        for (const auto& num : *nds)
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (poly_eval(sf, cand) == 0 &&
                    std::find(found.begin(), found.end(), cand) == found.end())
                    found.push_back(cand);
            }

    for (const auto& r : found) {
        std::size_t mult = 0;
        while (p.size() > 1 && poly_eval(p, r) == 0) {
            p = detail::deflate(p, r);
            ++mult;
        }
        roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

struct EigenSpace {
    Rational value;
    std::vector<QVec> basis;  // generalized eigenspace
};

namespace detail {

/// Connected components of the support graph of M (i ~ j when M_ij or M_ji
/// is nonzero). The spectrum of M is the union over components, which keeps
/// the characteristic-polynomial work on small blocks.
inline std::vector<std::vector<std::size_t>> support_components(const QMat& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{s}, members;
        comp[s] = out.size();
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (comp[w] != SIZE_MAX) continue;
                if (m(v, w) != 0 || m(w, v) != 0) {
                    comp[w] = out.size();
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace detail

/// Splits Q^n into the generalized eigenspaces of M, provided the whole
/// spectrum is rational; otherwise throws SpectrumNotRational. Eigenvalues
/// are found as rational roots of the characteristic polynomial (computed
/// blockwise over the support components of M, whose product is char_poly(M));
/// the generalized eigenspace of an eigenvalue x with algebraic multiplicity
/// k is ker (M - x I)^k, which equals ker (M - x I)^n.
inline std::vector<EigenSpace> rational_spectrum_split(const QMat& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidInput("rational_spectrum_split requires a square matrix");
    std::map<Rational, std::vector<QVec>> spaces;

    for (const auto& members : detail::support_components(m)) {
        const std::size_t k = members.size();
        QMat block(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) block(r, c) = m(members[r], members[c]);

        auto roots = rational_roots(char_poly(block));
        std::size_t total_mult = 0;
        for (const auto& [val, mult] : roots) total_mult += mult;
        if (total_mult != k)
            throw SpectrumNotRational("characteristic polynomial has irrational roots");

        std::size_t covered = 0;
        for (const auto& [val, mult] : roots) {
            QMat shifted = block;
            for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= val;
            auto ker = kernel(shifted.power(mult));
            if (ker.size() != mult)
                throw SpectrumNotRational("generalized eigenspaces do not fill the space");
            covered += ker.size();
            for (const auto& kv : ker) {
                QVec lifted(n, Rational(0));
                for (std::size_t i = 0; i < k; ++i) lifted[members[i]] = kv[i];
                spaces[val].push_back(std::move(lifted));
            }
        }
        if (covered != k)
            throw SpectrumNotRational("rational roots do not account for the full dimension");
    }

    std::vector<EigenSpace> out;
    for (auto& [val, basis] : spaces) out.push_back({val, std::move(basis)});
    return out;
}

}  // namespace qla
