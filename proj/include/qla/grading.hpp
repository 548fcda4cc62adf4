#pragma once

#include "qla/decompose.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qla {

/// Element of Q/Z, stored as the representative in [0,1).
struct Phase {
    Rational value;

    Phase() : value(0) {}
    explicit Phase(const Rational& v) : value(v) {
        Integer num = numerator(value), den = denominator(value);
        Integer q = num / den;
        if (num < 0 && q * den != num) q -= 1;  // floor division
        value -= Rational(q);
    }
    Phase operator+(const Phase& o) const { return Phase(value + o.value); }
    Phase operator-() const { return Phase(-value); }
    bool operator==(const Phase& o) const { return value == o.value; }
    bool operator!=(const Phase& o) const { return value != o.value; }
    bool operator<(const Phase& o) const { return value < o.value; }
    bool is_zero() const { return value == 0; }
};

/// Rational Cartan element h_s; the associated grading assigns each weight
/// vector the phase of its weight value on h_s.
struct TorusElement {
    QVec coords;  // over the Cartan basis
};

namespace detail_grading {
inline std::string torus_to_string_impl(const QVec& coords) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += to_string(coords[i]);
    }
    return s;
}
}  // namespace detail_grading
using detail_grading::torus_to_string_impl;

struct Grading {
    std::vector<Phase> phase;                            // per basis index
    std::map<Phase, std::vector<std::size_t>> eigenspaces;
    Integer order;       // least common denominator of the phases
    std::string source;  // the torus coordinates this grading came from

    bool trivial() const { return order == 1; }
    long sdim_of(const LieSuperalgebra& L, const Phase& p) const {
        auto it = eigenspaces.find(p);
        if (it == eigenspaces.end()) return 0;
        long s = 0;
        for (auto i : it->second) s += L.parity(i) == 0 ? 1 : -1;
        return s;
    }
};

/// Eigenspace decomposition of the inner automorphism attached to h_s: a
/// basis vector of weight mu gets phase mu(h_s) mod 1; the Cartan gets 0.
inline Grading grading_from_torus(const LieSuperalgebra& L, const TorusElement& h_s) {
    if (h_s.coords.size() != L.cartan().size())
        throw InvalidInput("torus element needs one coordinate per Cartan generator");
    QVec h_full(L.dim(), Rational(0));
    for (std::size_t c = 0; c < L.cartan().size(); ++c) h_full[L.cartan()[c]] = h_s.coords[c];

    Grading g;
    g.phase.resize(L.dim());
    g.order = 1;
    g.source = torus_to_string_impl(h_s.coords);
    for (std::size_t j = 0; j < L.dim(); ++j) {
        QVec img = L.bracket(h_full, L.basis_vector(j));
        Rational mu = img[j];
        img[j] = 0;
        if (!is_zero(img))
            throw NotWeightBasis("basis vector " + std::to_string(j) +
                                 " is not an eigenvector of the torus element");
        Phase p(mu);
        g.phase[j] = p;
        g.eigenspaces[p].push_back(j);
        g.order = int_lcm(g.order, denominator(p.value));
    }
    return g;
}

/// Structural invariants of a grading: bracket and form compatibility.
/// Exhaustive over basis pairs; used by tests and the screen.
inline bool grading_compatible(const LieSuperalgebra& L, const Grading& g,
                               std::string* why = nullptr) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            for (const auto& [k, c] : L.bracket_basis(i, j))
                if (g.phase[k] != g.phase[i] + g.phase[j]) {
                    if (why) *why = "bracket is not phase-additive";
                    return false;
                }
            if (L.form()(i, j) != 0 && g.phase[i] != -g.phase[j]) {
                if (why) *why = "form pairs non-opposite phases";
                return false;
            }
        }
    return true;
}

/// g^0: the fixed-point subalgebra of the grading, with the same Cartan.
inline LieSuperalgebra fixed_point_subalgebra(const LieSuperalgebra& L, const Grading& g) {
    auto it = g.eigenspaces.find(Phase(Rational(0)));
    std::vector<std::size_t> keep = it == g.eigenspaces.end() ? std::vector<std::size_t>{}
                                                              : it->second;
    return subalgebra(L, keep, L.name() + "^0");
}

// ---------------------------------------------------------------------------
// The graded Weyl data: rho per phase, rho_sigma, z(g, sigma)
// ---------------------------------------------------------------------------

struct SigmaWeylData {
    std::map<Phase, Weight> rho_j;  // rho^j for every phase present
    Weight rho_sigma;
    Rational z_value;
    std::map<Phase, long> sdim_j;
    RootDatum rd;  // root datum of the ambient algebra (default positivity)
};

/// rho^0 comes from the triangular decomposition of g^0 (its positive
/// system); rho^j for j != 0 sums over all weights of g^j with no positivity
/// involved. rho_sigma takes the (1-2j)-weighted combination over
/// representatives in [0, 1/2]; z is the phase-weighted superdimension sum.
inline SigmaWeylData sigma_weyl_data(const LieSuperalgebra& L, const Grading& g) {
    SigmaWeylData out;
    out.rd = root_datum_with_positivity(L);
    const std::size_t rank = L.cartan().size();

    for (const auto& [p, idxs] : g.eigenspaces) {
        long s = 0;
        for (auto i : idxs) s += L.parity(i) == 0 ? 1 : -1;
        out.sdim_j[p] = s;
    }

    // rho^j, j != 0: half the sdim-weighted sum over the weights of g^j
    for (const auto& [p, idxs] : g.eigenspaces) {
        if (p.is_zero()) continue;
        Weight rho(rank, Rational(0));
        for (const auto& root : out.rd.roots) {
            if (g.phase[root.space.front()] != p) continue;
            for (std::size_t i = 0; i < rank; ++i)
                rho[i] += Rational(root.sdim, 2) * root.alpha[i];
        }
        out.rho_j[p] = rho;
    }

    // rho^0: the Weyl vector of g^0 through its triangular decomposition
    {
        auto L0 = fixed_point_subalgebra(L, g);
        auto t0 = triangular(L0);
        Weight rho0 = t0.rd.rho.value_or(Weight(rank, Rational(0)));
        if (rho0.size() != rank)
            throw InvalidInput("fixed-point subalgebra lost Cartan directions");
        out.rho_j[Phase(Rational(0))] = rho0;
    }

    out.rho_sigma = Weight(rank, Rational(0));
    for (const auto& [p, rho] : out.rho_j) {
        if (p.value > Rational(1, 2)) continue;
        Rational wgt = Rational(1) - Rational(2) * p.value;
        for (std::size_t i = 0; i < rank; ++i) out.rho_sigma[i] += wgt * rho[i];
    }

    out.z_value = 0;
    for (const auto& [p, s] : out.sdim_j)
        out.z_value += Rational(1, 2) * (p.value * (Rational(1) - p.value) / 2) * Rational(s);

    return out;
}

// ---------------------------------------------------------------------------
// Indecomposability screen
// ---------------------------------------------------------------------------

struct ScreenReport {
    bool passed = false;
    std::string failed_condition;  // empty when passed
    std::optional<Rational> g_value;
};

/// Necessary conditions only: (a) the Casimir spectrum is a single
/// eigenvalue, (b) the form is compatible with the grading. A pass does not
/// decide indecomposability.
inline ScreenReport indecomposability_screen(const LieSuperalgebra& L, const Grading& g) {
    ScreenReport rep;
    try {
        rep.g_value = casimir(L).g_value;
    } catch (const DecomposableAlgebra& e) {
        rep.failed_condition = e.what();
        return rep;
    }
    std::string why;
    if (!grading_compatible(L, g, &why)) {
        rep.failed_condition = why;
        return rep;
    }
    rep.passed = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Seeded random torus sampling (batch sweeps, CLI)
// ---------------------------------------------------------------------------

/// Deterministic splitmix64; identical streams on every platform, so seeded
/// reports are byte-reproducible.
struct DetRng {
    std::uint64_t state;
    explicit DetRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // uniform in [lo, hi]
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// Coordinates drawn with numerators in [-3,3] and denominators in {1,...,6}.
inline TorusElement sample_torus_element(const LieSuperalgebra& L, DetRng& rng) {
    TorusElement t;
    t.coords.resize(L.cartan().size());
    for (auto& c : t.coords) c = Rational(rng.range(-3, 3), rng.range(1, 6));
    return t;
}

inline std::string torus_to_string(const TorusElement& t) {
    return torus_to_string_impl(t.coords);
}

inline TorusElement torus_from_string(const std::string& text, std::size_t expected_rank) {
    TorusElement t;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            t.coords.push_back(parse_rational(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else cur += ch;
    }
    flush();
    if (t.coords.size() != expected_rank)
        throw InvalidInput("torus element needs " + std::to_string(expected_rank) +
                           " coordinates, got " + std::to_string(t.coords.size()));
    return t;
}

}  // namespace qla
