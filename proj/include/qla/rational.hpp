#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qla {

using Integer = boost::multiprecision::cpp_int;

/// Exact element of Q. Always stored reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error hierarchy. Every failure mode of the library is one of these; they
// carry a short machine-readable tag used by the CLI for exit codes.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& what)
        : std::runtime_error(what), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

struct SpectrumNotRational : Error {
    explicit SpectrumNotRational(const std::string& w) : Error("SpectrumNotRational", w) {}
};
struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& w) : Error("DegenerateForm", w) {}
};
struct NotDiagonalizable : Error {
    explicit NotDiagonalizable(const std::string& w) : Error("NotDiagonalizable", w) {}
};
struct DecomposableAlgebra : Error {
    explicit DecomposableAlgebra(const std::string& w) : Error("DecomposableAlgebra", w) {}
};
struct NotWeightBasis : Error {
    explicit NotWeightBasis(const std::string& w) : Error("NotWeightBasis", w) {}
};
struct NotCompletelyReducible : Error {
    explicit NotCompletelyReducible(const std::string& w) : Error("NotCompletelyReducible", w) {}
};
struct IsotropicSeedInvalid : Error {
    explicit IsotropicSeedInvalid(const std::string& w) : Error("IsotropicSeedInvalid", w) {}
};
struct SingularCartanSystem : Error {
    explicit SingularCartanSystem(const std::string& w) : Error("SingularCartanSystem", w) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& w) : Error("InvalidInput", w) {}
};

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

inline std::string to_string(const Rational& r) { return r.str(); }

/// Rational from a possibly unnormalized numerator/denominator pair.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw InvalidInput("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Parses "p", "-p/q" or "p/q". Whitespace around tokens is tolerated.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInput("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse rational '" + text + "'");
    }
}

inline Integer int_gcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }
inline Integer int_lcm(Integer a, Integer b) { return boost::multiprecision::lcm(a, b); }

/// Exact square root of a nonnegative integer, if it is a perfect square.
inline std::optional<Integer> exact_isqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact square root in Q, if the argument is a square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_isqrt(numerator(q));
    auto d = exact_isqrt(denominator(q));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

inline int parity_sign(int p) { return (p % 2 == 0) ? 1 : -1; }

}  // namespace qla
