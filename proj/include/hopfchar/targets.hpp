#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "hopfchar/errors.hpp"
#include "hopfchar/laurent.hpp"
#include "hopfchar/rational.hpp"

namespace hopfchar {

// A target algebra policy provides the commutative unital ring a functional
// maps into: zero/one/add/negate/mul/from_rational plus the equality notion
// (exact, or tolerance-based for floating targets) and text round-trips.

namespace detail {
inline std::string double_to_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
inline double double_from_text(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw parse_error("malformed float '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed float '" + s + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("float out of range '" + s + "'");
    }
}
} // namespace detail

struct RationalAlgebra {
    using Value = Rat;
    static constexpr bool exact = true;

    Value zero() const { return Rat(0); }
    Value one() const { return Rat(1); }
    Value add(const Value& a, const Value& b) const { return Rat(a + b); }
    Value sub(const Value& a, const Value& b) const { return Rat(a - b); }
    Value negate(const Value& a) const { return Rat(-a); }
    Value mul(const Value& a, const Value& b) const { return Rat(a * b); }
    Value from_rational(const Rat& q) const { return q; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    bool is_zero(const Value& a) const { return a == 0; }
    double magnitude(const Value& a) const { return std::fabs(rat_to_double(a)); }
    std::string to_text(const Value& a) const { return rat_to_text(a); }
    Value from_text(const std::string& s) const { return rat_from_text(s); }
    bool compatible(const RationalAlgebra&) const { return true; }
    std::string describe() const { return "rational"; }
};

struct FloatAlgebra {
    using Value = double;
    static constexpr bool exact = false;
    double tol = 1e-9;

    Value zero() const { return 0.0; }
    Value one() const { return 1.0; }
    Value add(Value a, Value b) const { return a + b; }
    Value sub(Value a, Value b) const { return a - b; }
    Value negate(Value a) const { return -a; }
    Value mul(Value a, Value b) const { return a * b; }
    Value from_rational(const Rat& q) const { return rat_to_double(q); }
    bool equal(Value a, Value b) const { return std::fabs(a - b) <= tol; }
    bool is_zero(Value a) const { return a == 0.0; }
    double magnitude(Value a) const { return std::fabs(a); }
    std::string to_text(Value a) const { return detail::double_to_text(a); }
    Value from_text(const std::string& s) const { return detail::double_from_text(s); }
    bool compatible(const FloatAlgebra& o) const { return tol == o.tol; }
    std::string describe() const { return "float"; }
};

struct ComplexRationalAlgebra {
    using Value = CRat;
    static constexpr bool exact = true;

    Value zero() const { return CRat(); }
    Value one() const { return CRat(1); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value negate(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value from_rational(const Rat& q) const { return CRat(q); }
    Value from_complex(const CRat& z) const { return z; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    double magnitude(const Value& a) const { return std::sqrt(rat_to_double(a.norm())); }
    std::string to_text(const Value& a) const { return crat_to_text(a); }
    Value from_text(const std::string& s) const { return crat_from_text(s); }
    bool compatible(const ComplexRationalAlgebra&) const { return true; }
    std::string describe() const { return "complex-rational"; }

    // exp(q) is irrational for rational q != 0; only the trivial case stays exact
    Value exp_of(const CRat& z) const {
        if (z.is_zero()) return one();
        throw domain_error("target algebra lacks an exponential (complex-rational, nonzero exponent)");
    }
};

struct ComplexFloatAlgebra {
    using Value = std::complex<double>;
    static constexpr bool exact = false;
    double tol = 1e-9;

    Value zero() const { return {0.0, 0.0}; }
    Value one() const { return {1.0, 0.0}; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value negate(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value from_rational(const Rat& q) const { return {rat_to_double(q), 0.0}; }
    Value from_complex(const CRat& z) const { return {rat_to_double(z.re), rat_to_double(z.im)}; }
    bool equal(const Value& a, const Value& b) const { return std::abs(a - b) <= tol; }
    bool is_zero(const Value& a) const { return a.real() == 0.0 && a.imag() == 0.0; }
    double magnitude(const Value& a) const { return std::abs(a); }
    std::string to_text(const Value& a) const {
        if (a.imag() == 0.0) return detail::double_to_text(a.real());
        std::string im = detail::double_to_text(a.imag()) + "*i";
        if (a.real() == 0.0) return im;
        return detail::double_to_text(a.real()) + (a.imag() > 0 ? "+" : "") + im;
    }
    Value from_text(const std::string& s) const {
        if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
            std::string body = s.substr(0, s.size() - 2);
            std::size_t split = std::string::npos;
            for (std::size_t i = body.size(); i-- > 1;) {
                char c = body[i];
                if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos) return {0.0, detail::double_from_text(body)};
            std::string re_part = body.substr(0, split);
            std::string im_part = body[split] == '+' ? body.substr(split + 1) : body.substr(split);
            return {detail::double_from_text(re_part), detail::double_from_text(im_part)};
        }
        return {detail::double_from_text(s), 0.0};
    }
    bool compatible(const ComplexFloatAlgebra& o) const { return tol == o.tol; }
    std::string describe() const { return "complex-float"; }

    Value exp_of(const CRat& z) const { return std::exp(from_complex(z)); }
};

/// Truncated Laurent algebra: exponents live in [-pole_bound, max_exp].
struct LaurentAlgebra {
    using Value = LaurentSeries;
    static constexpr bool exact = true;
    int pole_bound = 0; // P
    int max_exp = 0;    // M

    LaurentAlgebra() = default;
    LaurentAlgebra(int P, int M) : pole_bound(P), max_exp(M) {
        if (P < 0 || M < 0) throw domain_error("laurent algebra: P and M must be >= 0");
    }

    Value zero() const { return LaurentSeries(); }
    Value one() const { return LaurentSeries::constant(Rat(1)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value negate(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return laurent_mul(a, b, pole_bound, max_exp); }
    Value from_rational(const Rat& q) const { return LaurentSeries::constant(q); }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    bool is_zero(const Value& a) const { return a.is_zero(); }
    std::string to_text(const Value& a) const { return laurent_to_text(a); }
    Value from_text(const std::string& s) const {
        LaurentSeries x = laurent_from_text(s);
        if (!x.is_zero() && (x.min_exp() < -pole_bound || x.max_exp() > max_exp))
            throw parse_error("Laurent value outside configured exponent range [-" +
                              std::to_string(pole_bound) + "," + std::to_string(max_exp) + "]");
        return x;
    }
    bool compatible(const LaurentAlgebra& o) const {
        return pole_bound == o.pole_bound && max_exp == o.max_exp;
    }
    std::string describe() const {
        return "laurent(" + std::to_string(pole_bound) + "," + std::to_string(max_exp) + ")";
    }
};

// Embeds a structure coefficient (rational for forests, complex-rational for
// words) into the target.
template <class Alg>
typename Alg::Value embed_coeff(const Alg& alg, const Rat& c) {
    return alg.from_rational(c);
}
template <class Alg>
typename Alg::Value embed_coeff(const Alg& alg, const CRat& c) {
    return alg.from_complex(c);
}

} // namespace hopfchar
