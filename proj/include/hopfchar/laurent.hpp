#pragma once

#include <map>
#include <string>
#include <utility>

#include "hopfchar/rational.hpp"

namespace hopfchar {

/// Truncated Laurent series with exact rational coefficients: the computable
/// stand-in for germs of meromorphic functions at 0. A series is a sparse
/// exponent -> coefficient table; the pole bound P and truncation M are
/// configuration of the surrounding algebra, not of the value.
class LaurentSeries {
public:
    LaurentSeries() = default;
    static LaurentSeries constant(const Rat& c);
    static LaurentSeries power(int exponent, const Rat& c = Rat(1)); // c * z^exponent

    void add_term(int exponent, const Rat& c);
    Rat coefficient(int exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const; // throws on the zero series
    int max_exp() const;
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
    std::map<int, Rat> coeffs_;
};

/// Coefficient convolution, discarding exponents above max_exp and signalling
/// when a nonzero coefficient would fall below -pole_bound.
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b, int pole_bound, int max_exp);

/// Minimal subtraction: (strictly negative exponents, the rest). The two
/// parts always reconstruct the input.
std::pair<LaurentSeries, LaurentSeries> ms_split(const LaurentSeries& x);

std::string laurent_to_text(const LaurentSeries& x);
LaurentSeries laurent_from_text(const std::string& text);

} // namespace hopfchar
