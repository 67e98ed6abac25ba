#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "hopfchar/errors.hpp"

namespace hopfchar {

/// Exact rational scalar. All Hopf-algebraic structure constants live here.
using Rat = mpq_class;

inline Rat rat_from_long(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_to_text(const Rat& q) { return q.get_str(); }

/// Parses "p", "p/q" or "-p/q". Throws parse_error on anything else.
inline Rat rat_from_text(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw parse_error("malformed rational '" + text + "'");
        }
    }
    if (!digits) throw parse_error("malformed rational '" + text + "'");
    std::string cleaned = text[0] == '+' ? text.substr(1) : text;
    Rat q(cleaned);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re;
    Rat im;

    CRat() : re(0), im(0) {}
    CRat(long n) : re(n), im(0) {}
    CRat(Rat r) : re(std::move(r)), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {Rat(a.re + b.re), Rat(a.im + b.im)}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {Rat(a.re - b.re), Rat(a.im - b.im)}; }
    friend CRat operator-(const CRat& a) { return {Rat(-a.re), Rat(-a.im)}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
    }
    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) { *this = *this * o; return *this; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    // |a|^2, exact
    Rat norm() const { return Rat(re * re + im * im); }

    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.norm();
        if (n == 0) throw domain_error("complex division by zero");
        return {Rat((a.re * b.re + a.im * b.im) / n), Rat((a.im * b.re - a.re * b.im) / n)};
    }
};

inline Rat coeff_div(const Rat& a, const Rat& b) {
    if (b == 0) throw domain_error("rational division by zero");
    return Rat(a / b);
}
inline CRat coeff_div(const CRat& a, const CRat& b) { return a / b; }

/// "a/b", "c/d*i" or "a/b+c/d*i" (minus folded into the component sign).
inline std::string crat_to_text(const CRat& z) {
    if (z.im == 0) return rat_to_text(z.re);
    std::string im_part = rat_to_text(z.im) + "*i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return rat_to_text(z.re) + "+" + im_part;
    return rat_to_text(z.re) + im_part; // im's own '-' acts as separator
}

inline CRat crat_from_text(const std::string& text) {
    if (text.empty()) throw parse_error("empty complex rational");
    std::string s = text;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string body = s.substr(0, s.size() - 2);
        // the imaginary term starts at the last sign that is not leading
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') { split = i; break; }
        }
        if (split == std::string::npos) return CRat(Rat(0), rat_from_text(body));
        std::string re_part = body.substr(0, split);
        std::string im_part = body[split] == '+' ? body.substr(split + 1) : body.substr(split);
        return CRat(rat_from_text(re_part), rat_from_text(im_part));
    }
    return CRat(rat_from_text(s));
}

} // namespace hopfchar
