#include "hopfchar/laurent.hpp"

#include "hopfchar/errors.hpp"

namespace hopfchar {

LaurentSeries LaurentSeries::constant(const Rat& c) { return power(0, c); }

LaurentSeries LaurentSeries::power(int exponent, const Rat& c) {
    LaurentSeries s;
    s.add_term(exponent, c);
    return s;
}

void LaurentSeries::add_term(int exponent, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rat LaurentSeries::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

int LaurentSeries::min_exp() const {
    if (coeffs_.empty()) throw domain_error("min_exp of the zero series");
    return coeffs_.begin()->first;
}

int LaurentSeries::max_exp() const {
    if (coeffs_.empty()) throw domain_error("max_exp of the zero series");
    return coeffs_.rbegin()->first;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, Rat(-c));
    return r;
}

LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r;
    for (const auto& [e, c] : a.coeffs_) r.add_term(e, Rat(-c));
    return r;
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b, int pole_bound, int max_exp) {
    LaurentSeries r;
    if (a.is_zero() || b.is_zero()) return r;
    // rationals have no zero divisors, so the bottom coefficient never cancels
    if (a.min_exp() + b.min_exp() < -pole_bound)
        throw domain_error("laurent_mul: pole order " + std::to_string(-(a.min_exp() + b.min_exp())) +
                           " exceeds bound " + std::to_string(pole_bound));
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) {
            int e = ea + eb;
            if (e > max_exp) continue;
            r.add_term(e, Rat(ca * cb));
        }
    return r;
}

std::pair<LaurentSeries, LaurentSeries> ms_split(const LaurentSeries& x) {
    LaurentSeries pole, regular;
    for (const auto& [e, c] : x.coeffs()) {
        if (e < 0)
            pole.add_term(e, c);
        else
            regular.add_term(e, c);
    }
    return {pole, regular};
}

std::string laurent_to_text(const LaurentSeries& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : x.coeffs()) {
        if (!first) out += "+";
        first = false;
        if (e == 0) {
            out += rat_to_text(c);
        } else {
            out += rat_to_text(c) + "*z^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

// one term: "c", "c*z^k", "z^k" or "-z^k"
void parse_laurent_term(const std::string& term, LaurentSeries& out) {
    if (term.empty()) throw parse_error("empty term in Laurent series");
    std::size_t zpos = term.find("z^");
    if (zpos == std::string::npos) {
        out.add_term(0, rat_from_text(term));
        return;
    }
    std::string coeff_part;
    if (zpos == 0)
        coeff_part = "1";
    else if (zpos == 1 && term[0] == '-')
        coeff_part = "-1";
    else if (term[zpos - 1] == '*')
        coeff_part = term.substr(0, zpos - 1);
    else
        throw parse_error("malformed Laurent term '" + term + "'");
    std::string exp_part = term.substr(zpos + 2);
    if (exp_part.empty()) throw parse_error("missing exponent in '" + term + "'");
    std::size_t i = exp_part[0] == '-' ? 1 : 0;
    if (i == exp_part.size()) throw parse_error("missing exponent in '" + term + "'");
    for (; i < exp_part.size(); ++i)
        if (exp_part[i] < '0' || exp_part[i] > '9')
            throw parse_error("malformed exponent in '" + term + "'");
    out.add_term(std::atoi(exp_part.c_str()), rat_from_text(coeff_part));
}

} // namespace

LaurentSeries laurent_from_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw parse_error("empty Laurent series text");
    if (s == "0") return LaurentSeries();
    LaurentSeries out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+') {
            parse_laurent_term(s.substr(start, i - start), out);
            start = i + 1;
        }
    }
    return out;
}

} // namespace hopfchar
