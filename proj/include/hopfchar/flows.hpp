#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "hopfchar/functional.hpp"

namespace hopfchar {

/// Polynomial in t with coefficients in an exact target algebra. Just enough
/// arithmetic for piecewise-exact integration of the evolution equations.
template <class Alg>
struct AlgPoly {
    using Value = typename Alg::Value;
    std::vector<Value> coeffs; // ascending powers of t

    static AlgPoly constant(Value v) { return {{std::move(v)}}; }

    Value eval(const Alg& alg, const Rat& t) const {
        Value acc = alg.zero();
        Value tv = alg.from_rational(t);
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = alg.add(alg.mul(acc, tv), coeffs[k]);
        return acc;
    }

    AlgPoly plus(const Alg& alg, const AlgPoly& o) const {
        AlgPoly r;
        r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), alg.zero());
        for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] = alg.add(r.coeffs[k], coeffs[k]);
        for (std::size_t k = 0; k < o.coeffs.size(); ++k) r.coeffs[k] = alg.add(r.coeffs[k], o.coeffs[k]);
        return r;
    }

    AlgPoly times(const Alg& alg, const AlgPoly& o) const {
        AlgPoly r;
        if (coeffs.empty() || o.coeffs.empty()) return r;
        r.coeffs.resize(coeffs.size() + o.coeffs.size() - 1, alg.zero());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs.size(); ++j)
                r.coeffs[i + j] = alg.add(r.coeffs[i + j], alg.mul(coeffs[i], o.coeffs[j]));
        return r;
    }

    AlgPoly scaled(const Alg& alg, const Value& s) const {
        AlgPoly r = *this;
        for (auto& c : r.coeffs) c = alg.mul(s, c);
        return r;
    }

    // term-by-term integral with zero constant term
    AlgPoly antiderivative(const Alg& alg) const {
        AlgPoly r;
        r.coeffs.resize(coeffs.size() + 1, alg.zero());
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            r.coeffs[k + 1] = alg.mul(alg.from_rational(Rat(1, (long)k + 1)), coeffs[k]);
        return r;
    }
};

/// Piecewise-polynomial curve [0,1] -> infinitesimal characters, the input of
/// the evolution equation and of time-ordered exponentials. The coefficient
/// functionals share one basis, target and truncation; pieces may disagree at
/// breakpoints (integration is piecewise).
template <class Basis, class Alg>
class PolyCurve {
    static_assert(Alg::exact, "curves need an exact target algebra for closed-form integration");

public:
    using Fn = Functional<Basis, Alg>;

    PolyCurve(std::vector<Rat> breakpoints, std::vector<std::vector<Fn>> pieces)
        : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breakpoints_.size() < 2) throw domain_error("curve: needs at least two breakpoints");
        if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
            throw domain_error("curve: breakpoints must run from 0 to 1");
        for (std::size_t i = 1; i < breakpoints_.size(); ++i)
            if (!(breakpoints_[i - 1] < breakpoints_[i]))
                throw domain_error("curve: breakpoints must be strictly increasing");
        if (pieces_.size() != breakpoints_.size() - 1)
            throw domain_error("curve: piece count does not match the breakpoints");
        const Fn* first = nullptr;
        for (const auto& piece : pieces_)
            for (const Fn& f : piece) {
                if (f.kind() != FunctionalKind::infinitesimal)
                    throw domain_error("curve: coefficient functionals must be infinitesimal");
                if (!first) {
                    first = &f;
                } else {
                    detail::require_compatible(*first, f, "curve");
                }
            }
        if (!first) throw domain_error("curve: needs at least one coefficient functional");
        basis_ = first->basis_ptr();
        alg_ = first->alg();
        truncation_ = first->truncation();
    }

    const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
    const Basis& basis() const { return *basis_; }
    const Alg& alg() const { return alg_; }
    int truncation() const { return truncation_; }
    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const std::vector<std::vector<Fn>>& pieces() const { return pieces_; }

    /// Value polynomial of the curve on one monomial, within one piece.
    AlgPoly<Alg> value_poly(std::size_t piece, const typename Basis::Monomial& m) const {
        AlgPoly<Alg> p;
        for (const Fn& coeff : pieces_[piece]) p.coeffs.push_back(coeff.value(m));
        return p;
    }

private:
    std::shared_ptr<const Basis> basis_;
    Alg alg_;
    int truncation_ = 0;
    std::vector<Rat> breakpoints_;
    std::vector<std::vector<Fn>> pieces_;
};

namespace detail {

struct Segment {
    std::size_t piece;
    Rat lo, hi;
};

inline std::vector<Segment> clip_segments(const std::vector<Rat>& breakpoints, const Rat& lo,
                                          const Rat& hi) {
    if (lo > hi) throw domain_error("flow: interval with lo > hi");
    if (lo < 0 || hi > 1) throw domain_error("flow: interval outside the curve domain [0,1]");
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Rat a = std::max(breakpoints[i], lo);
        Rat b = std::min(breakpoints[i + 1], hi);
        if (a < b) out.push_back({i, a, b});
    }
    return out;
}

} // namespace detail

/// Solves eta'(t) = eta(t) * a(t), eta(lo) = counit-unit, by exact degreewise
/// integration, and returns eta(hi). The degree-n component of the right-hand
/// side only involves eta-values of lower degree, so each monomial's value is
/// a polynomial in t obtained in one integration pass per piece.
template <class Basis, class Alg>
Functional<Basis, Alg> evolve(const PolyCurve<Basis, Alg>& curve, const Rat& lo, const Rat& hi) {
    const Alg& alg = curve.alg();
    const Basis& basis = curve.basis();
    int N = curve.truncation();
    using Monomial = typename Basis::Monomial;
    using Value = typename Alg::Value;

    std::map<Monomial, Value> current;
    detail::for_each_monomial(basis, N, [&](const Monomial& m) {
        current.emplace(m, Basis::degree(m) == 0 ? alg.one() : alg.zero());
    });

    for (const auto& seg : detail::clip_segments(curve.breakpoints(), lo, hi)) {
        std::map<Monomial, AlgPoly<Alg>> eta;
        for (int n = 0; n <= N; ++n)
            for (const Monomial& m : basis.monomials(n)) {
                if (n == 0) {
                    eta.emplace(m, AlgPoly<Alg>::constant(current.at(m)));
                    continue;
                }
                AlgPoly<Alg> integrand;
                for (const auto& [pair, c] : basis.coproduct(m).terms()) {
                    if (Basis::degree(pair.second) == 0) continue; // a(t) kills the unit
                    auto contrib = eta.at(pair.first)
                                       .times(alg, curve.value_poly(seg.piece, pair.second))
                                       .scaled(alg, embed_coeff(alg, c));
                    integrand = integrand.plus(alg, contrib);
                }
                AlgPoly<Alg> F = integrand.antiderivative(alg);
                Value offset = alg.sub(current.at(m), F.eval(alg, seg.lo));
                eta.emplace(m, F.plus(alg, AlgPoly<Alg>::constant(offset)));
            }
        for (auto& [m, v] : current) v = eta.at(m).eval(alg, seg.hi);
    }

    typename Functional<Basis, Alg>::Table table(std::make_move_iterator(current.begin()),
                                                 std::make_move_iterator(current.end()));
    return Functional<Basis, Alg>(curve.basis_ptr(), alg, N, FunctionalKind::character,
                                  std::move(table));
}

template <class Basis, class Alg>
Functional<Basis, Alg> evolve(const PolyCurve<Basis, Alg>& curve, const Rat& t_end) {
    return evolve(curve, Rat(0), t_end);
}

/// Time-ordered exponential: unit plus the sum over n of the iterated
/// integrals of a(s_1)...a(s_n) over the ordered simplex in [lo,hi], each
/// computed by the recursion I_n(t) = integral of I_{n-1}(s) * a(s). Only
/// n <= N contributes because every a factor raises the degree.
template <class Basis, class Alg>
Functional<Basis, Alg> time_ordered_exp(const PolyCurve<Basis, Alg>& curve, const Rat& lo,
                                        const Rat& hi) {
    const Alg& alg = curve.alg();
    const Basis& basis = curve.basis();
    int N = curve.truncation();
    using Monomial = typename Basis::Monomial;
    using Value = typename Alg::Value;

    auto segments = detail::clip_segments(curve.breakpoints(), lo, hi);

    std::map<Monomial, Value> total;
    detail::for_each_monomial(basis, N, [&](const Monomial& m) {
        total.emplace(m, Basis::degree(m) == 0 ? alg.one() : alg.zero());
    });

    // I_0 is constant: the convolution unit on every segment
    std::vector<std::map<Monomial, AlgPoly<Alg>>> prev(segments.size());
    for (std::size_t s = 0; s < segments.size(); ++s)
        detail::for_each_monomial(basis, N, [&](const Monomial& m) {
            prev[s].emplace(m, AlgPoly<Alg>::constant(Basis::degree(m) == 0 ? alg.one() : alg.zero()));
        });

    for (int n = 1; n <= N && !segments.empty(); ++n) {
        std::vector<std::map<Monomial, AlgPoly<Alg>>> next(segments.size());
        std::map<Monomial, Value> start; // I_n at the running left endpoint
        detail::for_each_monomial(basis, N, [&](const Monomial& m) { start.emplace(m, alg.zero()); });
        for (std::size_t s = 0; s < segments.size(); ++s) {
            const auto& seg = segments[s];
            detail::for_each_monomial(basis, N, [&](const Monomial& m) {
                AlgPoly<Alg> integrand;
                for (const auto& [pair, c] : basis.coproduct(m).terms()) {
                    if (Basis::degree(pair.second) == 0) continue;
                    auto contrib = prev[s].at(pair.first)
                                       .times(alg, curve.value_poly(seg.piece, pair.second))
                                       .scaled(alg, embed_coeff(alg, c));
                    integrand = integrand.plus(alg, contrib);
                }
                AlgPoly<Alg> F = integrand.antiderivative(alg);
                Value offset = alg.sub(start.at(m), F.eval(alg, seg.lo));
                next[s].emplace(m, F.plus(alg, AlgPoly<Alg>::constant(offset)));
            });
            for (auto& [m, v] : start) v = next[s].at(m).eval(alg, seg.hi);
        }
        for (auto& [m, v] : total) v = alg.add(v, start.at(m));
        prev = std::move(next);
    }

    typename Functional<Basis, Alg>::Table table(std::make_move_iterator(total.begin()),
                                                 std::make_move_iterator(total.end()));
    return Functional<Basis, Alg>(curve.basis_ptr(), alg, N, FunctionalKind::character,
                                  std::move(table));
}

} // namespace hopfchar
