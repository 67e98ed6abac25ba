#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/combo.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/targets.hpp"

namespace hopfchar {

enum class FunctionalKind { general, character, infinitesimal };

inline std::string kind_name(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::general: return "general";
        case FunctionalKind::character: return "character";
        case FunctionalKind::infinitesimal: return "infinitesimal";
    }
    return "?";
}

inline FunctionalKind kind_from_name(const std::string& s) {
    if (s == "general") return FunctionalKind::general;
    if (s == "character") return FunctionalKind::character;
    if (s == "infinitesimal") return FunctionalKind::infinitesimal;
    throw parse_error("unknown functional kind '" + s + "'");
}

struct CheckResult {
    bool ok = true;
    std::string detail; // first counterexample / certificate when !ok
    explicit operator bool() const { return ok; }
};

inline Rat rat_factorial(int k) {
    Rat r(1);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

/// Degree-truncated linear map from a graded connected Hopf algebra into a
/// commutative target algebra.
///
/// Storage is sparse: absent monomials evaluate to the target zero, except
/// that a character is implicitly 1 on the unit and extends multiplicatively
/// over the factors of a product monomial, and an infinitesimal is implicitly
/// 0 on the unit. Characters may also carry explicitly computed values on
/// product monomials (e.g. the output of exp_star), which makes the character
/// check a real test rather than a tautology.
///
/// Values are immutable after construction; all operations below are pure.
template <class Basis, class Alg>
class Functional {
public:
    using Monomial = typename Basis::Monomial;
    using Coeff = typename Basis::Coeff;
    using Value = typename Alg::Value;
    using Table = std::map<Monomial, Value>;

    Functional(std::shared_ptr<const Basis> basis, Alg alg, int truncation, FunctionalKind kind,
               Table values = {})
        : basis_(std::move(basis)), alg_(std::move(alg)), truncation_(truncation), kind_(kind) {
        if (!basis_) throw domain_error("functional: null basis");
        if (truncation_ < 0) throw domain_error("functional: truncation must be >= 0");
        if (truncation_ > basis_->max_degree())
            throw domain_error("functional: truncation " + std::to_string(truncation_) +
                               " exceeds basis degree limit " + std::to_string(basis_->max_degree()));
        for (auto& [m, v] : values) {
            if (Basis::degree(m) > truncation_)
                throw domain_error("functional: value on monomial of degree above the truncation");
            if (alg_.is_zero(v)) continue;
            if (Basis::degree(m) == 0) {
                if (kind_ == FunctionalKind::character) {
                    if (!alg_.equal(v, alg_.one()))
                        throw domain_error("character: value on the unit must be 1");
                    continue; // implicit
                }
                if (kind_ == FunctionalKind::infinitesimal)
                    throw domain_error("infinitesimal: value on the unit must be 0");
            }
            values_.emplace(m, v);
        }
    }

    static Functional unit_character(std::shared_ptr<const Basis> basis, Alg alg, int truncation) {
        return Functional(std::move(basis), std::move(alg), truncation, FunctionalKind::character);
    }

    static Functional zero(std::shared_ptr<const Basis> basis, Alg alg, int truncation,
                           FunctionalKind kind = FunctionalKind::general) {
        return Functional(std::move(basis), std::move(alg), truncation, kind);
    }

    /// Infinitesimal supported on a single storage generator.
    static Functional delta(std::shared_ptr<const Basis> basis, Alg alg, int truncation,
                            const Monomial& generator, Value v) {
        if (Basis::degree(generator) == 0)
            throw domain_error("delta: the unit is not a generator");
        auto factors = basis->char_factors(generator);
        if (factors.size() != 1)
            throw domain_error("delta: support must be a generator monomial");
        Table t;
        t.emplace(generator, std::move(v));
        return Functional(std::move(basis), std::move(alg), truncation, FunctionalKind::infinitesimal,
                          std::move(t));
    }

    const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
    const Basis& basis() const { return *basis_; }
    const Alg& alg() const { return alg_; }
    int truncation() const { return truncation_; }
    FunctionalKind kind() const { return kind_; }
    const Table& values() const { return values_; }

    /// Evaluation on a basis monomial of degree <= truncation.
    Value value(const Monomial& m) const {
        if (Basis::degree(m) > truncation_)
            throw domain_error("functional: evaluated above its truncation degree");
        auto it = values_.find(m);
        if (it != values_.end()) return it->second;
        if (Basis::degree(m) == 0)
            return kind_ == FunctionalKind::character ? alg_.one() : alg_.zero();
        if (kind_ == FunctionalKind::character) {
            auto factors = basis_->char_factors(m);
            if (factors.size() == 1) return alg_.zero(); // unstored generator
            Value prod = alg_.one();
            for (const Monomial& f : factors) prod = alg_.mul(prod, value(f));
            return prod;
        }
        return alg_.zero();
    }

    /// Linear evaluation on an element of the Hopf algebra.
    Value value(const Combo<Monomial, Coeff>& x) const {
        Value acc = alg_.zero();
        for (const auto& [m, c] : x.terms())
            acc = alg_.add(acc, alg_.mul(embed_coeff(alg_, c), value(m)));
        return acc;
    }

    /// Reinterprets the stored table under another kind. Storage-level: an
    /// implicit character unit or multiplicative extension is NOT materialized
    /// first (see materialize_general for the value-preserving conversion).
    Functional with_kind(FunctionalKind k) const {
        return Functional(basis_, alg_, truncation_, k, values_);
    }

    Functional with_value(const Monomial& m, Value v) const {
        Table t = values_;
        t.erase(m);
        t.emplace(m, std::move(v));
        return Functional(basis_, alg_, truncation_, kind_, std::move(t));
    }

private:
    std::shared_ptr<const Basis> basis_;
    Alg alg_;
    int truncation_;
    FunctionalKind kind_;
    Table values_;
};

namespace detail {

template <class Basis, class Alg>
void require_compatible(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g,
                        const char* op) {
    if (!f.basis().compatible(g.basis()))
        throw domain_error(std::string(op) + ": basis mismatch");
    if (!f.alg().compatible(g.alg()))
        throw domain_error(std::string(op) + ": target algebra mismatch");
    if (f.truncation() != g.truncation())
        throw domain_error(std::string(op) + ": truncation mismatch (" +
                           std::to_string(f.truncation()) + " vs " + std::to_string(g.truncation()) + ")");
}

template <class Basis, class Fn>
void for_each_monomial(const Basis& basis, int max_degree, Fn&& fn) {
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& m : basis.monomials(n)) fn(m);
}

} // namespace detail

/// The same map as f, stored as a general-kind table over every monomial of
/// degree <= N (implicit character/infinitesimal conventions materialized).
template <class Basis, class Alg>
Functional<Basis, Alg> materialize_general(const Functional<Basis, Alg>& f) {
    typename Functional<Basis, Alg>::Table table;
    detail::for_each_monomial(f.basis(), f.truncation(),
                              [&](const auto& m) { table.emplace(m, f.value(m)); });
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), f.truncation(), FunctionalKind::general,
                                  std::move(table));
}

/// Convolution product mu_B . (f (x) g) . Delta. The product of two
/// characters is again a character (stored on generators); anything else is a
/// general functional tabulated on every monomial.
template <class Basis, class Alg>
Functional<Basis, Alg> convolve(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g) {
    detail::require_compatible(f, g, "convolve");
    const Alg& alg = f.alg();
    const Basis& basis = f.basis();
    int N = f.truncation();

    auto conv_value = [&](const typename Basis::Monomial& m) {
        auto acc = alg.zero();
        for (const auto& [pair, c] : basis.coproduct(m).terms())
            acc = alg.add(acc, alg.mul(embed_coeff(alg, c), alg.mul(f.value(pair.first), g.value(pair.second))));
        return acc;
    };

    typename Functional<Basis, Alg>::Table table;
    bool char_result = f.kind() == FunctionalKind::character && g.kind() == FunctionalKind::character;
    if (char_result) {
        for (int n = 1; n <= N; ++n)
            for (const auto& m : basis.generators(n)) table.emplace(m, conv_value(m));
    } else {
        detail::for_each_monomial(basis, N, [&](const auto& m) { table.emplace(m, conv_value(m)); });
    }
    return Functional<Basis, Alg>(f.basis_ptr(), alg, N,
                                  char_result ? FunctionalKind::character : FunctionalKind::general,
                                  std::move(table));
}

/// Group inverse of a character: precomposition with the antipode.
template <class Basis, class Alg>
Functional<Basis, Alg> char_inverse(const Functional<Basis, Alg>& phi) {
    if (phi.kind() != FunctionalKind::character)
        throw domain_error("char_inverse: kind is not character");
    const Basis& basis = phi.basis();
    typename Functional<Basis, Alg>::Table table;
    for (int n = 1; n <= phi.truncation(); ++n)
        for (const auto& m : basis.generators(n)) table.emplace(m, phi.value(basis.antipode(m)));
    return Functional<Basis, Alg>(phi.basis_ptr(), phi.alg(), phi.truncation(),
                                  FunctionalKind::character, std::move(table));
}

template <class Basis, class Alg>
Functional<Basis, Alg> add(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g) {
    detail::require_compatible(f, g, "add");
    FunctionalKind kind = (f.kind() == FunctionalKind::infinitesimal &&
                           g.kind() == FunctionalKind::infinitesimal)
                              ? FunctionalKind::infinitesimal
                              : FunctionalKind::general;
    typename Functional<Basis, Alg>::Table table;
    detail::for_each_monomial(f.basis(), f.truncation(),
                              [&](const auto& m) { table.emplace(m, f.alg().add(f.value(m), g.value(m))); });
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), f.truncation(), kind, std::move(table));
}

template <class Basis, class Alg>
Functional<Basis, Alg> sub(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g) {
    detail::require_compatible(f, g, "sub");
    FunctionalKind kind = (f.kind() == FunctionalKind::infinitesimal &&
                           g.kind() == FunctionalKind::infinitesimal)
                              ? FunctionalKind::infinitesimal
                              : FunctionalKind::general;
    typename Functional<Basis, Alg>::Table table;
    detail::for_each_monomial(f.basis(), f.truncation(),
                              [&](const auto& m) { table.emplace(m, f.alg().sub(f.value(m), g.value(m))); });
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), f.truncation(), kind, std::move(table));
}

template <class Basis, class Alg>
Functional<Basis, Alg> scale(const Functional<Basis, Alg>& f, const Rat& c) {
    FunctionalKind kind = f.kind() == FunctionalKind::infinitesimal ? FunctionalKind::infinitesimal
                                                                    : FunctionalKind::general;
    typename Functional<Basis, Alg>::Table table;
    auto factor = f.alg().from_rational(c);
    detail::for_each_monomial(f.basis(), f.truncation(),
                              [&](const auto& m) { table.emplace(m, f.alg().mul(factor, f.value(m))); });
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), f.truncation(), kind, std::move(table));
}

/// Grading dilation: multiplies the value on each degree-n monomial by h^n.
/// This is a Hopf-compatible rescaling, so every kind survives it.
template <class Basis, class Alg>
Functional<Basis, Alg> scale_degrees(const Functional<Basis, Alg>& f, const Rat& h) {
    typename Functional<Basis, Alg>::Table table;
    for (const auto& [m, v] : f.values())
        table.emplace(m, f.alg().mul(f.alg().from_rational(rat_pow(h, (unsigned)Basis::degree(m))), v));
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), f.truncation(), f.kind(), std::move(table));
}

/// Convolution exponential: sum of psi^{*k}/k!, finite per degree because psi
/// vanishes on degree 0. Maps infinitesimals onto characters.
template <class Basis, class Alg>
Functional<Basis, Alg> exp_star(const Functional<Basis, Alg>& psi) {
    const Alg& alg = psi.alg();
    if (!alg.equal(psi.value(psi.basis().monomials(0).front()), alg.zero()))
        throw domain_error("exp_star: input does not vanish on the unit");
    int N = psi.truncation();
    auto e = Functional<Basis, Alg>::unit_character(psi.basis_ptr(), alg, N);

    typename Functional<Basis, Alg>::Table acc;
    detail::for_each_monomial(psi.basis(), N, [&](const auto& m) { acc.emplace(m, e.value(m)); });
    auto term = materialize_general(e);
    for (int k = 1; k <= N; ++k) {
        term = convolve(term, psi);
        auto inv_fact = alg.from_rational(Rat(1) / rat_factorial(k));
        for (auto& [m, v] : acc) v = alg.add(v, alg.mul(inv_fact, term.value(m)));
    }
    FunctionalKind kind = psi.kind() == FunctionalKind::infinitesimal ? FunctionalKind::character
                                                                      : FunctionalKind::general;
    return Functional<Basis, Alg>(psi.basis_ptr(), alg, N, kind, std::move(acc));
}

/// Convolution logarithm: sum of (-1)^{k+1} (phi - e)^{*k} / k, truncated at
/// k = N. Inverse of exp_star on characters.
template <class Basis, class Alg>
Functional<Basis, Alg> log_star(const Functional<Basis, Alg>& phi) {
    if (phi.kind() != FunctionalKind::character)
        throw domain_error("log_star: kind is not character");
    const Alg& alg = phi.alg();
    int N = phi.truncation();
    auto e = Functional<Basis, Alg>::unit_character(phi.basis_ptr(), alg, N);
    auto u = sub(phi, e);

    typename Functional<Basis, Alg>::Table acc;
    detail::for_each_monomial(phi.basis(), N, [&](const auto& m) { acc.emplace(m, alg.zero()); });
    auto pw = materialize_general(e);
    for (int k = 1; k <= N; ++k) {
        pw = convolve(pw, u);
        auto coeff = alg.from_rational(Rat(k % 2 == 1 ? 1 : -1, k));
        for (auto& [m, v] : acc) v = alg.add(v, alg.mul(coeff, pw.value(m)));
    }
    return Functional<Basis, Alg>(phi.basis_ptr(), alg, N, FunctionalKind::infinitesimal, std::move(acc));
}

template <class Basis, class Alg>
Functional<Basis, Alg> lie_bracket(const Functional<Basis, Alg>& a, const Functional<Basis, Alg>& b) {
    if (a.kind() != FunctionalKind::infinitesimal || b.kind() != FunctionalKind::infinitesimal)
        throw domain_error("lie_bracket: both arguments must be infinitesimal");
    return sub(convolve(a, b), convolve(b, a)).with_kind(FunctionalKind::infinitesimal);
}

/// Baker-Campbell-Hausdorff product: log(exp(a) * exp(b)).
template <class Basis, class Alg>
Functional<Basis, Alg> bch(const Functional<Basis, Alg>& a, const Functional<Basis, Alg>& b) {
    if (a.kind() != FunctionalKind::infinitesimal || b.kind() != FunctionalKind::infinitesimal)
        throw domain_error("bch: both arguments must be infinitesimal");
    detail::require_compatible(a, b, "bch");
    return log_star(convolve(exp_star(a), exp_star(b)));
}

/// Restriction to monomials of degree <= M (the pro-Lie truncation maps).
template <class Basis, class Alg>
Functional<Basis, Alg> truncate(const Functional<Basis, Alg>& f, int M) {
    if (M < 0) throw domain_error("truncate: M must be >= 0");
    if (M > f.truncation())
        throw domain_error("truncate: M exceeds the functional's truncation degree");
    typename Functional<Basis, Alg>::Table table;
    for (const auto& [m, v] : f.values())
        if (Basis::degree(m) <= M) table.emplace(m, v);
    return Functional<Basis, Alg>(f.basis_ptr(), f.alg(), M, f.kind(), std::move(table));
}

/// Ultrametric order: the largest D with f = 0 on every monomial of degree
/// <= D. A truncated functional cannot distinguish "vanishes through N" from
/// "vanishes everywhere", which `saturated` records.
struct UmOrder {
    bool saturated = false; // vanishes through the truncation degree
    int order = -1;         // meaningful when !saturated; -1 means f(1) != 0

    std::string to_text(int truncation) const {
        if (saturated) return ">= " + std::to_string(truncation) + " (saturated at truncation)";
        return std::to_string(order);
    }
};

template <class Basis, class Alg>
UmOrder um_order(const Functional<Basis, Alg>& f) {
    for (int n = 0; n <= f.truncation(); ++n)
        for (const auto& m : f.basis().monomials(n))
            if (!f.alg().equal(f.value(m), f.alg().zero())) return {false, n - 1};
    return {true, f.truncation()};
}

/// d(f,g) = 2^{-ord(f-g)} as an exact rational; 0 when the difference
/// vanishes through the truncation degree.
template <class Basis, class Alg>
Rat um_distance(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g) {
    UmOrder o = um_order(sub(f, g));
    if (o.saturated) return Rat(0);
    if (o.order < 0) return Rat(2);
    return rat_pow(Rat(1, 2), (unsigned)o.order);
}

namespace detail {

template <class Alg>
Alg with_tolerance(Alg alg, std::optional<double> tol) {
    if constexpr (!Alg::exact) {
        if (tol) alg.tol = *tol;
    }
    return alg;
}

} // namespace detail

/// Checks phi(ab) = phi(a)phi(b) on every product of non-unit monomials with
/// total degree <= N, plus phi(1) = 1. Reports the first counterexample.
template <class Basis, class Alg>
CheckResult is_character(const Functional<Basis, Alg>& f, std::optional<double> tol = {}) {
    Alg alg = detail::with_tolerance(f.alg(), tol);
    const Basis& basis = f.basis();
    int N = f.truncation();
    auto unit = basis.monomials(0).front();
    if (!alg.equal(f.value(unit), alg.one()))
        return {false, "f(1) = " + alg.to_text(f.value(unit)) + ", expected 1"};
    for (int d1 = 1; d1 < N; ++d1)
        for (int d2 = d1; d1 + d2 <= N; ++d2)
            for (const auto& m1 : basis.monomials(d1))
                for (const auto& m2 : basis.monomials(d2)) {
                    if (d1 == d2 && m2 < m1) continue;
                    auto lhs = f.value(basis.product(m1, m2));
                    auto rhs = alg.mul(f.value(m1), f.value(m2));
                    if (!alg.equal(lhs, rhs))
                        return {false, "f(" + basis.monomial_to_text(m1) + " . " +
                                           basis.monomial_to_text(m2) + ") = " + alg.to_text(lhs) +
                                           " but f(a)f(b) = " + alg.to_text(rhs)};
                }
    return {};
}

/// Checks the Leibniz identity: psi(1) = 0 and psi vanishes on products of
/// two non-unit monomials with total degree <= N.
template <class Basis, class Alg>
CheckResult is_infinitesimal(const Functional<Basis, Alg>& f, std::optional<double> tol = {}) {
    Alg alg = detail::with_tolerance(f.alg(), tol);
    const Basis& basis = f.basis();
    int N = f.truncation();
    auto unit = basis.monomials(0).front();
    if (!alg.equal(f.value(unit), alg.zero()))
        return {false, "f(1) = " + alg.to_text(f.value(unit)) + ", expected 0"};
    for (int d1 = 1; d1 < N; ++d1)
        for (int d2 = d1; d1 + d2 <= N; ++d2)
            for (const auto& m1 : basis.monomials(d1))
                for (const auto& m2 : basis.monomials(d2)) {
                    if (d1 == d2 && m2 < m1) continue;
                    auto lhs = f.value(basis.product(m1, m2));
                    if (!alg.equal(lhs, alg.zero()))
                        return {false, "f(" + basis.monomial_to_text(m1) + " . " +
                                           basis.monomial_to_text(m2) + ") = " + alg.to_text(lhs) +
                                           ", expected 0"};
                }
    return {};
}

/// Value-wise equality on every monomial of degree <= N, i.e. equality of the
/// truncated maps regardless of how the tables are stored.
template <class Basis, class Alg>
bool functional_equal(const Functional<Basis, Alg>& f, const Functional<Basis, Alg>& g) {
    detail::require_compatible(f, g, "functional_equal");
    bool ok = true;
    detail::for_each_monomial(f.basis(), f.truncation(), [&](const auto& m) {
        if (ok && !f.alg().equal(f.value(m), g.value(m))) ok = false;
    });
    return ok;
}

} // namespace hopfchar
