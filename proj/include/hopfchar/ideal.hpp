#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfchar/combo.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/functional.hpp"

namespace hopfchar {

/// Generating set of a (candidate) Hopf ideal. Every generator must lie in
/// the kernel of the counit.
template <class Basis>
struct IdealSpec {
    using Element = Combo<typename Basis::Monomial, typename Basis::Coeff>;
    std::vector<Element> generators;
};

namespace detail {

/// Exact row reduction over the coefficient field with deterministic
/// pivoting (rows in insertion order, first nonzero column as pivot).
/// Membership certificates come from reducing a vector to zero.
template <class Coef>
class RowSpan {
public:
    explicit RowSpan(std::size_t dim) : dim_(dim) {}

    // reduces v against the stored rows; returns the residual
    std::vector<Coef> reduce(std::vector<Coef> v) const {
        for (const auto& row : rows_) {
            const Coef& lead = v[row.pivot];
            if (coeff_is_zero(lead)) continue;
            Coef factor = lead; // row is pivot-normalized
            for (std::size_t j = row.pivot; j < dim_; ++j) {
                if (coeff_is_zero(row.entries[j])) continue;
                Coef delta = factor;
                delta *= row.entries[j];
                v[j] -= delta;
            }
        }
        return v;
    }

    // inserts v if independent; returns true when the span grew
    bool insert(std::vector<Coef> v) {
        v = reduce(std::move(v));
        std::size_t pivot = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!coeff_is_zero(v[j])) { pivot = j; break; }
        if (pivot == dim_) return false;
        Coef inv_lead = coeff_div(Coef(1), v[pivot]);
        for (std::size_t j = pivot; j < dim_; ++j)
            if (!coeff_is_zero(v[j])) v[j] *= inv_lead;
        rows_.push_back({pivot, std::move(v)});
        return true;
    }

    bool contains(std::vector<Coef> v) const {
        v = reduce(std::move(v));
        for (const auto& c : v)
            if (!coeff_is_zero(c)) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Coef> entries;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

template <class Key>
struct KeyIndex {
    std::map<Key, std::size_t> index;
    std::size_t add(const Key& k) {
        auto [it, fresh] = index.emplace(k, index.size());
        (void)fresh;
        return it->second;
    }
    std::size_t size() const { return index.size(); }
};

template <class Basis>
void check_generators(const IdealSpec<Basis>& spec) {
    for (const auto& g : spec.generators) {
        for (const auto& [m, c] : g.terms())
            if (Basis::degree(m) == 0)
                throw domain_error("ideal spec: generator with nonzero counit");
    }
}

template <class Basis>
int element_max_degree(const typename IdealSpec<Basis>::Element& g) {
    int d = 0;
    for (const auto& [m, c] : g.terms()) d = std::max(d, Basis::degree(m));
    return d;
}

} // namespace detail

/// Spanning set (row-reduced, deterministic) of the degree-<=M part of the
/// ideal: all products monomial * generator whose total degree fits in M.
template <class Basis>
std::vector<typename IdealSpec<Basis>::Element> ideal_closure(const Basis& basis,
                                                              const IdealSpec<Basis>& spec, int M) {
    using Element = typename IdealSpec<Basis>::Element;
    using Coef = typename Basis::Coeff;
    detail::check_generators<Basis>(spec);
    if (M < 0 || M > basis.max_degree())
        throw domain_error("ideal_closure: degree bound outside the basis range");

    // column order: monomials by (degree, natural order)
    detail::KeyIndex<typename Basis::Monomial> cols;
    for (int n = 0; n <= M; ++n)
        for (const auto& m : basis.monomials(n)) cols.add(m);

    auto to_vector = [&](const Element& x) {
        std::vector<Coef> v(cols.size(), Coef(0));
        for (const auto& [m, c] : x.terms()) v[cols.index.at(m)] = c;
        return v;
    };

    detail::RowSpan<Coef> span(cols.size());
    std::vector<Element> out;
    for (const auto& g : spec.generators) {
        int gdeg = detail::element_max_degree<Basis>(g);
        if (gdeg > M) continue;
        for (int n = 0; n + gdeg <= M; ++n)
            for (const auto& m : basis.monomials(n)) {
                Element prod = multiply(Element::monomial(m), g,
                                        [&](const typename Basis::Monomial& a,
                                            const typename Basis::Monomial& b) { return basis.product(a, b); });
                if (prod.empty()) continue;
                if (span.insert(to_vector(prod))) out.push_back(std::move(prod));
            }
    }
    return out;
}

/// Verifies the Hopf-ideal conditions on the degree-<=M closure: the counit
/// kills it, the coproduct lands in J (x) H + H (x) J, and the antipode maps
/// it into itself. Linear membership is decided by exact row reduction.
template <class Basis>
CheckResult is_hopf_ideal(const Basis& basis, const IdealSpec<Basis>& spec, int M) {
    using Element = typename IdealSpec<Basis>::Element;
    using Coef = typename Basis::Coeff;
    using Monomial = typename Basis::Monomial;
    detail::check_generators<Basis>(spec);

    std::vector<Element> closure = ideal_closure(basis, spec, M);
    if (closure.empty()) return {};

    detail::KeyIndex<Monomial> cols;
    for (int n = 0; n <= M; ++n)
        for (const auto& m : basis.monomials(n)) cols.add(m);
    auto to_vector = [&](const Element& x) {
        std::vector<Coef> v(cols.size(), Coef(0));
        for (const auto& [m, c] : x.terms()) v[cols.index.at(m)] = c;
        return v;
    };
    detail::RowSpan<Coef> ideal_span(cols.size());
    for (const auto& x : closure) ideal_span.insert(to_vector(x));

    // tensor columns: pairs with total degree <= M
    detail::KeyIndex<TensorKey<Monomial>> tcols;
    for (int d1 = 0; d1 <= M; ++d1)
        for (int d2 = 0; d1 + d2 <= M; ++d2)
            for (const auto& m1 : basis.monomials(d1))
                for (const auto& m2 : basis.monomials(d2)) tcols.add({m1, m2});

    detail::RowSpan<Coef> coideal_span(tcols.size());
    auto tensor_to_vector = [&](const Combo<TensorKey<Monomial>, Coef>& x) {
        std::vector<Coef> v(tcols.size(), Coef(0));
        for (const auto& [k, c] : x.terms()) v[tcols.index.at(k)] = c;
        return v;
    };
    for (const auto& j : closure) {
        for (int n = 0; n <= M; ++n)
            for (const auto& m : basis.monomials(n)) {
                if (n + detail::element_max_degree<Basis>(j) > M) continue;
                Combo<TensorKey<Monomial>, Coef> left, right;
                for (const auto& [jm, jc] : j.terms()) {
                    left.add_term({jm, m}, jc);
                    right.add_term({m, jm}, jc);
                }
                coideal_span.insert(tensor_to_vector(left));
                coideal_span.insert(tensor_to_vector(right));
            }
    }

    for (const auto& x : closure) {
        // counit
        for (const auto& [m, c] : x.terms())
            if (Basis::degree(m) == 0)
                return {false, "counit does not vanish on closure element"};
        // coproduct membership
        Combo<TensorKey<Monomial>, Coef> dx;
        for (const auto& [m, c] : x.terms()) {
            Combo<TensorKey<Monomial>, Coef> scaled = basis.coproduct(m);
            scaled *= c;
            dx += scaled;
        }
        if (!coideal_span.contains(tensor_to_vector(dx)))
            return {false, "coproduct of a closure element leaves J(x)H + H(x)J"};
        // antipode membership
        Element sx;
        for (const auto& [m, c] : x.terms()) {
            auto img = basis.antipode(m);
            img *= c;
            sx += img;
        }
        if (!ideal_span.contains(to_vector(sx)))
            return {false, "antipode of a closure element leaves the ideal"};
    }
    return {};
}

/// Report of evaluating a functional on an ideal's closure basis.
struct AnnihilationReport {
    bool ok = true;
    std::string worst_element; // serialized element with the largest residual
    std::string worst_value;
    double worst_magnitude = 0.0;
    explicit operator bool() const { return ok; }
};

inline std::string coeff_to_text(const Rat& c) { return rat_to_text(c); }
inline std::string coeff_to_text(const CRat& c) { return "(" + crat_to_text(c) + ")"; }

template <class Basis>
std::string element_to_text(const Basis& basis, const typename IdealSpec<Basis>::Element& x) {
    if (x.empty()) return "0";
    std::string text;
    for (const auto& [m, c] : x.terms()) {
        if (!text.empty()) text += " + ";
        text += coeff_to_text(c) + "*" + basis.monomial_to_text(m);
    }
    return text;
}

template <class Basis, class Alg>
AnnihilationReport annihilates(const Functional<Basis, Alg>& phi, const IdealSpec<Basis>& spec, int M) {
    if (M > phi.truncation())
        throw domain_error("annihilates: degree bound exceeds the functional's truncation");
    std::vector<typename IdealSpec<Basis>::Element> closure = ideal_closure(phi.basis(), spec, M);
    AnnihilationReport report;
    const Alg& alg = phi.alg();
    for (const auto& x : closure) {
        auto v = phi.value(x);
        if (alg.equal(v, alg.zero())) continue;
        report.ok = false;
        double mag = 1.0;
        if constexpr (requires { alg.magnitude(v); }) mag = alg.magnitude(v);
        if (report.worst_element.empty() || mag > report.worst_magnitude) {
            report.worst_element = element_to_text(phi.basis(), x);
            report.worst_value = alg.to_text(v);
            report.worst_magnitude = mag;
        }
    }
    return report;
}

} // namespace hopfchar
