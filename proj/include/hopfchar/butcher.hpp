#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/functional.hpp"
#include "hopfchar/ideal.hpp"
#include "hopfchar/tree_basis.hpp"

namespace hopfchar {

/// Runge-Kutta tableau with exact rational entries.
struct RKMethod {
    int stages = 0;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<Rat> c;

    void validate() const;
    // c_i != sum_j A_ij is suspicious but legal; reported, never fatal
    std::vector<std::string> consistency_warnings() const;
};

RKMethod forward_euler();
RKMethod implicit_midpoint();
RKMethod classical_rk4();

/// "Apply `first`, then `second`", each with the given fraction of the step.
/// The character of the composite equals the convolution of the scaled
/// characters of the parts.
RKMethod compose_methods(const RKMethod& first, const RKMethod& second, const Rat& h1, const Rat& h2);

/// Relabels the stages by a permutation; elementary weights are unchanged.
RKMethod permute_stages(const RKMethod& m, const std::vector<int>& perm);

/// Elementary weights of every tree with at most `truncation` vertices,
/// evaluated exactly: phi_i(single node) = 1 and
/// phi_i(tree with children t_1..t_k) = prod_l (A phi(t_l))_i, with
/// a(tree) = b . phi(tree).
template <class Alg = RationalAlgebra>
Functional<TreeBasis, Alg> rk_character(const RKMethod& m, std::shared_ptr<const TreeBasis> basis,
                                        Alg alg, int truncation);

std::vector<std::pair<Tree, Rat>> elementary_weights(const RKMethod& m, int max_order);

/// The exact-flow character: exp_star of the infinitesimal supported on the
/// single-node tree with value 1.
template <class Alg = RationalAlgebra>
Functional<TreeBasis, Alg> exact_flow(std::shared_ptr<const TreeBasis> basis, Alg alg, int truncation) {
    auto delta = Functional<TreeBasis, Alg>::delta(basis, alg, truncation, Forest(Tree()),
                                                   alg.from_rational(Rat(1)));
    return exp_star(delta);
}

/// Stepsize dilation a_h: multiplies the value on each order-n tree by h^n.
template <class Alg>
Functional<TreeBasis, Alg> scale_step(const Functional<TreeBasis, Alg>& a, const Rat& h) {
    return scale_degrees(a, h);
}

/// n forward-Euler steps of size 1/n, as an n-fold convolution power.
template <class Alg = RationalAlgebra>
Functional<TreeBasis, Alg> euler_composite(std::shared_ptr<const TreeBasis> basis, Alg alg, int n,
                                           int truncation) {
    if (n < 1) throw domain_error("euler_composite: n must be >= 1");
    auto step = scale_step(rk_character(forward_euler(), basis, alg, truncation), Rat(1, n));
    auto acc = step;
    for (int i = 1; i < n; ++i) acc = convolve(acc, step);
    return acc;
}

/// Largest p with a agreeing with the exact flow on every tree of order <= p;
/// saturated when they agree through the whole truncation range.
struct OrderResult {
    bool saturated = false;
    int order = 0;
    std::string to_text(int truncation) const {
        return saturated ? ">= " + std::to_string(truncation) : std::to_string(order);
    }
};

template <class Alg>
OrderResult order_of(const Functional<TreeBasis, Alg>& a) {
    auto e = exact_flow(a.basis_ptr(), a.alg(), a.truncation());
    UmOrder o = um_order(sub(a, e));
    if (o.saturated) return {true, a.truncation()};
    return {false, o.order};
}

/// Generators u.v + v.u - u*v (graft twice, minus the forest product) for all
/// tree pairs with |u|+|v| <= truncation. Characters annihilating this ideal
/// are the symplectic tree maps.
IdealSpec<TreeBasis> symplectic_ideal(const TreeBasis& basis, int truncation);

/// Per-degree geometric growth: (n, max over |t|=n of |a(t)|^{1/n}).
template <class Alg>
std::vector<std::pair<int, double>> growth_profile(const Functional<TreeBasis, Alg>& a) {
    std::vector<std::pair<int, double>> out;
    for (int n = 1; n <= a.truncation(); ++n) {
        double max_mag = 0.0;
        for (const auto& t : a.basis().generators(n))
            max_mag = std::max(max_mag, a.alg().magnitude(a.value(t)));
        out.emplace_back(n, max_mag == 0.0 ? 0.0 : std::pow(max_mag, 1.0 / n));
    }
    return out;
}

extern template Functional<TreeBasis, RationalAlgebra> rk_character(const RKMethod&,
                                                                    std::shared_ptr<const TreeBasis>,
                                                                    RationalAlgebra, int);
extern template Functional<TreeBasis, FloatAlgebra> rk_character(const RKMethod&,
                                                                 std::shared_ptr<const TreeBasis>,
                                                                 FloatAlgebra, int);

} // namespace hopfchar
