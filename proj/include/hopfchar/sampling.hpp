#pragma once

#include <random>
#include <vector>

#include "hopfchar/flows.hpp"
#include "hopfchar/functional.hpp"
#include "hopfchar/laurent.hpp"
#include "hopfchar/tree_basis.hpp"

namespace hopfchar {

/// Deterministic sample source for property-style checks (tests and the
/// `selftest` subcommand). Every draw depends only on the seed.
class Sampler {
public:
    explicit Sampler(unsigned long seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat small_rat(long max_num = 4, long max_den = 4) {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return rat_from_long(num, den);
    }

    Rat nonzero_rat(long max_num = 4, long max_den = 4) {
        Rat q = small_rat(max_num, max_den);
        return q == 0 ? Rat(1, 2) : q;
    }

    // strictly inside (0,1)
    Rat interior_point() {
        long den = integer(2, 8);
        long num = integer(1, den - 1);
        return rat_from_long(num, den);
    }

    /// Character on trees with random rational values on every generator.
    template <class Alg>
    Functional<TreeBasis, Alg> tree_character(std::shared_ptr<const TreeBasis> basis, Alg alg, int N) {
        typename Functional<TreeBasis, Alg>::Table table;
        for (int n = 1; n <= N; ++n)
            for (const Forest& t : basis->generators(n))
                table.emplace(t, alg.from_rational(small_rat()));
        return Functional<TreeBasis, Alg>(std::move(basis), std::move(alg), N,
                                          FunctionalKind::character, std::move(table));
    }

    /// Infinitesimal on trees: random values on generators, zero on products.
    template <class Alg>
    Functional<TreeBasis, Alg> tree_infinitesimal(std::shared_ptr<const TreeBasis> basis, Alg alg,
                                                  int N) {
        typename Functional<TreeBasis, Alg>::Table table;
        for (int n = 1; n <= N; ++n)
            for (const Forest& t : basis->generators(n))
                table.emplace(t, alg.from_rational(small_rat()));
        return Functional<TreeBasis, Alg>(std::move(basis), std::move(alg), N,
                                          FunctionalKind::infinitesimal, std::move(table));
    }

    LaurentSeries laurent_value(int max_pole_depth, int max_regular_exp) {
        LaurentSeries s;
        for (int e = -max_pole_depth; e <= max_regular_exp; ++e)
            if (integer(0, 1)) s.add_term(e, small_rat(3, 3));
        return s;
    }

    /// Laurent-valued character with per-tree pole depth <= max_pole_depth.
    Functional<TreeBasis, LaurentAlgebra> laurent_character(std::shared_ptr<const TreeBasis> basis,
                                                            LaurentAlgebra alg, int N,
                                                            int max_pole_depth) {
        typename Functional<TreeBasis, LaurentAlgebra>::Table table;
        for (int n = 1; n <= N; ++n)
            for (const Forest& t : basis->generators(n))
                table.emplace(t, laurent_value(max_pole_depth, std::min(alg.max_exp, 1)));
        return Functional<TreeBasis, LaurentAlgebra>(std::move(basis), std::move(alg), N,
                                                     FunctionalKind::character, std::move(table));
    }

    /// Piecewise-linear curve of tree infinitesimals with a random interior
    /// breakpoint.
    PolyCurve<TreeBasis, RationalAlgebra> linear_tree_curve(std::shared_ptr<const TreeBasis> basis,
                                                            int N) {
        RationalAlgebra alg;
        std::vector<Rat> breakpoints = {Rat(0), interior_point(), Rat(1)};
        std::vector<std::vector<Functional<TreeBasis, RationalAlgebra>>> pieces;
        for (int p = 0; p < 2; ++p)
            pieces.push_back({tree_infinitesimal(basis, alg, N), tree_infinitesimal(basis, alg, N)});
        return PolyCurve<TreeBasis, RationalAlgebra>(std::move(breakpoints), std::move(pieces));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hopfchar
