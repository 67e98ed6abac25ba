#pragma once

#include <string>
#include <vector>

#include "hopfchar/functional.hpp"
#include "hopfchar/laurent.hpp"
#include "hopfchar/tree_basis.hpp"

namespace hopfchar {

using LaurentChar = Functional<TreeBasis, LaurentAlgebra>;

/// Factorisation phi = gamma_minus^{-1} * gamma_plus of a Laurent-valued
/// character: gamma_minus carries pure pole parts on the kernel of the
/// counit, gamma_plus is pole-free, and gamma_minus * phi = gamma_plus.
struct BirkhoffPair {
    LaurentChar gamma_minus;
    LaurentChar gamma_plus;
    int truncation() const { return gamma_minus.truncation(); }
};

/// Bogoliubov-style recursion with minimal subtraction, tree by tree in
/// increasing order.
BirkhoffPair birkhoff(const LaurentChar& phi);

struct CountertermRow {
    Tree tree;
    LaurentSeries counterterm;  // gamma_minus on the tree
    Rat renormalized;           // constant coefficient of gamma_plus on the tree
};

std::vector<CountertermRow> counterterm_report(const BirkhoffPair& pair);

} // namespace hopfchar
