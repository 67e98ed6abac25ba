#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfchar/tree.hpp"

namespace hopfchar {

/// Graded basis provider for the rooted-tree Hopf algebra. Monomials are
/// forests, generators are single trees; the coproduct of every monomial up
/// to the construction-time degree limit is precomputed, so all accessors on
/// a built instance are const and safe to share across threads.
class TreeBasis {
public:
    using Monomial = Forest;
    using Coeff = Rat;

    explicit TreeBasis(int max_degree);

    int max_degree() const { return max_degree_; }
    const std::vector<Forest>& monomials(int degree) const;
    const std::vector<Forest>& generators(int degree) const; // single-tree forests

    const ForestTensor& coproduct(const Forest& m) const;
    ForestElement product(const Forest& a, const Forest& b) const {
        return ForestElement::monomial(a.times(b));
    }
    ForestElement antipode(const Forest& m) const;
    static Rat counit(const Forest& m) { return Rat(m.is_unit() ? 1 : 0); }
    static int degree(const Forest& m) { return m.degree(); }
    static Forest unit() { return Forest(); }

    // A character is determined by its values on these factors; a forest
    // splits into its trees.
    std::vector<Forest> char_factors(const Forest& m) const;

    bool compatible(const TreeBasis&) const { return true; }
    std::string name() const { return "trees"; }
    std::string monomial_to_text(const Forest& m) const { return forest_to_text(m); }
    Forest monomial_from_text(const std::string& s) const { return forest_from_text(s); }

private:
    int max_degree_;
    std::vector<std::vector<Forest>> monomials_;
    std::vector<std::vector<Forest>> generators_;
    std::map<Forest, ForestTensor> coproducts_;
};

// Element-level Hopf structure maps (linear extensions over the basis).
ForestTensor coproduct(const TreeBasis& basis, const ForestElement& x);
ForestElement antipode(const TreeBasis& basis, const ForestElement& x);
Rat counit(const ForestElement& x);
ForestElement forest_product(const ForestElement& x, const ForestElement& y);

} // namespace hopfchar
