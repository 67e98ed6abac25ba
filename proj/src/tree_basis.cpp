#include "hopfchar/tree_basis.hpp"

#include "hopfchar/errors.hpp"

namespace hopfchar {

namespace {

ForestTensor tensor_mul(const ForestTensor& a, const ForestTensor& b) {
    return multiply(a, b, [](const TensorKey<Forest>& x, const TensorKey<Forest>& y) {
        return ForestTensor::monomial({x.first.times(y.first), x.second.times(y.second)});
    });
}

} // namespace

TreeBasis::TreeBasis(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw domain_error("tree basis: max degree must be >= 0");
    monomials_.resize(max_degree + 1);
    generators_.resize(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        monomials_[n] = enumerate_forests(n);
        if (n >= 1)
            for (const Tree& t : enumerate_trees(n)) generators_[n].push_back(Forest(t));
    }
    // cache tree coproducts once, then extend multiplicatively to forests
    std::map<Tree, ForestTensor> per_tree;
    for (int n = 1; n <= max_degree; ++n)
        for (const Tree& t : enumerate_trees(n)) per_tree.emplace(t, tree_coproduct(t));
    for (int n = 0; n <= max_degree; ++n)
        for (const Forest& f : monomials_[n]) {
            ForestTensor delta = ForestTensor::monomial({Forest(), Forest()});
            for (const Tree& t : f.trees()) delta = tensor_mul(delta, per_tree.at(t));
            coproducts_.emplace(f, std::move(delta));
        }
}

const std::vector<Forest>& TreeBasis::monomials(int degree) const {
    if (degree < 0 || degree > max_degree_)
        throw domain_error("tree basis: degree " + std::to_string(degree) + " outside cached range");
    return monomials_[degree];
}

const std::vector<Forest>& TreeBasis::generators(int degree) const {
    if (degree < 0 || degree > max_degree_)
        throw domain_error("tree basis: degree " + std::to_string(degree) + " outside cached range");
    return generators_[degree];
}

const ForestTensor& TreeBasis::coproduct(const Forest& m) const {
    auto it = coproducts_.find(m);
    if (it == coproducts_.end())
        throw domain_error("tree basis: coproduct of degree-" + std::to_string(m.degree()) +
                           " forest beyond cached degree " + std::to_string(max_degree_));
    return it->second;
}

ForestElement TreeBasis::antipode(const Forest& m) const {
    ForestElement out = ForestElement::monomial(Forest());
    for (const Tree& t : m.trees())
        out = multiply(out, tree_antipode(t),
                       [](const Forest& a, const Forest& b) { return ForestElement::monomial(a.times(b)); });
    return out;
}

std::vector<Forest> TreeBasis::char_factors(const Forest& m) const {
    std::vector<Forest> factors;
    factors.reserve(m.trees().size());
    for (const Tree& t : m.trees()) factors.push_back(Forest(t));
    return factors;
}

ForestTensor coproduct(const TreeBasis& basis, const ForestElement& x) {
    return extend_linear<TensorKey<Forest>>(x, [&](const Forest& m) { return basis.coproduct(m); });
}

ForestElement antipode(const TreeBasis& basis, const ForestElement& x) {
    return extend_linear<Forest>(x, [&](const Forest& m) { return basis.antipode(m); });
}

Rat counit(const ForestElement& x) { return x.coefficient(Forest()); }

ForestElement forest_product(const ForestElement& x, const ForestElement& y) {
    return multiply(x, y, [](const Forest& a, const Forest& b) { return ForestElement::monomial(a.times(b)); });
}

} // namespace hopfchar
