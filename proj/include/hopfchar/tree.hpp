#pragma once

#include <string>
#include <vector>

#include "hopfchar/combo.hpp"
#include "hopfchar/rational.hpp"

namespace hopfchar {

/// Canonical unlabelled rooted tree. Children are kept sorted by their
/// serialized form, so structurally equal trees compare equal and the bracket
/// serialization ("[]" = single node, "[[]]" = 2-chain, "[[],[]]" = cherry)
/// is a total order key.
class Tree {
public:
    Tree(); // single vertex
    explicit Tree(std::vector<Tree> children);

    const std::vector<Tree>& children() const { return children_; }
    int order() const { return order_; } // number of vertices
    const std::string& repr() const { return repr_; }

    friend bool operator==(const Tree& a, const Tree& b) { return a.repr_ == b.repr_; }
    friend bool operator!=(const Tree& a, const Tree& b) { return a.repr_ != b.repr_; }
    friend bool operator<(const Tree& a, const Tree& b) { return a.repr_ < b.repr_; }

private:
    std::vector<Tree> children_;
    int order_;
    std::string repr_;
};

/// Multiset of trees; the monomial basis of the polynomial algebra on trees.
/// The empty forest is the algebra unit.
class Forest {
public:
    Forest() : degree_(0) {} // unit
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(const Tree& t) : Forest(std::vector<Tree>{t}) {}

    const std::vector<Tree>& trees() const { return trees_; }
    int degree() const { return degree_; }
    bool is_unit() const { return trees_.empty(); }

    Forest times(const Forest& o) const; // multiset union

    // Forests order by (degree, serialization): tables iterate degree-wise.
    friend bool operator<(const Forest& a, const Forest& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.repr_ < b.repr_;
    }
    friend bool operator==(const Forest& a, const Forest& b) { return a.repr_ == b.repr_; }
    friend bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }

    const std::string& repr() const { return repr_; }

private:
    std::vector<Tree> trees_;
    int degree_;
    std::string repr_;
};

std::string tree_to_text(const Tree& t);
std::string forest_to_text(const Forest& f); // unit serializes as "1"
Tree tree_from_text(const std::string& text);
Forest forest_from_text(const std::string& text);

/// All canonical rooted trees with exactly n vertices, deterministic order.
/// Rejects n < 1: the empty tree is represented only as the empty Forest.
std::vector<Tree> enumerate_trees(int n);

/// All forests of the given total degree (degree 0 yields just the unit).
std::vector<Forest> enumerate_forests(int degree);

/// One ordered subtree of t: a connected vertex subset containing the root
/// (or empty), together with the tree it spans and the forest that remains.
struct SubtreeCut {
    std::vector<int> kept_vertices; // preorder ids in t (root = 0)
    Forest kept;                    // single tree, or unit when the subset is empty
    Forest cut;                     // what falls off, or unit when everything is kept
};

/// Every ordered subtree of t, one entry per admissible vertex subset.
std::vector<SubtreeCut> ordered_subtrees(const Tree& t);

using ForestElement = Combo<Forest, Rat>;
using ForestTensor = Combo<TensorKey<Forest>, Rat>;

/// Coproduct of a single tree: sum over ordered subtrees of (cut) x (kept).
ForestTensor tree_coproduct(const Tree& t);

/// Antipode of a single tree: signed sum over edge subsets of the forests
/// obtained by deleting those edges.
ForestElement tree_antipode(const Tree& t);

/// Butcher product: attach the root of v as a new child of the root of u.
Tree graft(const Tree& u, const Tree& v);

} // namespace hopfchar
