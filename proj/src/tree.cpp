#include "hopfchar/tree.hpp"

#include <algorithm>

#include "hopfchar/errors.hpp"

namespace hopfchar {

namespace {

std::string build_tree_repr(const std::vector<Tree>& children) {
    std::string s = "[";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += ',';
        s += children[i].repr();
    }
    s += ']';
    return s;
}

} // namespace

Tree::Tree() : order_(1), repr_("[]") {}

Tree::Tree(std::vector<Tree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    order_ = 1;
    for (const Tree& c : children_) order_ += c.order();
    repr_ = build_tree_repr(children_);
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
    degree_ = 0;
    for (const Tree& t : trees_) degree_ += t.order();
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i) repr_ += ',';
        repr_ += trees_[i].repr();
    }
}

Forest Forest::times(const Forest& o) const {
    std::vector<Tree> all = trees_;
    all.insert(all.end(), o.trees_.begin(), o.trees_.end());
    return Forest(std::move(all));
}

std::string tree_to_text(const Tree& t) { return t.repr(); }

std::string forest_to_text(const Forest& f) { return f.is_unit() ? "1" : f.repr(); }

namespace {

// Recursive descent over the bracket serialization. pos points at '['.
Tree parse_tree_at(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '[')
        throw parse_error("expected '[' at position " + std::to_string(pos) + " in '" + s + "'");
    ++pos;
    std::vector<Tree> children;
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return Tree(std::move(children));
    }
    while (true) {
        children.push_back(parse_tree_at(s, pos));
        if (pos >= s.size())
            throw parse_error("unterminated tree in '" + s + "'");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == ']') {
            ++pos;
            return Tree(std::move(children));
        }
        throw parse_error("unexpected '" + std::string(1, s[pos]) + "' at position " +
                          std::to_string(pos) + " in '" + s + "'");
    }
}

} // namespace

Tree tree_from_text(const std::string& text) {
    std::size_t pos = 0;
    Tree t = parse_tree_at(text, pos);
    if (pos != text.size())
        throw parse_error("trailing characters after tree in '" + text + "'");
    return t;
}

Forest forest_from_text(const std::string& text) {
    if (text == "1") return Forest();
    if (text.empty()) throw parse_error("empty forest text (the unit is written '1')");
    std::vector<Tree> trees;
    std::size_t pos = 0;
    while (true) {
        trees.push_back(parse_tree_at(text, pos));
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw parse_error("unexpected '" + std::string(1, text[pos]) + "' at position " +
                              std::to_string(pos) + " in '" + text + "'");
        ++pos;
    }
    return Forest(std::move(trees));
}

namespace {

struct TreeTables {
    std::vector<std::vector<Tree>> trees;     // [order], order >= 1
    std::vector<std::vector<Forest>> forests; // [degree]

    // flat list of all trees of order <= limit, ordered by (order, repr)
    std::vector<Tree> flat;

    void extend_to(int limit) {
        if ((int)trees.size() == 0) {
            trees.resize(1);  // dummy order 0
            forests.resize(1);
            forests[0] = {Forest()};
        }
        for (int n = (int)trees.size(); n <= limit; ++n) {
            // trees of order n = root over each forest of degree n-1
            std::vector<Tree> level;
            for (const Forest& f : forests[n - 1]) level.emplace_back(f.trees());
            std::sort(level.begin(), level.end());
            trees.push_back(std::move(level));
            for (const Tree& t : trees[n]) flat.push_back(t);

            // forests of degree n: non-decreasing sequences in the flat order
            std::vector<Forest> row;
            std::vector<Tree> current;
            build_forests(n, 0, current, row);
            forests.push_back(std::move(row));
        }
    }

    void build_forests(int remaining, std::size_t start, std::vector<Tree>& current,
                       std::vector<Forest>& out) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = start; i < flat.size(); ++i) {
            if (flat[i].order() > remaining) break; // flat is order-sorted
            current.push_back(flat[i]);
            build_forests(remaining - flat[i].order(), i, current, out);
            current.pop_back();
        }
    }
};

} // namespace

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw domain_error("enumerate_trees: order must be >= 1 (the empty tree is the empty forest)");
    TreeTables tab;
    tab.extend_to(n);
    return tab.trees[n];
}

std::vector<Forest> enumerate_forests(int degree) {
    if (degree < 0) throw domain_error("enumerate_forests: degree must be >= 0");
    TreeTables tab;
    tab.extend_to(degree);
    return tab.forests[degree];
}

namespace {

struct RootedCut {
    std::vector<int> kept_vertices;
    Tree kept;
    std::vector<Tree> cut;
};

// All ordered subtrees of t that contain its root. `offset` is the preorder id
// of t's root within the ambient tree.
std::vector<RootedCut> rooted_cuts(const Tree& t, int offset) {
    std::vector<RootedCut> result;
    result.push_back({{offset}, Tree(), {}});
    int child_offset = offset + 1;
    for (const Tree& child : t.children()) {
        std::vector<RootedCut> child_opts = rooted_cuts(child, child_offset);
        std::vector<RootedCut> next;
        for (const RootedCut& acc : result) {
            // option 1: the whole child subtree falls off
            RootedCut dropped = acc;
            dropped.cut.push_back(child);
            next.push_back(std::move(dropped));
            // option 2: keep a rooted cut of the child
            for (const RootedCut& co : child_opts) {
                RootedCut merged;
                merged.kept_vertices = acc.kept_vertices;
                merged.kept_vertices.insert(merged.kept_vertices.end(),
                                            co.kept_vertices.begin(), co.kept_vertices.end());
                std::vector<Tree> kept_children = acc.kept.children();
                kept_children.push_back(co.kept);
                merged.kept = Tree(std::move(kept_children));
                merged.cut = acc.cut;
                merged.cut.insert(merged.cut.end(), co.cut.begin(), co.cut.end());
                next.push_back(std::move(merged));
            }
        }
        result = std::move(next);
        child_offset += child.order();
    }
    return result;
}

} // namespace

std::vector<SubtreeCut> ordered_subtrees(const Tree& t) {
    std::vector<SubtreeCut> out;
    out.push_back({{}, Forest(), Forest(t)}); // the empty subset
    for (RootedCut& rc : rooted_cuts(t, 0)) {
        std::sort(rc.kept_vertices.begin(), rc.kept_vertices.end());
        out.push_back({std::move(rc.kept_vertices), Forest(rc.kept), Forest(std::move(rc.cut))});
    }
    return out;
}

ForestTensor tree_coproduct(const Tree& t) {
    ForestTensor out;
    for (const SubtreeCut& sc : ordered_subtrees(t))
        out.add_term({sc.cut, sc.kept}, Rat(1));
    return out;
}

namespace {

// parent[v] for the preorder labelling of t; parent[0] = -1
void preorder_parents(const Tree& t, int parent, int& next_id, std::vector<int>& parents) {
    int my_id = next_id++;
    parents[my_id] = parent;
    for (const Tree& c : t.children()) preorder_parents(c, my_id, next_id, parents);
}

Tree build_component(int root, const std::vector<std::vector<int>>& kids) {
    std::vector<Tree> children;
    for (int c : kids[root]) children.push_back(build_component(c, kids));
    return Tree(std::move(children));
}

} // namespace

ForestElement tree_antipode(const Tree& t) {
    int n = t.order();
    if (n > 24) throw domain_error("tree_antipode: tree order too large for edge-subset expansion");
    std::vector<int> parents(n, -1);
    int next_id = 0;
    preorder_parents(t, -1, next_id, parents);

    ForestElement out;
    int edges = n - 1;
    for (unsigned long mask = 0; mask < (1ul << edges); ++mask) {
        // edge i connects vertex i+1 to its parent; set bit = edge removed
        std::vector<std::vector<int>> kids(n);
        std::vector<int> roots = {0};
        for (int v = 1; v < n; ++v) {
            if (mask & (1ul << (v - 1)))
                roots.push_back(v);
            else
                kids[parents[v]].push_back(v);
        }
        std::vector<Tree> components;
        components.reserve(roots.size());
        for (int r : roots) components.push_back(build_component(r, kids));
        int sign = (roots.size() % 2 == 0) ? 1 : -1;
        out.add_term(Forest(std::move(components)), Rat(sign));
    }
    return out;
}

Tree graft(const Tree& u, const Tree& v) {
    std::vector<Tree> children = u.children();
    children.push_back(v);
    return Tree(std::move(children));
}

} // namespace hopfchar
