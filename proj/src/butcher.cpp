#include "hopfchar/butcher.hpp"

#include <map>

namespace hopfchar {

void RKMethod::validate() const {
    if (stages < 1) throw domain_error("rk method: needs at least one stage");
    if ((int)A.size() != stages || (int)b.size() != stages || (int)c.size() != stages)
        throw domain_error("rk method: A/b/c dimensions do not match the stage count");
    for (const auto& row : A)
        if ((int)row.size() != stages) throw domain_error("rk method: A is not square");
}

std::vector<std::string> RKMethod::consistency_warnings() const {
    std::vector<std::string> out;
    for (int i = 0; i < stages; ++i) {
        Rat row_sum(0);
        for (int j = 0; j < stages; ++j) row_sum += A[i][j];
        if (row_sum != c[i])
            out.push_back("stage " + std::to_string(i + 1) + ": c = " + rat_to_text(c[i]) +
                          " but row sum of A = " + rat_to_text(row_sum));
    }
    return out;
}

RKMethod forward_euler() { return {1, {{Rat(0)}}, {Rat(1)}, {Rat(0)}}; }

RKMethod implicit_midpoint() { return {1, {{Rat(1, 2)}}, {Rat(1)}, {Rat(1, 2)}}; }

RKMethod classical_rk4() {
    RKMethod m;
    m.stages = 4;
    m.A = {{Rat(0), Rat(0), Rat(0), Rat(0)},
           {Rat(1, 2), Rat(0), Rat(0), Rat(0)},
           {Rat(0), Rat(1, 2), Rat(0), Rat(0)},
           {Rat(0), Rat(0), Rat(1), Rat(0)}};
    m.b = {Rat(1, 6), Rat(1, 3), Rat(1, 3), Rat(1, 6)};
    m.c = {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)};
    return m;
}

RKMethod compose_methods(const RKMethod& first, const RKMethod& second, const Rat& h1, const Rat& h2) {
    first.validate();
    second.validate();
    int s1 = first.stages, s2 = second.stages;
    RKMethod m;
    m.stages = s1 + s2;
    m.A.assign(m.stages, std::vector<Rat>(m.stages, Rat(0)));
    for (int i = 0; i < s1; ++i)
        for (int j = 0; j < s1; ++j) m.A[i][j] = Rat(h1 * first.A[i][j]);
    for (int i = 0; i < s2; ++i) {
        for (int j = 0; j < s1; ++j) m.A[s1 + i][j] = Rat(h1 * first.b[j]);
        for (int j = 0; j < s2; ++j) m.A[s1 + i][s1 + j] = Rat(h2 * second.A[i][j]);
    }
    for (int j = 0; j < s1; ++j) m.b.push_back(Rat(h1 * first.b[j]));
    for (int j = 0; j < s2; ++j) m.b.push_back(Rat(h2 * second.b[j]));
    for (int i = 0; i < s1; ++i) m.c.push_back(Rat(h1 * first.c[i]));
    for (int i = 0; i < s2; ++i) m.c.push_back(Rat(h1 + h2 * second.c[i]));
    return m;
}

RKMethod permute_stages(const RKMethod& m, const std::vector<int>& perm) {
    m.validate();
    if ((int)perm.size() != m.stages) throw domain_error("permute_stages: permutation size mismatch");
    RKMethod r;
    r.stages = m.stages;
    r.A.assign(m.stages, std::vector<Rat>(m.stages, Rat(0)));
    r.b.resize(m.stages);
    r.c.resize(m.stages);
    for (int i = 0; i < m.stages; ++i) {
        r.b[i] = m.b[perm[i]];
        r.c[i] = m.c[perm[i]];
        for (int j = 0; j < m.stages; ++j) r.A[i][j] = m.A[perm[i]][perm[j]];
    }
    return r;
}

namespace {

// stage vector phi(tree), memoized per tree
const std::vector<Rat>& stage_weights(const RKMethod& m, const Tree& t,
                                      std::map<Tree, std::vector<Rat>>& memo) {
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    std::vector<Rat> phi(m.stages, Rat(1));
    for (const Tree& child : t.children()) {
        const std::vector<Rat>& cphi = stage_weights(m, child, memo);
        for (int i = 0; i < m.stages; ++i) {
            Rat dot(0);
            for (int j = 0; j < m.stages; ++j) dot += m.A[i][j] * cphi[j];
            phi[i] *= dot;
        }
    }
    return memo.emplace(t, std::move(phi)).first->second;
}

} // namespace

std::vector<std::pair<Tree, Rat>> elementary_weights(const RKMethod& m, int max_order) {
    m.validate();
    std::map<Tree, std::vector<Rat>> memo;
    std::vector<std::pair<Tree, Rat>> out;
    for (int n = 1; n <= max_order; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            const std::vector<Rat>& phi = stage_weights(m, t, memo);
            Rat w(0);
            for (int i = 0; i < m.stages; ++i) w += m.b[i] * phi[i];
            out.emplace_back(t, w);
        }
    return out;
}

template <class Alg>
Functional<TreeBasis, Alg> rk_character(const RKMethod& m, std::shared_ptr<const TreeBasis> basis,
                                        Alg alg, int truncation) {
    typename Functional<TreeBasis, Alg>::Table table;
    for (auto& [tree, weight] : elementary_weights(m, truncation))
        table.emplace(Forest(tree), alg.from_rational(weight));
    return Functional<TreeBasis, Alg>(std::move(basis), std::move(alg), truncation,
                                      FunctionalKind::character, std::move(table));
}

template Functional<TreeBasis, RationalAlgebra> rk_character(const RKMethod&,
                                                             std::shared_ptr<const TreeBasis>,
                                                             RationalAlgebra, int);
template Functional<TreeBasis, FloatAlgebra> rk_character(const RKMethod&,
                                                          std::shared_ptr<const TreeBasis>,
                                                          FloatAlgebra, int);

IdealSpec<TreeBasis> symplectic_ideal(const TreeBasis& basis, int truncation) {
    if (truncation < 2) throw domain_error("symplectic_ideal: needs truncation >= 2");
    if (truncation > basis.max_degree())
        throw domain_error("symplectic_ideal: truncation exceeds the basis degree limit");
    IdealSpec<TreeBasis> spec;
    for (int du = 1; du <= truncation - 1; ++du)
        for (int dv = du; du + dv <= truncation; ++dv)
            for (const Tree& u : enumerate_trees(du))
                for (const Tree& v : enumerate_trees(dv)) {
                    if (du == dv && v < u) continue;
                    ForestElement omega;
                    omega.add_term(Forest(graft(u, v)), Rat(1));
                    omega.add_term(Forest(graft(v, u)), Rat(1));
                    omega.add_term(Forest(u).times(Forest(v)), Rat(-1));
                    if (!omega.empty()) spec.generators.push_back(std::move(omega));
                }
    return spec;
}

} // namespace hopfchar
