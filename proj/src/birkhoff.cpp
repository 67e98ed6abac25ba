#include "hopfchar/birkhoff.hpp"

#include <map>

namespace hopfchar {

BirkhoffPair birkhoff(const LaurentChar& phi) {
    if (phi.kind() != FunctionalKind::character)
        throw domain_error("birkhoff: input must be a character");
    const LaurentAlgebra& alg = phi.alg();
    const TreeBasis& basis = phi.basis();
    int N = phi.truncation();
    if (alg.pole_bound < N)
        throw domain_error("birkhoff: pole bound " + std::to_string(alg.pole_bound) +
                           " is below the truncation degree " + std::to_string(N));

    std::map<Forest, LaurentSeries> minus_values; // on trees, by increasing order
    auto minus_on_forest = [&](const Forest& f) {
        LaurentSeries acc = alg.one();
        for (const Tree& t : f.trees()) {
            auto it = minus_values.find(Forest(t));
            if (it == minus_values.end()) return alg.zero();
            acc = alg.mul(acc, it->second);
        }
        return acc;
    };

    typename LaurentChar::Table minus_table, plus_table;
    for (int n = 1; n <= N; ++n)
        for (const Forest& tau : basis.generators(n)) {
            // Bogoliubov preparation over the reduced coproduct
            LaurentSeries prepared = phi.value(tau);
            for (const auto& [pair, c] : basis.coproduct(tau).terms()) {
                if (pair.first.degree() == 0 || pair.second.degree() == 0) continue;
                LaurentSeries term = alg.mul(minus_on_forest(pair.first), phi.value(pair.second));
                term = alg.mul(term, alg.from_rational(c));
                prepared = alg.add(prepared, term);
            }
            auto [pole, regular] = ms_split(prepared);
            minus_values.emplace(tau, -pole);
            minus_table.emplace(tau, -pole);
            plus_table.emplace(tau, regular);
        }

    return {LaurentChar(phi.basis_ptr(), alg, N, FunctionalKind::character, std::move(minus_table)),
            LaurentChar(phi.basis_ptr(), alg, N, FunctionalKind::character, std::move(plus_table))};
}

std::vector<CountertermRow> counterterm_report(const BirkhoffPair& pair) {
    std::vector<CountertermRow> rows;
    const TreeBasis& basis = pair.gamma_minus.basis();
    for (int n = 1; n <= pair.truncation(); ++n)
        for (const Forest& tau : basis.generators(n)) {
            LaurentSeries minus = pair.gamma_minus.value(tau);
            LaurentSeries plus = pair.gamma_plus.value(tau);
            rows.push_back({tau.trees().front(), minus, plus.coefficient(0)});
        }
    return rows;
}

} // namespace hopfchar
