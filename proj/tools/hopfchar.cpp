// hopfchar: batch computations in character groups of graded Hopf algebras
// (rooted trees and shuffle words). Every subcommand is a thin adapter over
// the library; outputs are deterministic tab-separated text.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hopfchar/birkhoff.hpp"
#include "hopfchar/butcher.hpp"
#include "hopfchar/flows.hpp"
#include "hopfchar/io.hpp"
#include "hopfchar/sampling.hpp"
#include "hopfchar/word_action.hpp"

using namespace hopfchar;

namespace {

int max_degree_cap() {
    const char* env = std::getenv("HOPFCHAR_MAX_DEGREE");
    if (!env) return 10;
    try {
        int cap = std::stoi(env);
        if (cap < 1) throw std::invalid_argument("");
        return cap;
    } catch (const std::exception&) {
        throw domain_error("HOPFCHAR_MAX_DEGREE must be a positive integer");
    }
}

void check_degree(int n) {
    int cap = max_degree_cap();
    if (n > cap)
        throw domain_error("degree " + std::to_string(n) + " exceeds the safety cap " +
                           std::to_string(cap) + " (set HOPFCHAR_MAX_DEGREE to raise it)");
    if (n < 0) throw domain_error("degree must be >= 0");
}

AnyFunctional read_checked(const std::string& path) {
    AnyFunctional f = read_character_file(path);
    std::visit([](const auto& typed) { check_degree(typed.truncation()); }, f);
    return f;
}

void emit(const AnyFunctional& f, const std::string& out_path) {
    if (out_path.empty())
        write_character(std::cout, f);
    else
        write_character_file(out_path, f);
}

std::vector<std::string> split_alphabet(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == ',') {
            if (i > start) out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

struct MonomialCommandArgs {
    std::string basis = "trees";
    std::string alphabet = "a,b,c";
    std::string monomial;
};

void add_monomial_options(CLI::App* cmd, MonomialCommandArgs& args) {
    cmd->add_option("--basis", args.basis, "trees or words")->check(CLI::IsMember({"trees", "words"}));
    cmd->add_option("--alphabet", args.alphabet, "comma-separated symbols (words basis)");
    cmd->add_option("monomial", args.monomial, "forest like [[]],[] or word like a,b")->required();
}

int run_selftest(unsigned long seed) {
    Sampler rng(seed);
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    const int N = 4;
    auto basis = std::make_shared<const TreeBasis>(N);
    RationalAlgebra alg;
    auto e = TreeRatFn::unit_character(basis, alg, N);

    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
        auto psi = rng.tree_infinitesimal(basis, alg, N);
        ok = functional_equal(log_star(exp_star(psi)), psi);
        auto phi = rng.tree_character(basis, alg, N);
        ok = ok && functional_equal(exp_star(log_star(phi)), phi);
        ok = ok && is_character(exp_star(psi)).ok;
    }
    report("exp/log bijection (trees, N=4)", ok);

    ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
        auto a = rng.tree_character(basis, alg, N);
        auto b = rng.tree_character(basis, alg, N);
        auto c = rng.tree_character(basis, alg, N);
        ok = functional_equal(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
        ok = ok && functional_equal(convolve(a, e), a);
        ok = ok && functional_equal(convolve(a, char_inverse(a)), e);
        for (int M = 1; M <= 3 && ok; ++M)
            ok = functional_equal(truncate(convolve(a, b), M),
                                  convolve(truncate(a, M), truncate(b, M)));
    }
    report("group axioms and truncation homomorphisms", ok);

    ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
        auto a = rng.tree_character(basis, alg, N);
        auto b = rng.tree_character(basis, alg, N);
        auto c = rng.tree_character(basis, alg, N);
        Rat dab = um_distance(a, b);
        ok = um_distance(a, c) <= std::max(dab, um_distance(b, c));
        ok = ok && um_distance(convolve(a, c), convolve(b, c)) == dab;
    }
    report("ultrametric: strong triangle and left-invariance", ok);

    ok = true;
    {
        WordBasis wb({"a", "b"}, N);
        for (int len1 = 0; len1 <= 3 && ok; ++len1)
            for (int len2 = 0; len1 + len2 <= 4 && ok; ++len2)
                for (const Word& u : wb.monomials(len1))
                    for (const Word& v : wb.monomials(len2))
                        if (shuffle(u, v) != shuffle(v, u)) ok = false;
    }
    report("shuffle commutativity (length <= 4)", ok);

    ok = true;
    {
        LaurentAlgebra lalg(2 * N, N);
        for (int i = 0; i < 5 && ok; ++i) {
            auto phi = rng.laurent_character(basis, lalg, N, 2);
            auto pair = birkhoff(phi);
            ok = functional_equal(convolve(pair.gamma_minus, phi), pair.gamma_plus);
            ok = ok && is_character(pair.gamma_minus).ok && is_character(pair.gamma_plus).ok;
        }
    }
    report("birkhoff recomposition (pole depth <= 2, N=4)", ok);

    ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
        auto curve = rng.linear_tree_curve(basis, N);
        ok = functional_equal(evolve(curve, Rat(0), Rat(1)), time_ordered_exp(curve, Rat(0), Rat(1)));
    }
    report("time-ordered exponential solves the evolution equation", ok);

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character groups of graded Hopf algebras: rooted trees and shuffle words"};
    app.require_subcommand(1);

    // trees
    auto* cmd_trees = app.add_subcommand("trees", "enumerate canonical rooted trees");
    bool trees_count = false;
    int trees_max = 0, trees_order = 0;
    cmd_trees->add_flag("--count", trees_count, "print counts instead of trees");
    cmd_trees->add_option("--max", trees_max, "orders 1..N (with --count)");
    cmd_trees->add_option("--order", trees_order, "list trees of one order");

    // coproduct / antipode
    MonomialCommandArgs cop_args, anti_args;
    auto* cmd_cop = app.add_subcommand("coproduct", "coproduct of a basis monomial");
    add_monomial_options(cmd_cop, cop_args);
    auto* cmd_anti = app.add_subcommand("antipode", "antipode of a basis monomial");
    add_monomial_options(cmd_anti, anti_args);

    // functional calculus
    std::string in_path, out_path, a_path, b_path;
    int degree = 0;
    auto* cmd_exp = app.add_subcommand("exp", "convolution exponential of an infinitesimal");
    cmd_exp->add_option("--input", in_path, "infinitesimal character file");
    cmd_exp->add_option("--degree", degree, "truncation for the zero input (no --input)");
    cmd_exp->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_log = app.add_subcommand("log", "convolution logarithm of a character");
    cmd_log->add_option("--input", in_path)->required();
    cmd_log->add_option("-o,--output", out_path);

    auto* cmd_bch = app.add_subcommand("bch", "Baker-Campbell-Hausdorff product");
    cmd_bch->add_option("--a", a_path)->required();
    cmd_bch->add_option("--b", b_path)->required();
    cmd_bch->add_option("-o,--output", out_path);

    auto* cmd_compose = app.add_subcommand("compose", "convolution product of two functionals");
    cmd_compose->add_option("--a", a_path)->required();
    cmd_compose->add_option("--b", b_path)->required();
    cmd_compose->add_option("-o,--output", out_path);

    auto* cmd_inverse = app.add_subcommand("inverse", "group inverse of a character");
    cmd_inverse->add_option("--input", in_path)->required();
    cmd_inverse->add_option("-o,--output", out_path);

    auto* cmd_um = app.add_subcommand("ultrametric", "order and distance of two functionals");
    cmd_um->add_option("--a", a_path)->required();
    cmd_um->add_option("--b", b_path)->required();

    // butcher layer
    std::string tableau_path;
    auto* cmd_rk = app.add_subcommand("rk-order", "order of a Runge-Kutta tableau");
    cmd_rk->add_option("--tableau", tableau_path)->required();
    cmd_rk->add_option("--degree", degree)->required();

    auto* cmd_flow = app.add_subcommand("exact-flow", "the exact-flow character");
    cmd_flow->add_option("--degree", degree)->required();
    cmd_flow->add_option("-o,--output", out_path);

    int composite_n = 1;
    auto* cmd_euler = app.add_subcommand("euler-composite", "n Euler steps of size 1/n");
    cmd_euler->add_option("--n", composite_n)->required();
    cmd_euler->add_option("--degree", degree)->required();
    cmd_euler->add_option("-o,--output", out_path);

    auto* cmd_sympl = app.add_subcommand("symplectic-check", "annihilation of the symplecticity ideal");
    cmd_sympl->add_option("--tableau", tableau_path)->required();
    cmd_sympl->add_option("--degree", degree)->required();

    std::string generators_path;
    bool symplectic_spec = false;
    auto* cmd_ideal = app.add_subcommand("ideal-check", "Hopf-ideal certificate for a generator set");
    cmd_ideal->add_flag("--symplectic", symplectic_spec, "use the symplecticity generators");
    cmd_ideal->add_option("--generators", generators_path, "file with one forest element per line");
    cmd_ideal->add_option("--degree", degree)->required();

    // flows
    std::string curve_path, t_end = "1", lo = "0", hi = "1";
    auto* cmd_evolve = app.add_subcommand("evolve", "solve eta' = eta * a(t) exactly");
    cmd_evolve->add_option("--curve", curve_path)->required();
    cmd_evolve->add_option("--t-end", t_end);
    cmd_evolve->add_option("-o,--output", out_path);

    auto* cmd_toexp = app.add_subcommand("toexp", "time-ordered exponential of a curve");
    cmd_toexp->add_option("--curve", curve_path)->required();
    cmd_toexp->add_option("--lo", lo);
    cmd_toexp->add_option("--hi", hi);
    cmd_toexp->add_option("-o,--output", out_path);

    // renormalisation
    std::string minus_path, plus_path;
    auto* cmd_birkhoff = app.add_subcommand("birkhoff", "Birkhoff factorisation by minimal subtraction");
    cmd_birkhoff->add_option("--input", in_path)->required();
    cmd_birkhoff->add_option("--degree", degree, "optional truncation before factoring");
    cmd_birkhoff->add_option("--minus-out", minus_path, "file for gamma_minus");
    cmd_birkhoff->add_option("--plus-out", plus_path, "file for gamma_plus");

    // word series
    std::string z_text, nu_path;
    auto* cmd_xi = app.add_subcommand("xi-act", "extended-word-series action on a word character");
    cmd_xi->add_option("--input", in_path)->required();
    cmd_xi->add_option("--z", z_text, "comma-separated complex rationals")->required();
    cmd_xi->add_option("--nu", nu_path)->required();
    cmd_xi->add_option("-o,--output", out_path);

    auto* cmd_growth = app.add_subcommand("growth", "per-degree geometric growth profile");
    cmd_growth->add_option("--input", in_path)->required();

    unsigned long seed = 1;
    auto* cmd_selftest = app.add_subcommand("selftest", "randomized property checks");
    cmd_selftest->add_option("--seed", seed, "RNG seed for reproducible runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2; // malformed invocation
    }

    try {
        if (*cmd_trees) {
            if (trees_count) {
                if (trees_max < 1) throw domain_error("--count needs --max N with N >= 1");
                check_degree(trees_max);
                for (int n = 1; n <= trees_max; ++n)
                    std::cout << (n > 1 ? " " : "") << enumerate_trees(n).size();
                std::cout << "\n";
            } else if (trees_order >= 1) {
                check_degree(trees_order);
                for (const Tree& t : enumerate_trees(trees_order)) std::cout << tree_to_text(t) << "\n";
            } else {
                throw domain_error("trees: use --count --max N or --order n");
            }
        } else if (*cmd_cop || *cmd_anti) {
            const MonomialCommandArgs& args = *cmd_cop ? cop_args : anti_args;
            bool want_coproduct = bool(*cmd_cop);
            if (args.basis == "trees") {
                Forest m = forest_from_text(args.monomial);
                check_degree(m.degree());
                TreeBasis basis(m.degree());
                if (want_coproduct)
                    for (const auto& [pair, c] : basis.coproduct(m).terms())
                        std::cout << forest_to_text(pair.first) << "\t" << forest_to_text(pair.second)
                                  << "\t" << rat_to_text(c) << "\n";
                else {
                    const ForestElement s = basis.antipode(m);
                    for (const auto& [f, c] : s.terms())
                        std::cout << forest_to_text(f) << "\t" << rat_to_text(c) << "\n";
                }
            } else {
                WordBasis probe(split_alphabet(args.alphabet), 0);
                Word m = probe.monomial_from_text(args.monomial);
                check_degree(m.length());
                WordBasis basis(split_alphabet(args.alphabet), m.length());
                if (want_coproduct)
                    for (const auto& [pair, c] : basis.coproduct(m).terms())
                        std::cout << basis.monomial_to_text(pair.first) << "\t"
                                  << basis.monomial_to_text(pair.second) << "\t" << crat_to_text(c)
                                  << "\n";
                else {
                    const WordElement s = basis.antipode(m);
                    for (const auto& [w, c] : s.terms())
                        std::cout << basis.monomial_to_text(w) << "\t" << crat_to_text(c) << "\n";
                }
            }
        } else if (*cmd_exp) {
            AnyFunctional input = [&]() -> AnyFunctional {
                if (!in_path.empty()) return read_checked(in_path);
                if (degree < 1) throw domain_error("exp: --input FILE or --degree N required");
                check_degree(degree);
                auto basis = std::make_shared<const TreeBasis>(degree);
                return TreeRatFn::zero(basis, RationalAlgebra{}, degree, FunctionalKind::infinitesimal);
            }();
            std::visit([&](const auto& f) { emit(AnyFunctional(exp_star(f)), out_path); }, input);
        } else if (*cmd_log) {
            std::visit([&](const auto& f) { emit(AnyFunctional(log_star(f)), out_path); },
                       read_checked(in_path));
        } else if (*cmd_bch || *cmd_compose) {
            AnyFunctional fa = read_checked(a_path);
            AnyFunctional fb = read_checked(b_path);
            bool want_bch = bool(*cmd_bch);
            std::visit(
                [&](const auto& a) {
                    using T = std::decay_t<decltype(a)>;
                    const T* b = std::get_if<T>(&fb);
                    if (!b) throw domain_error("inputs use different basis or target algebras");
                    emit(want_bch ? AnyFunctional(bch(a, *b)) : AnyFunctional(convolve(a, *b)),
                         out_path);
                },
                fa);
        } else if (*cmd_inverse) {
            std::visit([&](const auto& f) { emit(AnyFunctional(char_inverse(f)), out_path); },
                       read_checked(in_path));
        } else if (*cmd_um) {
            AnyFunctional fa = read_checked(a_path);
            AnyFunctional fb = read_checked(b_path);
            std::visit(
                [&](const auto& a) {
                    using T = std::decay_t<decltype(a)>;
                    const T* b = std::get_if<T>(&fb);
                    if (!b) throw domain_error("inputs use different basis or target algebras");
                    UmOrder o = um_order(sub(a, *b));
                    std::cout << "ord(a-b) = " << o.to_text(a.truncation()) << "\n";
                    std::cout << "d(a,b) = " << rat_to_text(um_distance(a, *b)) << "\n";
                },
                fa);
        } else if (*cmd_rk) {
            check_degree(degree);
            RKMethod m = read_rk_method_file(tableau_path);
            for (const std::string& w : m.consistency_warnings())
                std::cerr << "warning: " << w << "\n";
            auto basis = std::make_shared<const TreeBasis>(degree);
            auto a = rk_character(m, basis, RationalAlgebra{}, degree);
            std::cout << "order: " << order_of(a).to_text(degree) << "\n";
        } else if (*cmd_flow) {
            if (degree < 1) throw domain_error("exact-flow: --degree must be >= 1");
            check_degree(degree);
            auto basis = std::make_shared<const TreeBasis>(degree);
            emit(AnyFunctional(exact_flow(basis, RationalAlgebra{}, degree)), out_path);
        } else if (*cmd_euler) {
            if (degree < 1) throw domain_error("euler-composite: --degree must be >= 1");
            check_degree(degree);
            auto basis = std::make_shared<const TreeBasis>(degree);
            emit(AnyFunctional(euler_composite(basis, RationalAlgebra{}, composite_n, degree)),
                 out_path);
        } else if (*cmd_sympl) {
            if (degree < 2) throw domain_error("symplectic-check: --degree must be >= 2");
            check_degree(degree);
            RKMethod m = read_rk_method_file(tableau_path);
            auto basis = std::make_shared<const TreeBasis>(degree);
            auto spec = symplectic_ideal(*basis, degree);
            auto a = rk_character(m, basis, RationalAlgebra{}, degree);
            auto report = annihilates(a, spec, degree);
            if (report.ok) {
                std::cout << "symplectic: yes (annihilates the ideal through degree " << degree
                          << ")\n";
            } else {
                std::cout << "symplectic: no\n";
                std::cout << "worst residual\t" << report.worst_element << "\t" << report.worst_value
                          << "\n";
            }
        } else if (*cmd_ideal) {
            check_degree(degree);
            auto basis = std::make_shared<const TreeBasis>(degree);
            IdealSpec<TreeBasis> spec;
            if (symplectic_spec) {
                spec = symplectic_ideal(*basis, degree);
            } else if (!generators_path.empty()) {
                std::ifstream in(generators_path);
                if (!in) throw parse_error("cannot open '" + generators_path + "'");
                std::string line;
                long lineno = 0;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (line.empty() || line[0] == '#') continue;
                    try {
                        spec.generators.push_back(parse_forest_element(line));
                    } catch (const parse_error& e) {
                        throw parse_error(generators_path + ":" + std::to_string(lineno) + ": " +
                                          e.what());
                    }
                }
            } else {
                throw domain_error("ideal-check: --symplectic or --generators FILE required");
            }
            auto closure = ideal_closure(*basis, spec, degree);
            std::cout << "closure rank through degree " << degree << ": " << closure.size() << "\n";
            CheckResult res = is_hopf_ideal(*basis, spec, degree);
            if (res.ok)
                std::cout << "hopf ideal: yes\n";
            else
                std::cout << "hopf ideal: no\t" << res.detail << "\n";
        } else if (*cmd_evolve) {
            auto curve = read_curve_file(curve_path);
            check_degree(curve.truncation());
            emit(AnyFunctional(evolve(curve, rat_from_text(t_end))), out_path);
        } else if (*cmd_toexp) {
            auto curve = read_curve_file(curve_path);
            check_degree(curve.truncation());
            emit(AnyFunctional(time_ordered_exp(curve, rat_from_text(lo), rat_from_text(hi))),
                 out_path);
        } else if (*cmd_birkhoff) {
            AnyFunctional input = read_checked(in_path);
            const TreeLaurentFn* phi = std::get_if<TreeLaurentFn>(&input);
            if (!phi) throw domain_error("birkhoff: input must use the laurent target on trees");
            TreeLaurentFn working =
                (degree > 0 && degree < phi->truncation()) ? truncate(*phi, degree) : *phi;
            BirkhoffPair pair = birkhoff(working);
            if (!minus_path.empty()) write_character_file(minus_path, AnyFunctional(pair.gamma_minus));
            if (!plus_path.empty()) write_character_file(plus_path, AnyFunctional(pair.gamma_plus));
            std::cout << "tree\tcounterterm\trenormalized\n";
            for (const auto& row : counterterm_report(pair))
                std::cout << tree_to_text(row.tree) << "\t" << laurent_to_text(row.counterterm)
                          << "\t" << rat_to_text(row.renormalized) << "\n";
        } else if (*cmd_xi) {
            AnyFunctional input = read_checked(in_path);
            NuMatrix nu = read_nu_file(nu_path);
            std::vector<CRat> z = parse_crat_vector(z_text);
            if (const WordCRatFn* f = std::get_if<WordCRatFn>(&input))
                emit(AnyFunctional(xi_action(z, *f, nu)), out_path);
            else if (const WordCFloatFn* f2 = std::get_if<WordCFloatFn>(&input))
                emit(AnyFunctional(xi_action(z, *f2, nu)), out_path);
            else
                throw domain_error("xi-act: input must be a word-basis character");
        } else if (*cmd_growth) {
            AnyFunctional input = read_checked(in_path);
            if (const TreeRatFn* f = std::get_if<TreeRatFn>(&input))
                for (auto& [n, g] : growth_profile(*f))
                    std::cout << n << "\t" << detail::double_to_text(g) << "\n";
            else if (const TreeFloatFn* f2 = std::get_if<TreeFloatFn>(&input))
                for (auto& [n, g] : growth_profile(*f2))
                    std::cout << n << "\t" << detail::double_to_text(g) << "\n";
            else
                throw domain_error("growth: input must be a rational or float tree character");
        } else if (*cmd_selftest) {
            return run_selftest(seed);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
