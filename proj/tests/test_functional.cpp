#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfchar/functional.hpp"
#include "hopfchar/sampling.hpp"
#include "hopfchar/tree_basis.hpp"
#include "hopfchar/word_action.hpp"
#include "hopfchar/word_basis.hpp"

using namespace hopfchar;

namespace {

using TreeFn = Functional<TreeBasis, RationalAlgebra>;
using WordFn = Functional<WordBasis, ComplexRationalAlgebra>;

const auto tbasis = std::make_shared<const TreeBasis>(6);
const auto wbasis = std::make_shared<const WordBasis>(std::vector<std::string>{"a", "b"}, 4);
const RationalAlgebra qalg;
const ComplexRationalAlgebra cqalg;

Forest F(const std::string& s) { return forest_from_text(s); }

TreeFn euler_char(int N) {
    TreeFn::Table t;
    t.emplace(F("[]"), Rat(1));
    return TreeFn(tbasis, qalg, N, FunctionalKind::character, std::move(t));
}

TreeFn delta_dot(int N) { return TreeFn::delta(tbasis, qalg, N, F("[]"), Rat(1)); }

// phi_t(w) = prod of t over the letters / |w|!, a character for any letter
// weights t: the shuffle of u and v distributes (n+m choose n) equal terms.
WordFn word_char_family(const std::vector<Rat>& t, int N) {
    WordFn::Table table;
    for (int n = 1; n <= N; ++n)
        for (const Word& w : wbasis->monomials(n)) {
            Rat prod(1);
            for (int letter : w.letters()) prod *= t[letter];
            table.emplace(w, CRat(Rat(prod / rat_factorial(n))));
        }
    return WordFn(wbasis, cqalg, N, FunctionalKind::character, std::move(table));
}

} // namespace

TEST_CASE("convolution unit and worked values") {
    int N = 4;
    auto e = TreeFn::unit_character(tbasis, qalg, N);
    auto a = euler_char(N);
    CHECK(functional_equal(convolve(e, a), a));
    CHECK(functional_equal(convolve(a, e), a));

    CHECK(convolve(a, a).value(F("[[]]")) == Rat(1)); // 0 + 1*1 + 0

    auto d = delta_dot(N);
    CHECK(convolve(d, d).value(F("[],[]")) == Rat(2)); // cross term 2(. x .)
    CHECK(convolve(d, d).value(F("[[]]")) == Rat(1));
    CHECK(convolve(d, d).value(F("[]")) == Rat(0));

    CHECK_THROWS_AS(convolve(euler_char(3), euler_char(4)), domain_error);
}

TEST_CASE("character inverse via the antipode") {
    int N = 4;
    auto e = TreeFn::unit_character(tbasis, qalg, N);
    CHECK(functional_equal(char_inverse(e), e));

    auto a = euler_char(N);
    auto inv = char_inverse(a);
    CHECK(inv.value(F("[]")) == Rat(-1));
    CHECK(inv.value(F("[[]]")) == Rat(1)); // -a(t2) + a(.*.) = 0 + 1
    CHECK(functional_equal(convolve(a, inv), e));
    CHECK(functional_equal(convolve(inv, a), e));

    CHECK_THROWS_AS(char_inverse(delta_dot(N)), domain_error);
}

TEST_CASE("exp_star worked values") {
    int N = 4;
    auto zero = TreeFn::zero(tbasis, qalg, N, FunctionalKind::infinitesimal);
    CHECK(functional_equal(exp_star(zero), TreeFn::unit_character(tbasis, qalg, N)));

    auto flow = exp_star(delta_dot(N));
    CHECK(flow.kind() == FunctionalKind::character);
    CHECK(flow.value(F("[]")) == Rat(1));
    CHECK(flow.value(F("[[]]")) == Rat(1, 2));
    CHECK(flow.value(F("[[],[]]")) == Rat(1, 3)); // psi^{*3}(cherry) = 2, over 3!
    CHECK(flow.value(F("[[[]]]")) == Rat(1, 6));
    CHECK(bool(is_character(flow)));

    auto bad = materialize_general(euler_char(N)); // does not vanish on the unit
    CHECK_THROWS_AS(exp_star(bad), domain_error);
}

TEST_CASE("log_star worked values") {
    int N = 4;
    auto e = TreeFn::unit_character(tbasis, qalg, N);
    auto zero = TreeFn::zero(tbasis, qalg, N, FunctionalKind::infinitesimal);
    CHECK(functional_equal(log_star(e), zero));

    auto flow = exp_star(delta_dot(N));
    auto lg = log_star(flow);
    CHECK(lg.kind() == FunctionalKind::infinitesimal);
    CHECK(lg.value(F("[]")) == Rat(1));
    CHECK(lg.value(F("[[]]")) == Rat(0)); // 1/2 - (1/2)*1 = 0
    CHECK(functional_equal(lg, delta_dot(N)));

    CHECK_THROWS_AS(log_star(delta_dot(N)), domain_error);
}

TEST_CASE("exp/log are mutually inverse on random data") {
    int N = 4;
    Sampler rng(424242);
    for (int i = 0; i < 25; ++i) {
        auto psi = rng.tree_infinitesimal(tbasis, qalg, N);
        CHECK(functional_equal(log_star(exp_star(psi)), psi));
        auto phi = rng.tree_character(tbasis, qalg, N);
        auto lg = log_star(phi);
        CHECK(bool(is_infinitesimal(lg)));
        CHECK(functional_equal(exp_star(lg), phi));
    }
}

TEST_CASE("lie bracket: alternating, frozen values, Jacobi") {
    int N = 4;
    auto d1 = delta_dot(N);
    auto d2 = TreeFn::delta(tbasis, qalg, N, F("[[]]"), Rat(1));

    CHECK(functional_equal(lie_bracket(d1, d1), TreeFn::zero(tbasis, qalg, N, FunctionalKind::infinitesimal)));

    auto br = lie_bracket(d1, d2);
    CHECK(br.kind() == FunctionalKind::infinitesimal);
    CHECK(bool(is_infinitesimal(br)));
    // hand expansion over Delta(chain3) and Delta(cherry)
    CHECK(br.value(F("[[[]]]")) == Rat(0));
    CHECK(br.value(F("[[],[]]")) == Rat(2));

    Sampler rng(5150);
    for (int i = 0; i < 10; ++i) {
        auto x = rng.tree_infinitesimal(tbasis, qalg, 3);
        auto y = rng.tree_infinitesimal(tbasis, qalg, 3);
        auto z = rng.tree_infinitesimal(tbasis, qalg, 3);
        auto jac = add(add(lie_bracket(x, lie_bracket(y, z)), lie_bracket(y, lie_bracket(z, x))),
                       lie_bracket(z, lie_bracket(x, y)));
        CHECK(functional_equal(jac, TreeFn::zero(tbasis, qalg, 3, FunctionalKind::infinitesimal)));
    }
}

TEST_CASE("bch worked cases and degree-3 truncated identity") {
    int N = 4;
    auto zero = TreeFn::zero(tbasis, qalg, N, FunctionalKind::infinitesimal);
    Sampler rng(31337);
    auto psi = rng.tree_infinitesimal(tbasis, qalg, N);
    CHECK(functional_equal(bch(psi, zero), psi));
    CHECK(functional_equal(bch(zero, psi), psi));
    CHECK(functional_equal(bch(psi, scale(psi, Rat(-1))), zero));

    // deg(psi1) = 1, deg(psi2) = 2: through degree 3 only the 1/2 bracket
    // correction of the BCH series can contribute
    auto d1 = delta_dot(N);
    auto d2 = TreeFn::delta(tbasis, qalg, N, F("[[]]"), Rat(1));
    auto lhs = bch(d1, d2);
    auto rhs = add(add(d1, d2), scale(lie_bracket(d1, d2), Rat(1, 2)));
    for (int n = 0; n <= 3; ++n)
        for (const Forest& m : tbasis->monomials(n)) CHECK(lhs.value(m) == rhs.value(m));

    CHECK_THROWS_AS(bch(d1, euler_char(N)), domain_error);
}

TEST_CASE("ultrametric order and distance") {
    int N = 4;
    auto zero = TreeFn::zero(tbasis, qalg, N);
    CHECK(um_order(zero).saturated);
    CHECK(um_distance(euler_char(N), euler_char(N)) == Rat(0));

    auto e = TreeFn::unit_character(tbasis, qalg, N);
    auto a = euler_char(N);
    auto flow = exp_star(delta_dot(N)); // the "exact" method
    CHECK(um_order(sub(a, flow)).order == 1); // agree through degree 1, differ at t2
    CHECK(um_distance(a, flow) == Rat(1, 2));
    CHECK(um_distance(a, e) == Rat(1)); // a(.) = 1 already differs from u.eps

    auto d = delta_dot(N);
    CHECK(um_order(d).order == 0);
    CHECK(um_order(materialize_general(e)).order == -1);

    Sampler rng(808);
    for (int i = 0; i < 20; ++i) {
        auto f = rng.tree_character(tbasis, qalg, N);
        auto g = rng.tree_character(tbasis, qalg, N);
        auto h = rng.tree_character(tbasis, qalg, N);
        // strong triangle inequality
        Rat dfg = um_distance(f, g), dgh = um_distance(g, h), dfh = um_distance(f, h);
        CHECK(dfh <= std::max(dfg, dgh));
        // left-invariance of the order of first disagreement
        CHECK(um_distance(convolve(f, h), convolve(g, h)) == dfg);
        CHECK(um_distance(convolve(h, f), convolve(h, g)) == dfg);
    }
}

TEST_CASE("truncation maps") {
    int N = 4;
    auto a = euler_char(N);
    CHECK(functional_equal(truncate(a, N), a));
    CHECK_THROWS_AS(truncate(a, N + 1), domain_error);

    auto e0 = truncate(TreeFn::unit_character(tbasis, qalg, N), 0);
    CHECK(e0.truncation() == 0);
    CHECK(e0.value(F("1")) == Rat(1));

    Sampler rng(1001);
    for (int i = 0; i < 15; ++i) {
        auto f = rng.tree_character(tbasis, qalg, N);
        auto g = rng.tree_character(tbasis, qalg, N);
        for (int M = 1; M <= 3; ++M)
            CHECK(functional_equal(truncate(convolve(f, g), M), convolve(truncate(f, M), truncate(g, M))));
    }
}

TEST_CASE("kind checks with counterexamples") {
    int N = 4;
    auto e = TreeFn::unit_character(tbasis, qalg, N);
    CHECK(bool(is_character(e)));

    auto d = delta_dot(N);
    CHECK(bool(is_infinitesimal(d)));
    // the infinitesimal's actual values fail the character axioms at the unit
    auto check = is_character(materialize_general(d));
    CHECK_FALSE(check.ok);
    CHECK(!check.detail.empty());

    Sampler rng(9090);
    for (int i = 0; i < 10; ++i) {
        auto ex = exp_star(rng.tree_infinitesimal(tbasis, qalg, N));
        CHECK(bool(is_character(ex)));
        CHECK_FALSE(is_infinitesimal(ex).ok);
    }

    // a full-table functional that is multiplicative except at one product
    auto broken = exp_star(delta_dot(N)).with_value(F("[],[]"), Rat(7));
    CHECK_FALSE(is_character(broken).ok);
}

TEST_CASE("word characters: the letter-weight family") {
    int N = 4;
    std::vector<Rat> weights = {Rat(1, 2), Rat(-2, 3)};
    auto phi = word_char_family(weights, N);
    CHECK(bool(is_character(phi)));

    // its log is infinitesimal, and exp of the letter-supported infinitesimal
    // rebuilds the family
    auto lg = log_star(phi);
    CHECK(bool(is_infinitesimal(lg)));
    CHECK(functional_equal(exp_star(lg), phi));

    WordFn::Table t;
    for (const Word& w : wbasis->monomials(1)) t.emplace(w, CRat(weights[w.letters()[0]]));
    auto psi = WordFn(wbasis, cqalg, N, FunctionalKind::infinitesimal, std::move(t));
    CHECK(functional_equal(exp_star(psi), phi));

    // group structure over the word basis
    auto ew = WordFn::unit_character(wbasis, cqalg, N);
    CHECK(functional_equal(convolve(phi, char_inverse(phi)), ew));
}

TEST_CASE("xi action: identity, additivity, character preservation") {
    int N = 4;
    auto phi = word_char_family({Rat(1, 2), Rat(3)}, N);
    NuMatrix nu;
    nu.entries = {{CRat(Rat(1)), CRat(Rat(0), Rat(1, 2))}, {CRat(Rat(-1, 3)), CRat(Rat(2))}};

    // z = 0 leaves the character untouched, exactly
    std::vector<CRat> zero_z(2);
    CHECK(functional_equal(xi_action(zero_z, phi, nu), phi));

    // exact nonzero action: nu column for letter 'a' can be cancelled by z
    // only when the exponent is identically zero; anything else throws on the
    // exact complex-rational target
    std::vector<CRat> z = {CRat(Rat(1)), CRat(Rat(0))};
    CHECK_THROWS_AS(xi_action(z, phi, nu), domain_error);

    // on the complex-float target the action is a group action within 1e-9
    ComplexFloatAlgebra c64;
    WordFn::Table src;
    for (int n = 1; n <= N; ++n)
        for (const Word& w : wbasis->monomials(n)) src.emplace(w, phi.value(w));
    Functional<WordBasis, ComplexFloatAlgebra> phif(
        wbasis, c64, N, FunctionalKind::character, [&] {
            Functional<WordBasis, ComplexFloatAlgebra>::Table t;
            for (const auto& [w, v] : src) t.emplace(w, c64.from_complex(v));
            return t;
        }());
    std::vector<CRat> zw = {CRat(Rat(1, 3)), CRat(Rat(0), Rat(1, 2))};
    std::vector<CRat> zv = {CRat(Rat(-1, 5)), CRat(Rat(2, 7))};
    std::vector<CRat> zsum = {zw[0] + zv[0], zw[1] + zv[1]};
    auto once = xi_action(zsum, phif, nu);
    auto twice = xi_action(zw, xi_action(zv, phif, nu), nu);
    CHECK(functional_equal(once, twice));
    CHECK(bool(is_character(xi_action(zw, phif, nu))));
}

TEST_CASE("semidirect product convention") {
    int N = 3;
    NuMatrix nu;
    nu.entries = {{CRat(Rat(1)), CRat(Rat(-1))}};
    ComplexFloatAlgebra c64;
    using WFn = Functional<WordBasis, ComplexFloatAlgebra>;

    auto lift = [&](const WordFn& src) {
        WFn::Table t;
        for (int n = 1; n <= N; ++n)
            for (const Word& w : wbasis->monomials(n)) t.emplace(w, c64.from_complex(src.value(w)));
        return WFn(wbasis, c64, N, FunctionalKind::character, std::move(t));
    };
    ExtendedWordChar<ComplexFloatAlgebra> g1{lift(word_char_family({Rat(1, 2), Rat(1, 3)}, N)),
                                             {CRat(Rat(1, 2))}};
    ExtendedWordChar<ComplexFloatAlgebra> g2{lift(word_char_family({Rat(-1), Rat(2)}, N)),
                                             {CRat(Rat(0), Rat(1, 3))}};
    ExtendedWordChar<ComplexFloatAlgebra> g3{lift(word_char_family({Rat(3, 4), Rat(0)}, N)),
                                             {CRat(Rat(-2, 5))}};

    auto assoc_l = semidirect_mul(semidirect_mul(g1, g2, nu), g3, nu);
    auto assoc_r = semidirect_mul(g1, semidirect_mul(g2, g3, nu), nu);
    CHECK(functional_equal(assoc_l.chi, assoc_r.chi));
    for (std::size_t k = 0; k < assoc_l.z.size(); ++k) CHECK(assoc_l.z[k] == assoc_r.z[k]);

    auto id = semidirect_identity(g1.chi, 1);
    auto left_id = semidirect_mul(id, g1, nu);
    CHECK(functional_equal(left_id.chi, g1.chi));

    auto inv = semidirect_inverse(g1, nu);
    auto prod = semidirect_mul(g1, inv, nu);
    CHECK(functional_equal(prod.chi, id.chi));
    CHECK(prod.z[0] == CRat());
}
