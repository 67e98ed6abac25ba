#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfchar/butcher.hpp"
#include "hopfchar/ideal.hpp"
#include "hopfchar/sampling.hpp"
#include "hopfchar/tree_basis.hpp"

using namespace hopfchar;

namespace {

const auto tbasis = std::make_shared<const TreeBasis>(4);
const RationalAlgebra qalg;

Forest F(const std::string& s) { return forest_from_text(s); }

} // namespace

TEST_CASE("empty spec") {
    IdealSpec<TreeBasis> spec;
    CHECK(ideal_closure(*tbasis, spec, 4).empty());
    CHECK(bool(is_hopf_ideal(*tbasis, spec, 4)));
}

TEST_CASE("closure of the single-node ideal at M=2") {
    IdealSpec<TreeBasis> spec;
    spec.generators.push_back(ForestElement::monomial(F("[]")));
    auto closure = ideal_closure(*tbasis, spec, 2);
    REQUIRE(closure.size() == 2);
    CHECK(closure[0] == ForestElement::monomial(F("[]")));
    CHECK(closure[1] == ForestElement::monomial(F("[],[]")));

    // the multiples of the single node form a Hopf ideal: the coproduct of
    // x*[] keeps a [] factor on one leg and S just flips signs
    CHECK(bool(is_hopf_ideal(*tbasis, spec, 4)));
}

TEST_CASE("generators must lie in ker eps") {
    IdealSpec<TreeBasis> spec;
    ForestElement g;
    g.add_term(F("1"), Rat(1));
    g.add_term(F("[]"), Rat(-1));
    spec.generators.push_back(g);
    CHECK_THROWS_AS(ideal_closure(*tbasis, spec, 2), domain_error);
    CHECK_THROWS_AS(is_hopf_ideal(*tbasis, spec, 2), domain_error);
}

TEST_CASE("the ideal generated by the 2-chain alone is not a Hopf ideal") {
    IdealSpec<TreeBasis> spec;
    spec.generators.push_back(ForestElement::monomial(F("[[]]")));
    auto check = is_hopf_ideal(*tbasis, spec, 3);
    CHECK_FALSE(check.ok); // Delta([[]]) has the . (x) . term, and . is not in J
    CHECK(check.detail.find("coproduct") != std::string::npos);
}

TEST_CASE("symplecticity ideal: generators, closure dimension, Hopf property") {
    auto spec = symplectic_ideal(*tbasis, 4);

    ForestElement omega2;
    omega2.add_term(F("[[]]"), Rat(2));
    omega2.add_term(F("[],[]"), Rat(-1));
    REQUIRE(!spec.generators.empty());
    CHECK(spec.generators.front() == omega2);

    // degree-<=3 closure: omega(.,.), omega(.,.)*dot, omega(.,t2) -- the
    // degree-3 component is 2-dimensional
    auto closure3 = ideal_closure(*tbasis, spec, 3);
    CHECK(closure3.size() == 3);
    int deg3 = 0;
    for (const auto& x : closure3)
        if (detail::element_max_degree<TreeBasis>(x) == 3) ++deg3;
    CHECK(deg3 == 2);

    CHECK(bool(is_hopf_ideal(*tbasis, spec, 4)));
}

TEST_CASE("annihilation: exact flow and midpoint pass, forward Euler fails at -1") {
    auto spec = symplectic_ideal(*tbasis, 4);

    auto flow = exact_flow(tbasis, qalg, 4);
    CHECK(bool(annihilates(flow, spec, 4)));

    auto midpoint = rk_character(implicit_midpoint(), tbasis, qalg, 4);
    CHECK(bool(annihilates(midpoint, spec, 4)));

    auto euler = rk_character(forward_euler(), tbasis, qalg, 4);
    auto report = annihilates(euler, spec, 4);
    CHECK_FALSE(report.ok);
    CHECK(report.worst_value == "-1"); // 2 a(t2) - a(.)^2 on the degree-2 generator
    CHECK(annihilates(euler, spec, 2).worst_value == "-1");

    // u.eps annihilates any spec with generators in ker eps
    auto e = Functional<TreeBasis, RationalAlgebra>::unit_character(tbasis, qalg, 4);
    CHECK(bool(annihilates(e, spec, 4)));
}

TEST_CASE("the annihilator of a verified Hopf ideal is a subgroup") {
    auto spec = symplectic_ideal(*tbasis, 4);
    REQUIRE(bool(is_hopf_ideal(*tbasis, spec, 4)));

    auto flow = exact_flow(tbasis, qalg, 4);
    auto midpoint = rk_character(implicit_midpoint(), tbasis, qalg, 4);
    CHECK(bool(annihilates(convolve(flow, midpoint), spec, 4)));
    CHECK(bool(annihilates(convolve(midpoint, flow), spec, 4)));
    CHECK(bool(annihilates(char_inverse(midpoint), spec, 4)));
    CHECK(bool(annihilates(char_inverse(flow), spec, 4)));
}

TEST_CASE("row reduction is exact over rationals") {
    // a dependent family collapses to its true rank
    IdealSpec<TreeBasis> spec;
    ForestElement g1, g2, g3;
    g1.add_term(F("[]"), Rat(1, 3));
    g2.add_term(F("[]"), Rat(-2));
    g3.add_term(F("[]"), Rat(1));
    g3.add_term(F("[[]]"), Rat(1));
    spec.generators = {g1, g2, g3};
    auto closure = ideal_closure(*tbasis, spec, 1);
    CHECK(closure.size() == 1); // only the degree-1 span survives at M=1
}
