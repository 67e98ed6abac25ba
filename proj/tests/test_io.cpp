#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hopfchar/butcher.hpp"
#include "hopfchar/io.hpp"
#include "hopfchar/sampling.hpp"

using namespace hopfchar;

namespace {

template <class Basis, class Alg>
void check_roundtrip(const Functional<Basis, Alg>& f) {
    std::ostringstream out;
    write_character_typed(out, f);
    std::istringstream in(out.str());
    AnyFunctional back = read_character(in, "<roundtrip>");
    auto* typed = std::get_if<Functional<Basis, Alg>>(&back);
    REQUIRE(typed != nullptr);
    CHECK(typed->kind() == f.kind());
    CHECK(typed->truncation() == f.truncation());
    CHECK(functional_equal(*typed, f));
    // byte-identical re-serialization
    std::ostringstream again;
    write_character_typed(again, *typed);
    CHECK(again.str() == out.str());
}

} // namespace

TEST_CASE("character files round-trip for every target") {
    Sampler rng(2718);
    auto tb = std::make_shared<const TreeBasis>(4);

    check_roundtrip(rng.tree_character(tb, RationalAlgebra{}, 4));
    check_roundtrip(rng.tree_infinitesimal(tb, RationalAlgebra{}, 4));
    check_roundtrip(exp_star(rng.tree_infinitesimal(tb, RationalAlgebra{}, 3)));
    check_roundtrip(rng.tree_character(tb, FloatAlgebra{}, 4));
    check_roundtrip(rng.tree_character(tb, FloatAlgebra{1e-6}, 4));
    check_roundtrip(rng.laurent_character(tb, LaurentAlgebra(8, 4), 4, 2));
    check_roundtrip(Functional<TreeBasis, RationalAlgebra>::unit_character(tb, {}, 4));

    auto wb = std::make_shared<const WordBasis>(std::vector<std::string>{"a", "b", "c"}, 3);
    Functional<WordBasis, ComplexRationalAlgebra>::Table t;
    for (int n = 1; n <= 3; ++n)
        for (const Word& w : wb->monomials(n))
            t.emplace(w, CRat(rng.small_rat(), rng.small_rat()));
    check_roundtrip(Functional<WordBasis, ComplexRationalAlgebra>(wb, {}, 3,
                                                                  FunctionalKind::character, t));

    Functional<WordBasis, ComplexFloatAlgebra>::Table tf;
    ComplexFloatAlgebra c64;
    for (const auto& [w, v] : t) tf.emplace(w, c64.from_complex(v));
    check_roundtrip(Functional<WordBasis, ComplexFloatAlgebra>(wb, c64, 3,
                                                               FunctionalKind::character, tf));
}

TEST_CASE("malformed character files report line numbers") {
    auto expect_fail = [](const std::string& content, const std::string& needle) {
        std::istringstream in(content);
        try {
            read_character(in, "bad.char");
            FAIL("expected parse_error for: " << content);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("basis: trees\ntruncation: 2\nkind: character\n", "target");
    expect_fail("basis: trees\ntarget: rational\ntruncation: 2\nkind: character\n[]broken\n",
                "bad.char:5");
    expect_fail("basis: trees\ntarget: rational\ntruncation: 2\nkind: character\n[]\tx/y\n",
                "bad.char:5");
    expect_fail("basis: trees\ntarget: rational\ntruncation: 1\nkind: character\n[[]]\t1\n",
                "truncation");
    expect_fail("basis: words\ntarget: complex-rational\ntruncation: 1\nkind: character\n",
                "alphabet");
    expect_fail("basis: trees\ntarget: laurent(4)\ntruncation: 1\nkind: character\n", "laurent");
    expect_fail("basis: trees\ntarget: complex-rational\ntruncation: 1\nkind: general\n",
                "trees basis supports");
    expect_fail("basis: trees\ntarget: rational\ntruncation: 2\nkind: character\n[]\t1\n[]\t2\n",
                "duplicate");
}

TEST_CASE("target spec text forms") {
    CHECK(TargetSpec::parse("rational").kind == TargetSpec::Kind::rational);
    CHECK(TargetSpec::parse("float").tol == 1e-9);
    CHECK(TargetSpec::parse("float(1e-06)").tol == 1e-6);
    CHECK(TargetSpec::parse("laurent(8,4)").pole_bound == 8);
    CHECK(TargetSpec::parse("complex-float(1e-12)").tol == 1e-12);
    CHECK_THROWS_AS(TargetSpec::parse("laurent(8)"), parse_error);
    CHECK_THROWS_AS(TargetSpec::parse("integer"), parse_error);
    CHECK(TargetSpec::parse(TargetSpec::parse("float(1e-06)").to_text()).tol == 1e-6);
}

TEST_CASE("rk tableau files") {
    std::istringstream in("# classical rk4\n4\n0 0 0 0\n1/2 0 0 0\n0 1/2 0 0\n0 0 1 0\n"
                          "1/6 1/3 1/3 1/6\n0 1/2 1/2 1\n");
    RKMethod m = read_rk_method(in, "rk4.tab");
    CHECK(m.stages == 4);
    CHECK(m.A[1][0] == Rat(1, 2));
    CHECK(m.b[0] == Rat(1, 6));
    auto tb = std::make_shared<const TreeBasis>(5);
    CHECK(functional_equal(rk_character(m, tb, RationalAlgebra{}, 5),
                           rk_character(classical_rk4(), tb, RationalAlgebra{}, 5)));

    std::istringstream bad("2\n0 0\n1 0\n1/2 1/2\n");
    CHECK_THROWS_AS(read_rk_method(bad, "short.tab"), parse_error);
    std::istringstream ragged("2\n0\n1 0\n1/2 1/2\n0 1\n");
    try {
        read_rk_method(ragged, "ragged.tab");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("ragged.tab:2") != std::string::npos);
    }
}

TEST_CASE("curve files") {
    std::string text =
        "basis: trees\n"
        "target: rational\n"
        "truncation: 3\n"
        "breakpoints: 0,1/2,1\n"
        "piece: 0\n"
        "coeff: 0\n"
        "[]\t1\n"
        "coeff: 1\n"
        "[[]]\t-1/3\n"
        "piece: 1\n"
        "coeff: 0\n"
        "[]\t2\n";
    std::istringstream in(text);
    auto curve = read_curve(in, "curve.txt");
    CHECK(curve.truncation() == 3);
    CHECK(curve.breakpoints().size() == 3);
    REQUIRE(curve.pieces().size() == 2);
    CHECK(curve.pieces()[0].size() == 2);
    CHECK(curve.pieces()[0][1].value(forest_from_text("[[]]")) == Rat(-1, 3));
    CHECK_NOTHROW(evolve(curve, Rat(1)));

    std::istringstream bad("basis: trees\ntarget: float\ntruncation: 2\nbreakpoints: 0,1\n"
                           "piece: 0\ncoeff: 0\n[]\t1\n");
    CHECK_THROWS_AS(read_curve(bad, "bad.curve"), parse_error);

    // character values in a curve block must be infinitesimal
    std::istringstream unit_val("basis: trees\ntarget: rational\ntruncation: 2\nbreakpoints: 0,1\n"
                                "piece: 0\ncoeff: 0\n1\t1\n");
    CHECK_THROWS_AS(read_curve(unit_val, "unit.curve"), parse_error);
}

TEST_CASE("nu files and z vectors") {
    std::istringstream in("d: 2\n1 1/2+1/3*i 0\n-1 2*i 1/5\n");
    NuMatrix nu = read_nu(in, "nu.txt");
    CHECK(nu.dimension() == 2);
    CHECK(nu.alphabet_size() == 3);
    CHECK(nu.entries[0][1] == CRat(Rat(1, 2), Rat(1, 3)));
    CHECK(nu.entries[1][1] == CRat(Rat(0), Rat(2)));

    auto z = parse_crat_vector("1/2, -1/3*i, 2");
    REQUIRE(z.size() == 3);
    CHECK(z[1] == CRat(Rat(0), Rat(-1, 3)));

    std::istringstream ragged("d: 2\n1 2\n3\n");
    CHECK_THROWS_AS(read_nu(ragged, "nu.bad"), parse_error);
}

TEST_CASE("forest element expressions") {
    ForestElement omega = parse_forest_element("2*[[]] + -1*[],[]");
    ForestElement expected;
    expected.add_term(forest_from_text("[[]]"), Rat(2));
    expected.add_term(forest_from_text("[],[]"), Rat(-1));
    CHECK(omega == expected);
    CHECK(parse_forest_element("[[]]") == ForestElement::monomial(forest_from_text("[[]]")));
    CHECK_THROWS_AS(parse_forest_element("2*"), parse_error);
}

TEST_CASE("complex rational text forms") {
    for (const char* s : {"0", "1/2", "-3", "1/2+1/3*i", "1/2-1/3*i", "-1/2*i", "2*i"}) {
        CRat z = crat_from_text(s);
        CHECK(crat_from_text(crat_to_text(z)) == z);
    }
    CHECK(crat_to_text(CRat(Rat(1, 2), Rat(-1, 3))) == "1/2-1/3*i");
    CHECK_THROWS_AS(crat_from_text("i"), parse_error);
    CHECK_THROWS_AS(crat_from_text("1+2"), parse_error);
}
