#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hopfchar/butcher.hpp"
#include "hopfchar/flows.hpp"
#include "hopfchar/functional.hpp"
#include "hopfchar/tree_basis.hpp"
#include "hopfchar/word_action.hpp"
#include "hopfchar/word_basis.hpp"

namespace hopfchar {

/// Declared target algebra of a character file.
struct TargetSpec {
    enum class Kind { rational, floating, complex_rational, complex_floating, laurent };
    Kind kind = Kind::rational;
    double tol = 1e-9;
    int pole_bound = 0;
    int max_exp = 0;

    static TargetSpec parse(const std::string& text);
    std::string to_text() const;
};

using TreeRatFn = Functional<TreeBasis, RationalAlgebra>;
using TreeFloatFn = Functional<TreeBasis, FloatAlgebra>;
using TreeLaurentFn = Functional<TreeBasis, LaurentAlgebra>;
using WordCRatFn = Functional<WordBasis, ComplexRationalAlgebra>;
using WordCFloatFn = Functional<WordBasis, ComplexFloatAlgebra>;

using AnyFunctional =
    std::variant<TreeRatFn, TreeFloatFn, TreeLaurentFn, WordCRatFn, WordCFloatFn>;

// Character files: "basis:", "alphabet:" (words only), "target:",
// "truncation:", "kind:" headers, then one "monomial<TAB>value" line per
// stored entry. '#' lines and blank lines are ignored.
AnyFunctional read_character(std::istream& in, const std::string& origin = "<stream>");
AnyFunctional read_character_file(const std::string& path);
void write_character(std::ostream& out, const AnyFunctional& f);
void write_character_file(const std::string& path, const AnyFunctional& f);
std::string character_to_text(const AnyFunctional& f);

template <class Basis, class Alg>
void write_character_typed(std::ostream& out, const Functional<Basis, Alg>& f);

// RK tableau: stage count, then s rows of A, then the b row, then the c row.
RKMethod read_rk_method(std::istream& in, const std::string& origin = "<stream>");
RKMethod read_rk_method_file(const std::string& path);

// Piecewise-polynomial curve of infinitesimal characters over the rational
// tree target: shared headers, "breakpoints:", then per piece one
// "coeff: <power>" block per polynomial coefficient.
PolyCurve<TreeBasis, RationalAlgebra> read_curve(std::istream& in,
                                                 const std::string& origin = "<stream>");
PolyCurve<TreeBasis, RationalAlgebra> read_curve_file(const std::string& path);

// nu table: "d: <rows>" then d whitespace-separated rows of complex rationals.
NuMatrix read_nu(std::istream& in, const std::string& origin = "<stream>");
NuMatrix read_nu_file(const std::string& path);

/// Element syntax: whitespace-separated "coeff*monomial" terms, optional "+"
/// tokens between them, bare monomials meaning coefficient 1.
ForestElement parse_forest_element(const std::string& text);

std::vector<CRat> parse_crat_vector(const std::string& text); // comma-separated

} // namespace hopfchar
