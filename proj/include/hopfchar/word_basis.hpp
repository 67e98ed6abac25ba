#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfchar/word.hpp"

namespace hopfchar {

/// Graded basis provider for the shuffle Hopf algebra over a declared finite
/// alphabet. Monomials are words graded by length; every word is its own
/// storage generator (the shuffle algebra's monomials are not products of a
/// smaller generating set that this toolkit tracks).
class WordBasis {
public:
    using Monomial = Word;
    using Coeff = CRat;

    WordBasis(std::vector<std::string> alphabet, int max_length);

    int max_degree() const { return max_length_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<Word>& monomials(int length) const;
    const std::vector<Word>& generators(int length) const { return monomials(length); }

    const WordTensor& coproduct(const Word& w) const;
    WordElement product(const Word& a, const Word& b) const { return shuffle(a, b); }
    WordElement antipode(const Word& w) const { return word_antipode_monomial(w); }
    static CRat counit(const Word& w) { return CRat(w.is_empty() ? 1 : 0); }
    static int degree(const Word& w) { return w.length(); }
    Word unit() const { return Word((int)alphabet_.size(), {}); }

    std::vector<Word> char_factors(const Word& w) const { return {w}; }

    bool compatible(const WordBasis& o) const { return alphabet_ == o.alphabet_; }
    std::string name() const { return "words"; }
    std::string monomial_to_text(const Word& w) const;
    Word monomial_from_text(const std::string& s) const;

private:
    std::vector<std::string> alphabet_;
    int max_length_;
    std::vector<std::vector<Word>> monomials_;
    std::map<Word, WordTensor> coproducts_;
};

} // namespace hopfchar
