#pragma once

#include <string>
#include <vector>

#include "hopfchar/combo.hpp"
#include "hopfchar/rational.hpp"

namespace hopfchar {

/// Word over a finite alphabet, stored as 0-based letter indices. The
/// alphabet size travels with the word so that mixed-alphabet operations can
/// be rejected.
class Word {
public:
    Word() : alphabet_size_(0) {} // empty word over an unspecified alphabet
    Word(int alphabet_size, std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return (int)letters_.size(); }
    int alphabet_size() const { return alphabet_size_; }
    bool is_empty() const { return letters_.empty(); }

    Word reversed() const;
    Word prefix(int k) const; // first k letters
    Word suffix(int k) const; // letters from position k on

    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    int alphabet_size_;
    std::vector<int> letters_;
};

using WordElement = Combo<Word, CRat>;
using WordTensor = Combo<TensorKey<Word>, CRat>;

/// Sum over all interleavings of w1 and w2 that preserve each word's internal
/// order, counted with multiplicity. Throws on alphabet mismatch.
WordElement shuffle(const Word& w1, const Word& w2);

/// Deconcatenation coproduct of a single word: all prefix/suffix splits.
WordTensor word_coproduct(const Word& w);

/// Antipode of the shuffle Hopf algebra: (-1)^n times the reversed word.
WordElement word_antipode_monomial(const Word& w);

// Linear extensions to elements.
WordElement shuffle(const WordElement& x, const WordElement& y);
WordTensor deconcat(const WordElement& x);
WordElement word_antipode(const WordElement& x);
CRat word_counit(const WordElement& x);

} // namespace hopfchar
