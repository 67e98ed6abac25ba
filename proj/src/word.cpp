#include "hopfchar/word.hpp"

#include <algorithm>

#include "hopfchar/errors.hpp"

namespace hopfchar {

Word::Word(int alphabet_size, std::vector<int> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
    if (alphabet_size_ <= 0) throw domain_error("word: alphabet must be non-empty");
    for (int l : letters_)
        if (l < 0 || l >= alphabet_size_)
            throw domain_error("word: letter index " + std::to_string(l) + " outside alphabet of size " +
                               std::to_string(alphabet_size_));
}

Word Word::reversed() const {
    std::vector<int> l(letters_.rbegin(), letters_.rend());
    return Word(alphabet_size_ == 0 ? 1 : alphabet_size_, std::move(l));
}

Word Word::prefix(int k) const {
    return Word(alphabet_size_ == 0 ? 1 : alphabet_size_,
                std::vector<int>(letters_.begin(), letters_.begin() + k));
}

Word Word::suffix(int k) const {
    return Word(alphabet_size_ == 0 ? 1 : alphabet_size_,
                std::vector<int>(letters_.begin() + k, letters_.end()));
}

namespace {

void shuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                 std::vector<int>& acc, int alphabet, WordElement& out) {
    if (i == a.size() && j == b.size()) {
        out.add_term(Word(alphabet, acc), CRat(1));
        return;
    }
    if (i < a.size()) {
        acc.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, acc, alphabet, out);
        acc.pop_back();
    }
    if (j < b.size()) {
        acc.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, acc, alphabet, out);
        acc.pop_back();
    }
}

int common_alphabet(const Word& w1, const Word& w2) {
    int a1 = w1.alphabet_size(), a2 = w2.alphabet_size();
    if (a1 == 0) return a2 == 0 ? 1 : a2; // empty words adapt
    if (a2 == 0) return a1;
    if (a1 != a2) throw domain_error("shuffle: alphabet mismatch");
    return a1;
}

} // namespace

WordElement shuffle(const Word& w1, const Word& w2) {
    int alphabet = common_alphabet(w1, w2);
    WordElement out;
    std::vector<int> acc;
    acc.reserve(w1.length() + w2.length());
    shuffle_rec(w1.letters(), 0, w2.letters(), 0, acc, alphabet, out);
    return out;
}

WordTensor word_coproduct(const Word& w) {
    WordTensor out;
    for (int i = 0; i <= w.length(); ++i)
        out.add_term({w.prefix(i), w.suffix(i)}, CRat(1));
    return out;
}

WordElement word_antipode_monomial(const Word& w) {
    int sign = (w.length() % 2 == 0) ? 1 : -1;
    return WordElement::monomial(w.reversed(), CRat(sign));
}

WordElement shuffle(const WordElement& x, const WordElement& y) {
    return multiply(x, y, [](const Word& a, const Word& b) { return shuffle(a, b); });
}

WordTensor deconcat(const WordElement& x) {
    return extend_linear<TensorKey<Word>>(x, [](const Word& w) { return word_coproduct(w); });
}

WordElement word_antipode(const WordElement& x) {
    return extend_linear<Word>(x, [](const Word& w) { return word_antipode_monomial(w); });
}

CRat word_counit(const WordElement& x) { return x.coefficient(Word()); }

} // namespace hopfchar
