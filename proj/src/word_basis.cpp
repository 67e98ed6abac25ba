#include "hopfchar/word_basis.hpp"

#include <algorithm>

#include "hopfchar/errors.hpp"

namespace hopfchar {

WordBasis::WordBasis(std::vector<std::string> alphabet, int max_length)
    : alphabet_(std::move(alphabet)), max_length_(max_length) {
    if (alphabet_.empty()) throw domain_error("word basis: alphabet must be non-empty");
    if (max_length_ < 0) throw domain_error("word basis: max length must be >= 0");
    for (const std::string& sym : alphabet_) {
        if (sym.empty() || sym == "1")
            throw domain_error("word basis: invalid alphabet symbol '" + sym + "'");
        for (char c : sym)
            if (c == ',' || c == '\t' || c == ' ' || c == '\n')
                throw domain_error("word basis: alphabet symbol '" + sym + "' contains a separator");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
            if (alphabet_[i] == alphabet_[j])
                throw domain_error("word basis: duplicate alphabet symbol '" + alphabet_[i] + "'");

    int k = (int)alphabet_.size();
    monomials_.resize(max_length_ + 1);
    monomials_[0] = {unit()};
    for (int n = 1; n <= max_length_; ++n) {
        monomials_[n].reserve(monomials_[n - 1].size() * k);
        for (const Word& w : monomials_[n - 1])
            for (int a = 0; a < k; ++a) {
                std::vector<int> letters = w.letters();
                letters.push_back(a);
                monomials_[n].emplace_back(k, std::move(letters));
            }
        std::sort(monomials_[n].begin(), monomials_[n].end());
    }
    for (const auto& level : monomials_)
        for (const Word& w : level) coproducts_.emplace(w, word_coproduct(w));
}

const WordTensor& WordBasis::coproduct(const Word& w) const {
    auto it = coproducts_.find(w);
    if (it == coproducts_.end())
        throw domain_error("word basis: coproduct of a word beyond the cached length " +
                           std::to_string(max_length_));
    return it->second;
}

const std::vector<Word>& WordBasis::monomials(int length) const {
    if (length < 0 || length > max_length_)
        throw domain_error("word basis: length " + std::to_string(length) + " outside cached range");
    return monomials_[length];
}

std::string WordBasis::monomial_to_text(const Word& w) const {
    if (w.is_empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out += ',';
        out += alphabet_[w.letters()[i]];
    }
    return out;
}

Word WordBasis::monomial_from_text(const std::string& s) const {
    if (s == "1") return unit();
    if (s.empty()) throw parse_error("empty word text (the empty word is written '1')");
    std::vector<int> letters;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            std::string sym = s.substr(start, i - start);
            auto it = std::find(alphabet_.begin(), alphabet_.end(), sym);
            if (it == alphabet_.end())
                throw parse_error("unknown alphabet symbol '" + sym + "'");
            letters.push_back((int)(it - alphabet_.begin()));
            start = i + 1;
        }
    }
    return Word((int)alphabet_.size(), std::move(letters));
}

} // namespace hopfchar
