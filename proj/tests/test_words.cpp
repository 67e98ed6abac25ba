#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfchar/errors.hpp"
#include "hopfchar/word.hpp"
#include "hopfchar/word_basis.hpp"

using namespace hopfchar;

namespace {

const WordBasis basis3({"a", "b", "c"}, 6);

Word w(const std::string& text) { return basis3.monomial_from_text(text); }

// independent shuffle: choose the position subset of the first word directly
WordElement shuffle_oracle(const Word& u, const Word& v) {
    int n = u.length(), m = v.length();
    WordElement out;
    for (unsigned long mask = 0; mask < (1ul << (n + m)); ++mask) {
        if (__builtin_popcountl(mask) != n) continue;
        std::vector<int> letters(n + m);
        int iu = 0, iv = 0;
        for (int pos = 0; pos < n + m; ++pos) {
            if ((mask >> pos) & 1ul)
                letters[pos] = u.letters()[iu++];
            else
                letters[pos] = v.letters()[iv++];
        }
        out.add_term(Word(3, letters), CRat(1));
    }
    return out;
}

} // namespace

TEST_CASE("shuffle worked examples") {
    CHECK(shuffle(w("1"), w("a,b")) == WordElement::monomial(w("a,b")));
    WordElement ab_ba;
    ab_ba.add_term(w("a,b"), CRat(1));
    ab_ba.add_term(w("b,a"), CRat(1));
    CHECK(shuffle(w("a"), w("b")) == ab_ba);

    WordElement abc;
    abc.add_term(w("a,b,c"), CRat(1));
    abc.add_term(w("a,c,b"), CRat(1));
    abc.add_term(w("c,a,b"), CRat(1));
    CHECK(shuffle(w("a,b"), w("c")) == abc);

    // multiplicities: aa shuffle a = 3 aaa
    CHECK(shuffle(w("a,a"), w("a")) == WordElement::monomial(w("a,a,a"), CRat(3)));

    CHECK_THROWS_AS(shuffle(Word(2, {0}), Word(3, {1})), domain_error);
}

TEST_CASE("shuffle agrees with the subset oracle up to total length 6") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const Word& u : basis3.monomials(k))
                for (const Word& v : basis3.monomials(n - k)) CHECK(shuffle(u, v) == shuffle_oracle(u, v));
}

TEST_CASE("deconcatenation") {
    WordTensor empty_split;
    empty_split.add_term({w("1"), w("1")}, CRat(1));
    CHECK(word_coproduct(w("1")) == empty_split);

    WordTensor ab;
    ab.add_term({w("a,b"), w("1")}, CRat(1));
    ab.add_term({w("a"), w("b")}, CRat(1));
    ab.add_term({w("1"), w("a,b")}, CRat(1));
    CHECK(word_coproduct(w("a,b")) == ab);

    CHECK(word_coproduct(w("a,b,c")).size() == 4);
}

TEST_CASE("antipode: sign times reversal, fixed by the antipode axiom") {
    CHECK(word_antipode_monomial(w("a")) == WordElement::monomial(w("a"), CRat(-1)));
    CHECK(word_antipode_monomial(w("a,b")) == WordElement::monomial(w("b,a")));
    CHECK(word_antipode_monomial(w("1")) == WordElement::monomial(w("1")));

    // m(S (x) id) Delta = u eps = m(id (x) S) Delta on every word, length <= 5
    for (int n = 0; n <= 5; ++n)
        for (const Word& word : basis3.monomials(n)) {
            WordElement lhs, rhs;
            const WordTensor delta = word_coproduct(word);
            for (const auto& [pair, c] : delta.terms()) {
                lhs += shuffle(word_antipode_monomial(pair.first),
                               WordElement::monomial(pair.second)) * c;
                rhs += shuffle(WordElement::monomial(pair.first),
                               word_antipode_monomial(pair.second)) * c;
            }
            WordElement ue;
            if (word.is_empty()) ue.add_term(w("1"), CRat(1));
            CHECK(lhs == ue);
            CHECK(rhs == ue);
        }
}

TEST_CASE("antipode is an involution up to sign through length 6") {
    for (int n = 0; n <= 6; ++n)
        for (const Word& word : basis3.monomials(n))
            CHECK(word_antipode(word_antipode_monomial(word)) == WordElement::monomial(word));
}

TEST_CASE("shuffle is commutative and associative to total length 6") {
    for (int total = 0; total <= 6; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Word& u : basis3.monomials(k))
                for (const Word& v : basis3.monomials(total - k)) CHECK(shuffle(u, v) == shuffle(v, u));

    // associativity on a representative family (all triples is criterion 10's job)
    for (const char* a : {"a", "a,b", "b,c,a"})
        for (const char* b : {"b", "c,a"})
            for (const char* c : {"c", "a,a"}) {
                auto left = shuffle(shuffle(w(a), w(b)), WordElement::monomial(w(c)));
                auto right = shuffle(WordElement::monomial(w(a)), shuffle(w(b), w(c)));
                CHECK(left == right);
            }
}

TEST_CASE("bialgebra compatibility to total length 4") {
    // Delta(u shuffle v) = Delta(u) shuffle Delta(v), legwise
    for (int total = 0; total <= 4; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Word& u : basis3.monomials(k))
                for (const Word& v : basis3.monomials(total - k)) {
                    WordTensor lhs = deconcat(shuffle(u, v));
                    WordTensor rhs;
                    const WordTensor du = word_coproduct(u);
                    const WordTensor dv = word_coproduct(v);
                    for (const auto& [pu, cu] : du.terms())
                        for (const auto& [pv, cv] : dv.terms()) {
                            WordElement left_leg = shuffle(pu.first, pv.first);
                            WordElement right_leg = shuffle(pu.second, pv.second);
                            for (const auto& [lw, lc] : left_leg.terms())
                                for (const auto& [rw, rc] : right_leg.terms())
                                    rhs.add_term({lw, rw}, cu * cv * lc * rc);
                        }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("grading: shuffle adds lengths, deconcat splits them") {
    for (int total = 0; total <= 5; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Word& u : basis3.monomials(k))
                for (const Word& v : basis3.monomials(total - k)) {
                    const WordElement prod = shuffle(u, v);
                    for (const auto& [word, c] : prod.terms()) CHECK(word.length() == total);
                    const WordTensor du = word_coproduct(u);
                    for (const auto& [pair, c] : du.terms())
                        CHECK(pair.first.length() + pair.second.length() == k);
                }
}

TEST_CASE("word basis plumbing") {
    CHECK(basis3.monomials(3).size() == 27);
    CHECK(basis3.monomial_to_text(w("a,c,b")) == "a,c,b");
    CHECK_THROWS_AS(basis3.monomial_from_text("a,z"), parse_error);
    CHECK_THROWS_AS(WordBasis({"a", "a"}, 2), domain_error);
    CHECK_THROWS_AS(WordBasis({"a,b"}, 2), domain_error);
    CHECK_THROWS_AS(WordBasis({}, 2), domain_error);
}
