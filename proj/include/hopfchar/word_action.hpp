#pragma once

#include <vector>

#include "hopfchar/functional.hpp"
#include "hopfchar/word_basis.hpp"

namespace hopfchar {

/// Coefficient table nu[k][a] of the extended-word-series action, with
/// 1 <= k <= d rows and one column per alphabet letter.
struct NuMatrix {
    std::vector<std::vector<CRat>> entries; // entries[k][a]

    int dimension() const { return (int)entries.size(); }
    int alphabet_size() const { return entries.empty() ? 0 : (int)entries.front().size(); }

    void validate(int expected_alphabet) const {
        if (entries.empty()) throw domain_error("nu matrix: needs at least one row");
        for (const auto& row : entries)
            if ((int)row.size() != (int)entries.front().size())
                throw domain_error("nu matrix: ragged rows");
        if (alphabet_size() != expected_alphabet)
            throw domain_error("nu matrix: column count " + std::to_string(alphabet_size()) +
                               " does not match the alphabet size " + std::to_string(expected_alphabet));
    }

    // sum over the letters of w of nu[k][letter], paired against z
    CRat exponent(const std::vector<CRat>& z, const Word& w) const {
        if ((int)z.size() != dimension())
            throw domain_error("nu matrix: z has length " + std::to_string(z.size()) +
                               ", expected " + std::to_string(dimension()));
        CRat total;
        for (int k = 0; k < dimension(); ++k) {
            CRat letter_sum;
            for (int a : w.letters()) letter_sum += entries[k][a];
            total += z[k] * letter_sum;
        }
        return total;
    }
};

/// The automorphism Xi_z: rescales a character's value on each word by
/// exp(<z, column sums of nu over the word's letters>). Exponents that are
/// exactly zero keep exact targets exact; anything else needs a target with
/// an exponential (the complex-float algebra).
template <class Alg>
Functional<WordBasis, Alg> xi_action(const std::vector<CRat>& z,
                                     const Functional<WordBasis, Alg>& delta, const NuMatrix& nu) {
    if (delta.kind() != FunctionalKind::character)
        throw domain_error("xi_action: input must be a character");
    const Alg& alg = delta.alg();
    const WordBasis& basis = delta.basis();
    nu.validate((int)basis.alphabet().size());
    if ((int)z.size() != nu.dimension())
        throw domain_error("xi_action: z dimension does not match nu");

    typename Functional<WordBasis, Alg>::Table table;
    for (int n = 1; n <= delta.truncation(); ++n)
        for (const Word& w : basis.monomials(n)) {
            CRat ex = nu.exponent(z, w);
            auto v = delta.value(w);
            if (!ex.is_zero()) v = alg.mul(alg.exp_of(ex), v);
            table.emplace(w, std::move(v));
        }
    return Functional<WordBasis, Alg>(delta.basis_ptr(), alg, delta.truncation(),
                                      FunctionalKind::character, std::move(table));
}

/// Element (chi, z) of the semidirect product of the word character group
/// with C^d acting through Xi.
template <class Alg>
struct ExtendedWordChar {
    Functional<WordBasis, Alg> chi;
    std::vector<CRat> z;
};

template <class Alg>
ExtendedWordChar<Alg> semidirect_mul(const ExtendedWordChar<Alg>& a, const ExtendedWordChar<Alg>& b,
                                     const NuMatrix& nu) {
    if (a.z.size() != b.z.size()) throw domain_error("semidirect_mul: dimension mismatch");
    std::vector<CRat> zsum = a.z;
    for (std::size_t k = 0; k < zsum.size(); ++k) zsum[k] += b.z[k];
    return {convolve(a.chi, xi_action(a.z, b.chi, nu)), std::move(zsum)};
}

template <class Alg>
ExtendedWordChar<Alg> semidirect_identity(const Functional<WordBasis, Alg>& model, int d) {
    return {Functional<WordBasis, Alg>::unit_character(model.basis_ptr(), model.alg(), model.truncation()),
            std::vector<CRat>(d)};
}

template <class Alg>
ExtendedWordChar<Alg> semidirect_inverse(const ExtendedWordChar<Alg>& a, const NuMatrix& nu) {
    std::vector<CRat> zneg = a.z;
    for (auto& zk : zneg) zk = -zk;
    return {xi_action(zneg, char_inverse(a.chi), nu), std::move(zneg)};
}

} // namespace hopfchar
