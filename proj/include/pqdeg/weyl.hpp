#pragma once

// Weyl group elements as integer matrices on the root lattice, reduced words,
// longest elements, the length-additive coset factorization w0 = wbar * w0_levi
// and the convex-ordered beta sequences it induces.

#include "pqdeg/cartan.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pqdeg::weyl {

using cartan::RootSystem;
using cartan::RootVector;

struct WeylElement {
    std::vector<int> mat;                   // n x n row-major; column j = image of alpha_j
    std::optional<std::vector<int>> word;   // reduced word, 0-based letters

    int n = 0;

    bool operator==(const WeylElement& o) const { return mat == o.mat; }  // words are advisory
};

WeylElement identity_element(int n);
WeylElement simple_reflection(const RootSystem& rs, int i);  // i 0-based; throws on range
RootVector apply(const WeylElement& w, const RootVector& v);
WeylElement compose(const WeylElement& a, const WeylElement& b);  // (a*b)(v) = a(b(v)); word dropped
bool is_identity(const WeylElement& w);

// #{beta in R+ : w(beta) in R-}.
std::size_t length(const RootSystem& rs, const WeylElement& w);

// Product s_{w[0]} ... s_{w[k-1]}.
WeylElement product_of_word(const RootSystem& rs, const std::vector<int>& word);

// Longest element of the parabolic subgroup generated by `support` (0-based,
// empty -> identity), with a reduced word attached. seed 0 picks the smallest
// ascent at every step; a non-zero seed randomizes the choice.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& support,
                            std::uint64_t seed = 0);

// Reduced word by descent stripping; seed as above.
std::vector<int> reduced_word_of(const RootSystem& rs, const WeylElement& w,
                                 std::uint64_t seed = 0);

struct ParabolicDatum {
    RootSystem rs;
    std::vector<int> levi;  // sorted, 0-based
    std::vector<RootVector> levi_positive_roots;
    std::size_t h = 0;  // |(R^l)+|
    std::size_t k = 0;  // N - h
    WeylElement w0;
    WeylElement w0_levi;
    WeylElement wbar;  // w0 * w0_levi^{-1}, word of length k
};

ParabolicDatum make_parabolic(const RootSystem& rs, std::vector<int> levi,
                              std::uint64_t word_seed = 0);

// Concatenated reduced word (wbar letters, then w0_levi letters); verifies the
// length additivity k + h = N and that the product is w0.
std::vector<int> coset_factorize(const ParabolicDatum& pd);

enum class BetaConvention { levi_internal, literal_paper };

const char* convention_name(BetaConvention c);
BetaConvention convention_from_name(const std::string& name);

struct BetaSequence {
    std::vector<RootVector> full;        // beta_1..beta_N
    std::vector<RootVector> levi;        // beta^1_1..beta^1_h
    std::vector<RootVector> complement;  // beta^2_1..beta^2_k
    BetaConvention convention = BetaConvention::levi_internal;
    std::vector<int> word;  // the word the sequence was built from
};

// word must be a factorized reduced word for w0 (first k letters a word for
// wbar, last h for w0_levi); non-reduced or mismatched words are rejected.
BetaSequence beta_sequence(const ParabolicDatum& pd, const std::vector<int>& word,
                           BetaConvention convention);

// rank over Q of w0 - w0_levi acting on the root lattice.
std::size_t rank_w0_minus_w0levi(const ParabolicDatum& pd);

// Full enumeration by closure under the generators; refuses when the group
// order (closed form) exceeds the guard. Every element carries a reduced word.
std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::size_t max_order_guard = 51840);

}  // namespace pqdeg::weyl
