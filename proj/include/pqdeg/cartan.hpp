#pragma once

// Cartan data and root systems for the simple Lie types, Bourbaki numbering.
// Roots live in simple-root coordinates; the invariant form is
// (alpha_i | alpha_j) = d_i * c_ij with d_i the minimal positive symmetrizers
// (short roots have (alpha|alpha) = 2).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pqdeg::cartan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_letter(Family f);

// "A2" -> (Family::A, 2); validates the rank for the family.
std::pair<Family, int> parse_type_label(const std::string& label);

struct CartanDatum {
    Family family;
    int rank;
    std::vector<std::vector<int>> cartan;  // c[i][j], 0-based
    std::vector<int> sym;                  // d_i

    std::string label() const;  // e.g. "B3"
};

// Coefficients in the simple-root basis alpha_1..alpha_n (0-based storage).
using RootVector = std::vector<int>;

struct RootSystem {
    CartanDatum datum;
    std::vector<RootVector> positive_roots;  // sorted by (height, lex); simple roots first
    RootVector highest;                      // coefficients a_i of the highest root

    int n() const { return datum.rank; }
    std::size_t num_positive() const { return positive_roots.size(); }
};

// Bourbaki Cartan matrix and minimal symmetrizers; throws std::invalid_argument
// naming the allowed ranks for a bad family/rank combination.
CartanDatum build_cartan(Family family, int rank);

// Closure of the simple roots under simple reflections.
RootSystem positive_roots(const CartanDatum& datum);

// (v|w) = sum_ij v_i d_i c_ij w_j for arbitrary integer vectors of length n.
long long inner_product(const RootSystem& rs, const RootVector& v, const RootVector& w);

// (omega_i | beta) = d_i * b_i where beta = sum_j b_j alpha_j; i is 0-based.
long long weight_pairing(const RootSystem& rs, int i, const RootVector& beta);

// l odd, coprime to every highest-root coefficient, and coprime to 3 in type G.
bool is_good(const RootSystem& rs, long long l);

bool is_positive(const RootVector& v);
bool is_negative(const RootVector& v);

// Closed-form number of positive roots for the family (cross-check value).
std::size_t positive_root_count(Family family, int rank);

// |W| by the classical product formulas.
unsigned long long weyl_group_order(Family family, int rank);

}  // namespace pqdeg::cartan
