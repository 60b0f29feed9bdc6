#pragma once

// Assembly of the skew matrices A, A_levi, the pairing matrices B, B_levi and
// the block form T; rank computations and the degree report
//   delta = len(w0) + len(w0_levi) + rank(w0 - w0_levi),
// with the mod-l rank of T checked against delta whenever l is good.

#include "pqdeg/cartan.hpp"
#include "pqdeg/exactla.hpp"
#include "pqdeg/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pqdeg::degree {

using weyl::BetaConvention;
using weyl::BetaSequence;
using weyl::ParabolicDatum;

struct DegreeMatrixBundle {
    exactla::IntMatrix A;       // N x N, skew, upper entries (beta_i | beta_j)
    exactla::IntMatrix A_levi;  // h x h from the beta^1 list
    exactla::IntMatrix B;       // n x N, B[i][j] = (omega_i | beta_j)
    exactla::IntMatrix B_levi;  // n x h
    exactla::IntMatrix T;       // (h+n+N) x (h+n+N), blocks
                                // [[A_levi, -B_levi^t, 0], [B_levi, 0, -B], [0, B^t, -A]]
};

DegreeMatrixBundle assemble(const ParabolicDatum& pd, const BetaSequence& betas);

struct DegreeReport {
    cartan::Family family;
    int rank = 0;
    std::vector<int> levi;  // sorted, 0-based
    long long l = 0;
    bool good = false;
    std::size_t N = 0, h = 0, k = 0;
    std::size_t len_w0 = 0, len_w0_levi = 0, s = 0;
    std::size_t rank_T_rational = 0, rank_T_mod_l = 0;
    std::size_t delta = 0;
    std::size_t degree_exponent = 0;    // delta / 2
    std::size_t deg_tau_exponent = 0;   // n - s
    bool identity_ok = false;           // h + N + n == delta + (n - s)
    BetaConvention convention = BetaConvention::levi_internal;
    std::vector<int> word;  // 0-based letters of the reduced word used
    std::uint64_t word_seed = 0;

    // Not serialized: consistency bookkeeping.
    bool rank_mod_l_extrapolated = false;  // composite l, rank via invariant factors
    bool theorem_ok = true;                // good => rank_T_mod_l == delta, and delta even
};

// Full pipeline for one (type, levi subset, l). levi uses 0-based indices.
// l must be odd and >= 3.
DegreeReport degree_report(cartan::Family family, int rank, std::vector<int> levi, long long l,
                           BetaConvention convention = BetaConvention::levi_internal,
                           std::uint64_t word_seed = 0);

// One report per subset of the simple roots, subsets ordered as ascending
// bitmasks (bit i = simple root i+1 present).
std::vector<DegreeReport> sweep_table(cartan::Family family, int rank, long long l,
                                      BetaConvention convention = BetaConvention::levi_internal,
                                      std::uint64_t word_seed = 0);

// l^{delta/2} in full precision.
exactla::Int degree_value(const DegreeReport& report);

}  // namespace pqdeg::degree
