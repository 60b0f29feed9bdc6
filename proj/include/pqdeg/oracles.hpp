#pragma once

// Brute-force verifiers, independent of the degree pipeline: the weight
// decomposition identity, kernel dimensions of T and T1, the explicit
// kernel-vector candidates, clock-and-shift representations of quasi-
// polynomial algebras, and rank invariance across reduced words.

#include "pqdeg/degree.hpp"
#include "pqdeg/exactla.hpp"
#include "pqdeg/weyl.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace pqdeg::oracles {

struct LemmaVerdict {
    std::string lemma;
    std::string instance;
    bool pass = false;
    std::string counterexample;                   // non-empty iff !pass
    std::map<std::string, std::string> details;   // seeds, resolved signs, ...
};

// For every w in W, every omega = sum of a subset of fundamental weights and
// the deterministic reduced word of w: omega - w(omega) = sum_{t in I} beta_t
// where I = {t : letter t moves omega}.
LemmaVerdict verify_wdeco(const cartan::RootSystem& rs, std::size_t max_order_guard = 51840);

// Same identity for a single element (used where full enumeration is too big).
LemmaVerdict verify_wdeco_for(const cartan::RootSystem& rs, const weyl::WeylElement& w,
                              const std::string& tag);

// dim ker T = n - s over Q (and over F_l when l is good), and ker T inside
// ker T1 by substituting an explicit kernel basis.
LemmaVerdict verify_kernel_dimension(const weyl::ParabolicDatum& pd, long long l);

// Candidate kernel vectors of T1: V+ part = indicator of I_omega(w0_levi),
// V- part = indicator of I_omega(w0), V0 part from {±omega ± w0(omega)}.
// Reports which sign variant (if any) lands in ker T1 for every fundamental
// weight simultaneously; a no-variant outcome is a finding, not an error.
LemmaVerdict probe_kernel_vectors(const weyl::ParabolicDatum& pd);

struct TorusSpec {
    exactla::IntMatrix S;  // m x m, skew-symmetric commutation exponents
    long long l = 0;       // odd prime
};

struct TorusOutcome {
    std::size_t dimension = 0;       // representation dimension l^{rank/2}
    std::size_t rank_mod_l = 0;
    bool relations_exact = false;
    std::size_t commutant_dim = 0;
    double commutant_residual = 0.0;
    bool pass = false;
};

// Builds the clock-and-shift representation for the quasi-polynomial algebra
// x_i x_j = eps^{S_ij} x_j x_i, checks the relations exactly over
// Z[t]/(t^l - 1), and certifies irreducibility through the commutant at a
// floating primitive root of unity. Throws when l^{rank/2} would exceed
// dim_cap or the input is malformed.
TorusOutcome torus_degree(const TorusSpec& spec, std::size_t dim_cap = 243);

LemmaVerdict verify_torus(const TorusSpec& spec, const std::string& tag,
                          std::size_t dim_cap = 243);

// Random skew S with entries in [-5, 5]; replayable from the seed.
TorusSpec random_torus_spec(int m, long long l, std::uint64_t seed);

// rank_T_mod_l recomputed for `trials` word seeds and both beta conventions;
// passes iff all agree.
LemmaVerdict rank_invariance(const weyl::ParabolicDatum& pd, long long l, int trials);

}  // namespace pqdeg::oracles
