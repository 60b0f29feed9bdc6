#include "pqdeg/degree.hpp"

#include <stdexcept>

namespace pqdeg::degree {

using exactla::IntMatrix;

namespace {

void put_block(IntMatrix& dst, std::size_t r0, std::size_t c0, const IntMatrix& src, int sign) {
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            dst(r0 + i, c0 + j) = sign < 0 ? -src(i, j) : src(i, j);
}

IntMatrix skew_from_list(const weyl::ParabolicDatum& pd, const std::vector<cartan::RootVector>& betas) {
    const std::size_t m = betas.size();
    IntMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const long long v = cartan::inner_product(pd.rs, betas[i], betas[j]);
            a(i, j) = v;
            a(j, i) = -v;
        }
    return a;
}

IntMatrix pairing_matrix(const weyl::ParabolicDatum& pd, const std::vector<cartan::RootVector>& betas) {
    const int n = pd.rs.n();
    IntMatrix b(static_cast<std::size_t>(n), betas.size());
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < betas.size(); ++j)
            b(static_cast<std::size_t>(i), j) = cartan::weight_pairing(pd.rs, i, betas[j]);
    return b;
}

}  // namespace

DegreeMatrixBundle assemble(const ParabolicDatum& pd, const BetaSequence& betas) {
    const std::size_t N = pd.rs.num_positive();
    const std::size_t h = pd.h;
    const auto n = static_cast<std::size_t>(pd.rs.n());
    if (betas.full.size() != N || betas.levi.size() != h)
        throw std::logic_error("assemble: beta sequence sizes do not match the parabolic datum");

    DegreeMatrixBundle b;
    b.A = skew_from_list(pd, betas.full);
    b.A_levi = skew_from_list(pd, betas.levi);
    b.B = pairing_matrix(pd, betas.full);
    b.B_levi = pairing_matrix(pd, betas.levi);

    // V+ (dim h), V0 (dim n), V- (dim N)
    b.T = IntMatrix(h + n + N, h + n + N);
    put_block(b.T, 0, 0, b.A_levi, +1);
    put_block(b.T, 0, h, b.B_levi.transposed(), -1);
    put_block(b.T, h, 0, b.B_levi, +1);
    put_block(b.T, h, h + n, b.B, -1);
    put_block(b.T, h + n, h, b.B.transposed(), +1);
    put_block(b.T, h + n, h + n, b.A, -1);
    return b;
}

DegreeReport degree_report(cartan::Family family, int rank, std::vector<int> levi, long long l,
                           BetaConvention convention, std::uint64_t word_seed) {
    if (l < 3 || l % 2 == 0)
        throw std::invalid_argument("l must be an odd integer >= 3, got " + std::to_string(l));
    const cartan::RootSystem rs = cartan::positive_roots(cartan::build_cartan(family, rank));
    const ParabolicDatum pd = weyl::make_parabolic(rs, std::move(levi), word_seed);
    const std::vector<int> word = weyl::coset_factorize(pd);
    const BetaSequence betas = weyl::beta_sequence(pd, word, convention);
    const DegreeMatrixBundle bundle = assemble(pd, betas);

    DegreeReport r;
    r.family = family;
    r.rank = rank;
    r.levi = pd.levi;
    r.l = l;
    r.good = cartan::is_good(rs, l);
    r.N = rs.num_positive();
    r.h = pd.h;
    r.k = pd.k;
    r.len_w0 = weyl::length(rs, pd.w0);
    r.len_w0_levi = weyl::length(rs, pd.w0_levi);
    r.s = weyl::rank_w0_minus_w0levi(pd);
    r.rank_T_rational = exactla::rank_rational(bundle.T);
    if (exactla::is_prime(l)) {
        r.rank_T_mod_l = exactla::rank_mod_p(bundle.T, l);
    } else {
        r.rank_T_mod_l = exactla::count_invariant_factors_coprime_to(bundle.T, l);
        r.rank_mod_l_extrapolated = true;
    }
    r.delta = r.len_w0 + r.len_w0_levi + r.s;
    r.degree_exponent = r.delta / 2;
    r.deg_tau_exponent = static_cast<std::size_t>(rank) - r.s;
    r.identity_ok = (r.h + r.N + static_cast<std::size_t>(rank)) ==
                    (r.delta + (static_cast<std::size_t>(rank) - r.s));
    r.convention = convention;
    r.word = word;
    r.word_seed = word_seed;
    r.theorem_ok = r.delta % 2 == 0 && (!r.good || r.rank_T_mod_l == r.delta);
    return r;
}

std::vector<DegreeReport> sweep_table(cartan::Family family, int rank, long long l,
                                      BetaConvention convention, std::uint64_t word_seed) {
    std::vector<DegreeReport> rows;
    const unsigned mask_end = 1u << rank;
    for (unsigned mask = 0; mask < mask_end; ++mask) {
        std::vector<int> levi;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i)) levi.push_back(i);
        rows.push_back(degree_report(family, rank, std::move(levi), l, convention, word_seed));
    }
    return rows;
}

exactla::Int degree_value(const DegreeReport& report) {
    exactla::Int v = 1;
    for (std::size_t i = 0; i < report.degree_exponent; ++i) v *= report.l;
    return v;
}

}  // namespace pqdeg::degree
