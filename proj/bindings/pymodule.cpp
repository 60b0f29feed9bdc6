// Python bindings for the main operations: degree reports, sweeps, beta
// sequences, the good-integer predicate and the torus oracle. Indices and
// word letters are 1-based on the python side, matching the CLI and the
// JSON schema.

#include "pqdeg/degree.hpp"
#include "pqdeg/oracles.hpp"
#include "pqdeg/report_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace pqdeg;

namespace {

std::vector<int> to_internal(const std::vector<int>& levi_one_based, int rank) {
    std::vector<int> out;
    for (int i : levi_one_based) {
        if (i < 1 || i > rank)
            throw std::invalid_argument("levi index " + std::to_string(i) + " out of range 1.." +
                                        std::to_string(rank));
        out.push_back(i - 1);
    }
    return out;
}

py::list one_based(const std::vector<int>& v) {
    py::list out;
    for (int x : v) out.append(x + 1);
    return out;
}

py::dict report_to_dict(const degree::DegreeReport& r) {
    py::dict d;
    d["family"] = std::string(1, cartan::family_letter(r.family));
    d["rank"] = r.rank;
    d["levi"] = one_based(r.levi);
    d["l"] = r.l;
    d["good"] = r.good;
    d["N"] = r.N;
    d["h"] = r.h;
    d["k"] = r.k;
    d["len_w0"] = r.len_w0;
    d["len_w0_levi"] = r.len_w0_levi;
    d["s"] = r.s;
    d["rank_T_rational"] = r.rank_T_rational;
    d["rank_T_mod_l"] = r.rank_T_mod_l;
    d["delta"] = r.delta;
    d["degree_exponent"] = r.degree_exponent;
    d["deg_tau_exponent"] = r.deg_tau_exponent;
    d["identity_ok"] = r.identity_ok;
    d["convention"] = weyl::convention_name(r.convention);
    d["word"] = one_based(r.word);
    return d;
}

degree::DegreeReport make_report(const std::string& type, const std::vector<int>& levi,
                                 long long l, const std::string& convention, std::uint64_t seed) {
    const auto [fam, rank] = cartan::parse_type_label(type);
    return degree::degree_report(fam, rank, to_internal(levi, rank), l,
                                 weyl::convention_from_name(convention), seed);
}

}  // namespace

PYBIND11_MODULE(_pqdeg, m) {
    m.doc() = "degrees of parabolic quantum groups at roots of unity";

    m.def(
        "degree_report",
        [](const std::string& type, const std::vector<int>& levi, long long l,
           const std::string& convention, std::uint64_t seed) {
            return report_to_dict(make_report(type, levi, l, convention, seed));
        },
        py::arg("type"), py::arg("levi"), py::arg("l"), py::arg("convention") = "levi-internal",
        py::arg("seed") = 0,
        "Full degree report for one type, Levi subset (1-based indices) and l.");

    m.def(
        "report_json",
        [](const std::string& type, const std::vector<int>& levi, long long l,
           const std::string& convention, std::uint64_t seed) {
            return report_io::to_json_string(make_report(type, levi, l, convention, seed));
        },
        py::arg("type"), py::arg("levi"), py::arg("l"), py::arg("convention") = "levi-internal",
        py::arg("seed") = 0, "Byte-stable JSON rendering of the degree report.");

    m.def(
        "degree_value",
        [](const std::string& type, const std::vector<int>& levi, long long l,
           const std::string& convention, std::uint64_t seed) {
            const auto r = make_report(type, levi, l, convention, seed);
            py::object result = py::int_(1);
            for (std::size_t i = 0; i < r.degree_exponent; ++i)
                result = result * py::int_(r.l);
            return result;
        },
        py::arg("type"), py::arg("levi"), py::arg("l"), py::arg("convention") = "levi-internal",
        py::arg("seed") = 0, "l^(delta/2) as an arbitrary-precision python int.");

    m.def(
        "sweep_table",
        [](const std::string& type, long long l, const std::string& convention,
           std::uint64_t seed) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            py::list rows;
            for (const auto& r :
                 degree::sweep_table(fam, rank, l, weyl::convention_from_name(convention), seed))
                rows.append(report_to_dict(r));
            return rows;
        },
        py::arg("type"), py::arg("l"), py::arg("convention") = "levi-internal",
        py::arg("seed") = 0, "One report per Levi subset, subsets as ascending bitmasks.");

    m.def(
        "beta_sequence",
        [](const std::string& type, const std::vector<int>& levi, const std::string& convention,
           std::uint64_t seed) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            const auto rs = cartan::positive_roots(cartan::build_cartan(fam, rank));
            const auto pd = weyl::make_parabolic(rs, to_internal(levi, rank), seed);
            const auto betas = weyl::beta_sequence(pd, weyl::coset_factorize(pd),
                                                   weyl::convention_from_name(convention));
            py::dict d;
            d["word"] = one_based(betas.word);
            d["full"] = betas.full;
            d["levi"] = betas.levi;
            d["complement"] = betas.complement;
            d["convention"] = weyl::convention_name(betas.convention);
            return d;
        },
        py::arg("type"), py::arg("levi"), py::arg("convention") = "levi-internal",
        py::arg("seed") = 0, "Convex order and the Levi/complement sublists.");

    m.def(
        "positive_roots",
        [](const std::string& type) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            return cartan::positive_roots(cartan::build_cartan(fam, rank)).positive_roots;
        },
        py::arg("type"), "Positive roots in simple-root coordinates.");

    m.def(
        "highest_root",
        [](const std::string& type) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            return cartan::positive_roots(cartan::build_cartan(fam, rank)).highest;
        },
        py::arg("type"));

    m.def(
        "is_good",
        [](const std::string& type, long long l) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            return cartan::is_good(cartan::positive_roots(cartan::build_cartan(fam, rank)), l);
        },
        py::arg("type"), py::arg("l"),
        "l odd and coprime to the highest-root coefficients (and to 3 in type G).");

    m.def(
        "torus_degree",
        [](const std::vector<std::vector<long long>>& S, long long l, std::size_t dim_cap) {
            oracles::TorusSpec spec;
            spec.S = exactla::IntMatrix::from_rows(S);
            spec.l = l;
            const auto out = oracles::torus_degree(spec, dim_cap);
            py::dict d;
            d["dimension"] = out.dimension;
            d["rank_mod_l"] = out.rank_mod_l;
            d["relations_exact"] = out.relations_exact;
            d["commutant_dim"] = out.commutant_dim;
            d["commutant_residual"] = out.commutant_residual;
            d["pass"] = out.pass;
            return d;
        },
        py::arg("S"), py::arg("l"), py::arg("dim_cap") = 243,
        "Clock-and-shift representation check for x_i x_j = eps^{S_ij} x_j x_i.");

    auto verdict_to_dict = [](const oracles::LemmaVerdict& v) {
        py::dict d;
        d["lemma"] = v.lemma;
        d["instance"] = v.instance;
        d["pass"] = v.pass;
        d["counterexample"] = v.counterexample;
        py::dict details;
        for (const auto& [key, value] : v.details) details[py::str(key)] = value;
        d["details"] = details;
        return d;
    };

    m.def(
        "verify_wdeco",
        [verdict_to_dict](const std::string& type, std::size_t guard) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            const auto rs = cartan::positive_roots(cartan::build_cartan(fam, rank));
            return verdict_to_dict(oracles::verify_wdeco(rs, guard));
        },
        py::arg("type"), py::arg("guard") = 51840);

    m.def(
        "verify_kernel_dimension",
        [verdict_to_dict](const std::string& type, const std::vector<int>& levi, long long l) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            const auto rs = cartan::positive_roots(cartan::build_cartan(fam, rank));
            return verdict_to_dict(
                oracles::verify_kernel_dimension(weyl::make_parabolic(rs, to_internal(levi, rank)), l));
        },
        py::arg("type"), py::arg("levi"), py::arg("l"),
        "dim ker T = n - s over Q and over F_l when l is good.");

    m.def(
        "probe_kernel_vectors",
        [verdict_to_dict](const std::string& type, const std::vector<int>& levi) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            const auto rs = cartan::positive_roots(cartan::build_cartan(fam, rank));
            return verdict_to_dict(
                oracles::probe_kernel_vectors(weyl::make_parabolic(rs, to_internal(levi, rank))));
        },
        py::arg("type"), py::arg("levi"),
        "Which sign variant of the candidate kernel vectors lands in ker T1.");

    m.def(
        "rank_invariance",
        [verdict_to_dict](const std::string& type, const std::vector<int>& levi, long long l,
                          int trials) {
            const auto [fam, rank] = cartan::parse_type_label(type);
            const auto rs = cartan::positive_roots(cartan::build_cartan(fam, rank));
            return verdict_to_dict(oracles::rank_invariance(
                weyl::make_parabolic(rs, to_internal(levi, rank)), l, trials));
        },
        py::arg("type"), py::arg("levi"), py::arg("l"), py::arg("trials") = 3,
        "rank T mod l across several reduced words and both beta conventions.");
}
