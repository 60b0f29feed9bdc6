// pqdeg: degrees of parabolic quantum groups at roots of unity.
//
// Subcommands: degree (one report), table (all 2^n Levi subsets),
// roots (convex orders), verify (brute-force oracle suites).
// Exit codes: 0 success, 1 usage or validation error, 2 a mathematical
// assertion failed (a finding, not a crash).

#include "pqdeg/degree.hpp"
#include "pqdeg/oracles.hpp"
#include "pqdeg/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace pqdeg;
using report_io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

struct TypeSpec {
    cartan::Family family;
    int rank;
};

TypeSpec parse_type(const std::string& s) {
    const auto [fam, rank] = cartan::parse_type_label(s);
    return {fam, rank};
}

// "all", "none", or a comma list of 1-based Bourbaki indices.
std::vector<int> parse_levi(const std::string& s, int rank) {
    if (s == "all") {
        std::vector<int> v(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] = i;
        return v;
    }
    if (s == "none" || s.empty()) return {};
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        try {
            const int idx = std::stoi(tok);
            if (idx < 1 || idx > rank)
                throw std::invalid_argument("levi index " + tok + " out of range 1.." +
                                            std::to_string(rank));
            v.push_back(idx - 1);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad levi selector token '" + tok + "'");
        }
        pos = next + 1;
    }
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

std::size_t default_group_guard() {
    if (const char* env = std::getenv("PQDEG_GROUP_GUARD")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 51840;
}

struct CommonOpts {
    std::string type;
    std::string levi = "none";
    long long l = 5;
    std::string convention = "levi-internal";
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
};

json roots_json(const TypeSpec& ts, const weyl::ParabolicDatum& pd,
                const weyl::BetaSequence& betas) {
    auto root_list = [](const std::vector<cartan::RootVector>& roots) {
        json arr = json::array();
        for (const auto& r : roots) arr.push_back(r);
        return arr;
    };
    json j;
    j["type"] = std::string(1, cartan::family_letter(ts.family)) + std::to_string(ts.rank);
    json levi = json::array();
    for (int i : pd.levi) levi.push_back(i + 1);
    j["levi"] = levi;
    j["convention"] = weyl::convention_name(betas.convention);
    json word = json::array();
    for (int letter : betas.word) word.push_back(letter + 1);
    j["word"] = word;
    j["full"] = root_list(betas.full);
    j["levi_betas"] = root_list(betas.levi);
    j["complement_betas"] = root_list(betas.complement);
    json outside = json::array();
    for (std::size_t t = 0; t < betas.levi.size(); ++t) {
        bool in_levi_subsystem = true;
        for (int i = 0; i < pd.rs.n() && in_levi_subsystem; ++i)
            if (betas.levi[t][i] != 0 &&
                std::find(pd.levi.begin(), pd.levi.end(), i) == pd.levi.end())
                in_levi_subsystem = false;
        if (!in_levi_subsystem) outside.push_back(t + 1);
    }
    j["levi_betas_outside_subsystem"] = outside;
    return j;
}

std::string root_str(const cartan::RootVector& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

int cmd_degree(const CommonOpts& o) {
    const TypeSpec ts = parse_type(o.type);
    const auto levi = parse_levi(o.levi, ts.rank);
    const auto conv = weyl::convention_from_name(o.convention);
    const degree::DegreeReport r = degree::degree_report(ts.family, ts.rank, levi, o.l, conv, o.seed);
    if (o.format == "json")
        emit(report_io::to_json_string(r), o.out);
    else if (o.format == "csv")
        emit(report_io::csv_header() + report_io::to_csv_row(r), o.out);
    else
        emit(report_io::to_text(r), o.out);
    if (!r.theorem_ok) {
        std::cerr << "degree theorem violated: rank T mod " << o.l << " = " << r.rank_T_mod_l
                  << " but delta = " << r.delta << " for good l\n";
        return kExitMathFailure;
    }
    return kExitOk;
}

int cmd_table(const CommonOpts& o, std::size_t subset_guard) {
    const TypeSpec ts = parse_type(o.type);
    if ((1ull << ts.rank) > subset_guard)
        throw std::invalid_argument("table: 2^rank exceeds the subset guard " +
                                    std::to_string(subset_guard));
    const auto conv = weyl::convention_from_name(o.convention);
    const auto rows = degree::sweep_table(ts.family, ts.rank, o.l, conv, o.seed);
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.theorem_ok;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(report_io::to_json(r));
        emit(arr.dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
        emit(report_io::to_csv(rows), o.out);
    } else {
        std::string s;
        for (const auto& r : rows) s += report_io::to_text(r);
        emit(s, o.out);
    }
    if (!all_ok) {
        std::cerr << "degree theorem violated in at least one row\n";
        return kExitMathFailure;
    }
    return kExitOk;
}

int cmd_roots(const CommonOpts& o) {
    const TypeSpec ts = parse_type(o.type);
    const auto levi = parse_levi(o.levi, ts.rank);
    const auto conv = weyl::convention_from_name(o.convention);
    const cartan::RootSystem rs = cartan::positive_roots(cartan::build_cartan(ts.family, ts.rank));
    const weyl::ParabolicDatum pd = weyl::make_parabolic(rs, levi, o.seed);
    const auto word = weyl::coset_factorize(pd);
    const auto betas = weyl::beta_sequence(pd, word, conv);

    if (o.format == "json") {
        emit(roots_json(ts, pd, betas).dump(2) + "\n", o.out);
        return kExitOk;
    }
    std::string s = "word ";
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i] + 1);
    s += "\nfull order:";
    for (const auto& r : betas.full) s += " " + root_str(r);
    s += "\nlevi (" + std::string(weyl::convention_name(conv)) + "):";
    for (std::size_t t = 0; t < betas.levi.size(); ++t) {
        s += " " + root_str(betas.levi[t]);
        bool inside = true;
        for (int i = 0; i < rs.n() && inside; ++i)
            if (betas.levi[t][i] != 0 &&
                std::find(pd.levi.begin(), pd.levi.end(), i) == pd.levi.end())
                inside = false;
        if (!inside) s += "[outside levi subsystem]";
    }
    s += "\ncomplement:";
    for (const auto& r : betas.complement) s += " " + root_str(r);
    s += "\n";
    emit(s, o.out);
    return kExitOk;
}

struct VerifyOpts {
    std::string suite = "all";
    std::string type;
    std::string levi;  // empty = every subset
    long long l = 5;
    int trials = 20;
    std::uint64_t seed = 0;
    int m_max = 6;
    std::size_t dim_cap = 243;
    std::size_t group_guard = 0;  // 0 = default / env
};

int cmd_verify(const VerifyOpts& vo, const std::string& format, const std::string& out_path) {
    const std::size_t guard = vo.group_guard ? vo.group_guard : default_group_guard();
    std::vector<oracles::LemmaVerdict> verdicts;

    const bool want_all = vo.suite == "all";
    auto wants = [&](const std::string& s) { return want_all || vo.suite == s; };
    if (!want_all && vo.suite != "wdeco" && vo.suite != "kernel" && vo.suite != "kernel-vectors" &&
        vo.suite != "torus" && vo.suite != "rank-invariance")
        throw std::invalid_argument("unknown suite '" + vo.suite +
                                    "' (wdeco, kernel, kernel-vectors, torus, rank-invariance, all)");

    const bool needs_type = wants("wdeco") || wants("kernel") || wants("kernel-vectors") ||
                            wants("rank-invariance");
    std::optional<cartan::RootSystem> rs;
    if (!vo.type.empty()) {
        const TypeSpec ts = parse_type(vo.type);
        rs = cartan::positive_roots(cartan::build_cartan(ts.family, ts.rank));
    } else if (needs_type && !want_all) {
        throw std::invalid_argument("suite '" + vo.suite + "' needs --type");
    }

    auto subsets = [&]() {
        std::vector<std::vector<int>> out;
        if (!vo.levi.empty()) {
            out.push_back(parse_levi(vo.levi, rs->n()));
            return out;
        }
        for (unsigned mask = 0; mask < (1u << rs->n()); ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < rs->n(); ++i)
                if (mask & (1u << i)) levi.push_back(i);
            out.push_back(levi);
        }
        return out;
    };

    if (rs && wants("wdeco")) verdicts.push_back(oracles::verify_wdeco(*rs, guard));
    if (rs && wants("kernel"))
        for (const auto& levi : subsets())
            verdicts.push_back(
                oracles::verify_kernel_dimension(weyl::make_parabolic(*rs, levi, vo.seed), vo.l));
    if (rs && wants("kernel-vectors"))
        for (const auto& levi : subsets())
            verdicts.push_back(oracles::probe_kernel_vectors(weyl::make_parabolic(*rs, levi, vo.seed)));
    if (rs && wants("rank-invariance"))
        for (const auto& levi : subsets())
            verdicts.push_back(oracles::rank_invariance(weyl::make_parabolic(*rs, levi, 0), vo.l,
                                                        std::max(2, std::min(vo.trials, 5))));
    if (wants("torus")) {
        for (int t = 0; t < vo.trials; ++t) {
            const int m = 2 + t % std::max(1, vo.m_max - 1);
            const std::uint64_t s = vo.seed + static_cast<std::uint64_t>(t);
            const auto spec = oracles::random_torus_spec(m, vo.l, s);
            verdicts.push_back(
                oracles::verify_torus(spec, "random seed=" + std::to_string(s), vo.dim_cap));
        }
    }

    bool all_pass = true;
    for (const auto& v : verdicts) all_pass = all_pass && v.pass;

    if (format == "json") {
        json j;
        j["suite"] = vo.suite;
        j["pass"] = all_pass;
        json arr = json::array();
        for (const auto& v : verdicts) arr.push_back(report_io::to_json(v));
        j["verdicts"] = arr;
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::string s;
        for (const auto& v : verdicts) s += report_io::to_text(v);
        s += all_pass ? "suite pass\n" : "suite FAIL\n";
        emit(s, out_path);
    }
    return all_pass ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degrees of parabolic quantum groups at roots of unity"};
    app.require_subcommand(1);

    CommonOpts opt;
    VerifyOpts vopt;
    std::size_t subset_guard = 256;

    auto add_common = [&](CLI::App* cmd, bool with_levi, bool with_l) {
        cmd->add_option("--type", opt.type, "simple type, e.g. A2, B3, G2")->required();
        if (with_levi)
            cmd->add_option("--levi", opt.levi, "comma list of 1-based simple roots, or all/none")
                ->required();
        if (with_l) cmd->add_option("--l", opt.l, "root-of-unity order (odd, >= 3)");
        cmd->add_option("--convention", opt.convention, "levi-internal (default) or literal-paper");
        cmd->add_option("--seed", opt.seed, "word seed; 0 = deterministic smallest descent");
        cmd->add_option("--format", opt.format, "json, csv or text (default text)");
        cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    };

    CLI::App* degree_cmd = app.add_subcommand("degree", "degree report for one Levi subset");
    add_common(degree_cmd, true, true);

    CLI::App* table_cmd = app.add_subcommand("table", "degree reports for every Levi subset");
    add_common(table_cmd, false, true);
    table_cmd->add_option("--subset-guard", subset_guard, "largest allowed 2^rank (default 256)");

    CLI::App* roots_cmd = app.add_subcommand("roots", "reduced word and beta sequences");
    add_common(roots_cmd, true, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run oracle suites");
    verify_cmd->add_option("--suite", vopt.suite,
                           "wdeco, kernel, kernel-vectors, torus, rank-invariance or all");
    verify_cmd->add_option("--type", vopt.type, "simple type for the group-based suites");
    verify_cmd->add_option("--levi", vopt.levi, "restrict to one Levi subset (default: all subsets)");
    verify_cmd->add_option("--l", vopt.l, "root-of-unity order");
    verify_cmd->add_option("--trials", vopt.trials, "random trials for torus / rank-invariance");
    verify_cmd->add_option("--seed", vopt.seed, "base seed for random trials");
    verify_cmd->add_option("--m-max", vopt.m_max, "largest torus generator count (<= 8)");
    verify_cmd->add_option("--dim-cap", vopt.dim_cap, "largest allowed representation dimension");
    verify_cmd->add_option("--group-guard", vopt.group_guard,
                           "Weyl group enumeration guard (default 51840 or PQDEG_GROUP_GUARD)");
    verify_cmd->add_option("--format", opt.format, "json or text");
    verify_cmd->add_option("--out", opt.out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (degree_cmd->parsed()) return cmd_degree(opt);
        if (table_cmd->parsed()) return cmd_table(opt, subset_guard);
        if (roots_cmd->parsed()) return cmd_roots(opt);
        if (verify_cmd->parsed()) return cmd_verify(vopt, opt.format, opt.out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
