#include "pqdeg/report_io.hpp"

#include <sstream>

namespace pqdeg::report_io {

const std::vector<std::string>& report_fields() {
    static const std::vector<std::string> fields = {
        "family", "rank", "levi", "l", "good", "N", "h", "k", "len_w0", "len_w0_levi",
        "s", "rank_T_rational", "rank_T_mod_l", "delta", "degree_exponent",
        "deg_tau_exponent", "identity_ok", "convention", "word"};
    return fields;
}

namespace {

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(x + 1);
    return out;
}

std::string join_plus(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

json to_json(const degree::DegreeReport& r) {
    json j;
    j["family"] = std::string(1, cartan::family_letter(r.family));
    j["rank"] = r.rank;
    j["levi"] = one_based(r.levi);
    j["l"] = r.l;
    j["good"] = r.good;
    j["N"] = r.N;
    j["h"] = r.h;
    j["k"] = r.k;
    j["len_w0"] = r.len_w0;
    j["len_w0_levi"] = r.len_w0_levi;
    j["s"] = r.s;
    j["rank_T_rational"] = r.rank_T_rational;
    j["rank_T_mod_l"] = r.rank_T_mod_l;
    j["delta"] = r.delta;
    j["degree_exponent"] = r.degree_exponent;
    j["deg_tau_exponent"] = r.deg_tau_exponent;
    j["identity_ok"] = r.identity_ok;
    j["convention"] = weyl::convention_name(r.convention);
    j["word"] = one_based(r.word);
    return j;
}

std::string to_json_string(const degree::DegreeReport& r) { return to_json(r).dump(2) + "\n"; }

std::string csv_header() {
    std::string s;
    const auto& fields = report_fields();
    for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + fields[i];
    return s + "\n";
}

std::string to_csv_row(const degree::DegreeReport& r) {
    std::ostringstream os;
    os << cartan::family_letter(r.family) << ',' << r.rank << ',' << join_plus(one_based(r.levi))
       << ',' << r.l << ',' << (r.good ? "true" : "false") << ',' << r.N << ',' << r.h << ','
       << r.k << ',' << r.len_w0 << ',' << r.len_w0_levi << ',' << r.s << ','
       << r.rank_T_rational << ',' << r.rank_T_mod_l << ',' << r.delta << ','
       << r.degree_exponent << ',' << r.deg_tau_exponent << ','
       << (r.identity_ok ? "true" : "false") << ',' << weyl::convention_name(r.convention) << ','
       << join_plus(one_based(r.word)) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<degree::DegreeReport>& rows) {
    std::string s = csv_header();
    for (const auto& r : rows) s += to_csv_row(r);
    return s;
}

std::string to_text(const degree::DegreeReport& r) {
    std::ostringstream os;
    os << "type " << cartan::family_letter(r.family) << r.rank << "  levi "
       << (r.levi.empty() ? "none" : join_plus(one_based(r.levi))) << "  l " << r.l
       << (r.good ? "  (good)" : "  (not good)") << "\n";
    os << "  N=" << r.N << " h=" << r.h << " k=" << r.k << "  len(w0)=" << r.len_w0
       << " len(w0_levi)=" << r.len_w0_levi << " s=" << r.s << "\n";
    os << "  rank T: " << r.rank_T_rational << " over Q, " << r.rank_T_mod_l << " mod l"
       << (r.rank_mod_l_extrapolated ? " (invariant-factor count, composite l)" : "") << "\n";
    os << "  delta=" << r.delta << "  degree exponent " << r.degree_exponent << " (degree l^"
       << r.degree_exponent << " = " << degree::degree_value(r) << ")  deg tau exponent "
       << r.deg_tau_exponent << "\n";
    os << "  identity h+N+n = delta+(n-s): " << (r.identity_ok ? "ok" : "VIOLATED") << "\n";
    if (!r.theorem_ok) os << "  DEGREE THEOREM CHECK FAILED: rank T mod l != delta for good l\n";
    os << "  word " << join_plus(one_based(r.word)) << "  convention "
       << weyl::convention_name(r.convention) << "\n";
    return os.str();
}

json to_json(const oracles::LemmaVerdict& v) {
    json j;
    j["lemma"] = v.lemma;
    j["instance"] = v.instance;
    j["pass"] = v.pass;
    if (!v.pass) j["counterexample"] = v.counterexample;
    if (!v.details.empty()) {
        json d;
        for (const auto& [key, value] : v.details) d[key] = value;
        j["details"] = d;
    }
    return j;
}

std::string to_text(const oracles::LemmaVerdict& v) {
    std::ostringstream os;
    os << (v.pass ? "[PASS] " : "[FAIL] ") << v.lemma << "  " << v.instance;
    for (const auto& [key, value] : v.details) os << "  " << key << "=" << value;
    if (!v.pass) os << "\n       counterexample: " << v.counterexample;
    os << "\n";
    return os.str();
}

}  // namespace pqdeg::report_io
