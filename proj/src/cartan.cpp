#include "pqdeg/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pqdeg::cartan {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw std::invalid_argument(std::string("unknown family letter '") + c +
                                             "' (expected one of A B C D E F G)");
    }
}

char family_letter(Family f) { return static_cast<char>(f); }

std::pair<Family, int> parse_type_label(const std::string& label) {
    if (label.size() < 2)
        throw std::invalid_argument("type must look like A2, B3, G2; got '" + label + "'");
    const Family f = family_from_char(label[0]);
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (label[i] < '0' || label[i] > '9')
            throw std::invalid_argument("type must look like A2, B3, G2; got '" + label + "'");
        rank = rank * 10 + (label[i] - '0');
        if (rank > 64) break;
    }
    build_cartan(f, rank);  // rank validation
    return {f, rank};
}

std::string CartanDatum::label() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

void check_rank(Family f, int n) {
    auto fail = [&](const std::string& allowed) {
        throw std::invalid_argument("type " + std::string(1, family_letter(f)) +
                                    std::to_string(n) + " is not a simple type; allowed ranks: " +
                                    allowed);
    };
    switch (f) {
        case Family::A:
            if (n < 1) fail("A_n with n >= 1");
            break;
        case Family::B:
        case Family::C:
            if (n < 2) fail(std::string(1, family_letter(f)) + "_n with n >= 2");
            break;
        case Family::D:
            if (n < 3) fail("D_n with n >= 3");
            break;
        case Family::E:
            if (n < 6 || n > 8) fail("E6, E7, E8");
            break;
        case Family::F:
            if (n != 4) fail("F4");
            break;
        case Family::G:
            if (n != 2) fail("G2");
            break;
    }
}

struct DiagramData {
    std::vector<int> d;  // symmetrizers
    // (alpha_i | alpha_j) for the edges (i < j), everything else 0
    std::map<std::pair<int, int>, int> pairing;
};

// Bourbaki numbering throughout; the form is normalized so short roots have
// (alpha | alpha) = 2, which makes the d_i the minimal positive symmetrizers.
DiagramData diagram(Family f, int n) {
    DiagramData g;
    g.d.assign(n, 1);
    auto chain = [&](int upto, int w) {
        for (int i = 0; i + 1 < upto; ++i) g.pairing[{i, i + 1}] = w;
    };
    switch (f) {
        case Family::A:
            chain(n, -1);
            break;
        case Family::B:  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) g.d[i] = 2;
            chain(n, -2);
            break;
        case Family::C:  // alpha_n long
            g.d[n - 1] = 2;
            chain(n - 1, -1);
            g.pairing[{n - 2, n - 1}] = -2;
            break;
        case Family::D:
            chain(n - 1, -1);
            g.pairing[{n - 3, n - 1}] = -1;
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
            g.pairing[{0, 2}] = -1;
            g.pairing[{1, 3}] = -1;
            for (int i = 2; i + 1 < n; ++i) g.pairing[{i, i + 1}] = -1;
            break;
        case Family::F:  // alpha_1, alpha_2 long
            g.d[0] = g.d[1] = 2;
            g.pairing[{0, 1}] = -2;
            g.pairing[{1, 2}] = -2;
            g.pairing[{2, 3}] = -1;
            break;
        case Family::G:  // alpha_1 short, alpha_2 long
            g.d[1] = 3;
            g.pairing[{0, 1}] = -3;
            break;
    }
    return g;
}

}  // namespace

CartanDatum build_cartan(Family family, int rank) {
    check_rank(family, rank);
    const DiagramData g = diagram(family, rank);
    CartanDatum datum;
    datum.family = family;
    datum.rank = rank;
    datum.sym = g.d;
    datum.cartan.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) datum.cartan[i][i] = 2;
    for (const auto& [edge, w] : g.pairing) {
        const auto [i, j] = edge;
        // c_ij = (alpha_i | alpha_j) / d_i
        if (w % g.d[i] != 0 || w % g.d[j] != 0)
            throw std::logic_error("non-integral Cartan entry for " + datum.label());
        datum.cartan[i][j] = w / g.d[i];
        datum.cartan[j][i] = w / g.d[j];
    }
    return datum;
}

bool is_positive(const RootVector& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

bool is_negative(const RootVector& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x > 0) return false;
        if (x < 0) nonzero = true;
    }
    return nonzero;
}

namespace {

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

// s_i in simple-root coordinates: only coordinate i changes.
RootVector reflect_simple(const CartanDatum& datum, int i, const RootVector& v) {
    RootVector r = v;
    long long acc = 0;
    for (int j = 0; j < datum.rank; ++j) acc += static_cast<long long>(datum.cartan[i][j]) * v[j];
    r[i] = static_cast<int>(r[i] - acc);
    return r;
}

}  // namespace

RootSystem positive_roots(const CartanDatum& datum) {
    const int n = datum.rank;
    std::set<RootVector> seen;
    std::vector<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        RootVector alpha(n, 0);
        alpha[i] = 1;
        seen.insert(alpha);
        queue.push_back(alpha);
    }
    while (!queue.empty()) {
        RootVector beta = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            RootVector img = reflect_simple(datum, i, beta);
            if (is_positive(img) && seen.insert(img).second) queue.push_back(img);
        }
    }

    RootSystem rs;
    rs.datum = datum;
    rs.positive_roots.assign(seen.begin(), seen.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const RootVector& a, const RootVector& b) {
                  const int ha = height(a), hb = height(b);
                  return ha != hb ? ha < hb : a < b;
              });
    rs.highest = rs.positive_roots.back();
    return rs;
}

long long inner_product(const RootSystem& rs, const RootVector& v, const RootVector& w) {
    const CartanDatum& d = rs.datum;
    long long acc = 0;
    for (int i = 0; i < d.rank; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < d.rank; ++j)
            acc += static_cast<long long>(v[i]) * d.sym[i] * d.cartan[i][j] * w[j];
    }
    return acc;
}

long long weight_pairing(const RootSystem& rs, int i, const RootVector& beta) {
    if (i < 0 || i >= rs.datum.rank) throw std::invalid_argument("weight_pairing: index out of range");
    return static_cast<long long>(rs.datum.sym[i]) * beta[i];
}

bool is_good(const RootSystem& rs, long long l) {
    if (l < 1) throw std::invalid_argument("is_good: l must be positive");
    if (l % 2 == 0) return false;
    for (int a : rs.highest)
        if (std::gcd(l, static_cast<long long>(a)) != 1) return false;
    if (rs.datum.family == Family::G && l % 3 == 0) return false;
    return true;
}

std::size_t positive_root_count(Family family, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    switch (family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    throw std::logic_error("unreachable");
}

unsigned long long weyl_group_order(Family family, int rank) {
    auto factorial = [](int m) {
        unsigned long long r = 1;
        for (int i = 2; i <= m; ++i) r *= static_cast<unsigned long long>(i);
        return r;
    };
    switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B:
        case Family::C: return (1ull << rank) * factorial(rank);
        case Family::D: return (1ull << (rank - 1)) * factorial(rank);
        case Family::E:
            return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
        case Family::F: return 1152ull;
        case Family::G: return 12ull;
    }
    throw std::logic_error("unreachable");
}

}  // namespace pqdeg::cartan
