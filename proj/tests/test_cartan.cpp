#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqdeg/cartan.hpp"
#include "pqdeg/exactla.hpp"
#include "pqdeg/weyl.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace pqdeg;
using cartan::Family;
using cartan::RootVector;

namespace {

const std::vector<std::pair<Family, int>>& all_types_up_to_rank8() {
    static const std::vector<std::pair<Family, int>> types = [] {
        std::vector<std::pair<Family, int>> t;
        for (int n = 1; n <= 8; ++n) t.emplace_back(Family::A, n);
        for (int n = 2; n <= 8; ++n) t.emplace_back(Family::B, n);
        for (int n = 2; n <= 8; ++n) t.emplace_back(Family::C, n);
        for (int n = 3; n <= 8; ++n) t.emplace_back(Family::D, n);
        for (int n = 6; n <= 8; ++n) t.emplace_back(Family::E, n);
        t.emplace_back(Family::F, 4);
        t.emplace_back(Family::G, 2);
        return t;
    }();
    return types;
}

}  // namespace

TEST_CASE("cartan data: pinned examples") {
    const auto a1 = cartan::build_cartan(Family::A, 1);
    CHECK(a1.cartan == std::vector<std::vector<int>>{{2}});
    CHECK(a1.sym == std::vector<int>{1});

    // d = (1,3) is forced by minimality with alpha_2 long; the matrix follows
    // from d_i c_ij = (alpha_i | alpha_j)
    const auto g2 = cartan::build_cartan(Family::G, 2);
    CHECK(g2.sym == std::vector<int>{1, 3});
    CHECK(g2.cartan == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});

    const auto b3 = cartan::build_cartan(Family::B, 3);
    CHECK(b3.cartan[2][1] == -2);
    CHECK(b3.cartan[1][2] == -1);
    CHECK(b3.sym == std::vector<int>{2, 2, 1});

    const auto c3 = cartan::build_cartan(Family::C, 3);
    CHECK(c3.cartan[1][2] == -2);
    CHECK(c3.cartan[2][1] == -1);
    CHECK(c3.sym == std::vector<int>{1, 1, 2});
}

TEST_CASE("cartan invariants for every supported type") {
    for (const auto& [fam, n] : all_types_up_to_rank8()) {
        const auto d = cartan::build_cartan(fam, n);
        for (int i = 0; i < n; ++i) {
            CHECK(d.cartan[i][i] == 2);
            CHECK(d.sym[i] > 0);
            for (int j = 0; j < n; ++j) {
                if (i != j) CHECK(d.cartan[i][j] <= 0);
                CHECK((d.cartan[i][j] == 0) == (d.cartan[j][i] == 0));
                CHECK(d.sym[i] * d.cartan[i][j] == d.sym[j] * d.cartan[j][i]);
            }
        }
        // minimal symmetrizers: any common divisor could be scaled out
        int g = 0;
        for (int x : d.sym) g = std::gcd(g, x);
        CHECK(g == 1);
    }
}

TEST_CASE("invalid family/rank combinations are rejected with a diagnostic") {
    CHECK_THROWS_AS(cartan::build_cartan(Family::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::E, 5), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::E, 9), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::F, 3), std::invalid_argument);
    CHECK_THROWS_AS(cartan::build_cartan(Family::G, 3), std::invalid_argument);
    CHECK_THROWS_AS(cartan::family_from_char('H'), std::invalid_argument);
}

TEST_CASE("inner product: pinned examples") {
    const auto a2 = cartan::positive_roots(cartan::build_cartan(Family::A, 2));
    CHECK(cartan::inner_product(a2, {1, 0}, {1, 0}) == 2);
    CHECK(cartan::inner_product(a2, {1, 0}, {0, 1}) == -1);
    const auto g2 = cartan::positive_roots(cartan::build_cartan(Family::G, 2));
    CHECK(cartan::inner_product(g2, {0, 1}, {0, 1}) == 6);
    CHECK(cartan::inner_product(g2, {1, 0}, {1, 0}) == 2);
}

TEST_CASE("inner product symmetry and reflection invariance") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (const auto& [fam, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 4},
                                 {Family::D, 4}, {Family::F, 4}, {Family::G, 2}}) {
        const auto rs = cartan::positive_roots(cartan::build_cartan(fam, n));
        for (int trial = 0; trial < 10; ++trial) {
            RootVector v(n), w(n);
            for (int i = 0; i < n; ++i) {
                v[i] = entry(rng);
                w[i] = entry(rng);
            }
            CHECK(cartan::inner_product(rs, v, w) == cartan::inner_product(rs, w, v));
            for (int i = 0; i < n; ++i) {
                const auto si = weyl::simple_reflection(rs, i);
                CHECK(cartan::inner_product(rs, weyl::apply(si, v), weyl::apply(si, w)) ==
                      cartan::inner_product(rs, v, w));
            }
        }
    }
}

TEST_CASE("positive roots: pinned examples") {
    const auto a1 = cartan::positive_roots(cartan::build_cartan(Family::A, 1));
    CHECK(a1.positive_roots == std::vector<RootVector>{{1}});

    const auto a2 = cartan::positive_roots(cartan::build_cartan(Family::A, 2));
    CHECK(a2.num_positive() == 3);
    CHECK(a2.positive_roots == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(a2.highest == RootVector{1, 1});

    const auto b2 = cartan::positive_roots(cartan::build_cartan(Family::B, 2));
    CHECK(b2.num_positive() == 4);
    CHECK(b2.highest == RootVector{1, 2});
}

TEST_CASE("root count table and closure invariants for every type of rank <= 8") {
    for (const auto& [fam, n] : all_types_up_to_rank8()) {
        const auto rs = cartan::positive_roots(cartan::build_cartan(fam, n));
        CHECK(rs.num_positive() == cartan::positive_root_count(fam, n));
        for (const auto& beta : rs.positive_roots) {
            for (int i = 0; i < n; ++i) {
                const auto img = weyl::apply(weyl::simple_reflection(rs, i), beta);
                const bool is_simple_i = [&] {
                    RootVector alpha(n, 0);
                    alpha[i] = 1;
                    return beta == alpha;
                }();
                if (is_simple_i) {
                    CHECK(cartan::is_negative(img));
                } else {
                    CHECK(cartan::is_positive(img));
                    bool listed = false;
                    for (const auto& r : rs.positive_roots) listed = listed || r == img;
                    CHECK(listed);
                }
            }
        }
        // highest root dominates every other positive root
        for (const auto& beta : rs.positive_roots)
            for (int i = 0; i < n; ++i) CHECK(rs.highest[i] >= beta[i]);
        for (int i = 0; i < n; ++i) CHECK(rs.highest[i] >= 1);
        // the highest root is long: maximal self-pairing
        for (const auto& beta : rs.positive_roots)
            CHECK(cartan::inner_product(rs, rs.highest, rs.highest) >=
                  cartan::inner_product(rs, beta, beta));
    }
}

TEST_CASE("highest roots of the exceptional series") {
    const auto e6 = cartan::positive_roots(cartan::build_cartan(Family::E, 6));
    CHECK(e6.highest == RootVector{1, 2, 2, 3, 2, 1});
    const auto e7 = cartan::positive_roots(cartan::build_cartan(Family::E, 7));
    CHECK(e7.highest == RootVector{2, 2, 3, 4, 3, 2, 1});
    const auto e8 = cartan::positive_roots(cartan::build_cartan(Family::E, 8));
    CHECK(e8.highest == RootVector{2, 3, 4, 6, 5, 4, 3, 2});
    // a_5 = 5 makes l = 5 bad exactly in E8
    CHECK(cartan::is_good(e7, 5));
    CHECK_FALSE(cartan::is_good(e8, 5));
    CHECK(cartan::is_good(e8, 7));
    CHECK_FALSE(cartan::is_good(e8, 21));
}

TEST_CASE("weight pairing duality") {
    const auto a2 = cartan::positive_roots(cartan::build_cartan(Family::A, 2));
    CHECK(cartan::weight_pairing(a2, 0, {1, 0}) == 1);
    CHECK(cartan::weight_pairing(a2, 0, {1, 1}) == 1);
    const auto g2 = cartan::positive_roots(cartan::build_cartan(Family::G, 2));
    CHECK(cartan::weight_pairing(g2, 1, {0, 1}) == 3);

    // (omega_i | alpha_j) = delta_ij d_j across several types
    for (const auto& [fam, n] : {std::pair{Family::B, 4}, {Family::C, 3}, {Family::F, 4}}) {
        const auto rs = cartan::positive_roots(cartan::build_cartan(fam, n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RootVector alpha(n, 0);
                alpha[j] = 1;
                CHECK(cartan::weight_pairing(rs, i, alpha) ==
                      (i == j ? rs.datum.sym[j] : 0));
            }
    }
}

namespace {

// Euclidean-model oracle: simple roots and positive roots in orthonormal
// coordinates (doubled so every entry is an integer), independent of the
// Cartan-matrix route.
struct EuclidModel {
    std::vector<std::vector<int>> simple;    // doubled coordinates
    std::vector<std::vector<int>> positive;  // doubled coordinates
};

std::vector<int> unit(int dim, int i, int scale = 2) {
    std::vector<int> v(dim, 0);
    v[i] = scale;
    return v;
}

std::vector<int> vec_sub(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<int> vec_add(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

EuclidModel euclid_model(Family f, int n) {
    EuclidModel m;
    auto e = [&](int i) { return unit(f == Family::A ? n + 1 : (f == Family::G ? 3 : n), i); };
    switch (f) {
        case Family::A:
            for (int i = 0; i < n; ++i) m.simple.push_back(vec_sub(e(i), e(i + 1)));
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) m.positive.push_back(vec_sub(e(i), e(j)));
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) m.simple.push_back(vec_sub(e(i), e(i + 1)));
            m.simple.push_back(e(n - 1));
            for (int i = 0; i < n; ++i) {
                m.positive.push_back(e(i));
                for (int j = i + 1; j < n; ++j) {
                    m.positive.push_back(vec_sub(e(i), e(j)));
                    m.positive.push_back(vec_add(e(i), e(j)));
                }
            }
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) m.simple.push_back(vec_sub(e(i), e(i + 1)));
            m.simple.push_back(vec_add(e(n - 1), e(n - 1)));
            for (int i = 0; i < n; ++i) {
                m.positive.push_back(vec_add(e(i), e(i)));
                for (int j = i + 1; j < n; ++j) {
                    m.positive.push_back(vec_sub(e(i), e(j)));
                    m.positive.push_back(vec_add(e(i), e(j)));
                }
            }
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) m.simple.push_back(vec_sub(e(i), e(i + 1)));
            m.simple.push_back(vec_add(e(n - 2), e(n - 1)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    m.positive.push_back(vec_sub(e(i), e(j)));
                    m.positive.push_back(vec_add(e(i), e(j)));
                }
            break;
        case Family::F: {
            // e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2; doubled coordinates keep the
            // half-integral roots integral
            m.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            for (int i = 0; i < 4; ++i) {
                m.positive.push_back(unit(4, i));  // actually (2e_i)/... doubled e_i
                for (int j = i + 1; j < 4; ++j) {
                    m.positive.push_back(vec_sub(unit(4, i), unit(4, j)));
                    m.positive.push_back(vec_add(unit(4, i), unit(4, j)));
                }
            }
            for (int s2 = -1; s2 <= 1; s2 += 2)
                for (int s3 = -1; s3 <= 1; s3 += 2)
                    for (int s4 = -1; s4 <= 1; s4 += 2)
                        m.positive.push_back({1, s2, s3, s4});
            break;
        }
        case Family::G:
            // alpha_1 = e1-e2 (short), alpha_2 = -2e1+e2+e3 (long)
            m.simple = {{2, -2, 0}, {-4, 2, 2}};
            m.positive = {{2, -2, 0},  {-4, 2, 2}, {-2, 0, 2},
                          {0, -2, 2},  {2, -4, 2}, {-2, -2, 4}};
            break;
        default:
            break;
    }
    return m;
}

long long euclid_dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long long>(a[i]) * b[i];
    return acc;
}

// coefficients of v in the simple-root basis, solved exactly
RootVector coefficients_of(const EuclidModel& m, const std::vector<int>& v) {
    const std::size_t dim = v.size();
    const std::size_t n = m.simple.size();
    pqdeg::exactla::IntMatrix aug(dim, n + 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m.simple[c][r];
        aug(r, n) = v[r];
    }
    const auto kernel = pqdeg::exactla::kernel_basis_rational(aug);
    REQUIRE(kernel.size() == 1);
    const auto& k = kernel.front();
    REQUIRE(k[n] != 0);
    RootVector coeff(n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto num = -k[c];
        REQUIRE(num % k[n] == 0);
        coeff[c] = static_cast<int>(num / k[n]);
    }
    return coeff;
}

}  // namespace

TEST_CASE("positive roots and inner products agree with the Euclidean models") {
    for (const auto& [fam, n] : {std::pair{Family::A, 3}, {Family::A, 4}, {Family::B, 3},
                                 {Family::B, 4}, {Family::C, 3}, {Family::C, 4},
                                 {Family::D, 4}, {Family::D, 5}, {Family::F, 4},
                                 {Family::G, 2}}) {
        const auto rs = cartan::positive_roots(cartan::build_cartan(fam, n));
        const auto model = euclid_model(fam, n);
        REQUIRE(model.simple.size() == static_cast<std::size_t>(n));
        REQUIRE(model.positive.size() == rs.num_positive());

        // same root sets, in simple-root coordinates
        std::set<RootVector> from_euclid;
        std::vector<std::pair<RootVector, std::vector<int>>> paired;
        for (const auto& v : model.positive) {
            auto coeff = coefficients_of(model, v);
            from_euclid.insert(coeff);
            paired.emplace_back(std::move(coeff), v);
        }
        const std::set<RootVector> from_cartan(rs.positive_roots.begin(),
                                               rs.positive_roots.end());
        CHECK(from_euclid == from_cartan);

        // the invariant form is proportional to the Euclidean dot product:
        // ip(a,b) * eu(s,s) == eu(a,b) * ip(s,s) for a fixed reference root s
        const auto& [s_coeff, s_euclid] = paired.front();
        const long long ip_ss = cartan::inner_product(rs, s_coeff, s_coeff);
        const long long eu_ss = euclid_dot(s_euclid, s_euclid);
        for (const auto& [a_coeff, a_euclid] : paired)
            for (const auto& [b_coeff, b_euclid] : paired)
                CHECK(cartan::inner_product(rs, a_coeff, b_coeff) * eu_ss ==
                      euclid_dot(a_euclid, b_euclid) * ip_ss);
    }
}

TEST_CASE("good integers") {
    const auto a3 = cartan::positive_roots(cartan::build_cartan(Family::A, 3));
    CHECK(cartan::is_good(a3, 5));
    CHECK(cartan::is_good(a3, 15));  // odd, type A coefficients are all 1
    CHECK_FALSE(cartan::is_good(a3, 2));

    const auto g2 = cartan::positive_roots(cartan::build_cartan(Family::G, 2));
    CHECK(g2.highest == RootVector{3, 2});
    CHECK_FALSE(cartan::is_good(g2, 9));
    CHECK_FALSE(cartan::is_good(g2, 3));
    CHECK(cartan::is_good(g2, 5));
    CHECK(cartan::is_good(g2, 7));

    const auto f4 = cartan::positive_roots(cartan::build_cartan(Family::F, 4));
    CHECK(f4.highest == RootVector{2, 3, 4, 2});
    CHECK_FALSE(cartan::is_good(f4, 9));
    CHECK(cartan::is_good(f4, 5));

    const auto b2 = cartan::positive_roots(cartan::build_cartan(Family::B, 2));
    CHECK_FALSE(cartan::is_good(b2, 2));
    CHECK(cartan::is_good(b2, 7));
}
