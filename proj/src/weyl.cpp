#include "pqdeg/weyl.hpp"

#include "pqdeg/exactla.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace pqdeg::weyl {

WeylElement identity_element(int n) {
    WeylElement w;
    w.n = n;
    w.mat.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) w.mat[static_cast<std::size_t>(i) * n + i] = 1;
    w.word = std::vector<int>{};
    return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    const int n = rs.n();
    if (i < 0 || i >= n) throw std::invalid_argument("simple_reflection: index out of range");
    WeylElement w = identity_element(n);
    // row i of the matrix is e_i - (row i of the Cartan matrix)
    for (int j = 0; j < n; ++j) w.mat[static_cast<std::size_t>(i) * n + j] -= rs.datum.cartan[i][j];
    w.word = std::vector<int>{i};
    return w;
}

RootVector apply(const WeylElement& w, const RootVector& v) {
    const int n = w.n;
    RootVector r(n, 0);
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += static_cast<long long>(w.mat[static_cast<std::size_t>(i) * n + j]) * v[j];
        r[i] = static_cast<int>(acc);
    }
    return r;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    const int n = a.n;
    if (n != b.n) throw std::invalid_argument("compose: rank mismatch");
    WeylElement c;
    c.n = n;
    c.mat.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int aik = a.mat[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                c.mat[static_cast<std::size_t>(i) * n + j] += aik * b.mat[static_cast<std::size_t>(k) * n + j];
        }
    return c;
}

bool is_identity(const WeylElement& w) {
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j)
            if (w.mat[static_cast<std::size_t>(i) * w.n + j] != (i == j)) return false;
    return true;
}

std::size_t length(const RootSystem& rs, const WeylElement& w) {
    std::size_t inv = 0;
    for (const RootVector& beta : rs.positive_roots)
        if (cartan::is_negative(weyl::apply(w, beta))) ++inv;
    return inv;
}

WeylElement product_of_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = identity_element(rs.n());
    for (int i : word) w = compose(w, simple_reflection(rs, i));
    w.word = std::nullopt;
    return w;
}

namespace {

int pick(const std::vector<int>& options, std::mt19937_64* rng) {
    if (!rng) return options.front();
    std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
    return options[dist(*rng)];
}

}  // namespace

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& support,
                            std::uint64_t seed) {
    const int n = rs.n();
    for (int i : support)
        if (i < 0 || i >= n) throw std::invalid_argument("longest_element: support index out of range");
    std::mt19937_64 rng(seed);
    std::mt19937_64* r = seed == 0 ? nullptr : &rng;

    std::vector<int> sorted(support);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    WeylElement w = identity_element(n);
    std::vector<int> word;
    for (;;) {
        std::vector<int> ascents;
        for (int i : sorted) {
            RootVector alpha(n, 0);
            alpha[i] = 1;
            if (cartan::is_positive(weyl::apply(w, alpha))) ascents.push_back(i);
        }
        if (ascents.empty()) break;
        const int i = pick(ascents, r);
        w = compose(w, simple_reflection(rs, i));
        word.push_back(i);
    }
    w.word = std::move(word);
    return w;
}

std::vector<int> reduced_word_of(const RootSystem& rs, const WeylElement& w, std::uint64_t seed) {
    const int n = rs.n();
    std::mt19937_64 rng(seed);
    std::mt19937_64* r = seed == 0 ? nullptr : &rng;

    WeylElement cur = w;
    std::vector<int> stripped;
    while (!is_identity(cur)) {
        std::vector<int> descents;
        for (int i = 0; i < n; ++i) {
            RootVector alpha(n, 0);
            alpha[i] = 1;
            if (cartan::is_negative(weyl::apply(cur, alpha))) descents.push_back(i);
        }
        if (descents.empty()) throw std::logic_error("non-identity element without descent");
        const int i = pick(descents, r);
        cur = compose(cur, simple_reflection(rs, i));
        stripped.push_back(i);
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

ParabolicDatum make_parabolic(const RootSystem& rs, std::vector<int> levi, std::uint64_t word_seed) {
    const int n = rs.n();
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
    for (int i : levi)
        if (i < 0 || i >= n) throw std::invalid_argument("levi index out of range");

    ParabolicDatum pd;
    pd.rs = rs;
    pd.levi = std::move(levi);

    std::set<int> in_levi(pd.levi.begin(), pd.levi.end());
    for (const RootVector& beta : rs.positive_roots) {
        bool supported = true;
        for (int i = 0; i < n && supported; ++i)
            if (beta[i] != 0 && !in_levi.count(i)) supported = false;
        if (supported) pd.levi_positive_roots.push_back(beta);
    }
    pd.h = pd.levi_positive_roots.size();
    pd.k = rs.num_positive() - pd.h;

    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    pd.w0 = longest_element(rs, full, word_seed);
    pd.w0_levi = longest_element(rs, pd.levi, word_seed);

    pd.wbar = compose(pd.w0, pd.w0_levi);  // w0_levi is an involution
    pd.wbar.word = reduced_word_of(rs, pd.wbar, word_seed);
    if (pd.wbar.word->size() != pd.k)
        throw std::logic_error("coset factorization is not length additive for " +
                               rs.datum.label());
    return pd;
}

std::vector<int> coset_factorize(const ParabolicDatum& pd) {
    if (!pd.wbar.word || !pd.w0_levi.word) throw std::invalid_argument("parabolic datum without words");
    std::vector<int> word = *pd.wbar.word;
    word.insert(word.end(), pd.w0_levi.word->begin(), pd.w0_levi.word->end());
    if (word.size() != pd.rs.num_positive())
        throw std::logic_error("coset word length differs from N");
    if (!(product_of_word(pd.rs, word) == pd.w0))
        throw std::logic_error("coset word does not multiply to w0");
    return word;
}

const char* convention_name(BetaConvention c) {
    return c == BetaConvention::levi_internal ? "levi-internal" : "literal-paper";
}

BetaConvention convention_from_name(const std::string& name) {
    if (name == "levi-internal") return BetaConvention::levi_internal;
    if (name == "literal-paper") return BetaConvention::literal_paper;
    throw std::invalid_argument("unknown beta convention '" + name +
                                "' (expected levi-internal or literal-paper)");
}

BetaSequence beta_sequence(const ParabolicDatum& pd, const std::vector<int>& word,
                           BetaConvention convention) {
    const RootSystem& rs = pd.rs;
    const std::size_t N = rs.num_positive();
    if (word.size() != N || !(product_of_word(rs, word) == pd.w0))
        throw std::invalid_argument("beta_sequence: not a reduced word for w0");
    const std::vector<int> levi_word(word.end() - static_cast<long>(pd.h), word.end());
    if (!(product_of_word(rs, levi_word) == pd.w0_levi))
        throw std::invalid_argument("beta_sequence: word is not factorized through w0_levi");

    BetaSequence seq;
    seq.convention = convention;
    seq.word = word;

    WeylElement prefix = identity_element(rs.n());
    for (std::size_t t = 0; t < N; ++t) {
        RootVector alpha(rs.n(), 0);
        alpha[word[t]] = 1;
        seq.full.push_back(weyl::apply(prefix, alpha));
        prefix = compose(prefix, simple_reflection(rs, word[t]));
    }

    if (convention == BetaConvention::literal_paper) {
        seq.levi.assign(seq.full.begin() + static_cast<long>(pd.k), seq.full.end());
    } else {
        WeylElement lp = identity_element(rs.n());
        for (std::size_t t = 0; t < pd.h; ++t) {
            RootVector alpha(rs.n(), 0);
            alpha[levi_word[t]] = 1;
            seq.levi.push_back(weyl::apply(lp, alpha));
            lp = compose(lp, simple_reflection(rs, levi_word[t]));
        }
    }
    // the complement is whatever part of the convex order the levi list does
    // not take, in full-list order
    const std::set<RootVector> levi_set(seq.levi.begin(), seq.levi.end());
    for (const RootVector& beta : seq.full)
        if (!levi_set.count(beta)) seq.complement.push_back(beta);

    std::set<RootVector> dedup(seq.full.begin(), seq.full.end());
    if (dedup.size() != N ||
        !std::all_of(seq.full.begin(), seq.full.end(), cartan::is_positive))
        throw std::logic_error("beta sequence does not enumerate the positive roots");
    return seq;
}

std::size_t rank_w0_minus_w0levi(const ParabolicDatum& pd) {
    const int n = pd.rs.n();
    exactla::IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = pd.w0.mat[static_cast<std::size_t>(i) * n + j] -
                      pd.w0_levi.mat[static_cast<std::size_t>(i) * n + j];
    return exactla::rank_rational(m);
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t max_order_guard) {
    const unsigned long long order = cartan::weyl_group_order(rs.datum.family, rs.datum.rank);
    if (order > max_order_guard)
        throw std::invalid_argument("enumerate_group: |W(" + rs.datum.label() + ")| = " +
                                    std::to_string(order) + " exceeds the guard " +
                                    std::to_string(max_order_guard));
    const int n = rs.n();
    std::vector<WeylElement> gens;
    for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i));

    std::map<std::vector<int>, std::vector<int>> words;  // matrix -> reduced word
    std::vector<WeylElement> out;
    WeylElement id = identity_element(n);
    words[id.mat] = {};
    out.push_back(id);
    for (std::size_t head = 0; head < out.size(); ++head) {
        const WeylElement cur = out[head];
        for (int i = 0; i < n; ++i) {
            WeylElement next = compose(cur, gens[i]);
            auto [it, inserted] = words.emplace(next.mat, std::vector<int>{});
            if (!inserted) continue;
            std::vector<int> w = *cur.word;
            w.push_back(i);
            it->second = w;
            next.word = std::move(w);
            next.n = n;
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace pqdeg::weyl
