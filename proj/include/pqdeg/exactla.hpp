#pragma once

// Exact linear algebra over Z, Q and prime fields: rank, kernel bases,
// Smith normal form. Everything is arbitrary precision; nothing in this
// module may silently overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pqdeg::exactla {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix negated() const;
    bool is_skew_symmetric() const;

    bool operator==(const IntMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

// Rank over Q, Bareiss fraction-free elimination.
std::size_t rank_rational(const IntMatrix& m);

// Rank over the field with p elements, p an odd prime. Composite or even p
// is rejected; callers wanting composite moduli should inspect
// smith_normal_form invariant factors instead.
std::size_t rank_mod_p(const IntMatrix& m, long long p);

// Invariant factors d_1 | d_2 | ... (non-negative, divisibility chain, zeros
// trailing). Length min(rows, cols); the number of non-zero entries equals
// rank_rational.
std::vector<Int> smith_normal_form(const IntMatrix& m);

// Basis of the right kernel over Q, returned as primitive integer vectors
// (content 1, first non-zero entry positive). Size = cols - rank_rational.
std::vector<std::vector<Int>> kernel_basis_rational(const IntMatrix& m);

// Invariant factors that stay invertible after reduction modulo l. For prime
// l this equals rank_mod_p.
std::size_t count_invariant_factors_coprime_to(const IntMatrix& m, long long l);

bool is_prime(long long n);

}  // namespace pqdeg::exactla
