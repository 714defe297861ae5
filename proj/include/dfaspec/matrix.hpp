#ifndef DFASPEC_MATRIX_HPP
#define DFASPEC_MATRIX_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dfaspec/error.hpp"

namespace dfaspec {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers. 0x0 is legal.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    IntMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

/// Dense row-major matrix of rationals. mpq arithmetic keeps entries canonical
/// (lowest terms, positive denominator).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, std::vector<Rat> entries);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rat& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    /// True iff every entry has denominator 1.
    bool is_integral() const;
    /// Requires is_integral().
    IntMatrix to_integer() const;

    bool operator==(const RatMatrix&) const = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

RatMatrix to_rational(const IntMatrix& m);

/// Ordered partition of {0, ..., ground_size-1} into nonempty disjoint blocks.
/// Block order and within-block order are significant; the constructor
/// normalizes within-block order to ascending and validates disjoint cover.
class Partition {
public:
    Partition(std::vector<std::vector<int>> blocks, int ground_size);

    static Partition singletons(int n);

    int ground_size() const { return ground_size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    int block_of(int element) const { return block_of_[element]; }
    int block_size(int i) const { return static_cast<int>(blocks_[i].size()); }

    bool operator==(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    int ground_size_ = 0;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
IntMatrix mat_pow(const IntMatrix& m, unsigned long n);

/// Exact rank over the rationals, via fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);
/// Exact rank via rational Gaussian elimination.
int rank(const RatMatrix& m);

int nullity(const IntMatrix& m);
int nullity(const RatMatrix& m);

/// 0/1 membership matrix S of a partition: S[i][j] = 1 iff i is in block j.
IntMatrix characteristic_matrix(const Partition& pi);

/// Block-averaged quotient (S^T S)^-1 S^T M S; entry (i,j) is the average row
/// sum of block (i,j) of the partitioned matrix.
RatMatrix quotient_matrix(const IntMatrix& m, const Partition& pi);

/// True iff every block of the partitioned matrix has constant row sums,
/// equivalently M S = S M^pi.
bool is_equitable(const IntMatrix& m, const Partition& pi);

/// Inverse transform of the quotient: S M (S^T S)^-1 S^T, where block i of pi
/// lists the expanded indices standing for original index i. The result must
/// be integral; quotient_matrix(expansion(m, pi), pi) == m always holds.
IntMatrix expansion(const IntMatrix& m, const Partition& pi);

} // namespace dfaspec

#endif
