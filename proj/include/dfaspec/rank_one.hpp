#ifndef DFASPEC_RANK_ONE_HPP
#define DFASPEC_RANK_ONE_HPP

#include <vector>

#include "dfaspec/dfa.hpp"
#include "dfaspec/matrix.hpp"

namespace dfaspec {

/// Factorization M = out * in of a nonzero rank-one nonnegative integer
/// matrix: `in_vector` is the primitive common row direction, `out_vector`
/// holds the per-row multiples (zero exactly at zero rows), and
/// lambda = in . out = trace(M) is the unique possibly-nonzero eigenvalue.
struct RankOneDecomposition {
    std::vector<Int> in_vector;
    std::vector<Int> out_vector;
    Int lambda;
};

/// Primitive row direction: any nonzero row divided by the gcd of its
/// entries. Throws ZeroMatrix / NotRankOne.
std::vector<Int> in_vector(const IntMatrix& m);

std::vector<Int> out_vector(const IntMatrix& m);

RankOneDecomposition decompose(const IntMatrix& m);

/// lambda^(n-1) * M == M^n, for n >= 1. Throws Error(InvalidExponent) for
/// n = 0 (M^0 = I is not rank-one; use mat_pow).
IntMatrix fast_power(const RankOneDecomposition& dec, const IntMatrix& m, unsigned long n);

/// True iff every in-vector entry is 0 or 1.
bool is_expanded_normal(const IntMatrix& m);

/// Partition of {0, .., sum-1} into consecutive blocks, block i sized
/// in(M)_i (or 1 when in(M)_i = 0), standing for original state i.
Partition canonical_partition(const IntMatrix& m);

/// Expanded canonical automaton of a rank-one language: the minimal automaton
/// expanded by its canonical partition, with the original transition labels
/// distributed so that copies route sorted symbol groups to consecutive
/// copies of the target. The result is expanded normal and language-
/// equivalent to the input. Throws NotRankOne / EmptyLanguage.
Dfa expanded_canonical_automaton(const Dfa& d);

/// Closed-form word counts of a rank-one language:
/// count(0) = c0, count(n) = c * lambda^(n-1) for n >= 1.
struct ClosedFormCount {
    Int c0;
    Int c;
    Int lambda;

    Int eval(unsigned long n) const;

    /// The same law written count(n) = alpha * lambda^n: alpha = c/lambda,
    /// exact but not necessarily integral. Undefined (throws
    /// std::domain_error) for lambda = 0.
    Rat alpha() const;
};

ClosedFormCount closed_form_count(const Dfa& d);

} // namespace dfaspec

#endif
