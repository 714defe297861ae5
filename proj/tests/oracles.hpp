// Independent reference computations for tests: these deliberately avoid the
// library code paths they are used to check.
#ifndef DFASPEC_TESTS_ORACLES_HPP
#define DFASPEC_TESTS_ORACLES_HPP

#include <string>
#include <vector>

#include "dfaspec/dfa.hpp"
#include "dfaspec/matrix.hpp"
#include "dfaspec/polynomial.hpp"

namespace dfaspec::oracles {

/// Number of accepted words of length exactly n, by enumerating all
/// |alphabet|^n strings and running each through the automaton.
Int brute_force_count(const Dfa& d, int n);

/// All words of L(d) with |w| <= max_length, in shortlex order. Uses a
/// depth-first walk pruned by distance-to-final, so the cost tracks the
/// output size. `cap` bounds the number of words collected.
std::vector<std::string> words_upto(const Dfa& d, int max_length,
                                    size_t cap = static_cast<size_t>(-1));

/// Kernel dimension via reduced row echelon form over the rationals
/// (independent of the fraction-free rank elimination).
int kernel_dimension_rref(const IntMatrix& m);

/// det(xI - M) by cofactor expansion over polynomial entries. Exponential;
/// for cross-checks up to dimension ~6.
IntPolynomial char_poly_cofactor(const IntMatrix& m);

/// Entrywise check that every block of the partitioned matrix has constant
/// row sums, straight from the definition.
bool equitable_by_row_sums(const IntMatrix& m, const Partition& pi);

/// BFS isomorphism for accessible deterministic automata.
bool dfa_isomorphic(const Dfa& a, const Dfa& b);

} // namespace dfaspec::oracles

#endif
