#ifndef DFASPEC_MINIMIZE_HPP
#define DFASPEC_MINIMIZE_HPP

#include "dfaspec/dfa.hpp"
#include "dfaspec/matrix.hpp"

namespace dfaspec {

struct NerodePartitionResult {
    /// Blocks of equal-future states over the input's state indices, ordered
    /// to match the minimal automaton's state numbering.
    Partition partition;
    Dfa minimal;
};

/// Partition of a trim, nonempty automaton by Nerode equivalence (Moore
/// refinement; missing transitions refine against an implicit non-accepting
/// sink which never appears in the output). adjacency(minimal) equals
/// quotient_matrix(adjacency(d), partition).
/// Throws Error(EmptyAutomaton) for the empty automaton and
/// std::invalid_argument when d is not trim.
NerodePartitionResult nerode_partition(const Dfa& d);

/// trim + Nerode quotient; total (empty in, empty out).
Dfa minimize(const Dfa& d);

/// Quotient by a congruence: same-block states must agree on finality and on
/// the block (or absence) of every symbol's target. Blocks become states in
/// partition order. Throws Error(NotACongruence) otherwise.
Dfa quotient_automaton(const Dfa& d, const Partition& pi);

/// Language equality, decided by a product walk over the union alphabet with
/// an implicit rejecting sink on each side.
bool equivalent(const Dfa& a, const Dfa& b);

} // namespace dfaspec

#endif
