#ifndef DFASPEC_SPECTRAL_HPP
#define DFASPEC_SPECTRAL_HPP

#include <optional>
#include <string>

#include "dfaspec/dfa.hpp"
#include "dfaspec/polynomial.hpp"
#include "dfaspec/rank_one.hpp"

namespace dfaspec {

struct AnalysisReport {
    int state_count = 0;
    bool is_trim = false;
    bool is_minimal = false;
    int rank = 0;
    int nullity = 0;
    IntPolynomial char_poly;
    int language_rank = 0;
    std::optional<RankOneDecomposition> rank_one; // of the minimal automaton
    bool is_expanded_normal = false;              // of the input's adjacency
};

struct MinimalityCheck {
    int given_rank = 0;
    int given_nullity = 0;
    int minimal_rank = 0;
    int minimal_nullity = 0;
    bool rank_ok = false;
    bool nullity_ok = false;
};

/// Rank of the adjacency matrix of the minimal trim automaton of L(d);
/// 0 for the empty language.
int language_rank(const Dfa& d);

/// Rank/nullity of d against its minimal automaton; minimal_rank <= given_rank
/// and minimal_nullity <= given_nullity must both hold. Requires d trim and
/// nonempty (Error(EmptyAutomaton), std::invalid_argument otherwise).
MinimalityCheck verify_minimality(const Dfa& d);

AnalysisReport analyze(const Dfa& d);

/// JSON object with keys: states, trim, minimal, rank, nullity, charPoly
/// (coefficient array, lowest first), languageRank, rankOne
/// ({inVector, outVector, lambda} or null), expandedNormal. Integers are
/// emitted at full precision.
std::string report_to_json(const AnalysisReport& report);

} // namespace dfaspec

#endif
