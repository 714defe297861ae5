#ifndef DFASPEC_DFA_HPP
#define DFASPEC_DFA_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfaspec/matrix.hpp"

namespace dfaspec {

/// Deterministic, possibly partial finite automaton. Immutable after
/// construction. The empty automaton (0 states) represents the empty
/// language and has no initial state.
class Dfa {
public:
    struct Transition {
        int from;
        char symbol;
        int to;
    };

    /// Empty automaton over an empty alphabet.
    Dfa() = default;

    /// Validates ranges, alphabet membership and determinism; throws
    /// std::invalid_argument on violation. Alphabet is sorted and must be
    /// duplicate-free. finals may list states in any order.
    Dfa(int state_count, std::vector<char> alphabet, int initial,
        std::vector<int> finals, const std::vector<Transition>& transitions);

    int state_count() const { return state_count_; }
    bool empty() const { return state_count_ == 0; }
    const std::vector<char>& alphabet() const { return alphabet_; }

    /// Only valid for nonempty automata.
    int initial() const { return initial_; }
    const std::vector<int>& finals() const { return finals_; }
    bool is_final(int state) const;

    std::optional<int> target(int state, char symbol) const;
    const std::map<char, int>& transitions_from(int state) const { return delta_[state]; }
    size_t transition_count() const;

    /// State reached from the initial state on `word`, or nullopt if the run
    /// gets stuck (or the automaton is empty).
    std::optional<int> run(std::string_view word) const;
    bool accepts(std::string_view word) const;

    bool operator==(const Dfa&) const = default;

private:
    int state_count_ = 0;
    std::vector<char> alphabet_;
    int initial_ = -1;
    std::vector<int> finals_; // sorted
    std::vector<std::map<char, int>> delta_;
};

struct VectorPair {
    IntMatrix initial_vector; // 1 x n, single 1 at the initial state
    IntMatrix final_vector;   // n x 1, 1 at each final state
};

/// Parses the line-oriented DFA text format:
///   alphabet: a b
///   states: 2
///   initial: 0
///   finals: 0
///   trans: 0 a 1
/// `#` starts a comment. `states` is mandatory; `initial`/`finals` are
/// optional only when states = 0. Throws Error(ParseError) with a line number.
Dfa parse_dfa(std::string_view text);

/// Canonical, byte-deterministic serialization; parse_dfa round-trips to an
/// equal automaton.
std::string serialize_dfa(const Dfa& d);

/// Restriction to states that are both accessible and co-accessible,
/// renumbered in BFS order from the initial state (symbols in alphabet
/// order). Returns the empty automaton when the language is empty.
Dfa trim(const Dfa& d);

bool is_trim(const Dfa& d);

/// M[i][j] = number of symbols taking state i to state j.
IntMatrix adjacency(const Dfa& d);

VectorPair vectors(const Dfa& d);

} // namespace dfaspec

#endif
