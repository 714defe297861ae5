#ifndef DFASPEC_REGEX_HPP
#define DFASPEC_REGEX_HPP

#include <string_view>

#include "dfaspec/dfa.hpp"

namespace dfaspec {

/// Compiles a regex over single-character literals with `+` (union),
/// juxtaposition (concatenation), `*` (star) and parentheses into a trim
/// deterministic automaton (Thompson construction, then subset construction,
/// then trim; no minimization). The result's alphabet is the sorted set of
/// literals appearing in the pattern.
/// Throws Error(RegexSyntaxError) with a 0-based position on bad syntax.
Dfa compile_regex(std::string_view pattern);

} // namespace dfaspec

#endif
