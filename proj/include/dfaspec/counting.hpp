#ifndef DFASPEC_COUNTING_HPP
#define DFASPEC_COUNTING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dfaspec/dfa.hpp"
#include "dfaspec/matrix.hpp"

namespace dfaspec {

/// Per-state, per-length table of accepted-word counts:
/// count_from(q, k) = |{w : |w| = k, started at q the run accepts}|.
/// Rows are appended on demand; a table is confined to one analysis context
/// (give each thread its own).
class CountTable {
public:
    explicit CountTable(Dfa d);

    const Dfa& dfa() const { return dfa_; }

    const Int& count_from(int state, long length);

    /// C_L(n): accepted words of length exactly n.
    Int count(long n);

    /// Sum of count(k) for k = 0..n; 0 for n < 0.
    Int cumulative(long n);

private:
    void ensure(long length);

    Dfa dfa_;
    std::vector<std::vector<Int>> rows_; // rows_[k][q]
};

Int count_words(const Dfa& d, long n);
Int cumulative_count(const Dfa& d, long n);

/// Shortlex index of w in L(d): all shorter words of L, plus the words of
/// equal length branching below w. Throws Error(WordNotInLanguage).
Int rank_word(const Dfa& d, std::string_view w);

/// Inverse of rank_word. Uses the rank-one closed form to locate the target
/// length when the language is rank-one. Throws Error(IndexOutOfLanguage)
/// when a finite language has fewer words.
std::string unrank_word(const Dfa& d, const Int& index);

/// Minimal big-endian byte encoding of a rank index; empty encodes 0.
std::vector<unsigned char> encode_index(const Int& index);
/// Inverse of encode_index; rejects a leading zero byte
/// (Error(MalformedIndexBytes)).
Int decode_index(const std::vector<unsigned char>& bytes);

std::vector<unsigned char> compress(const Dfa& d, std::string_view w);
std::string decompress(const Dfa& d, const std::vector<unsigned char>& bytes);

} // namespace dfaspec

#endif
