#include "dfaspec/counting.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "dfaspec/minimize.hpp"
#include "dfaspec/rank_one.hpp"

namespace dfaspec {

CountTable::CountTable(Dfa d) : dfa_(std::move(d)) {}

void CountTable::ensure(long length) {
    const int n = dfa_.state_count();
    if (rows_.empty()) {
        std::vector<Int> base(static_cast<size_t>(n));
        for (int q = 0; q < n; ++q)
            base[q] = dfa_.is_final(q) ? 1 : 0;
        rows_.push_back(std::move(base));
    }
    while (static_cast<long>(rows_.size()) <= length) {
        const std::vector<Int>& prev = rows_.back();
        std::vector<Int> next(static_cast<size_t>(n));
        for (int q = 0; q < n; ++q)
            for (const auto& [symbol, to] : dfa_.transitions_from(q))
                next[q] += prev[to];
        rows_.push_back(std::move(next));
    }
}

const Int& CountTable::count_from(int state, long length) {
    assert(state >= 0 && state < dfa_.state_count() && length >= 0);
    ensure(length);
    return rows_[length][state];
}

Int CountTable::count(long n) {
    assert(n >= 0);
    if (dfa_.empty())
        return 0;
    return count_from(dfa_.initial(), n);
}

Int CountTable::cumulative(long n) {
    Int total = 0;
    for (long k = 0; k <= n; ++k)
        total += count(k);
    return total;
}

Int count_words(const Dfa& d, long n) {
    return CountTable(d).count(n);
}

Int cumulative_count(const Dfa& d, long n) {
    return CountTable(d).cumulative(n);
}

Int rank_word(const Dfa& d, std::string_view w) {
    if (!d.accepts(w))
        throw Error(ErrorCode::WordNotInLanguage, "\"" + std::string(w) + "\"");

    CountTable table(d);
    Int index = table.cumulative(static_cast<long>(w.size()) - 1);
    int state = d.initial();
    for (size_t i = 0; i < w.size(); ++i) {
        const long remaining = static_cast<long>(w.size() - i) - 1;
        for (const auto& [symbol, to] : d.transitions_from(state)) {
            if (symbol >= w[i])
                break;
            index += table.count_from(to, remaining);
        }
        state = *d.target(state, w[i]);
    }
    return index;
}

namespace {

bool has_cycle(const Dfa& d) {
    const int n = d.state_count();
    std::vector<int> color(n, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, std::map<char, int>::const_iterator>> stack;
    for (int start = 0; start < n; ++start) {
        if (color[start] != 0)
            continue;
        color[start] = 1;
        stack.emplace_back(start, d.transitions_from(start).begin());
        while (!stack.empty()) {
            auto& [q, it] = stack.back();
            if (it == d.transitions_from(q).end()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int to = (it++)->second;
            if (color[to] == 1)
                return true;
            if (color[to] == 0) {
                color[to] = 1;
                stack.emplace_back(to, d.transitions_from(to).begin());
            }
        }
    }
    return false;
}

// Smallest n with closed-form cumulative(n) > index, or -1 when the (finite)
// language runs out.
long rank_one_target_length(const ClosedFormCount& cf, const Int& index) {
    Int cumulative = cf.c0;
    if (cumulative > index)
        return 0;
    Int power = 1; // lambda^(n-1)
    long n = 0;
    while (true) {
        ++n;
        cumulative += cf.c * power;
        if (cumulative > index)
            return n;
        if (cf.lambda == 0)
            return -1; // counts vanish from length 2 on
        power *= cf.lambda;
    }
}

} // namespace

std::string unrank_word(const Dfa& d, const Int& index) {
    assert(index >= 0);
    Dfa trimmed = trim(d);
    if (trimmed.empty())
        throw Error(ErrorCode::IndexOutOfLanguage, "the language is empty");
    const bool finite = !has_cycle(trimmed);

    // Locate the target length: closed form for rank-one languages, table
    // extension otherwise.
    CountTable table(d);
    long length = -1;
    IntMatrix minimal_adjacency = adjacency(nerode_partition(trimmed).minimal);
    if (!minimal_adjacency.is_zero() && rank(minimal_adjacency) == 1) {
        ClosedFormCount cf = closed_form_count(trimmed);
        length = rank_one_target_length(cf, index);
        if (length < 0)
            throw Error(ErrorCode::IndexOutOfLanguage,
                        "index " + index.get_str() + " exceeds the language size");
    } else {
        Int cumulative = 0;
        for (long n = 0;; ++n) {
            if (finite && n >= trimmed.state_count())
                throw Error(ErrorCode::IndexOutOfLanguage,
                            "index " + index.get_str() + " exceeds the language size");
            cumulative += table.count(n);
            if (cumulative > index) {
                length = n;
                break;
            }
        }
    }

    Int residual = index - table.cumulative(length - 1);
    std::string word;
    word.reserve(static_cast<size_t>(length));
    int state = d.initial();
    for (long pos = 0; pos < length; ++pos) {
        const long remaining = length - pos - 1;
        bool advanced = false;
        for (const auto& [symbol, to] : d.transitions_from(state)) {
            const Int& below = table.count_from(to, remaining);
            if (residual < below) {
                word.push_back(symbol);
                state = to;
                advanced = true;
                break;
            }
            residual -= below;
        }
        assert(advanced);
        (void)advanced;
    }
    assert(d.is_final(state));
    return word;
}

std::vector<unsigned char> encode_index(const Int& index) {
    assert(index >= 0);
    std::vector<unsigned char> bytes;
    Int v = index;
    while (v > 0) {
        bytes.push_back(static_cast<unsigned char>(mpz_fdiv_ui(v.get_mpz_t(), 256)));
        v >>= 8;
    }
    std::reverse(bytes.begin(), bytes.end());
    return bytes;
}

Int decode_index(const std::vector<unsigned char>& bytes) {
    if (!bytes.empty() && bytes.front() == 0)
        throw Error(ErrorCode::MalformedIndexBytes, "leading zero byte");
    Int v = 0;
    for (unsigned char b : bytes) {
        v <<= 8;
        v += b;
    }
    return v;
}

std::vector<unsigned char> compress(const Dfa& d, std::string_view w) {
    return encode_index(rank_word(d, w));
}

std::string decompress(const Dfa& d, const std::vector<unsigned char>& bytes) {
    return unrank_word(d, decode_index(bytes));
}

} // namespace dfaspec
