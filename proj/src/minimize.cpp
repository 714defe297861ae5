#include "dfaspec/minimize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace dfaspec {

NerodePartitionResult nerode_partition(const Dfa& d) {
    if (d.empty())
        throw Error(ErrorCode::EmptyAutomaton, "nerode_partition needs at least one state");
    if (!is_trim(d))
        throw std::invalid_argument("nerode_partition: automaton must be trim");

    const int n = d.state_count();
    const int sink = n;

    // Moore refinement over states plus the implicit sink. Initial split:
    // finals vs. everything else (the sink is never accepting).
    std::vector<int> block(static_cast<size_t>(n) + 1, 0);
    for (int q = 0; q < n; ++q)
        block[q] = d.is_final(q) ? 1 : 0;
    int block_count = d.finals().empty() ? 1 : 2;

    auto target_block = [&](int q, char a) {
        if (q == sink)
            return block[sink];
        auto t = d.target(q, a);
        return block[t ? *t : sink];
    };

    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(static_cast<size_t>(n) + 1);
        for (int q = 0; q <= n; ++q) {
            std::vector<int> sig;
            sig.reserve(d.alphabet().size() + 1);
            sig.push_back(block[q]);
            for (char a : d.alphabet())
                sig.push_back(target_block(q, a));
            auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next[q] = it->second;
        }
        int next_count = static_cast<int>(ids.size());
        block.swap(next);
        if (next_count == block_count)
            break;
        block_count = next_count;
    }

    // At fixpoint the sink's block holds only the sink: every trim state has a
    // nonempty future.
    for (int q = 0; q < n; ++q)
        assert(block[q] != block[sink]);

    // Quotient transitions, then BFS-order the blocks from the initial block.
    std::vector<int> representative(block_count, -1);
    for (int q = n - 1; q >= 0; --q)
        representative[block[q]] = q;

    auto block_target = [&](int b, char a) -> int {
        auto t = d.target(representative[b], a);
        return t ? block[*t] : -1;
    };

    std::vector<int> order_of_block(block_count, -1);
    std::vector<int> bfs;
    bfs.push_back(block[d.initial()]);
    order_of_block[block[d.initial()]] = 0;
    for (size_t i = 0; i < bfs.size(); ++i) {
        for (char a : d.alphabet()) {
            int t = block_target(bfs[i], a);
            if (t >= 0 && t != block[sink] && order_of_block[t] == -1) {
                order_of_block[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    const int real_blocks = block_count - 1; // minus the sink's block
    assert(static_cast<int>(bfs.size()) == real_blocks);

    std::vector<std::vector<int>> blocks(real_blocks);
    for (int q = 0; q < n; ++q)
        blocks[order_of_block[block[q]]].push_back(q);

    std::vector<Dfa::Transition> trans;
    std::vector<int> finals;
    for (int b = 0; b < real_blocks; ++b) {
        int rep = blocks[b].front();
        if (d.is_final(rep))
            finals.push_back(b);
        for (const auto& [symbol, to] : d.transitions_from(rep))
            trans.push_back({b, symbol, order_of_block[block[to]]});
    }
    Dfa minimal(real_blocks, d.alphabet(), 0, finals, trans);
    return NerodePartitionResult{Partition(std::move(blocks), n), std::move(minimal)};
}

Dfa minimize(const Dfa& d) {
    Dfa t = trim(d);
    if (t.empty())
        return t;
    return nerode_partition(t).minimal;
}

Dfa quotient_automaton(const Dfa& d, const Partition& pi) {
    if (pi.ground_size() != d.state_count())
        throw Error(ErrorCode::DimensionMismatch,
                    "partition of " + std::to_string(pi.ground_size()) + " states against " +
                        std::to_string(d.state_count()) + "-state automaton");
    if (d.empty())
        return d;

    const int k = pi.block_count();
    std::vector<Dfa::Transition> trans;
    std::vector<int> finals;
    for (int b = 0; b < k; ++b) {
        const std::vector<int>& members = pi.block(b);
        bool final_flag = d.is_final(members.front());
        for (int q : members)
            if (d.is_final(q) != final_flag)
                throw Error(ErrorCode::NotACongruence,
                            "block " + std::to_string(b) + ": states disagree on finality");
        if (final_flag)
            finals.push_back(b);
        for (char a : d.alphabet()) {
            bool have = false;
            int target_block = -1;
            bool first = true;
            for (int q : members) {
                auto t = d.target(q, a);
                int tb = t ? pi.block_of(*t) : -1;
                if (first) {
                    have = t.has_value();
                    target_block = tb;
                    first = false;
                } else if (tb != target_block) {
                    throw Error(ErrorCode::NotACongruence,
                                "block " + std::to_string(b) + ", symbol '" + a +
                                    "': targets fall in different blocks");
                }
            }
            if (have)
                trans.push_back({b, a, target_block});
        }
    }
    return Dfa(k, d.alphabet(), pi.block_of(d.initial()), finals, trans);
}

bool equivalent(const Dfa& a, const Dfa& b) {
    std::vector<char> alphabet;
    std::set_union(a.alphabet().begin(), a.alphabet().end(), b.alphabet().begin(),
                   b.alphabet().end(), std::back_inserter(alphabet));

    auto accepting = [](const Dfa& d, int s) { return s >= 0 && d.is_final(s); };
    auto step = [](const Dfa& d, int s, char c) -> int {
        if (s < 0)
            return -1;
        auto t = d.target(s, c);
        return t ? *t : -1;
    };

    const int start_a = a.empty() ? -1 : a.initial();
    const int start_b = b.empty() ? -1 : b.initial();
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    queue.emplace_back(start_a, start_b);
    seen.insert({start_a, start_b});
    while (!queue.empty()) {
        auto [sa, sb] = queue.front();
        queue.pop_front();
        if (accepting(a, sa) != accepting(b, sb))
            return false;
        if (sa < 0 && sb < 0)
            continue;
        for (char c : alphabet) {
            std::pair<int, int> next{step(a, sa, c), step(b, sb, c)};
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return true;
}

} // namespace dfaspec
