#include "generators.hpp"

#include <cassert>
#include <numeric>

#include "dfaspec/minimize.hpp"

namespace dfaspec::generators {

Dfa random_trim_dfa(Rng& rng, int max_states, int max_symbols) {
    std::uniform_int_distribution<int> state_dist(1, max_states);
    std::uniform_int_distribution<int> symbol_dist(1, max_symbols);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double densities[] = {0.5, 0.8, 1.0};

    while (true) {
        const int n = state_dist(rng);
        const int k = symbol_dist(rng);
        const double density = densities[rng() % 3];
        std::vector<char> alphabet;
        for (int i = 0; i < k; ++i)
            alphabet.push_back(static_cast<char>('a' + i));
        std::uniform_int_distribution<int> target(0, n - 1);

        std::vector<Dfa::Transition> trans;
        for (int q = 0; q < n; ++q)
            for (char a : alphabet)
                if (unit(rng) < density)
                    trans.push_back({q, a, target(rng)});
        std::vector<int> finals;
        for (int q = 0; q < n; ++q)
            if (unit(rng) < 0.3)
                finals.push_back(q);
        if (finals.empty())
            finals.push_back(target(rng));

        Dfa t = trim(Dfa(n, alphabet, 0, finals, trans));
        if (!t.empty())
            return t;
    }
}

IntMatrix random_rank_one_matrix(Rng& rng, int max_dim) {
    std::uniform_int_distribution<int> dim_dist(1, max_dim);
    std::uniform_int_distribution<int> entry(0, 3);
    while (true) {
        const int n = dim_dist(rng);
        std::vector<long> out(n), in(n);
        long out_max = 0, in_max = 0;
        for (int i = 0; i < n; ++i) {
            out[i] = entry(rng);
            out_max = std::max(out_max, out[i]);
            in[i] = entry(rng);
            in_max = std::max(in_max, in[i]);
        }
        if (out_max == 0 || in_max == 0)
            continue;
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = out[i] * in[j];
        return m;
    }
}

Dfa random_rank_one_automaton(Rng& rng) {
    std::uniform_int_distribution<int> dim_dist(1, 4);
    std::uniform_int_distribution<int> out_entry(1, 3);
    std::uniform_int_distribution<int> in_entry(0, 2);

    while (true) {
        const int n = dim_dist(rng);
        std::vector<int> out(n), in(n);
        int in_sum = 0;
        for (int i = 0; i < n; ++i) {
            out[i] = out_entry(rng);
            in[i] = in_entry(rng);
            in_sum += in[i];
        }
        if (in_sum == 0)
            continue;

        int max_row = 0;
        for (int i = 0; i < n; ++i)
            max_row = std::max(max_row, out[i] * in_sum);
        std::vector<char> alphabet;
        for (int i = 0; i < max_row; ++i)
            alphabet.push_back(static_cast<char>('a' + i));

        // Row p: first out[p]*in[0] symbols to state 0, next out[p]*in[1] to
        // state 1, and so on.
        std::vector<Dfa::Transition> trans;
        for (int p = 0; p < n; ++p) {
            int next_symbol = 0;
            for (int q = 0; q < n; ++q)
                for (int e = 0; e < out[p] * in[q]; ++e)
                    trans.push_back({p, alphabet[next_symbol++], q});
        }

        std::vector<int> finals;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int q = 0; q < n; ++q)
            if (in[q] > 0 && unit(rng) < 0.5)
                finals.push_back(q);
        if (finals.empty()) {
            for (int q = 0; q < n; ++q)
                if (in[q] > 0) {
                    finals.push_back(q);
                    break;
                }
        }
        // Occasionally make the initial state accepting so that c0 = 1 cases
        // show up.
        if (unit(rng) < 0.3 && finals.front() != 0)
            finals.push_back(0);

        Dfa t = trim(Dfa(n, alphabet, 0, finals, trans));
        if (t.empty())
            continue;
        Dfa minimal = minimize(t);
        IntMatrix m = adjacency(minimal);
        if (!m.is_zero() && rank(m) == 1)
            return t;
    }
}

namespace {

std::string random_regex_node(Rng& rng, const std::vector<char>& letters, int depth) {
    std::uniform_int_distribution<int> kind_dist(0, 99);
    const int kind = depth == 0 ? 0 : kind_dist(rng);
    auto letter = [&]() { return std::string(1, letters[rng() % letters.size()]); };
    if (kind < 40)
        return letter();
    if (kind < 65)
        return random_regex_node(rng, letters, depth - 1) +
               random_regex_node(rng, letters, depth - 1);
    if (kind < 85)
        return "(" + random_regex_node(rng, letters, depth - 1) + "+" +
               random_regex_node(rng, letters, depth - 1) + ")";
    return "(" + random_regex_node(rng, letters, depth - 1) + ")*";
}

} // namespace

std::string random_regex(Rng& rng, int max_symbols, int depth) {
    std::uniform_int_distribution<int> count(1, max_symbols);
    const int k = count(rng);
    std::vector<char> letters;
    for (int i = 0; i < k; ++i)
        letters.push_back(static_cast<char>('a' + i));
    return random_regex_node(rng, letters, depth);
}

Dfa fixture_a1() {
    // Both states behave identically on every symbol; only finality of the
    // initial state separates them.
    return Dfa(2, {'a', 'b', 'c', 'd'}, 0, {0},
               {{0, 'a', 0}, {0, 'b', 0}, {0, 'c', 1}, {0, 'd', 1},
                {1, 'a', 0}, {1, 'b', 0}, {1, 'c', 1}, {1, 'd', 1}});
}

Dfa fixture_b1() {
    return Dfa(3, {'a', 'b', 'c', 'd'}, 0, {0, 1},
               {{0, 'a', 0}, {0, 'b', 1}, {0, 'c', 2}, {0, 'd', 2},
                {1, 'a', 1}, {1, 'b', 1}, {1, 'c', 2}, {1, 'd', 2},
                {2, 'a', 0}, {2, 'b', 0}, {2, 'c', 2}, {2, 'd', 2}});
}

Dfa fixture_c1() {
    std::vector<Dfa::Transition> trans;
    for (int q = 0; q < 4; ++q)
        for (int t = 0; t < 4; ++t)
            trans.push_back({q, static_cast<char>('a' + t), t});
    return Dfa(4, {'a', 'b', 'c', 'd'}, 0, {0, 1}, trans);
}

Dfa fixture_d1() {
    return Dfa(2, {'a', 'b', 'c', 'd', 'e', 'f'}, 0, {1},
               {{0, 'a', 0}, {0, 'b', 0}, {0, 'c', 1}, {0, 'd', 1}, {0, 'e', 1}, {0, 'f', 1},
                {1, 'a', 0}, {1, 'b', 1}, {1, 'c', 1}});
}

Dfa fixture_inout() {
    return Dfa(3, {'a', 'b', 'c', 'd', 'e', 'f'}, 0, {2},
               {{0, 'a', 1}, {0, 'b', 1}, {0, 'c', 2},
                {1, 'a', 1}, {1, 'b', 1}, {1, 'c', 1}, {1, 'd', 1}, {1, 'e', 2}, {1, 'f', 2},
                {2, 'a', 1}, {2, 'b', 1}, {2, 'c', 2}});
}

Dfa fixture_fibonacci() {
    return Dfa(2, {'a', 'b'}, 0, {0}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'a', 0}});
}

} // namespace dfaspec::generators
