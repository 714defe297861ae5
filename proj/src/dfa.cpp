#include "dfaspec/dfa.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace dfaspec {

Dfa::Dfa(int state_count, std::vector<char> alphabet, int initial,
         std::vector<int> finals, const std::vector<Transition>& transitions)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(static_cast<size_t>(state_count)) {
    if (state_count_ < 0)
        throw std::invalid_argument("negative state count");
    if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
        std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
        throw std::invalid_argument("alphabet must be sorted and duplicate-free");
    if (state_count_ == 0) {
        initial_ = -1;
        if (!finals_.empty() || !transitions.empty())
            throw std::invalid_argument("empty automaton cannot have finals or transitions");
        return;
    }
    if (initial_ < 0 || initial_ >= state_count_)
        throw std::invalid_argument("initial state out of range");
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    for (int f : finals_)
        if (f < 0 || f >= state_count_)
            throw std::invalid_argument("final state out of range");
    for (const Transition& t : transitions) {
        if (t.from < 0 || t.from >= state_count_ || t.to < 0 || t.to >= state_count_)
            throw std::invalid_argument("transition endpoint out of range");
        if (!std::binary_search(alphabet_.begin(), alphabet_.end(), t.symbol))
            throw std::invalid_argument(std::string("symbol '") + t.symbol +
                                        "' not in alphabet");
        if (!delta_[t.from].emplace(t.symbol, t.to).second)
            throw std::invalid_argument("duplicate transition");
    }
}

bool Dfa::is_final(int state) const {
    return std::binary_search(finals_.begin(), finals_.end(), state);
}

std::optional<int> Dfa::target(int state, char symbol) const {
    const auto& row = delta_[state];
    auto it = row.find(symbol);
    if (it == row.end())
        return std::nullopt;
    return it->second;
}

size_t Dfa::transition_count() const {
    size_t n = 0;
    for (const auto& row : delta_)
        n += row.size();
    return n;
}

std::optional<int> Dfa::run(std::string_view word) const {
    if (empty())
        return std::nullopt;
    int state = initial_;
    for (char c : word) {
        auto next = target(state, c);
        if (!next)
            return std::nullopt;
        state = *next;
    }
    return state;
}

bool Dfa::accepts(std::string_view word) const {
    auto end = run(word);
    return end && is_final(*end);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& reason) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == ' ') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

int parse_index(const std::string& token, int line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(line, "expected a nonnegative integer, got '" + token + "'");
    try {
        return std::stoi(token);
    } catch (const std::out_of_range&) {
        parse_fail(line, "index '" + token + "' too large");
    }
}

} // namespace

Dfa parse_dfa(std::string_view text) {
    std::optional<int> states;
    std::optional<int> initial;
    std::optional<std::vector<int>> finals;
    std::optional<std::vector<char>> alphabet;
    int states_line = 0;
    struct RawTransition {
        int line;
        int from;
        char symbol;
        int to;
    };
    std::vector<RawTransition> trans;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        // strip carriage returns and trailing blanks
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;
        const std::string& key = tok[0];
        if (key == "alphabet:") {
            if (alphabet)
                parse_fail(line_no, "duplicate alphabet line");
            std::vector<char> a;
            for (size_t i = 1; i < tok.size(); ++i) {
                if (tok[i].size() != 1)
                    parse_fail(line_no, "alphabet symbols must be single characters, got '" +
                                            tok[i] + "'");
                a.push_back(tok[i][0]);
            }
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                parse_fail(line_no, "duplicate alphabet symbol");
            alphabet = std::move(a);
        } else if (key == "states:") {
            if (states)
                parse_fail(line_no, "duplicate states line");
            if (tok.size() != 2)
                parse_fail(line_no, "states line needs exactly one count");
            states = parse_index(tok[1], line_no);
            states_line = line_no;
        } else if (key == "initial:") {
            if (initial)
                parse_fail(line_no, "duplicate initial line");
            if (tok.size() != 2)
                parse_fail(line_no, "initial line needs exactly one state");
            initial = parse_index(tok[1], line_no);
        } else if (key == "finals:") {
            if (finals)
                parse_fail(line_no, "duplicate finals line");
            std::vector<int> f;
            for (size_t i = 1; i < tok.size(); ++i)
                f.push_back(parse_index(tok[i], line_no));
            finals = std::move(f);
        } else if (key == "trans:") {
            if (tok.size() != 4)
                parse_fail(line_no, "trans line needs 'from symbol to'");
            if (tok[2].size() != 1)
                parse_fail(line_no, "transition symbol must be a single character");
            trans.push_back({line_no, parse_index(tok[1], line_no), tok[2][0],
                             parse_index(tok[3], line_no)});
        } else {
            parse_fail(line_no, "unknown directive '" + key + "'");
        }
    }

    if (!states)
        parse_fail(line_no, "missing states line");
    const int n = *states;
    if (!alphabet)
        alphabet = std::vector<char>{};
    if (n == 0) {
        if (initial)
            parse_fail(states_line, "initial state given for an empty automaton");
        if (finals && !finals->empty())
            parse_fail(states_line, "final states given for an empty automaton");
        if (!trans.empty())
            parse_fail(trans.front().line, "transition given for an empty automaton");
        return Dfa(0, *alphabet, -1, {}, {});
    }
    if (!initial)
        parse_fail(states_line, "missing initial line");
    if (!finals)
        parse_fail(states_line, "missing finals line");
    if (*initial >= n)
        parse_fail(states_line, "initial state " + std::to_string(*initial) + " out of range");
    for (int f : *finals)
        if (f >= n)
            parse_fail(states_line, "final state " + std::to_string(f) + " out of range");

    std::vector<Dfa::Transition> validated;
    std::map<std::pair<int, char>, int> seen;
    for (const RawTransition& t : trans) {
        if (t.from >= n || t.to >= n)
            parse_fail(t.line, "transition state out of range");
        if (!std::binary_search(alphabet->begin(), alphabet->end(), t.symbol))
            parse_fail(t.line, std::string("unknown symbol '") + t.symbol + "'");
        auto [it, inserted] = seen.emplace(std::make_pair(t.from, t.symbol), t.line);
        if (!inserted)
            parse_fail(t.line, "nondeterministic: state " + std::to_string(t.from) +
                                   " already has a transition on '" + t.symbol +
                                   "' (line " + std::to_string(it->second) + ")");
        validated.push_back({t.from, t.symbol, t.to});
    }
    return Dfa(n, *alphabet, *initial, *finals, validated);
}

std::string serialize_dfa(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : d.alphabet())
        out << ' ' << c;
    out << '\n';
    out << "states: " << d.state_count() << '\n';
    if (!d.empty()) {
        out << "initial: " << d.initial() << '\n';
        out << "finals:";
        for (int f : d.finals())
            out << ' ' << f;
        out << '\n';
        for (int q = 0; q < d.state_count(); ++q)
            for (const auto& [symbol, to] : d.transitions_from(q))
                out << "trans: " << q << ' ' << symbol << ' ' << to << '\n';
    }
    return out.str();
}

Dfa trim(const Dfa& d) {
    if (d.empty())
        return d;
    const int n = d.state_count();

    std::vector<bool> accessible(n, false);
    std::deque<int> queue{d.initial()};
    accessible[d.initial()] = true;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto& [symbol, to] : d.transitions_from(q))
            if (!accessible[to]) {
                accessible[to] = true;
                queue.push_back(to);
            }
    }

    std::vector<std::vector<int>> reverse(n);
    for (int q = 0; q < n; ++q)
        for (const auto& [symbol, to] : d.transitions_from(q))
            reverse[to].push_back(q);
    std::vector<bool> coaccessible(n, false);
    for (int f : d.finals()) {
        coaccessible[f] = true;
        queue.push_back(f);
    }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : reverse[q])
            if (!coaccessible[p]) {
                coaccessible[p] = true;
                queue.push_back(p);
            }
    }

    std::vector<bool> keep(n);
    for (int q = 0; q < n; ++q)
        keep[q] = accessible[q] && coaccessible[q];
    if (!keep[d.initial()])
        return Dfa(0, d.alphabet(), -1, {}, {});

    // BFS renumbering over kept states, symbols in alphabet order.
    std::vector<int> renumber(n, -1);
    std::vector<int> order;
    renumber[d.initial()] = 0;
    order.push_back(d.initial());
    queue.push_back(d.initial());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto& [symbol, to] : d.transitions_from(q))
            if (keep[to] && renumber[to] == -1) {
                renumber[to] = static_cast<int>(order.size());
                order.push_back(to);
                queue.push_back(to);
            }
    }

    std::vector<Dfa::Transition> trans;
    std::vector<int> finals;
    for (int old : order) {
        if (d.is_final(old))
            finals.push_back(renumber[old]);
        for (const auto& [symbol, to] : d.transitions_from(old))
            if (keep[to])
                trans.push_back({renumber[old], symbol, renumber[to]});
    }
    return Dfa(static_cast<int>(order.size()), d.alphabet(), 0, finals, trans);
}

bool is_trim(const Dfa& d) {
    return trim(d).state_count() == d.state_count();
}

IntMatrix adjacency(const Dfa& d) {
    const int n = d.state_count();
    IntMatrix m(n, n);
    for (int q = 0; q < n; ++q)
        for (const auto& [symbol, to] : d.transitions_from(q))
            m.at(q, to) += 1;
    return m;
}

VectorPair vectors(const Dfa& d) {
    const int n = d.state_count();
    VectorPair v{IntMatrix(1, n), IntMatrix(n, 1)};
    if (!d.empty())
        v.initial_vector.at(0, d.initial()) = 1;
    for (int f : d.finals())
        v.final_vector.at(f, 0) = 1;
    return v;
}

} // namespace dfaspec
