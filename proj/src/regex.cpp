#include "dfaspec/regex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <set>
#include <vector>

namespace dfaspec {

namespace {

[[noreturn]] void syntax_fail(size_t pos, const std::string& reason) {
    throw Error(ErrorCode::RegexSyntaxError,
                "position " + std::to_string(pos) + ": " + reason);
}

struct Ast {
    enum class Kind { Epsilon, Literal, Concat, Union, Star } kind;
    char literal = 0;
    std::unique_ptr<Ast> left;
    std::unique_ptr<Ast> right;
};

using AstPtr = std::unique_ptr<Ast>;

AstPtr make(Ast::Kind kind, AstPtr left = nullptr, AstPtr right = nullptr) {
    auto node = std::make_unique<Ast>();
    node->kind = kind;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

class Parser {
public:
    explicit Parser(std::string_view pattern) : pattern_(pattern) {}

    AstPtr parse() {
        AstPtr e = parse_expr();
        if (pos_ != pattern_.size())
            syntax_fail(pos_, std::string("unexpected '") + pattern_[pos_] + "'");
        return e;
    }

private:
    std::string_view pattern_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ == pattern_.size(); }
    char peek() const { return pattern_[pos_]; }

    AstPtr parse_expr() {
        AstPtr t = parse_term();
        while (!at_end() && peek() == '+') {
            ++pos_;
            t = make(Ast::Kind::Union, std::move(t), parse_term());
        }
        return t;
    }

    AstPtr parse_term() {
        AstPtr t;
        while (!at_end() && peek() != ')' && peek() != '+') {
            AstPtr f = parse_factor();
            t = t ? make(Ast::Kind::Concat, std::move(t), std::move(f)) : std::move(f);
        }
        return t ? std::move(t) : make(Ast::Kind::Epsilon);
    }

    AstPtr parse_factor() {
        if (peek() == '*')
            syntax_fail(pos_, "nothing to repeat");
        AstPtr base;
        if (peek() == '(') {
            size_t open = pos_++;
            base = parse_expr();
            if (at_end() || peek() != ')')
                syntax_fail(at_end() ? pattern_.size() : pos_,
                            "unbalanced '(' opened at position " + std::to_string(open));
            ++pos_;
        } else {
            base = make(Ast::Kind::Literal);
            base->literal = peek();
            ++pos_;
        }
        while (!at_end() && peek() == '*') {
            ++pos_;
            base = make(Ast::Kind::Star, std::move(base));
        }
        return base;
    }
};

// Thompson construction. State 0.. with epsilon and labeled edges; one accept.
struct Nfa {
    struct State {
        std::vector<std::pair<char, int>> edges;
        std::vector<int> eps;
    };
    std::vector<State> states;
    int start = 0;
    int accept = 0;

    int add_state() {
        states.emplace_back();
        return static_cast<int>(states.size()) - 1;
    }
};

struct Fragment {
    int start;
    int accept;
};

Fragment build(Nfa& nfa, const Ast& node) {
    switch (node.kind) {
    case Ast::Kind::Epsilon: {
        int s = nfa.add_state();
        int t = nfa.add_state();
        nfa.states[s].eps.push_back(t);
        return {s, t};
    }
    case Ast::Kind::Literal: {
        int s = nfa.add_state();
        int t = nfa.add_state();
        nfa.states[s].edges.emplace_back(node.literal, t);
        return {s, t};
    }
    case Ast::Kind::Concat: {
        Fragment l = build(nfa, *node.left);
        Fragment r = build(nfa, *node.right);
        nfa.states[l.accept].eps.push_back(r.start);
        return {l.start, r.accept};
    }
    case Ast::Kind::Union: {
        Fragment l = build(nfa, *node.left);
        Fragment r = build(nfa, *node.right);
        int s = nfa.add_state();
        int t = nfa.add_state();
        nfa.states[s].eps.push_back(l.start);
        nfa.states[s].eps.push_back(r.start);
        nfa.states[l.accept].eps.push_back(t);
        nfa.states[r.accept].eps.push_back(t);
        return {s, t};
    }
    case Ast::Kind::Star: {
        Fragment c = build(nfa, *node.left);
        int s = nfa.add_state();
        int t = nfa.add_state();
        nfa.states[s].eps.push_back(c.start);
        nfa.states[s].eps.push_back(t);
        nfa.states[c.accept].eps.push_back(c.start);
        nfa.states[c.accept].eps.push_back(t);
        return {s, t};
    }
    }
    assert(false);
    return {0, 0};
}

std::vector<int> epsilon_closure(const Nfa& nfa, std::vector<int> set) {
    std::set<int> seen(set.begin(), set.end());
    for (size_t i = 0; i < set.size(); ++i)
        for (int t : nfa.states[set[i]].eps)
            if (seen.insert(t).second)
                set.push_back(t);
    return {seen.begin(), seen.end()};
}

void collect_literals(const Ast& node, std::set<char>& out) {
    if (node.kind == Ast::Kind::Literal)
        out.insert(node.literal);
    if (node.left)
        collect_literals(*node.left, out);
    if (node.right)
        collect_literals(*node.right, out);
}

} // namespace

Dfa compile_regex(std::string_view pattern) {
    AstPtr ast = Parser(pattern).parse();
    std::set<char> literal_set;
    collect_literals(*ast, literal_set);
    std::vector<char> alphabet(literal_set.begin(), literal_set.end());

    Nfa nfa;
    Fragment f = build(nfa, *ast);
    nfa.start = f.start;
    nfa.accept = f.accept;

    // Subset construction; the empty subset becomes a missing transition
    // rather than an explicit dead state.
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    std::vector<Dfa::Transition> trans;
    std::vector<int> finals;

    std::vector<int> start = epsilon_closure(nfa, {nfa.start});
    ids.emplace(start, 0);
    subsets.push_back(start);
    for (size_t i = 0; i < subsets.size(); ++i) {
        const std::vector<int> current = subsets[i];
        if (std::binary_search(current.begin(), current.end(), nfa.accept))
            finals.push_back(static_cast<int>(i));
        for (char a : alphabet) {
            std::vector<int> move;
            for (int q : current)
                for (const auto& [symbol, to] : nfa.states[q].edges)
                    if (symbol == a)
                        move.push_back(to);
            if (move.empty())
                continue;
            std::vector<int> next = epsilon_closure(nfa, std::move(move));
            auto [it, inserted] = ids.emplace(next, static_cast<int>(subsets.size()));
            if (inserted)
                subsets.push_back(next);
            trans.push_back({static_cast<int>(i), a, it->second});
        }
    }

    Dfa dfa(static_cast<int>(subsets.size()), alphabet, 0, finals, trans);
    return trim(dfa);
}

} // namespace dfaspec
