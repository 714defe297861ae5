#include "dfaspec/rank_one.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "dfaspec/minimize.hpp"

namespace dfaspec {

namespace {

void require_rank_one(const IntMatrix& m) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    if (m.is_zero())
        throw Error(ErrorCode::ZeroMatrix, "rank-one decomposition of the zero matrix");
    for (const Int& e : m.entries())
        if (e < 0)
            throw std::invalid_argument("adjacency-style matrix must be nonnegative");
    if (rank(m) != 1)
        throw Error(ErrorCode::NotRankOne, "matrix rank is " + std::to_string(rank(m)));
}

std::vector<Int> primitive_row(const IntMatrix& m, int row) {
    std::vector<Int> v(m.cols());
    Int g = 0;
    for (int j = 0; j < m.cols(); ++j) {
        v[j] = m.at(row, j);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    assert(g > 0);
    if (g > 1)
        for (Int& e : v)
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    return v;
}

int first_nonzero_row(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0)
                return i;
    return -1;
}

} // namespace

std::vector<Int> in_vector(const IntMatrix& m) {
    require_rank_one(m);
    return primitive_row(m, first_nonzero_row(m));
}

RankOneDecomposition decompose(const IntMatrix& m) {
    RankOneDecomposition dec;
    dec.in_vector = in_vector(m);
    const int n = m.rows();
    int anchor = 0;
    while (dec.in_vector[anchor] == 0)
        ++anchor;
    dec.out_vector.resize(n);
    dec.lambda = 0;
    for (int i = 0; i < n; ++i) {
        // row_i = out_i * in; primitivity of in makes the multiple integral.
        Int& alpha = dec.out_vector[i];
        mpz_divexact(alpha.get_mpz_t(), m.at(i, anchor).get_mpz_t(),
                     dec.in_vector[anchor].get_mpz_t());
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != alpha * dec.in_vector[j])
                throw Error(ErrorCode::NotRankOne,
                            "row " + std::to_string(i) + " is not a multiple of the in-vector");
        dec.lambda += dec.in_vector[i] * alpha;
    }
    return dec;
}

std::vector<Int> out_vector(const IntMatrix& m) {
    return decompose(m).out_vector;
}

IntMatrix fast_power(const RankOneDecomposition& dec, const IntMatrix& m, unsigned long n) {
    if (n == 0)
        throw Error(ErrorCode::InvalidExponent, "M^0 is the identity, not rank-one");
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), dec.lambda.get_mpz_t(), n - 1);
    IntMatrix result(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            result.at(i, j) = scale * m.at(i, j);
    return result;
}

bool is_expanded_normal(const IntMatrix& m) {
    for (const Int& e : in_vector(m))
        if (e != 0 && e != 1)
            return false;
    return true;
}

Partition canonical_partition(const IntMatrix& m) {
    std::vector<Int> in = in_vector(m);
    std::vector<std::vector<int>> blocks(in.size());
    int next = 0;
    for (size_t i = 0; i < in.size(); ++i) {
        assert(in[i].fits_sint_p());
        int size = in[i] == 0 ? 1 : static_cast<int>(in[i].get_si());
        for (int j = 0; j < size; ++j)
            blocks[i].push_back(next++);
    }
    return Partition(std::move(blocks), next);
}

Dfa expanded_canonical_automaton(const Dfa& d) {
    Dfa trimmed = trim(d);
    if (trimmed.empty())
        throw Error(ErrorCode::EmptyLanguage, "no expanded canonical automaton exists");
    Dfa minimal = nerode_partition(trimmed).minimal;
    IntMatrix m = adjacency(minimal);
    if (m.is_zero() || rank(m) != 1)
        throw Error(ErrorCode::NotRankOne, "language rank is " + std::to_string(rank(m)));

    Partition pi = canonical_partition(m);
    const int n = minimal.state_count();
    std::vector<int> offset(n), size(n);
    for (int q = 0; q < n; ++q) {
        offset[q] = pi.block(q).front();
        size[q] = pi.block_size(q);
    }

    std::vector<Dfa::Transition> trans;
    for (int p = 0; p < n; ++p) {
        // Symbols from p grouped by target, in alphabet order.
        std::vector<std::vector<char>> group(n);
        for (const auto& [symbol, to] : minimal.transitions_from(p))
            group[to].push_back(symbol);
        for (int q = 0; q < n; ++q) {
            if (group[q].empty())
                continue;
            const int copies = size[q];
            if (group[q].size() % copies != 0)
                throw Error(ErrorCode::ExpansionNotIntegral,
                            "cannot split " + std::to_string(group[q].size()) +
                                " symbols over " + std::to_string(copies) + " copies");
            const size_t per = group[q].size() / copies;
            for (int j = 0; j < copies; ++j)
                for (size_t s = 0; s < per; ++s)
                    for (int i = 0; i < size[p]; ++i)
                        trans.push_back({offset[p] + i, group[q][j * per + s], offset[q] + j});
        }
    }

    std::vector<int> finals;
    for (int f : minimal.finals())
        for (int j = 0; j < size[f]; ++j)
            finals.push_back(offset[f] + j);

    Dfa expanded(pi.ground_size(), minimal.alphabet(), offset[minimal.initial()], finals,
                 trans);

    // Per-instance diagnostics: the label distribution must reproduce the
    // matrix expansion and preserve the language.
    if (adjacency(expanded) != expansion(m, pi))
        throw std::logic_error("expanded automaton does not realize the matrix expansion");
    if (!equivalent(expanded, trimmed))
        throw std::logic_error("expanded automaton is not language-equivalent to its source");
    return expanded;
}

Int ClosedFormCount::eval(unsigned long n) const {
    if (n == 0)
        return c0;
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), lambda.get_mpz_t(), n - 1);
    return c * scale;
}

Rat ClosedFormCount::alpha() const {
    if (lambda == 0)
        throw std::domain_error("alpha is undefined for nilpotent counts");
    Rat a(c, lambda);
    a.canonicalize();
    return a;
}

ClosedFormCount closed_form_count(const Dfa& d) {
    Dfa minimal = minimize(d);
    if (minimal.empty())
        throw Error(ErrorCode::EmptyLanguage, "empty language has no closed-form count");
    IntMatrix m = adjacency(minimal);
    if (m.is_zero() || rank(m) != 1)
        throw Error(ErrorCode::NotRankOne, "language rank is " + std::to_string(rank(m)));

    ClosedFormCount cf;
    cf.c0 = minimal.is_final(minimal.initial()) ? 1 : 0;
    VectorPair v = vectors(minimal);
    cf.c = mat_mul(mat_mul(v.initial_vector, m), v.final_vector).at(0, 0);
    cf.lambda = decompose(m).lambda;
    return cf;
}

} // namespace dfaspec
