#include "dfaspec/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace dfaspec {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BlockCountMismatch: return "BlockCountMismatch";
    case ErrorCode::ExpansionNotIntegral: return "ExpansionNotIntegral";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RegexSyntaxError: return "RegexSyntaxError";
    case ErrorCode::EmptyAutomaton: return "EmptyAutomaton";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::WordNotInLanguage: return "WordNotInLanguage";
    case ErrorCode::IndexOutOfLanguage: return "IndexOutOfLanguage";
    case ErrorCode::MalformedIndexBytes: return "MalformedIndexBytes";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::EmptyLanguage: return "EmptyLanguage";
    }
    return "UnknownError";
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    assert(entries_.size() == static_cast<size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        assert(static_cast<int>(rows[i].size()) == c);
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0)
            return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << at(i, j);
        out << "]";
    }
    out << "]";
    return out.str();
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    assert(entries_.size() == static_cast<size_t>(rows) * cols);
    for (Rat& e : entries_)
        e.canonicalize();
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_integral() const {
    for (const Rat& e : entries_)
        if (e.get_den() != 1)
            return false;
    return true;
}

IntMatrix RatMatrix::to_integer() const {
    assert(is_integral());
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j).get_num();
    return m;
}

std::string RatMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << at(i, j);
        out << "]";
    }
    out << "]";
    return out.str();
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = Rat(m.at(i, j));
    return r;
}

Partition::Partition(std::vector<std::vector<int>> blocks, int ground_size)
    : blocks_(std::move(blocks)), ground_size_(ground_size) {
    if (ground_size_ < 0)
        throw Error(ErrorCode::InvalidPartition, "negative ground size");
    block_of_.assign(ground_size_, -1);
    size_t covered = 0;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty())
            throw Error(ErrorCode::InvalidPartition, "empty block");
        std::sort(blocks_[b].begin(), blocks_[b].end());
        for (int e : blocks_[b]) {
            if (e < 0 || e >= ground_size_)
                throw Error(ErrorCode::InvalidPartition,
                            "element " + std::to_string(e) + " out of range");
            if (block_of_[e] != -1)
                throw Error(ErrorCode::InvalidPartition,
                            "element " + std::to_string(e) + " appears twice");
            block_of_[e] = static_cast<int>(b);
            ++covered;
        }
    }
    if (covered != static_cast<size_t>(ground_size_))
        throw Error(ErrorCode::InvalidPartition, "blocks do not cover the ground set");
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int i = 0; i < n; ++i)
        blocks[i] = {i};
    return Partition(std::move(blocks), n);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "{";
    for (size_t b = 0; b < blocks_.size(); ++b) {
        out << (b ? ", {" : "{");
        for (size_t i = 0; i < blocks_[b].size(); ++i)
            out << (i ? "," : "") << blocks_[b][i];
        out << "}";
    }
    out << "}";
    return out.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long n) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, "mat_pow of " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (n > 0) {
        if (n & 1)
            result = mat_mul(result, base);
        n >>= 1;
        if (n > 0)
            base = mat_mul(base, base);
    }
    return result;
}

// Fraction-free (Bareiss) elimination. After step k every remaining entry is a
// (k+1)-minor of the row/column-permuted input, so the division by the
// previous pivot is exact.
int rank(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Int> w = m.entries();
    auto at = [&](int i, int j) -> Int& { return w[static_cast<size_t>(i) * cols + j]; };

    Int prev = 1;
    int r = 0;
    while (r < rows && r < cols) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0)
            break;
        if (pi != r)
            for (int j = 0; j < cols; ++j)
                std::swap(at(pi, j), at(r, j));
        if (pj != r)
            for (int i = 0; i < rows; ++i)
                std::swap(at(i, pj), at(i, r));

        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                Int t = at(i, j) * at(r, r) - at(i, r) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, r) = 0;
        }
        prev = at(r, r);
        ++r;
    }
    return r;
}

int rank(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Rat> w;
    w.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            w.push_back(m.at(i, j));
    auto at = [&](int i, int j) -> Rat& { return w[static_cast<size_t>(i) * cols + j]; };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j)
                std::swap(at(pivot, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            if (at(i, c) == 0)
                continue;
            Rat f = at(i, c) / at(r, c);
            for (int j = c; j < cols; ++j)
                at(i, j) -= f * at(r, j);
        }
        ++r;
    }
    return r;
}

int nullity(const IntMatrix& m) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, "nullity of " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    return m.rows() - rank(m);
}

int nullity(const RatMatrix& m) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, "nullity of " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    return m.rows() - rank(m);
}

IntMatrix characteristic_matrix(const Partition& pi) {
    IntMatrix s(pi.ground_size(), pi.block_count());
    for (int b = 0; b < pi.block_count(); ++b)
        for (int e : pi.block(b))
            s.at(e, b) = 1;
    return s;
}

namespace {

void require_square_matching(const IntMatrix& m, const Partition& pi) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    if (pi.ground_size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "partition of " + std::to_string(pi.ground_size()) +
                        " elements against " + std::to_string(m.rows()) + "-state matrix");
}

} // namespace

RatMatrix quotient_matrix(const IntMatrix& m, const Partition& pi) {
    require_square_matching(m, pi);
    const int k = pi.block_count();
    RatMatrix q(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Int total = 0;
            for (int p : pi.block(i))
                for (int c : pi.block(j))
                    total += m.at(p, c);
            Rat entry(total, pi.block_size(i));
            entry.canonicalize();
            q.at(i, j) = entry;
        }
    }
    return q;
}

bool is_equitable(const IntMatrix& m, const Partition& pi) {
    require_square_matching(m, pi);
    for (int i = 0; i < pi.block_count(); ++i) {
        for (int j = 0; j < pi.block_count(); ++j) {
            Int expected;
            bool first = true;
            for (int p : pi.block(i)) {
                Int row_sum = 0;
                for (int c : pi.block(j))
                    row_sum += m.at(p, c);
                if (first) {
                    expected = row_sum;
                    first = false;
                } else if (row_sum != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

IntMatrix expansion(const IntMatrix& m, const Partition& pi) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    if (pi.block_count() != m.rows())
        throw Error(ErrorCode::BlockCountMismatch,
                    std::to_string(pi.block_count()) + " blocks for a " +
                        std::to_string(m.rows()) + "-dimensional matrix");
    const int n = pi.ground_size();
    IntMatrix e(n, n);
    for (int u = 0; u < n; ++u) {
        const int i = pi.block_of(u);
        for (int v = 0; v < n; ++v) {
            const int j = pi.block_of(v);
            const Int& numer = m.at(i, j);
            const Int denom(pi.block_size(j));
            if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
                throw Error(ErrorCode::ExpansionNotIntegral,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                numer.get_str() + " not divisible by block size " +
                                denom.get_str());
            mpz_divexact(e.at(u, v).get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        }
    }
    return e;
}

} // namespace dfaspec
