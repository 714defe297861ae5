#include "dfaspec/polynomial.hpp"

#include <cassert>
#include <sstream>

namespace dfaspec {

namespace {

void normalize(std::vector<Int>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

Int content(const std::vector<Int>& coeffs) {
    Int g = 0;
    for (const Int& c : coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

std::vector<Int> primitive_part(std::vector<Int> coeffs) {
    Int g = content(coeffs);
    if (g > 1)
        for (Int& c : coeffs)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!coeffs.empty() && coeffs.back() < 0)
        for (Int& c : coeffs)
            c = -c;
    return coeffs;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, by repeated top-term elimination.
std::vector<Int> pseudo_remainder(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& lead_b = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    int steps = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (steps-- > 0 && static_cast<int>(a.size()) - 1 >= db) {
        Int top = a.back();
        const int shift = static_cast<int>(a.size()) - 1 - db;
        for (size_t i = 0; i < a.size(); ++i)
            a[i] *= lead_b;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(shift) + i] -= top * b[i];
        normalize(a);
        if (a.empty())
            break;
    }
    return a;
}

// Long division for a divisor known to divide exactly over the integers.
std::vector<Int> divide_exact(std::vector<Int> a, const std::vector<Int>& d) {
    assert(!d.empty() && d.back() != 0);
    if (a.empty())
        return a;
    assert(a.size() >= d.size());
    const Int& lead = d.back();
    std::vector<Int> q(a.size() - d.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int& top = a[static_cast<size_t>(i) + d.size() - 1];
        assert(mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()));
        Int c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[i] = c;
        if (c == 0)
            continue;
        for (size_t j = 0; j < d.size(); ++j)
            a[static_cast<size_t>(i) + j] -= c * d[j];
    }
#ifndef NDEBUG
    for (const Int& c : a)
        assert(c == 0);
#endif
    return q;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize(coefficients_);
}

IntPolynomial IntPolynomial::constant(long value) {
    if (value == 0)
        return IntPolynomial();
    return IntPolynomial(std::vector<Int>{Int(value)});
}

IntPolynomial IntPolynomial::from_coeffs(const std::vector<long>& coefficients) {
    std::vector<Int> c(coefficients.begin(), coefficients.end());
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coefficients_.size()))
        return 0;
    return coefficients_[i];
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() <= 0)
        return IntPolynomial();
    std::vector<Int> d(coefficients_.size() - 1);
    for (size_t i = 1; i < coefficients_.size(); ++i)
        d[i - 1] = coefficients_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coefficients_[i];
        if (c == 0)
            continue;
        Int a = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0)
            out << a.get_str();
        if (i >= 1) {
            out << "x";
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square())
        throw Error(ErrorCode::NonSquare, "char_poly of " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    const int n = m.rows();
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1);
    coeffs[n] = 1;
    if (n == 0)
        return IntPolynomial(std::move(coeffs));

    // Faddeev-LeVerrier: B_1 = M, a_k = -tr(B_k)/k, B_{k+1} = M(B_k + a_k I).
    // The divisions by k are exact for integer input.
    IntMatrix b = m;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            tr += b.at(i, i);
        Int a = -tr;
        mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[n - k] = a;
        if (k < n) {
            for (int i = 0; i < n; ++i)
                b.at(i, i) += a;
            b = mat_mul(m, b);
        }
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> u = a.coefficients();
    std::vector<Int> v = b.coefficients();
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        std::vector<Int> r = pseudo_remainder(u, v);
        u = std::move(v);
        v = primitive_part(std::move(r));
    }
    return IntPolynomial(primitive_part(std::move(u)));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0)
        return IntPolynomial(primitive_part(p.coefficients()));
    IntPolynomial prim(primitive_part(p.coefficients()));
    IntPolynomial g = poly_gcd(prim, prim.derivative());
    if (g.degree() == 0)
        return prim;
    // g is primitive and divides prim over the rationals, hence over the
    // integers by Gauss's lemma; the quotient keeps prim's root set.
    return IntPolynomial(divide_exact(prim.coefficients(), g.coefficients()));
}

bool spectrum_included(const IntPolynomial& p_small, const IntPolynomial& p_big) {
    if (!p_small.is_monic())
        throw Error(ErrorCode::NonMonic, "left polynomial " + p_small.to_string());
    if (!p_big.is_monic())
        throw Error(ErrorCode::NonMonic, "right polynomial " + p_big.to_string());
    IntPolynomial q = squarefree_part(p_small);
    IntPolynomial big_sf = squarefree_part(p_big);
    return poly_gcd(q, big_sf) == q;
}

} // namespace dfaspec
