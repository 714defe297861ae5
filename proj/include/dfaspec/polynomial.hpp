#ifndef DFASPEC_POLYNOMIAL_HPP
#define DFASPEC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "dfaspec/matrix.hpp"

namespace dfaspec {

/// Integer polynomial, dense coefficients lowest degree first.
/// Zero polynomial is the empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    static IntPolynomial constant(long value);
    static IntPolynomial from_coeffs(const std::vector<long>& coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    bool is_monic() const { return !is_zero() && coefficients_.back() == 1; }

    const std::vector<Int>& coefficients() const { return coefficients_; }
    Int coeff(int i) const;

    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial&) const = default;

    /// Human form, e.g. "x^3 - 5x^2 + 4x".
    std::string to_string() const;

private:
    std::vector<Int> coefficients_;
};

/// Monic characteristic polynomial det(xI - M), exact over the integers
/// (Faddeev-LeVerrier recursion). char_poly of a 0x0 matrix is 1.
IntPolynomial char_poly(const IntMatrix& m);

/// Primitive gcd with positive leading coefficient; gcd(p, 0) = normalized p.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'): same roots, all simple. Monic input gives monic output.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// True iff every root of p_small is a root of p_big (root sets, not
/// multiplicities): gcd(q, squarefree_part(p_big)) == q for q the squarefree
/// part of p_small. Both inputs must be monic.
bool spectrum_included(const IntPolynomial& p_small, const IntPolynomial& p_big);

} // namespace dfaspec

#endif
