#pragma once

// Exact integer and rational polynomial arithmetic on top of GMP.
// Coefficients are stored lowest degree first; the zero polynomial has an
// empty coefficient vector.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace betalab {

using BigInt = mpz_class;
using BigRat = mpq_class;

// gmpxx has no long long constructor; long is 64-bit on every supported
// platform here.
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs_lowest_first);
    static IntPolynomial from_int_list(const std::vector<long long>& coeffs_lowest_first);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;

    BigRat eval(const BigRat& x) const;
    int sign_at(const BigRat& x) const;
    IntPolynomial derivative() const;
    IntPolynomial primitive_part() const; // content removed, leading coefficient > 0
    IntPolynomial square_free_part() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Polynomial gcd by primitive pseudo-remainder sequence; result is
    // primitive with positive leading coefficient.
    static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

    // Number of distinct real roots in (lo, hi], via a Sturm chain.
    // Requires a square-free polynomial.
    int count_roots(const BigRat& lo, const BigRat& hi) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

// Rational-coefficient polynomial helpers used by the field arithmetic.
using RatPoly = std::vector<BigRat>; // lowest degree first, no trailing zeros

void ratpoly_normalize(RatPoly& p);
RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_rem(RatPoly a, const RatPoly& m); // remainder of a modulo m
BigRat ratpoly_eval(const RatPoly& p, const BigRat& x);
RatPoly ratpoly_from_int(const IntPolynomial& p);
IntPolynomial ratpoly_clear_denominators(const RatPoly& p);

} // namespace betalab
