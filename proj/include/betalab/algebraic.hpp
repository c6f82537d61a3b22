#pragma once

// Exact real algebraic numbers: a square-free integer polynomial plus an
// isolating rational interval, and field arithmetic in Q[x]/(defining).
// Sign queries refine the isolator on demand; exact zero tests (polynomial
// gcd + root counting) resolve boundary cases, so no query ever depends on
// floating point.

#include "betalab/intpoly.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace betalab {

class FieldElement;

class AlgebraicReal {
public:
    // General constructor: defining need not be square-free (an initial
    // square-free decomposition is applied); (lo, hi) must bracket exactly
    // one real root after that reduction.
    AlgebraicReal(IntPolynomial defining, BigRat lo, BigRat hi);

    static AlgebraicReal from_rational(const BigRat& value);
    static AlgebraicReal from_integer(long long value);

    const IntPolynomial& defining() const { return defining_; }
    BigRat lo() const;
    BigRat hi() const;

    bool is_rational() const { return defining_.degree() == 1; }
    BigRat rational_value() const; // requires is_rational()

    // Returns a copy whose isolator has width <= width. Previously answered
    // sign queries are unaffected (the isolator only shrinks).
    AlgebraicReal refined(const BigRat& width) const;
    double approx() const;

    FieldElement as_element() const;       // the element "x" of Q[x]/(defining)
    FieldElement element_from(RatPoly p) const;
    FieldElement element_from_rational(const BigRat& c) const;

    bool same_base(const AlgebraicReal& other) const;
    std::string to_string() const;

private:
    friend class FieldElement;
    IntPolynomial defining_; // square-free, primitive, positive leading coeff

    struct Isolator {
        BigRat lo, hi;
        std::mutex mu;
    };
    std::shared_ptr<Isolator> iso_;

    // Halve the isolator width, keeping the root bracketed.
    void refine_step() const;
    // Current sign of "value - q": refine until decided; q equal to the root
    // is impossible unless defining has q as a rational root (handled by the
    // caller through exact tests).
    int sign_minus(const BigRat& q) const;
};

// The unique positive root beta > 1 of x^d - a_{d-1} x^{d-1} - ... - a_0 with
// a_{d-1}, a_0 >= 1 and a_i >= 0 (the only equation shape accepted here).
// The isolator is refined to width <= 2^-32.
AlgebraicReal unique_positive_root(const IntPolynomial& p);

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

class FieldElement {
public:
    FieldElement(std::shared_ptr<const AlgebraicReal> base, RatPoly poly);

    const AlgebraicReal& base() const { return *base_; }
    std::shared_ptr<const AlgebraicReal> base_ptr() const { return base_; }
    const RatPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.empty(); }
    bool is_integer() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement add_rational(const BigRat& c) const;
    FieldElement mul_rational(const BigRat& c) const;

    // Exact sign: 0 iff the represented real is zero (decided by gcd with the
    // defining polynomial and a root count over the isolator).
    int sign() const;
    Ordering compare(const FieldElement& other) const;

    // floor(value) and value - floor(value); exact at integer boundaries.
    std::pair<BigInt, FieldElement> floor_and_frac() const;

    // Numeric enclosure of the value, refined until hi - lo <= width.
    std::pair<BigRat, BigRat> enclosure(const BigRat& width) const;
    double approx() const;

    // Minimal polynomial of the represented value (square-free, primitive,
    // irreducible factor selected by the value's own isolator).
    IntPolynomial minimal_polynomial() const;
    // The represented value as a standalone AlgebraicReal.
    AlgebraicReal as_algebraic() const;

    std::string to_string() const;

private:
    std::shared_ptr<const AlgebraicReal> base_;
    RatPoly poly_; // reduced modulo base().defining(), degree < deg(defining)

    void require_same_base(const FieldElement& other) const;
};

FieldElement field_mul(const FieldElement& a, const FieldElement& b);
Ordering compare(const FieldElement& a, const FieldElement& b);

// CLI/file polynomial grammar: either "1,-1,-1" (coefficients, highest degree
// first) or "x^2-x-1".
IntPolynomial parse_polynomial(const std::string& text);

} // namespace betalab
