#include "betalab/intpoly.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace betalab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs_lowest_first)
    : coeffs_(std::move(coeffs_lowest_first)) {
    normalize();
}

IntPolynomial IntPolynomial::from_int_list(const std::vector<long long>& coeffs_lowest_first) {
    std::vector<BigInt> c;
    c.reserve(coeffs_lowest_first.size());
    for (long long v : coeffs_lowest_first) c.emplace_back(static_cast<long>(v));
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

BigRat IntPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + BigRat(*it);
    }
    return acc;
}

int IntPolynomial::sign_at(const BigRat& x) const { return sgn(eval(x)); }

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * BigInt(static_cast<long>(i)));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (coeffs_.empty()) return {};
    BigInt g(0);
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(coeffs_.back()) < 0) g = -g;
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    return *this + (-other);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return {};
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r = a.coeffs();
    const std::vector<BigInt>& d = b.coeffs();
    const BigInt& lc = d.back();
    int steps = static_cast<int>(r.size()) - static_cast<int>(d.size()) + 1;
    for (int k = 0; k < steps; ++k) {
        for (auto& c : r) c *= lc;
        if (r.empty()) break;
        BigInt q = r.back() / lc; // exact after the scaling above
        size_t shift = r.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= q * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < d.size()) break;
    }
    return IntPolynomial(std::move(r));
}

} // namespace

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f.primitive_part();
}

IntPolynomial IntPolynomial::square_free_part() const {
    if (degree() <= 1) return primitive_part();
    IntPolynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive_part();
    // Exact division this / g over the rationals, then renormalized.
    RatPoly num = ratpoly_from_int(*this);
    RatPoly den = ratpoly_from_int(g);
    RatPoly q;
    q.assign(num.size() - den.size() + 1, BigRat(0));
    while (num.size() >= den.size() && !num.empty()) {
        BigRat c = num.back() / den.back();
        size_t pos = num.size() - den.size();
        q[pos] = c;
        for (size_t i = 0; i < den.size(); ++i) num[pos + i] -= c * den[i];
        ratpoly_normalize(num);
    }
    return ratpoly_clear_denominators(q).primitive_part();
}

int IntPolynomial::count_roots(const BigRat& lo, const BigRat& hi) const {
    if (is_zero()) throw Error("count_roots on zero polynomial");
    // Sturm chain over the rationals.
    std::vector<RatPoly> chain;
    chain.push_back(ratpoly_from_int(*this));
    chain.push_back(ratpoly_from_int(derivative()));
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = ratpoly_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        ratpoly_normalize(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&chain](const BigRat& x) {
        int count = 0, prev = 0;
        for (const auto& p : chain) {
            int s = sgn(ratpoly_eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

void ratpoly_normalize(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    ratpoly_normalize(out);
    return out;
}

RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    ratpoly_normalize(out);
    return out;
}

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    ratpoly_normalize(out);
    return out;
}

RatPoly ratpoly_rem(RatPoly a, const RatPoly& m) {
    ratpoly_normalize(a);
    if (m.empty()) throw Error("polynomial remainder by zero");
    while (a.size() >= m.size() && !a.empty()) {
        BigRat c = a.back() / m.back();
        size_t pos = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[pos + i] -= c * m[i];
        ratpoly_normalize(a);
    }
    return a;
}

BigRat ratpoly_eval(const RatPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly ratpoly_from_int(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

IntPolynomial ratpoly_clear_denominators(const RatPoly& p) {
    BigInt lcm(1);
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p) {
        BigRat scaled = c * BigRat(lcm);
        out.push_back(BigInt(scaled.get_num()) / BigInt(scaled.get_den()));
    }
    return IntPolynomial(std::move(out));
}

} // namespace betalab
