#include "betalab/algebraic.hpp"

#include "betalab/errors.hpp"

#include <cctype>
#include <sstream>

namespace betalab {

namespace {

BigRat rat_abs(const BigRat& q) { return sgn(q) < 0 ? BigRat(-q) : q; }

BigRat pow2_neg(unsigned k) {
    BigInt den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return BigRat(BigInt(1), den);
}

} // namespace

AlgebraicReal::AlgebraicReal(IntPolynomial defining, BigRat lo, BigRat hi)
    : defining_(defining.square_free_part()) {
    if (defining_.is_zero() || defining_.degree() < 1)
        throw MalformedEquation("defining polynomial must have degree >= 1");
    lo.canonicalize();
    hi.canonicalize();
    if (!(lo < hi)) throw MalformedEquation("isolator must be a nonempty open interval");
    if (defining_.sign_at(lo) == 0 || defining_.sign_at(hi) == 0)
        throw MalformedEquation("isolator endpoints must not be roots");
    if (defining_.count_roots(lo, hi) != 1)
        throw MalformedEquation("isolator must contain exactly one real root");
    iso_ = std::make_shared<Isolator>();
    iso_->lo = lo;
    iso_->hi = hi;
}

AlgebraicReal AlgebraicReal::from_rational(const BigRat& value) {
    std::vector<BigInt> c{-BigInt(value.get_num()), BigInt(value.get_den())};
    return AlgebraicReal(IntPolynomial(std::move(c)), value - 1, value + 1);
}

AlgebraicReal AlgebraicReal::from_integer(long long value) {
    return from_rational(BigRat(static_cast<long>(value)));
}

BigRat AlgebraicReal::lo() const {
    std::lock_guard<std::mutex> lock(iso_->mu);
    return iso_->lo;
}

BigRat AlgebraicReal::hi() const {
    std::lock_guard<std::mutex> lock(iso_->mu);
    return iso_->hi;
}

BigRat AlgebraicReal::rational_value() const {
    if (!is_rational()) throw Error("not a rational value");
    BigRat v(-defining_.coeff(0), defining_.coeff(1));
    v.canonicalize();
    return v;
}

void AlgebraicReal::refine_step() const {
    std::lock_guard<std::mutex> lock(iso_->mu);
    BigRat mid = (iso_->lo + iso_->hi) / 2;
    int sm = defining_.sign_at(mid);
    if (sm == 0) {
        // The midpoint is the root; shrink symmetrically until the endpoints
        // have opposite signs again (the root is simple).
        BigRat w = (iso_->hi - iso_->lo) / 4;
        while (true) {
            BigRat nlo = mid - w, nhi = mid + w;
            if (defining_.sign_at(nlo) != 0 && defining_.sign_at(nhi) != 0 &&
                defining_.sign_at(nlo) != defining_.sign_at(nhi)) {
                iso_->lo = nlo;
                iso_->hi = nhi;
                return;
            }
            w /= 2;
        }
    }
    if (sm == defining_.sign_at(iso_->lo))
        iso_->lo = mid;
    else
        iso_->hi = mid;
}

AlgebraicReal AlgebraicReal::refined(const BigRat& width) const {
    while (hi() - lo() > width) refine_step();
    AlgebraicReal out(*this);
    return out;
}

double AlgebraicReal::approx() const {
    BigRat w(1, 1);
    w /= BigInt(1) << 60;
    while (hi() - lo() > w) refine_step();
    BigRat mid = (lo() + hi()) / 2;
    return mid.get_d();
}

int AlgebraicReal::sign_minus(const BigRat& q) const {
    {
        std::lock_guard<std::mutex> lock(iso_->mu);
        if (q <= iso_->lo) return 1;
        if (q >= iso_->hi) return -1;
    }
    if (defining_.sign_at(q) == 0) return 0; // q is the isolated root itself
    bool root_below = defining_.count_roots(lo(), q) == 1;
    {
        // Shrink the isolator as a side effect; the root never moves.
        std::lock_guard<std::mutex> lock(iso_->mu);
        if (root_below) {
            if (q < iso_->hi) iso_->hi = q;
        } else {
            if (q > iso_->lo) iso_->lo = q;
        }
    }
    return root_below ? -1 : 1;
}

FieldElement AlgebraicReal::as_element() const {
    return element_from(RatPoly{BigRat(0), BigRat(1)});
}

FieldElement AlgebraicReal::element_from(RatPoly p) const {
    auto base = std::make_shared<AlgebraicReal>(*this);
    return FieldElement(base, std::move(p));
}

FieldElement AlgebraicReal::element_from_rational(const BigRat& c) const {
    return element_from(sgn(c) == 0 ? RatPoly{} : RatPoly{c});
}

bool AlgebraicReal::same_base(const AlgebraicReal& other) const {
    if (!(defining_ == other.defining_)) return false;
    if (iso_ == other.iso_) return true;
    // Same polynomial, different isolators: identical exactly when the
    // intersection still brackets a root.
    BigRat l = std::max(lo(), other.lo());
    BigRat h = std::min(hi(), other.hi());
    if (!(l < h)) return false;
    return defining_.count_roots(l, h) == 1;
}

std::string AlgebraicReal::to_string() const {
    std::ostringstream out;
    out << "root of " << defining_.to_string() << " in ("
        << lo().get_str() << ", " << hi().get_str() << ")";
    return out.str();
}

AlgebraicReal unique_positive_root(const IntPolynomial& p) {
    int d = p.degree();
    if (d < 1) throw MalformedEquation("degree must be at least 1");
    if (p.leading() != 1) throw MalformedEquation("polynomial must be monic");
    for (int i = 0; i < d; ++i)
        if (p.coeff(i) > 0)
            throw MalformedEquation("expected shape x^d - a_{d-1}x^{d-1} - ... - a_0 with a_i >= 0");
    BigInt a_top = -p.coeff(d - 1);
    BigInt a_low = -p.coeff(0);
    if (a_top < 1 || a_low < 1)
        throw MalformedEquation("leading and constant digits must be >= 1");

    if (d == 1) {
        // x = a_0 exactly; a base must exceed 1.
        if (a_low < 2) throw MalformedEquation("root 1 is not a valid base");
        return AlgebraicReal::from_rational(BigRat(a_low));
    }

    BigInt sum(0);
    for (int i = 0; i < d; ++i) sum += -p.coeff(i);
    IntPolynomial s = p.square_free_part();
    BigRat lo(1), hi(BigRat(sum) + 1);
    // p(1) <= -1 and p(1+sum) > 0, and the positive root is unique, so the
    // square-free part changes sign exactly once on [lo, hi].
    if (s.sign_at(lo) == 0 || s.sign_at(hi) == 0 || s.sign_at(lo) == s.sign_at(hi))
        throw MalformedEquation("failed to bracket the positive root");
    BigRat target = pow2_neg(32);
    while (hi - lo > target) {
        BigRat mid = (lo + hi) / 2;
        int sm = s.sign_at(mid);
        if (sm == 0) {
            // Rational root hit exactly; nudge the bracket around it.
            BigRat w = (hi - lo) / 4;
            while (!(s.sign_at(mid - w) != 0 && s.sign_at(mid + w) != 0 &&
                     s.sign_at(mid - w) != s.sign_at(mid + w)))
                w /= 2;
            lo = mid - w;
            hi = mid + w;
            continue;
        }
        if (sm == s.sign_at(lo))
            lo = mid;
        else
            hi = mid;
    }
    return AlgebraicReal(p, lo, hi);
}

FieldElement::FieldElement(std::shared_ptr<const AlgebraicReal> base, RatPoly poly)
    : base_(std::move(base)), poly_(std::move(poly)) {
    ratpoly_normalize(poly_);
    poly_ = ratpoly_rem(std::move(poly_), ratpoly_from_int(base_->defining()));
}

void FieldElement::require_same_base(const FieldElement& other) const {
    if (!base_->same_base(*other.base_))
        throw BaseMismatch("operands live in different number fields");
}

bool FieldElement::is_integer() const {
    if (poly_.empty()) return true;
    if (poly_.size() != 1) return false;
    return poly_[0].get_den() == 1;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_base(other);
    return FieldElement(base_, ratpoly_add(poly_, other.poly_));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_base(other);
    return FieldElement(base_, ratpoly_sub(poly_, other.poly_));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_base(other);
    return FieldElement(base_, ratpoly_mul(poly_, other.poly_));
}

FieldElement FieldElement::operator-() const {
    RatPoly out = poly_;
    for (auto& c : out) c = -c;
    return FieldElement(base_, std::move(out));
}

FieldElement FieldElement::add_rational(const BigRat& c) const {
    return *this + FieldElement(base_, RatPoly{c});
}

FieldElement FieldElement::mul_rational(const BigRat& c) const {
    RatPoly out = poly_;
    for (auto& x : out) x *= c;
    return FieldElement(base_, std::move(out));
}

int FieldElement::sign() const {
    if (poly_.empty()) return 0;
    if (poly_.size() == 1) return sgn(poly_[0]);
    // Exact zero test first: the value is zero iff a common factor of the
    // reduced polynomial and the defining polynomial vanishes inside the
    // isolator. (The defining polynomial is square-free, not necessarily
    // irreducible, so a nonzero residue can still represent zero.)
    IntPolynomial g = IntPolynomial::gcd(base_->defining(), ratpoly_clear_denominators(poly_));
    if (g.degree() >= 1 && g.count_roots(base_->lo(), base_->hi()) == 1) return 0;
    // Nonzero: refine until the interval evaluation excludes zero.
    while (true) {
        BigRat l = base_->lo(), h = base_->hi();
        BigRat vlo(0), vhi(0);
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
            BigRat c1 = vlo * l, c2 = vlo * h, c3 = vhi * l, c4 = vhi * h;
            BigRat mn = std::min(std::min(c1, c2), std::min(c3, c4));
            BigRat mx = std::max(std::max(c1, c2), std::max(c3, c4));
            vlo = mn + *it;
            vhi = mx + *it;
        }
        if (sgn(vlo) > 0) return 1;
        if (sgn(vhi) < 0) return -1;
        base_->refine_step();
    }
}

Ordering FieldElement::compare(const FieldElement& other) const {
    int s = (*this - other).sign();
    return s < 0 ? Ordering::Less : (s == 0 ? Ordering::Equal : Ordering::Greater);
}

std::pair<BigRat, BigRat> FieldElement::enclosure(const BigRat& width) const {
    while (true) {
        BigRat l = base_->lo(), h = base_->hi();
        BigRat vlo(0), vhi(0);
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
            BigRat c1 = vlo * l, c2 = vlo * h, c3 = vhi * l, c4 = vhi * h;
            BigRat mn = std::min(std::min(c1, c2), std::min(c3, c4));
            BigRat mx = std::max(std::max(c1, c2), std::max(c3, c4));
            vlo = mn + *it;
            vhi = mx + *it;
        }
        if (vhi - vlo <= width) return {vlo, vhi};
        base_->refine_step();
    }
}

double FieldElement::approx() const {
    BigRat w(1, 1);
    w /= BigInt(1) << 60;
    auto [l, h] = enclosure(w);
    BigRat mid = (l + h) / 2;
    return mid.get_d();
}

std::pair<BigInt, FieldElement> FieldElement::floor_and_frac() const {
    auto [l, h] = enclosure(BigRat(1, 4));
    BigInt k;
    mpz_fdiv_q(k.get_mpz_t(), BigRat(l).get_num_mpz_t(), BigRat(l).get_den_mpz_t());
    // k is within one of the true floor; fix up with exact sign queries so
    // that boundary cases (the value being an exact integer) come out right.
    while ((*this - FieldElement(base_, RatPoly{BigRat(k + 1)})).sign() >= 0) k += 1;
    while ((*this - FieldElement(base_, RatPoly{BigRat(k)})).sign() < 0) k -= 1;
    FieldElement frac = *this - FieldElement(base_, RatPoly{BigRat(k)});
    return {k, frac};
}

IntPolynomial FieldElement::minimal_polynomial() const {
    int d = base_->defining().degree();
    RatPoly mod = ratpoly_from_int(base_->defining());
    // Multiplication-by-u matrix in the power basis of Q[x]/(defining).
    std::vector<RatPoly> cols(d);
    RatPoly cur = poly_;
    for (int j = 0; j < d; ++j) {
        cols[j] = cur;
        // next column: multiply by x and reduce
        RatPoly shifted(cur.size() + 1, BigRat(0));
        for (size_t i = 0; i < cur.size(); ++i) shifted[i + 1] = cur[i];
        cur = ratpoly_rem(std::move(shifted), mod);
    }
    auto entry = [&](int i, int j) -> BigRat {
        return i < static_cast<int>(cols[j].size()) ? cols[j][i] : BigRat(0);
    };
    // Characteristic polynomial via Faddeev-LeVerrier.
    std::vector<std::vector<BigRat>> M(d, std::vector<BigRat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M[i][j] = entry(i, j);
    std::vector<BigRat> cpoly(d + 1, BigRat(0));
    cpoly[d] = 1;
    std::vector<std::vector<BigRat>> N(d, std::vector<BigRat>(d, BigRat(0)));
    for (int i = 0; i < d; ++i) N[i][i] = 1; // N = I
    std::vector<std::vector<BigRat>> MN(d, std::vector<BigRat>(d));
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                BigRat acc(0);
                for (int t = 0; t < d; ++t) acc += M[i][t] * N[t][j];
                MN[i][j] = acc;
            }
        BigRat tr(0);
        for (int i = 0; i < d; ++i) tr += MN[i][i];
        BigRat c = -tr / k;
        cpoly[d - k] = c;
        N = MN;
        for (int i = 0; i < d; ++i) N[i][i] += c;
    }
    IntPolynomial charpoly = ratpoly_clear_denominators(cpoly);
    IntPolynomial sf = charpoly.square_free_part();
    // Peel off rational linear factors that do not contain the value. This
    // covers the reducible characteristic polynomials that actually occur at
    // desk scale (rational eigenvalue components split off by CRT).
    auto divide_out_root = [](const IntPolynomial& p, const BigRat& r) {
        RatPoly a = ratpoly_from_int(p);
        RatPoly q(a.size() - 1, BigRat(0));
        BigRat carry(0);
        for (int i = static_cast<int>(a.size()) - 1; i >= 1; --i) {
            carry = a[i] + carry * r;
            q[i - 1] = carry;
        }
        return ratpoly_clear_denominators(q).primitive_part();
    };
    auto find_rational_root = [](const IntPolynomial& p) -> std::optional<BigRat> {
        if (p.coeff(0) == 0) return BigRat(0);
        BigInt c0 = abs(p.coeff(0)), lc = abs(p.leading());
        for (BigInt num(1); num <= c0; num += 1) {
            if (c0 % num != 0) continue;
            for (BigInt den(1); den <= lc; den += 1) {
                if (lc % den != 0) continue;
                for (int s : {1, -1}) {
                    BigRat r(s > 0 ? num : BigInt(-num), den);
                    r.canonicalize();
                    if (p.sign_at(r) == 0) return r;
                }
            }
        }
        return std::nullopt;
    };
    while (sf.degree() > 1) {
        auto r = find_rational_root(sf);
        if (!r) break;
        if ((*this - FieldElement(base_, sgn(*r) == 0 ? RatPoly{} : RatPoly{*r})).sign() == 0)
            return AlgebraicReal::from_rational(*r).defining();
        sf = divide_out_root(sf, *r);
    }
    return sf.primitive_part();
}

AlgebraicReal FieldElement::as_algebraic() const {
    IntPolynomial mp = minimal_polynomial();
    if (mp.degree() == 1) {
        BigRat v(-mp.coeff(0), mp.coeff(1));
        v.canonicalize();
        return AlgebraicReal::from_rational(v);
    }
    // Tighten a numeric enclosure until it isolates a single root of mp.
    BigRat w(1, 16);
    while (true) {
        auto [l, h] = enclosure(w);
        if (mp.sign_at(l) != 0 && mp.sign_at(h) != 0 && mp.count_roots(l, h) == 1)
            return AlgebraicReal(mp, l, h);
        w /= 16;
    }
}

std::string FieldElement::to_string() const {
    if (poly_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(poly_.size()) - 1; i >= 0; --i) {
        if (sgn(poly_[i]) == 0) continue;
        BigRat a = rat_abs(poly_[i]);
        if (first) {
            if (sgn(poly_[i]) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(poly_[i]) < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i >= 1) {
            out << "b";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

Ordering compare(const FieldElement& a, const FieldElement& b) { return a.compare(b); }

IntPolynomial parse_polynomial(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw MalformedEquation("empty polynomial");
    if (s.find('x') == std::string::npos) {
        // Comma-separated coefficient list, highest degree first.
        std::vector<BigInt> highest_first;
        std::string tok;
        std::istringstream in(s);
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw MalformedEquation("empty coefficient in list");
            highest_first.emplace_back(tok);
        }
        std::vector<BigInt> lowest(highest_first.rbegin(), highest_first.rend());
        return IntPolynomial(std::move(lowest));
    }
    // Textual form like "x^3-x^2-x-1" or "2x^2+3".
    std::vector<BigInt> coeffs;
    size_t i = 0;
    auto bump = [&coeffs](int deg, const BigInt& c) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, BigInt(0));
        coeffs[deg] += c;
    };
    while (i < s.size()) {
        int sign_c = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign_c = -1;
            ++i;
        }
        if (i >= s.size()) throw MalformedEquation("dangling sign in polynomial");
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
        c *= sign_c;
        int deg = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw MalformedEquation("missing exponent");
                deg = std::stoi(e);
            }
        } else if (digits.empty()) {
            throw MalformedEquation(std::string("unexpected character '") + s[i] + "' in polynomial");
        }
        bump(deg, c);
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace betalab
