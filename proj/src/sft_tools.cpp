#include "betalab/sft_tools.hpp"

#include "betalab/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace betalab {

EdgeSFT::EdgeSFT(IntMatrix adjacency, std::vector<std::string> state_names)
    : adj_(std::move(adjacency)), names_(std::move(state_names)) {
    size_t n = adj_.size();
    for (const auto& row : adj_) {
        if (row.size() != n) throw Error("adjacency matrix must be square");
        for (const auto& e : row)
            if (e < 0) throw Error("adjacency entries must be nonnegative");
    }
    if (!names_.empty() && names_.size() != n) throw Error("state name count mismatch");
}

bool EdgeSFT::is_zero() const {
    for (const auto& row : adj_)
        for (const auto& e : row)
            if (e > 0) return false;
    return true;
}

namespace {

std::vector<std::vector<bool>> bool_mul(const std::vector<std::vector<bool>>& a,
                                        const std::vector<std::vector<bool>>& b) {
    size_t n = a.size();
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (b[k][j]) out[i][j] = true;
    return out;
}

} // namespace

bool EdgeSFT::irreducible() const {
    int n = size();
    if (n == 0) return false;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[i][j] = adj_[i][j] > 0;
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

bool EdgeSFT::mixing() const {
    int n = size();
    if (n == 0 || is_zero()) return false;
    std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = adj_[i][j] > 0;
    // Wielandt: A primitive iff A^((n-1)^2 + 1) > 0.
    long long target = static_cast<long long>(n - 1) * (n - 1) + 1;
    std::vector<std::vector<bool>> acc = b;
    long long e = 1;
    while (e < target) {
        acc = bool_mul(acc, b);
        ++e;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!acc[i][j]) return false;
    return true;
}

AlgebraicReal beta_from_digits(const DigitWord& w) {
    if (w.empty() || w.front() < 1 || w.back() < 1)
        throw NotLexMaximal("expansion word must start and end with digits >= 1");
    if (!lex_greater_all_shifts(w))
        throw NotLexMaximal(digits_to_string(w) + " is not lexicographically greater than all its shifts");
    int d = static_cast<int>(w.size());
    std::vector<BigInt> coeffs(d + 1, BigInt(0));
    coeffs[d] = 1;
    for (int i = 0; i < d; ++i) coeffs[d - 1 - i] = -big(w[i]); // w = a_{d-1} ... a_0
    return unique_positive_root(IntPolynomial(std::move(coeffs)));
}

EdgeSFT companion_edge_sft(const DigitWord& w) {
    if (!lex_greater_all_shifts(w))
        throw NotLexMaximal(digits_to_string(w) + " is not lexicographically greater than all its shifts");
    int d = static_cast<int>(w.size());
    IntMatrix m(d, std::vector<BigInt>(d, BigInt(0)));
    for (int j = 0; j < d; ++j) {
        m[j][0] = big(w[j]);
        if (j + 1 < d) m[j][j + 1] = 1;
    }
    return EdgeSFT(std::move(m));
}

ZetaDenominator zeta_denominator(const EdgeSFT& X) {
    int n = X.size();
    // Characteristic polynomial det(xI - A) by Faddeev-LeVerrier (exact
    // rational arithmetic; the divisions by k are exact), then reversed:
    // det(I - tA) = t^n char(1/t).
    std::vector<std::vector<BigRat>> M(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = BigRat(X.at(i, j));
    std::vector<BigRat> c(n + 1, BigRat(0));
    c[n] = 1;
    std::vector<std::vector<BigRat>> N(n, std::vector<BigRat>(n, BigRat(0)));
    for (int i = 0; i < n; ++i) N[i][i] = 1;
    std::vector<std::vector<BigRat>> MN(n, std::vector<BigRat>(n));
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigRat acc(0);
                for (int t = 0; t < n; ++t) acc += M[i][t] * N[t][j];
                MN[i][j] = acc;
            }
        BigRat tr(0);
        for (int i = 0; i < n; ++i) tr += MN[i][i];
        BigRat ck = -tr / k;
        c[n - k] = ck;
        N = MN;
        for (int i = 0; i < n; ++i) N[i][i] += ck;
    }
    std::vector<BigInt> rev(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigRat v = c[n - i];
        if (v.get_den() != 1) throw Error("characteristic polynomial not integral");
        rev[i] = BigInt(v.get_num());
    }
    return ZetaDenominator{IntPolynomial(std::move(rev))};
}

IntMatrix matrix_power(const IntMatrix& A, long long p) {
    size_t n = A.size();
    IntMatrix result(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) result[i][i] = 1;
    IntMatrix base = A;
    auto mul = [n](const IntMatrix& a, const IntMatrix& b) {
        IntMatrix out(n, std::vector<BigInt>(n, BigInt(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
            }
        return out;
    };
    while (p > 0) {
        if (p & 1) result = mul(result, base);
        base = mul(base, base);
        p >>= 1;
    }
    return result;
}

BigInt periodic_count(const EdgeSFT& X, long long p) {
    if (p < 1) throw Error("period must be >= 1");
    IntMatrix m = matrix_power(X.adjacency(), p);
    BigInt tr(0);
    for (size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    return tr;
}

std::vector<BigInt> periodic_counts(const EdgeSFT& X, long long max_p) {
    std::vector<BigInt> out;
    IntMatrix acc = X.adjacency();
    for (long long p = 1; p <= max_p; ++p) {
        if (p > 1) {
            IntMatrix next(acc.size(), std::vector<BigInt>(acc.size(), BigInt(0)));
            const IntMatrix& A = X.adjacency();
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t k = 0; k < acc.size(); ++k) {
                    if (acc[i][k] == 0) continue;
                    for (size_t j = 0; j < acc.size(); ++j) next[i][j] += acc[i][k] * A[k][j];
                }
            acc = std::move(next);
        }
        BigInt tr(0);
        for (size_t i = 0; i < acc.size(); ++i) tr += acc[i][i];
        out.push_back(tr);
    }
    return out;
}

EdgeSFT product_sft(const EdgeSFT& X, const EdgeSFT& Y) {
    int n = X.size(), m = Y.size();
    IntMatrix out(n * m, std::vector<BigInt>(n * m, BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    out[i * m + k][j * m + l] = X.at(i, j) * Y.at(k, l);
    return EdgeSFT(std::move(out));
}

double spectral_radius(const EdgeSFT& X) {
    if (X.is_zero()) throw ZeroMatrix("spectral radius of the zero matrix");
    int n = X.size();
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        // one step of (A + I) v
        for (int i = 0; i < n; ++i) {
            double acc = v[i];
            for (int j = 0; j < n; ++j) acc += X.at(i, j).get_d() * v[j];
            w[i] = acc;
        }
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, std::fabs(x));
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < n; ++i) w[i] /= norm;
        double next = norm - 1.0;
        bool settled = iter > 4 && std::fabs(next - lambda) <= 1e-12 * std::max(1.0, std::fabs(next));
        lambda = next;
        std::swap(v, w);
        if (settled) break;
    }
    return lambda;
}

std::vector<std::complex<double>> nonzero_spectrum(const EdgeSFT& X, double eps) {
    int n = X.size();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = X.at(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) {
        std::complex<double> mu = solver.eigenvalues()(i);
        if (std::abs(mu) > eps) out.push_back(mu);
    }
    // Deterministic order: by real part, then imaginary part.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

BigInt count_words_via_matrix(const EdgeSFT& A, long long L) {
    if (L < 0) throw Error("length must be >= 0");
    IntMatrix m = matrix_power(A.adjacency(), L);
    BigInt sum(0);
    for (const auto& e : m[0]) sum += e;
    return sum;
}

} // namespace betalab
