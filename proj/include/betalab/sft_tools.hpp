#pragma once

// Edge SFTs as nonnegative integer adjacency matrices, companion matrices of
// expansion words, zeta-function denominators det(I - tA), exact periodic
// point counts and Kronecker products.

#include "betalab/beta_core.hpp"
#include "betalab/intpoly.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace betalab {

using IntMatrix = std::vector<std::vector<BigInt>>;

class EdgeSFT {
public:
    EdgeSFT() = default;
    explicit EdgeSFT(IntMatrix adjacency, std::vector<std::string> state_names = {});

    int size() const { return static_cast<int>(adj_.size()); }
    const IntMatrix& adjacency() const { return adj_; }
    const BigInt& at(int i, int j) const { return adj_[i][j]; }
    const std::vector<std::string>& state_names() const { return names_; }

    bool is_zero() const;
    // Strong connectivity of the underlying digraph.
    bool irreducible() const;
    // Primitivity (some power strictly positive); verified via boolean matrix
    // powers up to the Wielandt exponent.
    bool mixing() const;

private:
    IntMatrix adj_;
    std::vector<std::string> names_;
};

struct ZetaDenominator {
    IntPolynomial poly; // det(I - tA); constant term 1

    bool operator==(const ZetaDenominator& other) const { return poly == other.poly; }
    std::string to_string() const { return poly.to_string("t"); }
};

// The unique beta > 1 with d(beta) = w, i.e. the positive root of
// x^d = a_{d-1} x^{d-1} + ... + a_0 for w = a_{d-1} ... a_0.
AlgebraicReal beta_from_digits(const DigitWord& w);

// The d x d matrix with first column (a_{d-1}, ..., a_0)^T and a
// superdiagonal of ones. Also the transition-count matrix of the canonical
// automaton of L(S_beta) with state 0 as the empty-match state.
EdgeSFT companion_edge_sft(const DigitWord& w);

ZetaDenominator zeta_denominator(const EdgeSFT& X);

// tr(A^p), exact.
BigInt periodic_count(const EdgeSFT& X, long long p);
std::vector<BigInt> periodic_counts(const EdgeSFT& X, long long max_p);

// Kronecker product; realizes the pairwise-product spectrum of X x Y.
EdgeSFT product_sft(const EdgeSFT& X, const EdgeSFT& Y);

// Perron root by power iteration (applied to A + I so that periodic spectra
// cannot stall the iteration), 1e-10 relative tolerance.
double spectral_radius(const EdgeSFT& X);

// Numeric non-zero spectrum (Eigen), eigenvalues with |mu| <= eps dropped.
std::vector<std::complex<double>> nonzero_spectrum(const EdgeSFT& X, double eps = 1e-9);

// Number of length-L admissible words of the beta-shift whose canonical
// automaton has transition matrix A: the row sum of A^L at the empty-match
// state (row 0). This is the word-count convention asserted in the tests.
BigInt count_words_via_matrix(const EdgeSFT& A, long long L);

// Exact matrix power helper (used by the census checks).
IntMatrix matrix_power(const IntMatrix& A, long long p);

} // namespace betalab
