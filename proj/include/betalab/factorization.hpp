#pragma once

// Integer-scaling conjugacy test (does S_{n*gamma} split as S_n x S_gamma?)
// and direct-primeness obstruction checks over periodic-point arithmetic.

#include "betalab/sft_tools.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace betalab {

// (n a_{d-1}, n^2 a_{d-2}, ..., n^d a_0) for w = a_{d-1} ... a_0.
DigitWord scaled_digit_word(long long n, const DigitWord& w);

enum class ScaleKind {
    Conjugate,
    NotConjugateZetaMismatch,
    NotSFTProven, // d(n*gamma) cycled without terminating: provably sofic, not SFT
    NotSFTUpTo,
};

struct ScaleVerdict {
    ScaleKind kind;
    DigitWord scaled_word;
    std::optional<ZetaDenominator> zeta_left;  // product side S_n x S_gamma
    std::optional<ZetaDenominator> zeta_right; // companion side of d(n*gamma)
    std::optional<BetaExpansion> scaled_base_expansion; // expansion of n*gamma when computed
    long long horizon = 0;
    std::string detail;
};

ScaleVerdict integer_split_test(long long n, const DigitWord& w, long long horizon = 10000);

enum class SplitOutcome { Refuted, Candidate, Inconclusive };

struct SplitAttempt {
    std::string description;       // e.g. "M = {3}" or a partition listing
    std::vector<BigInt> f_powersums; // f(p), p = 1..max_period (when integral)
    std::vector<BigInt> g_powersums;
    SplitOutcome outcome;
    std::string reason; // refutation or acceptance note, re-checkable from A
};

enum class PrimenessVerdict { NoSplitFound, CandidateSplit, Inconclusive };

struct PrimenessReport {
    std::vector<BigInt> periodic_counts; // tr(A^p), p = 1..max_period
    std::vector<SplitAttempt> attempted_splits;
    PrimenessVerdict verdict;
};

// Enumerates candidate factorizations of the non-zero spectrum (integer
// scalar factors from trace divisibility, and proportional-block partitions
// of the numeric spectrum), then refutes or accepts each against exact
// periodic-point arithmetic. NoSplitFound means every candidate carries a
// recorded arithmetic obstruction; it is an obstruction report, not a
// primeness proof in general.
PrimenessReport primeness_obstruction(const EdgeSFT& X, long long max_period);

} // namespace betalab
