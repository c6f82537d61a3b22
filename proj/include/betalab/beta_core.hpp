#pragma once

// Beta-expansions, the prefix code Y_beta, language membership and the
// SFT/sofic classification of the beta-shift S_beta.

#include "betalab/algebraic.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace betalab {

// Digits are plain integers and may exceed 9 (scaled alphabets produce
// digits like n^d * a_0); rendering always separates them with commas.
using DigitWord = std::vector<long long>;

std::string digits_to_string(const DigitWord& w);
DigitWord digits_from_string(const std::string& s);

struct FiniteTail {};
struct PeriodicTail {
    DigitWord period; // primitive, with the shortest possible preperiod
};
struct UnknownTail {
    long long horizon = 0;
};

struct BetaExpansion {
    DigitWord head;
    std::variant<FiniteTail, PeriodicTail, UnknownTail> tail;

    bool is_finite() const { return std::holds_alternative<FiniteTail>(tail); }
    bool is_periodic() const { return std::holds_alternative<PeriodicTail>(tail); }
    bool is_unknown() const { return std::holds_alternative<UnknownTail>(tail); }
};

// Eventually periodic digit stream head . (cycle)^inf; a finite stream is
// modeled with cycle = {0}.
struct DigitStream {
    DigitWord head;
    DigitWord cycle;

    long long at(size_t i) const {
        if (i < head.size()) return head[i];
        if (cycle.empty()) return 0;
        return cycle[(i - head.size()) % cycle.size()];
    }
    DigitWord prefix(size_t n) const {
        DigitWord out(n);
        for (size_t i = 0; i < n; ++i) out[i] = at(i);
        return out;
    }
    bool eventually_constant() const;
};

enum class ShiftClass { SFT, Sofic, NotSoficUpTo };

struct BetaShiftDescriptor {
    // Exact base when available; approximate bases only ever yield
    // inconclusive classifications.
    std::optional<AlgebraicReal> beta;
    std::optional<double> beta_approx;
    BetaExpansion expansion;
    DigitStream dstar;    // d*(beta): d itself when infinite, (d_0..(d_m - 1))^inf when finite
    DigitStream d_stream; // d(beta) zero-extended when finite
    ShiftClass shift_class = ShiftClass::NotSoficUpTo;
    long long horizon = 0; // meaningful for NotSoficUpTo
    bool exact = true;     // false in approximate mode

    long long alphabet_max() const { return d_stream.at(0); } // symbols 0..alphabet_max
    long long alphabet_size() const { return alphabet_max() + 1; }
    std::string class_name() const;
};

// Greedy expansion of 1: digits floor(beta * T^i(1)). Every exact orbit point
// is stored keyed by its value, so a detected cycle or termination is a proof.
BetaExpansion expand_one(const AlgebraicReal& beta, long long horizon);
// Approximate mode: double iteration, never conclusive.
BetaExpansion expand_one_approx(double beta, long long horizon);

// d*(beta) from a concluded expansion; UnknownTail throws UnknownTail error.
DigitStream d_star(const BetaExpansion& exp);

BetaShiftDescriptor classify(const AlgebraicReal& beta, long long horizon = 10000);
BetaShiftDescriptor classify_approx(double beta, long long horizon = 10000);

// Descriptor for an SFT beta-shift named by its finite expansion word
// (validated against the lexicographic condition).
BetaShiftDescriptor descriptor_from_digits(const DigitWord& w);
// Descriptor for a sofic beta-shift named by an eventually periodic
// expansion d(beta) = head (cycle)^inf; validated against the requirement
// that every shift of the stream stays lexicographically below it.
BetaShiftDescriptor descriptor_from_eventually_periodic(const DigitWord& head, const DigitWord& cycle);

// All code words of Y_beta = { d_0..d_{n-1} b : 0 <= b < d_n } of length <= max_len.
std::vector<DigitWord> code_words(const BetaShiftDescriptor& desc, long long max_len);

// Finite-word membership in L(S_beta): every suffix of w is lexicographically
// <= the equal-length prefix of d*(beta).
bool is_admissible(const BetaShiftDescriptor& desc, const DigitWord& w);

struct ParseResult {
    std::vector<DigitWord> factors;
    DigitWord remainder; // proper prefix of some code word, possibly empty
};

// Unique greedy factorization of an admissible word into Y_beta code words.
ParseResult parse_code(const BetaShiftDescriptor& desc, const DigitWord& w);

// Lexicographic comparison of equal-length windows; helper shared with the
// SFT tools (compares a..b against the stream prefix).
int compare_word_to_stream(const DigitWord& w, size_t w_from, const DigitStream& s);

// w 0^inf strictly exceeds every proper shift of itself. This is the
// admissibility condition for finite expansions; |w| symbols per comparison
// suffice.
bool lex_greater_all_shifts(const DigitWord& w);

} // namespace betalab
