#pragma once

// Cellular automata on subshifts: application to spatially eventually
// periodic configurations, composition and directional re-slanting,
// space-time diagrams, bounded-exact blocking-word verification and a
// seeded directional sensitivity probe.

#include "betalab/shift_space.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace betalab {

class CellularAutomaton {
public:
    // domain and codomain must coincide; closure (admissible blocks map to
    // admissible blocks) is checked by enumeration for exact-local ambients.
    explicit CellularAutomaton(SlidingBlockCode code, bool check_closure = true);

    const SlidingBlockCode& code() const { return code_; }
    const ShiftSpacePtr& ambient() const { return code_.domain(); }
    int radius() const { return code_.radius(); }

    Configuration apply(const Configuration& x) const;
    Word apply_cyclic(const Word& w) const { return code_.apply_cyclic(w); }

private:
    SlidingBlockCode code_;
};

CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g);
CellularAutomaton power(const CellularAutomaton& f, int q);
// sigma^p o F^q; requires gcd(p, q) = 1, q > 0.
CellularAutomaton with_shift(const CellularAutomaton& f, int p, int q);
CellularAutomaton shift_ca(ShiftSpacePtr ambient, int p = 1);
CellularAutomaton identity_ca(ShiftSpacePtr ambient);

struct SpaceTimeDiagram {
    long long window_lo = 0, window_hi = 0;
    std::vector<Word> rows; // rows[t] = F^t(x) over [window_lo, window_hi]

    std::string to_ascii(const ShiftSpace& ambient) const;
};

SpaceTimeDiagram space_time(const CellularAutomaton& f, const Configuration& x, int steps,
                            long long window_lo, long long window_hi);
// Binary PGM (P5), one gray level per symbol (0 rendered white).
std::string space_time_to_pgm(const SpaceTimeDiagram& d, int alphabet_size);

enum class BlockingStatus { VerifiedUpTo, Refuted };

struct BlockingWitness {
    long long step = 0;
    long long span_start = 0; // absolute position of the extension words
    Word extension_a, extension_b; // full words over the span, differing image windows
    Word window_a, window_b;       // F^step images over [p, p+e-1]
};

struct BlockingCertificate {
    Word word;
    int e = 0;
    int offset = 0; // the Definition's p
    long long verified_up_to = 0;
    BlockingStatus status = BlockingStatus::VerifiedUpTo;
    std::optional<BlockingWitness> witness;
};

// Exact for n <= max_steps: F^n over cyl(word, 0) depends only on
// x[offset - n r, offset + e - 1 + n r]; all admissible extensions over that
// span are enumerated (budget-guarded) and the image windows compared.
BlockingCertificate verify_blocking(const CellularAutomaton& f, const Word& word, int e, int offset,
                                    long long max_steps, long long budget = 2000000);

struct BlockingCandidate {
    Word word; // a prefix of the d(beta)/d* stream ending in u b
    int e = 0;
    int offset = 0;
    Word u;
    long long a = 0, b = 0;
    long long position = 0; // where u starts in the stream
};

// Scans the expansion stream for a window u of length 3r whose stream
// continuation b admits a strictly smaller admissible continuation a that
// also occurs in the stream; returns the shortest stream prefix ending in
// u b with protected-window parameters (e = r + 1, offset 0). Throws
// NoBranchingFound when the scanned stream admits no such position (in
// particular when it is eventually constant).
BlockingCandidate blocking_candidate_from_expansion(const BetaShiftDescriptor& desc, int r);

struct ProbeReport {
    int p = 0, q = 1;
    int trials = 0, steps = 0;
    std::uint64_t seed = 0;
    std::vector<long long> radii;      // persistent-difference radius at `steps`, sorted
    std::vector<long long> radii_half; // same at steps/2, sorted
    long long min_radius = 0, median_radius = 0, max_radius = 0;
    long long median_radius_half = 0;
    bool growing = false;
    std::string label; // "sensitive-like" or "equicontinuity-like" (heuristic)
};

// Seeded heuristic probe: perturb a random admissible configuration at the
// origin and measure how far differences persist under sigma^p o F^q.
ProbeReport sensitivity_probe(const CellularAutomaton& f, int p, int q, int trials, int steps,
                              std::uint64_t seed);

// Sample a random admissible configuration / an admissible single-symbol
// flip at the origin (exposed for tests).
Configuration random_configuration(const ShiftSpace& ambient, std::mt19937_64& rng);

} // namespace betalab
