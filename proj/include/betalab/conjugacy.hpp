#pragma once

// The explicit conjugacy phi : S_n x X_C -> X_B between the product of a full
// shift with the companion edge shift of d(gamma) and the companion edge
// shift of d(n*gamma), together with its inverse and a periodic-point
// verifier.

#include "betalab/factorization.hpp"
#include "betalab/shift_space.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace betalab {

// Edges as in the label figures: state j carries return edges (j, k_j) back
// to state 1 (with a digit tuple (i_1..i_j) on the X_B side) and one star
// edge *_j to state j+1.
struct GraphEdge {
    enum class Kind { Return, Star };
    int source = 1; // states are 1-based
    int target = 1;
    Kind kind = Kind::Return;
    int k = 0;               // 0 <= k < a_{d-j} for return edges
    std::vector<int> digits; // (i_1, ..., i_j) on the X_B side; empty for X_C

    std::string label(int state_j) const;
};

struct LabeledGraph {
    int states = 0;
    std::vector<GraphEdge> edges;

    std::shared_ptr<EdgeShiftSpace> as_shift(const std::string& name) const;
    EdgeSFT adjacency() const;
};

LabeledGraph graph_x_c(const DigitWord& w);
LabeledGraph graph_x_b(long long n, const DigitWord& w);

struct ConjugacyInstance {
    long long n = 0;
    DigitWord w;
    DigitWord scaled;
    LabeledGraph gc, gb;
    std::shared_ptr<EdgeShiftSpace> xc, xb;
    std::shared_ptr<ProductShift> product; // S_n x X_C
};

// Throws LexConditionFailed unless both w and its scaled word satisfy the
// lexicographic condition.
ConjugacyInstance build_conjugacy_instance(long long n, const DigitWord& w);

// phi with memory d-1, anticipation 0, per the case table.
SlidingBlockCode build_phi(const ConjugacyInstance& inst);
// psi with memory 0, anticipation d-1; reads the digit history deposited on
// the next return edge to the right.
SlidingBlockCode build_phi_inverse(const ConjugacyInstance& inst);

struct CensusRow {
    int period = 0;
    BigInt left;  // n^p tr(C^p)
    BigInt right; // tr(B^p)
};

struct ConjugacyReport {
    long long n = 0;
    DigitWord w, scaled;
    bool ok = false;
    std::vector<CensusRow> census;
    std::string failure;
    Word witness;
    int witness_period = 0;
};

// Enumerates all periodic points of period <= max_period on both sides,
// checks that phi and psi are mutually inverse shift-commuting bijections on
// them, and checks the census n^p tr(C^p) = tr(B^p). Any failed check stops
// with a minimal witness.
ConjugacyReport verify_conjugacy(long long n, const DigitWord& w, int max_period);

} // namespace betalab
