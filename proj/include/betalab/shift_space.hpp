#pragma once

// Ambient shift spaces (full shifts, SFT beta-shifts, edge shifts and
// products), spatially eventually periodic configurations u^inf w . v^inf,
// and sliding block codes given by total rule tables on admissible blocks.

#include "betalab/beta_core.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace betalab {

using Symbol = int;
using Word = std::vector<Symbol>;

class ShiftSpace {
public:
    virtual ~ShiftSpace() = default;
    virtual int alphabet_size() const = 0;
    // Window length for local admissibility: for the m-step SFT ambients used
    // here a word/configuration is admissible iff all windows of this length
    // are. Sofic non-SFT ambients report their check window and are flagged
    // non-exact.
    virtual int window() const = 0;
    virtual bool exact_local() const { return true; }
    virtual bool admissible(const Word& w) const = 0;
    virtual std::string symbol_name(Symbol s) const { return std::to_string(s); }
    virtual std::string name() const = 0;
};

using ShiftSpacePtr = std::shared_ptr<const ShiftSpace>;

class FullShift : public ShiftSpace {
public:
    explicit FullShift(int n);
    int alphabet_size() const override { return n_; }
    int window() const override { return 1; }
    bool admissible(const Word& w) const override;
    std::string name() const override { return "S_" + std::to_string(n_); }

private:
    int n_;
};

class BetaShiftSpace : public ShiftSpace {
public:
    explicit BetaShiftSpace(BetaShiftDescriptor desc);
    int alphabet_size() const override;
    int window() const override;
    bool exact_local() const override { return desc_.shift_class == ShiftClass::SFT; }
    bool admissible(const Word& w) const override;
    std::string name() const override;
    const BetaShiftDescriptor& descriptor() const { return desc_; }

private:
    BetaShiftDescriptor desc_;
};

class ProductShift : public ShiftSpace {
public:
    ProductShift(ShiftSpacePtr first, ShiftSpacePtr second);
    int alphabet_size() const override;
    int window() const override;
    bool exact_local() const override { return a_->exact_local() && b_->exact_local(); }
    bool admissible(const Word& w) const override;
    std::string symbol_name(Symbol s) const override;
    std::string name() const override { return a_->name() + "x" + b_->name(); }

    Symbol pair(Symbol x, Symbol y) const { return x * b_->alphabet_size() + y; }
    Symbol first_of(Symbol s) const { return s / b_->alphabet_size(); }
    Symbol second_of(Symbol s) const { return s % b_->alphabet_size(); }
    const ShiftSpacePtr& first() const { return a_; }
    const ShiftSpacePtr& second() const { return b_; }

private:
    ShiftSpacePtr a_, b_;
};

// Edge shift over an explicit edge list (symbols are edge indices).
class EdgeShiftSpace : public ShiftSpace {
public:
    EdgeShiftSpace(std::vector<std::pair<int, int>> edges, std::vector<std::string> labels,
                   std::string name);
    int alphabet_size() const override { return static_cast<int>(edges_.size()); }
    int window() const override { return 2; }
    bool admissible(const Word& w) const override;
    std::string symbol_name(Symbol s) const override { return labels_[s]; }
    std::string name() const override { return name_; }

    int source(Symbol s) const { return edges_[s].first; }
    int target(Symbol s) const { return edges_[s].second; }
    int state_count() const { return states_; }

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::string name_;
    int states_ = 0;
};

// Spatially eventually periodic point u^inf w . v^inf. center_start is the
// absolute position of the first center symbol; the left period tiles
// (-inf, center_start) ending with its last symbol, the right period tiles
// [center_start + |center|, inf) starting with its first symbol.
struct Configuration {
    Word left;   // nonempty
    Word center; // may be empty
    Word right;  // nonempty
    long long center_start = 0;

    Symbol at(long long i) const;
    long long center_end() const { return center_start + static_cast<long long>(center.size()) - 1; }
    Word window_word(long long from, long long to) const; // inclusive
    void normalize();
    bool same_point(const Configuration& other) const;
    std::string to_string() const;
};

// Admissibility of the whole configuration: exact for exact-local ambients.
bool configuration_admissible(const ShiftSpace& ambient, const Configuration& x);

// All admissible words of the given length (DFS with prefix pruning).
std::vector<Word> enumerate_admissible_words(const ShiftSpace& ambient, int length);
// All words w of the given length with w^Z admissible (p-periodic points).
std::vector<Word> enumerate_periodic_words(const ShiftSpace& ambient, int period);

// Sliding block code F(x)[i] = f(x[i+lo], ..., x[i+hi]) with a total rule
// table on admissible domain blocks. The paper's memory/anticipation (m, a)
// correspond to lo = m, hi = a; the diameter is hi - lo.
class SlidingBlockCode {
public:
    SlidingBlockCode(ShiftSpacePtr domain, ShiftSpacePtr codomain, int lo, int hi,
                     std::map<Word, Symbol> rule);

    template <typename Fn>
    static SlidingBlockCode from_function(ShiftSpacePtr domain, ShiftSpacePtr codomain, int lo,
                                          int hi, Fn&& fn) {
        std::map<Word, Symbol> rule;
        for (const Word& block : enumerate_admissible_words(*domain, hi - lo + 1))
            rule[block] = fn(block);
        return SlidingBlockCode(std::move(domain), std::move(codomain), lo, hi, std::move(rule));
    }

    const ShiftSpacePtr& domain() const { return domain_; }
    const ShiftSpacePtr& codomain() const { return codomain_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int diameter() const { return hi_ - lo_; }
    int radius() const { return std::max(-lo_, hi_); }
    const std::map<Word, Symbol>& rule() const { return rule_; }

    Symbol apply_block(const Word& block) const;
    // Image of a finite word spanning [from, from + |w| - 1]; the image spans
    // [from - lo, from + |w| - 1 - hi].
    Word apply_word(const Word& w) const;
    Word apply_cyclic(const Word& w) const; // block map on w^Z, same period
    Configuration apply(const Configuration& x) const;

    bool same_rule(const SlidingBlockCode& other) const;

private:
    ShiftSpacePtr domain_, codomain_;
    int lo_, hi_;
    std::map<Word, Symbol> rule_;
};

SlidingBlockCode shift_code(ShiftSpacePtr ambient, int p); // sigma^p
SlidingBlockCode identity_code(ShiftSpacePtr ambient);
SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g); // f after g

} // namespace betalab
