#include "betalab/shift_space.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace betalab {

FullShift::FullShift(int n) : n_(n) {
    if (n < 1) throw Error("full shift needs at least one symbol");
}

bool FullShift::admissible(const Word& w) const {
    for (Symbol s : w)
        if (s < 0 || s >= n_) return false;
    return true;
}

BetaShiftSpace::BetaShiftSpace(BetaShiftDescriptor desc) : desc_(std::move(desc)) {}

int BetaShiftSpace::alphabet_size() const { return static_cast<int>(desc_.alphabet_size()); }

int BetaShiftSpace::window() const {
    if (desc_.shift_class == ShiftClass::SFT)
        return static_cast<int>(desc_.expansion.head.size());
    // Sofic and inconclusive ambients: a finite proxy window, flagged via
    // exact_local(); inconclusive prefixes are capped so configuration checks
    // stay affordable.
    long long w = static_cast<long long>(desc_.d_stream.head.size()) +
                  2 * static_cast<long long>(desc_.d_stream.cycle.size()) + 2;
    if (desc_.shift_class == ShiftClass::NotSoficUpTo) w = std::min(w, 64LL);
    return static_cast<int>(w);
}

bool BetaShiftSpace::admissible(const Word& w) const {
    DigitWord dw(w.begin(), w.end());
    return is_admissible(desc_, dw);
}

std::string BetaShiftSpace::name() const {
    return "S_beta(d=" + digits_to_string(desc_.expansion.head) +
           (desc_.expansion.is_finite() ? "" : "...") + ")";
}

ProductShift::ProductShift(ShiftSpacePtr first, ShiftSpacePtr second)
    : a_(std::move(first)), b_(std::move(second)) {
    if (!a_ || !b_) throw Error("product of null shift spaces");
}

int ProductShift::alphabet_size() const { return a_->alphabet_size() * b_->alphabet_size(); }

int ProductShift::window() const { return std::max(a_->window(), b_->window()); }

bool ProductShift::admissible(const Word& w) const {
    Word wa(w.size()), wb(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= alphabet_size()) return false;
        wa[i] = first_of(w[i]);
        wb[i] = second_of(w[i]);
    }
    return a_->admissible(wa) && b_->admissible(wb);
}

std::string ProductShift::symbol_name(Symbol s) const {
    return "(" + a_->symbol_name(first_of(s)) + "," + b_->symbol_name(second_of(s)) + ")";
}

EdgeShiftSpace::EdgeShiftSpace(std::vector<std::pair<int, int>> edges,
                               std::vector<std::string> labels, std::string name)
    : edges_(std::move(edges)), labels_(std::move(labels)), name_(std::move(name)) {
    if (labels_.empty()) {
        labels_.reserve(edges_.size());
        for (size_t i = 0; i < edges_.size(); ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != edges_.size()) throw Error("edge label count mismatch");
    for (const auto& [s, t] : edges_) states_ = std::max(states_, std::max(s, t) + 1);
}

bool EdgeShiftSpace::admissible(const Word& w) const {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= alphabet_size()) return false;
        if (i + 1 < w.size() && target(w[i]) != source(w[i + 1])) return false;
    }
    return true;
}

Symbol Configuration::at(long long i) const {
    long long cs = center_start;
    long long ce = center_end();
    if (!center.empty() && i >= cs && i <= ce)
        return center[static_cast<size_t>(i - cs)];
    if (i < cs) {
        long long L = static_cast<long long>(left.size());
        long long back = (cs - 1 - i) % L; // 0 => last symbol of the period
        return left[static_cast<size_t>(L - 1 - back)];
    }
    long long L = static_cast<long long>(right.size());
    long long fwd = (i - (ce + 1)) % L;
    return right[static_cast<size_t>(fwd)];
}

Word Configuration::window_word(long long from, long long to) const {
    Word out;
    out.reserve(static_cast<size_t>(to - from + 1));
    for (long long i = from; i <= to; ++i) out.push_back(at(i));
    return out;
}

namespace {

Word primitive_word(Word w) {
    for (size_t len = 1; len <= w.size() / 2; ++len) {
        if (w.size() % len != 0) continue;
        bool ok = true;
        for (size_t i = len; i < w.size() && ok; ++i)
            if (w[i] != w[i % len]) ok = false;
        if (ok) return Word(w.begin(), w.begin() + len);
    }
    return w;
}

} // namespace

void Configuration::normalize() {
    if (left.empty() || right.empty()) throw Error("configuration periods must be nonempty");
    left = primitive_word(std::move(left));
    right = primitive_word(std::move(right));
    bool changed = true;
    while (changed && !center.empty()) {
        changed = false;
        // absorb into the left tiling: its natural continuation at
        // center_start is left[0]
        if (center.front() == left.front()) {
            center.erase(center.begin());
            ++center_start;
            std::rotate(left.begin(), left.begin() + 1, left.end());
            changed = true;
            continue;
        }
        // absorb into the right tiling: its natural continuation at
        // center_end is right.back()
        if (center.back() == right.back()) {
            center.pop_back();
            std::rotate(right.begin(), right.begin() + right.size() - 1, right.end());
            changed = true;
        }
    }
}

bool Configuration::same_point(const Configuration& other) const {
    long long lo = std::min(center_start, other.center_start) -
                   static_cast<long long>(left.size() + other.left.size() + 2);
    long long hi = std::max(center_end(), other.center_end()) +
                   static_cast<long long>(right.size() + other.right.size() + 2);
    for (long long i = lo; i <= hi; ++i)
        if (at(i) != other.at(i)) return false;
    return true;
}

std::string Configuration::to_string() const {
    std::ostringstream out;
    auto word = [](const Word& w) {
        std::ostringstream o;
        for (size_t i = 0; i < w.size(); ++i) o << (i ? "," : "") << w[i];
        return o.str();
    };
    out << word(left) << "^inf ";
    // render the center with the origin dot, pulling in period symbols when
    // the center does not straddle position 0
    long long from = std::min(center_start, 0LL);
    long long to = std::max(center_end(), -1LL);
    bool dotted = false;
    for (long long i = from; i <= to; ++i) {
        if (i == 0) {
            out << (i > from ? " ." : ".");
            dotted = true;
        }
        if (i > from && i != 0) out << ",";
        if (i == 0 && i > from) out << " ";
        out << at(i);
    }
    if (!dotted) out << " .";
    out << " " << word(right) << "^inf";
    return out.str();
}

bool configuration_admissible(const ShiftSpace& ambient, const Configuration& x) {
    int w = ambient.window();
    long long from = x.center_start - static_cast<long long>(x.left.size()) - w;
    long long to = x.center_end() + static_cast<long long>(x.right.size()) + w;
    return ambient.admissible(x.window_word(from, to));
}

std::vector<Word> enumerate_admissible_words(const ShiftSpace& ambient, int length) {
    std::vector<Word> out;
    Word cur;
    std::function<void()> dfs = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (Symbol s = 0; s < ambient.alphabet_size(); ++s) {
            cur.push_back(s);
            if (ambient.admissible(cur)) dfs();
            cur.pop_back();
        }
    };
    if (length == 0) return {Word{}};
    dfs();
    return out;
}

std::vector<Word> enumerate_periodic_words(const ShiftSpace& ambient, int period) {
    std::vector<Word> out;
    int w = ambient.window();
    int reps = (w + period - 1) / period + 2;
    Word cur;
    std::function<void()> dfs = [&]() {
        if (static_cast<int>(cur.size()) == period) {
            Word rep;
            rep.reserve(cur.size() * reps);
            for (int r = 0; r < reps; ++r) rep.insert(rep.end(), cur.begin(), cur.end());
            if (ambient.admissible(rep)) out.push_back(cur);
            return;
        }
        for (Symbol s = 0; s < ambient.alphabet_size(); ++s) {
            cur.push_back(s);
            if (ambient.admissible(cur)) dfs();
            cur.pop_back();
        }
    };
    dfs();
    return out;
}

SlidingBlockCode::SlidingBlockCode(ShiftSpacePtr domain, ShiftSpacePtr codomain, int lo, int hi,
                                   std::map<Word, Symbol> rule)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), lo_(lo), hi_(hi),
      rule_(std::move(rule)) {
    if (!domain_ || !codomain_) throw Error("sliding block code needs shift spaces");
    if (lo_ > hi_) throw Error("window must satisfy lo <= hi");
    // totality on admissible blocks
    for (const Word& b : enumerate_admissible_words(*domain_, hi_ - lo_ + 1)) {
        auto it = rule_.find(b);
        if (it == rule_.end())
            throw Error("rule table is not total: no entry for an admissible block");
        if (it->second < 0 || it->second >= codomain_->alphabet_size())
            throw Error("rule table maps a block outside the codomain alphabet");
    }
}

Symbol SlidingBlockCode::apply_block(const Word& block) const {
    auto it = rule_.find(block);
    if (it == rule_.end()) throw InadmissibleInput("block not in the rule table");
    return it->second;
}

Word SlidingBlockCode::apply_word(const Word& w) const {
    int wl = hi_ - lo_ + 1;
    if (static_cast<int>(w.size()) < wl) throw InadmissibleInput("word shorter than the rule window");
    Word out;
    out.reserve(w.size() - wl + 1);
    for (size_t t = 0; t + wl <= w.size(); ++t)
        out.push_back(apply_block(Word(w.begin() + t, w.begin() + t + wl)));
    return out;
}

Word SlidingBlockCode::apply_cyclic(const Word& w) const {
    long long p = static_cast<long long>(w.size());
    Word out(w.size());
    int wl = hi_ - lo_ + 1;
    for (long long i = 0; i < p; ++i) {
        Word block(wl);
        for (int t = 0; t < wl; ++t) {
            long long pos = ((i + lo_ + t) % p + p) % p;
            block[t] = w[static_cast<size_t>(pos)];
        }
        out[static_cast<size_t>(i)] = apply_block(block);
    }
    return out;
}

Configuration SlidingBlockCode::apply(const Configuration& x) const {
    long long cs = x.center_start, ce = x.center_end();
    long long lu = static_cast<long long>(x.left.size());
    long long lv = static_cast<long long>(x.right.size());
    long long s = cs - hi_ - lu; // new center start, inside the pure left zone
    long long e = ce - lo_ + lv; // new center end, inside the pure right zone
    auto image_at = [&](long long i) {
        Word block = x.window_word(i + lo_, i + hi_);
        return apply_block(block);
    };
    Configuration y;
    y.center_start = s;
    y.left.reserve(static_cast<size_t>(lu));
    for (long long i = s - lu; i < s; ++i) y.left.push_back(image_at(i));
    for (long long i = s; i <= e; ++i) y.center.push_back(image_at(i));
    for (long long i = e + 1; i <= e + lv; ++i) y.right.push_back(image_at(i));
    y.normalize();
    return y;
}

bool SlidingBlockCode::same_rule(const SlidingBlockCode& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_ && rule_ == other.rule_;
}

SlidingBlockCode shift_code(ShiftSpacePtr ambient, int p) {
    auto codomain = ambient;
    return SlidingBlockCode::from_function(std::move(ambient), std::move(codomain), p, p,
                                           [](const Word& b) { return b[0]; });
}

SlidingBlockCode identity_code(ShiftSpacePtr ambient) { return shift_code(std::move(ambient), 0); }

SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g) {
    if (f.domain()->name() != g.codomain()->name() ||
        f.domain()->alphabet_size() != g.codomain()->alphabet_size())
        throw AmbientMismatch("composition domains do not match: " + f.domain()->name() +
                              " vs " + g.codomain()->name());
    int lo = f.lo() + g.lo();
    int hi = f.hi() + g.hi();
    return SlidingBlockCode::from_function(g.domain(), f.codomain(), lo, hi,
                                           [&](const Word& block) {
                                               Word inner = g.apply_word(block);
                                               return f.apply_block(inner);
                                           });
}

} // namespace betalab
