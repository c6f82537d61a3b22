#include "betalab/beta_core.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace betalab {

std::string digits_to_string(const DigitWord& w) {
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i];
    }
    return out.str();
}

DigitWord digits_from_string(const std::string& s) {
    DigitWord out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    return out;
}

bool DigitStream::eventually_constant() const {
    if (cycle.empty()) return true;
    for (size_t i = 1; i < cycle.size(); ++i)
        if (cycle[i] != cycle[0]) return false;
    return true;
}

std::string BetaShiftDescriptor::class_name() const {
    switch (shift_class) {
        case ShiftClass::SFT: return "sft";
        case ShiftClass::Sofic: return "sofic";
        default: return "not-sofic-up-to";
    }
}

namespace {

// Reduce a cycle to its primitive root (the shortest word whose repetition
// reproduces it).
DigitWord primitive_cycle(DigitWord c) {
    for (size_t len = 1; len <= c.size() / 2; ++len) {
        if (c.size() % len != 0) continue;
        bool ok = true;
        for (size_t i = len; i < c.size() && ok; ++i)
            if (c[i] != c[i % len]) ok = false;
        if (ok) return DigitWord(c.begin(), c.begin() + len);
    }
    return c;
}

struct FieldElementValueLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const {
        return a.compare(b) == Ordering::Less;
    }
};

} // namespace

BetaExpansion expand_one(const AlgebraicReal& beta, long long horizon) {
    if (horizon < 1) throw Error("horizon must be >= 1");
    FieldElement b = beta.as_element();
    FieldElement xi = beta.element_from_rational(BigRat(1));
    std::map<FieldElement, long long, FieldElementValueLess> seen;
    DigitWord digits;
    for (long long i = 0; i < horizon; ++i) {
        if (xi.sign() == 0) {
            // T^i(1) = 0: finite expansion (last digit nonzero by greediness).
            return BetaExpansion{digits, FiniteTail{}};
        }
        auto it = seen.find(xi);
        if (it != seen.end()) {
            long long j = it->second;
            DigitWord head(digits.begin(), digits.begin() + j);
            DigitWord cycle(digits.begin() + j, digits.end());
            return BetaExpansion{head, PeriodicTail{primitive_cycle(cycle)}};
        }
        seen.emplace(xi, i);
        FieldElement prod = b * xi;
        auto [k, frac] = prod.floor_and_frac();
        digits.push_back(k.get_si());
        xi = frac;
    }
    return BetaExpansion{digits, UnknownTail{horizon}};
}

BetaExpansion expand_one_approx(double beta, long long horizon) {
    if (horizon < 1) throw Error("horizon must be >= 1");
    double xi = 1.0;
    DigitWord digits;
    for (long long i = 0; i < horizon; ++i) {
        double prod = beta * xi;
        double d = std::floor(prod);
        digits.push_back(static_cast<long long>(d));
        xi = prod - d;
        if (xi <= 0) break; // best-effort only; never treated as a proof
    }
    return BetaExpansion{digits, UnknownTail{horizon}};
}

DigitStream d_star(const BetaExpansion& exp) {
    if (exp.is_unknown())
        throw UnknownTailError("classification inconclusive: d(beta) neither finite nor cycled");
    if (exp.is_finite()) {
        DigitWord cycle = exp.head;
        if (cycle.empty()) throw Error("empty finite expansion");
        cycle.back() -= 1;
        return DigitStream{{}, primitive_cycle(cycle)};
    }
    const auto& tail = std::get<PeriodicTail>(exp.tail);
    return DigitStream{exp.head, tail.period};
}

namespace {

DigitStream d_stream_of(const BetaExpansion& exp) {
    if (exp.is_finite()) return DigitStream{exp.head, {0}};
    if (exp.is_periodic()) return DigitStream{exp.head, std::get<PeriodicTail>(exp.tail).period};
    return DigitStream{exp.head, {}};
}

BetaShiftDescriptor make_descriptor(BetaExpansion exp, long long horizon) {
    BetaShiftDescriptor desc;
    desc.expansion = exp;
    desc.horizon = horizon;
    desc.d_stream = d_stream_of(exp);
    if (exp.is_finite()) {
        desc.shift_class = ShiftClass::SFT;
        desc.dstar = d_star(exp);
    } else if (exp.is_periodic()) {
        desc.shift_class = ShiftClass::Sofic;
        desc.dstar = d_star(exp);
    } else {
        desc.shift_class = ShiftClass::NotSoficUpTo;
        desc.dstar = desc.d_stream; // known prefix only
    }
    return desc;
}

} // namespace

BetaShiftDescriptor classify(const AlgebraicReal& beta, long long horizon) {
    BetaShiftDescriptor desc = make_descriptor(expand_one(beta, horizon), horizon);
    desc.beta = beta;
    desc.exact = true;
    return desc;
}

BetaShiftDescriptor classify_approx(double beta, long long horizon) {
    BetaShiftDescriptor desc = make_descriptor(expand_one_approx(beta, horizon), horizon);
    desc.beta_approx = beta;
    desc.exact = false;
    return desc;
}

bool lex_greater_all_shifts(const DigitWord& w) {
    if (w.empty() || w[0] < 1) return false;
    for (size_t i = 1; i < w.size(); ++i) {
        // compare w (padded with zeros) against w[i..] padded with zeros
        bool strictly_greater = false;
        for (size_t j = 0; j < w.size(); ++j) {
            long long a = w[j];
            long long b = (i + j < w.size()) ? w[i + j] : 0;
            if (a != b) {
                strictly_greater = a > b;
                break;
            }
        }
        if (!strictly_greater) return false;
    }
    return true;
}

BetaShiftDescriptor descriptor_from_digits(const DigitWord& w) {
    if (w.empty()) throw NotLexMaximal("empty digit word");
    if (!lex_greater_all_shifts(w))
        throw NotLexMaximal(digits_to_string(w) + " is not lexicographically greater than all its shifts");
    if (w.back() < 1) throw NotLexMaximal("finite expansions end in a nonzero digit");
    BetaShiftDescriptor desc = make_descriptor(BetaExpansion{w, FiniteTail{}}, 0);
    desc.exact = true;
    return desc;
}

BetaShiftDescriptor descriptor_from_eventually_periodic(const DigitWord& head, const DigitWord& cycle) {
    if (cycle.empty()) return descriptor_from_digits(head);
    DigitStream s{head, primitive_cycle(cycle)};
    // Validity: every proper shift of the stream must stay strictly below the
    // stream itself (compare over a window long enough to expose the cycle).
    size_t window = head.size() + 2 * s.cycle.size() + 2;
    for (size_t i = 1; i < head.size() + s.cycle.size() + 1; ++i) {
        int cmp = 0;
        for (size_t j = 0; j < window; ++j) {
            long long a = s.at(i + j), b = s.at(j);
            if (a != b) {
                cmp = a < b ? -1 : 1;
                break;
            }
        }
        if (cmp >= 0)
            throw NotLexMaximal("stream shift " + std::to_string(i) + " is not strictly below the stream");
    }
    BetaExpansion exp{head, PeriodicTail{s.cycle}};
    BetaShiftDescriptor desc = make_descriptor(exp, 0);
    desc.exact = true;
    return desc;
}

std::vector<DigitWord> code_words(const BetaShiftDescriptor& desc, long long max_len) {
    if (max_len < 1) throw Error("max_len must be >= 1");
    std::vector<DigitWord> out;
    for (long long n = 0; n < max_len; ++n) {
        long long dn = desc.d_stream.at(n);
        for (long long b = 0; b < dn; ++b) {
            DigitWord w = desc.d_stream.prefix(n);
            w.push_back(b);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int compare_word_to_stream(const DigitWord& w, size_t w_from, const DigitStream& s) {
    for (size_t j = 0; w_from + j < w.size(); ++j) {
        long long a = w[w_from + j], b = s.at(j);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

bool is_admissible(const BetaShiftDescriptor& desc, const DigitWord& w) {
    for (long long d : w)
        if (d < 0) return false;
    for (size_t i = 0; i < w.size(); ++i)
        if (compare_word_to_stream(w, i, desc.dstar) > 0) return false;
    return true;
}

ParseResult parse_code(const BetaShiftDescriptor& desc, const DigitWord& w) {
    if (!is_admissible(desc, w))
        throw NotAdmissible(digits_to_string(w) + " is not in the language of the shift");
    ParseResult res;
    size_t pos = 0;
    while (pos < w.size()) {
        // Follow d(beta) until the word drops strictly below it; the prefix
        // ending at that drop is the unique code word starting here.
        size_t j = 0;
        while (pos + j < w.size() && w[pos + j] == desc.d_stream.at(j)) ++j;
        if (pos + j == w.size()) {
            // remainder is a proper prefix of a code word
            res.remainder.assign(w.begin() + pos, w.end());
            return res;
        }
        if (w[pos + j] > desc.d_stream.at(j))
            throw NotAdmissible("internal: admissible word fell outside the code");
        res.factors.emplace_back(w.begin() + pos, w.begin() + pos + j + 1);
        pos += j + 1;
    }
    return res;
}

} // namespace betalab
