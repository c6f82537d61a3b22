#include "betalab/conjugacy.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace betalab {

namespace {

std::string star_label(int j) { return "*" + std::to_string(j); }

std::string return_label(const std::vector<int>& digits, int j, int k) {
    std::ostringstream out;
    out << "(";
    for (int d : digits) out << d << ",";
    out << j << "," << k << ")";
    return out.str();
}

} // namespace

LabeledGraph graph_x_c(const DigitWord& w) {
    int d = static_cast<int>(w.size());
    LabeledGraph g;
    g.states = d;
    for (int j = 1; j <= d; ++j) {
        long long count = w[j - 1]; // a_{d-j}
        for (long long k = 0; k < count; ++k)
            g.edges.push_back(GraphEdge{j, 1, GraphEdge::Kind::Return, static_cast<int>(k), {}});
        if (j < d) g.edges.push_back(GraphEdge{j, j + 1, GraphEdge::Kind::Star, 0, {}});
    }
    return g;
}

LabeledGraph graph_x_b(long long n, const DigitWord& w) {
    int d = static_cast<int>(w.size());
    LabeledGraph g;
    g.states = d;
    for (int j = 1; j <= d; ++j) {
        long long count = w[j - 1];
        // digit tuples (i_1, ..., i_j) in lexicographic order
        std::vector<int> digits(j, 0);
        while (true) {
            for (long long k = 0; k < count; ++k)
                g.edges.push_back(GraphEdge{j, 1, GraphEdge::Kind::Return, static_cast<int>(k), digits});
            int pos = j - 1;
            while (pos >= 0 && digits[pos] == n - 1) {
                digits[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++digits[pos];
        }
        if (j < d) g.edges.push_back(GraphEdge{j, j + 1, GraphEdge::Kind::Star, 0, {}});
    }
    return g;
}

std::string GraphEdge::label(int state_j) const {
    if (kind == Kind::Star) return star_label(source);
    std::vector<int> ds = digits;
    (void)state_j;
    if (ds.empty()) {
        std::ostringstream out;
        out << "(" << source << "," << k << ")";
        return out.str();
    }
    return return_label(ds, source, k);
}

std::shared_ptr<EdgeShiftSpace> LabeledGraph::as_shift(const std::string& name) const {
    std::vector<std::pair<int, int>> es;
    std::vector<std::string> labels;
    es.reserve(edges.size());
    for (const auto& e : edges) {
        es.emplace_back(e.source - 1, e.target - 1);
        labels.push_back(e.label(e.source));
    }
    return std::make_shared<EdgeShiftSpace>(std::move(es), std::move(labels), name);
}

EdgeSFT LabeledGraph::adjacency() const {
    IntMatrix m(states, std::vector<BigInt>(states, BigInt(0)));
    for (const auto& e : edges) m[e.source - 1][e.target - 1] += 1;
    return EdgeSFT(std::move(m));
}

ConjugacyInstance build_conjugacy_instance(long long n, const DigitWord& w) {
    if (n < 2) throw LexConditionFailed("n must be >= 2");
    if (!lex_greater_all_shifts(w))
        throw LexConditionFailed(digits_to_string(w) + " is not lexicographically greater than all its shifts");
    DigitWord scaled = scaled_digit_word(n, w);
    if (!lex_greater_all_shifts(scaled))
        throw LexConditionFailed("scaled word " + digits_to_string(scaled) +
                                 " is not lexicographically greater than all its shifts");

    ConjugacyInstance inst;
    inst.n = n;
    inst.w = w;
    inst.scaled = scaled;
    inst.gc = graph_x_c(w);
    inst.gb = graph_x_b(n, w);
    inst.xc = inst.gc.as_shift("X_C(" + digits_to_string(w) + ")");
    inst.xb = inst.gb.as_shift("X_B(" + digits_to_string(scaled) + ")");
    auto full = std::make_shared<FullShift>(static_cast<int>(n));
    inst.product = std::make_shared<ProductShift>(full, inst.xc);
    return inst;
}

namespace {

// index of the edge in g matching (kind, source, k, digits)
Symbol find_edge(const LabeledGraph& g, GraphEdge::Kind kind, int source, int k,
                 const std::vector<int>& digits) {
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const GraphEdge& e = g.edges[i];
        if (e.kind == kind && e.source == source && (kind == GraphEdge::Kind::Star || e.k == k) &&
            e.digits == digits)
            return static_cast<Symbol>(i);
    }
    throw Error("edge lookup failed");
}

} // namespace

SlidingBlockCode build_phi(const ConjugacyInstance& inst) {
    int d = static_cast<int>(inst.w.size());
    const auto& product = inst.product;
    const LabeledGraph& gc = inst.gc;
    const LabeledGraph& gb = inst.gb;
    // memory d-1, anticipation 0: window [i-(d-1), i]
    return SlidingBlockCode::from_function(
        product, inst.xb, -(d - 1), 0, [&](const Word& block) -> Symbol {
            // block has d product symbols; the rightmost is position i.
            Symbol last = block.back();
            Symbol digit = product->first_of(last);
            Symbol edge = product->second_of(last);
            const GraphEdge& e = gc.edges[edge];
            if (e.kind == GraphEdge::Kind::Star)
                return find_edge(gb, GraphEdge::Kind::Star, e.source, 0, {});
            int j = e.source;
            // path validity guarantees the j-1 predecessors are *_1 ... *_{j-1};
            // collect the S_n digits i_1 ... i_j deposited on them.
            std::vector<int> digits(j, 0);
            digits[j - 1] = digit;
            for (int t = 1; t < j; ++t) {
                Symbol s = block[block.size() - 1 - t];
                digits[j - 1 - t] = product->first_of(s);
            }
            return find_edge(gb, GraphEdge::Kind::Return, j, e.k, digits);
        });
}

SlidingBlockCode build_phi_inverse(const ConjugacyInstance& inst) {
    int d = static_cast<int>(inst.w.size());
    const auto& product = inst.product;
    const LabeledGraph& gc = inst.gc;
    const LabeledGraph& gb = inst.gb;
    // memory 0, anticipation d-1: window [i, i+d-1]
    return SlidingBlockCode::from_function(
        inst.xb, std::static_pointer_cast<const ShiftSpace>(product), 0, d - 1,
        [&](const Word& block) -> Symbol {
            const GraphEdge& e = gb.edges[block.front()];
            if (e.kind == GraphEdge::Kind::Return) {
                // position i is the j-th edge of its excursion; the S_n digit
                // here is i_j, the last deposited one.
                Symbol c_edge = find_edge(gc, GraphEdge::Kind::Return, e.source, e.k, {});
                return product->pair(e.digits[e.source - 1], c_edge);
            }
            // star at state j: the digits live on the next return edge.
            int j = e.source;
            for (int t = 1; t <= d - 1; ++t) {
                const GraphEdge& f = gb.edges[block[t]];
                if (f.kind == GraphEdge::Kind::Return) {
                    Symbol c_edge = find_edge(gc, GraphEdge::Kind::Star, j, 0, {});
                    return product->pair(f.digits[j - 1], c_edge);
                }
            }
            throw Error("no return edge within the window of a star edge");
        });
}

namespace {

std::vector<Word> closed_paths(const EdgeShiftSpace& shift, int length) {
    std::vector<Word> out;
    Word cur(length, 0);
    std::function<void(int, int, int)> dfs = [&](int pos, int state, int start) {
        if (pos == length) {
            if (state == start) out.push_back(cur);
            return;
        }
        for (Symbol s = 0; s < shift.alphabet_size(); ++s) {
            if (shift.source(s) != state) continue;
            cur[pos] = s;
            dfs(pos + 1, shift.target(s), start);
        }
    };
    for (int st = 0; st < shift.state_count(); ++st) dfs(0, st, st);
    return out;
}

} // namespace

ConjugacyReport verify_conjugacy(long long n, const DigitWord& w, int max_period) {
    ConjugacyInstance inst = build_conjugacy_instance(n, w);
    SlidingBlockCode phi = build_phi(inst);
    SlidingBlockCode psi = build_phi_inverse(inst);

    ConjugacyReport report;
    report.n = n;
    report.w = w;
    report.scaled = inst.scaled;
    report.ok = true;

    EdgeSFT C = inst.gc.adjacency();
    EdgeSFT B = inst.gb.adjacency();

    auto fail = [&](std::string what, const Word& witness, int period) {
        report.ok = false;
        report.failure = std::move(what);
        report.witness = witness;
        report.witness_period = period;
    };

    for (int p = 1; p <= max_period && report.ok; ++p) {
        BigInt trC = periodic_count(C, p);
        BigInt trB = periodic_count(B, p);
        BigInt np(1);
        for (int i = 0; i < p; ++i) np *= big(n);
        CensusRow row{p, np * trC, trB};
        report.census.push_back(row);
        if (row.left != row.right) {
            fail("periodic point census mismatch", {}, p);
            break;
        }

        // Left side: pairs of an S_n word and a closed X_C path.
        std::vector<Word> c_cycles = closed_paths(static_cast<const EdgeShiftSpace&>(*inst.xc), p);
        if (BigInt(static_cast<long>(c_cycles.size())) != trC) {
            fail("closed path enumeration disagrees with tr(C^p)", {}, p);
            break;
        }
        std::vector<Word> digit_words;
        {
            Word cur(p, 0);
            std::function<void(int)> gen = [&](int pos) {
                if (pos == p) {
                    digit_words.push_back(cur);
                    return;
                }
                for (int c = 0; c < n; ++c) {
                    cur[pos] = c;
                    gen(pos + 1);
                }
            };
            gen(0);
        }

        const auto& product = inst.product;
        std::set<Word> images;
        for (const Word& cyc : c_cycles) {
            for (const Word& dw : digit_words) {
                Word point(p);
                for (int i = 0; i < p; ++i) point[i] = product->pair(dw[i], cyc[i]);
                Word image = phi.apply_cyclic(point);
                if (!inst.xb->admissible(image)) {
                    fail("phi image is not a valid X_B path", point, p);
                    break;
                }
                if (!images.insert(image).second) {
                    fail("phi is not injective on periodic points", point, p);
                    break;
                }
                Word back = psi.apply_cyclic(image);
                if (back != point) {
                    fail("psi(phi(x)) != x", point, p);
                    break;
                }
                // equivariance: phi(sigma x) = sigma phi(x)
                Word rotated(p);
                for (int i = 0; i < p; ++i) rotated[i] = point[(i + 1) % p];
                Word img_rot = phi.apply_cyclic(rotated);
                Word rot_img(p);
                for (int i = 0; i < p; ++i) rot_img[i] = image[(i + 1) % p];
                if (img_rot != rot_img) {
                    fail("phi does not commute with the shift", point, p);
                    break;
                }
            }
            if (!report.ok) break;
        }
        if (!report.ok) break;
        if (BigInt(static_cast<long>(images.size())) != trB) {
            fail("phi image does not cover all X_B periodic points", {}, p);
            break;
        }
        // Right side round trip: phi(psi(y)) = y.
        std::vector<Word> b_cycles = closed_paths(static_cast<const EdgeShiftSpace&>(*inst.xb), p);
        for (const Word& y : b_cycles) {
            Word back = psi.apply_cyclic(y);
            Word again = phi.apply_cyclic(back);
            if (again != y) {
                fail("phi(psi(y)) != y", y, p);
                break;
            }
        }
    }
    return report;
}

} // namespace betalab
