#include "betalab/ca_engine.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace betalab {

CellularAutomaton::CellularAutomaton(SlidingBlockCode code, bool check_closure)
    : code_(std::move(code)) {
    const auto& dom = code_.domain();
    const auto& cod = code_.codomain();
    if (dom->name() != cod->name() || dom->alphabet_size() != cod->alphabet_size())
        throw AmbientMismatch("a cellular automaton needs equal domain and codomain");
    if (check_closure && dom->exact_local()) {
        int probe = code_.diameter() + dom->window();
        for (const Word& w : enumerate_admissible_words(*dom, probe)) {
            Word img = code_.apply_word(w);
            if (!dom->admissible(img))
                throw InadmissibleInput("rule is not closed: admissible block maps outside the shift");
        }
    }
}

Configuration CellularAutomaton::apply(const Configuration& x) const {
    if (!configuration_admissible(*ambient(), x))
        throw InadmissibleInput("configuration is not admissible in the ambient shift");
    return code_.apply(x);
}

CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g) {
    return CellularAutomaton(compose(f.code(), g.code()), false);
}

CellularAutomaton power(const CellularAutomaton& f, int q) {
    if (q < 0) throw Error("power expects q >= 0");
    if (q == 0) return identity_ca(f.ambient());
    CellularAutomaton acc = f;
    for (int i = 1; i < q; ++i) acc = compose(f, acc);
    return acc;
}

CellularAutomaton with_shift(const CellularAutomaton& f, int p, int q) {
    if (q <= 0) throw Error("direction denominator must be positive");
    if (std::gcd(std::abs(p), q) != 1) throw Error("direction p/q must be in lowest terms");
    CellularAutomaton fq = power(f, q);
    return CellularAutomaton(compose(shift_code(f.ambient(), p), fq.code()), false);
}

CellularAutomaton shift_ca(ShiftSpacePtr ambient, int p) {
    return CellularAutomaton(shift_code(std::move(ambient), p), false);
}

CellularAutomaton identity_ca(ShiftSpacePtr ambient) {
    return CellularAutomaton(identity_code(std::move(ambient)), false);
}

std::string SpaceTimeDiagram::to_ascii(const ShiftSpace& ambient) const {
    std::ostringstream out;
    bool wide = ambient.alphabet_size() > 10;
    for (const Word& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (wide && i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
    return out.str();
}

SpaceTimeDiagram space_time(const CellularAutomaton& f, const Configuration& x, int steps,
                            long long window_lo, long long window_hi) {
    if (steps < 1) throw Error("steps must be >= 1");
    if (window_lo > window_hi) throw Error("empty window");
    if (!configuration_admissible(*f.ambient(), x))
        throw InadmissibleInput("configuration is not admissible in the ambient shift");
    SpaceTimeDiagram d;
    d.window_lo = window_lo;
    d.window_hi = window_hi;
    Configuration cur = x;
    for (int t = 0; t < steps; ++t) {
        d.rows.push_back(cur.window_word(window_lo, window_hi));
        if (t + 1 < steps) cur = f.code().apply(cur);
    }
    return d;
}

std::string space_time_to_pgm(const SpaceTimeDiagram& d, int alphabet_size) {
    int h = static_cast<int>(d.rows.size());
    int w = h ? static_cast<int>(d.rows[0].size()) : 0;
    std::ostringstream out;
    out << "P5\n" << w << " " << h << "\n255\n";
    for (const Word& row : d.rows)
        for (Symbol s : row) {
            int gray = alphabet_size <= 1 ? 255 : 255 - (255 * s) / (alphabet_size - 1);
            out.put(static_cast<char>(gray));
        }
    return out.str();
}

namespace {

// Enumerate admissible words lambda w rho with |lambda| = ln, |rho| = rn;
// calls visit(full word). Prefix-prunes both sides.
void enumerate_extensions(const ShiftSpace& ambient, const Word& w, int ln, int rn,
                          const std::function<void(const Word&)>& visit) {
    Word lam(ln, 0);
    std::function<void(int)> left_side = [&](int pos) {
        if (pos == ln) {
            Word base = lam;
            base.insert(base.end(), w.begin(), w.end());
            if (!ambient.admissible(base)) return;
            Word full = base;
            std::function<void(int)> rho = [&](int rpos) {
                if (rpos == rn) {
                    visit(full);
                    return;
                }
                for (Symbol s = 0; s < ambient.alphabet_size(); ++s) {
                    full.push_back(s);
                    if (ambient.admissible(full)) rho(rpos + 1);
                    full.pop_back();
                }
            };
            rho(0);
            return;
        }
        for (Symbol s = 0; s < ambient.alphabet_size(); ++s) {
            lam[pos] = s;
            Word pref(lam.begin(), lam.begin() + pos + 1);
            if (ambient.admissible(pref)) left_side(pos + 1);
        }
    };
    left_side(0);
}

} // namespace

BlockingCertificate verify_blocking(const CellularAutomaton& f, const Word& word, int e, int offset,
                                    long long max_steps, long long budget) {
    int r = f.radius();
    if (e < r + 1) throw Error("blocking window needs e >= r + 1");
    if (offset < 0 || offset + e > static_cast<int>(word.size()))
        throw Error("blocking offset must satisfy 0 <= p <= |w| - e");
    if (!f.ambient()->admissible(word)) throw InadmissibleInput("word is not admissible");

    BlockingCertificate cert;
    cert.word = word;
    cert.e = e;
    cert.offset = offset;

    const ShiftSpace& ambient = *f.ambient();
    for (long long n = 1; n <= max_steps; ++n) {
        long long span_lo = offset - n * r;
        long long span_hi = offset + e - 1 + n * r;
        int ln = static_cast<int>(std::max(0LL, -span_lo));
        int rn = static_cast<int>(std::max(0LL, span_hi - (static_cast<long long>(word.size()) - 1)));
        double combos = std::pow(static_cast<double>(ambient.alphabet_size()), ln + rn);
        if (combos > static_cast<double>(budget))
            throw SpanTooLarge("extension span at step " + std::to_string(n) + " needs up to " +
                               std::to_string(static_cast<long long>(combos)) +
                               " words, over the budget of " + std::to_string(budget));
        bool have_first = false;
        Word first_window, first_ext;
        bool refuted = false;
        enumerate_extensions(ambient, word, ln, rn, [&](const Word& full) {
            if (refuted) return;
            // full spans [-ln, |word|-1+rn]; iterate F n times and read
            // positions [offset, offset+e-1].
            Word cur = full;
            long long start = -ln;
            for (long long t = 0; t < n; ++t) {
                cur = f.code().apply_word(cur);
                start = start - f.code().lo();
            }
            Word window(cur.begin() + (offset - start), cur.begin() + (offset - start) + e);
            if (!have_first) {
                have_first = true;
                first_window = window;
                first_ext = full;
                return;
            }
            if (window != first_window) {
                refuted = true;
                BlockingWitness wit;
                wit.step = n;
                wit.span_start = -ln;
                wit.extension_a = first_ext;
                wit.extension_b = full;
                wit.window_a = first_window;
                wit.window_b = window;
                cert.witness = wit;
            }
        });
        if (refuted) {
            cert.status = BlockingStatus::Refuted;
            cert.verified_up_to = n - 1;
            return cert;
        }
        cert.verified_up_to = n;
    }
    cert.status = BlockingStatus::VerifiedUpTo;
    cert.verified_up_to = max_steps;
    return cert;
}

BlockingCandidate blocking_candidate_from_expansion(const BetaShiftDescriptor& desc, int r) {
    if (r < 1) throw Error("radius must be >= 1");
    const DigitStream& stream =
        desc.shift_class == ShiftClass::SFT ? desc.dstar : desc.d_stream;
    long long window = 3LL * r;
    long long scan_limit;
    if (desc.shift_class == ShiftClass::NotSoficUpTo) {
        scan_limit = static_cast<long long>(stream.head.size()) - window - 1;
        if (scan_limit < 0)
            throw NoBranchingFound("expansion prefix shorter than the scan window");
    } else {
        scan_limit = static_cast<long long>(stream.head.size() + stream.cycle.size());
    }
    // Symbols that occur in the scanned stream.
    std::set<long long> present(stream.head.begin(), stream.head.end());
    present.insert(stream.cycle.begin(), stream.cycle.end());

    for (long long t = 0; t <= scan_limit; ++t) {
        long long b = stream.at(static_cast<size_t>(t + window));
        if (b < 1) continue;
        DigitWord u(static_cast<size_t>(window));
        for (long long j = 0; j < window; ++j) u[static_cast<size_t>(j)] = stream.at(static_cast<size_t>(t + j));
        // the largest a < b occurring in the stream with u a admissible
        for (long long a = b - 1; a >= 0; --a) {
            if (!present.count(a)) continue;
            DigitWord ua = u;
            ua.push_back(a);
            if (!is_admissible(desc, ua)) continue;
            BlockingCandidate cand;
            cand.word.reserve(static_cast<size_t>(t + window + 1));
            for (long long j = 0; j <= t + window; ++j)
                cand.word.push_back(static_cast<Symbol>(stream.at(static_cast<size_t>(j))));
            cand.e = r + 1;
            cand.offset = 0;
            cand.u = Word(u.begin(), u.end());
            cand.a = a;
            cand.b = b;
            cand.position = t;
            return cand;
        }
    }
    throw NoBranchingFound("no branching window of length " + std::to_string(window) +
                           " found scanning " + std::to_string(scan_limit + 1) +
                           " stream positions (stream is eventually constant or too short)");
}

namespace {

std::optional<Word> find_periodic_word(const ShiftSpace& ambient, int length, std::mt19937_64& rng) {
    int w = ambient.window();
    int reps = (w + length - 1) / length + 2;
    Word cur;
    std::function<bool()> dfs = [&]() -> bool {
        if (static_cast<int>(cur.size()) == length) {
            Word rep;
            rep.reserve(cur.size() * reps);
            for (int i = 0; i < reps; ++i) rep.insert(rep.end(), cur.begin(), cur.end());
            return ambient.admissible(rep);
        }
        std::vector<Symbol> order(ambient.alphabet_size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (Symbol s : order) {
            cur.push_back(s);
            if (ambient.admissible(cur) && dfs()) return true;
            cur.pop_back();
        }
        return false;
    };
    if (dfs()) return cur;
    return std::nullopt;
}

} // namespace

Configuration random_configuration(const ShiftSpace& ambient, std::mt19937_64& rng) {
    int w = ambient.window();
    std::optional<Word> period;
    for (int len = 1; len <= w + 2 && !period; ++len) period = find_periodic_word(ambient, len, rng);
    if (!period) throw Error("could not find a periodic point in the ambient shift");
    Word u = *period;
    // context is a multiple of |u|, so it ends tiling-aligned with u.back()
    int context = static_cast<int>(u.size()) * ((w / static_cast<int>(u.size())) + 2);
    Word left_context, right_context;
    for (int i = 0; i < context; ++i) {
        left_context.push_back(u[i % u.size()]);
        right_context.push_back(u[i % u.size()]);
    }

    int center_len = 4 + w;
    Word center(center_len, 0);
    std::function<bool(int)> fill = [&](int pos) -> bool {
        if (pos == center_len) {
            Word full = left_context;
            full.insert(full.end(), center.begin(), center.end());
            full.insert(full.end(), right_context.begin(), right_context.end());
            return ambient.admissible(full);
        }
        std::vector<Symbol> order(ambient.alphabet_size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (Symbol s : order) {
            center[pos] = s;
            Word partial = left_context;
            partial.insert(partial.end(), center.begin(), center.begin() + pos + 1);
            if (ambient.admissible(partial) && fill(pos + 1)) return true;
        }
        return false;
    };
    if (!fill(0)) throw Error("could not complete a random admissible center");
    Configuration cfg;
    cfg.left = u;
    cfg.right = u;
    cfg.center = center;
    cfg.center_start = -(center_len / 2);
    return cfg;
}

namespace {

std::optional<Configuration> flip_origin(const ShiftSpace& ambient, const Configuration& x,
                                         std::mt19937_64& rng) {
    long long idx = -x.center_start;
    if (idx < 0 || idx >= static_cast<long long>(x.center.size()))
        throw Error("configuration center does not cover the origin");
    std::vector<Symbol> order(ambient.alphabet_size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (Symbol s : order) {
        if (s == x.center[static_cast<size_t>(idx)]) continue;
        Configuration y = x;
        y.center[static_cast<size_t>(idx)] = s;
        if (configuration_admissible(ambient, y)) return y;
    }
    return std::nullopt;
}

long long difference_radius(const Configuration& x, const Configuration& y, long long scan) {
    long long radius = -1;
    for (long long i = -scan; i <= scan; ++i)
        if (x.at(i) != y.at(i)) radius = std::max(radius, std::llabs(i));
    return radius < 0 ? 0 : radius;
}

} // namespace

ProbeReport sensitivity_probe(const CellularAutomaton& f, int p, int q, int trials, int steps,
                              std::uint64_t seed) {
    if (trials < 1 || steps < 2) throw Error("probe needs trials >= 1 and steps >= 2");
    CellularAutomaton g = with_shift(f, p, q);
    const ShiftSpace& ambient = *f.ambient();

    ProbeReport report;
    report.p = p;
    report.q = q;
    report.trials = trials;
    report.steps = steps;
    report.seed = seed;

    std::mt19937_64 rng(seed);
    int half = steps / 2;
    for (int trial = 0; trial < trials; ++trial) {
        Configuration x;
        std::optional<Configuration> y;
        for (int attempt = 0; attempt < 50 && !y; ++attempt) {
            x = random_configuration(ambient, rng);
            y = flip_origin(ambient, x, rng);
        }
        if (!y) throw Error("no admissible origin flip found after repeated sampling");
        Configuration cx = x, cy = *y;
        long long r_half = 0;
        for (int t = 1; t <= steps; ++t) {
            cx = g.code().apply(cx);
            cy = g.code().apply(cy);
            if (t == half) r_half = difference_radius(cx, cy, static_cast<long long>(g.radius()) * t + 2);
        }
        long long r_full = difference_radius(cx, cy, static_cast<long long>(g.radius()) * steps + 2);
        report.radii.push_back(r_full);
        report.radii_half.push_back(r_half);
    }
    std::sort(report.radii.begin(), report.radii.end());
    std::sort(report.radii_half.begin(), report.radii_half.end());
    report.min_radius = report.radii.front();
    report.max_radius = report.radii.back();
    report.median_radius = report.radii[report.radii.size() / 2];
    report.median_radius_half = report.radii_half[report.radii_half.size() / 2];
    report.growing = report.median_radius > report.median_radius_half;
    report.label = report.median_radius > 0 ? "sensitive-like" : "equicontinuity-like";
    return report;
}

} // namespace betalab
