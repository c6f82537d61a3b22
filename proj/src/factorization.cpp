#include "betalab/factorization.hpp"

#include "betalab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace betalab {

DigitWord scaled_digit_word(long long n, const DigitWord& w) {
    if (n < 1) throw Error("scale factor must be >= 1");
    DigitWord out;
    out.reserve(w.size());
    long long scale = 1;
    for (long long digit : w) {
        if (__builtin_mul_overflow(scale, n, &scale))
            throw Error("scaled digit overflows 64 bits");
        long long v;
        if (__builtin_mul_overflow(scale, digit, &v))
            throw Error("scaled digit overflows 64 bits");
        out.push_back(v);
    }
    return out;
}

ScaleVerdict integer_split_test(long long n, const DigitWord& w, long long horizon) {
    if (n < 2) throw Error("integer_split_test requires n >= 2");
    if (!lex_greater_all_shifts(w))
        throw NotLexMaximal(digits_to_string(w) + " is not lexicographically greater than all its shifts");

    ScaleVerdict verdict;
    verdict.scaled_word = scaled_digit_word(n, w);
    verdict.horizon = horizon;

    EdgeSFT product = product_sft(EdgeSFT(IntMatrix{{big(n)}}), companion_edge_sft(w));
    verdict.zeta_left = zeta_denominator(product);

    if (lex_greater_all_shifts(verdict.scaled_word)) {
        verdict.kind = ScaleKind::Conjugate;
        verdict.zeta_right = zeta_denominator(companion_edge_sft(verdict.scaled_word));
        verdict.detail = "scaled word is lexicographically greater than all its shifts";
        return verdict;
    }

    // beta' = n * beta_from_digits(w), defined by the y = nx substitution;
    // the substituted polynomial is exactly the scaled word's polynomial.
    int d = static_cast<int>(w.size());
    std::vector<BigInt> coeffs(d + 1, BigInt(0));
    coeffs[d] = 1;
    for (int i = 0; i < d; ++i) coeffs[d - 1 - i] = -big(verdict.scaled_word[i]);
    AlgebraicReal beta_scaled = unique_positive_root(IntPolynomial(std::move(coeffs)));

    BetaExpansion exp = expand_one(beta_scaled, horizon);
    verdict.scaled_base_expansion = exp;
    if (exp.is_finite()) {
        verdict.kind = ScaleKind::NotConjugateZetaMismatch;
        verdict.zeta_right = zeta_denominator(companion_edge_sft(exp.head));
        verdict.detail = "S_{n*gamma} is an SFT with a different zeta denominator";
        return verdict;
    }
    if (exp.is_periodic()) {
        verdict.kind = ScaleKind::NotSFTProven;
        verdict.detail = "d(n*gamma) cycled without terminating: sofic but not an SFT";
        return verdict;
    }
    verdict.kind = ScaleKind::NotSFTUpTo;
    verdict.detail = "d(n*gamma) neither terminated nor cycled within the horizon";
    return verdict;
}

namespace {

using Cplx = std::complex<double>;

constexpr double kMatchTol = 1e-6;

// Multiset equality of complex values within tolerance, by backtracking.
bool multiset_match(std::vector<Cplx> a, std::vector<Cplx> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    Cplx x = a.back();
    a.pop_back();
    for (size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b[i] - x) <= kMatchTol) {
            std::vector<Cplx> rest = b;
            rest.erase(rest.begin() + i);
            if (multiset_match(a, rest)) return true;
        }
    }
    return false;
}

std::string cplx_str(const Cplx& z) {
    std::ostringstream out;
    out.precision(6);
    out << z.real();
    if (std::fabs(z.imag()) > 1e-9) out << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
    return out.str();
}

// All partitions of {0..k-1} into `blocks` unordered blocks of equal size.
void enum_partitions(size_t k, size_t blocks, std::vector<std::vector<size_t>>& current,
                     std::vector<bool>& used,
                     const std::function<void(const std::vector<std::vector<size_t>>&)>& emit) {
    size_t first = 0;
    while (first < k && used[first]) ++first;
    if (first == k) {
        emit(current);
        return;
    }
    size_t block_size = k / blocks;
    // The first unused index anchors a new block (kills block-order symmetry).
    std::vector<size_t> chosen{first};
    used[first] = true;
    std::function<void(size_t)> pick = [&](size_t from) {
        if (chosen.size() == block_size) {
            current.push_back(chosen);
            enum_partitions(k, blocks, current, used, emit);
            current.pop_back();
            return;
        }
        for (size_t i = from; i < k; ++i) {
            if (used[i]) continue;
            used[i] = true;
            chosen.push_back(i);
            pick(i + 1);
            chosen.pop_back();
            used[i] = false;
        }
    };
    pick(first + 1);
    used[first] = false;
}

bool is_nonneg_integer(double v, BigInt& out) {
    double r = std::round(v);
    if (r < -0.5) return false;
    if (std::fabs(v - r) > kMatchTol * std::max(1.0, std::fabs(v))) return false;
    if (r > 9e15) return false;
    out = BigInt(static_cast<long>(r));
    return out >= 0;
}

} // namespace

PrimenessReport primeness_obstruction(const EdgeSFT& X, long long max_period) {
    if (max_period < 2) throw Error("max_period must be >= 2");
    if (!X.mixing()) throw NotMixing("input matrix is not primitive");

    PrimenessReport report;
    report.periodic_counts = periodic_counts(X, max_period);
    const std::vector<BigInt>& tr = report.periodic_counts;

    bool any_candidate = false;
    bool any_inconclusive = false;

    auto all_ones = [&](const std::vector<BigInt>& v) {
        for (const auto& x : v)
            if (x != 1) return false;
        return true;
    };

    auto finish_attempt = [&](SplitAttempt a) {
        if (a.outcome == SplitOutcome::Candidate) any_candidate = true;
        if (a.outcome == SplitOutcome::Inconclusive) any_inconclusive = true;
        report.attempted_splits.push_back(std::move(a));
    };

    // Integer scalar factors M = {m}: the scale is pinned by exact trace
    // divisibility, no numerics involved. m ranges over solutions of
    // m^{p0} | tr(A^{p0}) at the first period with positive trace.
    long long p0 = 0;
    for (long long p = 1; p <= max_period; ++p) {
        if (tr[p - 1] > 0) {
            p0 = p;
            break;
        }
    }
    if (p0 == 0) {
        SplitAttempt a;
        a.description = "integer scalar factors";
        a.outcome = SplitOutcome::Inconclusive;
        a.reason = "no positive trace up to max_period; scalar factors not enumerable";
        finish_attempt(std::move(a));
    } else {
        std::vector<long long> ms;
        for (long long m = 1;; ++m) {
            BigInt mp(1);
            for (long long i = 0; i < p0; ++i) mp *= big(m);
            if (mp > tr[p0 - 1]) break;
            if (tr[p0 - 1] % mp == 0) ms.push_back(m);
        }
        for (long long m : ms) {
            SplitAttempt a;
            a.description = "M = {" + std::to_string(m) + "}";
            bool refuted = false;
            for (long long p = 1; p <= max_period && !refuted; ++p) {
                BigInt mp(1);
                for (long long i = 0; i < p; ++i) mp *= big(m);
                a.f_powersums.push_back(mp);
                if (tr[p - 1] % mp != 0) {
                    a.outcome = SplitOutcome::Refuted;
                    a.reason = mp.get_str() + " does not divide tr(A^" + std::to_string(p) +
                               ") = " + tr[p - 1].get_str();
                    refuted = true;
                    break;
                }
                a.g_powersums.push_back(tr[p - 1] / mp);
            }
            if (!refuted) {
                if (all_ones(a.f_powersums)) {
                    a.outcome = SplitOutcome::Refuted;
                    a.reason = "factor with one periodic point per period: a mixing SFT with "
                               "dense periodic points would be a single point";
                } else if (all_ones(a.g_powersums)) {
                    a.outcome = SplitOutcome::Refuted;
                    a.reason = "cofactor with one periodic point per period: a mixing SFT with "
                               "dense periodic points would be a single point";
                } else {
                    a.outcome = SplitOutcome::Candidate;
                    a.reason = "all periodic-point counts split into nonnegative integers";
                }
            }
            finish_attempt(std::move(a));
        }
    }

    // Proportional-block partitions of the numeric non-zero spectrum:
    // a factorization spectrum(A) = M * N partitions the spectrum into |M|
    // blocks mu_i * N, pairwise proportional. Candidates surviving the shape
    // test still must pass the exact integer constraints.
    std::vector<Cplx> spec = nonzero_spectrum(X);
    size_t k = spec.size();
    for (size_t k1 = 2; k1 * k1 <= k; ++k1) {
        if (k % k1 != 0) continue;
        size_t k2 = k / k1;
        std::vector<std::vector<size_t>> current;
        std::vector<bool> used(k, false);
        enum_partitions(k, k1, current, used, [&](const std::vector<std::vector<size_t>>& part) {
            // Anchor block: the one containing index 0 (enum order guarantees
            // part[0] contains the globally first index).
            std::vector<Cplx> base;
            for (size_t idx : part[0]) base.push_back(spec[idx]);
            // Anchor element: max modulus in base.
            Cplx anchor = base[0];
            for (const Cplx& z : base)
                if (std::abs(z) > std::abs(anchor)) anchor = z;
            if (std::abs(anchor) < 1e-12) return;
            // Determine ratios r_i with block_i ~ r_i * base.
            std::vector<Cplx> ratios{Cplx(1, 0)};
            bool shape_ok = true;
            for (size_t bi = 1; bi < part.size() && shape_ok; ++bi) {
                std::vector<Cplx> blk;
                for (size_t idx : part[bi]) blk.push_back(spec[idx]);
                bool found = false;
                for (const Cplx& e : blk) {
                    Cplx r = e / anchor;
                    std::vector<Cplx> scaled;
                    for (const Cplx& z : base) scaled.push_back(r * z);
                    if (multiset_match(scaled, blk)) {
                        ratios.push_back(r);
                        found = true;
                        break;
                    }
                }
                if (!found) shape_ok = false;
            }
            if (!shape_ok) return;

            std::ostringstream desc;
            desc << "partition into " << k1 << " proportional blocks of " << k2 << ": ";
            for (size_t bi = 0; bi < part.size(); ++bi) {
                desc << "{";
                for (size_t j = 0; j < part[bi].size(); ++j)
                    desc << (j ? "," : "") << cplx_str(spec[part[bi][j]]);
                desc << "}";
            }

            Cplx ratio_sum(0, 0);
            for (const Cplx& r : ratios) ratio_sum += r;
            if (std::abs(ratio_sum) < 1e-9) {
                SplitAttempt a;
                a.description = desc.str();
                a.outcome = SplitOutcome::Inconclusive;
                a.reason = "ratio sum vanishes; integer scale not pinned by p = 1";
                finish_attempt(std::move(a));
                return;
            }
            if (tr[0] <= 0) {
                SplitAttempt a;
                a.description = desc.str();
                a.outcome = SplitOutcome::Inconclusive;
                a.reason = "tr(A) = 0; block scale not pinned by p = 1";
                finish_attempt(std::move(a));
                return;
            }
            // f(1) * g(1) = tr(A): try each divisor pair as the scale anchor.
            for (BigInt a1(1); a1 <= tr[0]; a1 += 1) {
                if (tr[0] % a1 != 0) continue;
                SplitAttempt a;
                a.description = desc.str() + " with f(1) = " + a1.get_str();
                bool ok = true;
                std::string why;
                std::vector<BigInt> fs, gs;
                double a1d = a1.get_d();
                for (long long p = 1; p <= max_period && ok; ++p) {
                    Cplx rp(0, 0);
                    for (const Cplx& r : ratios) rp += std::pow(r, static_cast<double>(p));
                    // f(p) = mu_1^p sum r_i^p with mu_1 = f(1) / sum r_i.
                    Cplx mu1p = std::pow(a1d / ratio_sum, static_cast<double>(p));
                    Cplx fp = mu1p * rp;
                    if (std::fabs(fp.imag()) > kMatchTol * std::max(1.0, std::abs(fp))) {
                        ok = false;
                        why = "f(" + std::to_string(p) + ") is not real";
                        break;
                    }
                    BigInt fint;
                    if (!is_nonneg_integer(fp.real(), fint)) {
                        ok = false;
                        why = "f(" + std::to_string(p) + ") = " + std::to_string(fp.real()) +
                              " is not a nonnegative integer";
                        break;
                    }
                    fs.push_back(fint);
                    if (fint == 0) {
                        if (tr[p - 1] != 0) {
                            ok = false;
                            why = "f(" + std::to_string(p) + ") = 0 but tr(A^" + std::to_string(p) +
                                  ") != 0";
                            break;
                        }
                        gs.push_back(BigInt(0));
                        continue;
                    }
                    if (tr[p - 1] % fint != 0) {
                        ok = false;
                        why = fint.get_str() + " does not divide tr(A^" + std::to_string(p) +
                              ") = " + tr[p - 1].get_str();
                        break;
                    }
                    gs.push_back(tr[p - 1] / fint);
                    if (gs.back() < 0) {
                        ok = false;
                        why = "g(" + std::to_string(p) + ") negative";
                        break;
                    }
                }
                a.f_powersums = fs;
                a.g_powersums = gs;
                if (!ok) {
                    a.outcome = SplitOutcome::Refuted;
                    a.reason = why;
                } else if (all_ones(fs) || all_ones(gs)) {
                    a.outcome = SplitOutcome::Refuted;
                    a.reason = "trivial one-point factor";
                } else {
                    a.outcome = SplitOutcome::Candidate;
                    a.reason = "proportional blocks with integral periodic-point split";
                }
                finish_attempt(std::move(a));
            }
        });
    }

    report.verdict = any_candidate ? PrimenessVerdict::CandidateSplit
                     : any_inconclusive ? PrimenessVerdict::Inconclusive
                                        : PrimenessVerdict::NoSplitFound;
    return report;
}

} // namespace betalab
