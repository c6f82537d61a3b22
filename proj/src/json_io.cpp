#include "betalab/json_io.hpp"

#include "betalab/errors.hpp"

#include <sstream>

namespace betalab {

namespace {

long long to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw Error("integer too large for JSON output: " + v.get_str());
    return v.get_si();
}

Json digits_json(const DigitWord& w) {
    Json out = Json::array();
    for (long long d : w) out.push_back(d);
    return out;
}

Json word_json(const Word& w) {
    Json out = Json::array();
    for (Symbol s : w) out.push_back(s);
    return out;
}

DigitWord digits_from_json(const Json& j) {
    DigitWord out;
    for (const auto& v : j) out.push_back(v.get<long long>());
    return out;
}

} // namespace

Json poly_to_json(const IntPolynomial& p, const std::string& var) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_int64(c));
    return Json{{"coefficients", coeffs}, {"pretty", p.to_string(var)}};
}

Json expansion_to_json(const BetaExpansion& e) {
    Json tail;
    if (e.is_finite()) {
        tail = Json{{"kind", "finite"}};
    } else if (e.is_periodic()) {
        tail = Json{{"kind", "periodic"}, {"period", digits_json(std::get<PeriodicTail>(e.tail).period)}};
    } else {
        tail = Json{{"kind", "unknown"}, {"horizon", std::get<UnknownTail>(e.tail).horizon}};
    }
    return Json{{"digits", digits_json(e.head)}, {"tail", tail}};
}

Json descriptor_to_json(const BetaShiftDescriptor& d) {
    Json out = expansion_to_json(d.expansion);
    out["class"] = d.class_name();
    out["exact"] = d.exact;
    if (d.shift_class == ShiftClass::NotSoficUpTo) out["horizon"] = d.horizon;
    out["dstar_head"] = digits_json(d.dstar.head);
    out["dstar_cycle"] = digits_json(d.dstar.cycle);
    if (d.beta) {
        out["beta"] = Json{{"defining", poly_to_json(d.beta->defining(), "x")},
                           {"approx", d.beta->approx()}};
    } else if (d.beta_approx) {
        out["beta"] = Json{{"approx", *d.beta_approx}};
    }
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_int64(e));
        rows.push_back(r);
    }
    return rows;
}

Json zeta_to_json(const ZetaDenominator& z) { return poly_to_json(z.poly, "t"); }

Json scale_verdict_to_json(const ScaleVerdict& v) {
    Json out;
    switch (v.kind) {
        case ScaleKind::Conjugate: out["kind"] = "conjugate"; break;
        case ScaleKind::NotConjugateZetaMismatch: out["kind"] = "zeta-mismatch"; break;
        case ScaleKind::NotSFTProven: out["kind"] = "not-sft"; break;
        case ScaleKind::NotSFTUpTo: out["kind"] = "not-sft-up-to"; break;
    }
    out["scaled_word"] = digits_json(v.scaled_word);
    out["detail"] = v.detail;
    out["horizon"] = v.horizon;
    if (v.zeta_left) out["zeta_product"] = zeta_to_json(*v.zeta_left);
    if (v.zeta_right) out["zeta_scaled"] = zeta_to_json(*v.zeta_right);
    if (v.scaled_base_expansion) out["scaled_base_expansion"] = expansion_to_json(*v.scaled_base_expansion);
    return out;
}

Json primeness_to_json(const PrimenessReport& r) {
    Json out;
    switch (r.verdict) {
        case PrimenessVerdict::NoSplitFound: out["verdict"] = "no-split-found"; break;
        case PrimenessVerdict::CandidateSplit: out["verdict"] = "candidate-split"; break;
        case PrimenessVerdict::Inconclusive: out["verdict"] = "inconclusive"; break;
    }
    Json counts = Json::array();
    for (size_t p = 0; p < r.periodic_counts.size(); ++p)
        counts.push_back(Json{{"p", p + 1}, {"count", to_int64(r.periodic_counts[p])}});
    out["periodic_counts"] = counts;
    Json attempts = Json::array();
    for (const auto& a : r.attempted_splits) {
        Json aj;
        aj["description"] = a.description;
        aj["outcome"] = a.outcome == SplitOutcome::Refuted ? "refuted"
                        : a.outcome == SplitOutcome::Candidate ? "candidate"
                                                               : "inconclusive";
        aj["reason"] = a.reason;
        Json fs = Json::array(), gs = Json::array();
        for (const auto& v : a.f_powersums) fs.push_back(to_int64(v));
        for (const auto& v : a.g_powersums) gs.push_back(to_int64(v));
        aj["f_powersums"] = fs;
        aj["g_powersums"] = gs;
        attempts.push_back(aj);
    }
    out["attempted_splits"] = attempts;
    return out;
}

Json conjugacy_report_to_json(const ConjugacyReport& r) {
    Json out;
    out["n"] = r.n;
    out["digits"] = digits_json(r.w);
    out["scaled_word"] = digits_json(r.scaled);
    out["verified"] = r.ok;
    Json census = Json::array();
    for (const auto& row : r.census)
        census.push_back(Json{{"p", row.period},
                              {"left", to_int64(row.left)},
                              {"right", to_int64(row.right)}});
    out["census"] = census;
    if (!r.ok) {
        out["failure"] = r.failure;
        out["witness"] = word_json(r.witness);
        out["witness_period"] = r.witness_period;
    }
    return out;
}

Json rule_table_to_json(const SlidingBlockCode& code) {
    Json out;
    out["lo"] = code.lo();
    out["hi"] = code.hi();
    out["domain"] = code.domain()->name();
    out["codomain"] = code.codomain()->name();
    Json table = Json::array();
    for (const auto& [block, sym] : code.rule()) {
        Json names = Json::array();
        for (Symbol s : block) names.push_back(code.domain()->symbol_name(s));
        table.push_back(Json{{"block", word_json(block)},
                             {"block_labels", names},
                             {"out", sym},
                             {"out_label", code.codomain()->symbol_name(sym)}});
    }
    out["table"] = table;
    return out;
}

Json blocking_certificate_to_json(const BlockingCertificate& c, const ShiftSpace& ambient) {
    (void)ambient;
    Json out;
    out["word"] = word_json(c.word);
    out["e"] = c.e;
    out["p"] = c.offset;
    out["verified_up_to"] = c.verified_up_to;
    out["status"] = c.status == BlockingStatus::VerifiedUpTo ? "verified-up-to" : "refuted";
    if (c.witness) {
        out["witness"] = Json{{"step", c.witness->step},
                              {"span_start", c.witness->span_start},
                              {"extension_a", word_json(c.witness->extension_a)},
                              {"extension_b", word_json(c.witness->extension_b)},
                              {"window_a", word_json(c.witness->window_a)},
                              {"window_b", word_json(c.witness->window_b)}};
    }
    return out;
}

Json blocking_candidate_to_json(const BlockingCandidate& c) {
    return Json{{"word", word_json(c.word)}, {"e", c.e},     {"p", c.offset},
                {"u", word_json(c.u)},       {"a", c.a},     {"b", c.b},
                {"position", c.position}};
}

Json probe_to_json(const ProbeReport& r) {
    Json radii = Json::array(), radii_half = Json::array();
    for (long long v : r.radii) radii.push_back(v);
    for (long long v : r.radii_half) radii_half.push_back(v);
    return Json{{"direction", Json{{"p", r.p}, {"q", r.q}}},
                {"trials", r.trials},
                {"steps", r.steps},
                {"seed", r.seed},
                {"radius", Json{{"min", r.min_radius}, {"median", r.median_radius}, {"max", r.max_radius}}},
                {"median_radius_half", r.median_radius_half},
                {"growing", r.growing},
                {"label", r.label},
                {"radii", radii},
                {"radii_half", radii_half}};
}

Json space_time_to_json(const SpaceTimeDiagram& d) {
    Json rows = Json::array();
    for (const Word& row : d.rows) rows.push_back(word_json(row));
    return Json{{"window", Json{{"lo", d.window_lo}, {"hi", d.window_hi}}}, {"rows", rows}};
}

Json configuration_to_json(const Configuration& x) {
    return Json{{"left_period", word_json(x.left)},
                {"center", word_json(x.center)},
                {"right_period", word_json(x.right)},
                {"center_start", x.center_start},
                {"pretty", x.to_string()}};
}

IntMatrix parse_matrix(const std::string& text) {
    std::string trimmed = text;
    size_t first = trimmed.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error("empty matrix");
    IntMatrix m;
    if (trimmed[first] == '[') {
        Json j = Json::parse(trimmed);
        for (const auto& row : j) {
            std::vector<BigInt> r;
            for (const auto& e : row) r.emplace_back(e.get<long>());
            m.push_back(std::move(r));
        }
        return m;
    }
    std::istringstream in(trimmed);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream lin(line);
        std::vector<BigInt> row;
        long long v;
        while (lin >> v) row.emplace_back(v);
        if (!row.empty()) m.push_back(std::move(row));
    }
    return m;
}

ShiftSpacePtr ambient_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "full") return std::make_shared<FullShift>(j.at("n").get<int>());
    if (kind == "beta-sft")
        return std::make_shared<BetaShiftSpace>(descriptor_from_digits(digits_from_json(j.at("digits"))));
    if (kind == "beta-sofic")
        return std::make_shared<BetaShiftSpace>(descriptor_from_eventually_periodic(
            digits_from_json(j.at("head")), digits_from_json(j.at("cycle"))));
    if (kind == "beta-poly") {
        long long horizon = j.value("horizon", 10000LL);
        AlgebraicReal beta = unique_positive_root(parse_polynomial(j.at("poly").get<std::string>()));
        return std::make_shared<BetaShiftSpace>(classify(beta, horizon));
    }
    if (kind == "beta-approx") {
        long long horizon = j.value("horizon", 10000LL);
        return std::make_shared<BetaShiftSpace>(classify_approx(j.at("beta").get<double>(), horizon));
    }
    if (kind == "product") {
        const Json& f = j.at("factors");
        if (f.size() != 2) throw Error("product ambient needs exactly two factors");
        return std::make_shared<ProductShift>(ambient_from_json(f[0]), ambient_from_json(f[1]));
    }
    throw Error("unknown ambient kind: " + kind);
}

Json ambient_to_json(const ShiftSpace& ambient) {
    if (auto full = dynamic_cast<const FullShift*>(&ambient))
        return Json{{"kind", "full"}, {"n", full->alphabet_size()}};
    if (auto beta = dynamic_cast<const BetaShiftSpace*>(&ambient)) {
        const auto& d = beta->descriptor();
        if (d.shift_class == ShiftClass::SFT && d.horizon == 0)
            return Json{{"kind", "beta-sft"}, {"digits", digits_json(d.expansion.head)}};
        if (d.shift_class == ShiftClass::Sofic)
            return Json{{"kind", "beta-sofic"},
                        {"head", digits_json(d.expansion.head)},
                        {"cycle", digits_json(d.dstar.cycle)}};
        return Json{{"kind", "beta-descriptor"}, {"descriptor", descriptor_to_json(d)}};
    }
    if (auto prod = dynamic_cast<const ProductShift*>(&ambient))
        return Json{{"kind", "product"},
                    {"factors", Json::array({ambient_to_json(*prod->first()), ambient_to_json(*prod->second())})}};
    return Json{{"kind", "named"}, {"name", ambient.name()}};
}

CellularAutomaton rule_from_json(const Json& j) {
    ShiftSpacePtr ambient = ambient_from_json(j.at("ambient"));
    if (j.contains("builtin")) {
        std::string b = j.at("builtin").get<std::string>();
        if (b == "identity") return identity_ca(ambient);
        if (b == "shift") return shift_ca(ambient, 1);
        if (b == "inverse-shift") return shift_ca(ambient, -1);
        if (b == "product-shift") {
            auto prod = std::dynamic_pointer_cast<const ProductShift>(ambient);
            if (!prod) throw Error("product-shift needs a product ambient");
            // F(x, y) = (sigma(x), sigma^-1(y)) on the paired alphabet.
            return CellularAutomaton(SlidingBlockCode::from_function(
                ambient, ambient, -1, 1, [&prod](const Word& block) {
                    Symbol fwd = prod->first_of(block[2]);
                    Symbol bwd = prod->second_of(block[0]);
                    return prod->pair(fwd, bwd);
                }));
        }
        throw Error("unknown builtin rule: " + b);
    }
    int lo = j.at("lo").get<int>();
    int hi = j.at("hi").get<int>();
    std::map<Word, Symbol> rule;
    for (const auto& entry : j.at("table")) {
        Word block;
        for (const auto& s : entry.at("block")) block.push_back(s.get<Symbol>());
        rule[block] = entry.at("out").get<Symbol>();
    }
    return CellularAutomaton(SlidingBlockCode(ambient, ambient, lo, hi, std::move(rule)));
}

Configuration parse_configuration(const std::string& text, const ShiftSpace& ambient) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() < 2) throw Error("configuration needs 'U^inf [C1].[C2] V^inf'");
    auto strip_inf = [](const std::string& s) -> std::string {
        size_t pos = s.rfind("^inf");
        if (pos == std::string::npos || pos + 4 != s.size())
            throw Error("period token must end with ^inf: " + s);
        return s.substr(0, pos);
    };
    auto to_word = [](const std::string& s) {
        Word out;
        if (s.empty()) return out;
        std::istringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(std::stoi(part));
        return out;
    };
    Word left = to_word(strip_inf(tokens.front()));
    Word right = to_word(strip_inf(tokens.back()));
    if (left.empty() || right.empty()) throw Error("periods must be nonempty");
    // middle tokens joined; exactly one dot splits pre-origin / post-origin
    std::string middle;
    for (size_t i = 1; i + 1 < tokens.size(); ++i) middle += tokens[i];
    size_t dot = middle.find('.');
    if (dot == std::string::npos) throw Error("configuration needs a '.' marking position 0");
    if (middle.find('.', dot + 1) != std::string::npos) throw Error("multiple '.' in configuration");
    Word before = to_word(middle.substr(0, dot));
    Word after = to_word(middle.substr(dot + 1));
    Configuration cfg;
    cfg.left = left;
    cfg.right = right;
    cfg.center = before;
    cfg.center.insert(cfg.center.end(), after.begin(), after.end());
    cfg.center_start = -static_cast<long long>(before.size());
    if (cfg.center.empty()) {
        // keep an explicit center symbol so the origin stays addressable
        cfg.center.push_back(right[0]);
        cfg.center_start = 0;
        std::rotate(cfg.right.begin(), cfg.right.begin() + 1, cfg.right.end());
    }
    if (!configuration_admissible(ambient, cfg))
        throw InadmissibleInput("configuration is not admissible in the ambient shift");
    return cfg;
}

} // namespace betalab
