#include "epsring/io.hpp"

#include <sstream>

#include "epsring/suites.hpp"

namespace epsring {

namespace {

Json group_to_json(const GradingGroup& g) {
    Json j;
    if (!g.is_finite()) {
        j["type"] = "integers";
        return j;
    }
    j["type"] = "table";
    Json labels = Json::array();
    for (const auto& e : g.elements()) labels.push_back(g.label(e));
    j["labels"] = labels;
    Json table = Json::array();
    for (const auto& a : g.elements()) {
        Json row = Json::array();
        for (const auto& b : g.elements())
            row.push_back(g.mul(a, b).convert_to<std::int64_t>());
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

GradingGroup group_from_json(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "integers") return GradingGroup::integers();
    if (type == "cyclic") return GradingGroup::cyclic(j.at("n").get<int>());
    if (type == "product") {
        const Json& factors = j.at("factors");
        if (!factors.is_array() || factors.size() < 2)
            throw ParseError("group product needs at least two factors");
        GradingGroup acc = group_from_json(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = GradingGroup::direct_product(acc, group_from_json(factors[i]));
        return acc;
    }
    if (type == "table") {
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
        return GradingGroup::from_table(std::move(labels), std::move(table));
    }
    throw ParseError("unknown group type '" + type + "'");
}

FieldSpec field_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "q") return FieldSpec::rationals();
    if (kind == "gf") return FieldSpec::gf(j.at("p").get<std::int64_t>());
    throw ParseError("unknown field kind '" + kind + "'");
}

Json field_to_json(const FieldSpec& f) {
    Json j;
    if (f.is_rationals()) {
        j["kind"] = "q";
    } else {
        j["kind"] = "gf";
        j["p"] = f.characteristic();
    }
    return j;
}

StructureAlgebra algebra_from_json(const Json& j, const FieldSpec& field) {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    Vec unit = scalar_vec_from_json(field, j.at("unit"), dim);
    std::vector<Vec> table(dim * dim, zero_vec(field, dim));
    std::size_t entry = 0;
    for (const auto& item : j.at("structure")) {
        if (!item.is_array() || item.size() != 3)
            throw ParseError("structure entry " + std::to_string(entry) +
                             " must be [i, j, coords]");
        std::size_t i = item[0].get<std::size_t>();
        std::size_t jj = item[1].get<std::size_t>();
        if (i >= dim || jj >= dim)
            throw ParseError("structure entry " + std::to_string(entry) + " index out of range");
        table[i * dim + jj] = scalar_vec_from_json(field, item[2], dim);
        ++entry;
    }
    return StructureAlgebra(field, dim, std::move(table), std::move(unit));
}

Json algebra_to_json_fields(const StructureAlgebra& alg) {
    Json j;
    j["dim"] = alg.dim();
    j["unit"] = scalar_vec_to_json(alg.unit());
    Json structure = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            const Vec& prod = alg.basis_product(i, k);
            if (is_zero_vec(prod)) continue;
            structure.push_back(Json::array({i, k, scalar_vec_to_json(prod)}));
        }
    j["structure"] = structure;
    return j;
}

GroupElt parse_degree(const GradingGroup& group, const std::string& label,
                      const std::string& where) {
    auto g = group.parse_label(label);
    if (!g) throw ParseError("unknown group element '" + label + "' in " + where);
    return *g;
}

}  // namespace

Json scalar_vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(s.str());
    return arr;
}

Vec scalar_vec_from_json(const FieldSpec& spec, const Json& j, std::size_t expect) {
    if (!j.is_array() || j.size() != expect)
        throw ParseError("coordinate vector must have length " + std::to_string(expect));
    Vec out;
    out.reserve(expect);
    for (const auto& item : j) out.push_back(Scalar::parse(spec, item.get<std::string>()));
    return out;
}

GradedRing parse_ring(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    try {
        FieldSpec field = field_from_json(j.at("field"));
        GradingGroup group = group_from_json(j.at("group"));
        StructureAlgebra alg = algebra_from_json(j, field);
        std::vector<std::string> degree_labels =
            j.at("degrees").get<std::vector<std::string>>();
        if (degree_labels.size() != alg.dim())
            throw ParseError("degrees list length differs from dim");
        std::vector<GroupElt> degrees;
        for (std::size_t i = 0; i < degree_labels.size(); ++i)
            degrees.push_back(parse_degree(group, degree_labels[i],
                                           "degrees[" + std::to_string(i) + "]"));
        GradedRing ring(std::move(alg), std::move(group), std::move(degrees));
        auto alg_issue = ring.algebra().validate();
        if (!alg_issue.ok())
            throw ValidationError("algebra invalid (" + alg_issue.code + "): " + alg_issue.detail);
        auto grading_issue = ring.validate_grading();
        if (!grading_issue.ok())
            throw ValidationError("grading invalid (" + grading_issue.code + "): " +
                                  grading_issue.detail);
        return ring;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("missing or mistyped field: ") + e.what());
    }
}

Json ring_to_json(const GradedRing& s) {
    Json j;
    j["field"] = field_to_json(s.algebra().field());
    j["group"] = group_to_json(s.group());
    Json alg = algebra_to_json_fields(s.algebra());
    j["dim"] = alg["dim"];
    j["unit"] = alg["unit"];
    j["structure"] = alg["structure"];
    Json degrees = Json::array();
    for (const auto& d : s.degrees()) degrees.push_back(s.group().label(d));
    j["degrees"] = degrees;
    return j;
}

TwistedPartialAction parse_action(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    try {
        FieldSpec field = field_from_json(j.at("field"));
        GradingGroup group = group_from_json(j.at("group"));
        StructureAlgebra base = algebra_from_json(j, field);
        auto issue = base.validate();
        if (!issue.ok())
            throw ValidationError("base algebra invalid (" + issue.code + "): " + issue.detail);
        const std::size_t n = base.dim();
        TwistedPartialAction a{std::move(base), std::move(group), {}, {}, {}, {}};
        for (const auto& lbl : j.at("support").get<std::vector<std::string>>())
            a.support.push_back(parse_degree(a.group, lbl, "support"));
        for (const auto& [lbl, coords] : j.at("idempotents").items())
            a.idempotent[parse_degree(a.group, lbl, "idempotents")] =
                scalar_vec_from_json(a.base.field(), coords, n);
        for (const auto& [lbl, rows] : j.at("alpha").items()) {
            if (!rows.is_array() || rows.size() != n)
                throw ParseError("alpha matrix for '" + lbl + "' must be " + std::to_string(n) +
                                 " rows");
            Matrix m(a.base.field(), n, n);
            for (std::size_t r = 0; r < n; ++r) {
                Vec row = scalar_vec_from_json(a.base.field(), rows[r], n);
                for (std::size_t c = 0; c < n; ++c) m.at(r, c) = row[c];
            }
            a.alpha[parse_degree(a.group, lbl, "alpha")] = std::move(m);
        }
        for (const auto& item : j.at("twist")) {
            if (!item.is_array() || item.size() != 3)
                throw ParseError("twist entries must be [g, h, coords]");
            GroupElt g = parse_degree(a.group, item[0].get<std::string>(), "twist");
            GroupElt h = parse_degree(a.group, item[1].get<std::string>(), "twist");
            a.twist[{g, h}] = scalar_vec_from_json(a.base.field(), item[2], n);
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("missing or mistyped field: ") + e.what());
    }
}

Json action_to_json(const TwistedPartialAction& a) {
    Json j;
    j["field"] = field_to_json(a.base.field());
    j["group"] = group_to_json(a.group);
    Json alg = algebra_to_json_fields(a.base);
    j["dim"] = alg["dim"];
    j["unit"] = alg["unit"];
    j["structure"] = alg["structure"];
    Json support = Json::array();
    for (const auto& g : a.support) support.push_back(a.group.label(g));
    j["support"] = support;
    Json idem;
    for (const auto& [g, v] : a.idempotent) idem[a.group.label(g)] = scalar_vec_to_json(v);
    j["idempotents"] = idem;
    Json alpha;
    for (const auto& [g, m] : a.alpha) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalar_vec_to_json(m.row(r)));
        alpha[a.group.label(g)] = rows;
    }
    j["alpha"] = alpha;
    Json twist = Json::array();
    for (const auto& [gh, w] : a.twist)
        twist.push_back(Json::array(
            {a.group.label(gh.first), a.group.label(gh.second), scalar_vec_to_json(w)}));
    j["twist"] = twist;
    return j;
}

namespace {

Json epsilon_to_json(const GradedRing& s, const EpsilonData& eps) {
    Json out;
    for (const auto& [g, e] : eps.epsilon) out[s.group().label(g)] = scalar_vec_to_json(e);
    return out;
}

Json support_labels(const GradedRing& s) {
    Json arr = Json::array();
    for (const auto& g : s.support()) arr.push_back(s.group().label(g));
    return arr;
}

}  // namespace

Report validate_ring_report(const GradedRing& s) {
    // parse_ring already rejects invalid rings; re-run for an explicit report
    Report rep;
    rep.doc["kind"] = "validate";
    auto alg_issue = s.algebra().validate();
    auto grading_issue = s.validate_grading();
    rep.doc["algebra_ok"] = alg_issue.ok();
    if (!alg_issue.ok()) {
        rep.doc["algebra_issue"] = {{"code", alg_issue.code}, {"detail", alg_issue.detail}};
    }
    rep.doc["grading_ok"] = grading_issue.ok();
    if (!grading_issue.ok()) {
        rep.doc["grading_issue"] = {{"code", grading_issue.code},
                                    {"detail", grading_issue.detail}};
    }
    rep.doc["dim"] = s.algebra().dim();
    rep.doc["support"] = support_labels(s);
    rep.status = (alg_issue.ok() && grading_issue.ok()) ? 0 : 3;
    return rep;
}

Report classify_report(const GradedRing& s) {
    Report rep;
    rep.doc["kind"] = "classify";
    rep.doc["dim"] = s.algebra().dim();
    rep.doc["support"] = support_labels(s);
    auto cls = classify(s);
    rep.doc["is_strong"] = cls.is_strong;
    rep.doc["is_symmetric"] = cls.is_symmetric;
    rep.doc["is_epsilon_strong"] = cls.is_epsilon_strong;
    rep.doc["characterizations"] = {{"i", cls.char_i},
                                    {"ii", cls.char_ii},
                                    {"iii", cls.char_iii},
                                    {"iv", cls.char_iv}};
    rep.doc["char_ii_failure_mode"] = cls.char_ii_failure_mode;
    Json wit;
    for (const auto& [k, v] : cls.witnesses) wit[k] = v;
    rep.doc["witnesses"] = wit;
    auto eps_result = try_compute_epsilon(s);
    if (auto* fail = std::get_if<EpsilonFailure>(&eps_result)) {
        rep.doc["epsilon_failure"] = {{"degree", s.group().label(fail->degree)},
                                      {"reason", fail->reason}};
        rep.status = 4;
    } else {
        rep.doc["epsilon"] = epsilon_to_json(s, std::get<EpsilonData>(eps_result));
        rep.status = 0;
    }
    return rep;
}

Report separability_report(const GradedRing& s) {
    Report rep;
    rep.doc["kind"] = "separability";
    rep.doc["dim"] = s.algebra().dim();
    auto eps_result = try_compute_epsilon(s);
    TensorOverBase tensor(s.algebra(), s.principal_subspace());
    auto oracle = oracle_separability(s.algebra(), s.principal_subspace(), &tensor);
    rep.doc["oracle"] = {{"separable", oracle.separable}};
    if (auto* fail = std::get_if<EpsilonFailure>(&eps_result)) {
        rep.doc["epsilon_strong"] = false;
        rep.doc["epsilon_failure"] = {{"degree", s.group().label(fail->degree)},
                                      {"reason", fail->reason}};
        rep.status = 4;
        return rep;
    }
    rep.doc["epsilon_strong"] = true;
    const EpsilonData& eps = std::get<EpsilonData>(eps_result);

    auto outcome = decide_separability(s, eps, &tensor);
    bool decided = std::holds_alternative<SeparabilityCertificate>(outcome);
    Json decision;
    decision["separable"] = decided;
    if (decided) {
        const auto& cert = std::get<SeparabilityCertificate>(outcome);
        decision["witness_c"] = scalar_vec_to_json(cert.witness_c);
        decision["certificate"] = {{"checked", cert.checked},
                                   {"m_of_x_is_one", cert.m_of_x_is_one},
                                   {"x_central", cert.x_central},
                                   {"pairs", cert.element_pairs.size()}};
    } else {
        decision["infeasibility_functional"] =
            scalar_vec_to_json(std::get<NotSeparable>(outcome).infeasibility_functional);
    }
    rep.doc["decision"] = decision;

    auto tone = trace_of_one_invertible(s, eps);
    Json tj;
    tj["value"] = scalar_vec_to_json(tone.trace_of_one);
    tj["invertible"] = tone.invertible;
    if (tone.implies_separable_checked)
        tj["implies_separable_checked"] = *tone.implies_separable_checked;
    rep.doc["trace_of_one"] = tj;

    FrobeniusSystem fs = frobenius_system(s, eps);
    rep.doc["frobenius"] = {{"finite_group", fs.finite_group},
                            {"identities_verified", fs.identities_verified},
                            {"pairs", fs.pairs.size()}};
    bool channels_agree = (oracle.separable == decided);
    if (fs.identities_verified) {
        bool kad = kadison_separable(s, fs);
        rep.doc["kadison"] = {{"available", true}, {"separable", kad}};
        channels_agree = channels_agree && (kad == decided);
    } else {
        rep.doc["kadison"] = {{"available", false}};
    }
    rep.doc["channels_agree"] = channels_agree;
    rep.status = channels_agree ? 0 : 5;
    return rep;
}

Report frobenius_report(const GradedRing& s) {
    Report rep;
    rep.doc["kind"] = "frobenius";
    auto eps_result = try_compute_epsilon(s);
    if (auto* fail = std::get_if<EpsilonFailure>(&eps_result)) {
        rep.doc["epsilon_strong"] = false;
        rep.doc["epsilon_failure"] = {{"degree", s.group().label(fail->degree)},
                                      {"reason", fail->reason}};
        rep.status = 4;
        return rep;
    }
    rep.doc["epsilon_strong"] = true;
    const EpsilonData& eps = std::get<EpsilonData>(eps_result);
    FrobeniusSystem fs = frobenius_system(s, eps);
    rep.doc["finite_group"] = fs.finite_group;
    rep.doc["identities_verified"] = fs.identities_verified;
    Json pairs = Json::array();
    for (const auto& [x, y] : fs.pairs)
        pairs.push_back(Json::array({scalar_vec_to_json(x), scalar_vec_to_json(y)}));
    rep.doc["pairs"] = pairs;
    rep.status = 0;
    return rep;
}

Report validate_action_report(const TwistedPartialAction& a) {
    Report rep;
    rep.doc["kind"] = "validate-action";
    auto violations = validate_action(a);
    rep.doc["ok"] = violations.empty();
    Json vj = Json::array();
    for (const auto& v : violations) vj.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
    rep.doc["violations"] = vj;
    rep.status = violations.empty() ? 0 : 6;
    return rep;
}

Report crossed_product_report(const TwistedPartialAction& a, Json* ring_json_out) {
    Report rep = validate_action_report(a);
    rep.doc["kind"] = "crossed-product";
    if (rep.status != 0) return rep;
    CrossedProduct cp = crossed_product(a);
    rep.doc["dim"] = cp.ring.algebra().dim();
    rep.doc["support"] = support_labels(cp.ring);
    rep.doc["epsilon_strong"] = true;
    if (ring_json_out) *ring_json_out = ring_to_json(cp.ring);
    return rep;
}

Report extract_action_report(const GradedRing& s, const std::map<GroupElt, Vec>& sections,
                             bool auto_sections, std::uint64_t seed, std::uint64_t budget,
                             bool verify_roundtrip, Json* action_json_out) {
    Report rep;
    rep.doc["kind"] = "extract-action";
    auto eps_result = try_compute_epsilon(s);
    if (auto* fail = std::get_if<EpsilonFailure>(&eps_result)) {
        rep.doc["epsilon_strong"] = false;
        rep.doc["epsilon_failure"] = {{"degree", s.group().label(fail->degree)},
                                      {"reason", fail->reason}};
        rep.status = 4;
        return rep;
    }
    rep.doc["epsilon_strong"] = true;
    const EpsilonData& eps = std::get<EpsilonData>(eps_result);

    std::map<GroupElt, Vec> sec = sections;
    Json search = Json::array();
    if (auto_sections) {
        for (const auto& g : s.support()) {
            if (g == s.group().identity()) continue;
            if (sec.count(g)) continue;
            auto found = find_epsilon_invertible(s, eps, g, budget, seed);
            Json entry;
            entry["degree"] = s.group().label(g);
            entry["tried"] = found.tried;
            switch (found.outcome) {
                case SearchOutcome::Found:
                    entry["outcome"] = "found";
                    sec[g] = found.element;
                    break;
                case SearchOutcome::ProvenAbsent:
                    entry["outcome"] = "proven_absent";
                    entry["note"] =
                        "exhaustive enumeration over the prime field: no epsilon-invertible "
                        "element exists at this degree, so the ring is not an epsilon-crossed "
                        "product";
                    break;
                case SearchOutcome::BudgetExceeded:
                    entry["outcome"] = "budget_exceeded";
                    break;
                case SearchOutcome::Inconclusive:
                    entry["outcome"] = "inconclusive";
                    entry["note"] = "probing over the rationals is a semi-decision; absence of a "
                                    "section was not proven";
                    break;
            }
            search.push_back(entry);
            if (found.outcome != SearchOutcome::Found) {
                rep.doc["sections_search"] = search;
                rep.status = 7;
                return rep;
            }
        }
        rep.doc["sections_search"] = search;
    }

    TwistedPartialAction act = extract_action(s, eps, sec);
    Json sections_json;
    sections_json[s.group().label(s.group().identity())] =
        scalar_vec_to_json(s.algebra().unit());
    for (const auto& [g, v] : sec) sections_json[s.group().label(g)] = scalar_vec_to_json(v);
    rep.doc["sections"] = sections_json;

    if (verify_roundtrip) {
        CrossedProduct rebuilt = crossed_product(act);
        const auto& ri = s.principal_indices();
        Matrix iso(s.algebra().field(), s.algebra().dim(), rebuilt.ring.algebra().dim());
        std::map<GroupElt, Vec> full_sec = sec;
        full_sec[s.group().identity()] = s.algebra().unit();
        for (std::size_t j = 0; j < rebuilt.basis_labels.size(); ++j) {
            const auto& [g, d] = rebuilt.basis_labels[j];
            Vec d_in_s = zero_vec(s.algebra().field(), s.algebra().dim());
            for (std::size_t c = 0; c < ri.size(); ++c) d_in_s[ri[c]] = d[c];
            Vec img = s.algebra().multiply(d_in_s, full_sec.at(g));
            for (std::size_t c = 0; c < s.algebra().dim(); ++c) iso.at(c, j) = img[c];
        }
        bool iso_ok = graded_iso_check(rebuilt.ring, s, iso);
        rep.doc["roundtrip_isomorphic"] = iso_ok;
        if (!iso_ok) {
            rep.status = 5;
            return rep;
        }
    }
    if (action_json_out) *action_json_out = action_to_json(act);
    rep.status = 0;
    return rep;
}

Report example_report(const std::string& name, const FieldSpec& field, std::uint64_t seed,
                      Json* payload_out, bool* is_action) {
    Report rep;
    rep.doc["kind"] = "example";
    rep.doc["name"] = name;
    rep.doc["field"] = field.str();
    *is_action = false;

    GradingGroup z2 = GradingGroup::cyclic(2);
    GradingGroup z3 = GradingGroup::cyclic(3);

    auto ring_out = [&](const GradedRing& r) { *payload_out = ring_to_json(r); };
    auto action_out = [&](const TwistedPartialAction& a) {
        *payload_out = action_to_json(a);
        *is_action = true;
    };

    if (name == "dade-modified") {
        ring_out(dade_modified(field));
    } else if (name == "dade-original") {
        ring_out(dade_original(field));
    } else if (name == "group-z2") {
        ring_out(group_algebra(z2, field));
    } else if (name == "group-z3") {
        ring_out(group_algebra(z3, field));
    } else if (name == "group-klein") {
        ring_out(group_algebra(GradingGroup::direct_product(z2, z2), field));
    } else if (name == "twisted-z2") {
        ring_out(twisted_z2_group_algebra(field, Scalar(field, 2)));
    } else if (name == "pattern-m2") {
        ring_out(matrix_pattern_ring(field, z2, {GroupElt(0), GroupElt(1)}));
    } else if (name == "pattern-m3") {
        ring_out(matrix_pattern_ring(field, z3, {GroupElt(0), GroupElt(0), GroupElt(1)}));
    } else if (name == "morita-trivial") {
        ring_out(morita_ring(trivial_context(field)));
    } else if (name == "morita-colrow2") {
        ring_out(morita_ring(column_row_context(field, 2)));
    } else if (name == "morita-from-dade") {
        ring_out(morita_from_strong(dade_original(field), GroupElt(1)));
    } else if (name == "kt3") {
        ring_out(truncated_polynomial_ring(field, 3));
    } else if (name == "upper-z2") {
        ring_out(upper_triangular_z2(field));
    } else if (name == "kxk-z2-action") {
        action_out(kxk_z2_action(field));
    } else if (name == "random") {
        auto corpus = make_corpus(seed, 1);
        rep.doc["picked"] = corpus[seed % corpus.size()].name;
        ring_out(corpus[seed % corpus.size()].ring);
    } else {
        throw ParseError(
            "unknown example '" + name +
            "' (expected one of: dade-modified, dade-original, group-z2, group-z3, group-klein, "
            "twisted-z2, pattern-m2, pattern-m3, morita-trivial, morita-colrow2, "
            "morita-from-dade, kt3, upper-z2, kxk-z2-action, random)");
    }
    rep.status = 0;
    return rep;
}

Report corpus_run_report(std::uint64_t seed, std::size_t count, std::uint64_t budget) {
    Report rep;
    rep.doc["kind"] = "corpus-run";
    rep.doc["seed"] = seed;
    rep.doc["count"] = count;
    auto corpus = make_corpus(seed, count);
    auto negatives = negative_instances();
    rep.doc["instances"] = corpus.size();
    rep.doc["negatives"] = negatives.size();

    auto to_json = [](const SuiteCounters& sc) {
        Json j;
        j["instances"] = sc.instances;
        j["checks"] = sc.checks;
        j["failures"] = Json::array();
        for (const auto& f : sc.failures)
            j["failures"].push_back({{"instance", f.instance}, {"law", f.law},
                                     {"detail", f.detail}});
        return j;
    };

    SuiteCounters all;
    auto s1 = suite_oracle_agreement(corpus);
    rep.doc["oracle_agreement"] = to_json(s1);
    all.merge(s1);
    auto s2 = suite_classification(corpus, negatives);
    rep.doc["classification"] = to_json(s2);
    rep.doc["classification"]["negatives_not_symmetric"] = s2.negatives_not_symmetric;
    rep.doc["classification"]["negatives_non_unital"] = s2.negatives_non_unital;
    all.merge(s2);
    auto s3 = suite_gamma_laws(corpus);
    rep.doc["gamma_laws"] = to_json(s3);
    all.merge(s3);
    auto s4 = suite_frobenius_kadison(corpus);
    rep.doc["frobenius_kadison"] = to_json(s4);
    all.merge(s4);
    auto s5 = suite_roundtrip(corpus);
    rep.doc["roundtrip"] = to_json(s5);
    all.merge(s5);
    auto s6 = suite_simplicity(corpus, budget);
    rep.doc["simplicity"] = to_json(s6);
    all.merge(s6);

    rep.doc["total_checks"] = all.checks;
    rep.doc["total_failures"] = all.failures.size();
    rep.status = all.ok() ? 0 : 5;
    return rep;
}

namespace {

void render_into(const Json& j, std::ostringstream& out, int indent) {
    std::string pad(2 * indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v[0].is_string() &&
                                  !v[0].is_number() && !v[0].is_boolean())) {
                out << pad << k << ":\n";
                render_into(v, out, indent + 1);
            } else {
                out << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << pad << "-\n";
                render_into(v, out, indent + 1);
            } else {
                out << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    render_into(doc, out, 0);
    return out.str();
}

}  // namespace epsring
