#include "epsring/suites.hpp"
#include <algorithm>

namespace epsring {

namespace {

void expect(SuiteCounters& sc, const std::string& inst, const std::string& law, bool cond,
            const std::string& detail = "") {
    ++sc.checks;
    if (!cond) sc.failures.push_back({inst, law, detail});
}

}  // namespace

SuiteCounters suite_oracle_agreement(const std::vector<CorpusInstance>& corpus,
                                     std::size_t dim_cap) {
    SuiteCounters sc;
    for (const auto& inst : corpus) {
        ++sc.instances;
        const auto& ring = inst.ring;
        EpsilonData eps = compute_epsilon(ring);
        auto decision = decide_separability(ring, eps, nullptr);
        bool decided = std::holds_alternative<SeparabilityCertificate>(decision);
        if (ring.algebra().dim() > dim_cap) continue;
        TensorOverBase tensor(ring.algebra(), ring.principal_subspace());
        auto oracle = oracle_separability(ring.algebra(), ring.principal_subspace(), &tensor);
        expect(sc, inst.name, "oracle-agreement", oracle.separable == decided,
               decided ? "trace solve separable, oracle disagrees"
                       : "oracle separable, trace solve disagrees");
        if (decided) {
            auto cert = certificate_from_witness(
                ring, eps, std::get<SeparabilityCertificate>(decision).witness_c, &tensor);
            expect(sc, inst.name, "certificate-m", cert.m_of_x_is_one);
            expect(sc, inst.name, "certificate-central", cert.x_central);
        }
    }
    return sc;
}

SuiteCounters suite_classification(const std::vector<CorpusInstance>& corpus,
                                   const std::vector<CorpusInstance>& negatives) {
    SuiteCounters sc;
    auto run_one = [&](const CorpusInstance& inst, bool expect_eps_strong) {
        ++sc.instances;
        const auto& ring = inst.ring;
        expect(sc, inst.name, "algebra-valid", ring.algebra().validate().ok());
        expect(sc, inst.name, "grading-valid", ring.validate_grading().ok());
        auto cls = classify(ring);
        expect(sc, inst.name, "char-equivalence",
               cls.char_i == cls.char_ii && cls.char_ii == cls.char_iii &&
                   cls.char_iii == cls.char_iv,
               "i=" + std::to_string(cls.char_i) + " ii=" + std::to_string(cls.char_ii) +
                   " iii=" + std::to_string(cls.char_iii) + " iv=" + std::to_string(cls.char_iv));
        expect(sc, inst.name, "expected-verdict", cls.is_epsilon_strong == expect_eps_strong);
        if (!cls.char_ii) {
            if (cls.char_ii_failure_mode == "not_symmetric") ++sc.negatives_not_symmetric;
            if (cls.char_ii_failure_mode == "non_unital_ideal") ++sc.negatives_non_unital;
        }
        if (cls.is_epsilon_strong) {
            EpsilonData eps = compute_epsilon(ring);
            bool all_one = true;
            if (ring.group().is_finite()) {
                for (const auto& g : ring.group().elements())
                    if (eps.eps(g, ring.algebra().field(), ring.algebra().dim()) !=
                        ring.algebra().unit())
                        all_one = false;
            } else {
                all_one = false;  // finite support cannot cover the integers
            }
            expect(sc, inst.name, "strong-iff-eps-one", cls.is_strong == all_one);
        } else {
            expect(sc, inst.name, "strong-implies-eps", !cls.is_strong);
        }
    };
    for (const auto& inst : corpus) run_one(inst, true);
    for (const auto& inst : negatives) run_one(inst, false);
    return sc;
}

SuiteCounters suite_gamma_laws(const std::vector<CorpusInstance>& corpus) {
    SuiteCounters sc;
    for (const auto& inst : corpus) {
        ++sc.instances;
        const auto& ring = inst.ring;
        const auto& alg = ring.algebra();
        const FieldSpec& spec = alg.field();
        const std::size_t n = alg.dim();
        EpsilonData eps = compute_epsilon(ring, DecompositionStyle::Lex);
        EpsilonData eps2 = compute_epsilon(ring, DecompositionStyle::ReverseLex);
        Subspace z = z_fin(ring, eps, ZFinKind::Plain);
        Subspace zg = z_fin(ring, eps, ZFinKind::GammaFixed);
        auto degs = ring.support_closure();

        for (const auto& g : degs) {
            Vec eg = eps.eps(g, spec, n);
            // the component identities are central idempotents of R
            expect(sc, inst.name, "eps-idempotent", alg.multiply(eg, eg) == eg,
                   ring.group().label(g));
            bool central = true;
            for (std::size_t i : ring.principal_indices()) {
                Vec e = unit_vec(spec, n, i);
                if (alg.multiply(eg, e) != alg.multiply(e, eg)) central = false;
            }
            expect(sc, inst.name, "eps-central", central, ring.group().label(g));

            for (const auto& zb : z.basis()) {
                // decomposition independence on the center
                expect(sc, inst.name, "gamma-choice-independent",
                       gamma_apply(ring, eps, g, zb) == gamma_apply(ring, eps2, g, zb),
                       ring.group().label(g));
                Vec gz = gamma_apply(ring, eps, g, zb);
                // gamma_g(r) s = s r on the degree-g component
                bool intertwines = true;
                for (std::size_t i : ring.component_indices(g)) {
                    Vec e = unit_vec(spec, n, i);
                    if (alg.multiply(gz, e) != alg.multiply(e, zb)) intertwines = false;
                }
                expect(sc, inst.name, "gamma-intertwines", intertwines, ring.group().label(g));
                // lands in Z(R) eps_g
                std::vector<Vec> zeg;
                for (const auto& w : z.basis()) zeg.push_back(alg.multiply(w, eg));
                expect(sc, inst.name, "gamma-into-Zeps",
                       Subspace::span(spec, n, zeg).contains(gz), ring.group().label(g));
            }
            // multiplicativity on the center
            for (const auto& za : z.basis())
                for (const auto& zb : z.basis())
                    expect(sc, inst.name, "gamma-multiplicative",
                           gamma_apply(ring, eps, g, alg.multiply(za, zb)) ==
                               alg.multiply(gamma_apply(ring, eps, g, za),
                                            gamma_apply(ring, eps, g, zb)),
                           ring.group().label(g));
            // bijective between the corner centers
            {
                GroupElt ginv = ring.group().inv(g);
                Vec eginv = eps.eps(ginv, spec, n);
                std::vector<Vec> dom, img;
                for (const auto& w : z.basis()) dom.push_back(alg.multiply(w, eginv));
                Subspace dom_s = Subspace::span(spec, n, dom);
                for (const auto& w : dom_s.basis()) img.push_back(gamma_apply(ring, eps, g, w));
                Subspace img_s = Subspace::span(spec, n, img);
                std::vector<Vec> target;
                for (const auto& w : z.basis()) target.push_back(alg.multiply(w, eg));
                expect(sc, inst.name, "gamma-corner-bijective",
                       img_s == Subspace::span(spec, n, target) && img_s.dim() == dom_s.dim(),
                       ring.group().label(g));
            }
        }
        // composition law over all degree pairs
        for (const auto& g : degs)
            for (const auto& h : degs)
                for (const auto& zb : z.basis()) {
                    GroupElt gh = ring.group().mul(g, h);
                    Vec lhs = gamma_apply(ring, eps, g, gamma_apply(ring, eps, h, zb));
                    Vec rhs = alg.multiply(gamma_apply(ring, eps, gh, zb), eps.eps(g, spec, n));
                    expect(sc, inst.name, "gamma-composition", lhs == rhs,
                           "(" + ring.group().label(g) + ", " + ring.group().label(h) + ")");
                }
        // the two central subrings are closed under sum and product
        for (const auto& za : zg.basis())
            for (const auto& zb : zg.basis()) {
                expect(sc, inst.name, "zfin-gamma-closed-mul",
                       zg.contains(alg.multiply(za, zb)));
                expect(sc, inst.name, "zfin-gamma-closed-add", zg.contains(add(za, zb)));
            }
        // trace lands in the gamma-fixed part and is a bimodule map over it
        for (const auto& zb : z.basis()) {
            Vec tr = trace_gamma(ring, eps, zb);
            expect(sc, inst.name, "trace-into-gamma-fixed", zg.contains(tr));
            for (const auto& g : eps.nonzero_degrees())
                expect(sc, inst.name, "trace-gamma-fixed-law",
                       gamma_apply(ring, eps, g, tr) == alg.multiply(tr, eps.eps(g, spec, n)));
        }
        for (const auto& r1 : zg.basis())
            for (const auto& zb : z.basis())
                for (const auto& r2 : zg.basis()) {
                    Vec lhs = trace_gamma(ring, eps,
                                          alg.multiply(alg.multiply(r1, zb), r2));
                    Vec rhs = alg.multiply(alg.multiply(r1, trace_gamma(ring, eps, zb)), r2);
                    expect(sc, inst.name, "trace-bimodule", lhs == rhs);
                }
        // inverses of gamma-fixed central units stay gamma-fixed
        for (const auto& r : zg.basis()) {
            const auto& ri = ring.principal_indices();
            Matrix sys(spec, 2 * n, ri.size());
            for (std::size_t a = 0; a < ri.size(); ++a) {
                Vec e = unit_vec(spec, n, ri[a]);
                Vec xy = alg.multiply(r, e);
                Vec yx = alg.multiply(e, r);
                for (std::size_t c = 0; c < n; ++c) {
                    sys.at(c, a) = xy[c];
                    sys.at(n + c, a) = yx[c];
                }
            }
            Vec rhs = alg.unit();
            rhs.insert(rhs.end(), alg.unit().begin(), alg.unit().end());
            auto sol = solve_affine(sys, rhs);
            if (!sol) continue;
            Vec inv = zero_vec(spec, n);
            for (std::size_t a = 0; a < ri.size(); ++a)
                add_scaled(inv, unit_vec(spec, n, ri[a]), sol->particular[a]);
            for (const auto& g : eps.nonzero_degrees())
                expect(sc, inst.name, "gamma-fixed-inverse",
                       gamma_apply(ring, eps, g, inv) ==
                           alg.multiply(inv, eps.eps(g, spec, n)));
        }
        // dual bases exist at every supported degree
        for (const auto& g : degs) {
            try {
                dual_basis(ring, eps, g);
                ++sc.checks;
            } catch (const Error& e) {
                sc.failures.push_back({inst.name, "dual-basis", e.what()});
            }
        }
    }
    return sc;
}

SuiteCounters suite_frobenius_kadison(const std::vector<CorpusInstance>& corpus) {
    SuiteCounters sc;
    for (const auto& inst : corpus) {
        ++sc.instances;
        const auto& ring = inst.ring;
        EpsilonData eps = compute_epsilon(ring);
        FrobeniusSystem fs = frobenius_system(ring, eps);
        if (ring.group().is_finite())
            expect(sc, inst.name, "frobenius-identities", fs.identities_verified);
        if (!fs.identities_verified) continue;
        bool decided = std::holds_alternative<SeparabilityCertificate>(
            decide_separability(ring, eps, nullptr));
        expect(sc, inst.name, "kadison-agreement", kadison_separable(ring, fs) == decided);
    }
    return sc;
}

SuiteCounters suite_roundtrip(const std::vector<CorpusInstance>& corpus) {
    SuiteCounters sc;
    for (const auto& inst : corpus) {
        if (!inst.crossed) continue;
        ++sc.instances;
        const auto& cp = *inst.crossed;
        const auto& ring = cp.ring;
        const auto& alg = ring.algebra();
        const FieldSpec& spec = alg.field();
        EpsilonData eps = compute_epsilon(ring);

        std::map<GroupElt, Vec> sections;
        for (const auto& g : ring.support()) sections[g] = cp.canonical_section(g);
        TwistedPartialAction extracted = extract_action(ring, eps, sections);
        ++sc.checks;  // extract_action validates internally

        CrossedProduct rebuilt = crossed_product(extracted);
        // map d delta_g |-> (d as an element of R) * s_g
        const auto& ri = ring.principal_indices();
        Matrix iso(spec, alg.dim(), rebuilt.ring.algebra().dim());
        for (std::size_t j = 0; j < rebuilt.basis_labels.size(); ++j) {
            const auto& [g, d] = rebuilt.basis_labels[j];
            Vec d_in_s = zero_vec(spec, alg.dim());
            for (std::size_t c = 0; c < ri.size(); ++c) d_in_s[ri[c]] = d[c];
            Vec img = alg.multiply(d_in_s, sections.at(g));
            for (std::size_t c = 0; c < alg.dim(); ++c) iso.at(c, j) = img[c];
        }
        expect(sc, inst.name, "roundtrip-isomorphism",
               graded_iso_check(rebuilt.ring, ring, iso));

        // trace comparison under r |-> r delta_e, plus the separability
        // criterion through the action trace
        Subspace zr = center_of_principal(ring);
        bool traces_agree = true;
        for (const auto& zb : zr.basis()) {
            Vec r_base = zero_vec(spec, ri.size());
            for (std::size_t c = 0; c < ri.size(); ++c) r_base[c] = zb[ri[c]];
            Vec ta = trace_alpha(extracted, r_base);
            Vec ta_in_s = zero_vec(spec, alg.dim());
            for (std::size_t c = 0; c < ri.size(); ++c) ta_in_s[ri[c]] = ta[c];
            if (trace_gamma(ring, eps, zb) != ta_in_s) traces_agree = false;
        }
        expect(sc, inst.name, "trace-alpha-agreement", traces_agree);

        bool decided = std::holds_alternative<SeparabilityCertificate>(
            decide_separability(ring, eps, nullptr));
        // solve 1 in tr_alpha(Z(R)) directly
        Subspace zbase = extracted.base.center();
        Matrix sys(spec, extracted.base.dim(), zbase.dim());
        for (std::size_t a = 0; a < zbase.dim(); ++a) {
            Vec t = trace_alpha(extracted, zbase.basis()[a]);
            for (std::size_t c = 0; c < extracted.base.dim(); ++c) sys.at(c, a) = t[c];
        }
        bool alpha_separable = solve_affine(sys, extracted.base.unit()).has_value();
        expect(sc, inst.name, "trace-alpha-criterion", alpha_separable == decided);
    }
    return sc;
}

SuiteCounters suite_simplicity(const std::vector<CorpusInstance>& corpus, std::uint64_t budget) {
    SuiteCounters sc;
    // full-ring enumerations cost dim^3 work per candidate, so the suite
    // keeps its own cap regardless of the caller's budget
    budget = std::min<std::uint64_t>(budget, 4096);
    for (const auto& inst : corpus) {
        const auto& ring = inst.ring;
        if (ring.algebra().field().is_rationals()) continue;
        auto rep = structure_checks(ring, budget);
        if (rep.right_nondegenerate.status == CheckStatus::Done) {
            ++sc.instances;
            expect(sc, inst.name, "right-nondegenerate",
                   rep.right_nondegenerate.verdict && rep.right_nondegenerate.exhaustive);
        }
        if (!rep.maximal_commutative) continue;
        if (rep.simple.status != CheckStatus::Done || rep.graded_simple.status != CheckStatus::Done)
            continue;
        expect(sc, inst.name, "simple-iff-graded-simple",
               rep.simple.verdict == rep.graded_simple.verdict,
               std::string("simple=") + (rep.simple.verdict ? "yes" : "no") + " graded=" +
                   (rep.graded_simple.verdict ? "yes" : "no"));
    }
    return sc;
}

}  // namespace epsring
