#include "epsring/separability.hpp"

namespace epsring {

namespace {

std::vector<std::pair<Vec, Vec>> separability_pairs(const GradedRing& s, const EpsilonData& eps,
                                                    const Vec& c) {
    const auto& alg = s.algebra();
    std::vector<std::pair<Vec, Vec>> pairs;
    for (const auto& g : eps.nonzero_degrees())
        for (const auto& p : eps.decomposition(g)) {
            Vec uc = alg.multiply(p.u, c);
            if (!is_zero_vec(uc)) pairs.emplace_back(std::move(uc), p.v);
        }
    return pairs;
}

void verify_certificate(const GradedRing& s, SeparabilityCertificate& cert,
                        const TensorOverBase* tensor) {
    if (!tensor) {
        cert.checked = false;
        return;
    }
    const auto& alg = s.algebra();
    Vec x = zero_vec(alg.field(), tensor->dim());
    for (const auto& [a, b] : cert.element_pairs) x = add(x, tensor->simple_tensor(a, b));
    cert.checked = true;
    cert.m_of_x_is_one = tensor->mult(x) == alg.unit();
    cert.x_central = true;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vec e = unit_vec(alg.field(), alg.dim(), i);
        if (tensor->act_left(e, x) != tensor->act_right(x, e)) {
            cert.x_central = false;
            break;
        }
    }
}

}  // namespace

SeparabilityOutcome decide_separability(const GradedRing& s, const EpsilonData& eps,
                                        const TensorOverBase* tensor) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    Subspace z = z_fin(s, eps, ZFinKind::Plain);
    Matrix traces(spec, n, z.dim());
    for (std::size_t a = 0; a < z.dim(); ++a) {
        Vec t = trace_gamma(s, eps, z.basis()[a]);
        for (std::size_t c = 0; c < n; ++c) traces.at(c, a) = t[c];
    }
    auto sol = solve_affine(traces, alg.unit());
    if (!sol) {
        auto cert = infeasibility_certificate(traces, alg.unit());
        if (!cert) throw TheoremViolation("infeasible trace equation has no dual certificate");
        return NotSeparable{*cert};
    }
    Vec c = zero_vec(spec, n);
    for (std::size_t a = 0; a < z.dim(); ++a) add_scaled(c, z.basis()[a], sol->particular[a]);
    SeparabilityCertificate cert = certificate_from_witness(s, eps, c, tensor);
    if (cert.checked && (!cert.m_of_x_is_one || !cert.x_central))
        throw TheoremViolation("separability certificate failed tensor verification");
    return cert;
}

SeparabilityCertificate certificate_from_witness(const GradedRing& s, const EpsilonData& eps,
                                                 const Vec& c, const TensorOverBase* tensor) {
    if (trace_gamma(s, eps, c) != s.algebra().unit())
        throw Error("witness does not have trace one");
    SeparabilityCertificate cert;
    cert.witness_c = c;
    cert.element_pairs = separability_pairs(s, eps, c);
    verify_certificate(s, cert, tensor);
    return cert;
}

OracleResult oracle_separability(const StructureAlgebra& s, const Subspace& r_basis,
                                 const TensorOverBase* prebuilt) {
    std::optional<TensorOverBase> own;
    const TensorOverBase* t = prebuilt;
    if (!t) {
        own.emplace(s, r_basis);
        t = &*own;
    }
    const FieldSpec& spec = s.field();
    const std::size_t n = s.dim();
    const std::size_t q = t->dim();
    // unknown x in the quotient: m(x) = 1 and s_i x - x s_i = 0 for all i
    Matrix sys(spec, n + n * q, q);
    Vec rhs = zero_vec(spec, n + n * q);
    for (std::size_t k = 0; k < q; ++k) {
        Vec col = zero_vec(spec, q);
        col[k] = Scalar::one(spec);
        Vec mk = t->mult(col);
        for (std::size_t c = 0; c < n; ++c) sys.at(c, k) = mk[c];
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = unit_vec(spec, n, i);
            Vec comm = sub(t->act_left(e, col), t->act_right(col, e));
            for (std::size_t c = 0; c < q; ++c) sys.at(n + i * q + c, k) = comm[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) rhs[c] = s.unit()[c];
    auto sol = solve_affine(sys, rhs);
    OracleResult out;
    out.separable = sol.has_value();
    if (sol) out.x_quotient = sol->particular;
    return out;
}

FrobeniusSystem frobenius_system(const GradedRing& s, const EpsilonData& eps) {
    const auto& alg = s.algebra();
    FrobeniusSystem fs;
    fs.finite_group = s.group().is_finite();
    for (const auto& g : eps.nonzero_degrees())
        for (const auto& p : eps.decomposition(g)) fs.pairs.emplace_back(p.u, p.v);
    GroupElt e = s.group().identity();
    fs.identities_verified = true;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vec si = unit_vec(alg.field(), alg.dim(), i);
        Vec lhs = zero_vec(alg.field(), alg.dim());
        Vec rhs = zero_vec(alg.field(), alg.dim());
        for (const auto& [x, y] : fs.pairs) {
            lhs = add(lhs, alg.multiply(x, s.homogeneous_part(alg.multiply(y, si), e)));
            rhs = add(rhs, alg.multiply(s.homogeneous_part(alg.multiply(si, x), e), y));
        }
        if (lhs != si || rhs != si) {
            fs.identities_verified = false;
            break;
        }
    }
    if (!fs.identities_verified && fs.finite_group)
        throw TheoremViolation("Frobenius identities fail for a finite grading group");
    return fs;
}

bool kadison_separable(const GradedRing& s, const FrobeniusSystem& fs) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    Subspace cent = alg.centralizer(s.principal_subspace());
    Matrix sys(spec, n, cent.dim());
    for (std::size_t a = 0; a < cent.dim(); ++a) {
        Vec acc = zero_vec(spec, n);
        for (const auto& [x, y] : fs.pairs)
            acc = add(acc, alg.multiply(alg.multiply(x, cent.basis()[a]), y));
        for (std::size_t c = 0; c < n; ++c) sys.at(c, a) = acc[c];
    }
    return solve_affine(sys, alg.unit()).has_value();
}

TraceOneReport trace_of_one_invertible(const GradedRing& s, const EpsilonData& eps) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    TraceOneReport rep;
    rep.trace_of_one = trace_gamma(s, eps, alg.unit());
    // two-sided inverse within the principal component
    const auto& ri = s.principal_indices();
    Matrix sys(spec, 2 * n, ri.size());
    for (std::size_t a = 0; a < ri.size(); ++a) {
        Vec e = unit_vec(spec, n, ri[a]);
        Vec ty = alg.multiply(rep.trace_of_one, e);
        Vec yt = alg.multiply(e, rep.trace_of_one);
        for (std::size_t c = 0; c < n; ++c) {
            sys.at(c, a) = ty[c];
            sys.at(n + c, a) = yt[c];
        }
    }
    Vec rhs = alg.unit();
    rhs.insert(rhs.end(), alg.unit().begin(), alg.unit().end());
    rep.invertible = solve_affine(sys, rhs).has_value();
    if (rep.invertible) {
        auto outcome = decide_separability(s, eps, nullptr);
        if (!std::holds_alternative<SeparabilityCertificate>(outcome))
            throw TheoremViolation("invertible trace of one but separability decision failed");
        rep.implies_separable_checked = true;
    }
    return rep;
}

}  // namespace epsring
