#include "parayam/paracontact.hpp"

#include "parayam/error.hpp"
#include "parayam/manifold.hpp"

#include <utility>

namespace parayam {

namespace {

const ScalarExpr kOne = ScalarExpr::integer(1);
const ScalarExpr kHalf = ScalarExpr::constant(Rational(1, 2));

ScalarExpr kronecker(std::size_t i, std::size_t j) {
    return i == j ? ScalarExpr::integer(1) : ScalarExpr();
}

void require_valences(const ModelPtr& model, const TensorField& phi,
                      const TensorField& xi, const TensorField& eta) {
    if (phi.model() != model || xi.model() != model || eta.model() != model)
        throw SemanticError("structure fields must live on the structure's model", "structure");
    if (!(phi.valence() == Valence{1, 1}))
        throw SemanticError("phi must be a (1,1) field", "structure");
    if (!(xi.valence() == Valence{1, 0}))
        throw SemanticError("xi must be a vector field", "structure");
    if (!(eta.valence() == Valence{0, 1}))
        throw SemanticError("eta must be a one-form", "structure");
}

TensorField transpose_form(const TensorField& t) {
    TensorField out(t.model(), t.valence());
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = t(j, i);
    return out;
}

bool antisymmetric(const TensorField& t) {
    return t.plus(transpose_form(t)).is_zero();
}

// Raw h = (1/2) L_xi phi without the paracontact-metric assertions, for use
// inside classify where the hypotheses are being established.
TensorField h_raw(const ParacontactStructure& s) {
    return lie_derivative(s.xi(), s.phi()).scaled(kHalf);
}

} // namespace

CheckReport verify_axioms(const ModelPtr& model, const TensorField& phi,
                          const TensorField& xi, const TensorField& eta) {
    require_valences(model, phi, xi, eta);
    const std::size_t n = model->dim();
    CheckReport rep;
    rep.id = "structure axioms";
    rep.model = model;

    TensorField sq(model, {1, 1});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr acc;
            for (std::size_t m = 0; m < n; ++m) acc += phi(i, m) * phi(m, j);
            sq(i, j) = acc - kronecker(i, j) + xi(i) * eta(j);
        }
    rep.require_zero("phi^2 - I + eta (x) xi", std::move(sq));

    ScalarExpr exi;
    for (std::size_t m = 0; m < n; ++m) exi += eta(m) * xi(m);
    rep.require_zero("eta(xi) - 1", exi - kOne);

    rep.require_zero("phi xi", apply_operator(phi, xi));

    TensorField ephi(model, {0, 1});
    for (std::size_t j = 0; j < n; ++j) {
        ScalarExpr acc;
        for (std::size_t m = 0; m < n; ++m) acc += eta(m) * phi(m, j);
        ephi(j) = acc;
    }
    rep.require_zero("eta o phi", std::move(ephi));

    TensorField compat(model, {0, 2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr acc;
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t l = 0; l < n; ++l)
                    acc += phi(m, i) * phi(l, j) * model->metric(m, l);
            compat(i, j) = acc + model->metric(i, j) - eta(i) * eta(j);
        }
    rep.require_zero("g(phi X, phi Y) + g(X, Y) - eta(X) eta(Y)", std::move(compat));

    rep.require_zero("eta - g(., xi)", eta.minus(lower_index(xi)));
    return rep;
}

ParacontactStructure::ParacontactStructure(ModelPtr model, TensorField phi,
                                           TensorField xi, TensorField eta, Mode mode)
    : model_(std::move(model)), phi_(std::move(phi)), xi_(std::move(xi)),
      eta_(std::move(eta)), mode_(mode),
      axioms_(verify_axioms(model_, phi_, xi_, eta_)) {
    if (mode_ == Mode::Strict && !axioms_.passed()) {
        for (const auto& item : axioms_.residuals)
            if (!item.zero)
                throw SemanticError("axiom violated: " + item.label, "structure");
        throw SemanticError("axioms violated", "structure");
    }
}

TensorField fundamental_two_form(const ParacontactStructure& s) {
    const ModelPtr& model = s.model();
    const std::size_t n = model->dim();
    TensorField out(model, {0, 2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr acc;
            for (std::size_t m = 0; m < n; ++m)
                acc += model->metric(i, m) * s.phi()(m, j);
            out(i, j) = acc;
        }
    return out;
}

TensorField h_operator(const ParacontactStructure& s) {
    TensorField h = h_raw(s);
    if (s.axioms_hold()) {
        const TensorField pc =
            fundamental_two_form(s).minus(exterior_derivative(s.eta()));
        if (pc.is_zero()) {
            const std::size_t n = s.model()->dim();
            ScalarExpr trace;
            for (std::size_t i = 0; i < n; ++i) trace += h(i, i);
            if (!trace.is_zero())
                throw Error("paracontact metric structure with tr h != 0");
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t j = 0; j < n; ++j) {
                    ScalarExpr acc;
                    for (std::size_t m = 0; m < n; ++m)
                        acc += h(l, m) * s.phi()(m, j) + s.phi()(l, m) * h(m, j);
                    if (!acc.is_zero())
                        throw Error("paracontact metric structure with h phi + phi h != 0");
                }
        }
    }
    return h;
}

TensorField nijenhuis(const ParacontactStructure& s) {
    const ModelPtr& model = s.model();
    const std::size_t n = model->dim();
    TensorField out(model, {1, 2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const TensorField ei = basis_vector(model, i);
            const TensorField ej = basis_vector(model, j);
            const TensorField pi = apply_operator(s.phi(), ei);
            const TensorField pj = apply_operator(s.phi(), ej);
            TensorField nij = lie_bracket(pi, pj)
                                  .plus(apply_operator(s.phi(), apply_operator(s.phi(), lie_bracket(ei, ej))))
                                  .minus(apply_operator(s.phi(), lie_bracket(ei, pj)))
                                  .minus(apply_operator(s.phi(), lie_bracket(pi, ej)));
            for (std::size_t k = 0; k < n; ++k) out(k, i, j) = nij(k);
        }
    return out;
}

TensorField normality_tensor(const ParacontactStructure& s) {
    const ModelPtr& model = s.model();
    const std::size_t n = model->dim();
    const TensorField nj = nijenhuis(s);
    const TensorField deta = exterior_derivative(s.eta());
    TensorField out(model, {1, 2});
    const ScalarExpr two = ScalarExpr::integer(2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(k, i, j) = nj(k, i, j) - two * deta(i, j) * s.xi()(k);
    return out;
}

namespace {

// Fits A = k B1 + mu B2 over all multi-indices with exact consistency;
// secondary may be null (single-parameter fit).  Returns false on any
// inconsistency.  When B2 never matters the fitted mu stays disengaged.
struct NullityFit {
    bool ok = false;
    std::optional<ScalarExpr> k;
    std::optional<ScalarExpr> mu;
};

NullityFit fit_two_parameters(const TensorField& a, const TensorField& b1, const TensorField& b2) {
    struct Eq {
        ScalarExpr a, b1, b2;
    };
    std::vector<Eq> eqs;
    a.for_each_index([&](const std::vector<std::size_t>& ix) {
        Eq e{a.at(ix), b1.at(ix), b2.at(ix)};
        if (e.a.is_zero() && e.b1.is_zero() && e.b2.is_zero()) return;
        eqs.push_back(std::move(e));
    });

    NullityFit fit;
    if (eqs.empty()) {
        // R(X,Y)xi = 0 identically and no constraints: k = 0 fits.
        fit.ok = true;
        fit.k = ScalarExpr();
        return fit;
    }

    const bool use_mu = !b2.is_zero();
    std::optional<ScalarExpr> k, mu;
    if (!use_mu) {
        for (const auto& e : eqs) {
            if (e.b1.is_zero()) {
                if (!e.a.is_zero()) return fit;
                continue;
            }
            ScalarExpr cand = e.a / e.b1;
            if (!k) k = cand;
            else if (!equivalent(*k, cand)) return fit;
        }
        if (!k) return fit;
        fit.ok = true;
        fit.k = *k;
        return fit;
    }

    // Two parameters: find a pair of equations with nonzero determinant.
    for (std::size_t p = 0; p < eqs.size() && !k; ++p)
        for (std::size_t q = p + 1; q < eqs.size() && !k; ++q) {
            ScalarExpr det = eqs[p].b1 * eqs[q].b2 - eqs[q].b1 * eqs[p].b2;
            if (det.is_zero()) continue;
            k = (eqs[p].a * eqs[q].b2 - eqs[q].a * eqs[p].b2) / det;
            mu = (eqs[p].b1 * eqs[q].a - eqs[q].b1 * eqs[p].a) / det;
        }
    if (!k) return fit;
    for (const auto& e : eqs)
        if (!equivalent(e.a, *k * e.b1 + *mu * e.b2)) return fit;
    fit.ok = true;
    fit.k = *k;
    fit.mu = *mu;
    return fit;
}

} // namespace

StructureClassReport classify(const ParacontactStructure& s, const CurvatureData& curv) {
    const ModelPtr& model = s.model();
    if (curv.conn.model != model)
        throw SemanticError("curvature data computed on a different model", "structure");
    const std::size_t n = model->dim();
    const TensorField& phi = s.phi();
    const TensorField& xi = s.xi();
    const TensorField& eta = s.eta();

    StructureClassReport out;
    out.details.id = "structure classification";
    out.details.model = model;
    out.axioms_ok = s.axioms_hold();
    if (!out.axioms_ok)
        out.notes.push_back("axioms fail; only the defining residuals are reported");

    const TensorField big_phi = fundamental_two_form(s);
    const TensorField deta = exterior_derivative(eta);
    TensorField pc_residual = big_phi.minus(deta);
    out.paracontact_metric = out.axioms_ok && pc_residual.is_zero();
    out.details.record("Phi - d eta", std::move(pc_residual));

    const TensorField h = h_raw(s);
    out.details.record("h = (1/2) L_xi phi", h);
    out.k_paracontact = out.paracontact_metric && h.is_zero();

    TensorField normality = normality_tensor(s);
    out.normal = out.axioms_ok && normality.is_zero();
    out.details.record("[phi,phi] - 2 d eta (x) xi", std::move(normality));

    out.para_sasakian = out.paracontact_metric && out.normal;

    bool dphi_zero = false;
    if (antisymmetric(big_phi)) {
        TensorField dphi = exterior_derivative(big_phi);
        dphi_zero = dphi.is_zero();
        out.details.record("d Phi", std::move(dphi));
    } else {
        out.notes.push_back("Phi is not antisymmetric; d Phi skipped");
    }
    out.para_cosymplectic = out.axioms_ok && out.normal && deta.is_zero() && dphi_zero;
    out.details.record("d eta", deta);

    // (k, mu) expression for R(X,Y)xi when the axioms hold.
    if (out.axioms_ok) {
        TensorField a(model, {1, 2}), b1(model, {1, 2}), b2(model, {1, 2});
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ScalarExpr acc;
                    for (std::size_t k = 0; k < n; ++k)
                        acc += curv.riem(l, i, j, k) * xi(k);
                    a(l, i, j) = acc;
                    b1(l, i, j) = eta(j) * kronecker(l, i) - eta(i) * kronecker(l, j);
                    b2(l, i, j) = eta(j) * h(l, i) - eta(i) * h(l, j);
                }
        NullityFit fit = fit_two_parameters(a, b1, b2);
        out.k_mu_nullity = out.paracontact_metric && fit.ok;
        if (fit.ok) {
            out.k = fit.k;
            out.mu = fit.mu;
            out.details.add_derived("k", *fit.k);
            if (fit.mu) out.details.add_derived("mu", *fit.mu);
            else out.notes.push_back("mu indeterminate (h = 0)");
        } else {
            out.notes.push_back("R(X,Y)xi admits no (k, mu) expression");
        }
    }

    // Consequence identities of each detected class, re-verified exactly.
    const ConnectionData& conn = curv.conn;
    if (out.paracontact_metric) {
        TensorField t27(model, {1, 1});
        for (std::size_t i = 0; i < n; ++i) {
            const TensorField cov = covariant_derivative_along(conn, basis_vector(model, i), xi);
            for (std::size_t l = 0; l < n; ++l) {
                ScalarExpr hphi;
                for (std::size_t m = 0; m < n; ++m) hphi += phi(l, m) * h(m, i);
                t27(l, i) = cov(l) + phi(l, i) - hphi;
            }
        }
        out.details.require_zero("nabla_X xi + phi X - phi h X", std::move(t27));

        ScalarExpr sxixi;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sxixi += curv.ric(i, j) * xi(i) * xi(j);
        ScalarExpr trh2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) trh2 += h(i, m) * h(m, i);
        out.details.require_zero("S(xi,xi) - tr(h^2) + (dim - 1)",
                                 sxixi - trh2 + ScalarExpr::integer(static_cast<long>(n) - 1));
    }

    if (out.k_paracontact) {
        TensorField t29(model, {1, 1});
        for (std::size_t i = 0; i < n; ++i) {
            const TensorField cov = covariant_derivative_along(conn, basis_vector(model, i), xi);
            for (std::size_t l = 0; l < n; ++l) t29(l, i) = cov(l) + phi(l, i);
        }
        out.details.require_zero("nabla_X xi + phi X", std::move(t29));
    }

    if (out.para_sasakian) {
        TensorField t210(model, {1, 1});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                ScalarExpr acc;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        acc += curv.riem(l, i, j, k) * xi(j) * xi(k);
                t210(l, i) = acc + kronecker(l, i) - eta(i) * xi(l);
            }
        out.details.require_zero("R(X,xi)xi + X - eta(X) xi", std::move(t210));

        TensorField t211(model, {1, 0});
        for (std::size_t l = 0; l < n; ++l) {
            ScalarExpr acc;
            for (std::size_t j = 0; j < n; ++j) acc += curv.q(l, j) * xi(j);
            t211(l) = acc + ScalarExpr::integer(static_cast<long>(n) - 1) * xi(l);
        }
        out.details.require_zero("Q xi + (dim - 1) xi", std::move(t211));

        const TensorField dphi = covariant_derivative(conn, phi); // (l, dir, j)
        TensorField t212(model, {1, 2});
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    t212(l, i, j) =
                        dphi(l, i, j) + model->metric(i, j) * xi(l) - eta(j) * kronecker(l, i);
        out.details.require_zero("(nabla_X phi)Y + g(X,Y) xi - eta(Y) X", std::move(t212));

        TensorField t213(model, {1, 2});
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ScalarExpr acc;
                    for (std::size_t k = 0; k < n; ++k)
                        acc += curv.riem(l, i, j, k) * xi(k);
                    t213(l, i, j) = acc - eta(i) * kronecker(l, j) + eta(j) * kronecker(l, i);
                }
        out.details.require_zero("R(X,Y)xi - eta(X)Y + eta(Y)X", std::move(t213));

        TensorField t214(model, {1, 2});
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    ScalarExpr acc;
                    for (std::size_t j = 0; j < n; ++j)
                        acc += curv.riem(l, i, j, k) * xi(j);
                    t214(l, i, k) = acc - model->metric(i, k) * xi(l) + eta(k) * kronecker(l, i);
                }
        out.details.require_zero("R(X,xi)Y - g(X,Y)xi + eta(Y)X", std::move(t214));
    }

    if (out.para_cosymplectic) {
        TensorField t41(model, {1, 2});
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ScalarExpr acc;
                    for (std::size_t k = 0; k < n; ++k)
                        acc += curv.riem(l, i, j, k) * xi(k);
                    t41(l, i, j) = acc;
                }
        out.details.require_zero("R(X,Y)xi", std::move(t41));
        out.details.require_zero("nabla phi", covariant_derivative(conn, phi));
        out.details.require_zero("nabla xi", covariant_derivative(conn, xi));

        TensorField t44(model, {0, 1});
        for (std::size_t i = 0; i < n; ++i) {
            ScalarExpr acc;
            for (std::size_t j = 0; j < n; ++j) acc += curv.ric(i, j) * xi(j);
            t44(i) = acc;
        }
        out.details.require_zero("S(X, xi)", std::move(t44));

        TensorField t45(model, {1, 0});
        for (std::size_t l = 0; l < n; ++l) {
            ScalarExpr acc;
            for (std::size_t j = 0; j < n; ++j) acc += curv.q(l, j) * xi(j);
            t45(l) = acc;
        }
        out.details.require_zero("Q xi", std::move(t45));
    }

    return out;
}

} // namespace parayam
