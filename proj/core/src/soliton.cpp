#include "parayam/soliton.hpp"

#include "parayam/error.hpp"
#include "parayam/manifold.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace parayam {

namespace {

const ScalarExpr kTwo = ScalarExpr::integer(2);

ScalarExpr dim_expr(std::size_t n) { return ScalarExpr::integer(static_cast<long>(n)); }

// (delta/2) L_Z g - (r - lambda) g
TensorField metric_soliton_tensor(const SolitonContext& ctx) {
    const TensorField g = metric_tensor(ctx.model);
    const TensorField lzg = lie_derivative(ctx.data.z, g);
    return lzg.scaled(ctx.data.delta / kTwo).minus(g.scaled(ctx.curv.r - ctx.data.lambda));
}

// delta Hess u - (r - lambda) g
TensorField gradient_soliton_tensor(const SolitonContext& ctx) {
    const TensorField g = metric_tensor(ctx.model);
    const TensorField hess = hessian(ctx.curv.conn, *ctx.data.potential_u);
    return hess.scaled(ctx.data.delta).minus(g.scaled(ctx.curv.r - ctx.data.lambda));
}

// R(X,Y) grad u - X(w) Y + Y(w) X
TensorField gl1_tensor(const SolitonContext& ctx) {
    const ModelPtr& model = ctx.model;
    const std::size_t n = model->dim();
    const TensorField gu = gradient(model, *ctx.data.potential_u);
    const ScalarExpr w = ctx.w();
    std::vector<ScalarExpr> dw(n);
    for (std::size_t i = 0; i < n; ++i) dw[i] = model->derive(w, i);
    TensorField out(model, {1, 2});
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ScalarExpr acc;
                for (std::size_t k = 0; k < n; ++k)
                    acc += ctx.curv.riem(l, i, j, k) * gu(k);
                if (l == j) acc -= dw[i];
                if (l == i) acc += dw[j];
                out(l, i, j) = acc;
            }
    return out;
}

// S(Y, grad u) + (dim - 1) Y(w)
TensorField gl2_tensor(const SolitonContext& ctx) {
    const ModelPtr& model = ctx.model;
    const std::size_t n = model->dim();
    const TensorField gu = gradient(model, *ctx.data.potential_u);
    const ScalarExpr w = ctx.w();
    TensorField out(model, {0, 1});
    for (std::size_t j = 0; j < n; ++j) {
        ScalarExpr acc;
        for (std::size_t m = 0; m < n; ++m) acc += ctx.curv.ric(j, m) * gu(m);
        out(j) = acc + dim_expr(n - 1) * model->derive(w, j);
    }
    return out;
}

std::string index_witness(const std::vector<std::size_t>& ix) {
    std::string s = "(";
    for (std::size_t t = 0; t < ix.size(); ++t) {
        if (t) s += ", ";
        s += std::to_string(ix[t] + 1);
    }
    s += ")";
    return s;
}

} // namespace

ScalarExpr SolitonContext::w() const { return (curv.r - data.lambda) / data.delta; }

SolitonContext make_context(ModelPtr model, std::optional<ParacontactStructure> structure,
                            SolitonData data) {
    if (!model) throw SemanticError("a model is required", "soliton");
    if (data.z.model() != model)
        throw SemanticError("potential field lives on a different model", "soliton");
    if (data.delta.is_zero())
        throw SemanticError("delta must not be identically zero", "soliton");
    if (structure && structure->model() != model)
        throw SemanticError("structure lives on a different model", "soliton");

    CurvatureData curv = curvature(model);
    SolitonContext ctx{std::move(model),
                       std::move(structure),
                       std::nullopt,
                       std::move(curv),
                       std::move(data),
                       false,
                       false};
    if (ctx.structure) ctx.cls = classify(*ctx.structure, ctx.curv);
    ctx.soliton_ok = metric_soliton_tensor(ctx).is_zero();
    if (ctx.data.potential_u)
        ctx.gradient_ok =
            gradient_soliton_tensor(ctx).is_zero() &&
            ctx.data.z.minus(gradient(ctx.model, *ctx.data.potential_u)).is_zero();
    return ctx;
}

CheckReport soliton_residual(const SolitonContext& ctx) {
    CheckReport rep;
    rep.id = "soliton equation";
    rep.model = ctx.model;
    rep.require_zero("(delta/2) L_Z g - (r - lambda) g", metric_soliton_tensor(ctx));
    rep.add_derived("r", ctx.curv.r);
    rep.add_derived("lambda", ctx.data.lambda);
    rep.add_derived("(r - lambda)/delta", ctx.w());
    rep.note = soliton_family(ctx);
    return rep;
}

CheckReport gradient_soliton_residual(const SolitonContext& ctx) {
    if (!ctx.data.potential_u)
        return CheckReport::hypothesis_not_satisfied("gradient soliton equation",
                                                     "gradient data (potential u) not provided");
    CheckReport rep;
    rep.id = "gradient soliton equation";
    rep.model = ctx.model;
    rep.require_zero("Z - grad u",
                     ctx.data.z.minus(gradient(ctx.model, *ctx.data.potential_u)));
    rep.require_zero("delta Hess u - (r - lambda) g", gradient_soliton_tensor(ctx));
    if (rep.passed()) {
        rep.require_zero("R(X,Y) grad u - X(w) Y + Y(w) X", gl1_tensor(ctx));
        rep.require_zero("S(Y, grad u) + (dim - 1) Y(w)", gl2_tensor(ctx));
    }
    rep.add_derived("r", ctx.curv.r);
    rep.add_derived("lambda", ctx.data.lambda);
    rep.add_derived("(r - lambda)/delta", ctx.w());
    rep.note = soliton_family(ctx);
    return rep;
}

CheckReport solve_lambda(const CurvatureData& curv, const TensorField& z,
                         const ScalarExpr& delta) {
    if (delta.is_zero())
        throw SemanticError("delta must not be identically zero", "soliton");
    const ModelPtr& model = curv.conn.model;
    const std::size_t n = model->dim();
    CheckReport rep;
    rep.id = "solve lambda";
    rep.model = model;

    const TensorField g = metric_tensor(model);
    const TensorField lhs = lie_derivative(z, g).scaled(delta / kTwo);

    std::optional<ScalarExpr> lambda;
    for (std::size_t i = 0; i < n && !lambda; ++i)
        for (std::size_t j = 0; j < n && !lambda; ++j)
            if (!g(i, j).is_zero()) lambda = curv.r - lhs(i, j) / g(i, j);
    if (!lambda) throw SemanticError("degenerate metric", "soliton"); // cannot happen

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr res = lhs(i, j) - (curv.r - *lambda) * g(i, j);
            if (!res.is_zero()) {
                rep.require_zero("component " + index_witness({i, j}) +
                                     " of (delta/2) L_Z g - (r - lambda) g",
                                 std::move(res));
                rep.note = "no single lambda satisfies the equation; first incompatible "
                           "component is " +
                           index_witness({i, j});
                return rep;
            }
        }

    rep.add_derived("lambda", *lambda);
    rep.note = to_string(classify_soliton(*lambda));
    return rep;
}

std::string to_string(SolitonKind k) {
    switch (k) {
    case SolitonKind::Expanding: return "expanding";
    case SolitonKind::Steady: return "steady";
    case SolitonKind::Shrinking: return "shrinking";
    case SolitonKind::Indefinite: return "indefinite";
    }
    return "unknown";
}

SolitonKind classify_soliton(const ScalarExpr& lambda) {
    const auto q = lambda.as_rational();
    if (!q) return SolitonKind::Indefinite;
    if (*q < 0) return SolitonKind::Shrinking;
    if (*q > 0) return SolitonKind::Expanding;
    return SolitonKind::Steady;
}

std::string soliton_family(const SolitonContext& ctx) {
    const bool lambda_const = is_differentially_constant(ctx.data.lambda, ctx.model->symbols());
    std::string base;
    if (!lambda_const) base = "delta-almost Yamabe soliton";
    else if (ctx.data.delta.is_one()) base = "Yamabe soliton";
    else base = "delta-Yamabe soliton";
    return ctx.data.potential_u ? "gradient " + base : base;
}

Extraction conformal_coefficient(const ModelPtr& model, const TensorField& z) {
    Extraction out;
    out.report.id = "conformal coefficient";
    out.report.model = model;
    const std::size_t n = model->dim();
    const TensorField g = metric_tensor(model);
    const TensorField lzg = lie_derivative(z, g);

    std::optional<ScalarExpr> rho;
    for (std::size_t i = 0; i < n && !rho; ++i)
        for (std::size_t j = 0; j < n && !rho; ++j)
            if (!g(i, j).is_zero()) rho = lzg(i, j) / (kTwo * g(i, j));
    if (!rho) throw SemanticError("degenerate metric", "conformal coefficient");
    out.report.require_zero("L_Z g - 2 rho g", lzg.minus(g.scaled(kTwo * *rho)));
    if (out.report.passed()) {
        out.value = rho;
        out.report.add_derived("rho", *rho);
    } else {
        out.report.note = "L_Z g is not proportional to g";
    }
    return out;
}

Extraction contact_transformation_sigma(const ParacontactStructure& s,
                                        const ConnectionData& conn, const TensorField& z) {
    Extraction out;
    out.report.id = "contact transformation";
    out.report.model = s.model();
    const ModelPtr& model = s.model();
    const std::size_t n = model->dim();
    const TensorField leta = lie_derivative(z, s.eta());

    std::optional<ScalarExpr> sigma;
    for (std::size_t i = 0; i < n && !sigma; ++i)
        if (!s.eta()(i).is_zero()) sigma = leta(i) / s.eta()(i);
    if (!sigma) {
        out.report.status = CheckStatus::Fail;
        out.report.note = "eta vanishes identically";
        return out;
    }
    out.report.require_zero("L_Z eta - sigma eta", leta.minus(s.eta().scaled(*sigma)));
    if (!out.report.passed()) {
        out.report.note = "L_Z eta is not proportional to eta";
        return out;
    }
    out.value = sigma;
    out.report.add_derived("sigma", *sigma);
    if (n % 2 == 1) {
        const ScalarExpr m = ScalarExpr::integer(static_cast<long>((n - 1) / 2));
        out.report.record("div Z - (m + 1) sigma",
                          divergence(conn, z) - (m + ScalarExpr::integer(1)) * *sigma);
    }
    return out;
}

ScalarExpr contact_volume_top(const ParacontactStructure& s) {
    const ModelPtr& model = s.model();
    const std::size_t n = model->dim();
    if (n % 2 == 0) return ScalarExpr();
    const std::size_t m = (n - 1) / 2;
    const TensorField deta = exterior_derivative(s.eta());

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ScalarExpr total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        ScalarExpr term = s.eta()(perm[0]);
        for (std::size_t t = 0; t < m && !term.is_zero(); ++t)
            term = term * deta(perm[1 + 2 * t], perm[2 + 2 * t]);
        total += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::L1a, IdentityId::L1b, IdentityId::L1c, IdentityId::T2,
        IdentityId::T3,  IdentityId::T4,  IdentityId::T5,  IdentityId::T6,
        IdentityId::T7,  IdentityId::T8,  IdentityId::T9,  IdentityId::GL1,
        IdentityId::GL2};
    return ids;
}

std::string to_string(IdentityId id) {
    switch (id) {
    case IdentityId::L1a: return "L1a";
    case IdentityId::L1b: return "L1b";
    case IdentityId::L1c: return "L1c";
    case IdentityId::T2: return "T2";
    case IdentityId::T3: return "T3";
    case IdentityId::T4: return "T4";
    case IdentityId::T5: return "T5";
    case IdentityId::T6: return "T6";
    case IdentityId::T7: return "T7";
    case IdentityId::T8: return "T8";
    case IdentityId::T9: return "T9";
    case IdentityId::GL1: return "GL1";
    case IdentityId::GL2: return "GL2";
    }
    return "?";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (IdentityId id : all_identities())
        if (to_string(id) == name) return id;
    return std::nullopt;
}

namespace {

// Shorthands shared by the identity bodies; only constructed once the
// structural gates have been established.
struct IdentityEnv {
    const SolitonContext& ctx;
    const ModelPtr& model;
    std::size_t n;
    const TensorField& z;
    ScalarExpr lambda, delta, r, w;

    explicit IdentityEnv(const SolitonContext& c)
        : ctx(c), model(c.model), n(c.model->dim()), z(c.data.z), lambda(c.data.lambda),
          delta(c.data.delta), r(c.curv.r), w(c.w()) {}

    const TensorField& xi() const { return ctx.structure->xi(); }
    const TensorField& eta() const { return ctx.structure->eta(); }
    const TensorField& phi() const { return ctx.structure->phi(); }
};

CheckReport check_l1a(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "L1a";
    rep.require_zero("eta(L_Z xi) + (r - lambda)/delta",
                     one_form_on(e.eta(), lie_bracket(e.z, e.xi())) + e.w);
    rep.add_derived("(r - lambda)/delta", e.w);
    return rep;
}

CheckReport check_l1b(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "L1b";
    rep.require_zero("(L_Z eta)(xi) - (r - lambda)/delta",
                     one_form_on(lie_derivative(e.z, e.eta()), e.xi()) - e.w);
    rep.add_derived("(r - lambda)/delta", e.w);
    return rep;
}

CheckReport check_l1c(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "L1c";
    const TensorField leta = lie_derivative(e.z, e.eta());
    const TensorField lxi_low = lower_index(lie_bracket(e.z, e.xi()));
    TensorField res(e.model, {0, 1});
    for (std::size_t i = 0; i < e.n; ++i)
        res(i) = leta(i) - lxi_low(i) - kTwo * e.w * e.eta()(i);
    rep.require_zero("(L_Z eta)(X) - g(X, L_Z xi) - 2((r - lambda)/delta) eta(X)",
                     std::move(res));
    rep.add_derived("(r - lambda)/delta", e.w);
    return rep;
}

CheckReport check_t2(const IdentityEnv& e) {
    Extraction ext = contact_transformation_sigma(*e.ctx.structure, e.ctx.curv.conn, e.z);
    if (!ext.value)
        return CheckReport::hypothesis_not_satisfied(
            "T2", "Z is not an infinitesimal contact transformation (L_Z eta is not "
                  "proportional to eta)");
    CheckReport rep;
    rep.id = "T2";
    const ScalarExpr& sigma = *ext.value;
    rep.require_zero("sigma - (r - lambda)/delta", sigma - e.w);
    rep.require_zero("div Z - dim (r - lambda)/delta",
                     divergence(e.ctx.curv.conn, e.z) - dim_expr(e.n) * e.w);
    rep.add_derived("sigma", sigma);
    rep.add_flag("Z is Killing", (e.r - e.lambda).is_zero());
    return rep;
}

CheckReport check_t3(const IdentityEnv& e) {
    const ScalarExpr f = one_form_on(e.eta(), e.z);
    if (!e.z.minus(e.xi().scaled(f)).is_zero())
        return CheckReport::hypothesis_not_satisfied("T3", "Z is not collinear with xi");
    if (f.is_zero())
        return CheckReport::hypothesis_not_satisfied("T3", "collinear factor vanishes identically");

    CheckReport rep;
    rep.id = "T3";
    const TensorField h = h_operator(*e.ctx.structure);
    const ModelPtr& model = e.model;
    std::vector<ScalarExpr> df(e.n);
    for (std::size_t i = 0; i < e.n; ++i) df[i] = model->derive(f, i);

    TensorField res(model, {0, 2});
    for (std::size_t i = 0; i < e.n; ++i)
        for (std::size_t j = 0; j < e.n; ++j) {
            ScalarExpr phih; // g(phi h X1, X2)
            for (std::size_t l = 0; l < e.n; ++l) {
                ScalarExpr ph;
                for (std::size_t m = 0; m < e.n; ++m) ph += e.phi()(l, m) * h(m, i);
                phih += ph * model->metric(l, j);
            }
            res(i, j) = e.delta * (df[i] * e.eta()(j) + df[j] * e.eta()(i) + kTwo * f * phih) -
                        kTwo * (e.r - e.lambda) * model->metric(i, j);
        }
    rep.require_zero("delta[(X1 f) eta(X2) + (X2 f) eta(X1) + 2 f g(phi h X1, X2)] - "
                     "2 (r - lambda) g(X1, X2)",
                     std::move(res));
    rep.require_zero("phi grad f", apply_operator(e.phi(), gradient(model, f)));
    rep.require_zero("grad f - (xi f) xi",
                     gradient(model, f).minus(e.xi().scaled(directional(e.xi(), f))));
    rep.add_derived("f", f);
    return rep;
}

CheckReport check_t4(const IdentityEnv& e, const IdentityOptions& opts) {
    CheckReport rep;
    rep.id = "T4";
    const ConnectionData& conn = e.ctx.curv.conn;
    const TensorField nxz = covariant_derivative_along(conn, e.xi(), e.z);
    const TensorField nxnxz = covariant_derivative_along(conn, e.xi(), nxz);
    const TensorField nxx = covariant_derivative_along(conn, e.xi(), e.xi());
    const TensorField nnz = covariant_derivative_along(conn, nxx, e.z);

    TensorField rzxx(e.model, {1, 0}); // R(Z, xi) xi
    for (std::size_t l = 0; l < e.n; ++l) {
        ScalarExpr acc;
        for (std::size_t i = 0; i < e.n; ++i)
            for (std::size_t j = 0; j < e.n; ++j)
                for (std::size_t k = 0; k < e.n; ++k)
                    acc += e.ctx.curv.riem(l, i, j, k) * e.z(i) * e.xi()(j) * e.xi()(k);
        rzxx(l) = acc;
    }

    const ScalarExpr xil = directional(e.xi(), e.lambda);
    const ScalarExpr xid = directional(e.xi(), e.delta);
    const TensorField vec = nxnxz.minus(nnz).minus(rzxx);
    rep.require_zero("delta g(nabla_xi nabla_xi Z - nabla_{nabla_xi xi} Z - R(Z,xi)xi, xi)"
                     " + xi(lambda) + ((r - lambda)/delta) xi(delta)",
                     e.delta * inner(vec, e.xi()) + xil + e.w * xid);
    rep.add_flag("Jacobi condition checked", opts.assume_jacobi);
    if (opts.assume_jacobi) {
        rep.require_zero("nabla_xi nabla_xi Z - R(Z,xi)xi", nxnxz.minus(rzxx));
        rep.require_zero("xi(lambda) + ((r - lambda)/delta) xi(delta)", xil + e.w * xid);
        const bool lambda_is_delta = equivalent(e.lambda, e.delta);
        rep.add_flag("lambda = delta", lambda_is_delta);
        if (lambda_is_delta) rep.require_zero("r xi(lambda)", e.r * xil);
    } else {
        rep.note = "Jacobi condition not checked; enable it to verify the consequences "
                   "along xi";
    }
    return rep;
}

CheckReport check_t5(const IdentityEnv& e) {
    const ScalarExpr sigma = one_form_on(e.eta(), e.z);
    if (!e.z.minus(e.xi().scaled(sigma)).is_zero())
        return CheckReport::hypothesis_not_satisfied("T5", "Z is not collinear with xi");
    if (sigma.is_zero())
        return CheckReport::hypothesis_not_satisfied("T5",
                                                     "collinear factor vanishes identically");
    CheckReport rep;
    rep.id = "T5";
    const ScalarExpr xis = directional(e.xi(), sigma);
    rep.require_zero("grad sigma - (xi sigma) xi",
                     gradient(e.model, sigma).minus(e.xi().scaled(xis)));
    const ScalarExpr omega = contact_volume_top(*e.ctx.structure);
    rep.require_zero("(xi sigma) Omega", xis * omega);
    rep.add_derived("sigma", sigma);
    rep.add_derived("Omega(e_1,...,e_n)", omega);
    rep.add_flag("Omega nonzero", !omega.is_zero());
    rep.add_flag("sigma constant", is_differentially_constant(sigma, e.model->symbols()));
    return rep;
}

CheckReport check_t6(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "T6";
    const ScalarExpr v = e.w - *e.ctx.data.potential_u;
    const ScalarExpr xiv = directional(e.xi(), v);
    TensorField res(e.model, {0, 1});
    for (std::size_t i = 0; i < e.n; ++i)
        res(i) = e.model->derive(v, i) - xiv * e.eta()(i);
    rep.require_zero("d(w - u) - xi(w - u) eta", std::move(res));
    rep.add_derived("w - u", v);
    rep.add_flag("w - u constant", is_differentially_constant(v, e.model->symbols()));
    return rep;
}

CheckReport check_t7(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "T7";
    const ScalarExpr k = *e.ctx.cls->k;
    const std::optional<ScalarExpr>& mu = e.ctx.cls->mu;
    const ScalarExpr& u = *e.ctx.data.potential_u;
    const TensorField h = h_operator(*e.ctx.structure);
    const ScalarExpr rl = e.r - e.lambda;
    const ScalarExpr d2 = e.delta * e.delta;

    std::vector<ScalarExpr> drl(e.n), dd(e.n), du(e.n), hu(e.n);
    for (std::size_t i = 0; i < e.n; ++i) {
        drl[i] = e.model->derive(rl, i);
        dd[i] = e.model->derive(e.delta, i);
        du[i] = e.model->derive(u, i);
        ScalarExpr acc; // (h X_i)(u)
        for (std::size_t m = 0; m < e.n; ++m) acc += h(m, i) * du[m];
        hu[i] = acc;
    }

    TensorField res(e.model, {0, 2});
    for (std::size_t i = 0; i < e.n; ++i)
        for (std::size_t j = 0; j < e.n; ++j) {
            ScalarExpr t = e.delta * (drl[i] * e.eta()(j) - drl[j] * e.eta()(i)) -
                           rl * (dd[i] * e.eta()(j) - dd[j] * e.eta()(i)) +
                           d2 * k * (du[i] * e.eta()(j) - du[j] * e.eta()(i));
            if (mu) t += d2 * *mu * (hu[i] * e.eta()(j) - hu[j] * e.eta()(i));
            res(i, j) = t;
        }
    rep.require_zero("delta d(r - lambda) ^ eta - (r - lambda) d(delta) ^ eta + "
                     "delta^2 k du ^ eta + delta^2 mu (h .)(u) ^ eta",
                     std::move(res));
    rep.add_derived("k", k);
    if (mu) rep.add_derived("mu", *mu);
    else rep.note = "mu indeterminate (h = 0); its term vanishes identically";
    rep.add_flag("Z parallel to xi",
                 e.z.minus(e.xi().scaled(one_form_on(e.eta(), e.z))).is_zero());
    return rep;
}

CheckReport check_t8(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "T8";
    const ScalarExpr& u = *e.ctx.data.potential_u;
    const ScalarExpr xiu = directional(e.xi(), u);
    rep.require_zero("grad u - (xi u) xi",
                     gradient(e.model, u).minus(e.xi().scaled(xiu)));
    rep.add_derived("xi(u)", xiu);
    rep.add_flag("xi(u) = 0", xiu.is_zero());
    rep.add_flag("u constant", is_differentially_constant(u, e.model->symbols()));
    return rep;
}

CheckReport check_t9(const IdentityEnv& e) {
    Extraction ext = conformal_coefficient(e.model, e.z);
    if (!ext.value)
        return CheckReport::hypothesis_not_satisfied(
            "T9", "Z is not conformal (L_Z g is not proportional to g)");
    CheckReport rep;
    rep.id = "T9";
    const ScalarExpr& rho = *ext.value;
    rep.require_zero("r - lambda - rho delta", e.r - e.lambda - rho * e.delta);
    rep.require_zero("rho - (L_Z eta)(xi)",
                     rho - one_form_on(lie_derivative(e.z, e.eta()), e.xi()));
    rep.require_zero("rho + eta(L_Z xi)",
                     rho + one_form_on(e.eta(), lie_bracket(e.z, e.xi())));
    rep.add_derived("rho", rho);
    return rep;
}

CheckReport check_gl1(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "GL1";
    rep.require_zero("R(X,Y) grad u - X(w) Y + Y(w) X", gl1_tensor(e.ctx));
    rep.add_derived("(r - lambda)/delta", e.w);
    return rep;
}

CheckReport check_gl2(const IdentityEnv& e) {
    CheckReport rep;
    rep.id = "GL2";
    rep.require_zero("S(Y, grad u) + (dim - 1) Y(w)", gl2_tensor(e.ctx));
    rep.add_derived("(r - lambda)/delta", e.w);
    return rep;
}

} // namespace

CheckReport identity_check(const SolitonContext& ctx, IdentityId id,
                           const IdentityOptions& opts) {
    const std::string name = to_string(id);
    auto hypo = [&](std::string why) {
        CheckReport rep = CheckReport::hypothesis_not_satisfied(name, std::move(why));
        rep.model = ctx.model;
        return rep;
    };

    const bool needs_structure = id != IdentityId::GL1 && id != IdentityId::GL2;
    if (needs_structure) {
        if (!ctx.structure) return hypo("no almost paracontact structure declared");
        if (!ctx.structure->axioms_hold()) return hypo("structure axioms do not hold");
    }

    const bool needs_gradient = id == IdentityId::T6 || id == IdentityId::T7 ||
                                id == IdentityId::T8 || id == IdentityId::GL1 ||
                                id == IdentityId::GL2;
    if (needs_gradient) {
        if (!ctx.data.potential_u) return hypo("gradient data (potential u) not provided");
        if (!ctx.gradient_ok) return hypo("gradient soliton equation does not hold");
    } else if (!ctx.soliton_ok) {
        return hypo("soliton equation does not hold");
    }

    if (needs_structure && ctx.cls) {
        switch (id) {
        case IdentityId::T2:
        case IdentityId::T3:
            if (!ctx.cls->paracontact_metric)
                return hypo("not a paracontact metric structure");
            break;
        case IdentityId::T5:
        case IdentityId::T6:
            if (!ctx.cls->k_paracontact) return hypo("not K-paracontact");
            break;
        case IdentityId::T7:
            if (!ctx.cls->k_mu_nullity)
                return hypo("xi does not lie in a (k, mu) nullity distribution");
            break;
        case IdentityId::T8:
            if (!ctx.cls->para_sasakian) return hypo("not para-Sasakian");
            break;
        case IdentityId::T9:
            if (!ctx.cls->para_cosymplectic) return hypo("not para-cosymplectic");
            break;
        default:
            break;
        }
    }

    IdentityEnv env(ctx);
    CheckReport rep;
    switch (id) {
    case IdentityId::L1a: rep = check_l1a(env); break;
    case IdentityId::L1b: rep = check_l1b(env); break;
    case IdentityId::L1c: rep = check_l1c(env); break;
    case IdentityId::T2: rep = check_t2(env); break;
    case IdentityId::T3: rep = check_t3(env); break;
    case IdentityId::T4: rep = check_t4(env, opts); break;
    case IdentityId::T5: rep = check_t5(env); break;
    case IdentityId::T6: rep = check_t6(env); break;
    case IdentityId::T7: rep = check_t7(env); break;
    case IdentityId::T8: rep = check_t8(env); break;
    case IdentityId::T9: rep = check_t9(env); break;
    case IdentityId::GL1: rep = check_gl1(env); break;
    case IdentityId::GL2: rep = check_gl2(env); break;
    }
    rep.model = ctx.model;
    return rep;
}

} // namespace parayam
