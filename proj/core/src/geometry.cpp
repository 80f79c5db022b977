#include "parayam/geometry.hpp"

namespace parayam {

namespace {

void require_valence(const TensorField& t, Valence v, const char* what) {
    if (!(t.valence() == v)) throw SemanticError(std::string(what) + ": unsupported valence");
}

} // namespace

ConnectionData levi_civita(const ModelPtr& model) {
    const std::size_t n = model->dim();
    ConnectionData conn{model, std::vector<ScalarExpr>(n * n * n)};

    // Koszul formula on the preferred basis:
    // 2 g(nabla_i e_j, e_k) = e_i g_jk + e_j g_ik - e_k g_ij
    //                         + sum_l (c^l_ij g_lk - c^l_ik g_lj - c^l_jk g_li)
    const ScalarExpr half = ScalarExpr::constant(Rational(1, 2));
    std::vector<ScalarExpr> koszul(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ScalarExpr rhs = model->derive(model->metric(j, k), i) +
                                 model->derive(model->metric(i, k), j) -
                                 model->derive(model->metric(i, j), k);
                if (model->mode() == FrameMode::Frame)
                    for (std::size_t l = 0; l < n; ++l)
                        rhs += model->bracket_coeff(i, j, l) * model->metric(l, k) -
                               model->bracket_coeff(i, k, l) * model->metric(l, j) -
                               model->bracket_coeff(j, k, l) * model->metric(l, i);
                koszul[(i * n + j) * n + k] = half * rhs;
            }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ScalarExpr gamma;
                for (std::size_t m = 0; m < n; ++m)
                    gamma += model->metric_inverse(k, m) * koszul[(i * n + j) * n + m];
                conn.gamma[(k * n + i) * n + j] = gamma;
            }

    // The defining properties are cheap to re-verify and guard the whole
    // downstream pipeline, so check them before handing the data out.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const ScalarExpr torsion =
                    conn.coeff(k, i, j) - conn.coeff(k, j, i) - model->bracket_coeff(i, j, k);
                if (!torsion.is_zero())
                    throw Error("internal: Koszul connection has torsion");
            }
            for (std::size_t k = 0; k < n; ++k) {
                ScalarExpr compat = model->derive(model->metric(j, k), i);
                for (std::size_t m = 0; m < n; ++m)
                    compat -= conn.coeff(m, i, j) * model->metric(m, k) +
                              conn.coeff(m, i, k) * model->metric(j, m);
                if (!compat.is_zero())
                    throw Error("internal: Koszul connection is not metric");
            }
        }

    return conn;
}

TensorField riemann(const ConnectionData& conn) {
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    TensorField r(model, Valence{1, 3});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue; // antisymmetric in (i,j); diagonal stays zero
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    ScalarExpr comp = model->derive(conn.coeff(l, j, k), i) -
                                      model->derive(conn.coeff(l, i, k), j);
                    for (std::size_t m = 0; m < n; ++m) {
                        comp += conn.coeff(m, j, k) * conn.coeff(l, i, m) -
                                conn.coeff(m, i, k) * conn.coeff(l, j, m);
                        comp -= model->bracket_coeff(i, j, m) * conn.coeff(l, m, k);
                    }
                    r(l, i, j, k) = comp;
                }
        }
    return r;
}

TensorField ricci(const TensorField& riem) {
    require_valence(riem, Valence{1, 3}, "ricci");
    const std::size_t n = riem.dim();
    TensorField s(riem.model(), Valence{0, 2});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            ScalarExpr comp;
            for (std::size_t i = 0; i < n; ++i) comp += riem(i, i, j, k);
            s(j, k) = comp;
        }
    return s;
}

TensorField ricci_operator(const TensorField& ric) {
    require_valence(ric, Valence{0, 2}, "ricci_operator");
    const ModelPtr& model = ric.model();
    const std::size_t n = ric.dim();
    TensorField q(model, Valence{1, 1});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr comp;
            for (std::size_t m = 0; m < n; ++m)
                comp += model->metric_inverse(i, m) * ric(m, j);
            q(i, j) = comp;
        }
    return q;
}

ScalarExpr scalar_curvature(const TensorField& ric) {
    require_valence(ric, Valence{0, 2}, "scalar_curvature");
    const ModelPtr& model = ric.model();
    const std::size_t n = ric.dim();
    ScalarExpr r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
            r += model->metric_inverse(i, m) * ric(m, i);
    return r;
}

CurvatureData curvature(const ModelPtr& model) {
    ConnectionData conn = levi_civita(model);
    TensorField riem_t = riemann(conn);
    TensorField ric_t = ricci(riem_t);
    TensorField q_t = ricci_operator(ric_t);
    ScalarExpr r = scalar_curvature(ric_t);
    return CurvatureData{std::move(conn), std::move(riem_t), std::move(ric_t), std::move(q_t),
                         std::move(r)};
}

TensorField basis_vector(const ModelPtr& model, std::size_t i) {
    TensorField e(model, Valence{1, 0});
    e(i) = ScalarExpr::integer(1);
    return e;
}

TensorField metric_tensor(const ModelPtr& model) {
    const std::size_t n = model->dim();
    TensorField g(model, Valence{0, 2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = model->metric(i, j);
    return g;
}

TensorField identity_operator(const ModelPtr& model) {
    const std::size_t n = model->dim();
    TensorField id(model, Valence{1, 1});
    for (std::size_t i = 0; i < n; ++i) id(i, i) = ScalarExpr::integer(1);
    return id;
}

ScalarExpr inner(const TensorField& x, const TensorField& y) {
    require_same_model(x, y);
    require_valence(x, Valence{1, 0}, "inner");
    require_valence(y, Valence{1, 0}, "inner");
    const ModelPtr& model = x.model();
    const std::size_t n = x.dim();
    ScalarExpr out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out += x(i) * model->metric(i, j) * y(j);
    return out;
}

ScalarExpr one_form_on(const TensorField& w, const TensorField& x) {
    require_same_model(w, x);
    require_valence(w, Valence{0, 1}, "one_form_on");
    require_valence(x, Valence{1, 0}, "one_form_on");
    ScalarExpr out;
    for (std::size_t i = 0; i < w.dim(); ++i) out += w(i) * x(i);
    return out;
}

TensorField apply_operator(const TensorField& a, const TensorField& x) {
    require_same_model(a, x);
    require_valence(a, Valence{1, 1}, "apply_operator");
    require_valence(x, Valence{1, 0}, "apply_operator");
    const std::size_t n = x.dim();
    TensorField out(x.model(), Valence{1, 0});
    for (std::size_t i = 0; i < n; ++i) {
        ScalarExpr comp;
        for (std::size_t j = 0; j < n; ++j) comp += a(i, j) * x(j);
        out(i) = comp;
    }
    return out;
}

TensorField lower_index(const TensorField& x) {
    require_valence(x, Valence{1, 0}, "lower_index");
    const ModelPtr& model = x.model();
    const std::size_t n = x.dim();
    TensorField out(model, Valence{0, 1});
    for (std::size_t i = 0; i < n; ++i) {
        ScalarExpr comp;
        for (std::size_t j = 0; j < n; ++j) comp += model->metric(i, j) * x(j);
        out(i) = comp;
    }
    return out;
}

TensorField tensor_product_form(const TensorField& w1, const TensorField& w2) {
    require_same_model(w1, w2);
    require_valence(w1, Valence{0, 1}, "tensor_product_form");
    require_valence(w2, Valence{0, 1}, "tensor_product_form");
    const std::size_t n = w1.dim();
    TensorField out(w1.model(), Valence{0, 2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = w1(i) * w2(j);
    return out;
}

ScalarExpr directional(const TensorField& z, const ScalarExpr& f) {
    require_valence(z, Valence{1, 0}, "directional");
    const ModelPtr& model = z.model();
    ScalarExpr out;
    for (std::size_t i = 0; i < z.dim(); ++i)
        if (!z(i).is_zero()) out += z(i) * model->derive(f, i);
    return out;
}

TensorField lie_bracket(const TensorField& x, const TensorField& y) {
    require_same_model(x, y);
    require_valence(x, Valence{1, 0}, "lie_bracket");
    require_valence(y, Valence{1, 0}, "lie_bracket");
    const ModelPtr& model = x.model();
    const std::size_t n = x.dim();
    TensorField out(model, Valence{1, 0});
    for (std::size_t k = 0; k < n; ++k) {
        ScalarExpr comp;
        for (std::size_t i = 0; i < n; ++i)
            comp += x(i) * model->derive(y(k), i) - y(i) * model->derive(x(k), i);
        if (model->mode() == FrameMode::Frame)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const ScalarExpr& c = model->bracket_coeff(i, j, k);
                    if (!c.is_zero()) comp += x(i) * y(j) * c;
                }
        out(k) = comp;
    }
    return out;
}

TensorField lie_derivative(const TensorField& z, const TensorField& t) {
    require_same_model(z, t);
    require_valence(z, Valence{1, 0}, "lie_derivative");
    const ModelPtr& model = z.model();
    const std::size_t n = z.dim();
    const Valence v = t.valence();

    if (v == Valence{1, 0}) return lie_bracket(z, t);

    // Brackets of Z with the basis fields, shared by all covariant slots.
    std::vector<TensorField> zb;
    zb.reserve(n);
    for (std::size_t i = 0; i < n; ++i) zb.push_back(lie_bracket(z, basis_vector(model, i)));

    if (v == Valence{0, 1}) {
        TensorField out(model, Valence{0, 1});
        for (std::size_t i = 0; i < n; ++i) {
            ScalarExpr comp = directional(z, t(i));
            for (std::size_t k = 0; k < n; ++k) comp -= t(k) * zb[i](k);
            out(i) = comp;
        }
        return out;
    }
    if (v == Valence{0, 2}) {
        TensorField out(model, Valence{0, 2});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ScalarExpr comp = directional(z, t(i, j));
                for (std::size_t k = 0; k < n; ++k)
                    comp -= zb[i](k) * t(k, j) + zb[j](k) * t(i, k);
                out(i, j) = comp;
            }
        return out;
    }
    if (v == Valence{1, 1}) {
        // (L_Z A)(X) = [Z, A X] - A [Z, X]
        TensorField out(model, Valence{1, 1});
        for (std::size_t j = 0; j < n; ++j) {
            TensorField col(model, Valence{1, 0});
            for (std::size_t i = 0; i < n; ++i) col(i) = t(i, j);
            const TensorField first = lie_bracket(z, col);
            const TensorField second = apply_operator(t, zb[j]);
            for (std::size_t i = 0; i < n; ++i) out(i, j) = first(i) - second(i);
        }
        return out;
    }
    throw SemanticError("lie_derivative: unsupported valence");
}

TensorField exterior_derivative(const TensorField& form) {
    const ModelPtr& model = form.model();
    const std::size_t n = form.dim();
    const Valence v = form.valence();

    if (v == Valence{0, 1}) {
        TensorField out(model, Valence{0, 2});
        const ScalarExpr half = ScalarExpr::constant(Rational(1, 2));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                ScalarExpr comp = model->derive(form(j), i) - model->derive(form(i), j);
                for (std::size_t k = 0; k < n; ++k)
                    comp -= model->bracket_coeff(i, j, k) * form(k);
                out(i, j) = half * comp;
                out(j, i) = -out(i, j);
            }
        return out;
    }
    if (v == Valence{0, 2}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!equivalent(form(i, j), -form(j, i)))
                    throw SemanticError("exterior_derivative: form is not antisymmetric");
        TensorField out(model, Valence{0, 3});
        const ScalarExpr third = ScalarExpr::constant(Rational(1, 3));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    ScalarExpr comp = model->derive(form(j, k), i) -
                                      model->derive(form(i, k), j) +
                                      model->derive(form(i, j), k);
                    for (std::size_t m = 0; m < n; ++m)
                        comp -= model->bracket_coeff(i, j, m) * form(m, k) -
                                model->bracket_coeff(i, k, m) * form(m, j) +
                                model->bracket_coeff(j, k, m) * form(m, i);
                    out(i, j, k) = third * comp;
                }
        return out;
    }
    throw SemanticError("exterior_derivative: unsupported valence");
}

TensorField gradient(const ModelPtr& model, const ScalarExpr& u) {
    const std::size_t n = model->dim();
    TensorField out(model, Valence{1, 0});
    for (std::size_t i = 0; i < n; ++i) {
        ScalarExpr comp;
        for (std::size_t j = 0; j < n; ++j)
            comp += model->metric_inverse(i, j) * model->derive(u, j);
        out(i) = comp;
    }
    return out;
}

TensorField hessian(const ConnectionData& conn, const ScalarExpr& u) {
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    TensorField out(model, Valence{0, 2});
    std::vector<ScalarExpr> du(n);
    for (std::size_t i = 0; i < n; ++i) du[i] = model->derive(u, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr comp = model->derive(du[j], i);
            for (std::size_t k = 0; k < n; ++k) comp -= conn.coeff(k, i, j) * du[k];
            out(i, j) = comp;
        }
    return out;
}

ScalarExpr divergence(const ConnectionData& conn, const TensorField& z) {
    require_valence(z, Valence{1, 0}, "divergence");
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    ScalarExpr out;
    for (std::size_t i = 0; i < n; ++i) {
        out += model->derive(z(i), i);
        for (std::size_t m = 0; m < n; ++m) out += conn.coeff(i, i, m) * z(m);
    }
    return out;
}

TensorField covariant_derivative_along(const ConnectionData& conn, const TensorField& x,
                                       const TensorField& w) {
    require_same_model(x, w);
    require_valence(x, Valence{1, 0}, "covariant_derivative_along");
    require_valence(w, Valence{1, 0}, "covariant_derivative_along");
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    TensorField out(model, Valence{1, 0});
    for (std::size_t k = 0; k < n; ++k) {
        ScalarExpr comp;
        for (std::size_t i = 0; i < n; ++i) {
            if (x(i).is_zero()) continue;
            ScalarExpr inner_sum = model->derive(w(k), i);
            for (std::size_t m = 0; m < n; ++m) inner_sum += conn.coeff(k, i, m) * w(m);
            comp += x(i) * inner_sum;
        }
        out(k) = comp;
    }
    return out;
}

TensorField covariant_derivative(const ConnectionData& conn, const TensorField& t) {
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    const Valence v = t.valence();
    TensorField out(model, Valence{v.up, v.down + 1});

    out.for_each_index([&](const std::vector<std::size_t>& index) {
        // index = (ups..., a, downs...)
        const std::size_t a = index[v.up];
        std::vector<std::size_t> base;
        base.reserve(v.rank());
        for (std::size_t s = 0; s < v.up; ++s) base.push_back(index[s]);
        for (std::size_t s = v.up + 1; s < index.size(); ++s) base.push_back(index[s]);

        ScalarExpr comp = model->derive(t.at(base), a);
        for (std::size_t slot = 0; slot < v.up; ++slot)
            for (std::size_t m = 0; m < n; ++m) {
                std::vector<std::size_t> swapped = base;
                swapped[slot] = m;
                comp += conn.coeff(base[slot], a, m) * t.at(swapped);
            }
        for (std::size_t slot = v.up; slot < v.rank(); ++slot)
            for (std::size_t m = 0; m < n; ++m) {
                std::vector<std::size_t> swapped = base;
                swapped[slot] = m;
                comp -= conn.coeff(m, a, base[slot]) * t.at(swapped);
            }
        out.at(index) = comp;
    });
    return out;
}

TensorField lie_derivative_connection(const ConnectionData& conn, const TensorField& z) {
    require_valence(z, Valence{1, 0}, "lie_derivative_connection");
    const ModelPtr& model = conn.model;
    const std::size_t n = model->dim();
    TensorField out(model, Valence{1, 2});
    for (std::size_t i = 0; i < n; ++i) {
        const TensorField ei = basis_vector(model, i);
        const TensorField zb_i = lie_bracket(z, ei);
        for (std::size_t j = 0; j < n; ++j) {
            const TensorField ej = basis_vector(model, j);
            TensorField nabla_ij(model, Valence{1, 0});
            for (std::size_t k = 0; k < n; ++k) nabla_ij(k) = conn.coeff(k, i, j);

            const TensorField term1 = lie_bracket(z, nabla_ij);
            const TensorField term2 = covariant_derivative_along(conn, zb_i, ej);
            const TensorField term3 =
                covariant_derivative_along(conn, ei, lie_bracket(z, ej));
            for (std::size_t k = 0; k < n; ++k)
                out(k, i, j) = term1(k) - term2(k) - term3(k);
        }
    }
    return out;
}

} // namespace parayam
