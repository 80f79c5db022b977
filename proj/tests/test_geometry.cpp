#include <doctest.h>

#include "parayam/builtin.hpp"
#include "parayam/geometry.hpp"
#include "parayam/parser.hpp"

#include <string>

using namespace parayam;

namespace {

ScalarExpr P(const ModelPtr& m, const char* s) { return parse_expr(s, m->symbols()); }

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("connection of example_5_1 matches the Koszul computation") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const ConnectionData conn = levi_civita(b.model);
    const ScalarExpr u = P(b.model, "u");

    // nabla_{e1} e2 = -e3, nabla_{e2} e1 = e3, nabla_{e1} e3 = -e2,
    // nabla_{e2} e3 = -e1, nabla_{e3} e1 = u e2, nabla_{e3} e2 = u e1.
    struct Entry {
        std::size_t k, i, j;
        ScalarExpr value;
    };
    const Entry expected[] = {
        {2, 0, 1, ScalarExpr::integer(-1)}, {2, 1, 0, ScalarExpr::integer(1)},
        {1, 0, 2, ScalarExpr::integer(-1)}, {0, 1, 2, ScalarExpr::integer(-1)},
        {1, 2, 0, u},                       {0, 2, 1, u},
    };
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                ScalarExpr want;
                for (const Entry& e : expected)
                    if (e.k == k && e.i == i && e.j == j) want = e.value;
                CAPTURE(k);
                CAPTURE(i);
                CAPTURE(j);
                CHECK((conn.coeff(k, i, j) - want).is_zero());
            }
}

TEST_CASE("curvature of example_5_1 matches the frozen table") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const CurvatureData curv = curvature(b.model);
    auto E = [&](const char* s) { return P(b.model, s); };

    // riem(l, i, j, k) is the e_l component of R(e_i, e_j) e_k.
    CHECK((curv.riem(0, 0, 1, 1) - E("2*u - 1")).is_zero());
    CHECK((curv.riem(1, 0, 1, 0) - E("2*u - 1")).is_zero());
    CHECK((curv.riem(2, 0, 2, 0) - E("1")).is_zero());
    CHECK((curv.riem(2, 1, 2, 1) - E("-1")).is_zero());
    CHECK((curv.riem(0, 0, 2, 2) - E("-1")).is_zero());
    CHECK((curv.riem(1, 1, 2, 2) - E("-1")).is_zero());

    CHECK((curv.ric(0, 0) - E("-2*u")).is_zero());
    CHECK((curv.ric(1, 1) - E("2*u")).is_zero());
    CHECK((curv.ric(2, 2) - E("-2")).is_zero());
    CHECK(curv.ric(0, 1).is_zero());
    CHECK(curv.ric(0, 2).is_zero());
    CHECK(curv.ric(1, 2).is_zero());

    // Q xi = -2 xi, and r = -2(2u + 1).
    CHECK((curv.q(2, 2) - E("-2")).is_zero());
    CHECK(curv.q(0, 2).is_zero());
    CHECK(curv.q(1, 2).is_zero());
    CHECK((curv.r - E("-2*(2*u + 1)")).is_zero());
}

TEST_CASE("curvature of example_5_2 matches the frozen table") {
    const ModelBundle b = make_builtin("builtin:example_5_2");
    const CurvatureData curv = curvature(b.model);
    auto E = [&](const char* s) { return P(b.model, s); };

    CHECK((curv.conn.coeff(2, 0, 0) - E("-3*z^2*exp(2*z^3)")).is_zero());
    CHECK((curv.conn.coeff(0, 0, 2) - E("3*z^2")).is_zero());
    CHECK((curv.conn.coeff(0, 2, 0) - E("3*z^2")).is_zero());
    CHECK((curv.conn.coeff(1, 1, 2) - E("-3*z^2")).is_zero());
    CHECK((curv.conn.coeff(1, 2, 1) - E("-3*z^2")).is_zero());
    CHECK((curv.conn.coeff(2, 1, 1) - E("3*z^2*exp(-2*z^3)")).is_zero());
    CHECK(curv.conn.coeff(0, 0, 0).is_zero());
    CHECK(curv.conn.coeff(2, 2, 2).is_zero());
    CHECK(curv.conn.coeff(2, 0, 1).is_zero());

    // Contracting the curvature by hand:
    //   S_xx = R(y,x)x.y + R(z,x)x.z, and similarly for the others.
    CHECK((curv.ric(0, 0) - E("-6*z*exp(2*z^3)")).is_zero());
    CHECK((curv.ric(1, 1) - E("6*z*exp(-2*z^3)")).is_zero());
    CHECK((curv.ric(2, 2) - E("-18*z^4")).is_zero());
    CHECK((curv.r - E("-18*z^4")).is_zero());
}

TEST_CASE("the flat chart model is flat") {
    const ModelBundle b = make_builtin("builtin:flat_para_cosymplectic");
    const CurvatureData curv = curvature(b.model);
    CHECK(curv.riem.is_zero());
    CHECK(curv.ric.is_zero());
    CHECK(curv.r.is_zero());
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(curv.conn.coeff(k, i, j).is_zero());
}

TEST_CASE("the connection is metric and torsion-free") {
    for (const char* uri :
         {"builtin:example_5_1", "builtin:example_5_2", "builtin:flat_para_cosymplectic"}) {
        CAPTURE(uri);
        const ModelBundle b = make_builtin(uri);
        const ConnectionData conn = levi_civita(b.model);
        const std::size_t n = b.model->dim();

        CHECK(covariant_derivative(conn, metric_tensor(b.model)).is_zero());

        TensorField torsion(b.model, {1, 2});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    torsion(k, i, j) = conn.coeff(k, i, j) - conn.coeff(k, j, i) -
                                       b.model->bracket_coeff(i, j, k);
        CHECK(torsion.is_zero());
    }
}

TEST_CASE("second Bianchi identity holds on example_5_1") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const CurvatureData curv = curvature(b.model);
    const TensorField dr = covariant_derivative(curv.conn, curv.riem);
    const std::size_t n = b.model->dim();
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        CHECK((dr(l, a, i, j, k) + dr(l, i, j, a, k) + dr(l, j, a, i, k))
                                  .is_zero());
}

TEST_CASE("gradient, hessian and divergence on the flat model") {
    const ModelBundle b = make_builtin("builtin:flat_para_cosymplectic");
    const ConnectionData conn = levi_civita(b.model);
    const ScalarExpr u = P(b.model, "(x^2 - y^2 + z^2)/2");

    const TensorField grad = gradient(b.model, u);
    CHECK((grad(0) - P(b.model, "x")).is_zero());
    CHECK((grad(1) - P(b.model, "y")).is_zero());
    CHECK((grad(2) - P(b.model, "z")).is_zero());

    const TensorField hess = hessian(conn, u);
    CHECK(hess.minus(metric_tensor(b.model)).is_zero());

    CHECK((divergence(conn, grad) - ScalarExpr::integer(3)).is_zero());
    CHECK((divergence(conn, b.vector_fields.at("euler")) - ScalarExpr::integer(3)).is_zero());
}

TEST_CASE("Lie brackets and Lie derivatives") {
    const ModelBundle b51 = make_builtin("builtin:example_5_1");
    const TensorField e1 = basis_vector(b51.model, 0);
    const TensorField e2 = basis_vector(b51.model, 1);
    const TensorField br = lie_bracket(e1, e2);
    CHECK(br(0).is_zero());
    CHECK(br(1).is_zero());
    CHECK((br(2) - ScalarExpr::integer(-2)).is_zero());

    const ModelBundle flat = make_builtin("builtin:flat_para_cosymplectic");
    const TensorField g = metric_tensor(flat.model);
    const TensorField lzg = lie_derivative(flat.vector_fields.at("euler"), g);
    CHECK(lzg.minus(g.scaled(ScalarExpr::integer(2))).is_zero());
}

TEST_CASE("exterior derivative uses the half convention") {
    const ModelBundle flat = make_builtin("builtin:flat_para_cosymplectic");
    TensorField w(flat.model, {0, 1});
    w(0) = P(flat.model, "x*y"); // w = x y dx
    const TensorField dw = exterior_derivative(w);
    CHECK((dw(0, 1) - P(flat.model, "-x/2")).is_zero());
    CHECK((dw(1, 0) - P(flat.model, "x/2")).is_zero());
    CHECK(dw(0, 2).is_zero());
    CHECK(exterior_derivative(dw).is_zero());

    // On the frame model, d eta of the structure one-form is the
    // fundamental two-form, with d(d eta) = 0 despite nonzero brackets.
    const ModelBundle b51 = make_builtin("builtin:example_5_1");
    const TensorField deta = exterior_derivative(b51.structure->eta());
    CHECK((deta(0, 1) - ScalarExpr::integer(1)).is_zero());
    CHECK((deta(1, 0) - ScalarExpr::integer(-1)).is_zero());
    CHECK(exterior_derivative(deta).is_zero());
}

TEST_CASE("Lie derivative of the connection satisfies the curvature formula") {
    // (L_Z nabla)(X, Y) = nabla^2_{X,Y} Z + R(Z, X) Y, verified componentwise.
    struct Case {
        const char* uri;
        const char* field;
    };
    for (const Case& c : {Case{"builtin:example_5_1", "xi"},
                          Case{"builtin:flat_para_cosymplectic", "K"}}) {
        CAPTURE(c.uri);
        const ModelBundle b = make_builtin(c.uri);
        const CurvatureData curv = curvature(b.model);
        const std::size_t n = b.model->dim();

        TensorField z(b.model, {1, 0});
        if (std::string(c.field) == "xi") {
            z = b.structure->xi();
        } else {
            z(0) = P(b.model, "2*z*x");
            z(1) = P(b.model, "2*z*y");
            z(2) = P(b.model, "z^2 - x^2 + y^2");
        }

        const TensorField lzc = lie_derivative_connection(curv.conn, z);
        const TensorField ddz = covariant_derivative(curv.conn, covariant_derivative(curv.conn, z));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ScalarExpr rzxy;
                    for (std::size_t m = 0; m < n; ++m)
                        rzxy += z(m) * curv.riem(k, m, i, j);
                    CHECK((lzc(k, i, j) - ddz(k, i, j) - rzxy).is_zero());
                }
    }
}

TEST_CASE("inner products and operators respect the metric") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const TensorField e1 = basis_vector(b.model, 0);
    const TensorField e2 = basis_vector(b.model, 1);
    const TensorField e3 = basis_vector(b.model, 2);
    CHECK((inner(e1, e1) - ScalarExpr::integer(1)).is_zero());
    CHECK((inner(e2, e2) - ScalarExpr::integer(-1)).is_zero());
    CHECK((inner(e3, e3) - ScalarExpr::integer(1)).is_zero());
    CHECK(inner(e1, e2).is_zero());

    const TensorField eta = b.structure->eta();
    CHECK((one_form_on(eta, e3) - ScalarExpr::integer(1)).is_zero());
    CHECK(one_form_on(eta, e1).is_zero());
    CHECK(lower_index(e3).minus(eta).is_zero());

    const TensorField phi_e1 = apply_operator(b.structure->phi(), e1);
    CHECK((phi_e1(1) - ScalarExpr::integer(1)).is_zero());
    CHECK(phi_e1(0).is_zero());

    const TensorField ee = tensor_product_form(eta, eta);
    CHECK((ee(2, 2) - ScalarExpr::integer(1)).is_zero());
    CHECK(ee(0, 2).is_zero());

    CHECK((directional(e3, P(b.model, "u"))).is_zero()); // u is a constant
}

} // TEST_SUITE
