#include <doctest.h>

#include "parayam/builtin.hpp"
#include "parayam/error.hpp"
#include "parayam/parser.hpp"
#include "parayam/soliton.hpp"

#include <algorithm>
#include <string>

using namespace parayam;

namespace {

ScalarExpr P(const ModelPtr& m, const char* s) { return parse_expr(s, m->symbols()); }

const TensorField* find_residual(const CheckReport& rep, const std::string& label) {
    for (const auto& item : rep.residuals)
        if (item.label == label) return std::get_if<TensorField>(&item.value);
    return nullptr;
}

bool residual_zero(const CheckReport& rep, const std::string& label) {
    for (const auto& item : rep.residuals)
        if (item.label == label) return item.zero;
    return false;
}

} // namespace

TEST_SUITE("paracontact") {

TEST_CASE("example_5_1 satisfies every axiom") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    REQUIRE(b.structure.has_value());
    const CheckReport& rep = b.structure->axioms();
    CHECK(rep.passed());
    for (const auto& item : rep.residuals) {
        CAPTURE(item.label);
        CHECK(item.zero);
    }
    CHECK(b.structure->mode() == ParacontactStructure::Mode::Strict);
}

TEST_CASE("example_5_1 is K-paracontact, normal and para-Sasakian") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const CurvatureData curv = curvature(b.model);
    const StructureClassReport cls = classify(*b.structure, curv);

    CHECK(cls.axioms_ok);
    CHECK(cls.paracontact_metric);
    CHECK(cls.k_paracontact);
    CHECK(cls.normal);
    CHECK(cls.para_sasakian);
    CHECK_FALSE(cls.para_cosymplectic);
    CHECK(cls.details.passed());

    CHECK(h_operator(*b.structure).is_zero());
    CHECK(fundamental_two_form(*b.structure)
              .minus(exterior_derivative(b.structure->eta()))
              .is_zero());
    CHECK(normality_tensor(*b.structure).is_zero());

    // The consequence identities re-verified for the detected classes.
    for (const char* label :
         {"nabla_X xi + phi X - phi h X", "nabla_X xi + phi X",
          "R(X,xi)xi + X - eta(X) xi", "Q xi + (dim - 1) xi",
          "(nabla_X phi)Y + g(X,Y) xi - eta(Y) X", "R(X,Y)xi - eta(X)Y + eta(Y)X",
          "R(X,xi)Y - g(X,Y)xi + eta(Y)X"}) {
        CAPTURE(label);
        CHECK(residual_zero(cls.details, label));
    }

    REQUIRE(cls.k.has_value());
    CHECK((*cls.k - ScalarExpr::integer(-1)).is_zero());
    CHECK_FALSE(cls.mu.has_value());
    CHECK(cls.k_mu_nullity);
}

TEST_CASE("the nullity fit is exact, not least-squares") {
    // R(X,Y)xi = k(eta(Y)X - eta(X)Y) + mu(eta(Y)hX - eta(X)hY) must hold
    // componentwise with the fitted k.
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const CurvatureData curv = curvature(b.model);
    const StructureClassReport cls = classify(*b.structure, curv);
    REQUIRE(cls.k.has_value());
    const ScalarExpr& k = *cls.k;
    const TensorField& eta = b.structure->eta();
    const std::size_t n = b.model->dim();

    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ScalarExpr rhs = k * (eta(j) * (i == l ? ScalarExpr::integer(1) : ScalarExpr()) -
                                      eta(i) * (j == l ? ScalarExpr::integer(1) : ScalarExpr()));
                CHECK((curv.riem(l, i, j, 2) - rhs).is_zero());
            }
}

TEST_CASE("example_5_2 violates the axioms with explicit witnesses") {
    const ModelBundle b = make_builtin("builtin:example_5_2");
    REQUIRE(b.structure.has_value());
    CHECK(b.structure->mode() == ParacontactStructure::Mode::Diagnostic);
    const CheckReport& rep = b.structure->axioms();
    CHECK(rep.failed());

    const TensorField* sq = find_residual(rep, "phi^2 - I + eta (x) xi");
    REQUIRE(sq != nullptr);
    CHECK(((*sq)(0, 0) - P(b.model, "9*z^4 - 1")).is_zero());
    CHECK(((*sq)(1, 1) - P(b.model, "9*z^4 - 1")).is_zero());
    CHECK((*sq)(2, 2).is_zero());

    const TensorField* compat = find_residual(rep, "g(phi X, phi Y) + g(X, Y) - eta(X) eta(Y)");
    REQUIRE(compat != nullptr);
    CHECK(((*compat)(0, 0) - P(b.model, "9*z^4*exp(2*z^3) + exp(2*z^3)")).is_zero());
    CHECK((*compat)(2, 2).is_zero());

    // These axioms do hold for this structure.
    CHECK(residual_zero(rep, "eta(xi) - 1"));
    CHECK(residual_zero(rep, "phi xi"));
    CHECK(residual_zero(rep, "eta o phi"));
    CHECK(residual_zero(rep, "eta - g(., xi)"));

    // Strict construction of the same data must refuse.
    CHECK_THROWS_AS(ParacontactStructure(b.model, b.structure->phi(), b.structure->xi(),
                                         b.structure->eta(), ParacontactStructure::Mode::Strict),
                    SemanticError);
}

TEST_CASE("h is nonzero on example_5_2 despite the published claim") {
    const ModelBundle b = make_builtin("builtin:example_5_2");
    const TensorField h = h_operator(*b.structure);
    CHECK((h(0, 0) - P(b.model, "-3*z")).is_zero());
    CHECK((h(1, 1) - P(b.model, "3*z")).is_zero());
    CHECK(h(2, 2).is_zero());
}

TEST_CASE("the flat model is para-cosymplectic but not paracontact metric") {
    const ModelBundle b = make_builtin("builtin:flat_para_cosymplectic");
    const CurvatureData curv = curvature(b.model);
    const StructureClassReport cls = classify(*b.structure, curv);

    CHECK(cls.axioms_ok);
    CHECK_FALSE(cls.paracontact_metric); // d eta = 0 but Phi != 0
    CHECK_FALSE(cls.k_paracontact);
    CHECK(cls.normal);
    CHECK_FALSE(cls.para_sasakian);
    CHECK(cls.para_cosymplectic);
    CHECK_FALSE(cls.k_mu_nullity);
    CHECK(cls.details.passed());

    for (const char* label : {"R(X,Y)xi", "nabla phi", "nabla xi", "S(X, xi)", "Q xi"}) {
        CAPTURE(label);
        CHECK(residual_zero(cls.details, label));
    }
    CHECK(h_operator(*b.structure).is_zero());
    CHECK(nijenhuis(*b.structure).is_zero());
}

TEST_CASE("the contact volume form separates the two geometries") {
    const ModelBundle b51 = make_builtin("builtin:example_5_1");
    CHECK((contact_volume_top(*b51.structure) - ScalarExpr::integer(2)).is_zero());

    const ModelBundle flat = make_builtin("builtin:flat_para_cosymplectic");
    CHECK(contact_volume_top(*flat.structure).is_zero());
}

TEST_CASE("the fundamental two-form is antisymmetric when the axioms hold") {
    const ModelBundle b = make_builtin("builtin:example_5_1");
    const TensorField phi_form = fundamental_two_form(*b.structure);
    const std::size_t n = b.model->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            CHECK((phi_form(i, j) + phi_form(j, i)).is_zero());
    CHECK((phi_form(0, 1) - ScalarExpr::integer(1)).is_zero());
}

TEST_CASE("axiom verification rejects mismatched data") {
    const ModelBundle b = make_builtin("builtin:flat_para_cosymplectic");
    // eta must be the metric dual of xi; swapping it breaks two axioms.
    TensorField bad_eta(b.model, {0, 1});
    bad_eta(0) = ScalarExpr::integer(1);
    const CheckReport rep = verify_axioms(b.model, b.structure->phi(), b.structure->xi(), bad_eta);
    CHECK(rep.failed());
    CHECK_FALSE(residual_zero(rep, "eta(xi) - 1"));
    CHECK_FALSE(residual_zero(rep, "eta - g(., xi)"));
}

} // TEST_SUITE
