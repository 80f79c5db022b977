#include <doctest.h>

#include "parayam/error.hpp"
#include "parayam/expr.hpp"
#include "parayam/fuzz.hpp"
#include "parayam/numeric.hpp"
#include "parayam/parser.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

using namespace parayam;

namespace {

SymbolTable chart_xyz() {
    SymbolTable t(3);
    t.declare_coordinate("x", 0);
    t.declare_coordinate("y", 1);
    t.declare_coordinate("z", 2);
    t.declare("a");
    t.declare("b");
    return t;
}

} // namespace

TEST_SUITE("expr") {

TEST_CASE("printing and reparsing is stable") {
    const SymbolTable t = chart_xyz();
    const std::vector<std::string> samples = {
        "x + y",
        "2*x^2 - 3/4",
        "exp(2*z^3)",
        "(x^2 - y^2 + z^2)/2",
        "(a*x + 1)/(b - y^2)",
        "exp(x + y)*exp(-x)",
        "-x*y*z + 7/5*a",
        "1/(1 + exp(-2*x))",
        "x^3*exp(-z) - exp(z)/(x + 1)",
    };
    for (const std::string& s : samples) {
        CAPTURE(s);
        const ScalarExpr e = parse_expr(s, t);
        const std::string printed = to_string(e, t);
        CHECK(parse_expr(printed, t) == e);
        CHECK(to_string(parse_expr(printed, t), t) == printed);
    }
}

TEST_CASE("field arithmetic identities reduce to zero") {
    const SymbolTable t = chart_xyz();
    auto P = [&](const char* s) { return parse_expr(s, t); };

    CHECK((P("(x + y)^2") - P("x^2 + 2*x*y + y^2")).is_zero());
    CHECK((P("exp(x)*exp(-x)") - P("1")).is_zero());
    CHECK((P("exp(x + y)/exp(x)") - P("exp(y)")).is_zero());
    CHECK((P("1/(1/x)") - P("x")).is_zero());
    CHECK((P("(x^2 - y^2)/(x - y)") - P("x + y")).is_zero());
    CHECK((P("x/3 + x/6") - P("x/2")).is_zero());
    CHECK((P("(x + 1)^3") - P("x^3 + 3*x^2 + 3*x + 1")).is_zero());
    CHECK(P("x^0").is_one());
    CHECK((P("a/b") * P("b/a")).is_one());
    CHECK_FALSE((P("exp(x)") - P("exp(y)")).is_zero());
    CHECK_FALSE((P("x/y") - P("y/x")).is_zero());
}

TEST_CASE("quotient normalization is a fixed point") {
    const SymbolTable t = chart_xyz();
    auto P = [&](const char* s) { return parse_expr(s, t); };
    // Both orientations of a shared exponential factor normalize identically.
    const ScalarExpr lhs = P("a*exp(2*x + y)") / P("exp(2*x + y) + 6");
    const ScalarExpr rhs = P("a") / P("1 + 6*exp(-2*x - y)");
    CHECK(lhs == rhs);
    CHECK(lhs.renormalized() == lhs);
    CHECK(to_string(lhs, t) == to_string(rhs, t));
}

TEST_CASE("differentiation follows the calculus rules") {
    const SymbolTable t = chart_xyz();
    auto P = [&](const char* s) { return parse_expr(s, t); };
    auto d = [&](const char* s, std::size_t dir) { return differentiate(P(s), dir, t); };

    CHECK((d("x^2*y", 0) - P("2*x*y")).is_zero());
    CHECK((d("x^2*y", 1) - P("x^2")).is_zero());
    CHECK((d("exp(2*x)", 0) - P("2*exp(2*x)")).is_zero());
    CHECK((d("exp(2*x*y)", 0) - P("2*y*exp(2*x*y)")).is_zero());
    CHECK((d("x/y", 1) - P("-x/y^2")).is_zero());
    CHECK((d("(x + y)/(x - y)", 0) - P("-2*y/(x - y)^2")).is_zero());
    CHECK(d("a*b + 7", 2).is_zero());
    CHECK((d("exp(z^3)", 2) - P("3*z^2*exp(z^3)")).is_zero());
}

TEST_CASE("declared partial rules drive the chain rule") {
    SymbolTable t(2);
    t.declare_coordinate("s", 0);
    t.declare_coordinate("r", 1);
    const SymbolId f = t.declare("f");
    const SymbolId fs = t.declare("f_s");
    t.set_partial(f, 0, ScalarExpr::symbol(fs));

    const ScalarExpr fsq = ScalarExpr::symbol(f) * ScalarExpr::symbol(f);
    const ScalarExpr expect =
        ScalarExpr::constant(Rational(2)) * ScalarExpr::symbol(f) * ScalarExpr::symbol(fs);
    CHECK((differentiate(fsq, 0, t) - expect).is_zero());
    // f is constant along r, and the first-order jet f_s is itself constant.
    CHECK(differentiate(fsq, 1, t).is_zero());
    CHECK(differentiate(ScalarExpr::symbol(fs), 0, t).is_zero());
}

TEST_CASE("rational evaluation is exact") {
    const SymbolTable t = chart_xyz();
    auto P = [&](const char* s) { return parse_expr(s, t); };
    Assignment point;
    point[*t.find("x")] = Rational(2);
    point[*t.find("y")] = Rational(1, 3);
    point[*t.find("a")] = Rational(-5, 7);
    point[*t.find("z")] = Rational(0);
    point[*t.find("b")] = Rational(1);

    const auto v = evaluate_rational(P("(x^2 + y)/(a + 1)"), point);
    REQUIRE(v.has_value());
    CHECK(*v == Rational(13, 3) / Rational(2, 7));
    CHECK_FALSE(evaluate_rational(P("exp(x)"), point).has_value());
    CHECK_THROWS_AS(evaluate_rational(P("1/(x - 2)"), point), Error);
}

TEST_CASE("numeric evaluation matches a hand-built mpfr computation") {
    const SymbolTable t = chart_xyz();
    const ScalarExpr e = parse_expr("(3*x^2 + 2*exp(2*y) - 5/7)/(x - y)", t);
    Assignment point;
    point[*t.find("x")] = Rational(2);
    point[*t.find("y")] = Rational(1, 2);

    const Float got = evaluate_numeric(e, point, 50);
    const unsigned saved = Float::default_precision();
    Float::default_precision(60);
    const Float x(2), y = Float(1) / 2;
    const Float hand = (3 * x * x + 2 * exp(2 * y) - Float(5) / 7) / (x - y);
    CHECK(abs(got - hand) < Float("1e-45"));
    Float::default_precision(saved);

    CHECK_THROWS_AS(evaluate_numeric(parse_expr("1/(y - 1/2)", t), point, 50), Error);
}

TEST_CASE("parse errors carry positions and name checks hold") {
    const SymbolTable t = chart_xyz();
    CHECK_THROWS_AS(parse_expr("x +", t), ParseError);
    CHECK_THROWS_AS(parse_expr("q + 1", t), ParseError);
    CHECK_THROWS_AS(parse_expr("x ** y", t), ParseError);
    CHECK_THROWS_AS(parse_expr("exp(1/x)", t), Error);
    CHECK_THROWS_AS(parse_expr("x^y", t), ParseError); // exponents are integers
    CHECK(is_valid_symbol_name("f1_x"));
    CHECK_FALSE(is_valid_symbol_name("3f"));
    CHECK_FALSE(is_valid_symbol_name("d y"));
    SymbolTable fresh(1);
    CHECK_THROWS_AS(fresh.declare("exp"), Error);
    fresh.declare("w");
    CHECK_THROWS_AS(fresh.declare("w"), Error);
}

TEST_CASE("normalization and round trips are idempotent on fuzzed expressions") {
    ExprFuzzer fuzz(0xFEEDFACE);
    for (int i = 0; i < 1000; ++i) {
        const ScalarExpr e = fuzz.next(4);
        CHECK(e.renormalized() == e);
        CHECK(parse_expr(to_string(e, fuzz.table()), fuzz.table()) == e);
    }
}

TEST_CASE("fuzzed symbolic derivatives agree with numeric differentiation") {
    ExprFuzzer fuzz(0xBADC0DE);
    const Rational hr(1, 10000000000L);
    const Float hf = Float(1) / Float(10000000000L);
    const Float big("1e10");
    int accepted = 0;
    for (int attempt = 0; attempt < 5000 && accepted < 40; ++attempt) {
        const ScalarExpr e = fuzz.next(4);
        const std::size_t dir = fuzz.next_direction();
        const Assignment point = fuzz.next_point();
        const SymbolId coord{static_cast<std::uint32_t>(dir)};
        try {
            const ScalarExpr de = differentiate(e, dir, fuzz.table());
            auto at = [&](const Rational& shift) {
                Assignment p = point;
                p[coord] += shift;
                return evaluate_numeric(e, p, 50);
            };
            const Float fp2 = at(hr * 2), fp1 = at(hr), fm1 = at(-hr), fm2 = at(hr * -2);
            if (abs(fp2) > big || abs(fp1) > big || abs(fm1) > big || abs(fm2) > big) continue;
            const Float numeric = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * hf);
            const Float symbolic = evaluate_numeric(de, point, 50);
            if (abs(symbolic) > big) continue;
            Float bound("1e-20");
            if (abs(symbolic) > 1) bound *= abs(symbolic);
            CAPTURE(to_string(e, fuzz.table()));
            CHECK(abs(numeric - symbolic) <= bound);
            ++accepted;
        } catch (const Error&) {
            continue; // singular sample point; try another
        }
    }
    CHECK(accepted == 40);
}

} // TEST_SUITE
