#include <doctest.h>

#include "parayam/builtin.hpp"
#include "parayam/error.hpp"
#include "parayam/manifold_file.hpp"
#include "parayam/parser.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace parayam;

namespace {

const char* kSample = R"(# a frame-mode workload with every section
manifold {
  name sample
  dimension 3
  mode frame
  basis e1 e2 e3
}
symbols {
  u
  lambda
  delta
}
metric {
  1, 0, 0
  0, -1, 0
  0, 0, 1
}
brackets {
  1 2 3 : -2        # [e1, e2] = -2 e3
  3 2 1 : u + 1
  3 1 2 : u + 1
}
structure {
  mode strict
  phi {
    0, 1, 0
    1, 0, 0
    0, 0, 0
  }
  xi 0, 0, 1
  eta 0, 0, 1
}
fields {
  vector W : u, 1, 0
  scalar height : u^2
}
soliton {
  potential xi
  lambda -2*(2*u + 1)
  delta 3
}
)";

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

} // namespace

TEST_SUITE("model_file") {

TEST_CASE("a full workload file parses into the expected bundle") {
    const ModelBundle b = parse_model_text(kSample, "<sample>");
    REQUIRE(b.model != nullptr);
    CHECK(b.model->dim() == 3);
    CHECK(b.model->mode() == FrameMode::Frame);
    CHECK(b.model->basis_name(0) == "e1");
    CHECK((b.model->metric(1, 1) - ScalarExpr::integer(-1)).is_zero());

    const ScalarExpr u = parse_expr("u", b.model->symbols());
    CHECK((b.model->bracket_coeff(0, 1, 2) - ScalarExpr::integer(-2)).is_zero());
    CHECK((b.model->bracket_coeff(1, 0, 2) - ScalarExpr::integer(2)).is_zero());
    CHECK((b.model->bracket_coeff(2, 1, 0) - (u + ScalarExpr::integer(1))).is_zero());

    REQUIRE(b.structure.has_value());
    CHECK(b.structure->axioms_hold());
    CHECK((b.structure->phi()(0, 1) - ScalarExpr::integer(1)).is_zero());

    REQUIRE(b.vector_fields.count("W") == 1);
    CHECK((b.vector_fields.at("W")(0) - u).is_zero());
    REQUIRE(b.scalar_fields.count("height") == 1);
    CHECK((b.scalar_fields.at("height") - u * u).is_zero());

    REQUIRE(b.soliton.has_value());
    CHECK(b.soliton->potential == "xi");
    REQUIRE(b.soliton->lambda.has_value());
    CHECK((*b.soliton->lambda - parse_expr("-2*(2*u + 1)", b.model->symbols())).is_zero());
    REQUIRE(b.soliton->delta.has_value());
    CHECK((*b.soliton->delta - ScalarExpr::integer(3)).is_zero());

    // This file describes the same geometry as the first builtin.
    const CurvatureData curv = curvature(b.model);
    CHECK((curv.r - parse_expr("-2*(2*u + 1)", b.model->symbols())).is_zero());
}

TEST_CASE("writing and reloading is a fixed point") {
    for (const char* uri : {"builtin:example_5_1", "builtin:example_5_2",
                            "builtin:flat_para_cosymplectic"}) {
        CAPTURE(uri);
        const ModelBundle original = make_builtin(uri);
        const std::string text1 = write_model_text(original);
        const ModelBundle reloaded = parse_model_text(text1, "<round-trip>");
        CHECK(write_model_text(reloaded) == text1);

        REQUIRE(reloaded.model->dim() == original.model->dim());
        for (std::size_t i = 0; i < original.model->dim(); ++i)
            for (std::size_t j = 0; j < original.model->dim(); ++j)
                CHECK((reloaded.model->metric(i, j) - original.model->metric(i, j)).is_zero());
        CHECK(reloaded.structure.has_value() == original.structure.has_value());
        CHECK(reloaded.vector_fields.size() == original.vector_fields.size());
    }

    const ModelBundle sample = parse_model_text(kSample, "<sample>");
    const std::string text = write_model_text(sample);
    CHECK(write_model_text(parse_model_text(text, "<again>")) == text);
}

TEST_CASE("files load from disk and builtins through the same entry point") {
    const std::string path = temp_path("parayam_model_test.pam");
    {
        std::ofstream out(path, std::ios::binary);
        out << kSample;
    }
    const ModelBundle from_disk = load_input(path);
    CHECK(from_disk.model->dim() == 3);
    CHECK(from_disk.origin == path);
    std::remove(path.c_str());

    CHECK(load_input("builtin:flat_para_cosymplectic").model->dim() == 3);
    CHECK_THROWS_AS(load_input("builtin:no_such_model"), Error);
    CHECK_THROWS_AS(load_input("builtin:example_5_1?bogus=1"), Error);
    CHECK_THROWS_AS(load_input(temp_path("parayam_missing.pam")), Error);

    // Builtin parameters reach the model: u = 1 turns r into -6.
    const ModelBundle tuned = make_builtin("builtin:example_5_1?u=1");
    CHECK((curvature(tuned.model).r - ScalarExpr::integer(-6)).is_zero());
}

TEST_CASE("parse errors carry line and column positions") {
    const char* bad_expr =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode chart\n"
        "  basis x y\n"
        "}\n"
        "metric {\n"
        "  1, 0\n"
        "  0, x +\n"
        "}\n";
    try {
        parse_model_text(bad_expr, "<bad>");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 9, column") != std::string::npos);
    }

    const char* missing_close =
        "manifold {\n"
        "  name t\n"
        "  dimension 1\n"
        "  mode chart\n"
        "  basis x\n";
    CHECK_THROWS_AS(parse_model_text(missing_close, "<bad>"), ParseError);

    const char* wrong_section =
        "metric {\n"
        "  1\n"
        "}\n";
    try {
        parse_model_text(wrong_section, "<bad>");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
        CHECK(std::string(e.what()).find("manifold") != std::string::npos);
    }
}

TEST_CASE("semantic validation names the offending object") {
    const char* asym_metric =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode chart\n"
        "  basis x y\n"
        "}\n"
        "metric {\n"
        "  1, 1\n"
        "  0, 1\n"
        "}\n";
    try {
        parse_model_text(asym_metric, "<bad>");
        FAIL("expected a semantic error");
    } catch (const SemanticError& e) {
        CHECK(std::string(e.what()).find("metric is not symmetric") != std::string::npos);
    }

    const char* singular_metric =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode chart\n"
        "  basis x y\n"
        "}\n"
        "metric {\n"
        "  1, 1\n"
        "  1, 1\n"
        "}\n";
    CHECK_THROWS_AS(parse_model_text(singular_metric, "<bad>"), SemanticError);

    const char* chart_brackets =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode chart\n"
        "  basis x y\n"
        "}\n"
        "metric {\n"
        "  1, 0\n"
        "  0, 1\n"
        "}\n"
        "brackets {\n"
        "  1 2 1 : 1\n"
        "}\n";
    CHECK_THROWS_AS(parse_model_text(chart_brackets, "<bad>"), ParseError);
}

TEST_CASE("bracket table rejects malformed entries") {
    const std::string head =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode frame\n"
        "  basis e1 e2\n"
        "}\n"
        "metric {\n"
        "  1, 0\n"
        "  0, -1\n"
        "}\n";
    CHECK_THROWS_AS(parse_model_text(head + "brackets {\n  1 1 2 : 1\n}\n", "<bad>"),
                    ParseError); // self-bracket
    CHECK_THROWS_AS(parse_model_text(head + "brackets {\n  1 2 1 : 1\n  2 1 1 : -1\n}\n", "<bad>"),
                    ParseError); // duplicate (mirror already set)
    CHECK_THROWS_AS(parse_model_text(head + "brackets {\n  1 3 1 : 1\n}\n", "<bad>"),
                    ParseError); // index out of range
}

TEST_CASE("duplicate field names are rejected") {
    const std::string text =
        "manifold {\n"
        "  name t\n"
        "  dimension 2\n"
        "  mode chart\n"
        "  basis x y\n"
        "}\n"
        "metric {\n"
        "  1, 0\n"
        "  0, 1\n"
        "}\n"
        "fields {\n"
        "  scalar f : x\n"
        "  vector f : x, y\n"
        "}\n";
    CHECK_THROWS_AS(parse_model_text(text, "<bad>"), ParseError);
}

} // TEST_SUITE
