#include "parayam/builtin.hpp"

#include "parayam/error.hpp"
#include "parayam/parser.hpp"

#include <map>
#include <utility>

namespace parayam {

namespace {

struct UriParts {
    std::string name;
    std::map<std::string, std::string> params;
};

UriParts split_uri(std::string_view uri) {
    constexpr std::string_view prefix = "builtin:";
    if (uri.substr(0, prefix.size()) != prefix)
        throw SemanticError("not a builtin URI: " + std::string(uri), "builtin");
    std::string_view rest = uri.substr(prefix.size());
    UriParts parts;
    const auto qmark = rest.find('?');
    parts.name = std::string(rest.substr(0, qmark));
    if (qmark == std::string_view::npos) return parts;
    std::string_view query = rest.substr(qmark + 1);
    while (!query.empty()) {
        const auto amp = query.find('&');
        std::string_view item = query.substr(0, amp);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw SemanticError("malformed builtin parameter: " + std::string(item), "builtin");
        parts.params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        if (amp == std::string_view::npos) break;
        query.remove_prefix(amp + 1);
    }
    return parts;
}

Rational parse_rational_param(const std::string& key, const std::string& value) {
    const SymbolTable empty(0);
    ScalarExpr e = parse_expr(value, empty);
    const auto q = e.as_rational();
    if (!q)
        throw SemanticError("parameter " + key + " must be a rational constant, got " + value,
                            "builtin");
    return *q;
}

void reject_unknown_params(const UriParts& parts, std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : parts.params) {
        bool ok = false;
        for (std::string_view k : known) ok = ok || key == k;
        if (!ok)
            throw SemanticError("unknown parameter " + key + " for builtin " + parts.name,
                                "builtin");
    }
}

std::vector<std::vector<ScalarExpr>> diag_metric(long a, long b, long c) {
    std::vector<std::vector<ScalarExpr>> g(3, std::vector<ScalarExpr>(3));
    g[0][0] = ScalarExpr::integer(a);
    g[1][1] = ScalarExpr::integer(b);
    g[2][2] = ScalarExpr::integer(c);
    return g;
}

ModelBundle build_example_5_1(const UriParts& parts) {
    reject_unknown_params(parts, {"u"});
    auto table = std::make_shared<SymbolTable>(3);
    const SymbolId u_sym = table->declare("u");
    table->declare("lambda");
    table->declare("delta");

    ScalarExpr u = ScalarExpr::symbol(u_sym);
    if (auto it = parts.params.find("u"); it != parts.params.end())
        u = ScalarExpr::constant(parse_rational_param("u", it->second));
    const ScalarExpr up1 = u + ScalarExpr::integer(1);

    ManifoldModel::Init init;
    init.name = "example_5_1";
    init.mode = FrameMode::Frame;
    init.basis = {"e1", "e2", "e3"};
    init.table = table;
    init.metric = diag_metric(1, -1, 1);
    init.brackets.assign(3, std::vector<std::vector<ScalarExpr>>(3, std::vector<ScalarExpr>(3)));
    // [e1,e2] = -2 e3, [e3,e2] = (u+1) e1, [e3,e1] = (u+1) e2
    init.brackets[0][1][2] = ScalarExpr::integer(-2);
    init.brackets[1][0][2] = ScalarExpr::integer(2);
    init.brackets[2][1][0] = up1;
    init.brackets[1][2][0] = -up1;
    init.brackets[2][0][1] = up1;
    init.brackets[0][2][1] = -up1;

    ModelBundle bundle;
    bundle.model = ManifoldModel::create(std::move(init));

    TensorField phi(bundle.model, {1, 1});
    phi(1, 0) = ScalarExpr::integer(1); // phi e1 = e2
    phi(0, 1) = ScalarExpr::integer(1); // phi e2 = e1
    TensorField xi(bundle.model, {1, 0});
    xi(2) = ScalarExpr::integer(1);
    TensorField eta(bundle.model, {0, 1});
    eta(2) = ScalarExpr::integer(1);
    bundle.structure.emplace(bundle.model, std::move(phi), std::move(xi), std::move(eta),
                             ParacontactStructure::Mode::Strict);

    bundle.scalar_fields.emplace("u", u);
    return bundle;
}

ModelBundle build_example_5_2(const UriParts& parts) {
    reject_unknown_params(parts, {});
    auto table = std::make_shared<SymbolTable>(3);
    const char* coords[3] = {"x", "y", "z"};
    for (std::size_t d = 0; d < 3; ++d) table->declare_coordinate(coords[d], d);
    // f1, f2, f3 carry generic first-order jets: each partial is a fresh
    // constant symbol, enough for every first-order residual on this model.
    for (const char* f : {"f1", "f2", "f3"}) {
        const SymbolId fid = table->declare(f);
        for (std::size_t d = 0; d < 3; ++d) {
            const SymbolId pid = table->declare(std::string(f) + "_" + coords[d]);
            table->set_partial(fid, d, ScalarExpr::symbol(pid));
        }
    }
    table->declare("lambda");
    table->declare("delta");

    ManifoldModel::Init init;
    init.name = "example_5_2";
    init.mode = FrameMode::Chart;
    init.basis = {"x", "y", "z"};
    init.table = table;
    init.metric.assign(3, std::vector<ScalarExpr>(3));
    init.metric[0][0] = parse_expr("exp(2*z^3)", *table);
    init.metric[1][1] = parse_expr("exp(-2*z^3)", *table);
    init.metric[2][2] = ScalarExpr::integer(1);

    ModelBundle bundle;
    bundle.model = ManifoldModel::create(std::move(init));

    TensorField phi(bundle.model, {1, 1});
    phi(0, 0) = parse_expr("-3*z^2", *table);
    phi(1, 1) = parse_expr("3*z^2", *table);
    TensorField xi(bundle.model, {1, 0});
    xi(2) = ScalarExpr::integer(1);
    TensorField eta(bundle.model, {0, 1});
    eta(2) = ScalarExpr::integer(1);
    bundle.structure.emplace(bundle.model, std::move(phi), std::move(xi), std::move(eta),
                             ParacontactStructure::Mode::Diagnostic);

    TensorField zfield(bundle.model, {1, 0});
    zfield(0) = parse_expr("f1 + f2", *table);
    zfield(1) = parse_expr("f2 + f3", *table);
    zfield(2) = parse_expr("f3 + f1", *table);
    bundle.vector_fields.emplace("Z", std::move(zfield));
    return bundle;
}

ModelBundle build_flat(const UriParts& parts) {
    reject_unknown_params(parts, {});
    auto table = std::make_shared<SymbolTable>(3);
    const char* coords[3] = {"x", "y", "z"};
    for (std::size_t d = 0; d < 3; ++d) table->declare_coordinate(coords[d], d);
    table->declare("lambda");
    table->declare("delta");

    ManifoldModel::Init init;
    init.name = "flat_para_cosymplectic";
    init.mode = FrameMode::Chart;
    init.basis = {"x", "y", "z"};
    init.table = table;
    init.metric = diag_metric(1, -1, 1);

    ModelBundle bundle;
    bundle.model = ManifoldModel::create(std::move(init));

    TensorField phi(bundle.model, {1, 1});
    phi(1, 0) = ScalarExpr::integer(1); // phi d/dx = d/dy
    phi(0, 1) = ScalarExpr::integer(1); // phi d/dy = d/dx
    TensorField xi(bundle.model, {1, 0});
    xi(2) = ScalarExpr::integer(1);
    TensorField eta(bundle.model, {0, 1});
    eta(2) = ScalarExpr::integer(1);
    bundle.structure.emplace(bundle.model, std::move(phi), std::move(xi), std::move(eta),
                             ParacontactStructure::Mode::Strict);

    TensorField euler(bundle.model, {1, 0});
    euler(0) = parse_expr("x", *table);
    euler(1) = parse_expr("y", *table);
    euler(2) = parse_expr("z", *table);
    bundle.vector_fields.emplace("euler", std::move(euler));
    return bundle;
}

} // namespace

bool is_builtin_uri(std::string_view uri) { return uri.substr(0, 8) == "builtin:"; }

std::vector<std::string> builtin_names() {
    return {"example_5_1", "example_5_2", "flat_para_cosymplectic"};
}

ModelBundle make_builtin(std::string_view uri) {
    const UriParts parts = split_uri(uri);
    ModelBundle bundle;
    if (parts.name == "example_5_1") bundle = build_example_5_1(parts);
    else if (parts.name == "example_5_2") bundle = build_example_5_2(parts);
    else if (parts.name == "flat_para_cosymplectic") bundle = build_flat(parts);
    else {
        std::string known;
        for (const auto& n : builtin_names()) known += " " + n;
        throw SemanticError("unknown builtin " + parts.name + "; available:" + known, "builtin");
    }
    bundle.origin = std::string(uri);
    return bundle;
}

} // namespace parayam
