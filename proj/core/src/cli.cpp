#include "parayam/cli.hpp"

#include "parayam/battery.hpp"
#include "parayam/error.hpp"
#include "parayam/manifold_file.hpp"
#include "parayam/parser.hpp"
#include "parayam/report.hpp"
#include "parayam/soliton.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace parayam {

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    std::string z_spec;
    std::string u_spec;
    std::string lambda_text;
    std::string delta_text;
    std::string identity = "all";
    bool jacobi = false;
};

// Accepts "xi", "grad:<scalar field or expression>", a declared vector
// field name, or a basis direction name.
TensorField resolve_vector(const ModelBundle& bundle, const std::string& spec) {
    if (spec == "xi") {
        if (!bundle.structure)
            throw SemanticError("'xi' needs a structure section", "potential");
        return bundle.structure->xi();
    }
    if (spec.rfind("grad:", 0) == 0) {
        const std::string rest = spec.substr(5);
        if (const auto it = bundle.scalar_fields.find(rest); it != bundle.scalar_fields.end())
            return gradient(bundle.model, it->second);
        return gradient(bundle.model, parse_expr(rest, bundle.model->symbols()));
    }
    if (const auto it = bundle.vector_fields.find(spec); it != bundle.vector_fields.end())
        return it->second;
    for (std::size_t i = 0; i < bundle.model->dim(); ++i)
        if (bundle.model->basis_name(i) == spec) return basis_vector(bundle.model, i);
    throw SemanticError("unknown vector field '" + spec +
                            "' (expected xi, grad:<scalar>, a field name, or a basis name)",
                        "potential");
}

ScalarExpr resolve_scalar(const ModelBundle& bundle, const std::string& spec) {
    if (const auto it = bundle.scalar_fields.find(spec); it != bundle.scalar_fields.end())
        return it->second;
    return parse_expr(spec, bundle.model->symbols());
}

// Merges command-line values over the file's soliton section.
SolitonData assemble_soliton(const ModelBundle& bundle, const Options& o, bool need_lambda) {
    std::string z_spec = o.z_spec;
    if (z_spec.empty() && bundle.soliton) z_spec = bundle.soliton->potential;
    if (z_spec.empty())
        throw SemanticError("no potential vector field given (use --Z)", "soliton");
    TensorField z = resolve_vector(bundle, z_spec);

    std::optional<ScalarExpr> u;
    if (!o.u_spec.empty())
        u = resolve_scalar(bundle, o.u_spec);
    else if (bundle.soliton && bundle.soliton->u)
        u = bundle.soliton->u;
    if (!u && z_spec.rfind("grad:", 0) == 0) {
        const std::string rest = z_spec.substr(5);
        if (const auto it = bundle.scalar_fields.find(rest); it != bundle.scalar_fields.end())
            u = it->second;
        else
            u = parse_expr(rest, bundle.model->symbols());
    }

    ScalarExpr lambda;
    if (!o.lambda_text.empty())
        lambda = parse_expr(o.lambda_text, bundle.model->symbols());
    else if (bundle.soliton && bundle.soliton->lambda)
        lambda = *bundle.soliton->lambda;
    else if (need_lambda)
        throw SemanticError("no lambda given (use --lambda)", "soliton");

    ScalarExpr delta = ScalarExpr::integer(1);
    if (!o.delta_text.empty())
        delta = parse_expr(o.delta_text, bundle.model->symbols());
    else if (bundle.soliton && bundle.soliton->delta)
        delta = *bundle.soliton->delta;

    return SolitonData{std::move(z), std::move(u), std::move(lambda), std::move(delta)};
}

int finish(ReportDocument doc, const Options& o, std::ostream& out) {
    out << (o.format == "json" ? emit_json(doc) : emit_text(doc));
    return exit_code(doc);
}

int cmd_curvature(const Options& o, std::ostream& out) {
    const ModelBundle bundle = load_input(o.input);
    const ModelPtr& model = bundle.model;
    const CurvatureData curv = curvature(model);
    const std::size_t n = model->dim();
    auto bn = [&](std::size_t i) { return model->basis_name(i); };

    ReportDocument doc;
    doc.command = "curvature";
    doc.input = o.input;

    ReportSection conn;
    conn.heading = "Levi-Civita connection";
    conn.model = model;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const ScalarExpr& c = curv.conn.coeff(k, i, j);
                if (!c.is_zero())
                    conn.values.emplace_back(
                        "Gamma^" + bn(k) + "_{" + bn(i) + " " + bn(j) + "}", c);
            }
    doc.sections.push_back(std::move(conn));

    ReportSection riem;
    riem.heading = "Riemann curvature";
    riem.model = model;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const ScalarExpr& c = curv.riem(l, i, j, k);
                    if (!c.is_zero())
                        riem.values.emplace_back("R(" + bn(i) + ", " + bn(j) + ") " + bn(k) +
                                                     " . " + bn(l),
                                                 c);
                }
    doc.sections.push_back(std::move(riem));

    ReportSection ricci;
    ricci.heading = "Ricci data";
    ricci.model = model;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!curv.ric(i, j).is_zero())
                ricci.values.emplace_back("S(" + bn(i) + ", " + bn(j) + ")", curv.ric(i, j));
    ricci.values.emplace_back("r", curv.r);
    doc.sections.push_back(std::move(ricci));

    return finish(std::move(doc), o, out);
}

int cmd_structure(const Options& o, std::ostream& out) {
    const ModelBundle bundle = load_input(o.input);
    if (!bundle.structure)
        throw SemanticError("input has no structure section", "structure");
    const CurvatureData curv = curvature(bundle.model);
    const StructureClassReport cls = classify(*bundle.structure, curv);

    ReportDocument doc;
    doc.command = "structure";
    doc.input = o.input;

    ReportSection axioms;
    axioms.heading = "axioms";
    axioms.model = bundle.model;
    axioms.checks.push_back(bundle.structure->axioms());
    doc.sections.push_back(std::move(axioms));

    ReportSection classes;
    classes.heading = "classification";
    classes.model = bundle.model;
    CheckReport summary;
    summary.id = "classes";
    summary.model = bundle.model;
    summary.add_flag("axioms hold", cls.axioms_ok);
    summary.add_flag("paracontact metric", cls.paracontact_metric);
    summary.add_flag("K-paracontact", cls.k_paracontact);
    summary.add_flag("normal", cls.normal);
    summary.add_flag("para-Sasakian", cls.para_sasakian);
    summary.add_flag("para-cosymplectic", cls.para_cosymplectic);
    summary.add_flag("(k, mu)-nullity", cls.k_mu_nullity);
    if (cls.k) summary.add_derived("k", *cls.k);
    if (cls.mu) summary.add_derived("mu", *cls.mu);
    for (const std::string& note : cls.notes) {
        if (!summary.note.empty()) summary.note += "; ";
        summary.note += note;
    }
    classes.checks.push_back(std::move(summary));
    classes.checks.push_back(cls.details);
    doc.sections.push_back(std::move(classes));

    return finish(std::move(doc), o, out);
}

int cmd_soliton_verify(const Options& o, std::ostream& out) {
    const ModelBundle bundle = load_input(o.input);
    SolitonData data = assemble_soliton(bundle, o, /*need_lambda=*/true);
    const SolitonContext ctx = make_context(bundle.model, bundle.structure, std::move(data));

    ReportDocument doc;
    doc.command = "soliton verify";
    doc.input = o.input;

    ReportSection section;
    section.heading = "soliton";
    section.model = bundle.model;
    section.values.emplace_back("lambda", ctx.data.lambda);
    section.values.emplace_back("delta", ctx.data.delta);
    section.values.emplace_back("r", ctx.curv.r);
    section.values.emplace_back("(r - lambda)/delta", ctx.w());

    CheckReport kind;
    kind.id = "classification";
    kind.model = bundle.model;
    kind.note = "family: " + soliton_family(ctx) +
                "; kind: " + to_string(classify_soliton(ctx.data.lambda));
    section.checks.push_back(std::move(kind));
    section.checks.push_back(soliton_residual(ctx));
    if (ctx.data.potential_u) section.checks.push_back(gradient_soliton_residual(ctx));
    doc.sections.push_back(std::move(section));

    return finish(std::move(doc), o, out);
}

int cmd_soliton_solve(const Options& o, std::ostream& out) {
    const ModelBundle bundle = load_input(o.input);
    std::string z_spec = o.z_spec;
    if (z_spec.empty() && bundle.soliton) z_spec = bundle.soliton->potential;
    if (z_spec.empty())
        throw SemanticError("no potential vector field given (use --Z)", "soliton");
    const TensorField z = resolve_vector(bundle, z_spec);
    ScalarExpr delta = ScalarExpr::integer(1);
    if (!o.delta_text.empty())
        delta = parse_expr(o.delta_text, bundle.model->symbols());
    else if (bundle.soliton && bundle.soliton->delta)
        delta = *bundle.soliton->delta;

    const CurvatureData curv = curvature(bundle.model);

    ReportDocument doc;
    doc.command = "soliton solve-lambda";
    doc.input = o.input;

    ReportSection section;
    section.heading = "solve-lambda";
    section.model = bundle.model;
    section.values.emplace_back("r", curv.r);
    section.checks.push_back(solve_lambda(curv, z, delta));
    doc.sections.push_back(std::move(section));

    return finish(std::move(doc), o, out);
}

int cmd_identity(const Options& o, std::ostream& out) {
    std::vector<IdentityId> ids;
    if (o.identity == "all") {
        ids = all_identities();
    } else if (const auto id = identity_from_string(o.identity)) {
        ids.push_back(*id);
    } else {
        std::string known = "all";
        for (IdentityId id : all_identities()) known += ", " + to_string(id);
        throw SemanticError("unknown identity '" + o.identity + "' (known: " + known + ")",
                            "identity");
    }

    const ModelBundle bundle = load_input(o.input);
    SolitonData data = assemble_soliton(bundle, o, /*need_lambda=*/true);
    const SolitonContext ctx = make_context(bundle.model, bundle.structure, std::move(data));
    IdentityOptions opts;
    opts.assume_jacobi = o.jacobi;

    ReportDocument doc;
    doc.command = "identity";
    doc.input = o.input;

    ReportSection section;
    section.heading = "identities";
    section.model = bundle.model;
    for (IdentityId id : ids) {
        CheckReport rep = identity_check(ctx, id, opts);
        if (rep.status == CheckStatus::HypothesisNotSatisfied)
            doc.warnings.push_back(to_string(id) + ": " + rep.note);
        section.checks.push_back(std::move(rep));
    }
    doc.sections.push_back(std::move(section));

    return finish(std::move(doc), o, out);
}

int cmd_reproduce_paper(const Options& o, std::ostream& out) {
    return finish(reproduce_paper_battery(), o, out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tensor calculus for almost-paracontact metric manifolds"};
    app.name("parayam");

    Options o;
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", o.input, "model file or builtin:<name> URI")->required();
    };
    auto add_cmd = [&](CLI::App* parent, const char* name, const char* help) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        cmd->fallthrough(); // let --format reach the top-level app
        return cmd;
    };
    auto add_z = [&](CLI::App* cmd) {
        cmd->add_option("--Z", o.z_spec,
                        "potential vector field: xi, grad:<scalar>, a declared vector "
                        "field, or a basis direction");
    };
    auto add_soliton_params = [&](CLI::App* cmd) {
        add_z(cmd);
        cmd->add_option("--u", o.u_spec, "potential function (name or expression)");
        cmd->add_option("--lambda", o.lambda_text, "soliton function lambda");
        cmd->add_option("--delta", o.delta_text, "soliton coefficient delta (default 1)");
    };

    CLI::App* curvature_cmd =
        add_cmd(&app, "curvature", "Levi-Civita connection and curvature tables");
    add_input(curvature_cmd);

    CLI::App* structure_cmd =
        add_cmd(&app, "structure", "verify the structure axioms and classify");
    add_input(structure_cmd);

    CLI::App* soliton_cmd = add_cmd(&app, "soliton", "soliton equation tools");
    soliton_cmd->require_subcommand(1);
    CLI::App* verify_cmd = add_cmd(soliton_cmd, "verify", "check the soliton equation");
    add_input(verify_cmd);
    add_soliton_params(verify_cmd);
    CLI::App* solve_cmd =
        add_cmd(soliton_cmd, "solve-lambda", "determine lambda from the equation");
    add_input(solve_cmd);
    add_z(solve_cmd);
    solve_cmd->add_option("--delta", o.delta_text, "soliton coefficient delta (default 1)");

    CLI::App* identity_cmd =
        add_cmd(&app, "identity", "verify derived identities (L1a..T9, GL1, GL2)");
    identity_cmd->add_option("id", o.identity, "identity id, or 'all'")->required();
    add_input(identity_cmd);
    add_soliton_params(identity_cmd);
    identity_cmd->add_flag("--jacobi", o.jacobi,
                           "verify the Jacobi condition along xi and check its consequences");

    CLI::App* reproduce_cmd = add_cmd(
        &app, "reproduce-paper", "run the full acceptance battery over the builtin corpus");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (curvature_cmd->parsed()) return cmd_curvature(o, out);
        if (structure_cmd->parsed()) return cmd_structure(o, out);
        if (soliton_cmd->parsed()) {
            if (verify_cmd->parsed()) return cmd_soliton_verify(o, out);
            return cmd_soliton_solve(o, out);
        }
        if (identity_cmd->parsed()) return cmd_identity(o, out);
        if (reproduce_cmd->parsed()) return cmd_reproduce_paper(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace parayam
