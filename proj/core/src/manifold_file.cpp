#include "parayam/manifold_file.hpp"

#include "parayam/builtin.hpp"
#include "parayam/error.hpp"
#include "parayam/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace parayam {

namespace {

struct RawLine {
    std::size_t number = 0; // 1-based
    std::string text;       // comment-stripped, trimmed
};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

class FileParser {
public:
    FileParser(std::string_view text, std::string origin) : origin_(std::move(origin)) {
        std::size_t lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto nl = text.find('\n', start);
            std::string_view raw =
                text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
            ++lineno;
            std::string_view body = raw.substr(0, raw.find('#'));
            std::string t = trim(body);
            if (!t.empty()) lines_.push_back({lineno, std::move(t)});
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
    }

    ModelBundle run() {
        parse_manifold();
        parse_symbols();
        parse_metric();
        parse_brackets();
        build_model();
        parse_structure();
        parse_fields();
        parse_soliton();
        if (pos_ < lines_.size())
            fail(lines_[pos_].number, "unexpected content after the last section");
        bundle_.origin = origin_;
        return std::move(bundle_);
    }

private:
    bool at_header(const std::string& name) const {
        if (pos_ >= lines_.size()) return false;
        const auto toks = split_ws(lines_[pos_].text);
        return toks.size() == 2 && toks[0] == name && toks[1] == "{";
    }

    void open_section(const std::string& name) {
        if (!at_header(name)) {
            const std::size_t ln = pos_ < lines_.size() ? lines_[pos_].number : last_line();
            fail(ln, "expected section '" + name + " {'");
        }
        ++pos_;
    }

    bool at_close() const { return pos_ < lines_.size() && lines_[pos_].text == "}"; }

    void close_section(const std::string& name) {
        if (!at_close()) {
            const std::size_t ln = pos_ < lines_.size() ? lines_[pos_].number : last_line();
            fail(ln, "expected '}' closing section '" + name + "'");
        }
        ++pos_;
    }

    std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

    const RawLine& need_line(const std::string& what) {
        if (pos_ >= lines_.size() || at_close())
            fail(pos_ < lines_.size() ? lines_[pos_].number : last_line(), "expected " + what);
        return lines_[pos_++];
    }

    ScalarExpr parse_in(std::size_t line, const std::string& text, std::size_t column) {
        try {
            return parse_expr(text, *table_);
        } catch (const ParseError& pe) {
            throw ParseError("line " + std::to_string(line) + ", column " +
                                 std::to_string(column + pe.offset()) + ": " + pe.what(),
                             pe.offset());
        }
    }

    // Splits "a, b, c" keeping each piece's 1-based start column inside line.
    std::vector<ScalarExpr> parse_row(const RawLine& line, const std::string& text,
                                      std::size_t base_column, std::size_t expected) {
        std::vector<ScalarExpr> out;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            const std::string piece =
                text.substr(start, comma == std::string::npos ? text.size() - start : comma - start);
            if (trim(piece).empty()) fail(line.number, "empty component in row");
            out.push_back(parse_in(line.number, piece, base_column + start + 1));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (out.size() != expected)
            fail(line.number, "expected " + std::to_string(expected) + " components, got " +
                                  std::to_string(out.size()));
        return out;
    }

    void parse_manifold() {
        open_section("manifold");
        while (!at_close()) {
            const RawLine& line = need_line("a manifold entry");
            const auto toks = split_ws(line.text);
            if (toks[0] == "name" && toks.size() == 2) name_ = toks[1];
            else if (toks[0] == "dimension" && toks.size() == 2) {
                try {
                    dim_ = std::stoul(toks[1]);
                } catch (...) {
                    fail(line.number, "dimension must be a positive integer");
                }
                if (dim_ == 0) fail(line.number, "dimension must be a positive integer");
            } else if (toks[0] == "mode" && toks.size() == 2) {
                if (toks[1] == "chart") mode_ = FrameMode::Chart;
                else if (toks[1] == "frame") mode_ = FrameMode::Frame;
                else fail(line.number, "mode must be 'chart' or 'frame'");
                have_mode_ = true;
            } else if (toks[0] == "basis" && toks.size() >= 2) {
                basis_.assign(toks.begin() + 1, toks.end());
                for (const auto& b : basis_)
                    if (!is_valid_symbol_name(b)) fail(line.number, "invalid basis name " + b);
            } else {
                fail(line.number, "unknown manifold entry '" + toks[0] + "'");
            }
        }
        close_section("manifold");
        if (dim_ == 0) fail(last_line(), "manifold section must set dimension");
        if (!have_mode_) fail(last_line(), "manifold section must set mode");
        if (basis_.size() != dim_)
            fail(last_line(), "basis must list exactly " + std::to_string(dim_) + " names");
    }

    void parse_symbols() {
        table_ = std::make_shared<SymbolTable>(dim_);
        if (mode_ == FrameMode::Chart)
            for (std::size_t d = 0; d < dim_; ++d) table_->declare_coordinate(basis_[d], d);

        if (!at_header("symbols")) return;
        ++pos_;
        std::vector<RawLine> body;
        while (!at_close()) body.push_back(need_line("a symbol declaration"));
        close_section("symbols");

        // Two passes so derivative rules may reference any declared symbol.
        for (const RawLine& line : body) {
            const auto toks = split_ws(line.text);
            if (!is_valid_symbol_name(toks[0]))
                fail(line.number, "invalid symbol name " + toks[0]);
            if (table_->find(toks[0])) fail(line.number, "symbol " + toks[0] + " already declared");
            table_->declare(toks[0]);
        }
        for (const RawLine& line : body) {
            const auto toks = split_ws(line.text);
            const SymbolId id = *table_->find(toks[0]);
            for (std::size_t t = 1; t < toks.size(); ++t) {
                const auto eq = toks[t].find('=');
                if (eq == std::string::npos)
                    fail(line.number, "expected direction=expression, got " + toks[t]);
                const std::string dir_name = toks[t].substr(0, eq);
                std::size_t dir = dim_;
                for (std::size_t d = 0; d < dim_; ++d)
                    if (basis_[d] == dir_name) dir = d;
                if (dir == dim_) fail(line.number, "unknown direction " + dir_name);
                const std::size_t col = line.text.find(toks[t]) + eq + 2;
                table_->set_partial(id, dir, parse_in(line.number, toks[t].substr(eq + 1), col));
            }
        }
    }

    void parse_metric() {
        open_section("metric");
        metric_.clear();
        for (std::size_t i = 0; i < dim_; ++i) {
            const RawLine& line = need_line("a metric row");
            metric_.push_back(parse_row(line, line.text, 0, dim_));
        }
        close_section("metric");
    }

    void parse_brackets() {
        if (!at_header("brackets")) return;
        if (mode_ == FrameMode::Chart)
            fail(lines_[pos_].number, "brackets are only allowed in frame mode");
        ++pos_;
        brackets_.assign(dim_, std::vector<std::vector<ScalarExpr>>(
                                   dim_, std::vector<ScalarExpr>(dim_)));
        std::vector<std::vector<std::vector<bool>>> seen(
            dim_, std::vector<std::vector<bool>>(dim_, std::vector<bool>(dim_, false)));
        while (!at_close()) {
            const RawLine& line = need_line("a bracket entry 'i j k : expr'");
            const auto colon = line.text.find(':');
            if (colon == std::string::npos)
                fail(line.number, "expected 'i j k : expr'");
            const auto toks = split_ws(line.text.substr(0, colon));
            if (toks.size() != 3) fail(line.number, "expected three indices before ':'");
            std::size_t ix[3];
            for (int t = 0; t < 3; ++t) {
                try {
                    ix[t] = std::stoul(toks[t]);
                } catch (...) {
                    fail(line.number, "indices must be integers in 1.." + std::to_string(dim_));
                }
                if (ix[t] < 1 || ix[t] > dim_)
                    fail(line.number, "indices must be integers in 1.." + std::to_string(dim_));
                --ix[t];
            }
            if (ix[0] == ix[1]) fail(line.number, "bracket of a basis vector with itself is zero");
            if (seen[ix[0]][ix[1]][ix[2]])
                fail(line.number, "duplicate bracket coefficient");
            ScalarExpr c = parse_in(line.number, line.text.substr(colon + 1), colon + 2);
            brackets_[ix[0]][ix[1]][ix[2]] = c;
            brackets_[ix[1]][ix[0]][ix[2]] = -c;
            seen[ix[0]][ix[1]][ix[2]] = seen[ix[1]][ix[0]][ix[2]] = true;
        }
        close_section("brackets");
    }

    void build_model() {
        ManifoldModel::Init init;
        init.name = name_;
        init.mode = mode_;
        init.basis = basis_;
        init.table = table_;
        init.metric = metric_;
        init.brackets = brackets_;
        bundle_.model = ManifoldModel::create(std::move(init));
    }

    void parse_structure() {
        if (!at_header("structure")) return;
        ++pos_;
        auto mode = ParacontactStructure::Mode::Strict;
        std::optional<TensorField> phi, xi, eta;
        while (!at_close()) {
            const RawLine& line = need_line("a structure entry");
            const auto toks = split_ws(line.text);
            if (toks[0] == "mode" && toks.size() == 2) {
                if (toks[1] == "strict") mode = ParacontactStructure::Mode::Strict;
                else if (toks[1] == "diagnostic") mode = ParacontactStructure::Mode::Diagnostic;
                else fail(line.number, "structure mode must be 'strict' or 'diagnostic'");
            } else if (toks[0] == "phi" && toks.size() == 2 && toks[1] == "{") {
                TensorField m(bundle_.model, {1, 1});
                for (std::size_t i = 0; i < dim_; ++i) {
                    const RawLine& row = need_line("a phi matrix row");
                    auto vals = parse_row(row, row.text, 0, dim_);
                    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::move(vals[j]);
                }
                close_section("phi");
                phi = std::move(m);
            } else if ((toks[0] == "xi" || toks[0] == "eta") && toks.size() >= 2) {
                const std::size_t start = line.text.find(toks[0]) + toks[0].size();
                auto vals = parse_row(line, line.text.substr(start), start, dim_);
                TensorField t(bundle_.model,
                              toks[0] == "xi" ? Valence{1, 0} : Valence{0, 1});
                for (std::size_t j = 0; j < dim_; ++j) t.at({j}) = std::move(vals[j]);
                if (toks[0] == "xi") xi = std::move(t);
                else eta = std::move(t);
            } else {
                fail(line.number, "unknown structure entry '" + toks[0] + "'");
            }
        }
        close_section("structure");
        if (!phi || !xi || !eta)
            throw SemanticError("structure section needs phi, xi and eta", "structure");
        bundle_.structure.emplace(bundle_.model, std::move(*phi), std::move(*xi),
                                  std::move(*eta), mode);
    }

    void parse_fields() {
        if (!at_header("fields")) return;
        ++pos_;
        while (!at_close()) {
            const RawLine& line = need_line("a field declaration");
            const auto colon = line.text.find(':');
            if (colon == std::string::npos)
                fail(line.number, "expected 'vector|scalar name : ...'");
            const auto toks = split_ws(line.text.substr(0, colon));
            if (toks.size() != 2 || (toks[0] != "vector" && toks[0] != "scalar"))
                fail(line.number, "expected 'vector|scalar name : ...'");
            const std::string& fname = toks[1];
            if (!is_valid_symbol_name(fname)) fail(line.number, "invalid field name " + fname);
            if (bundle_.vector_fields.count(fname) || bundle_.scalar_fields.count(fname))
                fail(line.number, "field " + fname + " already declared");
            const std::string rest = line.text.substr(colon + 1);
            if (toks[0] == "vector") {
                auto vals = parse_row(line, rest, colon + 1, dim_);
                TensorField v(bundle_.model, {1, 0});
                for (std::size_t j = 0; j < dim_; ++j) v(j) = std::move(vals[j]);
                bundle_.vector_fields.emplace(fname, std::move(v));
            } else {
                bundle_.scalar_fields.emplace(fname, parse_in(line.number, rest, colon + 2));
            }
        }
        close_section("fields");
    }

    void parse_soliton() {
        if (!at_header("soliton")) return;
        ++pos_;
        ModelBundle::SolitonSection sec;
        while (!at_close()) {
            const RawLine& line = need_line("a soliton entry");
            const auto toks = split_ws(line.text);
            const std::size_t rest_at = line.text.find(toks[0]) + toks[0].size();
            const std::string rest = trim(line.text.substr(rest_at));
            if (rest.empty()) fail(line.number, "entry '" + toks[0] + "' needs a value");
            if (toks[0] == "potential") sec.potential = rest;
            else if (toks[0] == "lambda") sec.lambda = parse_in(line.number, rest, rest_at + 1);
            else if (toks[0] == "delta") sec.delta = parse_in(line.number, rest, rest_at + 1);
            else if (toks[0] == "u") sec.u = parse_in(line.number, rest, rest_at + 1);
            else fail(line.number, "unknown soliton entry '" + toks[0] + "'");
        }
        close_section("soliton");
        bundle_.soliton = std::move(sec);
    }

    std::string origin_;
    std::vector<RawLine> lines_;
    std::size_t pos_ = 0;

    std::string name_ = "manifold";
    std::size_t dim_ = 0;
    FrameMode mode_ = FrameMode::Chart;
    bool have_mode_ = false;
    std::vector<std::string> basis_;
    std::shared_ptr<SymbolTable> table_;
    std::vector<std::vector<ScalarExpr>> metric_;
    std::vector<std::vector<std::vector<ScalarExpr>>> brackets_;
    ModelBundle bundle_;
};

} // namespace

ModelBundle parse_model_text(std::string_view text, std::string origin) {
    return FileParser(text, std::move(origin)).run();
}

ModelBundle load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str(), path);
}

ModelBundle load_input(const std::string& path_or_uri) {
    if (is_builtin_uri(path_or_uri)) return make_builtin(path_or_uri);
    return load_model_file(path_or_uri);
}

std::string write_model_text(const ModelBundle& bundle) {
    const ManifoldModel& m = *bundle.model;
    const SymbolTable& table = m.symbols();
    const std::size_t n = m.dim();
    std::ostringstream out;

    out << "manifold {\n";
    out << "  name " << m.name() << "\n";
    out << "  dimension " << n << "\n";
    out << "  mode " << (m.mode() == FrameMode::Chart ? "chart" : "frame") << "\n";
    out << "  basis";
    for (std::size_t i = 0; i < n; ++i) out << " " << m.basis_name(i);
    out << "\n}\n";

    auto is_coordinate = [&](const std::string& name) {
        if (m.mode() != FrameMode::Chart) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (m.basis_name(i) == name) return true;
        return false;
    };
    std::vector<SymbolId> extra;
    for (std::uint32_t s = 0; s < table.size(); ++s)
        if (!is_coordinate(table.name(SymbolId{s}))) extra.push_back(SymbolId{s});
    if (!extra.empty()) {
        out << "symbols {\n";
        for (SymbolId s : extra) {
            out << "  " << table.name(s);
            for (std::size_t d = 0; d < n; ++d)
                if (!table.partial(s, d).is_zero())
                    out << " " << m.basis_name(d) << "=" << to_string(table.partial(s, d), table);
            out << "\n";
        }
        out << "}\n";
    }

    out << "metric {\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << "  ";
        for (std::size_t j = 0; j < n; ++j)
            out << (j ? ", " : "") << to_string(m.metric(i, j), table);
        out << "\n";
    }
    out << "}\n";

    if (m.mode() == FrameMode::Frame) {
        std::ostringstream rows;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!m.bracket_coeff(i, j, k).is_zero())
                        rows << "  " << i + 1 << " " << j + 1 << " " << k + 1 << " : "
                             << to_string(m.bracket_coeff(i, j, k), table) << "\n";
        const std::string body = rows.str();
        if (!body.empty()) out << "brackets {\n" << body << "}\n";
    }

    if (bundle.structure) {
        const ParacontactStructure& s = *bundle.structure;
        out << "structure {\n  mode "
            << (s.mode() == ParacontactStructure::Mode::Strict ? "strict" : "diagnostic")
            << "\n  phi {\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << "    ";
            for (std::size_t j = 0; j < n; ++j)
                out << (j ? ", " : "") << to_string(s.phi()(i, j), table);
            out << "\n";
        }
        out << "  }\n  xi ";
        for (std::size_t j = 0; j < n; ++j)
            out << (j ? ", " : "") << to_string(s.xi()(j), table);
        out << "\n  eta ";
        for (std::size_t j = 0; j < n; ++j)
            out << (j ? ", " : "") << to_string(s.eta()(j), table);
        out << "\n}\n";
    }

    if (!bundle.vector_fields.empty() || !bundle.scalar_fields.empty()) {
        out << "fields {\n";
        for (const auto& [fname, v] : bundle.vector_fields) {
            out << "  vector " << fname << " : ";
            for (std::size_t j = 0; j < n; ++j)
                out << (j ? ", " : "") << to_string(v(j), table);
            out << "\n";
        }
        for (const auto& [fname, e] : bundle.scalar_fields)
            out << "  scalar " << fname << " : " << to_string(e, table) << "\n";
        out << "}\n";
    }

    if (bundle.soliton) {
        const auto& sec = *bundle.soliton;
        out << "soliton {\n";
        if (!sec.potential.empty()) out << "  potential " << sec.potential << "\n";
        if (sec.lambda) out << "  lambda " << to_string(*sec.lambda, table) << "\n";
        if (sec.delta) out << "  delta " << to_string(*sec.delta, table) << "\n";
        if (sec.u) out << "  u " << to_string(*sec.u, table) << "\n";
        out << "}\n";
    }

    return out.str();
}

} // namespace parayam
