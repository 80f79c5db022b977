#include "parayam/report.hpp"

#include "parayam/error.hpp"

#include <json.hpp>

#include <sstream>

namespace parayam {

namespace {

using ordered_json = nlohmann::ordered_json;

const SymbolTable* table_for_scalar(const CheckReport& check, const ReportSection& section) {
    if (check.model) return &check.model->symbols();
    if (section.model) return &section.model->symbols();
    return nullptr;
}

std::string render_scalar(const ScalarExpr& e, const SymbolTable* table) {
    if (e.is_zero()) return "0";
    if (!table) throw Error("scalar residual without a symbol context");
    return to_string(e, *table);
}

std::string render_index(const std::vector<std::size_t>& ix) {
    std::string s = "(";
    for (std::size_t t = 0; t < ix.size(); ++t) {
        if (t) s += ", ";
        s += std::to_string(ix[t] + 1);
    }
    return s + ")";
}

} // namespace

bool ReportDocument::ok() const {
    for (const auto& section : sections)
        for (const auto& check : section.checks)
            if (check.failed()) return false;
    return true;
}

bool ReportDocument::has_hypothesis_warnings() const {
    for (const auto& section : sections)
        for (const auto& check : section.checks)
            if (check.status == CheckStatus::HypothesisNotSatisfied) return true;
    return false;
}

int exit_code(const ReportDocument& doc) { return doc.ok() ? 0 : 1; }

std::string emit_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "== " << doc.command << " ==\n";
    if (!doc.input.empty()) out << "input: " << doc.input << "\n";

    for (const auto& section : doc.sections) {
        out << "\n[" << section.heading << "]\n";
        const SymbolTable* section_table =
            section.model ? &section.model->symbols() : nullptr;
        for (const auto& [label, value] : section.values)
            out << "  " << label << " = " << render_scalar(value, section_table) << "\n";
        for (const auto& check : section.checks) {
            out << "  check " << check.id << ": " << to_string(check.status) << "\n";
            const SymbolTable* table = table_for_scalar(check, section);
            for (const auto& item : check.residuals) {
                out << "    residual " << item.label << ": ";
                if (item.zero) {
                    out << "0\n";
                    continue;
                }
                if (const auto* scalar = std::get_if<ScalarExpr>(&item.value)) {
                    out << render_scalar(*scalar, table) << "\n";
                } else {
                    const auto& field = std::get<TensorField>(item.value);
                    const auto& ft = field.model()->symbols();
                    out << "nonzero at\n";
                    for (const auto& [ix, value] : field.nonzero_components())
                        out << "      " << render_index(ix) << ": " << to_string(value, ft)
                            << "\n";
                }
            }
            for (const auto& [label, value] : check.derived)
                out << "    " << label << " = " << render_scalar(value, table) << "\n";
            for (const auto& [label, value] : check.flags)
                out << "    " << label << ": " << (value ? "yes" : "no") << "\n";
            if (!check.note.empty()) out << "    note: " << check.note << "\n";
        }
    }

    if (!doc.warnings.empty()) {
        out << "\nwarnings:\n";
        for (const auto& w : doc.warnings) out << "  - " << w << "\n";
    }
    out << "\nresult: " << (doc.ok() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string emit_json(const ReportDocument& doc) {
    ordered_json root;
    root["command"] = doc.command;
    root["input"] = doc.input;
    root["sections"] = ordered_json::array();
    for (const auto& section : doc.sections) {
        ordered_json js;
        js["heading"] = section.heading;
        const SymbolTable* section_table =
            section.model ? &section.model->symbols() : nullptr;
        ordered_json values = ordered_json::object();
        for (const auto& [label, value] : section.values)
            values[label] = render_scalar(value, section_table);
        js["values"] = std::move(values);
        js["checks"] = ordered_json::array();
        for (const auto& check : section.checks) {
            ordered_json jc;
            jc["id"] = check.id;
            jc["status"] = to_string(check.status);
            const SymbolTable* table = table_for_scalar(check, section);
            jc["residuals"] = ordered_json::array();
            for (const auto& item : check.residuals) {
                ordered_json ji;
                ji["label"] = item.label;
                ji["zero"] = item.zero;
                if (const auto* scalar = std::get_if<ScalarExpr>(&item.value)) {
                    ji["value"] = render_scalar(*scalar, table);
                } else {
                    const auto& field = std::get<TensorField>(item.value);
                    const auto& ft = field.model()->symbols();
                    ordered_json comps = ordered_json::array();
                    for (const auto& [ix, value] : field.nonzero_components()) {
                        ordered_json jcomp;
                        jcomp["index"] = ordered_json::array();
                        for (std::size_t t : ix) jcomp["index"].push_back(t + 1);
                        jcomp["value"] = to_string(value, ft);
                        comps.push_back(std::move(jcomp));
                    }
                    ji["components"] = std::move(comps);
                }
                jc["residuals"].push_back(std::move(ji));
            }
            ordered_json derived = ordered_json::object();
            for (const auto& [label, value] : check.derived)
                derived[label] = render_scalar(value, table);
            jc["derived"] = std::move(derived);
            ordered_json flags = ordered_json::object();
            for (const auto& [label, value] : check.flags) flags[label] = value;
            jc["flags"] = std::move(flags);
            if (!check.note.empty()) jc["note"] = check.note;
            js["checks"].push_back(std::move(jc));
        }
        root["sections"].push_back(std::move(js));
    }
    root["warnings"] = doc.warnings;
    root["ok"] = doc.ok();
    return root.dump(2) + "\n";
}

} // namespace parayam
