#pragma once

#include "parayam/expr.hpp"
#include "parayam/symbols.hpp"
#include "parayam/tensor.hpp"

#include <memory>
#include <string>
#include <vector>

namespace parayam {

enum class FrameMode {
    Chart, // basis = coordinate vector fields, all brackets vanish
    Frame  // basis = declared frame with structure functions [e_i,e_j] = c^k_ij e_k
};

// Immutable description of a pseudo-Riemannian manifold with a preferred
// basis: symbol table with derivative rules, metric components, and (in frame
// mode) the structure functions.  Construction validates everything once —
// symmetry and invertibility of the metric, antisymmetry and the Jacobi
// identity for the brackets — so downstream geometry can assume a sane model.
class ManifoldModel {
public:
    struct Init {
        std::string name;
        FrameMode mode = FrameMode::Chart;
        std::vector<std::string> basis;          // coordinate or frame labels
        std::shared_ptr<SymbolTable> table;      // rules already declared
        std::vector<std::vector<ScalarExpr>> metric;
        // brackets[i][j][k] = c^k_ij; must be empty in chart mode
        std::vector<std::vector<std::vector<ScalarExpr>>> brackets;
    };

    static ModelPtr create(Init init);

    const std::string& name() const { return name_; }
    FrameMode mode() const { return mode_; }
    std::size_t dim() const { return basis_.size(); }
    const std::string& basis_name(std::size_t i) const { return basis_.at(i); }
    const SymbolTable& symbols() const { return *table_; }

    const ScalarExpr& metric(std::size_t i, std::size_t j) const;
    const ScalarExpr& metric_inverse(std::size_t i, std::size_t j) const;
    const ScalarExpr& metric_determinant() const { return det_; }
    // c^k_ij, identically zero in chart mode.
    const ScalarExpr& bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const;

    // Directional derivative along basis vector i (= coordinate partial in
    // chart mode) under the model's declared rules.
    ScalarExpr derive(const ScalarExpr& e, std::size_t direction) const;

private:
    ManifoldModel() = default;

    std::string name_;
    FrameMode mode_ = FrameMode::Chart;
    std::vector<std::string> basis_;
    std::shared_ptr<const SymbolTable> table_;
    std::vector<ScalarExpr> metric_;    // n*n
    std::vector<ScalarExpr> inverse_;   // n*n
    ScalarExpr det_;
    std::vector<ScalarExpr> brackets_;  // n*n*n, zero-filled in chart mode
};

// Exact determinant of a square ScalarExpr matrix (cofactor expansion).
ScalarExpr determinant(const std::vector<std::vector<ScalarExpr>>& m);

} // namespace parayam
