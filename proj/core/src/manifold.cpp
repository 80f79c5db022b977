#include "parayam/manifold.hpp"

namespace parayam {

namespace {

std::vector<std::vector<ScalarExpr>> minor_matrix(const std::vector<std::vector<ScalarExpr>>& m,
                                                  std::size_t row, std::size_t col) {
    const std::size_t n = m.size();
    std::vector<std::vector<ScalarExpr>> out;
    out.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<ScalarExpr> r;
        r.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == col) continue;
            r.push_back(m[i][j]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

ScalarExpr determinant(const std::vector<std::vector<ScalarExpr>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return ScalarExpr::integer(1);
    if (n == 1) return m[0][0];
    ScalarExpr det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        ScalarExpr cof = m[0][j] * determinant(minor_matrix(m, 0, j));
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

ModelPtr ManifoldModel::create(Init init) {
    const std::size_t n = init.basis.size();
    if (n == 0) throw SemanticError("manifold needs at least one basis vector", init.name);
    if (!init.table) throw SemanticError("manifold needs a symbol table", init.name);
    if (init.table->directions() != n)
        throw SemanticError("symbol table directions do not match the dimension", init.name);
    if (init.metric.size() != n)
        throw SemanticError("metric must be a square matrix of the dimension", init.name);
    for (const auto& row : init.metric)
        if (row.size() != n)
            throw SemanticError("metric must be a square matrix of the dimension", init.name);

    auto model = std::shared_ptr<ManifoldModel>(new ManifoldModel());
    model->name_ = std::move(init.name);
    model->mode_ = init.mode;
    model->basis_ = std::move(init.basis);
    model->table_ = init.table;

    // Metric: symmetric and exactly invertible.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!equivalent(init.metric[i][j], init.metric[j][i]))
                throw SemanticError("metric is not symmetric at (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")",
                                    model->name_);
    model->metric_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            model->metric_[i * n + j] = init.metric[std::min(i, j)][std::max(i, j)];

    model->det_ = determinant(init.metric);
    if (model->det_.is_zero())
        throw SemanticError("metric is singular (exact determinant is zero)", model->name_);
    model->inverse_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr cof = determinant(minor_matrix(init.metric, j, i));
            if ((i + j) % 2 == 1) cof = -cof;
            model->inverse_[i * n + j] = cof / model->det_;
        }

    // Brackets: only in frame mode; antisymmetric and Jacobi-closed.
    model->brackets_.resize(n * n * n);
    if (init.mode == FrameMode::Chart) {
        if (!init.brackets.empty())
            throw SemanticError("chart-mode models cannot declare brackets", model->name_);
    } else {
        if (init.brackets.size() != n)
            throw SemanticError("brackets must form an n*n*n table", model->name_);
        for (std::size_t i = 0; i < n; ++i) {
            if (init.brackets[i].size() != n)
                throw SemanticError("brackets must form an n*n*n table", model->name_);
            for (std::size_t j = 0; j < n; ++j)
                if (init.brackets[i][j].size() != n)
                    throw SemanticError("brackets must form an n*n*n table", model->name_);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!equivalent(init.brackets[i][j][k], -init.brackets[j][i][k]))
                        throw SemanticError("brackets are not antisymmetric", model->name_);
                    model->brackets_[(i * n + j) * n + k] = init.brackets[i][j][k];
                }

        // Jacobi identity: cyclic sum of [e_i,[e_j,e_k]] must vanish, with
        // the derivative terms e_i(c^l_jk) included for non-constant
        // structure functions.
        const auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const ScalarExpr& {
            return model->brackets_[(i * n + j) * n + k];
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        ScalarExpr jac;
                        const std::size_t idx[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                        for (const auto& [a, b, d] : idx) {
                            jac += model->derive(c(b, d, l), a);
                            for (std::size_t m = 0; m < n; ++m) jac += c(b, d, m) * c(a, m, l);
                        }
                        if (!jac.is_zero())
                            throw SemanticError("brackets violate the Jacobi identity",
                                                model->name_);
                    }
    }

    return model;
}

const ScalarExpr& ManifoldModel::metric(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw Error("metric index out of range");
    return metric_[i * n + j];
}

const ScalarExpr& ManifoldModel::metric_inverse(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw Error("metric index out of range");
    return inverse_[i * n + j];
}

const ScalarExpr& ManifoldModel::bracket_coeff(std::size_t i, std::size_t j,
                                               std::size_t k) const {
    const std::size_t n = dim();
    if (i >= n || j >= n || k >= n) throw Error("bracket index out of range");
    return brackets_[(i * n + j) * n + k];
}

ScalarExpr ManifoldModel::derive(const ScalarExpr& e, std::size_t direction) const {
    return differentiate(e, direction, *table_);
}

} // namespace parayam
