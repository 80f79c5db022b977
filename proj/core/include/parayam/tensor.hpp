#pragma once

#include "parayam/error.hpp"
#include "parayam/expr.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace parayam {

class ManifoldModel;
using ModelPtr = std::shared_ptr<const ManifoldModel>;

struct Valence {
    std::size_t up = 0;   // contravariant slots
    std::size_t down = 0; // covariant slots

    std::size_t rank() const { return up + down; }
    friend bool operator==(const Valence& a, const Valence& b) {
        return a.up == b.up && a.down == b.down;
    }
};

// Dense tensor field on one model, components indexed contravariant slots
// first.  A vector field Z is (1,0) with Z(k); a one-form is (0,1); a (1,1)
// field A stores A(k, j) = component k of A(e_j); the curvature tensor is
// (1,3) with R(l, i, j, k) = component l of R(e_i, e_j)e_k.
class TensorField {
public:
    TensorField(ModelPtr model, Valence valence);

    const ModelPtr& model() const { return model_; }
    const Valence& valence() const { return valence_; }
    std::size_t dim() const { return dim_; }

    const ScalarExpr& at(const std::vector<std::size_t>& index) const;
    ScalarExpr& at(const std::vector<std::size_t>& index);

    template <class... Ix>
    const ScalarExpr& operator()(Ix... ix) const {
        return at(std::vector<std::size_t>{static_cast<std::size_t>(ix)...});
    }
    template <class... Ix>
    ScalarExpr& operator()(Ix... ix) {
        return at(std::vector<std::size_t>{static_cast<std::size_t>(ix)...});
    }

    bool is_zero() const;

    TensorField plus(const TensorField& other) const;
    TensorField minus(const TensorField& other) const;
    TensorField negated() const;
    TensorField scaled(const ScalarExpr& c) const;

    // Invokes fn for every multi-index in row-major order.
    void for_each_index(const std::function<void(const std::vector<std::size_t>&)>& fn) const;

    // Nonzero components with their indices, in deterministic row-major
    // order; the failure witnesses shown in reports.
    std::vector<std::pair<std::vector<std::size_t>, ScalarExpr>> nonzero_components() const;

private:
    std::size_t flatten(const std::vector<std::size_t>& index) const;

    ModelPtr model_;
    Valence valence_;
    std::size_t dim_;
    std::vector<ScalarExpr> comps_;
};

// Throws SemanticError unless both fields live on the same model instance.
void require_same_model(const TensorField& a, const TensorField& b);

} // namespace parayam
