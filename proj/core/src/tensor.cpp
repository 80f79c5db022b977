#include "parayam/tensor.hpp"

#include "parayam/manifold.hpp"

namespace parayam {

TensorField::TensorField(ModelPtr model, Valence valence)
    : model_(std::move(model)), valence_(valence), dim_(model_->dim()) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < valence_.rank(); ++i) size *= dim_;
    comps_.resize(size);
}

std::size_t TensorField::flatten(const std::vector<std::size_t>& index) const {
    if (index.size() != valence_.rank())
        throw Error("tensor index rank mismatch");
    std::size_t flat = 0;
    for (const std::size_t i : index) {
        if (i >= dim_) throw Error("tensor index out of range");
        flat = flat * dim_ + i;
    }
    return flat;
}

const ScalarExpr& TensorField::at(const std::vector<std::size_t>& index) const {
    return comps_[flatten(index)];
}

ScalarExpr& TensorField::at(const std::vector<std::size_t>& index) {
    return comps_[flatten(index)];
}

bool TensorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

TensorField TensorField::plus(const TensorField& other) const {
    require_same_model(*this, other);
    if (!(valence_ == other.valence_)) throw SemanticError("tensor valence mismatch");
    TensorField out = *this;
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] += other.comps_[i];
    return out;
}

TensorField TensorField::minus(const TensorField& other) const {
    return plus(other.negated());
}

TensorField TensorField::negated() const {
    TensorField out = *this;
    for (auto& c : out.comps_) c = -c;
    return out;
}

TensorField TensorField::scaled(const ScalarExpr& c) const {
    TensorField out = *this;
    for (auto& comp : out.comps_) comp = comp * c;
    return out;
}

void TensorField::for_each_index(
    const std::function<void(const std::vector<std::size_t>&)>& fn) const {
    const std::size_t rank = valence_.rank();
    std::vector<std::size_t> index(rank, 0);
    if (rank == 0) {
        fn(index);
        return;
    }
    while (true) {
        fn(index);
        std::size_t slot = rank;
        while (slot > 0) {
            --slot;
            if (++index[slot] < dim_) break;
            index[slot] = 0;
            if (slot == 0) return;
        }
    }
}

std::vector<std::pair<std::vector<std::size_t>, ScalarExpr>>
TensorField::nonzero_components() const {
    std::vector<std::pair<std::vector<std::size_t>, ScalarExpr>> out;
    for_each_index([&](const std::vector<std::size_t>& index) {
        const ScalarExpr& c = at(index);
        if (!c.is_zero()) out.push_back({index, c});
    });
    return out;
}

void require_same_model(const TensorField& a, const TensorField& b) {
    if (a.model().get() != b.model().get())
        throw SemanticError("tensor fields live on different manifold models");
}

} // namespace parayam
