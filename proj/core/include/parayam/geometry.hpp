#pragma once

#include "parayam/manifold.hpp"
#include "parayam/tensor.hpp"

namespace parayam {

// Levi-Civita connection coefficients: coeff(k,i,j) is the e_k component of
// the covariant derivative of e_j along e_i.  levi_civita() re-verifies
// torsion-freeness and metric compatibility symbolically before returning.
struct ConnectionData {
    ModelPtr model;
    std::vector<ScalarExpr> gamma; // k*n*n + i*n + j

    const ScalarExpr& coeff(std::size_t k, std::size_t i, std::size_t j) const {
        const std::size_t n = model->dim();
        return gamma.at((k * n + i) * n + j);
    }
};

ConnectionData levi_civita(const ModelPtr& model);

// Curvature R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y], stored as a (1,3)
// field: riemann(l,i,j,k) = component l of R(e_i,e_j)e_k.
TensorField riemann(const ConnectionData& conn);

// Ricci(Y,Z) = trace of X -> R(X,Y)Z, a symmetric (0,2) field.
TensorField ricci(const TensorField& riem);
// Q with g(QX,Y) = Ricci(X,Y), a (1,1) field.
TensorField ricci_operator(const TensorField& ric);
// r = trace Q.
ScalarExpr scalar_curvature(const TensorField& ric);

// The full curvature bundle; computed once and shared.
struct CurvatureData {
    ConnectionData conn;
    TensorField riem;
    TensorField ric;
    TensorField q;
    ScalarExpr r;
};
CurvatureData curvature(const ModelPtr& model);

// Basis vector e_i as a (1,0) field.
TensorField basis_vector(const ModelPtr& model, std::size_t i);
// The metric as a (0,2) field.
TensorField metric_tensor(const ModelPtr& model);
// Identity (1,1) field.
TensorField identity_operator(const ModelPtr& model);

// Pointwise pairings.
ScalarExpr inner(const TensorField& x, const TensorField& y);       // g(X,Y)
ScalarExpr one_form_on(const TensorField& w, const TensorField& x); // w(X)
TensorField apply_operator(const TensorField& a, const TensorField& x); // A(X)
TensorField lower_index(const TensorField& x);  // g(X, .) as a one-form
TensorField tensor_product_form(const TensorField& w1, const TensorField& w2); // w1 (x) w2

// Z(f): derivative of a scalar along a vector field.
ScalarExpr directional(const TensorField& z, const ScalarExpr& f);

// Lie bracket of vector fields.
TensorField lie_bracket(const TensorField& x, const TensorField& y);

// Lie derivative along Z of a (1,0), (0,1), (0,2) or (1,1) field.
TensorField lie_derivative(const TensorField& z, const TensorField& t);

// Exterior derivative with the determinant-free 1/(p+1) convention:
// (d w)(X,Y) = (1/2)(X w(Y) - Y w(X) - w([X,Y])) for one-forms, and the
// analogous 1/3 formula taking antisymmetric (0,2) forms to (0,3).
TensorField exterior_derivative(const TensorField& form);

// grad u, with components raised by the inverse metric.
TensorField gradient(const ModelPtr& model, const ScalarExpr& u);
// Hess u (X,Y) = X(Y(u)) - (nabla_X Y)(u), symmetric (0,2).
TensorField hessian(const ConnectionData& conn, const ScalarExpr& u);
// div Z = trace of X -> nabla_X Z.
ScalarExpr divergence(const ConnectionData& conn, const TensorField& z);

// nabla_X W for vector fields X, W.
TensorField covariant_derivative_along(const ConnectionData& conn, const TensorField& x,
                                       const TensorField& w);

// nabla T with one extra covariant slot inserted right after the
// contravariant block: (nabla T)(ups..., a, downs...) = (nabla_{e_a} T)(...).
TensorField covariant_derivative(const ConnectionData& conn, const TensorField& t);

// (L_Z nabla)(X,Y) = [Z, nabla_X Y] - nabla_[Z,X] Y - nabla_X [Z,Y], a
// symmetric (1,2) field stored as (k, i, j).
TensorField lie_derivative_connection(const ConnectionData& conn, const TensorField& z);

} // namespace parayam
