#pragma once

#include "parayam/check_report.hpp"
#include "parayam/geometry.hpp"
#include "parayam/manifold.hpp"
#include "parayam/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parayam {

// An almost paracontact metric structure (phi, xi, eta) on a model whose
// metric is taken from the model itself.  The defining axioms are
//   phi^2 = I - eta (x) xi,    eta(xi) = 1,    phi xi = 0,   eta o phi = 0,
//   g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y).
//
// Strict mode throws on any axiom violation; diagnostic mode keeps the
// violated structure and records the witnesses, so defective inputs can
// still be loaded and reported on.
class ParacontactStructure {
public:
    enum class Mode { Strict, Diagnostic };

    ParacontactStructure(ModelPtr model, TensorField phi, TensorField xi,
                         TensorField eta, Mode mode = Mode::Strict);

    const ModelPtr& model() const { return model_; }
    const TensorField& phi() const { return phi_; }
    const TensorField& xi() const { return xi_; }
    const TensorField& eta() const { return eta_; }
    Mode mode() const { return mode_; }

    const CheckReport& axioms() const { return axioms_; }
    bool axioms_hold() const { return axioms_.passed(); }

private:
    ModelPtr model_;
    TensorField phi_, xi_, eta_;
    Mode mode_;
    CheckReport axioms_;
};

// Axioms of an almost paracontact metric structure, one residual each.
CheckReport verify_axioms(const ModelPtr& model, const TensorField& phi,
                          const TensorField& xi, const TensorField& eta);

// Phi(X, Y) = g(X, phi Y), the fundamental two-form.
TensorField fundamental_two_form(const ParacontactStructure& s);

// h = (1/2) L_xi phi.  When the structure is paracontact metric
// (Phi = d eta), the theory forces tr h = 0 and h phi + phi h = 0; these
// are asserted in that case and left unasserted otherwise.
TensorField h_operator(const ParacontactStructure& s);

// Nijenhuis torsion of phi as a (1,2) tensor:
//   [phi,phi](X,Y) = [phi X, phi Y] + phi^2 [X,Y] - phi [X, phi Y] - phi [phi X, Y].
TensorField nijenhuis(const ParacontactStructure& s);

// N = [phi,phi] - 2 d eta (x) xi; the structure is normal iff N = 0.
TensorField normality_tensor(const ParacontactStructure& s);

struct StructureClassReport {
    bool axioms_ok = false;
    bool paracontact_metric = false; // Phi = d eta
    bool k_paracontact = false;      // paracontact metric with h = 0
    bool normal = false;             // [phi,phi] = 2 d eta (x) xi
    bool para_sasakian = false;      // normal paracontact metric
    bool para_cosymplectic = false;  // normal, d eta = 0, d Phi = 0
    bool k_mu_nullity = false;       // R(X,Y)xi admits a (k, mu) expression
    std::optional<ScalarExpr> k;
    std::optional<ScalarExpr> mu;   // absent when indeterminate (h = 0)
    CheckReport details;            // defining residuals + consequence checks
    std::vector<std::string> notes;
};

// Full classification with the consequence identities of each class it
// detects re-verified against the curvature data.
StructureClassReport classify(const ParacontactStructure& s, const CurvatureData& curv);

} // namespace parayam
