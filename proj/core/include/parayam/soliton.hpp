#pragma once

#include "parayam/check_report.hpp"
#include "parayam/geometry.hpp"
#include "parayam/paracontact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parayam {

// Soliton data for the equation (delta/2) L_Z g = (r - lambda) g, with the
// gradient refinement delta Hess u = (r - lambda) g when Z = grad u.
struct SolitonData {
    TensorField z;
    std::optional<ScalarExpr> potential_u;
    ScalarExpr lambda;
    ScalarExpr delta; // must not be identically zero
};

// Everything the checks need, computed once: curvature, the optional
// structure with its classification, and whether the defining equations hold.
struct SolitonContext {
    ModelPtr model;
    std::optional<ParacontactStructure> structure;
    std::optional<StructureClassReport> cls;
    CurvatureData curv;
    SolitonData data;
    bool soliton_ok = false;  // metric soliton equation verified
    bool gradient_ok = false; // gradient equation verified (needs potential_u)

    // w = (r - lambda) / delta, the scale that recurs in every identity.
    ScalarExpr w() const;
};

SolitonContext make_context(ModelPtr model, std::optional<ParacontactStructure> structure,
                            SolitonData data);

// (delta/2) L_Z g - (r - lambda) g, componentwise.
CheckReport soliton_residual(const SolitonContext& ctx);

// delta Hess u - (r - lambda) g; on success the two curvature consequences
// GL1 and GL2 are verified as well.
CheckReport gradient_soliton_residual(const SolitonContext& ctx);

// Solves (delta/2) L_Z g = (r - lambda) g for a single lambda, or reports
// the first incompatible component pair as a witness.
CheckReport solve_lambda(const CurvatureData& curv, const TensorField& z,
                         const ScalarExpr& delta);

enum class SolitonKind { Expanding, Steady, Shrinking, Indefinite };
std::string to_string(SolitonKind k);
// Sign of a normalized lambda: negative = shrinking, zero = steady,
// positive = expanding, anything non-constant or sign-indefinite = Indefinite.
SolitonKind classify_soliton(const ScalarExpr& lambda);

// Human-readable family name: [gradient] {Yamabe | delta-Yamabe |
// delta-almost Yamabe} soliton.
std::string soliton_family(const SolitonContext& ctx);

// Extraction of a scalar factor plus the verification trail.
struct Extraction {
    std::optional<ScalarExpr> value;
    CheckReport report;
};

// rho with L_Z g = 2 rho g.
Extraction conformal_coefficient(const ModelPtr& model, const TensorField& z);

// sigma with L_Z eta = sigma eta; the divergence relation
// div Z = (m + 1) sigma is recorded alongside, not assumed.
Extraction contact_transformation_sigma(const ParacontactStructure& s,
                                        const ConnectionData& conn, const TensorField& z);

// Top component of eta ^ (d eta)^m, the contact volume density (odd dim).
ScalarExpr contact_volume_top(const ParacontactStructure& s);

enum class IdentityId { L1a, L1b, L1c, T2, T3, T4, T5, T6, T7, T8, T9, GL1, GL2 };

const std::vector<IdentityId>& all_identities();
std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

struct IdentityOptions {
    // Verify the Jacobi condition nabla_xi nabla_xi Z = R(Z, xi) xi along xi
    // and, once established, check its consequences.
    bool assume_jacobi = false;
};

CheckReport identity_check(const SolitonContext& ctx, IdentityId id,
                           const IdentityOptions& opts = {});

} // namespace parayam
