#pragma once

#include <string>

#include "hsymm/convex_core.hpp"
#include "hsymm/khessian.hpp"
#include "hsymm/report.hpp"
#include "hsymm/stability.hpp"
#include "hsymm/symmetrize.hpp"

namespace hsymm {

// Sharpened Polya-Szego inequality for the k-Hessian energy:
//   (H_k(u) - H_k(u*_{k-1})) / ||u||_inf^{k+1} >= C_1 alpha^{(n+3)/2 + k + 1}.
DeficitReport polya_szego_report(const ConvexTestFunction& u, int k);

// Quantitative sup-norm gap between the symmetrized solution and the
// symmetrized problem's solution:
//   ||u*_{k-1} - u0||_inf / ||u||_inf >= C_2 alpha^{(n+5)/2}.
// Both the stated and the reassembled C_2 are evaluated; the bound uses the
// smaller one. Also asserts u0 <= u*_{k-1} <= 0 on the radial grid.
DeficitReport talenti_gap_report(const ConvexBody& body, const SourceField& f, int k);

// Energy comparison H_k(u; Omega) <= H_k(u0; Omega*_{k-1}) with the
// quantitative gap (H_k(u0) - H_k(u)) / (||u||_inf ||f||_1) >= C_3 alpha^{(n+5)/2}.
DeficitReport hk_comparison_report(const ConvexBody& body, const SourceField& f, int k);

// Quantitative Faber-Krahn: sigma_1^k(Omega) - sigma_1^k(Omega*_{k-1}) >=
// C_4 alpha^{(n+3)/2 + k + 1}. Full check for k = 1 on 2D bodies (finite
// difference oracle); balls saturate exactly; anything else runs bound_only
// with a variational upper bound from a quadratic trial function when one exists.
DeficitReport faber_krahn_report(const ConvexBody& body, int k);

// Quantitative Saint-Venant: 1/T(Omega) - 1/T(Omega*_{k-1}) >=
// C_5 alpha^{(n+3)/2 + k + 1} for balls and ellipsoids (explicit torsion).
DeficitReport saint_venant_report(const ConvexBody& body, int k);

// Grid assertion of the pointwise comparison u0 <= u*_{k-1} <= 0.
DeficitReport pointwise_tso_check(const ConvexBody& body, const SourceField& f, int k);

// JSON object per report: {name, n, k, body_id, alpha, lhs, rhs, margin,
// status, constants:{...}}, numbers at 17 significant digits.
std::string report_json(const DeficitReport& rep, const std::string& body_id);

}  // namespace hsymm
