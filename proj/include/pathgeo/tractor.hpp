#pragma once

// Standard tractors: scale-indexed triples (nu, rho, tau), the change of
// splitting between scales, the tractor connection, splitting and relative
// BGG operators, and the second-order invariant operator on densities.
//
// Component conventions: nu against eta_a (x) lambda_ref, rho against
// lambda_ref, tau against the current scale's xi0-dual (x) lambda_ref.  Only
// the tau slot rebases under a change of scale (factor gfac).

#include "pathgeo/schouten.hpp"

namespace pathgeo {

struct TractorTriple {
    std::vector<RatExpr> nu;  // n components
    RatExpr rho;
    RatExpr tau;
    Scale scale_tag;
};

struct OneFormSplit {
    RatExpr cE;                // value on xi0
    std::vector<RatExpr> cV;   // values on eta_a
    std::vector<RatExpr> cQ;   // values on zeta_a
};

OneFormSplit split_one_form(const WeylStructure& w, const OneForm& gamma);

// Rewrites t (tagged with w's scale) relative to the scale gfac * s.
TractorTriple change_splitting(const TractorTriple& t, const WeylStructure& w,
                               const RatExpr& gfac);

// Covariant tractor derivative in the adapted frame direction A.
TractorTriple tractor_derivative(const WeylStructure& w, const SchoutenTensor& P, std::size_t A,
                                 const TractorTriple& t);
// Same, for an arbitrary direction field (expanded through the frame).
TractorTriple tractor_derivative_vec(const WeylStructure& w, const SchoutenTensor& P,
                                     const VectorField& X, const TractorTriple& t);

void check_tractor_invariance(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                              const std::vector<TractorTriple>& triples, CheckContext& ctx);

// S(rho) = (0, rho, -nabla^E rho) and the relative BGG operator
// D(rho) = bottom slot of the E-direction tractor derivative of S(rho),
// with respect to (xi0-dual)^2 (x) lambda_ref.
TractorTriple splitting_S_rho(const WeylStructure& w, const SchoutenTensor& P,
                              const DensitySection& rho);
RatExpr rel_bgg_D_rho(const WeylStructure& w, const SchoutenTensor& P, const DensitySection& rho);

// S(nu) = (nu, -(1/n) div^V nu, *) into the quotient by the bottom slot;
// D(nu) = trace-free part of nabla^V nu, components D[a][b] on
// (eta_a-dual (x) eta_b (x) lambda_ref).
struct NuSplit {
    std::vector<RatExpr> nu;
    RatExpr rho;
};
NuSplit splitting_S_nu(const WeylStructure& w, const std::vector<RatExpr>& nu);
Mat rel_bgg_D_nu(const WeylStructure& w, const std::vector<RatExpr>& nu);

// D rho = (nabla_E)^2 rho - P^EE rho on (xi0, xi0).
RatExpr invariant_op_D(const WeylStructure& w, const SchoutenTensor& P,
                       const DensitySection& rho);

void check_invariant_op(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                        const DensitySection& rho, CheckContext& ctx);

// Tractor curvature on a frame pair applied to t (zero on the flat model by
// the general theory; reported, not asserted, by the acceptance suite).
TractorTriple tractor_curvature(const WeylStructure& w, const SchoutenTensor& P, std::size_t A,
                                std::size_t B, const TractorTriple& t);

// Density derivative helper shared with the suites: coefficient of
// nabla_psi (r lambda_ref).
RatExpr density_derivative(const WeylStructure& w, const DensityConnectionForm& conn,
                           const VectorField& psi, const RatExpr& r);
RatExpr density_derivative(const WeylStructure& w, const VectorField& psi, const RatExpr& r);

}  // namespace pathgeo
