#pragma once

// The density line bundle L = (E (x) Lambda^n V*)^(1/(n+2)) with its induced
// Weyl connections, and the Schouten tensor with its block-recursive
// construction, distinguished-scale simplification, and change-of-scale law.
//
// Density sections are stored against the fixed reference trivialization
// lambda_ref = (xiE (x) omega_ref)^(1/(n+2)), omega_ref the dual n-form of
// (eta_1..eta_n); lambda_ref does not depend on the scale.

#include "pathgeo/weyl.hpp"

namespace pathgeo {

struct DensitySection {
    RatExpr coeff;  // with respect to lambda_ref
};

struct DensityConnectionForm {
    OneForm gammaL;  // nabla_psi lambda_ref = gammaL(psi) lambda_ref
};

struct SchoutenTensor {
    Mat P;              // adapted-coframe components, P.at(A,B) = P(e_A, e_B)
    bool n1_limit = false;  // n = 1: the V x V line used its finite-limit form
};

DensityConnectionForm density_connection(const WeylStructure& w);

// Curvature two-form of the induced connection on L, evaluated on fields.
RatExpr density_curvature(const WeylStructure& w, const DensityConnectionForm& conn,
                          const VectorField& X, const VectorField& Y);

SchoutenTensor schouten(const WeylStructure& w);

// Evaluation of the tensor on arbitrary fields through frame expansion.
RatExpr schouten_eval(const WeylStructure& w, const SchoutenTensor& P, const VectorField& X,
                      const VectorField& Y);

void check_density_transform(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                             CheckContext& ctx);
void check_partial_invariance(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                              CheckContext& ctx);
void check_schouten_distinguished(const WeylStructure& w, CheckContext& ctx);
void check_schouten_transform(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                              CheckContext& ctx);

}  // namespace pathgeo
