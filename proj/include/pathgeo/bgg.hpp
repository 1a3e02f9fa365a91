#pragma once

// Scalar BGG fragment: the operator L completing a section of H* to a
// one-form killed by d on E x V, the induced Lambda^2 V* and E* (x) S^2 V*
// pieces of dL, distinguished scales, and the extra torsion/curvature
// vanishing they produce.

#include <optional>

#include "pathgeo/weyl.hpp"

namespace pathgeo {

struct HStarSection {
    RatExpr aE;                 // value on xiE
    std::vector<RatExpr> aV;    // values on eta_a
};

struct DOutput {
    // S[a][b] = dL(a0)(eta_a, [xiE, eta_b]) against the Q-basis; symmetric.
    Mat S;
    // eQ[b] = dL(a0)(xiE, [xiE, eta_b]): the E* (x) Q* part.
    std::vector<RatExpr> eQ;
    bool is_zero() const;
};

struct DistinguishedReport {
    bool distinguished = false;   // D(alpha0) == 0 exactly
    bool dL_zero = false;         // full two-form dL(alpha0) == 0
};

// Unique alpha with alpha|_H = a0 and d(alpha)|_{E x V} = 0.
OneForm L_op(const PathGeometry& g, const HStarSection& a0);

// dL(a0)(eta_a, eta_b) for a < b, row-major in (a, b).
std::vector<RatExpr> VV_component(const PathGeometry& g, const HStarSection& a0);

// Requires a0 with aV = 0; throws if the symmetry S_ab = S_ba fails, since
// that signals a construction bug rather than bad input.
DOutput D_op(const PathGeometry& g, const HStarSection& a0);

DistinguishedReport is_distinguished(const PathGeometry& g, const Scale& s);

// ODE-chart geometries only (V spanned by the coordinate fields d_{p^a});
// returns the certified scale, or nullopt for unsupported frame input.
std::optional<Scale> find_distinguished(const PathGeometry& g);

// Theorem-level suite: tau|_{V x iota(Q)} = 0, R|_{Lambda^2 H x V} = 0 and
// d(alpha) = 0 for a distinguished scale's Weyl structure.
void check_distinguished_vanishing(const WeylStructure& w, CheckContext& ctx);

}  // namespace pathgeo
