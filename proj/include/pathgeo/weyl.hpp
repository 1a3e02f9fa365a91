#pragma once

// Weyl structures for a path geometry and a scale: the adapted frame
// (xi0, eta_a, zeta_a), the projection Pi onto H = E + V along iota(Q), the
// one-form alpha with Pi_E = alpha xi0, and the block-diagonal connection.
// Torsion/curvature components and the identity and change-of-scale suites
// live here as exact checks.

#include "pathgeo/check.hpp"
#include "pathgeo/geometry.hpp"

namespace pathgeo {

struct Scale {
    RatExpr g;  // nonzero; the scale is xi0 = g * xiE
};

// Frame index bookkeeping: A = 0 is the E slot (xi0), 1..n the V slots
// (eta_a), n+1..2n the iota(Q) slots (zeta_a).
enum class Bundle { E, V, Q };

class WeylStructure {
public:
    WeylStructure(PathGeometry geom, Scale scale);

    const PathGeometry& geometry() const { return geom_; }
    const Scale& scale() const { return scale_; }
    std::size_t n() const { return geom_.n(); }
    std::size_t dim() const { return geom_.dim(); }
    std::size_t nvars() const { return geom_.nvars(); }

    const VectorField& xi0() const { return adapted_.fields[0]; }
    const VectorField& eta(std::size_t a) const { return adapted_.fields[1 + a]; }
    const VectorField& zeta(std::size_t a) const { return adapted_.fields[1 + n() + a]; }
    const FrameBasis& adapted() const { return adapted_; }
    const Mat& Pi() const { return Pi_; }
    const OneForm& alpha() const { return alpha_; }

    Bundle bundle_of(std::size_t A) const {
        return A == 0 ? Bundle::E : (A <= n() ? Bundle::V : Bundle::Q);
    }

    // Connection coefficients: nabla_{e_A} e_B = sum_C Gamma(A,B,C) e_C.
    const RatExpr& Gamma(std::size_t A, std::size_t B, std::size_t C) const {
        return gamma_[(A * dim() + B) * dim() + C];
    }
    RatExpr& Gamma_mutable(std::size_t A, std::size_t B, std::size_t C) {
        return gamma_[(A * dim() + B) * dim() + C];
    }

    // Frame coefficients of [e_A, e_B].
    const std::vector<RatExpr>& frame_bracket(std::size_t A, std::size_t B) const;

    // nabla_X Y for arbitrary vector fields (expanded through the adapted frame).
    VectorField nabla(const VectorField& X, const VectorField& Y) const;
    // nabla_{e_A} of a frame-coefficient vector (valence-(1,0) components).
    std::vector<RatExpr> nabla_frame(std::size_t A, const std::vector<RatExpr>& comps) const;
    // Covariant derivative of a (0,k) tensor given by adapted-frame components;
    // `t` is indexed flat, last index fastest.
    std::vector<RatExpr> covariant_derivative_0k(std::size_t A, const std::vector<RatExpr>& t,
                                                 std::size_t k) const;

    // Projections of arbitrary fields, coefficients against the adapted frame.
    RatExpr alpha_of(const VectorField& X) const { return alpha_.pair(X); }

    // Connection form of the induced connection on the density line bundle
    // relative to lambda_ref = (xiE (x) omega_ref)^(1/(n+2)).
    const OneForm& density_form() const;

private:
    void build();

    PathGeometry geom_;
    Scale scale_;
    FrameBasis adapted_;
    Mat Pi_;
    OneForm alpha_;
    std::vector<RatExpr> gamma_;
    mutable std::vector<std::vector<std::vector<RatExpr>>> brackets_;  // lazy per pair
    mutable std::vector<std::vector<bool>> brackets_done_;
    mutable std::optional<OneForm> density_form_;
};

struct TensorComponents {
    // torsion[((A*d)+B)*d+C] = component of tau(e_A, e_B) on e_C
    // curvature[(((A*d)+B)*d+C)*d+D] = component of R(e_A, e_B)(e_C) on e_D
    std::vector<RatExpr> comp;
    std::size_t d = 0;
};

TensorComponents torsion(const WeylStructure& w);
TensorComponents curvature(const WeylStructure& w);

inline const RatExpr& tors_at(const TensorComponents& t, std::size_t A, std::size_t B,
                              std::size_t C) {
    return t.comp[(A * t.d + B) * t.d + C];
}
inline const RatExpr& curv_at(const TensorComponents& r, std::size_t A, std::size_t B,
                              std::size_t C, std::size_t D) {
    return r.comp[((A * r.d + B) * r.d + C) * r.d + D];
}

// Theorem-level verification suites.  Each registers named checks with the
// context; ids are stable and documented in the README.
void check_characterization(const WeylStructure& w, CheckContext& ctx);
void check_tors_curv(const WeylStructure& w, CheckContext& ctx);
void check_trace_identities(const WeylStructure& w, CheckContext& ctx);
void check_scale_transform(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                           CheckContext& ctx);

// df := d(gfac)/gfac, the exact stand-in for the derivative of log e^f.
OneForm dlog(const RatExpr& gfac, std::size_t dim);

}  // namespace pathgeo
