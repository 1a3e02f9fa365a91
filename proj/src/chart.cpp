#include "pathgeo/chart.hpp"

#include <set>

namespace pathgeo {

Chart::Chart(std::size_t n_, std::vector<std::string> coords_) : n(n_), coords(std::move(coords_)) {
    if (n == 0) throw error("Chart: rank of V must be positive");
    if (coords.size() != 2 * n + 1)
        throw error("Chart: expected " + std::to_string(2 * n + 1) + " coordinates");
    std::set<std::string> seen(coords.begin(), coords.end());
    if (seen.size() != coords.size()) throw error("Chart: coordinate names must be distinct");
}

std::size_t Chart::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == name) return i;
    throw error("Chart: unknown coordinate '" + name + "'");
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (dim() != o.dim()) throw error("VectorField: dimension mismatch");
    VectorField r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    if (dim() != o.dim()) throw error("VectorField: dimension mismatch");
    VectorField r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& e : r.c) e = -e;
    return r;
}

VectorField VectorField::scaled(const RatExpr& f) const {
    VectorField r = *this;
    for (auto& e : r.c) e = e * f;
    return r;
}

bool VectorField::is_zero() const {
    for (const auto& e : c)
        if (!e.is_zero()) return false;
    return true;
}

RatExpr VectorField::apply(const RatExpr& f) const {
    RatExpr r(f.nvars());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r += c[i] * f.diff(i);
    return r;
}

OneForm OneForm::operator+(const OneForm& o) const {
    if (dim() != o.dim()) throw error("OneForm: dimension mismatch");
    OneForm r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
    if (dim() != o.dim()) throw error("OneForm: dimension mismatch");
    OneForm r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

OneForm OneForm::scaled(const RatExpr& f) const {
    OneForm r = *this;
    for (auto& e : r.c) e = e * f;
    return r;
}

RatExpr OneForm::pair(const VectorField& X) const {
    if (dim() != X.dim()) throw error("OneForm: dimension mismatch in pairing");
    RatExpr r(c.front().nvars());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero() && !X.c[i].is_zero()) r += c[i] * X.c[i];
    return r;
}

bool OneForm::is_zero() const {
    for (const auto& e : c)
        if (!e.is_zero()) return false;
    return true;
}

VectorField coordinate_field(std::size_t dim, std::size_t index) {
    VectorField v(dim, dim);
    v.c[index] = RatExpr::constant(dim, 1);
    return v;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    if (X.dim() != Y.dim()) throw error("lie_bracket: dimension mismatch");
    std::size_t d = X.dim();
    VectorField r(d, X.c.front().nvars());
    for (std::size_t i = 0; i < d; ++i) {
        RatExpr acc(X.c.front().nvars());
        for (std::size_t j = 0; j < d; ++j) {
            if (!X.c[j].is_zero()) acc += X.c[j] * Y.c[i].diff(j);
            if (!Y.c[j].is_zero()) acc -= Y.c[j] * X.c[i].diff(j);
        }
        r.c[i] = acc;
    }
    return r;
}

RatExpr d_exterior(const OneForm& beta, const VectorField& X, const VectorField& Y) {
    return X.apply(beta.pair(Y)) - Y.apply(beta.pair(X)) - beta.pair(lie_bracket(X, Y));
}

OneForm FrameBasis::covector(std::size_t A) const {
    OneForm w(dim(), coframe.at(0, 0).nvars());
    for (std::size_t j = 0; j < dim(); ++j) w.c[j] = coframe.at(A, j);
    return w;
}

FrameBasis invert_frame(const std::vector<VectorField>& fields) {
    std::size_t d = fields.size();
    if (d == 0) throw error("invert_frame: empty frame");
    for (const auto& f : fields)
        if (f.dim() != d) throw error("invert_frame: frame is not square");
    std::size_t nv = fields.front().c.front().nvars();
    Mat frame(d, d, nv);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t A = 0; A < d; ++A) frame.at(i, A) = fields[A].c[i];
    FrameBasis F;
    F.fields = fields;
    F.coframe = frame.inverse();
    return F;
}

std::vector<RatExpr> express_in_frame(const VectorField& X, const FrameBasis& F) {
    if (X.dim() != F.dim()) throw error("express_in_frame: dimension mismatch");
    return F.coframe.apply(X.c);
}

}  // namespace pathgeo
