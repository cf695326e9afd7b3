#include "qdetect/lattice.hpp"

#include <cmath>

namespace qdetect::lattice {

namespace {

constexpr double kRankTol = 1e-10;

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

// Projects v onto the complement of the space spanned by basis; two
// passes of modified Gram-Schmidt keep the residual orthogonal.
Vector residual(Vector v, const std::vector<Vector>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            const double c = dot(v, b);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
        }
    }
    return v;
}

void check_dims(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("subspaces live in different ambient spaces");
    }
}

}  // namespace

Subspace Subspace::from_span(std::size_t ambient_dim,
                             const std::vector<Vector>& spanning) {
    Subspace s(ambient_dim);
    for (const auto& v : spanning) {
        if (v.size() != ambient_dim) {
            throw DimensionMismatch("spanning vector has wrong length");
        }
        Vector r = residual(v, s.basis_);
        const double n = norm(r);
        if (n > kRankTol) {
            for (auto& x : r) x /= n;
            s.basis_.push_back(std::move(r));
        }
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> axes;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector e(ambient_dim, 0.0);
        e[i] = 1.0;
        axes.push_back(std::move(e));
    }
    return from_span(ambient_dim, axes);
}

Subspace Subspace::ray(const Vector& v) { return from_span(v.size(), {v}); }

bool Subspace::contains(const Vector& v) const {
    return norm(residual(v, basis_)) <= kRankTol * std::max(1.0, norm(v));
}

bool Subspace::contains(const Subspace& other) const {
    check_dims(*this, other);
    for (const auto& b : other.basis_) {
        if (!contains(b)) return false;
    }
    return true;
}

bool Subspace::same_as(const Subspace& other) const {
    return rank() == other.rank() && contains(other);
}

Subspace Subspace::complement() const {
    // Extend the basis to the full space; the added directions span
    // the orthogonal complement.
    Subspace comp(ambient_dim_);
    std::vector<Vector> extended = basis_;
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
        Vector e(ambient_dim_, 0.0);
        e[i] = 1.0;
        Vector r = residual(e, extended);
        const double n = norm(r);
        if (n > kRankTol) {
            for (auto& x : r) x /= n;
            extended.push_back(r);
            comp.basis_.push_back(std::move(r));
        }
    }
    return comp;
}

Subspace span(const Subspace& a, const Subspace& b) {
    check_dims(a, b);
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::from_span(a.ambient_dim(), all);
}

Subspace meet(const Subspace& a, const Subspace& b) {
    check_dims(a, b);
    return span(a.complement(), b.complement()).complement();
}

DistributivityGap distributivity_gap(const Subspace& a, const Subspace& b,
                                     const Subspace& c) {
    check_dims(a, b);
    check_dims(a, c);
    Subspace left = meet(a, span(b, c));
    Subspace right = span(meet(a, b), meet(a, c));
    const bool equal = left.same_as(right);
    return {std::move(left), std::move(right), equal};
}

}  // namespace qdetect::lattice
