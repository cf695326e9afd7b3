#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qdetect::lattice {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<double>;

/// A subspace of R^n kept as an orthonormal basis; an empty basis is the
/// null subspace. Rank decisions use an absolute residual tolerance of
/// 1e-10 during orthonormalization.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    /// Orthonormalizes the given spanning vectors, dropping dependents.
    static Subspace from_span(std::size_t ambient_dim,
                              const std::vector<Vector>& spanning);

    static Subspace null(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace ray(const Vector& v);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    bool same_as(const Subspace& other) const;

    Subspace complement() const;

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// Smallest subspace containing both operands.
Subspace span(const Subspace& a, const Subspace& b);

/// Largest subspace contained in both, via the complement of the span of
/// the complements.
Subspace meet(const Subspace& a, const Subspace& b);

struct DistributivityGap {
    Subspace left;   // meet(a, span(b, c))
    Subspace right;  // span(meet(a, b), meet(a, c))
    bool equal;
};

DistributivityGap distributivity_gap(const Subspace& a, const Subspace& b,
                                     const Subspace& c);

}  // namespace qdetect::lattice
