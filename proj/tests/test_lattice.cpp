#include <cmath>
#include <random>

#include "doctest.h"
#include "qdetect/lattice.hpp"

using namespace qdetect::lattice;

namespace {

const double s = 1.0 / std::sqrt(2.0);

Subspace e_axis(std::size_t dim, std::size_t i) {
    Vector v(dim, 0.0);
    v[i] = 1.0;
    return Subspace::ray(v);
}

Subspace random_subspace(std::mt19937_64& gen, std::size_t dim,
                         std::size_t vectors) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Vector> spanning;
    for (std::size_t k = 0; k < vectors; ++k) {
        Vector v(dim);
        for (auto& x : v) x = n(gen);
        spanning.push_back(std::move(v));
    }
    return Subspace::from_span(dim, spanning);
}

}  // namespace

TEST_CASE("span of oblique rays fills the plane") {
    const Subspace ray_x = Subspace::ray({s, s, 0.0});
    const Subspace ray_y = Subspace::ray({s, -s, 0.0});
    const Subspace plane = span(ray_y, ray_x);
    CHECK(plane.rank() == 2);
    CHECK(plane.contains({1.0, 0.0, 0.0}));
    CHECK(plane.contains({0.0, 1.0, 0.0}));
    CHECK_FALSE(plane.contains({0.0, 0.0, 1.0}));
}

TEST_CASE("span identities") {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 50; ++i) {
        const Subspace a = random_subspace(gen, 4, 2);
        CHECK(span(a, Subspace::null(4)).same_as(a));
        CHECK(span(a, a).same_as(a));
    }
}

TEST_CASE("meet") {
    const Subspace e2 = e_axis(3, 1);
    const Subspace plane =
        span(Subspace::ray({s, s, 0.0}), Subspace::ray({s, -s, 0.0}));
    CHECK(meet(e2, plane).same_as(e2));
    CHECK(meet(e2, Subspace::ray({s, -s, 0.0})).rank() == 0);
    CHECK(meet(plane, plane).same_as(plane));
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(span(Subspace::null(2), Subspace::null(3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(meet(Subspace::null(2), Subspace::null(3)),
                    DimensionMismatch);
}

TEST_CASE("distributive law fails for the oblique configuration") {
    const Subspace e2 = e_axis(3, 1);
    const Subspace ray_x = Subspace::ray({s, s, 0.0});
    const Subspace ray_y = Subspace::ray({s, -s, 0.0});
    const auto gap = distributivity_gap(e2, ray_y, ray_x);
    CHECK(gap.left.rank() == 1);
    CHECK(gap.left.same_as(e2));
    CHECK(gap.right.rank() == 0);
    CHECK_FALSE(gap.equal);
}

TEST_CASE("distributive law holds for orthogonal axes") {
    const auto gap = distributivity_gap(e_axis(3, 1), e_axis(3, 0), e_axis(3, 2));
    CHECK(gap.equal);

    // random triples of mutually orthogonal coordinate subspaces
    std::mt19937_64 gen(9);
    std::uniform_int_distribution<int> axis(0, 4);
    for (int i = 0; i < 100; ++i) {
        int i0 = axis(gen), i1 = (i0 + 1 + axis(gen) % 4) % 5,
            i2 = (i1 + 1) % 5;
        if (i2 == i0) i2 = (i2 + 1) % 5;
        const auto g = distributivity_gap(e_axis(5, i0), e_axis(5, i1),
                                          e_axis(5, i2));
        CHECK(g.equal);
    }
}

TEST_CASE("distributivity holds when one side contains the others") {
    std::mt19937_64 gen(13);
    for (int i = 0; i < 50; ++i) {
        const Subspace a = random_subspace(gen, 5, 3);
        // b and c constructed inside a
        std::normal_distribution<double> n(0.0, 1.0);
        std::vector<Vector> bs, cs;
        for (int k = 0; k < 2; ++k) {
            Vector vb(5, 0.0), vc(5, 0.0);
            for (const auto& basis_vec : a.basis()) {
                const double wb = n(gen), wc = n(gen);
                for (std::size_t d = 0; d < 5; ++d) {
                    vb[d] += wb * basis_vec[d];
                    vc[d] += wc * basis_vec[d];
                }
            }
            bs.push_back(vb);
            cs.push_back(vc);
        }
        const Subspace b = Subspace::from_span(5, bs);
        const Subspace c = Subspace::from_span(5, cs);
        CHECK(distributivity_gap(a, b, c).equal);
    }
}

TEST_CASE("lattice algebra properties") {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 50; ++i) {
        const Subspace a = random_subspace(gen, 4, 2);
        const Subspace b = random_subspace(gen, 4, 1);
        const Subspace c = random_subspace(gen, 4, 2);
        CHECK(span(a, b).same_as(span(b, a)));
        CHECK(meet(a, b).same_as(meet(b, a)));
        CHECK(span(span(a, b), c).same_as(span(a, span(b, c))));
        CHECK(meet(meet(a, b), c).same_as(meet(a, meet(b, c))));
        CHECK(a.complement().complement().same_as(a));
        CHECK(a.complement().rank() + a.rank() == 4);
    }
}
