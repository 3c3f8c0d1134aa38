#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bettiforge/simplicial.hpp"

using bf::FieldSpec;
using bf::Mask;
using bf::SimplicialComplex;

namespace {

// Build a complex from its facet list by brute-forcing the minimal
// non-faces; keeps the tests independent of the generator convention.
SimplicialComplex from_facets(int n, const std::vector<Mask>& facets) {
    auto is_face = [&](Mask m) {
        for (Mask f : facets)
            if (bf::subset(m, f)) return true;
        return false;
    };
    std::vector<Mask> nonfaces;
    for (Mask m = 0; m <= bf::full_mask(n); ++m) {
        if (is_face(m)) continue;
        bool minimal = true;
        Mask rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            if (!is_face(m & ~bf::bit(v))) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if (minimal) nonfaces.push_back(m);
    }
    return SimplicialComplex{n, nonfaces};
}

SimplicialComplex random_complex(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<Mask> mask(1, bf::full_mask(n));
    std::vector<Mask> facets;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) facets.push_back(mask(rng));
    if (facets.empty()) facets.push_back(0);
    return from_facets(n, facets);
}

}  // namespace

TEST_CASE("degenerate complexes") {
    const FieldSpec f{0};
    // void: the empty monomial is a non-face
    SimplicialComplex voidc{3, {0}};
    CHECK(voidc.is_void());
    for (int d : bf::reduced_homology_dims(voidc, f)) CHECK(d == 0);
    // irrelevant complex {emptyset}
    SimplicialComplex irr{3, {1, 2, 4}};
    auto dims = bf::reduced_homology_dims(irr, f);
    CHECK(dims[0] == 1);  // H~_{-1}
    for (std::size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] == 0);
    // zero-vertex ground set with no generators is also {emptyset}
    SimplicialComplex zero{0, {}};
    CHECK(bf::reduced_homology_dims(zero, f) == std::vector<int>{1});
    // full simplex: acyclic
    SimplicialComplex full{4, {}};
    for (int d : bf::reduced_homology_dims(full, f)) CHECK(d == 0);
}

TEST_CASE("spheres and points") {
    const FieldSpec f{0};
    // boundary of the triangle: a circle
    auto circle = from_facets(3, {0b011, 0b101, 0b110});
    auto dims = bf::reduced_homology_dims(circle, f);
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);  // H~_1
    // two isolated points
    SimplicialComplex pts{2, {0b11}};
    dims = bf::reduced_homology_dims(pts, f);
    CHECK(dims[1] == 1);  // H~_0
    // octahedron boundary: a 2-sphere; minimal non-faces are the three
    // diagonals
    SimplicialComplex oct{6, {0b000011, 0b001100, 0b110000}};
    dims = bf::reduced_homology_dims(oct, f);
    CHECK(dims == std::vector<int>{0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("projective plane homology depends on the field") {
    auto rp2 = from_facets(
        6, {0b000111, 0b001011, 0b010101, 0b101001, 0b110001, 0b100110,
            0b011010, 0b110010, 0b011100, 0b101100});
    auto q = bf::reduced_homology_dims(rp2, FieldSpec{0});
    auto f2 = bf::reduced_homology_dims(rp2, FieldSpec{2});
    auto f3 = bf::reduced_homology_dims(rp2, FieldSpec{3});
    CHECK(q[2] == 0);   // H~_1 over Q
    CHECK(q[3] == 0);   // H~_2 over Q
    CHECK(f2[2] == 1);  // H~_1 over F_2
    CHECK(f2[3] == 1);  // H~_2 over F_2
    CHECK(f3 == q);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = random_complex(rng, 5);
        for (int k = 1; k < c.ground_size; ++k) {
            const auto dk = bf::boundary_matrix(c, k);
            const auto dk1 = bf::boundary_matrix(c, k - 1);
            CHECK(dk1.cols == dk.rows);
            // dense compose and check zero
            std::vector<std::vector<int>> a(dk.rows,
                                            std::vector<int>(dk.cols, 0));
            std::vector<std::vector<int>> b(dk1.rows,
                                            std::vector<int>(dk1.cols, 0));
            for (const auto& e : dk.entries) a[e.row][e.col] += e.value;
            for (const auto& e : dk1.entries) b[e.row][e.col] += e.value;
            for (int r = 0; r < dk1.rows; ++r)
                for (int col = 0; col < dk.cols; ++col) {
                    int s = 0;
                    for (int mid = 0; mid < dk.rows; ++mid)
                        s += b[r][mid] * a[mid][col];
                    CHECK(s == 0);
                }
        }
    }
}

TEST_CASE("Euler characteristic equals alternating homology sum") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = random_complex(rng, 5);
        for (auto p : {0u, 2u, 5u}) {
            const auto dims = bf::reduced_homology_dims(c, FieldSpec{p});
            long long chi_faces = 0, chi_hom = 0;
            for (int k = -1; k < c.ground_size; ++k) {
                const int sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k, k >= -1
                chi_faces +=
                    sign * static_cast<long long>(
                               bf::faces_of_dim(c, k).size());
                chi_hom += sign * dims[k + 1];
            }
            CHECK(chi_faces == chi_hom);
        }
    }
}

TEST_CASE("restriction composes") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<Mask> mask(0, bf::full_mask(6));
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = random_complex(rng, 6);
        const Mask w = mask(rng);
        const auto cw = bf::restrict_complex(c, w);
        const Mask u = mask(rng) & bf::full_mask(cw.ground_size);
        const auto once = bf::restrict_complex(cw, u);
        const auto direct = bf::restrict_complex(c, bf::spread(u, w));
        CHECK(once.ground_size == direct.ground_size);
        CHECK(once.nonface_generators == direct.nonface_generators);
    }
}
