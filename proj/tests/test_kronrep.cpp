#include <doctest.h>

#include "support/oracles.hpp"
#include "support/testutil.hpp"
#include "tamestrat/kronrep.hpp"

using namespace tamestrat;
using testutil::throws_code;

namespace {

KronRep random_rep(const FieldPtr& f, int max_dim, Rng& rng) {
    int d1 = (int)rng.uniform((uint64_t)max_dim + 1);
    int d2 = (int)rng.uniform((uint64_t)max_dim + 1);
    Matrix a(f, (size_t)d1, (size_t)d2), b(f, (size_t)d1, (size_t)d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) {
            a.at((size_t)i, (size_t)j) = f->random(rng);
            b.at((size_t)i, (size_t)j) = f->random(rng);
        }
    return KronRep::make(f, std::move(a), std::move(b));
}

} // namespace

TEST_CASE("hom spaces of the small simple regulars") {
    auto f3 = Field::prime(3);
    auto V = simple_regular_V(f3);
    auto Vx = functor_F(Matrix::from_ints(f3, {{0}}));
    // V = (0,1), V_x = (1,0): solving the two intertwiner equations by hand
    // leaves only the scalar endomorphisms of V and nothing between them
    CHECK(hom_space(V, V).dimension == 1);
    CHECK(hom_space(V, Vx).dimension == 0);
    CHECK(hom_space(Vx, V).dimension == 0);
    auto zero = KronRep::zero(f3);
    CHECK(hom_space(V, zero).dimension == 0);
    for (auto& [f1, f2] : hom_space(V, V).basis) {
        CHECK(f1 * V.A == V.A * f2);
        CHECK(f1 * V.B == V.B * f2);
    }
}

TEST_CASE("ext dimensions") {
    auto f3 = Field::prime(3);
    auto V = simple_regular_V(f3);
    auto Vx = functor_F(Matrix::from_ints(f3, {{0}}));
    CHECK(ext_dim(V, V) == 1);
    CHECK(ext_dim(V, Vx) == 0);
    // projectives have no self-extensions: P1 = (k, 0)
    auto P1 = KronRep::make(f3, Matrix(f3, 1, 0), Matrix(f3, 1, 0));
    CHECK(ext_dim(P1, V) == 0);
    CHECK(ext_dim(P1, P1) == 0);
}

TEST_CASE("hom - ext = euler against the presentation oracle, 200 random pairs") {
    auto f3 = Field::prime(3);
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        KronRep x = random_rep(f3, 4, rng);
        KronRep y = random_rep(f3, 4, rng);
        int64_t hom = hom_space(x, y).dimension;
        int64_t ext = oracles::ext_dim_via_presentation(x, y);
        CHECK(hom - ext == kron_euler(x.dim(), y.dim()));
        CHECK(ext == ext_dim(x, y)); // euler route agrees with the cokernel route
    }
}

TEST_CASE("functor F lands on the expected representations") {
    auto f3 = Field::prime(3);
    SUBCASE("k[x]/(x) maps to V_x = (1, 0)") {
        auto vx = functor_F(Matrix::from_ints(f3, {{0}}));
        CHECK(vx.d1 == 1);
        CHECK(vx.A.at(0, 0).is_one());
        CHECK(vx.B.at(0, 0).is_zero());
    }
    SUBCASE("companion of x^2 gives the indecomposable ray of length 2") {
        auto ray = p_ray(Poly::parse(f3, "x"), 2);
        CHECK(ray.dim() == DimVector{2, 2});
        CHECK(indecomposable(ray) == Tri::True);
        // local endomorphism ring over Q as well
        auto q = Field::rationals();
        CHECK(indecomposable(p_ray(Poly::parse(q, "x"), 2)) == Tri::True);
    }
    SUBCASE("companion of x^2+x+1 over F2 is simple regular of dimension (2,2)") {
        auto f2 = Field::prime(2);
        auto s = functor_F(Matrix::companion(Poly::parse(f2, "x^2+x+1")));
        CHECK(s.dim() == DimVector{2, 2});
        // brute force over all subspace pairs: simplicity inside the
        // regular category means no proper nonzero subrepresentation of
        // defect zero (equal dimensions at both vertices)
        int regular_subreps = 0;
        for (auto& [d1, d2] : oracles::subrep_dims(s))
            if (d1 == d2) ++regular_subreps;
        CHECK(regular_subreps == 2); // zero and the module itself
        CHECK(indecomposable(s) == Tri::True);
    }
}

TEST_CASE("F is fully faithful on samples") {
    auto f3 = Field::prime(3);
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + (int)rng.uniform(3), m = 1 + (int)rng.uniform(3);
        Matrix xm(f3, (size_t)n, (size_t)n), xn(f3, (size_t)m, (size_t)m);
        for (size_t a = 0; a < (size_t)n; ++a)
            for (size_t b = 0; b < (size_t)n; ++b) xm.at(a, b) = f3->random(rng);
        for (size_t a = 0; a < (size_t)m; ++a)
            for (size_t b = 0; b < (size_t)m; ++b) xn.at(a, b) = f3->random(rng);
        CHECK(hom_space(functor_F(xm), functor_F(xn)).dimension ==
              oracles::kx_hom_dim(xm, xn));
    }
}

TEST_CASE("simple regular V basics") {
    auto f3 = Field::prime(3);
    auto V = simple_regular_V(f3);
    CHECK(defect(V.dim(), AffineQuiver::kronecker()) == 0);
    CHECK(hom_space(V, V).dimension == 1);
    CHECK(ext_dim(V, V) == 1);
    // V is not in the image of F: nothing maps between V and any F-image
    auto f_img = functor_F(Matrix::from_ints(f3, {{1}}));
    CHECK(hom_space(V, f_img).dimension == 0);
}

TEST_CASE("direct sums decompose") {
    auto f3 = Field::prime(3);
    auto V = simple_regular_V(f3);
    CHECK(indecomposable(direct_sum(V, V)) == Tri::False);
}

TEST_CASE("truncated prufer endomorphism rings") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    SUBCASE("p = x, n = 3: dimension 3, ring k[t]/(t^3)") {
        auto rep = prufer_end_truncation(Poly::parse(f3, "x"), 3);
        CHECK(rep.end_dim == 3);
        CHECK(rep.dim_matches);
        CHECK(rep.nilpotent_index == 3);
        CHECK(rep.commutant_basis_ok);
        CHECK(rep.level_dims == std::vector<int>{1, 2, 3});
    }
    SUBCASE("V-ray, n = 1: End = k") {
        auto rep = prufer_end_truncation_V(f3, 1);
        CHECK(rep.end_dim == 1);
        CHECK(rep.nilpotent_index == 1);
    }
    SUBCASE("p = x^2+x+1 over F2, n = 2: dimension 4 = n deg p, F4[t]/(t^2)") {
        auto rep = prufer_end_truncation(Poly::parse(f2, "x^2+x+1"), 2);
        CHECK(rep.end_dim == 4);
        CHECK(rep.dim_matches);
        CHECK(rep.nilpotent_index == 2);
        CHECK(rep.commutant_basis_ok);
        CHECK(rep.residue_degree == 2);
    }
    SUBCASE("levels restrict compatibly: dimensions grow by deg p per level") {
        auto rep = prufer_end_truncation(Poly::parse(f3, "x^2+1"), 4);
        CHECK(rep.level_dims == std::vector<int>{2, 4, 6, 8});
    }
    SUBCASE("rational base field: p = x^2+2, n = 2") {
        auto q = Field::rationals();
        auto rep = prufer_end_truncation(Poly::parse(q, "x^2+2"), 2);
        CHECK(rep.end_dim == 4);
        CHECK(rep.dim_matches);
        CHECK(rep.nilpotent_index == 2);
        CHECK(rep.commutant_basis_ok);
    }
    SUBCASE("rays in different tubes see no maps either way") {
        auto vray = v_ray(f3, 2);
        auto xray = p_ray(Poly::parse(f3, "x"), 2);
        CHECK(hom_space(vray, xray).dimension == 0);
        CHECK(hom_space(xray, vray).dimension == 0);
        CHECK(ext_dim(vray, xray) == 0);
    }
    SUBCASE("rejects reducible labels and level zero") {
        CHECK(throws_code([&] { prufer_end_truncation(Poly::parse(f2, "x^2+1"), 2); },
                          "NotIrreducible"));
        CHECK(throws_code([&] { prufer_end_truncation(Poly::parse(f2, "x"), 0); },
                          "LevelZero"));
    }
}

TEST_CASE("regular defect-zero samples contain a known simple regular") {
    // classification consistency at desk scale: each small regular
    // indecomposable admits a map from the ray over its regular socle
    auto f2 = Field::prime(2);
    auto px = Poly::parse(f2, "x");
    auto p1 = Poly::parse(f2, "x+1");
    std::vector<KronRep> regulars = {p_ray(px, 1), p_ray(px, 2), p_ray(p1, 2),
                                     v_ray(f2, 3),
                                     functor_F(Matrix::companion(Poly::parse(f2, "x^2+x+1")))};
    std::vector<KronRep> probes = {simple_regular_V(f2), p_ray(px, 1), p_ray(p1, 1),
                                   functor_F(Matrix::companion(Poly::parse(f2, "x^2+x+1")))};
    for (auto& x : regulars) {
        CHECK(defect(x.dim(), AffineQuiver::kronecker()) == 0);
        bool detected = false;
        for (auto& probe : probes)
            if (hom_space(probe, x).dimension > 0 || hom_space(x, probe).dimension > 0)
                detected = true;
        CHECK(detected);
    }
}

TEST_CASE("representation JSON round trips") {
    auto f3 = Field::prime(3);
    Rng rng(13);
    auto x = random_rep(f3, 3, rng);
    auto text = kronrep_to_json_text(x);
    auto back = kronrep_from_json_text(text);
    CHECK(back.A == x.A);
    CHECK(back.B == x.B);
    // rationals print as fraction strings
    auto q = Field::rationals();
    auto y = KronRep::make(q, Matrix::from_rows(q, {{q->from_rational(Rational(1, 2))}}),
                           Matrix::from_rows(q, {{q->one()}}));
    auto back2 = kronrep_from_json_text(kronrep_to_json_text(y));
    CHECK(back2.A == y.A);
}
