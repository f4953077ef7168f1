#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypo/parse.hpp"
#include "hypo/projection.hpp"

using namespace hypo;
using namespace hypo::projection;

TEST_CASE("inner product closed form") {
    CHECK(monomial_inner_product<Rat>(1, 0, Rat(0), 1, 0, Rat(0)) == Rat(1, 2));
    CHECK(monomial_inner_product<Rat>(1, 0, Rat(0), 2, 0, Rat(0)) == 0);
    // <z^2 zbar |z|, z>
    CHECK(monomial_inner_product<Rat>(2, 1, Rat(1), 1, 0, Rat(0)) == Rat(2, 7));
    CHECK_THROWS_AS(monomial_inner_product<Rat>(-1, 0, Rat(0), 0, 0, Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("inner product symmetry under swap with conjugation") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d)
                    CHECK(monomial_inner_product<Rat>(a, b, Rat(1, 2), c, d, Rat(3)) ==
                          monomial_inner_product<Rat>(c, d, Rat(3), a, b, Rat(1, 2)));
}

TEST_CASE("project_monomial examples") {
    auto p = project_monomial<Rat>(1, 0, Rat(2));
    CHECK(p.coeff == Cplx<Rat>(Rat(2, 3)));
    CHECK(p.degree == 1);

    auto zero = project_monomial<Rat>(0, 1, Rat(0));
    CHECK(zero.coeff.is_zero());

    auto q = project_monomial<Rat>(3, 1, Rat(0));
    CHECK(q.coeff == Cplx<Rat>(Rat(3, 4)));
    CHECK(q.degree == 2);
}

TEST_CASE("projection coefficient equals the normalized inner product") {
    for (Rat t : {Rat(0), Rat(1, 2), Rat(1), Rat(5, 2)})
        for (int k = 0; k <= 50; ++k)
            for (int j = 0; j <= k; ++j) {
                Rat ip = monomial_inner_product<Rat>(k, j, t, k - j, 0, Rat(0));
                Rat norm2 = Rat(1, k - j + 1);
                CHECK(project_monomial<Rat>(k, j, t).coeff.re == ip / norm2);
            }
}

TEST_CASE("t = 0 reduces to the Duren coefficient") {
    for (int k = 1; k <= 20; ++k)
        for (int j = 0; j <= k; ++j)
            CHECK(project_monomial<Rat>(k, j, Rat(0)).coeff.re == Rat(k - j + 1) / Rat(k + 1));
}

TEST_CASE("toeplitz_apply on a radial symbol") {
    auto phi = symbol::parse_symbol("r^3");
    for (int k = 0; k <= 10; ++k) {
        auto img = toeplitz_apply(phi, k);
        REQUIRE(img.size() == 1);
        CHECK(img[0].degree == k);
        CHECK(img[0].coeff.re == Rat(2 * (k + 1)) / Rat(2 * k + 5));
    }
}

TEST_CASE("toeplitz_apply annihilates low degrees") {
    CHECK(toeplitz_apply(symbol::parse_symbol("zbar^2"), 1).empty());
}

TEST_CASE("toeplitz_apply is linear over symbol terms") {
    auto img = toeplitz_apply(symbol::parse_symbol("z + r^2"), 0);
    REQUIRE(img.size() == 2);
    // merged by degree: constant term then z
    bool saw_const = false, saw_z = false;
    for (const auto& e : img) {
        if (e.degree == 0) {
            saw_const = true;
            CHECK(e.coeff.re == Rat(1, 2));
        }
        if (e.degree == 1) {
            saw_z = true;
            CHECK(e.coeff.re == 1);
        }
    }
    CHECK(saw_const);
    CHECK(saw_z);

    // sum of symbols = merged union of images
    auto a = toeplitz_apply(symbol::parse_symbol("z^2*r"), 3);
    auto b = toeplitz_apply(symbol::parse_symbol("zbar*r^2"), 3);
    auto both = toeplitz_apply(symbol::parse_symbol("z^2*r + zbar*r^2"), 3);
    Rat total;
    for (const auto& e : a) total += e.coeff.re;
    for (const auto& e : b) total += e.coeff.re;
    Rat merged;
    for (const auto& e : both) merged += e.coeff.re;
    CHECK(total == merged);
}
