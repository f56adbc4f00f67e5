#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arnoldnf/localalg.hpp"
#include "arnoldnf/transform.hpp"

#include <random>

using namespace arnoldnf;

namespace {

SparsePoly P(const std::string& s) { return parse_poly(s); }

const Weight kW32({3, 2});

std::vector<SparsePoly> random_tangent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<SparsePoly> im = {P("x"), P("y")};
    for (auto& p : im)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                if (a + b >= 2) p.add_term(Monomial{a, b}, AlgebraicScalar(c(rng)));
    return im;
}

}  // namespace

TEST_CASE("germ log") {
    Germ g(P("x^3+y^5"), Truncation::standard(2, 8));
    g.apply("linear", identity_images(2));
    CHECK(g.log().empty());
    std::vector<SparsePoly> im = {P("x+y^2"), P("y")};
    g.apply("shift", im);
    REQUIRE(g.log().size() == 1);
    CHECK(g.log()[0].kind == "shift");
    CHECK(g.poly() == substitute(P("x^3+y^5"), im, Truncation::standard(2, 8)));
    g.replace("truncate", P("x^3"));
    CHECK(g.log().size() == 2);
    CHECK(is_identity(identity_images(3)));
    CHECK_FALSE(is_identity(im));
}

TEST_CASE("splitting lemma keeps the Milnor number") {
    struct Case {
        std::string f;
        std::vector<std::string> vars;
        int corank;
    } cases[] = {
        {"x^2+x*y^2+y^4", {"x", "y"}, 1},
        {"x^2+2*x*y+2*y^2+y^5", {"x", "y"}, 0},
        {"x^2+y^3+z^2+x*z+x*y^2", {"x", "y", "z"}, 1},
        {"x*z+y^4+x^3+z*y^2+x^4", {"x", "y", "z"}, 1},
        {"x^3+y^4+z^2+x*y*z", {"x", "y", "z"}, 2},
        {"x^2+y^2+z^2", {"x", "y", "z"}, 0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.f);
        SparsePoly f = parse_poly(c.f, c.vars);
        long mu = *milnor(f).mu;
        Germ g(f, Truncation::standard(f.nvars(), mu + 2));
        SplitResult r = split(g, mu + 2);
        CHECK(r.corank == c.corank);
        CHECK(r.hessian_rank == f.nvars() - c.corank);
        CHECK(r.corank == corank(f).corank);
        if (r.corank > 0) {
            CHECK(r.residual.nvars() == r.corank);
            CHECK(*milnor(r.residual).mu == mu);
        }
    }
}

TEST_CASE("reverse linear jet") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-3, 3);
    int seen[3] = {0, 0, 0};
    for (int it = 0; it < 60; ++it) {
        // quartic with prescribed factor pattern plus higher terms
        int a = c(rng), b = c(rng), e = c(rng);
        if (a == b || b == e || a == e) continue;
        SparsePoly la = P("x") + P("y") * AlgebraicScalar(a);
        SparsePoly lb = P("x") + P("y") * AlgebraicScalar(b);
        SparsePoly le = P("x") + P("y") * AlgebraicScalar(e);
        SparsePoly jet;
        int kind = it % 3;
        if (kind == 0) jet = la * la * la * la;
        else if (kind == 1) jet = la * la * la * lb;
        else jet = la * la * lb * le;
        SparsePoly f = jet + P("y^5+x^5+x*y^4");
        Germ g(f, Truncation::standard(2, 12));
        reverse_linear_jet(g);
        SparsePoly j4 = wlayer(g.poly(), Weight::standard(2), 4);
        CHECK(*milnor(g.poly()).mu == *milnor(f).mu);
        if (kind == 0) {
            CHECK(j4.terms().size() == 1);
            CHECK_FALSE(j4.coeff(Monomial{4, 0}).is_zero());
        } else if (kind == 1) {
            CHECK(j4.terms().size() == 1);
            CHECK_FALSE(j4.coeff(Monomial{3, 1}).is_zero());
        } else {
            // x^2 (y^2 + c x^2) after the shear
            for (const auto& [m, cf] : j4.terms()) CHECK(m[0] >= 2);
            CHECK(j4.coeff(Monomial{3, 1}).is_zero());
            CHECK_FALSE(j4.coeff(Monomial{2, 2}).is_zero());
        }
        ++seen[kind];
    }
    for (int s : seen) CHECK(s > 5);
}

TEST_CASE("reverse linear jet over a quadratic extension") {
    // (x^2+y^2)^2: roots +-i
    SparsePoly f = P("(x^2+y^2)^2+x^5+y^6");
    Germ g(f, Truncation::standard(2, 12));
    reverse_linear_jet(g);
    SparsePoly j4 = wlayer(g.poly(), Weight::standard(2), 4);
    CHECK(j4.terms().size() == 1);
    CHECK_FALSE(j4.coeff(Monomial{2, 2}).is_zero());
}

TEST_CASE("removing a term through the partials") {
    SparsePoly f0 = P("x^3+y^7");
    Germ g(P("x^3+y^7+2*x^2*y^3"), Truncation{kW32, 30});
    const Weight u({7, 3});
    CHECK(remove_term_via_partials(g, f0, Monomial{2, 3}, u, u));
    CHECK(g.poly().coeff(Monomial{2, 3}).is_zero());
    CHECK(wjet(g.poly(), u, 23) == P("x^3+y^7"));
    Germ h(f0, Truncation{kW32, 30});
    CHECK_FALSE(remove_term_via_partials(h, f0, Monomial{2, 3}, u, u));
}

TEST_CASE("the cusp is invariant under the vector field flow") {
    for (long excess : {2L, 5L, 9L}) {
        for (long c : {1L, -3L}) {
            auto im = exp_vector_field(AlgebraicScalar(Rational(c, 2)), excess);
            SparsePoly image = substitute(P("x^2+y^3"), im, Truncation{kW32, 6 + excess});
            CHECK(wjet(image, kW32, 6 + excess) == P("x^2+y^3"));
            // linear part is the identity
            CHECK(wjet(im[0], kW32, 3) == P("x"));
            CHECK(wjet(im[1], kW32, 2) == P("y"));
        }
    }
    auto id = exp_vector_field(AlgebraicScalar(0), 4);
    CHECK(is_identity(id));
}

TEST_CASE("division by the cusp") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-5, 5), e(0, 6);
    for (int it = 0; it < 40; ++it) {
        SparsePoly g(2);
        for (int k = 0; k < 6; ++k) g.add_term(Monomial{e(rng), e(rng)}, AlgebraicScalar(c(rng)));
        auto [l, r] = divide_by_core(g);
        CHECK(l * P("x^2+y^3") + r == g);
        for (const auto& [m, cf] : r.terms()) CHECK(m[0] <= 1);
    }
}

TEST_CASE("core normalization") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-3, 3);
    const long bound = 24;
    for (int it = 0; it < 20; ++it) {
        SparsePoly l(2);
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 8; ++j)
                if (3 * i + 2 * j > 6 && 3 * i + 2 * j <= 14 && c(rng) > 0) l.add_term(Monomial{i, j}, AlgebraicScalar(c(rng)));
        SparsePoly q = P("x^2+y^3") + l * AlgebraicScalar(Rational(1, 2));
        Germ g(q, Truncation{kW32, bound});
        core_normalize(g, l, bound);
        CHECK(wjet(g.poly(), kW32, bound - 6) == P("x^2+y^3"));
    }
    Germ g(P("x^2+y^3"), Truncation{kW32, 12});
    CHECK_THROWS_AS(core_normalize(g, P("y^3"), 12), std::invalid_argument);
}

TEST_CASE("rescaling") {
    Germ g(P("3*x^3+5*y^7+x*y^5"), Truncation::standard(2, 14));
    Rescaling s = rescale(g, {{Monomial{3, 0}, AlgebraicScalar(1)}, {Monomial{0, 7}, AlgebraicScalar(1)}});
    CHECK(g.poly().coeff(Monomial{3, 0}).is_one());
    CHECK(g.poly().coeff(Monomial{0, 7}).is_one());
    CHECK(AlgebraicScalar(3) * s.a.pow(3) == AlgebraicScalar(1));
    CHECK(AlgebraicScalar(5) * s.b.pow(7) == AlgebraicScalar(1));
    CHECK(g.poly().coeff(Monomial{1, 5}) == s.a * s.b.pow(5));

    Germ h(P("x^2*y+y^4"), Truncation::standard(2, 8));
    CHECK_THROWS(rescale(h, {{Monomial{3, 0}, AlgebraicScalar(1)}, {Monomial{0, 4}, AlgebraicScalar(1)}}));
}

TEST_CASE("Milnor number survives random tangent maps") {
    std::mt19937_64 rng(5);
    for (const char* s : {"x^3+y^7+x*y^5", "x^4+x^2*y^2+y^6", "x^2*y+y^5", "x^3+x*y^4"}) {
        SparsePoly f = P(s);
        long mu = *milnor(f).mu;
        for (int it = 0; it < 5; ++it) {
            SparsePoly h = substitute(f, random_tangent(rng), Truncation::standard(2, mu + 2));
            CHECK(*milnor(h).mu == mu);
        }
    }
}
