#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arnoldnf/scalars.hpp"

#include <cmath>
#include <random>

using namespace arnoldnf;

namespace {

Rational q(long p, long r = 1) {
    Rational v(p, r);
    v.canonicalize();
    return v;
}

// A random element of the given tower with small rational coordinates.
AlgebraicScalar random_element(const FieldTower& t, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> c(t.degree());
    for (auto& v : c) v = q(num(rng), den(rng));
    return AlgebraicScalar(t, c);
}

std::string truncated(long double v, int digits) {
    long double scaled = std::floor(v * std::pow(10.0L, digits));
    std::string s = std::to_string(static_cast<long long>(scaled));
    while (static_cast<int>(s.size()) <= digits) s = "0" + s;
    return s.substr(0, s.size() - static_cast<std::size_t>(digits)) + "." + s.substr(s.size() - static_cast<std::size_t>(digits));
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(AlgebraicScalar(q(1, 2)) + AlgebraicScalar(q(1, 3)) == AlgebraicScalar(q(5, 6)));
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraicScalar(0).inverse(), std::domain_error);
    CHECK(rational_root(q(8, 27), 3) == q(2, 3));
    CHECK_FALSE(rational_root(q(2), 2));
}

TEST_CASE("square root of two") {
    auto [t, r] = adjoin_root(FieldTower(), 2, AlgebraicScalar(2));
    CHECK(t.degree() == 2);
    CHECK(r * r == AlgebraicScalar(2));
    CHECK_FALSE(r.is_rational());
}

TEST_CASE("inverse of a cube root") {
    auto [t, c] = adjoin_root(FieldTower(), 3, AlgebraicScalar(2));
    AlgebraicScalar inv = c.inverse();
    CHECK(inv == c * c / AlgebraicScalar(2));
    CHECK((c * inv).is_one());
}

TEST_CASE("adjoin_root reuses existing roots") {
    auto [t, r] = adjoin_root(FieldTower(), 2, AlgebraicScalar(4));
    CHECK(t.is_rational());
    CHECK(r * r == AlgebraicScalar(4));

    auto [t2, s] = adjoin_root(FieldTower(), 2, AlgebraicScalar(2));
    auto [t3, s2] = adjoin_root(t2, 2, AlgebraicScalar(8));
    CHECK(t3.degree() == 2);
    CHECK(s2 * s2 == AlgebraicScalar(8));

    // x^4 - 4 = (x^2 - 2)(x^2 + 2): a fourth root of 4 lives in Q(sqrt 2)
    auto [t4, u] = adjoin_root(t2, 4, AlgebraicScalar(4));
    CHECK(t4.degree() == 2);
    CHECK(u.pow(4) == AlgebraicScalar(4));

    CHECK_THROWS_AS(adjoin_root(FieldTower(), 2, AlgebraicScalar(0)), std::invalid_argument);
}

TEST_CASE("seventh root of one half") {
    auto [t, b] = adjoin_root(FieldTower(), 7, AlgebraicScalar(q(1, 2)));
    CHECK(t.degree() == 7);
    CHECK((b.pow(7) - AlgebraicScalar(q(1, 2))).is_zero());
}

TEST_CASE("nested towers") {
    auto [t1, a] = adjoin_root(FieldTower(), 3, AlgebraicScalar(2));
    auto [t2, b] = adjoin_root(t1, 2, a + AlgebraicScalar(1));
    CHECK(t2.degree() == 6);
    CHECK(b * b == a + AlgebraicScalar(1));
    CHECK(t1.is_prefix_of(t2));
    CHECK(common_tower(t1, t2) == t2);
    auto [u, c] = adjoin_root(FieldTower(), 2, AlgebraicScalar(3));
    CHECK_THROWS_AS(common_tower(t2, u), std::invalid_argument);
    CHECK_THROWS(b + c);
}

TEST_CASE("field axioms on random tower elements") {
    std::mt19937_64 rng(1);
    auto [t1, a] = adjoin_root(FieldTower(), 2, AlgebraicScalar(3));
    auto [t, b] = adjoin_root(t1, 3, a + AlgebraicScalar(2));
    for (int i = 0; i < 200; ++i) {
        AlgebraicScalar x = random_element(t, rng), y = random_element(t, rng), z = random_element(t, rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("zero test agrees with equality") {
    std::mt19937_64 rng(2);
    auto [t, a] = adjoin_root(FieldTower(), 5, AlgebraicScalar(q(3, 2)));
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 1000; ++i) {
        AlgebraicScalar x = random_element(t, rng);
        AlgebraicScalar y = coin(rng) ? x : random_element(t, rng);
        CHECK((x - y).is_zero() == (x == y));
    }
}

TEST_CASE("approximate") {
    CHECK(approximate(AlgebraicScalar(q(5, 6)), 4) == "0.8333");
    CHECK(approximate(AlgebraicScalar(q(-1, 3)), 3) == "-0.333");
    auto [t, r] = adjoin_root(FieldTower(), 2, AlgebraicScalar(2));
    CHECK(approximate(r, 5) == "1.41421");

    auto [t7, b] = adjoin_root(FieldTower(), 7, AlgebraicScalar(2));
    AlgebraicScalar v = b.pow(5).inverse();
    CHECK(approximate(v, 5) == truncated(std::pow(2.0L, -5.0L / 7.0L), 5));

    auto [tn, s] = adjoin_root(FieldTower(), 2, AlgebraicScalar(-1));
    CHECK(approximate(s, 3) == "0.000+1.000i");
}

TEST_CASE("approximations are consistent across digits") {
    auto [t1, a] = adjoin_root(FieldTower(), 3, AlgebraicScalar(5));
    auto [t, b] = adjoin_root(t1, 2, a + AlgebraicScalar(q(1, 7)));
    AlgebraicScalar v = b * a + AlgebraicScalar(q(2, 9));
    std::string full = approximate(v, 30);
    for (int d = 1; d < 30; ++d) CHECK(approximate(v, d) == full.substr(0, full.find('.') + 1 + static_cast<std::size_t>(d)));
}
