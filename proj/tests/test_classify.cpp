#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arnoldnf/classify.hpp"
#include "arnoldnf/localalg.hpp"

#include <random>

using namespace arnoldnf;

namespace {

SparsePoly P(const std::string& s) { return parse_poly(s); }

Outcome C(const std::string& s) { return classify(P(s)); }

std::vector<AlgebraicScalar> Q(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<SparsePoly> random_tangent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<SparsePoly> im = {P("x"), P("y")};
    for (auto& p : im)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                if (a + b >= 2) p.add_term(Monomial{a, b}, AlgebraicScalar(c(rng)));
    return im;
}

std::vector<SparsePoly> random_linear(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    for (;;) {
        int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
        if (a * e - b * d == 0) continue;
        return {P("x") * AlgebraicScalar(a) + P("y") * AlgebraicScalar(b),
                P("x") * AlgebraicScalar(d) + P("y") * AlgebraicScalar(e)};
    }
}

}  // namespace

TEST_CASE("simple types") {
    auto o = C("x^3+y^5");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::E8));
    CHECK(o.parameters.empty());
    CHECK(o.normal_form == P("x^3+y^5"));

    CHECK(C("x^2*y+y^4").type == TypeId(Family::D, {5}));
    CHECK(C("x^2+y^2").type == TypeId(Family::A, {1}));
    CHECK(C("x^2+y^7").type == TypeId(Family::A, {6}));
    CHECK(C("(x+y)^3+y^5").type == TypeId(Family::E8));
    CHECK(C("y^3+x^5").type == TypeId(Family::E8));
    CHECK(C("x^3+x*y^3").type == TypeId(Family::E7));
    CHECK(C("x*y*(x+y)").type == TypeId(Family::D, {4}));
    CHECK(C("x^2+2*x*y+y^2+y^3").type == TypeId(Family::A, {2}));
}

TEST_CASE("unimodal examples") {
    auto o = C("x^4+3*x^2*y^2+y^4");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::X9));
    CHECK(o.parameters == Q({3}));

    o = C("x^3+y^7");
    CHECK(o.type == TypeId(Family::E12));
    CHECK(o.parameters == Q({0}));

    o = C("x^3+y^7+x*y^5");
    CHECK(o.parameters == Q({1}));
    CHECK(o.mu == 12);

    o = C("x^3+y^7+x*y^6");
    CHECK(o.type == TypeId(Family::E12));
    CHECK(o.parameters == Q({0}));

    o = C("x^4+x^2*y^2+5*y^5");
    CHECK(o.type == TypeId(Family::X9k, {1}));
    CHECK(o.parameters == Q({5}));

    CHECK(C("x^4+x^3*y+x^2*y^2+y^5").type == TypeId(Family::X9k, {1}));
}

TEST_CASE("parameters over radical extensions") {
    // b^7 * 2 = 1 and a = b^5
    auto o = C("x^3+2*y^7+x*y^5");
    REQUIRE(o.ok());
    REQUIRE(o.parameters.size() == 1);
    const AlgebraicScalar& a = o.parameters[0];
    CHECK_FALSE(a.is_rational());
    CHECK(a.pow(7) == AlgebraicScalar(Rational(1, 32)));

    // 4 alpha^4 = 1, alpha^2 = beta^3, a0 = alpha beta^5
    o = C("4*(x^2+y^3)^2+x*y^5");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::Wsharp, {1}));
    CHECK(o.parameters[0].pow(6) == AlgebraicScalar(Rational(1, 8192)));
    CHECK(o.parameters[1].is_zero());

    // linear factors over Q(sqrt 2)
    o = C("(x^2-2*y^2)^2+x^5+y^5");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::Y, {5, 5}));
    CHECK(o.mu == 11);
}

TEST_CASE("W# series") {
    auto o = C("(x^2+y^3)^2+x*y^5");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::Wsharp, {1}));
    CHECK(o.mu == 16);
    CHECK(o.parameters == Q({1, 0}));

    o = C("(x^2+y^3)^2+y^7+y^8");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::Wsharp, {2}));
    CHECK(o.mu == 17);
    CHECK(o.native_parameters == Q({1, 1}));

    o = C("(y^2-x^3)^2+x^5*y");
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::Wsharp, {1}));
    CHECK(o.parameters == Q({-1, 0}));
}

TEST_CASE("leading ideals of W# germs") {
    for (long mu = 16; mu <= 23; ++mu) {
        CAPTURE(mu);
        auto gens = wsharp_leading_ideal(mu);
        // the quotient is finite of dimension mu
        StandardBasis sb;
        sb.leading_ideal = gens;
        sb.noether = static_cast<int>(mu + 1);
        CHECK(static_cast<long>(quotient_basis(sb, 2).size()) == mu);
    }
}

TEST_CASE("more variables") {
    auto o = classify(parse_poly("x^3+y^7+x*y^5+z^2", {"x", "y", "z"}));
    REQUIRE(o.ok());
    CHECK(o.type == TypeId(Family::E12));
    CHECK(o.parameters == Q({1}));
    o = classify(parse_poly("x^2+y^2+z^2+w^4", {"x", "y", "z", "w"}));
    CHECK(o.type == TypeId(Family::A, {3}));
}

TEST_CASE("rejections") {
    CHECK(*C("x^5+y^6").rejected == RejectReason::ModalityAbove2);
    CHECK(*C("x^2*y^2").rejected == RejectReason::NonIsolated);
    CHECK(*C("0").rejected == RejectReason::ZeroGerm);
    CHECK(*classify(parse_poly("x^3+y^3+z^3", {"x", "y", "z"})).rejected == RejectReason::CorankAbove2);
    CHECK_THROWS_AS(C("x+y^2"), std::invalid_argument);
    CHECK_THROWS_AS(C("1+x^2"), std::invalid_argument);
    CHECK(to_string(RejectReason::CorankAbove2) == "corank > 2");
    CHECK(to_string(RejectReason::ModalityAbove2) == "modality > 2");
    CHECK(to_string(RejectReason::NonIsolated) == "non-isolated singularity");
    CHECK(to_string(RejectReason::ZeroGerm) == "zero germ");
}

TEST_CASE("outcome invariants on transformed samples") {
    std::mt19937_64 rng(77);
    for (const auto& t : sample_types()) {
        const TypeRecord& rec = type_record(t);
        CAPTURE(t.name());
        auto b = random_parameters(rec, rng);
        SparsePoly nf = normal_form(rec, b);
        const Truncation tr = Truncation::standard(2, rec.milnor + 2);
        SparsePoly inputs[] = {nf, substitute(nf, random_tangent(rng), tr), substitute(nf, random_linear(rng), tr)};
        for (int k = 0; k < 3; ++k) {
            CAPTURE(k);
            Outcome o = classify(inputs[k]);
            REQUIRE(o.ok());
            CHECK(o.type == t);
            CHECK(o.mu == rec.milnor);
            CHECK(static_cast<int>(o.parameters.size()) == rec.modality);
            CHECK(rec.admissible(o.parameters));
            CHECK(*milnor(o.normal_form).mu == *milnor(inputs[k]).mu);
            CHECK(o.normal_form == normal_form(rec, o.parameters));
            if (k < 2) CHECK(o.parameters == b);
        }
    }
}

TEST_CASE("the log reproduces the principal part") {
    std::mt19937_64 rng(78);
    for (const auto& t : sample_types()) {
        const TypeRecord& rec = type_record(t);
        if (rec.modality == 0 || t.family == Family::Wsharp) continue;
        CAPTURE(t.name());
        SparsePoly nf = normal_form(rec, random_parameters(rec, rng));
        const Truncation tr = Truncation::standard(2, rec.milnor + 2);
        SparsePoly f = substitute(nf, random_tangent(rng), tr);
        Outcome o = classify(f);
        REQUIRE(o.ok());
        SparsePoly g = f;
        for (const auto& s : o.log)
            if (!s.images.empty() && s.images.size() == 2) g = substitute(g, s.images, tr);
        CHECK(wjet(g, rec.w, rec.d) == wjet(o.normal_form, rec.w, rec.d));
    }
}

TEST_CASE("truncation override") {
    auto o = classify(P("x^3+y^7+x*y^5"), 30);
    REQUIRE(o.ok());
    CHECK(o.parameters == Q({1}));
}
