#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arnoldnf/catalog.hpp"
#include "arnoldnf/localalg.hpp"

#include <cctype>
#include <random>

using namespace arnoldnf;

namespace {

// Replaces parameter names by parenthesised values.
std::string instantiate(const std::string& tmpl, const std::vector<std::string>& names,
                        const std::vector<AlgebraicScalar>& values) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size();) {
        if (std::isalpha(static_cast<unsigned char>(tmpl[i]))) {
            std::size_t j = i;
            while (j < tmpl.size() && std::isalnum(static_cast<unsigned char>(tmpl[j]))) ++j;
            std::string id = tmpl.substr(i, j - i);
            bool hit = false;
            for (std::size_t k = 0; k < names.size(); ++k)
                if (names[k] == id) {
                    out += "(" + to_string(values[k]) + ")";
                    hit = true;
                }
            if (!hit) out += id;
            i = j;
        } else {
            out += tmpl[i++];
        }
    }
    return out;
}

// Newton number 2V - a - b + 1 of the polygon, made convenient by x^N, y^N.
long newton_number(SparsePoly f, int n) {
    f.add_term(Monomial{n, 0}, AlgebraicScalar(1));
    f.add_term(Monomial{0, n}, AlgebraicScalar(1));
    auto np = newton_polygon(f);
    const auto& v = np.vertices;
    long twice_area = 0;  // polygon (0,0), v[0], ..., v[last]
    for (std::size_t k = 0; k + 1 < v.size(); ++k) twice_area += long(v[k].i) * v[k + 1].j - long(v[k + 1].i) * v[k].j;
    twice_area = -twice_area;
    long b = v.front().j, a = v.back().i;
    return twice_area - a - b + 1;
}

bool faces_nondegenerate(const SparsePoly& f, int n) {
    SparsePoly g = f;
    g.add_term(Monomial{n, 0}, AlgebraicScalar(1));
    g.add_term(Monomial{0, n}, AlgebraicScalar(1));
    auto np = newton_polygon(g);
    for (const auto& face : np.faces)
        if (!face_nondegenerate(face_jet(g, face), face.wx, face.wy)) return false;
    return true;
}

}  // namespace

TEST_CASE("names round trip") {
    for (const auto& t : sample_types()) {
        CAPTURE(t.name());
        CHECK(parse_type(t.name()) == t);
        CHECK(type_record(t).id == t);
    }
    CHECK(parse_type("W#_{1,7}").indices == std::vector<int>{7});
    CHECK(parse_type("J_{10+4}") == TypeId(Family::J10k, {4}));
    CHECK(type_record(parse_type("A_7")).milnor == 7);
    CHECK_THROWS(parse_type("Q_10"));
    CHECK_THROWS(parse_type("D_3"));
}

TEST_CASE("templates agree with normal forms") {
    std::mt19937_64 rng(1);
    for (const auto& t : sample_types()) {
        const TypeRecord& rec = type_record(t);
        CAPTURE(t.name());
        CHECK(rec.names.size() == rec.moduli.size());
        CHECK(static_cast<int>(rec.moduli.size()) == rec.modality);
        for (int it = 0; it < 3; ++it) {
            auto p = random_parameters(rec, rng);
            CHECK(rec.admissible(p));
            SparsePoly nf = normal_form(rec, p);
            CHECK(parse_poly(instantiate(rec.template_text(), rec.names, p)) == nf);
            for (std::size_t k = 0; k < p.size(); ++k) CHECK(nf.coeff(rec.moduli[k]) == p[k] + rec.fixed.coeff(rec.moduli[k]));
        }
    }
}

TEST_CASE("Milnor numbers of the rows") {
    for (const auto& t : sample_types()) {
        const TypeRecord& rec = type_record(t);
        CAPTURE(t.name());
        SparsePoly nf = normal_form(rec, sample_parameters(rec));
        auto mu = milnor(nf);
        REQUIRE(mu.finite());
        CHECK(*mu.mu == rec.milnor);
        const int n = 60;
        if (faces_nondegenerate(nf, n)) CHECK(newton_number(nf, n) == rec.milnor);
    }
}

TEST_CASE("index formulas") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(type_record(TypeId(Family::J10k, {k})).milnor == 10 + k);
        CHECK(type_record(TypeId(Family::X9k, {k})).milnor == 9 + k);
        CHECK(type_record(TypeId(Family::J3p, {k})).milnor == 16 + k);
        CHECK(type_record(TypeId(Family::Z1p, {k})).milnor == 15 + k);
        CHECK(type_record(TypeId(Family::W1p, {k})).milnor == 15 + k);
        CHECK(type_record(TypeId(Family::Wsharp, {k})).milnor == 15 + k);
    }
    for (int r = 5; r <= 7; ++r)
        for (int s = r; s <= 8; ++s) {
            const TypeRecord& rec = type_record(TypeId(Family::Y, {r, s}));
            CHECK(rec.milnor == r + s + 1);
            CHECK(*milnor(normal_form(rec, sample_parameters(rec))).mu == rec.milnor);
        }
}

TEST_CASE("weights of the rows") {
    for (const auto& t : sample_types()) {
        const TypeRecord& rec = type_record(t);
        if (rec.modality == 0) continue;
        CAPTURE(t.name());
        for (const auto& [m, c] : rec.fixed.terms()) CHECK(rec.w.degree(m) >= rec.d);
        for (const auto& m : rec.moduli) CHECK(rec.w.degree(m) >= rec.d);
        CHECK(rec.dprime >= rec.d);
        SparsePoly nf = normal_form(rec, sample_parameters(rec));
        for (const auto& v : rec.gamma.vertices) CHECK_FALSE(nf.coeff(Monomial{v.i, v.j}).is_zero());
    }
}

TEST_CASE("restrictions") {
    auto bad = [](Family f, std::vector<int> idx, std::vector<AlgebraicScalar> p) {
        const TypeRecord& rec = type_record(TypeId(f, std::move(idx)));
        return rec.admissible(p);
    };
    CHECK_FALSE(bad(Family::X9, {}, {AlgebraicScalar(2)}));
    CHECK_FALSE(bad(Family::X9, {}, {AlgebraicScalar(-2)}));
    CHECK(bad(Family::X9, {}, {AlgebraicScalar(0)}));
    const AlgebraicScalar root = adjoin_root(FieldTower(), 3, AlgebraicScalar(Rational(-27, 4))).second;
    CHECK_FALSE(bad(Family::J10, {}, {root}));
    CHECK(bad(Family::J10, {}, {AlgebraicScalar(-3)}));
    CHECK_FALSE(bad(Family::J10k, {2}, {AlgebraicScalar(0)}));
    CHECK_FALSE(bad(Family::J3p, {1}, {AlgebraicScalar(0), AlgebraicScalar(5)}));
    CHECK(bad(Family::E18, {}, {AlgebraicScalar(0), AlgebraicScalar(0)}));
    CHECK_FALSE(bad(Family::W10, {}, {AlgebraicScalar(2), AlgebraicScalar(1)}));

    // excluded parameters give non-isolated or more degenerate germs
    const TypeRecord& x9 = type_record(TypeId(Family::X9));
    CHECK_FALSE(milnor(normal_form(x9, {AlgebraicScalar(2)})).finite());
    const TypeRecord& j10 = type_record(TypeId(Family::J10));
    auto mu = milnor(normal_form(j10, {root}));
    CHECK((!mu.finite() || *mu.mu > 10));
}
