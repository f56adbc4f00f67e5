// Normal forms of corank <= 2 singularities of modality <= 2.
#pragma once

#include "arnoldnf/newton.hpp"
#include "arnoldnf/poly.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace arnoldnf {

enum class Family {
    A, D, E6, E7, E8, X9, J10,
    J10k, X9k, Y, E12, E13, E14, Z11, Z12, Z13, W12, W13,
    J30, J3p, Z10, Z1p, W10, W1p, Wsharp, E18, E19, E20, Z17, Z18, Z19, W17, W18
};

/// Wsharp carries p = mu - 15: odd p = 2q-1, even p = 2q.
struct TypeId {
    Family family = Family::A;
    std::vector<int> indices;

    TypeId() = default;
    TypeId(Family f, std::vector<int> idx = {});

    std::string name() const;
    friend bool operator==(const TypeId& a, const TypeId& b) {
        return a.family == b.family && a.indices == b.indices;
    }
    friend bool operator!=(const TypeId& a, const TypeId& b) { return !(a == b); }
};

/// Parses names as printed by TypeId::name, e.g. "E_12", "Y_{5,6}", "W#_{1,3}".
TypeId parse_type(const std::string& name);

struct TypeRecord {
    TypeId id;
    SparsePoly fixed;                  // terms without parameters
    std::vector<Monomial> moduli;      // Arnold system, one per parameter
    std::vector<std::string> names;    // parameter names
    std::string restriction;           // empty when there is none
    std::function<bool(const std::vector<AlgebraicScalar>&)> admissible;
    int modality = 0;
    long milnor = 0;

    NewtonPolygon gamma;
    Weight w;
    long d = 0;
    long dprime = 0;

    bool two_faces() const { return gamma.faces.size() == 2; }
    /// Symbolic normal form such as "x^3+y^7+a*x*y^5".
    std::string template_text() const;
};

const TypeRecord& type_record(const TypeId& id);

SparsePoly normal_form(const TypeRecord& rec, const std::vector<AlgebraicScalar>& params);

/// One representative of every row with indices k, p, q in {1,2,3}, r <= s in {5,6}.
std::vector<TypeId> sample_types();

/// Fixed admissible rational parameters.
std::vector<AlgebraicScalar> sample_parameters(const TypeRecord& rec);
/// Random admissible rational parameters.
std::vector<AlgebraicScalar> random_parameters(const TypeRecord& rec, std::mt19937_64& rng);

}  // namespace arnoldnf
