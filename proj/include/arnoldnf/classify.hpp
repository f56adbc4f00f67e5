// Type and moduli of a germ of corank <= 2 and modality <= 2.
#pragma once

#include "arnoldnf/catalog.hpp"
#include "arnoldnf/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arnoldnf {

enum class RejectReason { CorankAbove2, ModalityAbove2, NonIsolated, ZeroGerm };

/// "corank > 2", "modality > 2", "non-isolated singularity", "zero germ".
std::string to_string(RejectReason r);

struct Outcome {
    std::optional<RejectReason> rejected;
    TypeId type;
    SparsePoly normal_form;
    std::vector<AlgebraicScalar> parameters;         // in the basis of the catalog row
    std::vector<AlgebraicScalar> native_parameters;  // W#: basis y^((mu-3)/2), y^((mu-1)/2) for odd mu
    long mu = 0;
    std::vector<Step> log;

    bool ok() const { return !rejected; }
};

/// Algorithm 2.  On success the germ is left in the shape the catalog row expects.
struct TypeResult {
    std::optional<RejectReason> rejected;
    TypeId type;
    Germ germ{SparsePoly(2), Truncation::none()};
    long mu = 0;
};

/// `bound` replaces the default truncation at standard degree mu + 2.
TypeResult determine_type(const SparsePoly& f, std::optional<long> bound = std::nullopt);

/// Algorithm 5 (and Algorithm 6 for W#) on the output of determine_type.
Outcome determine_parameters(TypeResult t);

/// Algorithm 6.  The germ must start with c*(x^2+b*y^3)^2 in (3,2)-degree 12.
Outcome classify_wsharp(Germ g, long mu);

/// Throws std::invalid_argument unless f lies in the square of the maximal ideal.
Outcome classify(const SparsePoly& f, std::optional<long> bound = std::nullopt);

/// Generators of the leading ideal of the Jacobian ideal of a W# germ
/// under the local (3,2)-weighted order.
std::vector<Monomial> wsharp_leading_ideal(long mu);

/// mu of (x^2+y^3)^2 + sum w_ij x^i y^j on the line 3i+2j = 12+d is 15+d iff this is nonzero.
AlgebraicScalar wsharp_signed_sum(const SparsePoly& f, long d);

}  // namespace arnoldnf
