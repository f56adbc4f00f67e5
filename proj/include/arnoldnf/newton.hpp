// Newton polygons of bivariate germs and quasihomogeneous face jets.
#pragma once

#include "arnoldnf/poly.hpp"
#include "arnoldnf/univariate.hpp"

#include <vector>

namespace arnoldnf {

struct Point {
    int i = 0, j = 0;
    friend bool operator==(const Point& a, const Point& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Compact edge of the polygon.  `left` has the larger y-exponent.
struct Face {
    Point left, right;
    long wx = 1, wy = 1;  // slope -wx/wy in lowest terms
    long degree = 0;

    Weight weight() const { return Weight({wx, wy}); }
    bool contains(const Point& p) const;
    friend bool operator==(const Face& a, const Face& b) { return a.left == b.left && a.right == b.right; }
};

struct NewtonPolygon {
    std::vector<Point> vertices;  // left (high j) to right (high i)
    std::vector<Face> faces;      // increasing slope: steepest first
    std::vector<long> lambda;
    long d = 0;
    Weight weight;  // piecewise weight w(f); empty when there is no face

    bool has_face() const { return !faces.empty(); }
    /// Faces containing the lattice point (one or two).
    std::vector<std::size_t> faces_through(const Point& p) const;
};

NewtonPolygon newton_polygon(const SparsePoly& f);

struct Span {
    Weight weight;
    long degree;
    std::vector<Monomial> support;
};

/// Two faces that share a vertex.
Span span(const Face& a, const Face& b);

SparsePoly face_jet(const SparsePoly& f, const Face& face);

/// f1 = x^a y^b P(x^wy / y^wx), P(0) != 0.
struct Dehomogenized {
    int a = 0, b = 0;
    long wx = 1, wy = 1;
    UPoly p;
};

Dehomogenized dehomogenize(const SparsePoly& f1, long wx, long wy);
/// Inverse of dehomogenize for a factor q of P.
SparsePoly rehomogenize(const UPoly& q, long wx, long wy);

/// The part of f1 coprime to xy is squarefree.
bool face_nondegenerate(const SparsePoly& f1, long wx, long wy);
/// f1 squarefree including the monomial factors x, y.
bool quasihomogeneous_squarefree(const SparsePoly& f1, long wx, long wy);

struct MultiplicityFactor {
    SparsePoly g;
    int multiplicity;
};

MultiplicityFactor highest_multiplicity_factor(const SparsePoly& f1, long wx, long wy);

}  // namespace arnoldnf
