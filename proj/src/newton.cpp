#include "arnoldnf/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arnoldnf {

bool Face::contains(const Point& p) const {
    return wx * p.i + wy * p.j == degree && p.i >= left.i && p.i <= right.i;
}

std::vector<std::size_t> NewtonPolygon::faces_through(const Point& p) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < faces.size(); ++k)
        if (faces[k].contains(p)) out.push_back(k);
    return out;
}

namespace {

long cross(const Point& o, const Point& a, const Point& b) {
    return long(a.i - o.i) * (b.j - o.j) - long(a.j - o.j) * (b.i - o.i);
}

Face make_face(const Point& l, const Point& r) {
    Face f;
    f.left = l;
    f.right = r;
    long di = r.i - l.i, dj = l.j - r.j;
    long g = std::gcd(di, dj);
    f.wx = dj / g;
    f.wy = di / g;
    f.degree = f.wx * l.i + f.wy * l.j;
    return f;
}

}  // namespace

NewtonPolygon newton_polygon(const SparsePoly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("newton_polygon: two variables expected");
    if (f.is_zero()) throw std::invalid_argument("newton_polygon of zero");
    std::map<int, int> lowest;
    for (const auto& [m, c] : f.terms()) {
        auto it = lowest.find(m[0]);
        if (it == lowest.end() || m[1] < it->second) lowest[m[0]] = m[1];
    }
    std::vector<Point> hull;
    for (const auto& [i, j] : lowest) {
        Point p{i, j};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    NewtonPolygon poly;
    for (const auto& p : hull) {
        poly.vertices.push_back(p);
        if (!poly.vertices.empty() && poly.vertices.size() >= 2 && p.j >= poly.vertices[poly.vertices.size() - 2].j) {
            poly.vertices.pop_back();
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < poly.vertices.size(); ++k)
        poly.faces.push_back(make_face(poly.vertices[k], poly.vertices[k + 1]));
    if (poly.faces.empty()) return poly;
    long l = 1;
    for (const auto& fc : poly.faces) l = std::lcm(l, fc.degree);
    std::vector<std::vector<long>> forms;
    for (const auto& fc : poly.faces) {
        poly.lambda.push_back(l / fc.degree);
        forms.push_back({fc.wx, fc.wy});
    }
    poly.d = l;
    poly.weight = Weight::piecewise(forms, poly.lambda);
    return poly;
}

Span span(const Face& a, const Face& b) {
    if (a == b || !(a.right == b.left || b.right == a.left)) throw std::invalid_argument("span: faces are not adjacent");
    long l = std::lcm(a.degree, b.degree);
    Span s{Weight::piecewise({{a.wx, a.wy}, {b.wx, b.wy}}, {l / a.degree, l / b.degree}), l, {}};
    int imax = std::max(a.right.i, b.right.i), jmax = std::max(a.left.j, b.left.j);
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i)
            if (s.weight.degree(Monomial{i, j}) == l) s.support.push_back(Monomial{i, j});
    std::sort(s.support.begin(), s.support.end(), MonomialLess());
    return s;
}

SparsePoly face_jet(const SparsePoly& f, const Face& face) {
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (face.contains(Point{m[0], m[1]})) r.add_term(m, c);
    return r;
}

Dehomogenized dehomogenize(const SparsePoly& f1, long wx, long wy) {
    if (f1.is_zero()) throw std::invalid_argument("dehomogenize: zero polynomial");
    Dehomogenized d;
    d.wx = wx;
    d.wy = wy;
    d.a = std::numeric_limits<int>::max();
    d.b = std::numeric_limits<int>::max();
    long deg = wx * f1.terms().begin()->first[0] + wy * f1.terms().begin()->first[1];
    for (const auto& [m, c] : f1.terms()) {
        if (wx * m[0] + wy * m[1] != deg) throw std::invalid_argument("dehomogenize: not quasihomogeneous");
        d.a = std::min(d.a, m[0]);
        d.b = std::min(d.b, m[1]);
    }
    std::vector<AlgebraicScalar> c;
    for (const auto& [m, v] : f1.terms()) {
        long k = (m[0] - d.a) / wy;
        if (c.size() <= static_cast<std::size_t>(k)) c.resize(static_cast<std::size_t>(k) + 1, AlgebraicScalar(0));
        c[static_cast<std::size_t>(k)] = v;
    }
    d.p = UPoly(std::move(c));
    return d;
}

SparsePoly rehomogenize(const UPoly& q, long wx, long wy) {
    SparsePoly r(2);
    int n = q.degree();
    for (int k = 0; k <= n; ++k)
        r.add_term(Monomial{static_cast<int>(wy * k), static_cast<int>(wx * (n - k))}, q.coeffs[static_cast<std::size_t>(k)]);
    return r;
}

bool face_nondegenerate(const SparsePoly& f1, long wx, long wy) {
    return is_squarefree(dehomogenize(f1, wx, wy).p);
}

bool quasihomogeneous_squarefree(const SparsePoly& f1, long wx, long wy) {
    auto d = dehomogenize(f1, wx, wy);
    return d.a <= 1 && d.b <= 1 && is_squarefree(d.p);
}

MultiplicityFactor highest_multiplicity_factor(const SparsePoly& f1, long wx, long wy) {
    auto d = dehomogenize(f1, wx, wy);
    std::vector<UPoly> parts;
    if (d.p.degree() >= 1) parts = squarefree_decomposition(d.p);
    int top = std::max(d.a, d.b);
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (parts[k].degree() >= 1) top = std::max(top, static_cast<int>(k) + 1);
    SparsePoly g(2, AlgebraicScalar(1));
    if (d.a == top) g = g * SparsePoly::variable(2, 0);
    if (d.b == top) g = g * SparsePoly::variable(2, 1);
    if (top >= 1 && static_cast<std::size_t>(top) <= parts.size() && parts[static_cast<std::size_t>(top) - 1].degree() >= 1)
        g = g * rehomogenize(parts[static_cast<std::size_t>(top) - 1], wx, wy);
    return {g, top};
}

}  // namespace arnoldnf
