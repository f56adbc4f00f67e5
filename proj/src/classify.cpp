#include "arnoldnf/classify.hpp"

#include "arnoldnf/linalg.hpp"
#include "arnoldnf/localalg.hpp"
#include "arnoldnf/newton.hpp"

#include <complex>
#include <map>
#include <set>
#include <tuple>

namespace arnoldnf {

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::CorankAbove2: return "corank > 2";
        case RejectReason::ModalityAbove2: return "modality > 2";
        case RejectReason::NonIsolated: return "non-isolated singularity";
        case RejectReason::ZeroGerm: return "zero germ";
    }
    return "?";
}

namespace {

using MonoSet = std::set<Monomial, MonomialLess>;

const Weight kStd2 = Weight::standard(2);
const Weight kW32 = Weight({3, 2});

SparsePoly X() { return SparsePoly::variable(2, 0); }
SparsePoly Y() { return SparsePoly::variable(2, 1); }

std::vector<SparsePoly> swap_images() { return {Y(), X()}; }

Monomial swapped(const Monomial& m) { return Monomial{m[1], m[0]}; }

MonoSet support_set(const SparsePoly& f) {
    MonoSet s;
    for (const auto& [m, c] : f.terms()) s.insert(m);
    return s;
}

MonoSet swapped(const MonoSet& s) {
    MonoSet out;
    for (const auto& m : s) out.insert(swapped(m));
    return out;
}

AlgebraicScalar radical(int n, const AlgebraicScalar& v, const FieldTower& base = {}) {
    if (n == 1 || v.is_zero()) return v;
    FieldTower t = common_tower(base, v.tower());
    return adjoin_root(t, n, v.lifted(t)).second;
}

TypeResult reject(RejectReason r, long mu) {
    TypeResult t;
    t.rejected = r;
    t.mu = mu;
    return t;
}

TypeResult found(Germ g, TypeId id, long mu) {
    TypeResult t;
    t.type = std::move(id);
    t.germ = std::move(g);
    t.mu = mu;
    return t;
}

// ------------------------------------------------------------ type tables

const std::vector<Family>& one_face_families() {
    static const std::vector<Family> fams = {
        Family::E6,  Family::E7,  Family::E8,  Family::X9,  Family::J10, Family::E12, Family::E13, Family::E14,
        Family::Z11, Family::Z12, Family::Z13, Family::W12, Family::W13, Family::J30, Family::Z10, Family::W10,
        Family::E18, Family::E19, Family::E20, Family::Z17, Family::Z18, Family::Z19, Family::W17, Family::W18};
    return fams;
}

std::optional<Family> match_face_line(long wx, long wy, long deg) {
    for (Family f : one_face_families()) {
        const auto& face = type_record(TypeId(f)).gamma.faces.at(0);
        if (face.wx == wx && face.wy == wy && face.degree == deg) return f;
    }
    return std::nullopt;
}

// Support {x^r, corner, y^s} on the span of the two faces through the corner.
std::optional<TypeId> match_two_faces(const MonoSet& s) {
    if (s.size() != 3) return std::nullopt;
    int r = -1, q = -1;
    Monomial corner;
    bool has_corner = false;
    for (const auto& m : s) {
        if (m[1] == 0) r = m[0];
        else if (m[0] == 0) q = m[1];
        else {
            corner = m;
            has_corner = true;
        }
    }
    if (!has_corner) {
        // Z_{1,p}: {x^3 y, x^2 y^3, y^(7+p)}
        if (s.count(Monomial{3, 1}) && s.count(Monomial{2, 3}) && q >= 8) return TypeId(Family::Z1p, {q - 7});
        return std::nullopt;
    }
    if (corner == Monomial{2, 2} && r >= 0 && q >= 0) {
        int a = std::min(r, q), b = std::max(r, q);
        if (a == 3 && b >= 7) return TypeId(Family::J10k, {b - 6});
        if (a == 4 && b >= 5) return TypeId(Family::X9k, {b - 4});
        if (a >= 5) return TypeId(Family::Y, {a, b});
        return std::nullopt;
    }
    if (corner == Monomial{2, 3} && r >= 0 && q >= 0) {
        if (r == 3 && q >= 10) return TypeId(Family::J3p, {q - 9});
        if (r == 4 && q >= 7) return TypeId(Family::W1p, {q - 6});
    }
    if (corner == Monomial{3, 1} || corner == Monomial{2, 3}) {
        if (s.count(Monomial{3, 1}) && s.count(Monomial{2, 3}) && q >= 8) return TypeId(Family::Z1p, {q - 7});
    }
    return std::nullopt;
}

// The catalog orientation of a two-face match: x^r with r <= s, or the x-heavy ends.
bool needs_swap(const MonoSet& s, const TypeId& id) {
    if (id.family == Family::J10k || id.family == Family::X9k || id.family == Family::Y) {
        int r = 0, q = 0;
        for (const auto& m : s) {
            if (m[1] == 0) r = m[0];
            if (m[0] == 0) q = m[1];
        }
        return r > q;
    }
    return false;
}

// ------------------------------------------------------------- Algorithm 2

TypeResult polygon_iteration(Germ g, long mu) {
    const long dd = g.poly().order(kStd2);
    MonoSet s0 = support_set(wlayer(g.poly(), kStd2, dd));
    auto rej = [&] { return reject(RejectReason::ModalityAbove2, mu); };

    for (int iter = 0; iter < 64; ++iter) {
        NewtonPolygon poly = newton_polygon(g.poly());
        std::optional<Point> corner;
        for (std::size_t k = 1; k + 1 < poly.vertices.size(); ++k) {
            const Point& v = poly.vertices[k];
            if (v.i > 1 && v.j > 1 && s0.count(Monomial{v.i, v.j})) {
                corner = v;
                break;
            }
        }
        if (corner) {
            Point m0 = *corner;
            if (m0 == Point{3, 2}) {
                g.apply("swap", swap_images());
                s0 = swapped(s0);
                continue;
            }
            if (!(m0 == Point{2, 2}) && !(m0 == Point{2, 3})) return rej();
            SparsePoly f1;
            for (int inner = 0;; ++inner) {
                if (inner > 64) return rej();
                NewtonPolygon p = newton_polygon(g.poly());
                std::size_t k = 0;
                while (k < p.vertices.size() && !(p.vertices[k] == m0)) ++k;
                if (k == 0 || k + 1 >= p.vertices.size()) return rej();
                const Face& steep = p.faces[k - 1];
                const Face& shallow = p.faces[k];
                Span sp = span(steep, shallow);
                f1 = wlayer(g.poly(), sp.weight, sp.degree);
                std::optional<Monomial> t;
                for (const auto& [m, c] : f1.terms())
                    if (m[0] == m0.i - 1 || m[1] == m0.j - 1) {
                        t = m;
                        break;
                    }
                if (!t) break;
                if (!remove_term_via_partials(g, f1, *t, steep.weight(), shallow.weight())) return rej();
            }
            MonoSet s = support_set(f1);
            auto id = match_two_faces(s);
            if (!id) return rej();
            if (needs_swap(s, *id)) g.apply("swap", swap_images());
            return found(std::move(g), *id, mu);
        }

        const Face* face = nullptr;
        for (const auto& fc : poly.faces) {
            bool all = true;
            for (const auto& m : s0)
                if (!fc.contains(Point{m[0], m[1]})) all = false;
            if (all) {
                face = &fc;
                break;
            }
        }
        if (!face) return rej();
        const Face fc = *face;
        SparsePoly f1 = face_jet(g.poly(), fc);
        if (quasihomogeneous_squarefree(f1, fc.wx, fc.wy)) {
            if (auto fam = match_face_line(fc.wx, fc.wy, fc.degree)) return found(std::move(g), TypeId(*fam), mu);
            if (auto fam = match_face_line(fc.wy, fc.wx, fc.degree)) {
                g.apply("swap", swap_images());
                return found(std::move(g), TypeId(*fam), mu);
            }
            return rej();
        }
        MultiplicityFactor mf = highest_multiplicity_factor(f1, fc.wx, fc.wy);
        const SparsePoly& g1 = mf.g;
        bool x_linear = true;
        AlgebraicScalar cx;
        SparsePoly rest(2);
        for (const auto& [m, c] : g1.terms()) {
            if (m == Monomial{1, 0}) cx = c;
            else if (m[0] == 0 && m[1] > 0) rest.add_term(m, c);
            else x_linear = false;
        }
        if (x_linear && !cx.is_zero()) {
            g.apply("face-factor", {X() - rest * cx.inverse(), Y()});
            MonoSet next = support_set(wlayer(g.poly(), fc.weight(), fc.degree));
            if (rest.is_zero() && next == s0) return rej();
            s0 = next;
            continue;
        }
        MonoSet s = support_set(f1);
        const MonoSet cusp{Monomial{4, 0}, Monomial{2, 3}, Monomial{0, 6}};
        if (s == cusp || swapped(s) == cusp) {
            if (s != cusp) g.apply("swap", swap_images());
            if (mu <= 15) return rej();
            return found(std::move(g), TypeId(Family::Wsharp, {static_cast<int>(mu - 15)}), mu);
        }
        return rej();
    }
    return rej();
}

}  // namespace

TypeResult determine_type(const SparsePoly& f, std::optional<long> bound) {
    MilnorResult mr = milnor(f);
    if (!mr.finite()) return reject(RejectReason::NonIsolated, 0);
    const long mu = *mr.mu;
    const int n = f.nvars();
    const long b = bound.value_or(mu + 2);
    Truncation tr = Truncation::standard(n, b);
    Germ g(truncate(f, tr), tr);
    SplitResult sr = split(g, b);
    if (sr.corank <= 1) return found(std::move(g), TypeId(Family::A, {static_cast<int>(mu)}), mu);
    if (sr.corank > 2) return reject(RejectReason::CorankAbove2, mu);
    g.set_truncation(Truncation::standard(2, b));

    const long ord = g.poly().order(kStd2);
    if (ord >= 5) return reject(RejectReason::ModalityAbove2, mu);
    SparsePoly h = wlayer(g.poly(), kStd2, ord);
    int top = highest_multiplicity_factor(h, 1, 1).multiplicity;
    if (ord == 3) {
        if (top == 1) return found(std::move(g), TypeId(Family::D, {4}), mu);
        if (top == 2) return found(std::move(g), TypeId(Family::D, {static_cast<int>(mu)}), mu);
        if (mu >= 6 && mu <= 8) {
            Family fam = mu == 6 ? Family::E6 : mu == 7 ? Family::E7 : Family::E8;
            return found(std::move(g), TypeId(fam), mu);
        }
    }
    if (ord == 4 && top == 1) return found(std::move(g), TypeId(Family::X9), mu);
    reverse_linear_jet(g);
    return polygon_iteration(std::move(g), mu);
}

// ------------------------------------------------------------- Algorithm 5

namespace {

Outcome success(const TypeId& id, const std::vector<AlgebraicScalar>& params, long mu, const Germ& g) {
    Outcome o;
    o.type = id;
    o.parameters = params;
    o.native_parameters = params;
    o.normal_form = normal_form(type_record(id), params);
    o.mu = mu;
    o.log = g.log();
    return o;
}

std::vector<std::complex<long double>> cubic_roots(const std::vector<Rational>& c) {
    // c[0] + c[1] z + c[2] z^2 + c[3] z^3, Durand-Kerner
    using C = std::complex<long double>;
    long double a3 = c[3].get_d();
    std::vector<C> k = {c[0].get_d() / a3, c[1].get_d() / a3, c[2].get_d() / a3};
    std::vector<C> z = {C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L), C(0.4L, 0.9L) * C(0.4L, 0.9L) * C(0.4L, 0.9L)};
    for (int it = 0; it < 500; ++it)
        for (std::size_t i = 0; i < 3; ++i) {
            C num = ((z[i] + k[2]) * z[i] + k[1]) * z[i] + k[0];
            C den = 1;
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i) den *= z[i] - z[j];
            z[i] -= num / den;
        }
    return z;
}

std::optional<Rational> reconstruct(long double v) {
    // continued fraction convergents
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double x = v;
    for (int it = 0; it < 40; ++it) {
        long double fl = std::floor(x);
        mpz_class a(static_cast<long>(fl));
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Rational q(h1, k1);
        q.canonicalize();
        if (std::fabs(static_cast<long double>(q.get_d()) - v) < 1e-12L * (1 + std::fabs(v))) return q;
        if (x - fl < 1e-18L) break;
        x = 1 / (x - fl);
        if (k1 > 1000000000) break;
    }
    return std::nullopt;
}

// A root of the cubic with rational coefficients, rational when possible.
AlgebraicScalar cubic_root(const std::vector<Rational>& c) {
    auto eval = [&](const Rational& z) -> Rational { return ((c[3] * z + c[2]) * z + c[1]) * z + c[0]; };
    std::vector<Rational> rational;
    for (const auto& r : cubic_roots(c))
        if (std::fabs(r.imag()) < 1e-9L)
            if (auto q = reconstruct(r.real()); q && eval(*q) == 0) rational.push_back(*q);
    if (!rational.empty()) return AlgebraicScalar(*std::min_element(rational.begin(), rational.end()));
    AlgebraicScalar b(c[2] / c[3]), cc(c[1] / c[3]), e(c[0] / c[3]);
    AlgebraicScalar three(3), two(2), n27(27);
    AlgebraicScalar p = cc - b * b / three;
    AlgebraicScalar q = two * b.pow(3) / n27 - b * cc / three + e;
    AlgebraicScalar t;
    if (p.is_zero()) {
        t = radical(3, -q);
    } else {
        AlgebraicScalar disc = q * q / AlgebraicScalar(4) + p.pow(3) / n27;
        AlgebraicScalar sq = radical(2, disc);
        AlgebraicScalar u3 = -q / two + sq;
        if (u3.is_zero()) u3 = -q / two - sq;
        AlgebraicScalar u = radical(3, u3, sq.tower());
        t = u - p / (three * u);
    }
    return t - b / three;
}

// X_9 modulus from the invariants of the binary quartic h.
AlgebraicScalar x9_parameter(const SparsePoly& h) {
    const long binom[5] = {1, 4, 6, 4, 1};
    std::vector<Rational> a(5);
    for (int i = 0; i <= 4; ++i) {
        AlgebraicScalar c = h.coeff(Monomial{4 - i, i});
        if (!c.is_rational()) throw std::logic_error("X_9 quartic over an extension field");
        a[static_cast<std::size_t>(i)] = c.to_rational() / binom[i];
    }
    Rational I = a[0] * a[4] - 4 * a[1] * a[3] + 3 * a[2] * a[2];
    Rational J = a[0] * a[2] * a[4] + 2 * a[1] * a[2] * a[3] - a[2] * a[2] * a[2] - a[0] * a[3] * a[3] - a[1] * a[1] * a[4];
    Rational I3 = I * I * I, J2 = J * J;
    // I^3 z (36-z)^2 - 27 J^2 (12+z)^3
    std::vector<Rational> c = {-46656 * J2, 1296 * I3 - 11664 * J2, -72 * I3 - 972 * J2, I3 - 27 * J2};
    if (c[3] == 0) throw std::logic_error("X_9 quartic with vanishing discriminant");
    AlgebraicScalar z = cubic_root(c);
    return radical(2, z, z.tower());
}

// Face x^3, x^2 y^k, x y^2k, y^3k (times y^e): shift x -> x + s y^k so that the x y^2k term vanishes.
void normalize_cubic_face(Germ& g, const TypeRecord& rec) {
    const Face& face = rec.gamma.faces.at(0);
    const long k = face.wx;  // wy == 1 for these rows
    auto coeff = [&](int i) { return g.poly().coeff(Monomial{i, static_cast<int>(face.degree - k * i)}); };
    AlgebraicScalar c3 = coeff(3), c2 = coeff(2), c1 = coeff(1), c0 = coeff(0);
    if (c1.is_zero()) return;
    // 3 c3 s^2 + 2 c2 s + c1 = 0
    AlgebraicScalar disc = AlgebraicScalar(4) * c2 * c2 - AlgebraicScalar(12) * c3 * c1;
    AlgebraicScalar sq = radical(2, disc, g.poly().tower());
    std::vector<AlgebraicScalar> cands = {(-AlgebraicScalar(2) * c2 + sq) / (AlgebraicScalar(6) * c3),
                                          (-AlgebraicScalar(2) * c2 - sq) / (AlgebraicScalar(6) * c3)};
    AlgebraicScalar s = cands[0];
    for (const auto& cand : cands) {
        AlgebraicScalar n2 = c2 + AlgebraicScalar(3) * c3 * cand;
        AlgebraicScalar n0 = ((c3 * cand + c2) * cand + c1) * cand + c0;
        AlgebraicScalar t = n2.pow(3) / (c3 * c3 * n0);
        if (t.is_rational() && rational_root(t.to_rational(), 3)) {
            s = cand;
            break;
        }
    }
    g.apply("face-shift", {X() + SparsePoly::monomial(2, Monomial{0, static_cast<int>(k)}, s), Y()});
}

SparsePoly reduced_normal_form(const SparsePoly& g, const StandardBasis& sb) {
    SparsePoly out(2), h = g;
    for (;;) {
        h = mora_normal_form(h, sb);
        if (h.is_zero()) return out;
        Monomial lt = leading_monomial(h, sb.order);
        AlgebraicScalar c = h.coeff(lt);
        out.add_term(lt, c);
        h -= SparsePoly::monomial(2, lt, c);
    }
}

// First-order shift of the moduli coefficients caused by terms above d':
// tail = v1*dx(f0) + v2*dy(f0) + sum c_k m_k modulo std degree > bound, v in m.
std::vector<AlgebraicScalar> tail_shift(const SparsePoly& tail, const SparsePoly& f0,
                                        const std::vector<Monomial>& system, long bound) {
    std::vector<SparsePoly> cols;
    const SparsePoly parts[2] = {diff(f0, 0), diff(f0, 1)};
    for (const auto& part : parts)
        for (int a = 0; a < bound; ++a)
            for (int b = 0; a + b < bound; ++b)
                if (a + b >= 1)
                    cols.push_back(wjet(part.mul_monomial(Monomial{a, b}, AlgebraicScalar(1)), kStd2, bound));
    for (const auto& m : system) cols.push_back(SparsePoly::monomial(2, m));

    std::vector<Monomial> rows;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) rows.push_back(Monomial{a, b});
    Matrix mat(rows.size(), std::vector<AlgebraicScalar>(cols.size()));
    std::vector<AlgebraicScalar> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rhs[r] = tail.coeff(rows[r]);
        for (std::size_t c = 0; c < cols.size(); ++c) mat[r][c] = cols[c].coeff(rows[r]);
    }
    auto x = solve(mat, rhs);
    if (!x) throw std::logic_error("terms above the determinacy degree are not removable");
    return std::vector<AlgebraicScalar>(x->end() - static_cast<long>(system.size()), x->end());
}

std::vector<std::pair<Monomial, AlgebraicScalar>> fixed_targets(const TypeRecord& rec) {
    std::vector<std::pair<Monomial, AlgebraicScalar>> out;
    for (const auto& [m, c] : rec.fixed.terms()) out.emplace_back(m, c);
    return out;
}

std::vector<AlgebraicScalar> read_parameters(const Germ& g, const TypeRecord& rec) {
    std::vector<AlgebraicScalar> params;
    for (const auto& m : rec.moduli) params.push_back(g.poly().coeff(m));
    if (!(g.poly() == normal_form(rec, params))) throw std::logic_error("unexpected terms after normalization: " + to_string(g.poly()));
    if (!rec.admissible(params)) throw std::logic_error("parameters violate the restriction " + rec.restriction);
    return params;
}

Outcome parameters_x9(Germ g, long mu) {
    const TypeRecord& rec = type_record(TypeId(Family::X9));
    SparsePoly h = wlayer(g.poly(), kStd2, 4);
    bool direct = true;
    for (const auto& [m, c] : h.terms())
        if (m[0] % 2 != 0) direct = false;
    if (direct) {
        g.replace("truncate", h);
        rescale(g, fixed_targets(rec));
        return success(rec.id, read_parameters(g, rec), mu, g);
    }
    return success(rec.id, {x9_parameter(h)}, mu, g);
}

}  // namespace

Outcome determine_parameters(TypeResult t) {
    if (t.rejected) {
        Outcome o;
        o.rejected = t.rejected;
        o.mu = t.mu;
        return o;
    }
    const TypeRecord& rec = type_record(t.type);
    Germ& g = t.germ;
    const long mu = t.mu;
    if (rec.modality == 0) return success(rec.id, {}, mu, g);
    if (rec.id.family == Family::Wsharp) return classify_wsharp(std::move(g), mu);
    if (rec.id.family == Family::X9) return parameters_x9(std::move(g), mu);

    const Weight& w = rec.w;
    const long d = rec.d;
    if (!rec.two_faces() && (rec.id.family == Family::J10 || rec.id.family == Family::J30 || rec.id.family == Family::Z10))
        normalize_cubic_face(g, rec);

    const SparsePoly f0 = wjet(g.poly(), w, d);
    std::optional<StandardBasis> jac;
    Weight steep, shallow;
    if (rec.two_faces()) {
        jac = jacobian_std(f0, mu, LocalOrder::standard(2));
        steep = rec.gamma.faces[0].weight();
        shallow = rec.gamma.faces[1].weight();
    }
    for (long j = d + 1; j <= rec.dprime; ++j) {
        MonoSet processed;
        for (;;) {
            SparsePoly layer = wlayer(g.poly(), w, j);
            std::optional<Monomial> t;
            for (const auto& [m, c] : layer.terms())
                if (!processed.count(m)) {
                    t = m;
                    break;
                }
            if (!t) break;
            processed.insert(*t);
            if (!rec.two_faces()) remove_term_via_partials(g, f0, *t, kStd2, kStd2);
            else if (mora_normal_form(SparsePoly::monomial(2, *t), *jac).is_zero())
                remove_term_via_partials(g, f0, *t, steep, shallow);
        }
        std::vector<Monomial> system;
        for (const auto& m : rec.moduli)
            if (w.degree(m) == j) system.push_back(m);
        SparsePoly layer = wlayer(g.poly(), w, j);
        if (jac && !system.empty()) {
            // moduli are read from the reduced normal form modulo Jac(f0)
            SparsePoly nf = reduced_normal_form(layer, *jac);
            for (const auto& m : system) layer -= SparsePoly::monomial(2, m, nf.coeff(m));
        }
        if (!layer.is_zero()) {
            JacDecomposition dec = jac_decompose(layer, f0, w, j, jac ? std::vector<Monomial>{} : system);
            g.apply("jacobian", {X() - dec.v1, Y() - dec.v2});
        }
        SparsePoly left = wlayer(g.poly(), w, j);
        for (const auto& [m, c] : left.terms())
            if (std::find(system.begin(), system.end(), m) == system.end())
                throw std::logic_error("layer " + std::to_string(j) + " not reduced: " + to_string(left));
    }
    SparsePoly kept = wjet(g.poly(), w, rec.dprime);
    if (rec.two_faces()) {
        std::vector<Monomial> above;
        for (const auto& m : rec.moduli)
            if (w.degree(m) > d) above.push_back(m);
        SparsePoly tail = wtail(g.poly(), w, rec.dprime);
        if (!above.empty() && !tail.is_zero()) {
            auto shift = tail_shift(tail, f0, above, g.truncation().bound);
            for (std::size_t k = 0; k < above.size(); ++k) kept.add_term(above[k], shift[k]);
        }
    }
    g.replace("truncate", kept);
    rescale(g, fixed_targets(rec));
    return success(rec.id, read_parameters(g, rec), mu, g);
}

// ------------------------------------------------------------- Algorithm 6

std::vector<Monomial> wsharp_leading_ideal(long mu) {
    const int h = static_cast<int>(mu);
    if (mu % 2 == 0) return {Monomial{3, 0}, Monomial{2, 2}, Monomial{0, (h - 2) / 2}};
    return {Monomial{3, 0}, Monomial{2, 2}, Monomial{1, (h - 5) / 2}, Monomial{0, (h + 1) / 2}};
}

AlgebraicScalar wsharp_signed_sum(const SparsePoly& f, long d) {
    AlgebraicScalar s(0);
    for (const auto& [m, c] : f.terms())
        if (3 * m[0] + 2 * m[1] == 12 + d) s += ((m[0] / 2) % 2 == 0) ? c : -c;
    return s;
}

namespace {

struct WsharpMonomials {
    Monomial m0, m1, m2;
};

WsharpMonomials wsharp_monomials(long mu) {
    const int h = static_cast<int>(mu);
    if (mu % 2 == 1) return {Monomial{0, (h - 3) / 2}, Monomial{1, (h - 5) / 2}, Monomial{0, (h - 1) / 2}};
    return {Monomial{1, (h - 6) / 2}, Monomial{0, (h - 2) / 2}, Monomial{1, (h - 4) / 2}};
}

// Native parameters (a0, a1) with respect to m0, m2.
std::pair<AlgebraicScalar, AlgebraicScalar> wsharp_native(Germ& g, long mu) {
    const Truncation tr{kW32, mu - 1};
    g.set_truncation(tr);
    g.replace("truncate", truncate(g.poly(), tr));
    SparsePoly f1 = wlayer(g.poly(), kW32, 12);
    AlgebraicScalar c4 = f1.coeff(Monomial{4, 0}), c2 = f1.coeff(Monomial{2, 3}), c0 = f1.coeff(Monomial{0, 6});
    if (c4.is_zero() || c0.is_zero() || !(c2 * c2 == AlgebraicScalar(4) * c4 * c0))
        throw std::invalid_argument("classify_wsharp: 12-jet is not a square of x^2 + b y^3");
    AlgebraicScalar s = radical(2, c4.inverse(), g.poly().tower());
    AlgebraicScalar t = radical(2, c0.inverse(), s.tower());
    if (s * t * c2 == AlgebraicScalar(-2)) t = -t;
    AlgebraicScalar a = radical(2, s, t.tower());
    AlgebraicScalar b = radical(3, t, a.tower());
    g.apply("rescale", {X() * a, Y() * b});

    const SparsePoly core = parse_poly("x^2+y^3");
    const SparsePoly core2 = core * core;
    const long d = mu - 15;
    auto peel = [&](long a) {
        auto [l, r] = divide_by_core(wlayer(g.poly(), kW32, a));
        core_normalize(g, l, mu - 1);
        return r;
    };
    for (long a = 13; a < 12 + d; ++a)
        if (!peel(a).is_zero()) throw std::logic_error("W#: layer " + std::to_string(a) + " is not divisible by x^2+y^3");
    const WsharpMonomials ms = wsharp_monomials(mu);
    SparsePoly r = peel(12 + d);
    AlgebraicScalar a0 = r.coeff(ms.m0);
    if (a0.is_zero() || !(r == SparsePoly::monomial(2, ms.m0, a0))) throw std::logic_error("W#: unexpected remainder in degree 12+d");
    r = peel(13 + d);
    AlgebraicScalar e = r.coeff(ms.m1);
    if (!(r == SparsePoly::monomial(2, ms.m1, e)) && !r.is_zero()) throw std::logic_error("W#: unexpected remainder in degree 13+d");
    if (!e.is_zero()) {
        AlgebraicScalar c = e / (AlgebraicScalar(mu - 3) * a0);
        if (mu % 2 == 0) c = -c;
        std::vector<SparsePoly> phi = exp_vector_field(c, 2);
        g.replace("exp-vector-field", core2 + substitute(g.poly() - core2, phi, tr), phi);
        if (!peel(13 + d).is_zero()) throw std::logic_error("W#: degree 13+d not cleared");
    }
    r = peel(14 + d);
    AlgebraicScalar a1 = r.coeff(ms.m2);
    if (!(r == SparsePoly::monomial(2, ms.m2, a1)) && !r.is_zero()) throw std::logic_error("W#: unexpected remainder in degree 14+d");
    return {a0, a1};
}

}  // namespace

Outcome classify_wsharp(Germ g, long mu) {
    if (mu < 16) throw std::invalid_argument("classify_wsharp: mu must exceed 15");
    const TypeId id(Family::Wsharp, {static_cast<int>(mu - 15)});
    auto [a0, a1] = wsharp_native(g, mu);
    Outcome o = success(id, {a0, a1}, mu, g);
    if (mu % 2 == 1) {
        // Table 1 uses x^2 y^((mu-9)/2) and x^2 y^((mu-7)/2) for odd mu.
        const TypeRecord& rec = type_record(id);
        AlgebraicScalar b0 = -a0;
        Germ probe(normal_form(rec, {b0, AlgebraicScalar(0)}), g.truncation());
        AlgebraicScalar kappa = wsharp_native(probe, mu).second;
        AlgebraicScalar b1 = kappa - a1;
        Germ check(normal_form(rec, {b0, b1}), g.truncation());
        auto back = wsharp_native(check, mu);
        if (!(back.first == a0) || !(back.second == a1)) throw std::logic_error("W#: basis conversion failed");
        o.parameters = {b0, b1};
        o.normal_form = normal_form(rec, o.parameters);
    }
    o.native_parameters = {a0, a1};
    return o;
}

Outcome classify(const SparsePoly& f, std::optional<long> bound) {
    if (f.is_zero()) {
        Outcome o;
        o.rejected = RejectReason::ZeroGerm;
        return o;
    }
    for (const auto& [m, c] : f.terms())
        if (m.total() < 2) throw std::invalid_argument("germ is not in the square of the maximal ideal");
    return determine_parameters(determine_type(f, bound));
}

}  // namespace arnoldnf
