#include "arnoldnf/transform.hpp"

#include "arnoldnf/linalg.hpp"
#include "arnoldnf/newton.hpp"

#include <algorithm>
#include <numeric>

namespace arnoldnf {

std::vector<SparsePoly> identity_images(int nvars) {
    std::vector<SparsePoly> out;
    for (int i = 0; i < nvars; ++i) out.push_back(SparsePoly::variable(nvars, i));
    return out;
}

bool is_identity(const std::vector<SparsePoly>& images) {
    for (int i = 0; i < static_cast<int>(images.size()); ++i)
        if (!(images[static_cast<std::size_t>(i)] == SparsePoly::variable(static_cast<int>(images.size()), i))) return false;
    return true;
}

void Germ::apply(const std::string& kind, const std::vector<SparsePoly>& images) {
    if (is_identity(images)) return;
    f_ = substitute(f_, images, tr_);
    log_.push_back({kind, images, tr_});
}

void Germ::replace(const std::string& kind, SparsePoly f, std::vector<SparsePoly> images) {
    f_ = std::move(f);
    log_.push_back({kind, std::move(images), tr_});
}

void Germ::restrict_to(SparsePoly f, const std::string& kind) {
    f_ = std::move(f);
    log_.push_back({kind, {}, tr_});
}

namespace {

SparsePoly var(int n, int i) { return SparsePoly::variable(n, i); }

AlgebraicScalar radical(int n, const AlgebraicScalar& v, const FieldTower& base) {
    if (n == 1 || v.is_zero()) return v;
    FieldTower t = common_tower(base, v.tower());
    return adjoin_root(t, n, v.lifted(t)).second;
}

}  // namespace

// -------------------------------------------------------------------- split

SplitResult split(Germ& g, long bound) {
    const int n = g.nvars();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    auto q = [&](int i, int j) { return g.poly().coeff(Monomial::var(i) * Monomial::var(j)); };
    for (;;) {
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (!done[static_cast<std::size_t>(i)] && !q(i, i).is_zero()) pivot = i;
        if (pivot < 0) {
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n && pi < 0; ++j)
                    if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] && !q(i, j).is_zero()) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            auto im = identity_images(n);
            im[static_cast<std::size_t>(pj)] = var(n, pj) + var(n, pi);
            g.apply("split-linear", im);
            continue;
        }
        auto im = identity_images(n);
        AlgebraicScalar two_q = q(pivot, pivot) * AlgebraicScalar(2);
        for (int j = 0; j < n; ++j) {
            if (j == pivot || done[static_cast<std::size_t>(j)]) continue;
            AlgebraicScalar c = q(pivot, j);
            if (!c.is_zero()) im[static_cast<std::size_t>(pivot)] -= var(n, j) * (c / two_q);
        }
        g.apply("split-linear", im);
        done[static_cast<std::size_t>(pivot)] = true;
    }
    SplitResult res;
    for (bool b : done) res.hessian_rank += b ? 1 : 0;
    res.corank = n - res.hessian_rank;

    if (res.hessian_rank > 0) {
        for (long k = 3; k <= bound; ++k) {
            auto im = identity_images(n);
            bool any = false;
            for (const auto& [m, c] : g.poly().terms()) {
                if (m.total() != k) continue;
                int i = 0;
                while (i < n && !(done[static_cast<std::size_t>(i)] && m[i] > 0)) ++i;
                if (i == n) continue;
                AlgebraicScalar lambda = g.poly().coeff(Monomial::var(i, 2));
                im[static_cast<std::size_t>(i)] -=
                    SparsePoly::monomial(n, quotient(m, Monomial::var(i)), c / (lambda * AlgebraicScalar(2)));
                any = true;
            }
            if (any) g.apply("split-square", im);
        }
    }

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!done[static_cast<std::size_t>(i)]) keep.push_back(i);
    const int m = static_cast<int>(keep.size());
    SparsePoly r(std::max(m, 1));
    if (m > 0) {
        for (const auto& [mono, c] : g.poly().terms()) {
            bool pure = true;
            for (int i = 0; i < n; ++i)
                if (done[static_cast<std::size_t>(i)] && mono[i] > 0) pure = false;
            if (!pure) continue;
            Monomial nm;
            for (int k = 0; k < m; ++k) nm.e[static_cast<std::size_t>(k)] = mono.e[static_cast<std::size_t>(keep[static_cast<std::size_t>(k)])];
            r.add_term(nm, c);
        }
    }
    res.residual = r;
    if (m != n) g.restrict_to(r, "split-restrict");
    return res;
}

// --------------------------------------------------------- Algorithm 3

namespace {

struct LinearFactor {
    AlgebraicScalar p, q;  // p*x + q*y
    int mult;
};

// Linear factors of a binary form that are available without extending
// the field, plus the full multiplicity profile.
struct FormFactors {
    std::vector<LinearFactor> known;
    std::vector<int> profile;  // descending
    std::vector<std::pair<UPoly, int>> unsplit;  // parts of degree >= 2
};

FormFactors factor_form(const SparsePoly& h) {
    FormFactors ff;
    auto dh = dehomogenize(h, 1, 1);
    if (dh.a > 0) {
        ff.known.push_back({AlgebraicScalar(1), AlgebraicScalar(0), dh.a});
        ff.profile.push_back(dh.a);
    }
    if (dh.p.degree() >= 1) {
        auto parts = squarefree_decomposition(dh.p);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            int deg = parts[k].degree();
            int mult = static_cast<int>(k) + 1;
            for (int e = 0; e < deg; ++e) ff.profile.push_back(mult);
            if (deg == 1) ff.known.push_back({AlgebraicScalar(1), parts[k].coeffs[0], mult});  // x + c0*y
            else if (deg >= 2) ff.unsplit.push_back({parts[k], mult});
        }
    }
    if (dh.b > 0) {
        ff.known.push_back({AlgebraicScalar(0), AlgebraicScalar(1), dh.b});
        ff.profile.push_back(dh.b);
    }
    std::sort(ff.profile.rbegin(), ff.profile.rend());
    return ff;
}

// Linear map sending l1 -> x, l2 -> y.
std::vector<SparsePoly> send_to_axes(const LinearFactor& l1, const LinearFactor& l2) {
    AlgebraicScalar det = l1.p * l2.q - l1.q * l2.p;
    if (det.is_zero()) throw std::logic_error("dependent linear factors");
    // inverse of [[p1,q1],[p2,q2]]
    SparsePoly x = var(2, 0), y = var(2, 1);
    SparsePoly px = x * (l2.q / det) - y * (l1.q / det);
    SparsePoly py = y * (l1.p / det) - x * (l2.p / det);
    return {px, py};
}

std::vector<SparsePoly> send_to_x(const LinearFactor& l) {
    SparsePoly x = var(2, 0), y = var(2, 1);
    if (l.p.is_zero()) return {y, x};  // the factor is y: swap
    // l = p x + q y; x -> (x - q y)/p
    return {(x - y * l.q) * l.p.inverse(), y};
}

}  // namespace

void reverse_linear_jet(Germ& g) {
    const SparsePoly& f = g.poly();
    long d = f.order(Weight::standard(2));
    SparsePoly h = wlayer(f, Weight::standard(2), d);
    FormFactors ff = factor_form(h);
    const auto& pr = ff.profile;
    std::size_t nf = pr.size();
    if (nf == 1) {
        g.apply("linear", send_to_x(ff.known.at(0)));
        return;
    }
    if (nf == 2) {
        std::vector<LinearFactor> ls = ff.known;
        if (!ff.unsplit.empty()) {
            // two conjugate roots of equal multiplicity: u^2 + b u + c
            const UPoly& qd = ff.unsplit[0].first;
            AlgebraicScalar b = qd.coeffs[1], c = qd.coeffs[0];
            AlgebraicScalar disc = b * b - AlgebraicScalar(4) * c;
            AlgebraicScalar s = adjoin_root(disc.tower(), 2, disc).second;
            AlgebraicScalar r1 = (-b + s) / AlgebraicScalar(2), r2 = (-b - s) / AlgebraicScalar(2);
            int mult = ff.unsplit[0].second;
            // x - r y
            ls.insert(ls.begin(), {AlgebraicScalar(1), -r2, mult});
            ls.insert(ls.begin(), {AlgebraicScalar(1), -r1, mult});
        }
        std::stable_sort(ls.begin(), ls.end(), [](const LinearFactor& a, const LinearFactor& b) { return a.mult > b.mult; });
        g.apply("linear", send_to_axes(ls.at(0), ls.at(1)));
        return;
    }
    if (nf == 3 && pr[0] == 2) {
        const LinearFactor* l1 = nullptr;
        for (const auto& l : ff.known)
            if (l.mult == 2) l1 = &l;
        if (!l1) throw std::logic_error("double factor not found");
        g.apply("linear", send_to_x(*l1));
        AlgebraicScalar a1 = g.poly().coeff(Monomial{3, 1});
        AlgebraicScalar a2 = g.poly().coeff(Monomial{2, 2});
        if (a2.is_zero()) throw std::logic_error("shear: vanishing x^2y^2 coefficient");
        if (!a1.is_zero())
            g.apply("shear", {var(2, 0), var(2, 1) - var(2, 0) * (a1 / (a2 * AlgebraicScalar(2)))});
    }
}

// --------------------------------------------------------- Algorithm 4

namespace {

std::pair<Monomial, AlgebraicScalar> lowest_term(const SparsePoly& p, const Weight& w) {
    long best = p.order(w);
    for (const auto& [m, c] : p.terms())
        if (w.degree(m) == best) return {m, c};
    throw std::logic_error("lowest_term");
}

}  // namespace

bool remove_term_via_partials(Germ& g, const SparsePoly& f0, const Monomial& t, const Weight& u1,
                              const Weight& u2) {
    AlgebraicScalar tc = g.poly().coeff(t);
    if (tc.is_zero()) return false;
    SparsePoly fx = diff(f0, 0), fy = diff(f0, 1);
    SparsePoly x = var(2, 0), y = var(2, 1);
    if (!fx.is_zero()) {
        SparsePoly mx = wlayer(fx, u2, fx.order(u2));
        auto [m, c] = lowest_term(mx, u1);
        if (m.divides(t)) {
            g.apply("remove-term", {x - SparsePoly::monomial(2, quotient(t, m), tc / c), y});
            return true;
        }
    }
    if (!fy.is_zero()) {
        SparsePoly my = wlayer(fy, u1, fy.order(u1));
        auto [m, c] = lowest_term(my, u2);
        if (m.divides(t)) {
            g.apply("remove-term", {x, y - SparsePoly::monomial(2, quotient(t, m), tc / c)});
            return true;
        }
    }
    return false;
}

// ------------------------------------------------------------- W# helpers

std::vector<SparsePoly> exp_vector_field(const AlgebraicScalar& c, long excess) {
    SparsePoly x = var(2, 0), y = var(2, 1);
    if (c.is_zero()) return {x, y};
    auto delta = [&](const SparsePoly& p) {
        SparsePoly y2 = SparsePoly::monomial(2, Monomial{0, 2}, AlgebraicScalar(3) * c);
        SparsePoly x1 = SparsePoly::monomial(2, Monomial{1, 0}, AlgebraicScalar(-2) * c);
        return y2 * diff(p, 0) + x1 * diff(p, 1);
    };
    std::vector<SparsePoly> out;
    for (const SparsePoly& v : {x, y}) {
        SparsePoly term = v, sum = v;
        for (long k = 1; k <= excess; ++k) {
            term = delta(term) * AlgebraicScalar(Rational(1, k));
            sum += term;
        }
        out.push_back(sum);
    }
    return out;
}

std::pair<SparsePoly, SparsePoly> divide_by_core(const SparsePoly& g) {
    SparsePoly r = g, l(2);
    SparsePoly core = parse_poly("x^2+y^3");
    for (;;) {
        const Monomial* top = nullptr;
        for (const auto& [m, c] : r.terms())
            if (m[0] >= 2 && (!top || m[0] > (*top)[0])) top = &m;
        if (!top) break;
        Monomial q = quotient(*top, Monomial{2, 0});
        AlgebraicScalar c = r.coeff(*top);
        l.add_term(q, c);
        r -= core.mul_monomial(q, c);
    }
    return {l, r};
}

void core_normalize(Germ& g, const SparsePoly& l, long bound) {
    if (l.is_zero()) return;
    const Weight w({3, 2});
    const SparsePoly core = parse_poly("x^2+y^3");
    if (l.order(w) <= 6) throw std::invalid_argument("core_normalize: l must have (3,2)-degree > 6");
    SparsePoly q = core + l * AlgebraicScalar(Rational(1, 2));
    const Truncation tr{w, bound};
    for (;;) {
        SparsePoly h = q - core;
        if (h.is_zero()) break;
        long k = h.order(w);
        if (k > bound - 6) break;
        SparsePoly e = wlayer(h, w, k), v1(2), v2(2);
        for (const auto& [m, c] : e.terms()) {
            if (m[0] >= 1) v1.add_term(quotient(m, Monomial{1, 0}), c / AlgebraicScalar(2));
            else v2.add_term(quotient(m, Monomial{0, 2}), c / AlgebraicScalar(3));
        }
        std::vector<SparsePoly> im{var(2, 0) - v1, var(2, 1) - v2};
        g.apply("core", im);
        q = substitute(q, im, tr);
    }
}

// ------------------------------------------------------------------ rescale

Rescaling rescale(Germ& g, const std::vector<std::pair<Monomial, AlgebraicScalar>>& targets) {
    if (targets.size() != 2) throw std::invalid_argument("rescale: two target monomials expected");
    const auto& [m1, t1] = targets[0];
    const auto& [m2, t2] = targets[1];
    AlgebraicScalar c1 = g.poly().coeff(m1), c2 = g.poly().coeff(m2);
    if (c1.is_zero() || c2.is_zero()) throw std::logic_error("rescale: missing normal form term");
    AlgebraicScalar e1 = t1 / c1, e2 = t2 / c2;
    long i1 = m1[0], j1 = m1[1], i2 = m2[0], j2 = m2[1];
    AlgebraicScalar a, b;
    const FieldTower base = common_tower(e1.tower(), e2.tower());
    if (j1 == 0 || j2 == 0) {
        bool first = j1 == 0;
        a = radical(static_cast<int>(first ? i1 : i2), first ? e1 : e2, base);
        long i = first ? i2 : i1, j = first ? j2 : j1;
        b = radical(static_cast<int>(j), (first ? e2 : e1) / a.pow(i), a.tower());
    } else if (i1 == 0 || i2 == 0) {
        bool first = i1 == 0;
        b = radical(static_cast<int>(first ? j1 : j2), first ? e1 : e2, base);
        long i = first ? i2 : i1, j = first ? j2 : j1;
        a = radical(static_cast<int>(i), (first ? e2 : e1) / b.pow(j), b.tower());
    } else {
        long det = i1 * j2 - i2 * j1;
        if (det == 0) throw std::logic_error("rescale: dependent monomials");
        AlgebraicScalar rhs = e1.pow(j2) / e2.pow(j1);
        if (det < 0) {
            rhs = rhs.inverse();
            det = -det;
        }
        a = radical(static_cast<int>(det), rhs, base);
        // p*j1 + q*j2 = 1
        long p = 0, q = 0;
        bool found = false;
        for (p = -j2; p <= j2 && !found; ++p)
            for (q = -j1; q <= j1; ++q)
                if (p * j1 + q * j2 == 1) {
                    found = true;
                    break;
                }
        if (!found) throw std::logic_error("rescale: unsupported exponent pattern");
        --p;
        b = (e1 / a.pow(i1)).pow(p) * (e2 / a.pow(i2)).pow(q);
    }
    if (!(c1 * a.pow(i1) * b.pow(j1) == t1) || !(c2 * a.pow(i2) * b.pow(j2) == t2))
        throw std::logic_error("rescale: verification failed");
    g.apply("rescale", {var(2, 0) * a, var(2, 1) * b});
    return {a, b};
}

}  // namespace arnoldnf
