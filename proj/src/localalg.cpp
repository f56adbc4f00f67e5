#include "arnoldnf/localalg.hpp"

#include "arnoldnf/linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace arnoldnf {

long LocalOrder::degree(const Monomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m.e[i];
    return d;
}

bool LocalOrder::greater(const Monomial& a, const Monomial& b) const {
    long da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (std::size_t i = weights.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

Monomial leading_monomial(const SparsePoly& f, const LocalOrder& ord) {
    if (f.is_zero()) throw std::domain_error("leading monomial of zero");
    auto it = f.terms().begin();
    Monomial best = it->first;
    for (++it; it != f.terms().end(); ++it)
        if (ord.greater(it->first, best)) best = it->first;
    return best;
}

namespace {

struct Elem {
    SparsePoly p;
    Monomial lm;
    AlgebraicScalar lc;
    long ecart;
};

Elem make_elem(const SparsePoly& p, const LocalOrder& ord) {
    Elem e{p, leading_monomial(p, ord), {}, 0};
    e.lc = p.coeff(e.lm);
    long top = ord.degree(e.lm);
    for (const auto& [m, c] : p.terms()) top = std::max(top, ord.degree(m));
    e.ecart = top - ord.degree(e.lm);
    return e;
}

SparsePoly drop_above(const SparsePoly& f, int noether) {
    if (noether <= 0) return f;
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (m.total() < noether) r.add_term(m, c);
    return r;
}

SparsePoly normal_form(SparsePoly h, std::vector<Elem> t, const LocalOrder& ord, int noether) {
    h = drop_above(h, noether);
    while (!h.is_zero()) {
        Elem he = make_elem(h, ord);
        const Elem* best = nullptr;
        for (const auto& g : t)
            if (g.lm.divides(he.lm) && (!best || g.ecart < best->ecart)) best = &g;
        if (!best) break;
        Elem g = *best;
        if (g.ecart > he.ecart) t.push_back(he);
        h -= g.p.mul_monomial(quotient(he.lm, g.lm), he.lc / g.lc);
        h = drop_above(h, noether);
    }
    return h;
}

SparsePoly monic(const SparsePoly& p, const LocalOrder& ord) {
    AlgebraicScalar lc = p.coeff(leading_monomial(p, ord));
    return lc.is_one() ? p : p * lc.inverse();
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), MonomialLess());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& o : out)
            if (o.divides(m)) redundant = true;
        if (!redundant) out.push_back(m);
    }
    return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens, int noether) {
    if (noether > 0 && m.total() >= noether) return true;
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

// Visits monomials of total degree < bound outside the ideal.
void for_each_standard_monomial(const std::vector<Monomial>& gens, int nvars, int bound,
                                const std::function<void(const Monomial&)>& visit) {
    Monomial m;
    std::function<void(int, int)> rec = [&](int i, int deg) {
        if (i == nvars) {
            visit(m);
            return;
        }
        for (int e = 0; deg + e < bound; ++e) {
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
            if (in_monomial_ideal(m, gens, 0)) break;
            rec(i + 1, deg + e);
        }
        m.e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
}

bool all_of_degree_in(const std::vector<Monomial>& gens, int nvars, int degree) {
    Monomial m;
    std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
        if (i == nvars - 1) {
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(left);
            bool ok = in_monomial_ideal(m, gens, 0);
            m.e[static_cast<std::size_t>(i)] = 0;
            return ok;
        }
        for (int e = 0; e <= left; ++e) {
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
            if (!rec(i + 1, left - e)) {
                m.e[static_cast<std::size_t>(i)] = 0;
                return false;
            }
        }
        m.e[static_cast<std::size_t>(i)] = 0;
        return true;
    };
    return rec(0, degree);
}

}  // namespace

StandardBasis mora_std(const std::vector<SparsePoly>& gens, const LocalOrder& ord, int noether) {
    std::vector<Elem> g;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto add = [&](const SparsePoly& p) {
        Elem e = make_elem(monic(p, ord), ord);
        for (std::size_t i = 0; i < g.size(); ++i) {
            Monomial l = lcm(g[i].lm, e.lm);
            if (l == g[i].lm * e.lm) continue;  // coprime leading terms
            if (noether > 0 && l.total() >= noether) continue;
            pairs.push_back({i, g.size(), l});
        }
        g.push_back(std::move(e));
    };

    for (const auto& p : gens) {
        SparsePoly h = normal_form(p, g, ord, noether);
        if (!h.is_zero()) add(h);
    }
    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (ord.degree(it->lcm) < ord.degree(best->lcm)) best = it;
        Pair pr = *best;
        pairs.erase(best);
        const Elem& a = g[pr.i];
        const Elem& b = g[pr.j];
        SparsePoly s = a.p.mul_monomial(quotient(pr.lcm, a.lm), b.lc) -
                       b.p.mul_monomial(quotient(pr.lcm, b.lm), a.lc);
        SparsePoly h = normal_form(s, g, ord, noether);
        if (!h.is_zero()) add(h);
    }

    StandardBasis sb;
    sb.order = ord;
    sb.noether = noether;
    std::vector<Monomial> lms;
    for (const auto& e : g) lms.push_back(e.lm);
    sb.leading_ideal = minimal_monomials(lms);
    for (const auto& e : g) {
        bool keep = true;
        for (const auto& o : g)
            if (&o != &e && o.lm.divides(e.lm) && (o.lm != e.lm || &o < &e)) keep = false;
        if (keep) sb.generators.push_back(e.p);
    }
    return sb;
}

SparsePoly mora_normal_form(const SparsePoly& f, const StandardBasis& sb) {
    std::vector<Elem> t;
    for (const auto& p : sb.generators) t.push_back(make_elem(p, sb.order));
    return normal_form(f, std::move(t), sb.order, sb.noether);
}

MilnorResult milnor(const SparsePoly& f) {
    const int n = f.nvars();
    if (f.is_zero()) return {std::nullopt};
    std::vector<SparsePoly> jac;
    for (int i = 0; i < n; ++i) jac.push_back(diff(f, i));
    for (const auto& p : jac)
        if (!p.is_zero() && !p.coeff(Monomial()).is_zero()) return {0L};
    // An isolated critical point of a degree-d germ has mu <= (d-1)^n.
    long d = f.total_degree();
    long bound = 1;
    for (int i = 0; i < n; ++i) bound = std::min<long>(bound * (d - 1), 1L << 20);
    LocalOrder ord = LocalOrder::standard(n);
    for (long k = 4;; k *= 2) {
        int noether = static_cast<int>(k);
        StandardBasis sb = mora_std(jac, ord, noether);
        if (all_of_degree_in(sb.leading_ideal, n, noether - 1)) {
            long count = 0;
            for_each_standard_monomial(sb.leading_ideal, n, noether, [&](const Monomial&) { ++count; });
            return {count};
        }
        long count = 0;
        for_each_standard_monomial(sb.leading_ideal, n, noether, [&](const Monomial&) { ++count; });
        if (count > bound || k > bound + 2) return {std::nullopt};
    }
}

StandardBasis jacobian_std(const SparsePoly& f, long mu, const LocalOrder& ord) {
    std::vector<SparsePoly> jac;
    for (int i = 0; i < f.nvars(); ++i) jac.push_back(diff(f, i));
    return mora_std(jac, ord, static_cast<int>(mu + 1));
}

std::vector<Monomial> quotient_basis(const StandardBasis& sb, int nvars) {
    if (sb.noether <= 0) throw std::invalid_argument("quotient_basis needs a truncated basis");
    std::vector<Monomial> out;
    for_each_standard_monomial(sb.leading_ideal, nvars, sb.noether, [&](const Monomial& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), MonomialLess());
    return out;
}

CorankResult corank(const SparsePoly& f) {
    const int n = f.nvars();
    Matrix h(static_cast<std::size_t>(n), std::vector<AlgebraicScalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Monomial m = Monomial::var(i) * Monomial::var(j);
            AlgebraicScalar c = f.coeff(m);
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? c * AlgebraicScalar(2) : c;
        }
    int r = static_cast<int>(rank(h));
    return {n - r, r};
}

JacDecomposition jac_decompose(const SparsePoly& g, const SparsePoly& f0, const Weight& w, long j,
                               const std::vector<Monomial>& system) {
    if (f0.nvars() != 2) throw std::invalid_argument("jac_decompose: two variables expected");
    struct Column {
        int partial;  // 0, 1, or -1 for a system monomial
        Monomial m;
        SparsePoly layer;
    };
    std::vector<Column> cols;
    const SparsePoly parts[2] = {diff(f0, 0), diff(f0, 1)};
    for (int p = 0; p < 2; ++p) {
        if (parts[p].is_zero()) continue;
        long room = j - parts[p].order(w);
        if (room < 0) continue;
        for (int a = 0; w.degree(Monomial{a, 0}) <= room; ++a)
            for (int b = 0; w.degree(Monomial{a, b}) <= room; ++b) {
                SparsePoly prod = parts[p].mul_monomial(Monomial{a, b}, AlgebraicScalar(1));
                if (prod.order(w) < j) continue;
                SparsePoly layer = wlayer(prod, w, j);
                if (!layer.is_zero()) cols.push_back({p, Monomial{a, b}, layer});
            }
    }
    for (const auto& m : system) cols.push_back({-1, m, SparsePoly::monomial(2, m)});

    std::set<Monomial, MonomialLess> rows_set;
    for (const auto& c : cols)
        for (const auto& [m, v] : c.layer.terms()) rows_set.insert(m);
    for (const auto& [m, v] : g.terms()) rows_set.insert(m);
    std::vector<Monomial> rows(rows_set.begin(), rows_set.end());

    Matrix a(rows.size(), std::vector<AlgebraicScalar>(cols.size()));
    std::vector<AlgebraicScalar> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rhs[r] = g.coeff(rows[r]);
        for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = cols[c].layer.coeff(rows[r]);
    }
    auto x = solve(a, rhs);
    if (!x) throw std::logic_error("jac_decompose: inconsistent system at degree " + std::to_string(j));
    JacDecomposition out{SparsePoly(2), SparsePoly(2), {}};
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& col = cols[c];
        if (col.partial == 0) out.v1.add_term(col.m, (*x)[c]);
        else if (col.partial == 1) out.v2.add_term(col.m, (*x)[c]);
        else out.c.push_back((*x)[c]);
    }
    return out;
}

bool in_jacobian_ideal(const SparsePoly& t, const SparsePoly& f0) {
    auto mu = milnor(f0);
    if (!mu.finite()) return false;
    StandardBasis sb = jacobian_std(f0, *mu.mu, LocalOrder::standard(f0.nvars()));
    return mora_normal_form(t, sb).is_zero();
}

}  // namespace arnoldnf
