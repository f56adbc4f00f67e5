#include "arnoldnf/scalars.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arnoldnf {

namespace detail {
struct TowerLevel {
    std::shared_ptr<const TowerLevel> parent;
    int n = 0;
    std::vector<Rational> radicand;  // coordinates over the parent level
    std::size_t degree = 1;          // total degree over Q of this level
    std::size_t depth = 0;
};
}  // namespace detail

using detail::TowerLevel;

namespace {

std::size_t degree_of(const TowerLevel* l) { return l ? l->degree : 1; }
std::size_t depth_of(const TowerLevel* l) { return l ? l->depth : 0; }

bool all_zero(const Rational* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(p[i]) != 0) return false;
    return true;
}

// out += a * b, all in level l.
void mul_acc(const TowerLevel* l, const Rational* a, const Rational* b, Rational* out) {
    if (!l) {
        out[0] += a[0] * b[0];
        return;
    }
    const std::size_t sub = degree_of(l->parent.get());
    const int n = l->n;
    std::vector<Rational> prod((2 * n - 1) * sub);
    for (int i = 0; i < n; ++i) {
        if (all_zero(a + i * sub, sub)) continue;
        for (int j = 0; j < n; ++j) {
            if (all_zero(b + j * sub, sub)) continue;
            mul_acc(l->parent.get(), a + i * sub, b + j * sub, prod.data() + (i + j) * sub);
        }
    }
    for (int k = 2 * n - 2; k >= n; --k) {
        if (all_zero(prod.data() + k * sub, sub)) continue;
        mul_acc(l->parent.get(), prod.data() + k * sub, l->radicand.data(),
                prod.data() + (k - n) * sub);
    }
    for (std::size_t i = 0; i < n * sub; ++i) out[i] += prod[i];
}

bool same_level(const TowerLevel* a, const TowerLevel* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->n != b->n || a->depth != b->depth) return false;
    if (a->radicand != b->radicand) return false;
    return same_level(a->parent.get(), b->parent.get());
}

std::vector<const TowerLevel*> levels_bottom_up(const TowerLevel* top) {
    std::vector<const TowerLevel*> out;
    for (auto* l = top; l; l = l->parent.get()) out.push_back(l);
    std::reverse(out.begin(), out.end());
    return out;
}

// Exponent vector (bottom first) of basis index idx.
std::vector<int> basis_exponents(const TowerLevel* top, std::size_t idx) {
    auto levels = levels_bottom_up(top);
    std::vector<int> e(levels.size());
    for (std::size_t k = levels.size(); k-- > 0;) {
        std::size_t sub = degree_of(levels[k]->parent.get());
        e[k] = static_cast<int>(idx / sub);
        idx %= sub;
    }
    return e;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<mpz_class> integer_root(const mpz_class& v, int n) {
    if (sgn(v) < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = integer_root(-v, n);
        if (!r) return std::nullopt;
        return mpz_class(-*r);
    }
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)) == 0)
        return std::nullopt;
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<Rational> rational_root(const Rational& q, int n) {
    if (n < 1) throw std::invalid_argument("root index must be positive");
    if (n == 1) return q;
    if (sgn(q) == 0) return Rational(0);
    auto num = integer_root(q.get_num(), n);
    if (!num) return std::nullopt;
    auto den = integer_root(q.get_den(), n);
    if (!den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- FieldTower

std::size_t FieldTower::depth() const noexcept { return depth_of(top_.get()); }
std::size_t FieldTower::degree() const noexcept { return degree_of(top_.get()); }

int FieldTower::index(std::size_t level) const {
    auto levels = levels_bottom_up(top_.get());
    if (level >= levels.size()) throw std::out_of_range("tower level");
    return levels[level]->n;
}

FieldTower FieldTower::prefix(std::size_t d) const {
    if (d > depth()) throw std::out_of_range("tower prefix");
    auto l = top_;
    while (depth_of(l.get()) > d) l = l->parent;
    return FieldTower(l);
}

AlgebraicScalar FieldTower::radicand(std::size_t level) const {
    auto levels = levels_bottom_up(top_.get());
    if (level >= levels.size()) throw std::out_of_range("tower level");
    return AlgebraicScalar(prefix(level), levels[level]->radicand);
}

AlgebraicScalar FieldTower::generator(std::size_t level) const {
    auto levels = levels_bottom_up(top_.get());
    if (level >= levels.size()) throw std::out_of_range("tower level");
    FieldTower sub = prefix(level + 1);
    std::vector<Rational> c(sub.degree());
    c[degree_of(levels[level]->parent.get())] = 1;  // t^1 times parent's 1
    return AlgebraicScalar(sub, std::move(c)).lifted(*this);
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
    if (depth() > other.depth()) return false;
    return same_level(top_.get(), other.prefix(depth()).top_.get());
}

bool operator==(const FieldTower& a, const FieldTower& b) {
    return same_level(a.top_.get(), b.top_.get());
}

FieldTower FieldTower::extended(int n, const AlgebraicScalar& r) const {
    if (n < 2) throw std::invalid_argument("adjunction index must be >= 2");
    auto rl = r.lifted(*this);
    auto l = std::make_shared<TowerLevel>();
    l->parent = top_;
    l->n = n;
    l->radicand = rl.coeffs();
    l->degree = degree() * static_cast<std::size_t>(n);
    l->depth = depth() + 1;
    return FieldTower(std::move(l));
}

FieldTower common_tower(const FieldTower& a, const FieldTower& b) {
    if (a.is_prefix_of(b)) return b;
    if (b.is_prefix_of(a)) return a;
    throw std::invalid_argument("incompatible field towers");
}

// ----------------------------------------------------------- AlgebraicScalar

AlgebraicScalar::AlgebraicScalar(FieldTower tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower_.degree())
        throw std::invalid_argument("coordinate vector does not match tower degree");
}

AlgebraicScalar AlgebraicScalar::zero(const FieldTower& t) {
    return AlgebraicScalar(t, std::vector<Rational>(t.degree()));
}

AlgebraicScalar AlgebraicScalar::one(const FieldTower& t) {
    std::vector<Rational> c(t.degree());
    c[0] = 1;
    return AlgebraicScalar(t, std::move(c));
}

bool AlgebraicScalar::is_zero() const noexcept { return all_zero(coeffs_.data(), coeffs_.size()); }

bool AlgebraicScalar::is_one() const noexcept {
    return coeffs_[0] == 1 && all_zero(coeffs_.data() + 1, coeffs_.size() - 1);
}

bool AlgebraicScalar::is_rational() const noexcept {
    return all_zero(coeffs_.data() + 1, coeffs_.size() - 1);
}

Rational AlgebraicScalar::to_rational() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return coeffs_[0];
}

AlgebraicScalar AlgebraicScalar::lifted(const FieldTower& to) const {
    if (tower_.depth() == to.depth()) {
        if (!(tower_ == to)) throw std::invalid_argument("incompatible field towers");
        AlgebraicScalar r = *this;
        r.tower_ = to;
        return r;
    }
    if (!tower_.is_prefix_of(to)) throw std::invalid_argument("incompatible field towers");
    std::vector<Rational> c(to.degree());
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
    return AlgebraicScalar(to, std::move(c));
}

AlgebraicScalar AlgebraicScalar::operator-() const {
    AlgebraicScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
    if (tower_.top() != o.tower_.top() || coeffs_.size() != o.coeffs_.size()) {
        FieldTower t = common_tower(tower_, o.tower_);
        *this = lifted(t);
        AlgebraicScalar ol = o.lifted(t);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += ol.coeffs_[i];
        return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) { return *this += -o; }

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
    if (coeffs_.size() == 1 && o.coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    if (o.is_rational()) {
        Rational q = o.coeffs_[0];
        if (!o.tower_.is_prefix_of(tower_)) *this = lifted(common_tower(tower_, o.tower_));
        for (auto& c : coeffs_) c *= q;
        return *this;
    }
    if (is_rational()) {
        Rational q = coeffs_[0];
        AlgebraicScalar r = o;
        if (!tower_.is_prefix_of(o.tower_)) r = r.lifted(common_tower(tower_, o.tower_));
        for (auto& c : r.coeffs_) c *= q;
        *this = std::move(r);
        return *this;
    }
    FieldTower t = common_tower(tower_, o.tower_);
    AlgebraicScalar a = lifted(t), b = o.lifted(t);
    std::vector<Rational> out(t.degree());
    mul_acc(t.top(), a.coeffs_.data(), b.coeffs_.data(), out.data());
    tower_ = t;
    coeffs_ = std::move(out);
    return *this;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        AlgebraicScalar r = *this;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    // Solve M x = e0 where column j of M is this * e_j.
    const std::size_t D = coeffs_.size();
    std::vector<std::vector<Rational>> m(D, std::vector<Rational>(D + 1));
    std::vector<Rational> ej(D), col(D);
    for (std::size_t j = 0; j < D; ++j) {
        std::fill(ej.begin(), ej.end(), Rational(0));
        std::fill(col.begin(), col.end(), Rational(0));
        ej[j] = 1;
        mul_acc(tower_.top(), coeffs_.data(), ej.data(), col.data());
        for (std::size_t i = 0; i < D; ++i) m[i][j] = col[i];
    }
    m[0][D] = 1;
    for (std::size_t c = 0; c < D; ++c) {
        std::size_t p = c;
        while (p < D && sgn(m[p][c]) == 0) ++p;
        if (p == D) throw std::domain_error("field tower has zero divisors");
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (std::size_t k = c; k <= D; ++k) m[c][k] *= inv;
        for (std::size_t r = 0; r < D; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= D; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(D);
    for (std::size_t i = 0; i < D; ++i) x[i] = m[i][D];
    return AlgebraicScalar(tower_, std::move(x));
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

AlgebraicScalar AlgebraicScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicScalar result = one(tower_), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    if (a.coeffs_.size() == b.coeffs_.size() && a.tower_ == b.tower_) return a.coeffs_ == b.coeffs_;
    FieldTower t = common_tower(a.tower_, b.tower_);
    return a.lifted(t).coeffs_ == b.lifted(t).coeffs_;
}

bool equals(const AlgebraicScalar& a, const AlgebraicScalar& b) { return a == b; }

// ------------------------------------------------------------------ roots

namespace {

AlgebraicScalar basis_element(const FieldTower& t, std::size_t idx) {
    std::vector<Rational> c(t.degree());
    c[idx] = 1;
    return AlgebraicScalar(t, std::move(c));
}

// Chunk i of x (coefficient of t_top^i) as an element of the parent tower.
AlgebraicScalar chunk(const AlgebraicScalar& x, int i, const FieldTower& parent) {
    std::size_t sub = parent.degree();
    std::vector<Rational> c(x.coeffs().begin() + i * sub, x.coeffs().begin() + (i + 1) * sub);
    return AlgebraicScalar(parent, std::move(c));
}

std::optional<AlgebraicScalar> find_root_impl(const AlgebraicScalar& r, int n, int budget);

std::optional<AlgebraicScalar> sqrt_over_quadratic(const AlgebraicScalar& r, int budget) {
    const FieldTower& t = r.tower();
    if (t.depth() == 0 || t.index(t.depth() - 1) != 2) return std::nullopt;
    FieldTower parent = t.prefix(t.depth() - 1);
    AlgebraicScalar s = t.radicand(t.depth() - 1);
    AlgebraicScalar a = chunk(r, 0, parent), b = chunk(r, 1, parent);
    AlgebraicScalar gen = t.generator(t.depth() - 1);
    if (b.is_zero()) {
        if (auto x = find_root_impl(a, 2, budget - 1)) return x->lifted(t);
        if (auto y = find_root_impl(a / s, 2, budget - 1)) return y->lifted(t) * gen;
        return std::nullopt;
    }
    auto sd = find_root_impl(a * a - s * b * b, 2, budget - 1);
    if (!sd) return std::nullopt;
    for (int sign : {1, -1}) {
        AlgebraicScalar X = (a + AlgebraicScalar(sign) * *sd) / AlgebraicScalar(2);
        if (X.is_zero()) continue;
        auto x = find_root_impl(X, 2, budget - 1);
        if (!x) continue;
        AlgebraicScalar y = b / (AlgebraicScalar(2) * *x);
        AlgebraicScalar rho = x->lifted(t) + y.lifted(t) * gen;
        if (rho * rho == r) return rho;
    }
    return std::nullopt;
}

std::optional<AlgebraicScalar> find_root_impl(const AlgebraicScalar& r, int n, int budget) {
    const FieldTower& t = r.tower();
    if (r.is_zero()) return AlgebraicScalar::zero(t);
    if (n == 1) return r;
    if (r.is_rational()) {
        if (auto q = rational_root(r.to_rational(), n)) return AlgebraicScalar(*q).lifted(t);
    }
    // rho = q * (basis monomial)
    const std::size_t D = t.degree();
    for (std::size_t idx = 1; idx < D; ++idx) {
        AlgebraicScalar m = basis_element(t, idx);
        AlgebraicScalar q = r / m.pow(n);
        if (!q.is_rational()) continue;
        if (auto root = rational_root(q.to_rational(), n)) return AlgebraicScalar(*root) * m;
    }
    if (budget <= 0) return std::nullopt;
    // r living in a proper subfield
    if (t.depth() > 0) {
        FieldTower parent = t.prefix(t.depth() - 1);
        bool in_parent = true;
        for (std::size_t i = parent.degree(); i < D; ++i)
            if (sgn(r.coeffs()[i]) != 0) in_parent = false;
        if (in_parent) {
            if (auto s = find_root_impl(chunk(r, 0, parent), n, budget - 1)) return s->lifted(t);
        }
    }
    if (n == 2) return sqrt_over_quadratic(r, budget);
    auto primes = prime_factors(n);
    if (primes.size() == 1 && primes[0] == n) return std::nullopt;
    for (int p : primes) {
        auto s = find_root_impl(r, p, budget - 1);
        if (!s) continue;
        if (auto rho = find_root_impl(*s, n / p, budget - 1)) return rho;
        if (p == 2) {
            if (auto rho = find_root_impl(-*s, n / p, budget - 1)) return rho;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<AlgebraicScalar> find_root(const AlgebraicScalar& r, int n) {
    if (n < 1) throw std::invalid_argument("root index must be positive");
    return find_root_impl(r, n, 6);
}

std::pair<FieldTower, AlgebraicScalar> adjoin_root(const FieldTower& tower, int n,
                                                   const AlgebraicScalar& r0) {
    if (n < 2) throw std::invalid_argument("adjoin_root: index must be >= 2");
    if (r0.is_zero()) throw std::invalid_argument("adjoin_root: radicand must be nonzero");
    FieldTower t = common_tower(tower, r0.tower());
    AlgebraicScalar r = r0.lifted(t);
    if (auto s = find_root(r, n)) return {t, *s};
    if (n % 2 == 1 && r.is_rational() && r.to_rational() < 0) {
        auto [t2, s] = adjoin_root(t, n, -r);
        return {t2, -s};
    }
    for (int p : prime_factors(n)) {
        if (p == n) break;
        if (auto s = find_root(r, p)) return adjoin_root(t, n / p, *s);
    }
    if (n % 4 == 0) {
        if (auto s = find_root(-r / AlgebraicScalar(4), 4)) {
            // t^4 + 4 s^4 splits; its roots are s(+-1 +- i).
            auto [t2, i] = adjoin_root(t, 2, AlgebraicScalar(-1));
            AlgebraicScalar c = s->lifted(t2) * (AlgebraicScalar::one(t2) + i);
            if (n == 4) return {t2, c};
            return adjoin_root(t2, n / 4, c);
        }
    }
    FieldTower ext = t.extended(n, r);
    return {ext, ext.generator(ext.depth() - 1)};
}

// ------------------------------------------------------------ approximation

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
    Real re, im;
};

Complex cmul(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex principal_root(const Complex& z, int n, const Real& eps) {
    using boost::multiprecision::abs;
    Real mag = sqrt(z.re * z.re + z.im * z.im);
    if (mag == 0) return {Real(0), Real(0)};
    Real im = abs(z.im) <= eps * mag ? Real(0) : z.im;
    if (im == 0 && z.re > 0) return {pow(z.re, Real(1) / n), Real(0)};
    Real theta = atan2(im, z.re);
    Real r = pow(mag, Real(1) / n);
    return {r * cos(theta / n), r * sin(theta / n)};
}

Complex eval_coords(const TowerLevel* l, const Rational* c, const std::vector<Complex>& gens) {
    if (!l) return {Real(c[0].get_mpq_t()), Real(0)};
    const std::size_t sub = degree_of(l->parent.get());
    const Complex& g = gens[l->depth - 1];
    Complex acc{Real(0), Real(0)};
    // Horner in t_top
    for (int i = l->n - 1; i >= 0; --i) {
        acc = cmul(acc, g);
        Complex v = eval_coords(l->parent.get(), c + i * sub, gens);
        acc.re += v.re;
        acc.im += v.im;
    }
    return acc;
}

std::string fixed_truncated(const Real& v, int digits, const Real& eps, bool negative) {
    Real scaled = boost::multiprecision::abs(v) * pow(Real(10), digits);
    Real nearest = round(scaled);
    Real floor_v = (boost::multiprecision::abs(scaled - nearest) < eps * (nearest + 1)) ? nearest
                                                                                        : floor(scaled);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), floor_v.backend().data(), MPFR_RNDZ);
    std::string s = z.get_str(10);
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (negative) s.insert(0, "-");
    return s;
}

std::string exact_truncated(const Rational& q, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational a = abs(q) * scale;
    mpz_class z;
    mpz_tdiv_q(z.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    std::string s = z.get_str(10);
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (sgn(q) < 0) s.insert(0, "-");
    return s;
}

}  // namespace

std::string approximate(const AlgebraicScalar& a, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    if (a.is_rational()) return exact_truncated(a.to_rational(), digits);

    const int guard = 30;
    const unsigned prec10 = static_cast<unsigned>(digits + guard);
    Real::default_precision(prec10);
    const Real eps = pow(Real(10), -(digits + guard / 2));

    auto levels = levels_bottom_up(a.tower().top());
    std::vector<Complex> gens;
    for (auto* l : levels) {
        Complex z = eval_coords(l->parent.get(), l->radicand.data(), gens);
        gens.push_back(principal_root(z, l->n, eps));
    }
    Complex v = eval_coords(a.tower().top(), a.coeffs().data(), gens);
    Real mag = sqrt(v.re * v.re + v.im * v.im);
    bool real = boost::multiprecision::abs(v.im) <= eps * (mag + 1);
    std::string out = fixed_truncated(v.re, digits, eps, v.re < 0 && boost::multiprecision::abs(v.re) > eps);
    if (!real) {
        out += v.im < 0 ? "-" : "+";
        out += fixed_truncated(v.im, digits, eps, false);
        out += "i";
    }
    return out;
}

std::string to_string(const AlgebraicScalar& a) {
    if (a.is_rational()) return to_string(a.to_rational());
    std::string out = "(";
    bool first = true;
    for (std::size_t idx = 0; idx < a.coeffs().size(); ++idx) {
        const Rational& c = a.coeffs()[idx];
        if (sgn(c) == 0) continue;
        std::string mono;
        auto e = basis_exponents(a.tower().top(), idx);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "r" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        Rational mag = abs(c);
        if (!first) out += sgn(c) < 0 ? "-" : "+";
        else if (sgn(c) < 0) out += "-";
        if (mono.empty()) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
        first = false;
    }
    return out + ")";
}

}  // namespace arnoldnf
