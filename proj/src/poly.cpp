#include "arnoldnf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace arnoldnf {

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    std::size_t i = 0;
    for (int v : exps) {
        if (v < 0 || v > std::numeric_limits<std::uint16_t>::max())
            throw std::overflow_error("exponent out of range");
        e[i++] = static_cast<std::uint16_t>(v);
    }
}

Monomial Monomial::var(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw std::invalid_argument("variable index out of range");
    if (power < 0 || power > std::numeric_limits<std::uint16_t>::max())
        throw std::overflow_error("exponent out of range");
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
    return m;
}

int Monomial::total() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!a.divides(b)) throw std::invalid_argument("monomial does not divide");
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

// -------------------------------------------------------------------- Weight

Weight Weight::standard(int nvars) { return Weight(std::vector<long>(static_cast<std::size_t>(nvars), 1)); }

Weight Weight::piecewise(const std::vector<std::vector<long>>& forms, const std::vector<long>& multipliers) {
    if (forms.size() != multipliers.size() || forms.empty())
        throw std::invalid_argument("piecewise weight: forms and multipliers differ in length");
    Weight w;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (multipliers[i] < 1) throw std::invalid_argument("piecewise weight: multiplier < 1");
        std::vector<long> f = forms[i];
        for (auto& v : f) v *= multipliers[i];
        w.forms_.push_back(std::move(f));
    }
    return w;
}

long Weight::degree(const Monomial& m) const {
    if (forms_.empty()) throw std::invalid_argument("empty weight");
    long best = std::numeric_limits<long>::max();
    for (const auto& f : forms_) {
        long d = 0;
        for (std::size_t i = 0; i < f.size(); ++i) d += f[i] * m.e[i];
        for (std::size_t i = f.size(); i < kMaxVars; ++i)
            if (m.e[i]) throw std::invalid_argument("weight arity mismatch");
        best = std::min(best, d);
    }
    return best;
}

long wdeg(const Monomial& m, const Weight& w) { return w.degree(m); }

// ---------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(int nvars, const AlgebraicScalar& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

SparsePoly SparsePoly::monomial(int nvars, const Monomial& m, const AlgebraicScalar& c) {
    SparsePoly p(nvars);
    p.add_term(m, c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    return monomial(nvars, Monomial::var(i));
}

AlgebraicScalar SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? AlgebraicScalar(0) : it->second;
}

FieldTower SparsePoly::tower() const {
    FieldTower t;
    for (const auto& [m, c] : terms_)
        if (c.tower().depth() > t.depth()) t = c.tower();
    return t;
}

std::vector<Monomial> SparsePoly::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

void SparsePoly::add_term(const Monomial& m, const AlgebraicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const AlgebraicScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::mul_monomial(const Monomial& m, const AlgebraicScalar& c) const {
    SparsePoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, v * c);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b, Truncation::none()); }

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

long SparsePoly::order(const Weight& w) const {
    if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
    long best = std::numeric_limits<long>::max();
    for (const auto& [m, c] : terms_) best = std::min(best, w.degree(m));
    return best;
}

long SparsePoly::max_degree(const Weight& w) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    long best = std::numeric_limits<long>::min();
    for (const auto& [m, c] : terms_) best = std::max(best, w.degree(m));
    return best;
}

SparsePoly SparsePoly::lifted(const FieldTower& t) const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = c.lifted(t);
    return r;
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, const Truncation& tr) {
    SparsePoly r(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        if (!tr.keeps(ma)) continue;
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            if (!tr.keeps(m)) continue;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

SparsePoly power(const SparsePoly& a, int e, const Truncation& tr) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    SparsePoly result(a.nvars(), AlgebraicScalar(1));
    SparsePoly base = truncate(a, tr);
    while (e > 0) {
        if (e & 1) result = multiply(result, base, tr);
        e >>= 1;
        if (e) base = multiply(base, base, tr);
    }
    return result;
}

SparsePoly truncate(const SparsePoly& f, const Truncation& tr) {
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (tr.keeps(m)) r.add_term(m, c);
    return r;
}

SparsePoly wjet(const SparsePoly& f, const Weight& w, long j) {
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (w.degree(m) <= j) r.add_term(m, c);
    return r;
}

SparsePoly wlayer(const SparsePoly& f, const Weight& w, long j) {
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (w.degree(m) == j) r.add_term(m, c);
    return r;
}

SparsePoly wtail(const SparsePoly& f, const Weight& w, long j) {
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (w.degree(m) > j) r.add_term(m, c);
    return r;
}

SparsePoly diff(const SparsePoly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("variable index out of range");
    SparsePoly r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        int k = m[var];
        if (k == 0) continue;
        Monomial d = m;
        d.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k - 1);
        r.add_term(d, c * AlgebraicScalar(static_cast<long>(k)));
    }
    return r;
}

SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images, const Truncation& tr) {
    const int n = f.nvars();
    if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute: wrong number of images");
    for (const auto& g : images)
        if (!g.coeff(Monomial()).is_zero()) throw std::invalid_argument("substitute: image is not in the maximal ideal");
    std::vector<std::vector<SparsePoly>> powers(static_cast<std::size_t>(n));
    auto pw = [&](int i, int k) -> const SparsePoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(SparsePoly(n, AlgebraicScalar(1)));
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(multiply(cache.back(), images[static_cast<std::size_t>(i)], tr));
        return cache[static_cast<std::size_t>(k)];
    };
    SparsePoly r(n);
    for (const auto& [m, c] : f.terms()) {
        SparsePoly term(n, c);
        for (int i = 0; i < n && !term.is_zero(); ++i)
            if (m[i] > 0) term = multiply(term, pw(i, m[i]), tr);
        r += term;
    }
    return truncate(r, tr);
}

// ------------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    SparsePoly parse() {
        SparsePoly r = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("expected operator or end of input", pos_);
        return r;
    }

private:
    int n() const { return static_cast<int>(vars_.size()); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly expr() {
        skip();
        SparsePoly r(n());
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else break;
        }
        return r;
    }

    SparsePoly term() {
        SparsePoly r = factor();
        for (;;) {
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                SparsePoly d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                if (d.size() != 1 || !d.terms().begin()->first.is_one())
                    throw ParseError("expected a constant divisor", at);
                r *= d.terms().begin()->second.inverse();
            } else {
                break;
            }
        }
        return r;
    }

    SparsePoly factor() {
        SparsePoly base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected non-negative integer exponent", pos_);
            if (pos_ - start > 5) throw ParseError("exponent too large", start);
            int e = std::stoi(s_.substr(start, pos_ - start));
            base = power(base, e, Truncation::none());
        }
        return base;
    }

    SparsePoly atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected number, variable or '('", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rational q(s_.substr(start, pos_ - start), 10);
            return SparsePoly(n(), AlgebraicScalar(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (int i = 0; i < n(); ++i)
                if (vars_[static_cast<std::size_t>(i)] == name) return SparsePoly::variable(n(), i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("expected number, variable or '('", pos_);
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    if (vars.empty() || vars.size() > kMaxVars) throw std::invalid_argument("unsupported number of variables");
    return Parser(text, vars).parse();
}

// ------------------------------------------------------------------ printing

std::vector<std::string> default_var_names(int nvars) {
    if (nvars == 2) return {"x", "y"};
    if (nvars == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 1; i <= nvars; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string to_string(const Monomial& m, int nvars, const std::vector<std::string>& vars) {
    auto names = vars.empty() ? default_var_names(nvars) : vars;
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<std::size_t>(i)];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const SparsePoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        bool neg = c.is_rational() && c.to_rational() < 0;
        AlgebraicScalar mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (m.is_one()) {
            out += to_string(mag);
        } else {
            if (!mag.is_one()) out += to_string(mag) + "*";
            out += to_string(m, f.nvars(), vars);
        }
    }
    return out;
}

}  // namespace arnoldnf
