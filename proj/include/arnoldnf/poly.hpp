// Sparse multivariate polynomials over a radical tower.
#pragma once

#include "arnoldnf/scalars.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace arnoldnf {

constexpr int kMaxVars = 8;

/// Exponent vector.  Unused slots are zero; arity lives in the ring.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    Monomial() = default;
    Monomial(std::initializer_list<int> exps);
    static Monomial var(int i, int power = 1);

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    int total() const;
    bool divides(const Monomial& o) const;
    bool is_one() const { return total() == 0; }

    /// Throws std::overflow_error on exponent overflow.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires a.divides(b); returns b / a.
    friend Monomial quotient(const Monomial& b, const Monomial& a);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

/// Increasing total degree, then decreasing exponent of x1, x2, ...
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Single weight: one linear form.  Piecewise weight: several forms, each
/// already scaled by its multiplier; the degree is the minimum.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<long> w) : forms_{std::move(w)} {}
    static Weight standard(int nvars);
    /// forms ordered by increasing slope, multipliers lambda_i >= 1.
    static Weight piecewise(const std::vector<std::vector<long>>& forms,
                            const std::vector<long>& multipliers);

    long degree(const Monomial& m) const;
    const std::vector<std::vector<long>>& forms() const { return forms_; }
    bool is_single() const { return forms_.size() == 1; }

private:
    std::vector<std::vector<long>> forms_;
};

long wdeg(const Monomial& m, const Weight& w);

/// Keep terms of weighted degree <= bound.
struct Truncation {
    Weight weight;
    long bound = std::numeric_limits<long>::max();
    bool keeps(const Monomial& m) const { return weight.forms().empty() || weight.degree(m) <= bound; }
    static Truncation none() { return {}; }
    static Truncation standard(int nvars, long bound) { return {Weight::standard(nvars), bound}; }
};

class SparsePoly {
public:
    using Terms = std::map<Monomial, AlgebraicScalar, MonomialLess>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}
    SparsePoly(int nvars, const AlgebraicScalar& c);
    static SparsePoly monomial(int nvars, const Monomial& m, const AlgebraicScalar& c = AlgebraicScalar(1));
    static SparsePoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    AlgebraicScalar coeff(const Monomial& m) const;
    /// Common tower of all coefficients.
    FieldTower tower() const;
    std::vector<Monomial> support() const;

    /// Adds c*m; drops the entry if it cancels.
    void add_term(const Monomial& m, const AlgebraicScalar& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const AlgebraicScalar& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const AlgebraicScalar& c) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

    SparsePoly mul_monomial(const Monomial& m, const AlgebraicScalar& c) const;

    /// Lowest weighted degree of a term; throws on zero.
    long order(const Weight& w) const;
    long max_degree(const Weight& w) const;
    long total_degree() const { return max_degree(Weight::standard(nvars_)); }
    /// The same polynomial with every coefficient lifted to `t`.
    SparsePoly lifted(const FieldTower& t) const;

private:
    int nvars_ = 2;
    Terms terms_;
};

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, const Truncation& tr);
SparsePoly power(const SparsePoly& a, int e, const Truncation& tr);
SparsePoly truncate(const SparsePoly& f, const Truncation& tr);

/// Terms of weighted degree <= j.
SparsePoly wjet(const SparsePoly& f, const Weight& w, long j);
/// Terms of weighted degree exactly j.
SparsePoly wlayer(const SparsePoly& f, const Weight& w, long j);
/// Terms whose weighted degree is > j.
SparsePoly wtail(const SparsePoly& f, const Weight& w, long j);

SparsePoly diff(const SparsePoly& f, int var);

/// Replaces variable i by images[i].  Images must lie in the maximal ideal.
SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images, const Truncation& tr);

/// Grammar: sums of products of numbers, variables, parenthesised
/// expressions and powers with non-negative integer exponents; "/" only by a
/// nonzero constant.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars = {"x", "y"});

/// Default names: x, y for two variables, x1..xn otherwise.
std::vector<std::string> default_var_names(int nvars);
std::string to_string(const SparsePoly& f, const std::vector<std::string>& vars = {});
std::string to_string(const Monomial& m, int nvars, const std::vector<std::string>& vars = {});

}  // namespace arnoldnf
