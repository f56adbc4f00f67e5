// Coordinate changes on germs and the log that records them.
#pragma once

#include "arnoldnf/localalg.hpp"
#include "arnoldnf/poly.hpp"

#include <string>
#include <vector>

namespace arnoldnf {

struct Step {
    std::string kind;
    std::vector<SparsePoly> images;
    Truncation truncation;
};

/// A germ together with the substitutions applied to it so far.
class Germ {
public:
    Germ(SparsePoly f, Truncation tr) : f_(std::move(f)), tr_(std::move(tr)) {}

    const SparsePoly& poly() const { return f_; }
    const Truncation& truncation() const { return tr_; }
    const std::vector<Step>& log() const { return log_; }
    int nvars() const { return f_.nvars(); }

    /// f := f(images), truncated and logged.  Identity maps are skipped.
    void apply(const std::string& kind, const std::vector<SparsePoly>& images);
    /// Replaces f, e.g. after dropping terms or a map applied to part of f.
    void replace(const std::string& kind, SparsePoly f, std::vector<SparsePoly> images = {});
    void set_truncation(Truncation tr) { tr_ = std::move(tr); }
    /// Switches to a new polynomial ring after splitting off variables.
    void restrict_to(SparsePoly f, const std::string& kind);

private:
    SparsePoly f_;
    Truncation tr_;
    std::vector<Step> log_;
};

std::vector<SparsePoly> identity_images(int nvars);
bool is_identity(const std::vector<SparsePoly>& images);

struct SplitResult {
    SparsePoly residual;  // in `corank` variables, in m^3
    int corank = 0;
    int hessian_rank = 0;
};

/// Splitting lemma up to standard degree `bound`.  Logs into g.
SplitResult split(Germ& g, long bound);

/// Algorithm 3 on a two-variable germ in m^3 with nonzero 4-jet.
void reverse_linear_jet(Germ& g);

/// Algorithm 4.  Returns true if a substitution was applied.
bool remove_term_via_partials(Germ& g, const SparsePoly& f0, const Monomial& t, const Weight& u1,
                              const Weight& u2);

/// Images of x and y under exp(c (3y^2 d/dx - 2x d/dy)), each truncated
/// `excess` weighted (3,2)-degrees above the variable's own degree.
std::vector<SparsePoly> exp_vector_field(const AlgebraicScalar& c, long excess);

/// g = l*(x^2+y^3) + r with deg_x r <= 1.
std::pair<SparsePoly, SparsePoly> divide_by_core(const SparsePoly& g);

/// Finds phi with phi(x^2+y^3+l/2) = x^2+y^3 modulo (3,2)-degree > bound-6
/// and applies it to the germ.
void core_normalize(Germ& g, const SparsePoly& l, long bound);

struct Rescaling {
    AlgebraicScalar a, b;
};

/// Solves c_k a^i_k b^j_k = target_k for two monomials with independent
/// exponent vectors, then applies x -> a x, y -> b y.
Rescaling rescale(Germ& g, const std::vector<std::pair<Monomial, AlgebraicScalar>>& targets);

}  // namespace arnoldnf
