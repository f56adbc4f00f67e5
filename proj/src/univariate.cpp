#include "arnoldnf/univariate.hpp"

namespace arnoldnf {

UPoly::UPoly(std::vector<AlgebraicScalar> c) : coeffs(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<AlgebraicScalar> c(a.coeffs.size() + b.coeffs.size() - 1, AlgebraicScalar(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<AlgebraicScalar> c(std::max(a.coeffs.size(), b.coeffs.size()), AlgebraicScalar(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = a;
    if (r.degree() < b.degree()) return {UPoly(), r};
    std::vector<AlgebraicScalar> q(static_cast<std::size_t>(r.degree() - b.degree() + 1), AlgebraicScalar(0));
    AlgebraicScalar inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        AlgebraicScalar f = r.lead() * inv;
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i + static_cast<std::size_t>(shift)] -= f * b.coeffs[i];
        r.coeffs.pop_back();
        r.trim();
    }
    return {UPoly(std::move(q)), r};
}

UPoly monic(const UPoly& a) {
    if (a.is_zero()) return a;
    AlgebraicScalar inv = a.lead().inverse();
    UPoly r = a;
    for (auto& c : r.coeffs) c *= inv;
    return r;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

UPoly derivative(const UPoly& a) {
    if (a.degree() < 1) return {};
    std::vector<AlgebraicScalar> c;
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) c.push_back(a.coeffs[i] * AlgebraicScalar(static_cast<long>(i)));
    return UPoly(std::move(c));
}

std::vector<UPoly> squarefree_decomposition(const UPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<UPoly> parts;
    UPoly f = monic(a);
    UPoly fp = derivative(f);
    UPoly c = gcd(f, fp);
    UPoly w = divmod(f, c).first;
    UPoly y = divmod(fp, c).first;
    for (;;) {
        UPoly z = y - derivative(w);
        if (w.degree() <= 0) break;
        UPoly g = gcd(w, z);
        parts.push_back(g);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
    }
    while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
    return parts;
}

bool is_squarefree(const UPoly& a) {
    if (a.degree() <= 0) return true;
    return gcd(a, derivative(a)).degree() == 0;
}

}  // namespace arnoldnf
