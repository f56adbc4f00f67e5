#include "arnoldnf/catalog.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace arnoldnf {

namespace {

struct FixedName {
    Family family;
    const char* name;
};

const FixedName kFixedNames[] = {
    {Family::E6, "E_6"},   {Family::E7, "E_7"},   {Family::E8, "E_8"},   {Family::X9, "X_9"},
    {Family::J10, "J_10"}, {Family::E12, "E_12"}, {Family::E13, "E_13"}, {Family::E14, "E_14"},
    {Family::Z11, "Z_11"}, {Family::Z12, "Z_12"}, {Family::Z13, "Z_13"}, {Family::W12, "W_12"},
    {Family::W13, "W_13"}, {Family::J30, "J_{3,0}"}, {Family::Z10, "Z_{1,0}"}, {Family::W10, "W_{1,0}"},
    {Family::E18, "E_18"}, {Family::E19, "E_19"}, {Family::E20, "E_20"}, {Family::Z17, "Z_17"},
    {Family::Z18, "Z_18"}, {Family::Z19, "Z_19"}, {Family::W17, "W_17"}, {Family::W18, "W_18"},
};

std::size_t expected_indices(Family f) {
    switch (f) {
        case Family::A: case Family::D: case Family::J10k: case Family::X9k:
        case Family::J3p: case Family::Z1p: case Family::W1p: case Family::Wsharp:
            return 1;
        case Family::Y:
            return 2;
        default:
            return 0;
    }
}

std::string pw(const char* v, int e) {
    if (e == 0) return "1";
    if (e == 1) return v;
    return std::string(v) + "^" + std::to_string(e);
}

}  // namespace

TypeId::TypeId(Family f, std::vector<int> idx) : family(f), indices(std::move(idx)) {
    if (indices.size() != expected_indices(f)) throw std::invalid_argument("TypeId: wrong number of indices");
    int lo = 1;
    if (f == Family::D) lo = 4;
    if (f == Family::Y) lo = 5;
    for (int i : indices)
        if (i < lo) throw std::invalid_argument("TypeId: index out of range");
    if (f == Family::Y && indices[0] > indices[1]) std::swap(indices[0], indices[1]);
}

std::string TypeId::name() const {
    for (const auto& fn : kFixedNames)
        if (fn.family == family) return fn.name;
    const std::string k = indices.empty() ? "" : std::to_string(indices[0]);
    switch (family) {
        case Family::A: return "A_" + k;
        case Family::D: return "D_" + k;
        case Family::J10k: return "J_{10+" + k + "}";
        case Family::X9k: return "X_{9+" + k + "}";
        case Family::Y: return "Y_{" + k + "," + std::to_string(indices[1]) + "}";
        case Family::J3p: return "J_{3," + k + "}";
        case Family::Z1p: return "Z_{1," + k + "}";
        case Family::W1p: return "W_{1," + k + "}";
        case Family::Wsharp: return "W#_{1," + k + "}";
        default: break;
    }
    throw std::logic_error("TypeId::name");
}

TypeId parse_type(const std::string& name) {
    for (const auto& fn : kFixedNames)
        if (name == fn.name) return TypeId(fn.family);
    auto number = [&](std::size_t from, std::size_t to) {
        std::string s = name.substr(from, to - from);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("unknown type: " + name);
        return std::stoi(s);
    };
    auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    auto braced = [&](const std::string& p, Family f) {
        if (name.back() != '}') throw std::invalid_argument("unknown type: " + name);
        return TypeId(f, {number(p.size(), name.size() - 1)});
    };
    if (name.empty()) throw std::invalid_argument("unknown type: ");
    if (starts("A_")) return TypeId(Family::A, {number(2, name.size())});
    if (starts("D_")) return TypeId(Family::D, {number(2, name.size())});
    if (starts("J_{10+")) return braced("J_{10+", Family::J10k);
    if (starts("X_{9+")) return braced("X_{9+", Family::X9k);
    if (starts("J_{3,")) return braced("J_{3,", Family::J3p);
    if (starts("Z_{1,")) return braced("Z_{1,", Family::Z1p);
    if (starts("W_{1,")) return braced("W_{1,", Family::W1p);
    if (starts("W#_{1,")) return braced("W#_{1,", Family::Wsharp);
    if (starts("Y_{") && name.back() == '}') {
        auto comma = name.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("unknown type: " + name);
        return TypeId(Family::Y, {number(3, comma), number(comma + 1, name.size() - 1)});
    }
    throw std::invalid_argument("unknown type: " + name);
}

namespace {

using Params = std::vector<AlgebraicScalar>;

Monomial mono(int i, int j) { return Monomial{i, j}; }

std::unique_ptr<TypeRecord> build(const TypeId& id) {
    auto rec = std::make_unique<TypeRecord>();
    rec->id = id;
    const int k = id.indices.empty() ? 0 : id.indices[0];
    std::string fixed;
    std::vector<Monomial> mod;
    std::vector<std::string> names;
    auto one = [&](const Monomial& m) {
        mod = {m};
        names = {"a"};
    };
    auto bold = [&](const Monomial& m) {
        mod = {m, m * mono(0, 1)};
        names = {"a0", "a1"};
    };
    auto nonzero = [](std::size_t i) {
        return [i](const Params& p) { return !p[i].is_zero(); };
    };
    long mu = 0;
    switch (id.family) {
        case Family::A: fixed = pw("x", k + 1) + "+y^2"; mu = k; break;
        case Family::D: fixed = "x^2*y+" + pw("y", k - 1); mu = k; break;
        case Family::E6: fixed = "x^3+y^4"; mu = 6; break;
        case Family::E7: fixed = "x^3+x*y^3"; mu = 7; break;
        case Family::E8: fixed = "x^3+y^5"; mu = 8; break;
        case Family::X9:
            fixed = "x^4+y^4"; one(mono(2, 2)); mu = 9;
            rec->restriction = "a^2 != 4";
            rec->admissible = [](const Params& p) { return !(p[0] * p[0] == AlgebraicScalar(4)); };
            break;
        case Family::J10:
            fixed = "x^3+y^6"; one(mono(2, 2)); mu = 10;
            rec->restriction = "4*a^3+27 != 0";
            rec->admissible = [](const Params& p) { return !(AlgebraicScalar(4) * p[0].pow(3) + AlgebraicScalar(27)).is_zero(); };
            break;
        case Family::J10k:
            fixed = "x^3+x^2*y^2"; one(mono(0, 6 + k)); mu = 10 + k;
            rec->restriction = "a != 0"; rec->admissible = nonzero(0);
            break;
        case Family::X9k:
            fixed = "x^4+x^2*y^2"; one(mono(0, 4 + k)); mu = 9 + k;
            rec->restriction = "a != 0"; rec->admissible = nonzero(0);
            break;
        case Family::Y:
            fixed = pw("x", k) + "+" + pw("y", id.indices[1]); one(mono(2, 2)); mu = k + id.indices[1] + 1;
            rec->restriction = "a != 0"; rec->admissible = nonzero(0);
            break;
        case Family::E12: fixed = "x^3+y^7"; one(mono(1, 5)); mu = 12; break;
        case Family::E13: fixed = "x^3+x*y^5"; one(mono(0, 8)); mu = 13; break;
        case Family::E14: fixed = "x^3+y^8"; one(mono(1, 6)); mu = 14; break;
        case Family::Z11: fixed = "x^3*y+y^5"; one(mono(1, 4)); mu = 11; break;
        case Family::Z12: fixed = "x^3*y+x*y^4"; one(mono(2, 3)); mu = 12; break;
        case Family::Z13: fixed = "x^3*y+y^6"; one(mono(1, 5)); mu = 13; break;
        case Family::W12: fixed = "x^4+y^5"; one(mono(2, 3)); mu = 12; break;
        case Family::W13: fixed = "x^4+x*y^4"; one(mono(0, 6)); mu = 13; break;
        case Family::J30:
            fixed = "x^3+y^9"; mod = {mono(2, 3), mono(1, 7)}; names = {"b", "c"}; mu = 16;
            rec->restriction = "4*b^3+27 != 0";
            rec->admissible = [](const Params& p) { return !(AlgebraicScalar(4) * p[0].pow(3) + AlgebraicScalar(27)).is_zero(); };
            break;
        case Family::J3p:
            fixed = "x^3+x^2*y^3"; bold(mono(0, 9 + k)); mu = 16 + k;
            rec->restriction = "a0 != 0"; rec->admissible = nonzero(0);
            break;
        case Family::Z10:
            fixed = "x^3*y+y^7"; mod = {mono(2, 3), mono(1, 6)}; names = {"d", "c"}; mu = 15;
            rec->restriction = "4*d^3+27 != 0";
            rec->admissible = [](const Params& p) { return !(AlgebraicScalar(4) * p[0].pow(3) + AlgebraicScalar(27)).is_zero(); };
            break;
        case Family::Z1p:
            fixed = "x^3*y+x^2*y^3"; bold(mono(0, 7 + k)); mu = 15 + k;
            rec->restriction = "a0 != 0"; rec->admissible = nonzero(0);
            break;
        case Family::W10:
            fixed = "x^4+y^6"; bold(mono(2, 3)); mu = 15;
            rec->restriction = "a0^2 != 4";
            rec->admissible = [](const Params& p) { return !(p[0] * p[0] == AlgebraicScalar(4)); };
            break;
        case Family::W1p:
            fixed = "x^4+x^2*y^3"; bold(mono(0, 6 + k)); mu = 15 + k;
            rec->restriction = "a0 != 0"; rec->admissible = nonzero(0);
            break;
        case Family::Wsharp:
            fixed = "(x^2+y^3)^2"; mu = 15 + k;
            if (k % 2 == 1) bold(mono(1, 4 + (k + 1) / 2));
            else bold(mono(2, 3 + k / 2));
            rec->restriction = "a0 != 0"; rec->admissible = nonzero(0);
            break;
        case Family::E18: fixed = "x^3+y^10"; bold(mono(1, 7)); mu = 18; break;
        case Family::E19: fixed = "x^3+x*y^7"; bold(mono(0, 11)); mu = 19; break;
        case Family::E20: fixed = "x^3+y^11"; bold(mono(1, 8)); mu = 20; break;
        case Family::Z17: fixed = "x^3*y+y^8"; bold(mono(1, 6)); mu = 17; break;
        case Family::Z18: fixed = "x^3*y+x*y^6"; bold(mono(0, 9)); mu = 18; break;
        case Family::Z19: fixed = "x^3*y+y^9"; bold(mono(1, 7)); mu = 19; break;
        case Family::W17: fixed = "x^4+x*y^5"; bold(mono(0, 7)); mu = 17; break;
        case Family::W18: fixed = "x^4+y^7"; bold(mono(2, 4)); mu = 18; break;
    }
    rec->fixed = parse_poly(fixed);
    rec->moduli = mod;
    rec->names = names;
    rec->modality = static_cast<int>(mod.size());
    rec->milnor = mu;
    if (!rec->admissible) rec->admissible = [](const Params&) { return true; };

    if (id.family == Family::Wsharp) {
        rec->w = Weight({3, 2});
        rec->d = 12;
    } else if (id.family != Family::A) {
        // moduli belong to the principal part only when the fixed terms miss an axis
        NewtonPolygon fp = newton_polygon(rec->fixed);
        const Point& first = fp.vertices.front();
        const Point& last = fp.vertices.back();
        bool above = true;
        for (const auto& m : mod)
            if (fp.has_face() && fp.weight.degree(m) < fp.d) above = false;
        if (above && std::min(first.i, last.i) <= 1 && std::min(first.j, last.j) <= 1) {
            rec->gamma = fp;
        } else {
            SparsePoly g = rec->fixed;
            for (const auto& m : mod) g.add_term(m, AlgebraicScalar(1));
            rec->gamma = newton_polygon(g);
        }
        rec->w = rec->gamma.weight;
        rec->d = rec->gamma.d;
    }
    rec->dprime = rec->d;
    for (const auto& m : mod) rec->dprime = std::max(rec->dprime, rec->w.degree(m));
    return rec;
}

}  // namespace

std::string TypeRecord::template_text() const {
    std::string s = id.family == Family::Wsharp ? "(x^2+y^3)^2" : to_string(fixed);
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (names[i] == "a0" && i + 1 < moduli.size()) {
            s += "+(a0+a1*y)*" + to_string(moduli[i], 2);
            ++i;
            continue;
        }
        s += "+" + names[i] + "*" + to_string(moduli[i], 2);
    }
    return s;
}

const TypeRecord& type_record(const TypeId& id) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<TypeRecord>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[id.name()];
    if (!slot) slot = build(id);
    return *slot;
}

SparsePoly normal_form(const TypeRecord& rec, const std::vector<AlgebraicScalar>& params) {
    if (params.size() != rec.moduli.size()) throw std::invalid_argument("normal_form: wrong number of parameters");
    SparsePoly f = rec.fixed;
    for (std::size_t i = 0; i < params.size(); ++i) f.add_term(rec.moduli[i], params[i]);
    return f;
}

std::vector<TypeId> sample_types() {
    std::vector<TypeId> out;
    for (int k = 1; k <= 3; ++k) out.emplace_back(Family::A, std::vector<int>{k});
    for (int k = 4; k <= 6; ++k) out.emplace_back(Family::D, std::vector<int>{k});
    for (Family f : {Family::E6, Family::E7, Family::E8, Family::X9, Family::J10}) out.emplace_back(f);
    for (Family f : {Family::J10k, Family::X9k})
        for (int k = 1; k <= 3; ++k) out.emplace_back(f, std::vector<int>{k});
    for (int r = 5; r <= 6; ++r)
        for (int s = r; s <= 6; ++s) out.emplace_back(Family::Y, std::vector<int>{r, s});
    for (Family f : {Family::E12, Family::E13, Family::E14, Family::Z11, Family::Z12, Family::Z13,
                     Family::W12, Family::W13})
        out.emplace_back(f);
    for (auto [f0, fp] : {std::pair{Family::J30, Family::J3p}, {Family::Z10, Family::Z1p}, {Family::W10, Family::W1p}}) {
        out.emplace_back(f0);
        for (int p = 1; p <= 3; ++p) out.emplace_back(fp, std::vector<int>{p});
    }
    for (int p = 1; p <= 6; ++p) out.emplace_back(Family::Wsharp, std::vector<int>{p});
    for (Family f : {Family::E18, Family::E19, Family::E20, Family::Z17, Family::Z18, Family::Z19,
                     Family::W17, Family::W18})
        out.emplace_back(f);
    return out;
}

std::vector<AlgebraicScalar> sample_parameters(const TypeRecord& rec) {
    std::vector<AlgebraicScalar> p;
    if (rec.id.family == Family::X9) return {AlgebraicScalar(3)};
    for (std::size_t i = 0; i < rec.moduli.size(); ++i) p.emplace_back(static_cast<long>(i + 1));
    if (!rec.admissible(p)) throw std::logic_error("sample_parameters: inadmissible default");
    return p;
}

std::vector<AlgebraicScalar> random_parameters(const TypeRecord& rec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (;;) {
        std::vector<AlgebraicScalar> p;
        for (std::size_t i = 0; i < rec.moduli.size(); ++i) {
            int a = num(rng), b = den(rng);
            Rational q(a, b);
            q.canonicalize();
            p.emplace_back(q);
        }
        if (rec.admissible(p)) return p;
    }
}

}  // namespace arnoldnf
