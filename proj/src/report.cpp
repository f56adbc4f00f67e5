#include "arnoldnf/report.hpp"

#include "arnoldnf/localalg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace arnoldnf {

namespace {

std::string value_text(const AlgebraicScalar& a, int digits) {
    if (a.is_rational()) return to_string(a);
    std::string s = to_string(a) + " ~ " + approximate(a, digits);
    return s + " [" + describe_tower(a.tower()) + "]";
}

nlohmann::json step_json(const Step& s) {
    nlohmann::json j;
    j["kind"] = s.kind;
    nlohmann::json images = nlohmann::json::array();
    for (const auto& im : s.images) images.push_back(to_string(im));
    j["images"] = images;
    if (!s.truncation.weight.forms().empty()) j["bound"] = s.truncation.bound;
    return j;
}

std::string step_text(const Step& s) {
    std::string out = s.kind;
    if (s.images.empty()) return out;
    std::vector<std::string> names = default_var_names(static_cast<int>(s.images.size()));
    for (std::size_t i = 0; i < s.images.size(); ++i)
        out += (i ? ", " : ": ") + names[i] + " -> " + to_string(s.images[i]);
    return out;
}

}  // namespace

std::string describe_tower(const FieldTower& t) {
    std::string out;
    for (std::size_t k = 0; k < t.depth(); ++k) {
        if (k) out += ", ";
        out += "r" + std::to_string(k + 1) + "^" + std::to_string(t.index(k)) + " = " + to_string(t.radicand(k));
    }
    return out;
}

std::string render_text(const Outcome& o, int digits, bool steps) {
    std::ostringstream os;
    if (steps)
        for (std::size_t i = 0; i < o.log.size(); ++i) os << i + 1 << ". " << step_text(o.log[i]) << "\n";
    if (o.rejected) {
        os << "rejected: " << to_string(*o.rejected) << "\n";
        return os.str();
    }
    const TypeRecord& rec = type_record(o.type);
    os << "type: " << o.type.name() << ", normal form: " << rec.template_text();
    for (std::size_t i = 0; i < o.parameters.size(); ++i)
        os << ", " << rec.names[i] << " = " << value_text(o.parameters[i], digits);
    os << ", mu = " << o.mu << "\n";
    return os.str();
}

nlohmann::json render_json(const Outcome& o, int digits, bool trace) {
    nlohmann::json j;
    if (o.rejected) {
        j["type"] = nullptr;
        j["rejected_reason"] = to_string(*o.rejected);
        if (o.mu > 0) j["mu"] = o.mu;
        else j["mu"] = nullptr;
    } else {
        const TypeRecord& rec = type_record(o.type);
        j["type"] = o.type.name();
        j["indices"] = o.type.indices;
        j["normal_form"] = to_string(o.normal_form);
        auto params = [&](const std::vector<AlgebraicScalar>& ps) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const AlgebraicScalar& a = ps[i];
                nlohmann::json tower = nlohmann::json::array();
                for (std::size_t k = 0; k < a.tower().depth(); ++k)
                    tower.push_back({{"index", a.tower().index(k)}, {"radicand", to_string(a.tower().radicand(k))}});
                nlohmann::json coeffs = nlohmann::json::array();
                for (const auto& c : a.coeffs()) coeffs.push_back(to_string(c));
                arr.push_back({{"name", rec.names[i]}, {"tower", tower}, {"coeffs", coeffs},
                               {"value", to_string(a)}, {"approx", approximate(a, digits)}});
            }
            return arr;
        };
        j["parameters"] = params(o.parameters);
        if (o.type.family == Family::Wsharp) j["native_parameters"] = params(o.native_parameters);
        j["mu"] = o.mu;
    }
    if (trace) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : o.log) steps.push_back(step_json(s));
        j["trace"] = steps;
    }
    return j;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.digits < 1) {
        err << "error: digits must be at least 1\n";
        return 1;
    }
    if (cfg.truncation && *cfg.truncation < 3) {
        err << "error: truncation must be at least 3\n";
        return 1;
    }
    SparsePoly f;
    try {
        f = parse_poly(cfg.input, cfg.vars);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    Outcome o;
    try {
        o = classify(f, cfg.truncation);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    if (cfg.json) out << render_json(o, cfg.digits, cfg.trace).dump(2) << "\n";
    else out << render_text(o, cfg.digits, cfg.trace);
    return o.ok() ? 0 : 2;
}

// ------------------------------------------------------------------ harness

namespace {

struct Case {
    std::size_t row;
    std::string transform;
    std::vector<AlgebraicScalar> params;
    SparsePoly input;
    Outcome outcome;
    std::string error;
    double ms = 0;
};

SparsePoly var(int i) { return SparsePoly::variable(2, i); }

std::vector<SparsePoly> tangent_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<SparsePoly> images = {var(0), var(1)};
    for (auto& im : images)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                if (a + b >= 2) im.add_term(Monomial{a, b}, AlgebraicScalar(c(rng)));
    return images;
}

std::vector<SparsePoly> linear_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    int a, b, d, e;
    do {
        a = c(rng);
        b = c(rng);
        d = c(rng);
        e = c(rng);
    } while (a * e - b * d == 0);
    SparsePoly x = var(0), y = var(1);
    return {x * AlgebraicScalar(a) + y * AlgebraicScalar(b), x * AlgebraicScalar(d) + y * AlgebraicScalar(e)};
}

nlohmann::json strings(const std::vector<AlgebraicScalar>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : v) arr.push_back(to_string(a));
    return arr;
}

}  // namespace

nlohmann::json run_harness(const HarnessConfig& cfg, std::ostream* timing) {
    const std::vector<TypeId> types = cfg.types.empty() ? sample_types() : cfg.types;
    std::mt19937_64 rng(cfg.seed);
    std::vector<Case> cases;
    for (std::size_t r = 0; r < types.size(); ++r) {
        const TypeRecord& rec = type_record(types[r]);
        const Truncation tr = Truncation::standard(2, rec.milnor + 2);
        for (int i = 0; i < cfg.count; ++i) {
            auto params = random_parameters(rec, rng);
            SparsePoly nf = normal_form(rec, params);
            auto t = tangent_map(rng);
            auto l = linear_map(rng);
            cases.push_back({r, "identity", params, nf, {}, {}, 0});
            cases.push_back({r, "tangent", params, substitute(nf, t, tr), {}, {}, 0});
            cases.push_back({r, "linear", params, substitute(nf, l, tr), {}, {}, 0});
        }
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < cases.size(); k = next++) {
            Case& c = cases[k];
            auto t0 = std::chrono::steady_clock::now();
            try {
                c.outcome = classify(c.input);
            } catch (const std::exception& e) {
                c.error = e.what();
            }
            c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    nlohmann::json rows = nlohmann::json::array();
    long typed = 0, type_ok = 0, parametered = 0, param_ok = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t r = 0; r < types.size(); ++r) {
        const TypeRecord& rec = type_record(types[r]);
        nlohmann::json row;
        row["type"] = types[r].name();
        nlohmann::json list = nlohmann::json::array();
        double ms = 0;
        for (const auto& c : cases) {
            if (c.row != r) continue;
            ms += c.ms;
            nlohmann::json j;
            j["transform"] = c.transform;
            j["parameters"] = strings(c.params);
            j["input"] = to_string(c.input);
            bool tok = false, pok = false;
            if (!c.error.empty()) {
                j["error"] = c.error;
            } else if (c.outcome.rejected) {
                j["rejected_reason"] = to_string(*c.outcome.rejected);
            } else {
                j["recovered_type"] = c.outcome.type.name();
                j["recovered_parameters"] = strings(c.outcome.parameters);
                tok = c.outcome.type == types[r];
                pok = tok && c.outcome.parameters.size() == c.params.size();
                for (std::size_t i = 0; pok && i < c.params.size(); ++i) pok = c.outcome.parameters[i] == c.params[i];
            }
            j["type_ok"] = tok;
            ++typed;
            type_ok += tok;
            if (c.transform != "linear") {
                j["parameters_ok"] = pok;
                ++parametered;
                param_ok += pok;
                if (c.transform == "tangent" && !pok) failures.push_back({{"type", types[r].name()}, {"input", j["input"]}});
            }
            list.push_back(j);
        }
        row["cases"] = list;
        if (rec.id.family == Family::Wsharp) {
            SparsePoly nf = normal_form(rec, sample_parameters(rec));
            StandardBasis sb = jacobian_std(nf, rec.milnor, LocalOrder{{3, 2}});
            auto want = wsharp_leading_ideal(rec.milnor);
            std::sort(want.begin(), want.end(), MonomialLess());
            row["leading_ideal_ok"] = sb.leading_ideal == want;
        }
        rows.push_back(row);
        if (timing) *timing << types[r].name() << ": " << ms << " ms\n";
    }
    nlohmann::json report;
    report["seed"] = cfg.seed;
    report["count"] = cfg.count;
    report["rows"] = rows;
    report["summary"] = {{"cases", typed},
                         {"type_recovered", type_ok},
                         {"parameter_cases", parametered},
                         {"parameters_recovered", param_ok},
                         {"confluence_failures", failures}};
    return report;
}

}  // namespace arnoldnf
