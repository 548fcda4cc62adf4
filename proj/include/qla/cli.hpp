#pragma once

#include "qla/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qla {

/// A fully parsed command invocation. Everything the CLI does is a pure
/// function of one RunConfig, which round-trips losslessly through json.
struct RunConfig {
    std::string command;       // catalog | validate | verify | decompose | dump
    std::string formula;       // for verify
    std::string algebra_spec;  // e.g. "gl(2|1)"
    std::string algebra_file;  // serialized algebra instead of a spec string
    std::string torus;         // exact rational coordinates "1/2,0"
    std::string labels;        // s-labels "1,0,2"
    long m = 0;                // 0 = derive from labels and marks
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t samples = 0;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["formula"] = formula;
        j["algebra"] = algebra_spec;
        j["algebra_file"] = algebra_file;
        j["torus"] = torus;
        j["labels"] = labels;
        j["m"] = m;
        j["json"] = json;
        j["seed"] = seed;
        j["samples"] = samples;
        return j;
    }
    static RunConfig from_json(const Json& j) {
        RunConfig c;
        c.command = j.at("command").get<std::string>();
        c.formula = j.at("formula").get<std::string>();
        c.algebra_spec = j.at("algebra").get<std::string>();
        c.algebra_file = j.at("algebra_file").get<std::string>();
        c.torus = j.at("torus").get<std::string>();
        c.labels = j.at("labels").get<std::string>();
        c.m = j.at("m").get<long>();
        c.json = j.at("json").get<bool>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.samples = j.at("samples").get<std::size_t>();
        return c;
    }
    bool operator==(const RunConfig&) const = default;
};

namespace cli {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_parse_error = 2;

inline LieSuperalgebra load_algebra(const RunConfig& cfg) {
    if (!cfg.algebra_file.empty()) {
        std::ifstream in(cfg.algebra_file);
        if (!in) throw InvalidInput("cannot open " + cfg.algebra_file);
        Json j = Json::parse(in, nullptr, true);
        return algebra_from_json(j);
    }
    if (cfg.algebra_spec.empty()) throw InvalidInput("no algebra given (--algebra or --algebra-file)");
    return algebra_from_spec(cfg.algebra_spec);
}

inline std::vector<long> parse_labels(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(std::stol(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    flush();
    return out;
}

inline void emit_report(const VerificationReport& r, bool as_json, std::ostream& out) {
    if (as_json) {
        out << report_to_json(r).dump() << "\n";
    } else {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.formula << " " << r.algebra;
        if (!r.torus.empty()) out << " @ torus (" << r.torus << ")";
        out << ": lhs = " << to_string(r.lhs) << ", rhs = " << to_string(r.rhs) << "\n";
    }
}

inline int run_catalog(const RunConfig& cfg, std::ostream& out) {
    auto specs = catalog_specs();
    if (cfg.json) {
        Json j = Json::array();
        for (const auto& s : specs) {
            auto L = algebra_from_spec(s);
            Json e;
            e["spec"] = s;
            e["dim"] = L.dim();
            e["sdim"] = L.sdim();
            e["rank"] = L.cartan().size();
            j.push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "families: gl(m|n) [1 <= m+n <= 5], sl(m|n) [m != n, m+n <= 5], "
               "osp(m|2n) [dim <= 40], C(0|2n) [n <= 2]\n";
        for (const auto& s : specs) {
            auto L = algebra_from_spec(s);
            out << "  " << s << "  dim " << L.dim() << "  sdim " << L.sdim() << "\n";
        }
    }
    return exit_ok;
}

inline int run_validate(const RunConfig& cfg, std::ostream& out) {
    auto L = load_algebra(cfg);
    auto rep = validate(L);
    if (cfg.json) {
        Json j;
        j["algebra"] = L.name();
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            Json e;
            e["axiom"] = c.axiom;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
        j["all_pass"] = rep.all_pass();
        out << j.dump() << "\n";
    } else {
        for (const auto& c : rep.checks)
            out << (c.pass ? "[ok]   " : "[FAIL] ") << c.axiom
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    return rep.all_pass() ? exit_ok : exit_verification_failed;
}

inline std::vector<Grading> gradings_for(const LieSuperalgebra& L, const RunConfig& cfg) {
    std::vector<Grading> out;
    if (!cfg.torus.empty()) {
        out.push_back(
            grading_from_torus(L, torus_from_string(cfg.torus, L.cartan().size())));
    } else if (cfg.samples > 0) {
        DetRng rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.samples; ++i)
            out.push_back(grading_from_torus(L, sample_torus_element(L, rng)));
    } else {
        out.push_back(grading_from_torus(L, TorusElement{QVec(L.cartan().size(), Rational(0))}));
    }
    return out;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto L = load_algebra(cfg);
    std::vector<VerificationReport> reports;

    if (cfg.formula == "strange") {
        reports.push_back(verify_strange(L));
    } else if (cfg.formula == "very-strange") {
        for (const auto& g : gradings_for(L, cfg)) reports.push_back(verify_very_strange(L, g));
    } else if (cfg.formula == "even-vsf") {
        auto labels = parse_labels(cfg.labels);
        reports.push_back(verify_even_vsf(
            L, labels, cfg.m > 0 ? std::optional<Integer>(Integer(cfg.m)) : std::nullopt));
    } else if (cfg.formula == "weighted-dual-sum") {
        for (const auto& g : gradings_for(L, cfg))
            reports.push_back(verify_sum_dual_phases(L, g));
    } else if (cfg.formula == "casimir-orthogonality") {
        for (const auto& g : gradings_for(L, cfg))
            reports.push_back(verify_casimir_orthogonality(L, g));
    } else if (cfg.formula == "identities") {
        for (const auto& g : gradings_for(L, cfg)) {
            reports.push_back(verify_sum_dual_phases(L, g));
            reports.push_back(verify_casimir_orthogonality(L, g));
        }
    } else {
        throw InvalidInput("unknown formula '" + cfg.formula +
                           "' (strange, very-strange, even-vsf, weighted-dual-sum, "
                           "casimir-orthogonality, identities)");
    }

    bool all = true;
    for (const auto& r : reports) {
        emit_report(r, cfg.json, out);
        all = all && r.pass;
    }
    if (!all) err << "verification failed\n";
    return all ? exit_ok : exit_verification_failed;
}

inline Json vectors_to_json(const LieSuperalgebra& L, const std::vector<QVec>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json coords = Json::array();
        for (const auto& c : v) coords.push_back(to_string(c));
        arr.push_back(coords);
    }
    return arr;
}

inline int run_decompose(const RunConfig& cfg, std::ostream& out) {
    auto L = load_algebra(cfg);
    auto t = triangular(L);
    if (cfg.json) {
        Json j;
        j["algebra"] = L.name();
        j["dim"] = L.dim();
        j["n"] = vectors_to_json(L, t.n_basis);
        j["h"] = vectors_to_json(L, t.h_basis);
        j["n_minus"] = vectors_to_json(L, t.n_minus_basis);
        j["m_plus"] = vectors_to_json(L, t.m_plus);
        j["m_minus"] = vectors_to_json(L, t.m_minus);
        j["h_plus"] = vectors_to_json(L, t.h_plus);
        j["h_plus_maximal_certified"] = t.h_plus_maximal_certified;
        j["g1"] = vectors_to_json(L, t.g1_basis);
        j["g2"] = vectors_to_json(L, t.g2_basis);
        Json mt;
        for (const auto& [w, basis] : t.isotypic.m_lambda)
            mt[detail::weight_to_string(w)] = basis.size();
        j["m_triv_weights"] = mt;
        Json comps = Json::array();
        for (const auto& c : t.isotypic.components) {
            Json e;
            e["lambda"] = detail::weight_to_string(c.lambda);
            e["multiplicity"] = c.hw_vectors.size();
            e["dim_v"] = c.dim_v;
            comps.push_back(e);
        }
        j["isotypic_components"] = comps;
        out << j.dump(2) << "\n";
    } else {
        auto print_part = [&](const char* name, const std::vector<QVec>& part) {
            out << name << " (dim " << part.size() << "):\n";
            for (const auto& v : part) out << "  " << L.format_vector(v) << "\n";
        };
        out << "triangular decomposition of " << L.name() << "\n";
        print_part("n", t.n_basis);
        print_part("h", t.h_basis);
        print_part("n_minus", t.n_minus_basis);
        print_part("h_plus", t.h_plus);
        out << "h_plus maximality: "
            << (t.h_plus_maximal_certified ? "certified" : "not certified over Q") << "\n";
        out << "derived: dim [g,g] = " << t.g1_basis.size()
            << ", dim [[g,g],[g,g]] = " << t.g2_basis.size() << "\n";
        out << "trivial isotypic part: dim " << t.isotypic.m_triv.size() << "\n";
        for (const auto& c : t.isotypic.components)
            out << "  component lambda = " << detail::weight_to_string(c.lambda)
                << "  multiplicity " << c.hw_vectors.size() << "  dim V = " << c.dim_v << "\n";
    }
    return exit_ok;
}

inline int run_dump(const RunConfig& cfg, std::ostream& out) {
    auto L = load_algebra(cfg);
    out << to_json(L).dump(2) << "\n";
    return exit_ok;
}

/// Dispatch; returns the process exit code and never throws.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "catalog") return run_catalog(cfg, out);
        if (cfg.command == "validate") return run_validate(cfg, out);
        if (cfg.command == "verify") return run_verify(cfg, out, err);
        if (cfg.command == "decompose") return run_decompose(cfg, out);
        if (cfg.command == "dump") return run_dump(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return exit_parse_error;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const Error& e) {
        err << "error [" << e.tag() << "]: " << e.what() << "\n";
        return exit_verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    }
}

}  // namespace cli
}  // namespace qla
