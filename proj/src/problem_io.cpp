#include "schur/problem_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace schur::io {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(std::string(what) + ": expected [re, im]");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> parse_complex_list(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_complex(e, what));
    return out;
}

const char* status_name(EntryStatus s) {
    switch (s) {
        case EntryStatus::interior: return "interior";
        case EntryStatus::boundary: return "boundary";
        case EntryStatus::infinite: return "infinite";
    }
    return "?";
}

}  // namespace

ProblemFile parse_problem_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("problem file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("problem file: expected a JSON object");

    ProblemFile p;
    const std::string mode = j.value("mode", std::string());
    if (mode == "multipoint")
        p.mode = ProblemFile::Mode::multipoint;
    else if (mode == "hyperbolic")
        p.mode = ProblemFile::Mode::hyperbolic;
    else
        throw std::invalid_argument("problem file: mode must be \"multipoint\" or \"hyperbolic\"");

    if (p.mode == ProblemFile::Mode::multipoint) {
        if (!j.contains("nodes") || !j.contains("values"))
            throw std::invalid_argument("problem file: multipoint mode needs nodes and values");
        p.nodes = parse_complex_list(j["nodes"], "nodes");
        p.values = parse_complex_list(j["values"], "values");
        if (p.nodes.size() != p.values.size() || p.nodes.empty())
            throw std::invalid_argument("problem file: nodes and values must have equal nonzero length");
    } else {
        if (!j.contains("z0") || !j.contains("gamma"))
            throw std::invalid_argument("problem file: hyperbolic mode needs z0 and gamma");
        p.z0 = parse_complex(j["z0"], "z0");
        p.gamma = parse_complex_list(j["gamma"], "gamma");
        if (p.gamma.empty()) throw std::invalid_argument("problem file: gamma must be nonempty");
    }

    if (j.contains("queries")) p.queries = parse_complex_list(j["queries"], "queries");
    if (j.contains("epsilon_samples")) {
        if (!j["epsilon_samples"].is_number_integer())
            throw std::invalid_argument("problem file: epsilon_samples must be an integer");
        p.epsilon_samples = j["epsilon_samples"].get<int>();
        if (p.epsilon_samples < 0 || p.epsilon_samples > 100000)
            throw std::invalid_argument("problem file: epsilon_samples out of range");
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object()) throw std::invalid_argument("problem file: tolerances must be an object");
        if (t.contains("boundary")) p.tol.boundary = t["boundary"].get<double>();
        if (t.contains("separation")) p.tol.separation = t["separation"].get<double>();
        if (p.tol.boundary <= 0 || p.tol.separation <= 0)
            throw std::invalid_argument("problem file: tolerances must be positive");
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    return "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
}

namespace {

std::string region_json_fragment(const VariabilityRegion& r) {
    switch (r.kind) {
        case VariabilityRegion::Kind::disk:
            return "{\"type\": \"disk\", \"center\": " + format_complex(r.disk.center) +
                   ", \"radius\": " + format_double(r.disk.radius) + "}";
        case VariabilityRegion::Kind::point:
            return "{\"type\": \"point\", \"center\": " + format_complex(r.point) +
                   ", \"radius\": 0}";
        case VariabilityRegion::Kind::empty:
            return "{\"type\": \"empty\"}";
    }
    return "{}";
}

}  // namespace

std::string region_results_json(const ProblemFile& problem,
                                const std::vector<VariabilityRegion>& regions) {
    std::string s = "{\n  \"mode\": \"";
    s += problem.mode == ProblemFile::Mode::multipoint ? "multipoint" : "hyperbolic";
    s += "\",\n  \"results\": [";
    for (std::size_t i = 0; i < regions.size(); ++i) {
        s += i ? ",\n    " : "\n    ";
        s += "{\"z\": " + format_complex(problem.queries[i]) +
             ", \"region\": " + region_json_fragment(regions[i]) + "}";
    }
    s += regions.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return s;
}

std::string region_results_pretty(const ProblemFile& problem,
                                  const std::vector<VariabilityRegion>& regions) {
    std::ostringstream out;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const Complex z = problem.queries[i];
        out << "z = " << format_double(z.real()) << " + " << format_double(z.imag()) << "i : ";
        const VariabilityRegion& r = regions[i];
        switch (r.kind) {
            case VariabilityRegion::Kind::disk:
                out << "disk  center " << format_complex(r.disk.center) << "  radius "
                    << format_double(r.disk.radius);
                break;
            case VariabilityRegion::Kind::point:
                out << "point " << format_complex(r.point);
                break;
            case VariabilityRegion::Kind::empty:
                out << "empty";
                break;
        }
        out << "  (" << r.provenance << ")\n";
    }
    return out.str();
}

std::string table_json(const InterpolationData& data, const DifferenceTable& table) {
    std::string s = "{\n  \"points\": [";
    for (std::size_t i = 0; i < data.nodes.size(); ++i)
        s += (i ? ", " : "") + format_complex(data.nodes[i]);
    s += "],\n  \"infeasible\": ";
    s += table.infeasible() ? "true" : "false";
    s += ",\n  \"columns\": [";
    const auto& cols = table.columns();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        s += k ? ",\n    [" : "\n    [";
        for (std::size_t i = 0; i < cols[k].size(); ++i) {
            const TableEntry& e = cols[k][i];
            s += i ? ", " : "";
            s += "{\"status\": \"";
            s += status_name(e.status);
            s += "\"";
            if (e.status != EntryStatus::infinite)
                s += ", \"value\": " + format_complex(e.value.value());
            if (e.boundary_exception) s += ", \"note\": \"boundary-exception\"";
            s += "}";
        }
        s += "]";
    }
    s += cols.empty() ? "],\n" : "\n  ],\n";
    s += "  \"diagonal\": [";
    const auto diag = table.diagonal();
    for (std::size_t k = 0; k < diag.size(); ++k) {
        s += k ? ", " : "";
        if (diag[k].status == EntryStatus::infinite)
            s += "{\"status\": \"infinite\"}";
        else
            s += "{\"status\": \"" + std::string(status_name(diag[k].status)) +
                 "\", \"value\": " + format_complex(diag[k].value.value()) + "}";
    }
    s += "]\n}\n";
    return s;
}

std::string table_pretty(const InterpolationData& data, const DifferenceTable& table) {
    std::ostringstream out;
    auto cshort = [](Complex v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", v.real(), v.imag());
        return std::string(buf);
    };
    const auto& cols = table.columns();
    // row j shows z_{j+1}, w_{j+1} and the diagonal-running entries it owns
    for (std::size_t j = 0; j < data.nodes.size(); ++j) {
        out << "z_" << (j + 1) << " = " << cshort(data.nodes[j]) << "   ";
        for (std::size_t k = 0; k < cols.size() && k <= j; ++k) {
            const TableEntry& e = cols[k][j - k];
            out << "D^" << k << " = ";
            if (e.status == EntryStatus::infinite)
                out << "inf";
            else
                out << cshort(e.value.value());
            if (e.status == EntryStatus::boundary) out << " (boundary)";
            if (e.boundary_exception) out << " (boundary-exception)";
            out << "   ";
        }
        out << "\n";
    }
    if (table.infeasible()) out << "table infeasible: no interpolant exists\n";
    return out.str();
}

std::string solvability_json(const SolvabilityClass& cls) {
    switch (cls.kind) {
        case SolvabilityClass::Kind::infinitely_many:
            return "{\"class\": \"infinitely_many\"}\n";
        case SolvabilityClass::Kind::unique_blaschke:
            return "{\"class\": \"unique_blaschke\", \"degree\": " + std::to_string(cls.degree) +
                   "}\n";
        case SolvabilityClass::Kind::no_solution:
            return "{\"class\": \"no_solution\"}\n";
    }
    return "{}\n";
}

std::string membership_report_json(const oracle::MembershipReport& r) {
    std::string s = "{\"suite\": \"membership\", \"seed\": " + std::to_string(r.seed) +
                    ", \"trials\": " + std::to_string(r.trials) +
                    ", \"violations\": " + std::to_string(r.violations) +
                    ", \"resampled_draws\": " + std::to_string(r.resampled_draws) +
                    ", \"max_overhang\": " + format_double(r.max_overhang);
    if (r.first_violation_trial >= 0)
        s += ", \"first_violation\": " + r.first_violation_case;
    return s + "}";
}

std::string identity_report_json(const oracle::IdentityReport& r) {
    std::string s = "{\"suite\": \"identities\", \"seed\": " + std::to_string(r.seed) +
                    ", \"trials\": " + std::to_string(r.trials) +
                    ", \"max_determinant_residual\": " + format_double(r.max_determinant) +
                    ", \"max_reflection_residual\": " + format_double(r.max_reflection) +
                    ", \"max_neighbor_residual\": " + format_double(r.max_neighbor) +
                    ", \"min_gap_slack\": " + format_double(r.min_gap_slack);
    if (r.first_violation_trial >= 0)
        s += ", \"first_violation\": " + r.first_violation_case;
    return s + "}";
}

std::string confluence_report_json(const oracle::ConfluenceReport& r) {
    std::string s = "{\"suite\": \"confluence\", \"converged\": ";
    s += r.converged ? "true" : "false";
    s += ", \"deltas\": [";
    for (std::size_t i = 0; i < r.deltas.size(); ++i)
        s += (i ? ", " : "") + format_double(r.deltas[i]);
    s += "], \"center_dev\": [";
    for (std::size_t i = 0; i < r.center_dev.size(); ++i)
        s += (i ? ", " : "") + format_double(r.center_dev[i]);
    s += "], \"radius_dev\": [";
    for (std::size_t i = 0; i < r.radius_dev.size(); ++i)
        s += (i ? ", " : "") + format_double(r.radius_dev[i]);
    s += "]";
    if (!r.note.empty()) s += ", \"note\": \"" + r.note + "\"";
    return s + "}";
}

void atomic_write(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace schur::io
