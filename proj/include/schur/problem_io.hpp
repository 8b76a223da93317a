#pragma once

#include <string>
#include <vector>

#include "schur/divided_differences.hpp"
#include "schur/oracle.hpp"
#include "schur/variability.hpp"

// Problem-file parsing and result serialization for the CLI.  Output JSON
// is emitted by a fixed-format writer (17 significant digits, stable
// field order) so artifacts are byte-reproducible.

namespace schur::io {

struct ProblemFile {
    enum class Mode { multipoint, hyperbolic };

    Mode mode = Mode::multipoint;
    std::vector<Complex> nodes;    // multipoint
    std::vector<Complex> values;   // multipoint
    Complex z0{0.0, 0.0};          // hyperbolic
    std::vector<Complex> gamma;    // hyperbolic
    std::vector<Complex> queries;
    int epsilon_samples = 16;
    Tolerances tol;
};

ProblemFile parse_problem_text(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

// number / complex formatting shared by every writer
std::string format_double(double v);
std::string format_complex(Complex v);

std::string region_results_json(const ProblemFile& problem,
                                const std::vector<VariabilityRegion>& regions);
std::string region_results_pretty(const ProblemFile& problem,
                                  const std::vector<VariabilityRegion>& regions);

std::string table_json(const InterpolationData& data, const DifferenceTable& table);
// staggered triangular rendering of the difference scheme
std::string table_pretty(const InterpolationData& data, const DifferenceTable& table);

std::string solvability_json(const SolvabilityClass& cls);

std::string membership_report_json(const oracle::MembershipReport& r);
std::string identity_report_json(const oracle::IdentityReport& r);
std::string confluence_report_json(const oracle::ConfluenceReport& r);

// write-to-temp + rename so readers never observe partial files
void atomic_write(const std::string& path, const std::string& contents);

}  // namespace schur::io
