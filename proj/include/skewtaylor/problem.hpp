#ifndef SKEWTAYLOR_PROBLEM_HPP
#define SKEWTAYLOR_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewtaylor/skewpoly.hpp"

namespace skewtaylor {

struct Budgets {
    int i_max = 5;
    std::int64_t d_max = -1;  // derived from the relation degrees when < 0
    int series_k = 8;
    unsigned perm_cap = 9;
    unsigned max_s = 20;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

struct IdealData {
    QMatrixPtr ring;
    std::vector<Monomial> raw_generators;
    std::vector<Monomial> mingens;
    bool was_minimal = true;
};

// A parsed and validated problem: field, ring(s), generators, budgets.
struct ProblemSpec {
    FieldDesc field;
    IdealData first;
    std::optional<IdealData> second;
    Budgets budgets;
    std::vector<std::string> warnings;
};

// Parses the JSON problem document (schema in docs/spec-format.md). The
// default field may come from the SKEWTAYLOR_FIELD environment variable;
// an explicit "field" key wins.
ProblemSpec parse_spec(const std::string& text,
                       const std::optional<std::string>& env_field = std::nullopt);

Scalar parse_scalar(const std::string& text, const FieldDesc& field);

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 verification failure, 2 input error, 3 budget
    std::string failed_invariant;  // named check when exit_code == 1
    std::string human;
    nlohmann::ordered_json machine;
};

// command ∈ {resolve, verify, betti, dg-verify, lattice, graph, compare,
// poincare, deviations}.
RunResult run_command(const std::string& command, const ProblemSpec& spec);

}  // namespace skewtaylor

#endif
