#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewtaylor/problem.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw skewtaylor::input_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"skewtaylor: skew Taylor resolutions of monomial ideals, their color DG structure, "
                 "lattice invariants and Poincare series"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string output_path;
    bool json_out = false;
    long long seed = -1;
    int threads = -1;

    std::vector<std::string> commands = {"resolve", "verify",  "betti",    "dg-verify", "lattice",
                                         "graph",   "compare", "poincare", "deviations"};
    std::vector<CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("spec", spec_path, "problem spec file (JSON)")->required();
        sub->add_flag("--json", json_out, "emit machine-readable JSON on stdout");
        sub->add_option("--output", output_path, "write the report to a file");
        sub->add_option("--seed", seed, "seed for sampled verification budgets");
        sub->add_option("--threads", threads, "worker cap for parallel verification");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<std::string> env_field;
        if (const char* e = std::getenv("SKEWTAYLOR_FIELD"))
            env_field = std::string(e);
        skewtaylor::ProblemSpec spec = skewtaylor::parse_spec(read_file(spec_path), env_field);
        if (seed >= 0)
            spec.budgets.seed = (std::uint64_t)seed;
        if (threads >= 1)
            spec.budgets.threads = (unsigned)threads;

        std::string command = app.get_subcommands().front()->get_name();
        skewtaylor::RunResult res = skewtaylor::run_command(command, spec);

        std::string text = json_out ? res.machine.dump(2) + "\n" : res.human;
        if (!output_path.empty()) {
            std::ofstream out(output_path);
            out << text;
        } else {
            std::cout << text;
        }
        if (res.exit_code == 1)
            std::cerr << "verification failed: " << res.failed_invariant << "\n";
        return res.exit_code;
    } catch (const skewtaylor::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const skewtaylor::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
