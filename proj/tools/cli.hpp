#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gspmixdom/instances.hpp"

namespace gspmixdom::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kSizeLimit = 2, kNotReducible = 3 };

struct BenchRow {
    std::size_t leaves = 0;
    double generate_ms = 0;
    double solve_ms = 0;          // fastest of the repeats
    double slowest_solve_ms = 0;
    std::uint64_t gamma_m = 0;
};

/// Generates one instance per size and solves each `repeat` times,
/// interleaving sizes; solve_ms is the fastest run.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                const GeneratorWeights& weights, unsigned repeat = 5);

/// Runs `gspmixdom <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspmixdom::cli
