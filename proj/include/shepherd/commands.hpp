#pragma once
// The three CLI commands as library calls. Each writes its files under
// `out_dir` and returns what it wrote; outputs are a pure function of the inputs.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "shepherd/experiment.hpp"
#include "shepherd/route.hpp"
#include "shepherd/scenario.hpp"

namespace shepherd {

struct PlanCommand {
    ScenarioConfig config;  ///< config.seed drives placement and search
    Strategy strategy{Strategy::Reverse};
    std::size_t iterations{10000};
    std::filesystem::path out_dir{"."};
};

struct SimulateCommand {
    ScenarioConfig config;
    Method method;
    std::size_t iterations{10000};
    std::filesystem::path out_dir{"."};
};

struct BatchCommand {
    ScenarioConfig config;
    BatchOptions options;
    std::filesystem::path out_dir{"."};
};

/// tour.txt, cost_trace.csv, plan_summary.csv
PlanResult run_plan_command(const PlanCommand& cmd);

/// trajectory.csv, phases.csv, run_summary.csv, and tour.txt for tour-following methods
RunRecord run_simulate_command(const SimulateCommand& cmd);

/// trials.csv, summary.csv
BatchResult run_batch_command(const BatchCommand& cmd);

}  // namespace shepherd
