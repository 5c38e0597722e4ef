#include "shepherd/commands.hpp"

#include <sstream>

#include "shepherd/io.hpp"

namespace shepherd {

PlanResult run_plan_command(const PlanCommand& cmd) {
    const FlockState start = prepare_start(cmd.config);
    const TourInstance instance = planning_instance(start, cmd.config.goal);
    PlanResult plan = plan_tour(instance, cmd.strategy, cmd.iterations, cmd.config.seed);

    std::ostringstream tour, trace, summary;
    write_tour(tour, plan.rls.best_tour);
    write_cost_trace(trace, plan.rls.cost_trace);
    summary << "strategy,iterations,initial_cost,final_cost\n"
            << to_string(cmd.strategy) << ',' << cmd.iterations << ',' << format_number(plan.initial_cost) << ','
            << format_number(plan.rls.best_cost) << '\n';
    write_file(cmd.out_dir / "tour.txt", tour.str());
    write_file(cmd.out_dir / "cost_trace.csv", trace.str());
    write_file(cmd.out_dir / "plan_summary.csv", summary.str());
    return plan;
}

RunRecord run_simulate_command(const SimulateCommand& cmd) {
    const FlockState start = prepare_start(cmd.config);
    RunRecord run;
    if (cmd.method.is_fat()) {
        run = run_fat(start, cmd.config);
    } else {
        const PlanResult plan = plan_tour(planning_instance(start, cmd.config.goal), *cmd.method.strategy,
                                          cmd.iterations, cmd.config.seed);
        run = run_proposed(start, cmd.config, plan.rls.best_tour);
        std::ostringstream tour;
        write_tour(tour, plan.rls.best_tour);
        write_file(cmd.out_dir / "tour.txt", tour.str());
    }

    std::ostringstream traj, phases, summary;
    write_trajectory(traj, run);
    write_phases(phases, run);
    summary << "method,success,k_end,J\n"
            << cmd.method.name() << ',' << (run.success ? 1 : 0) << ',' << run.k_end << ','
            << format_number(run.total_distance) << '\n';
    write_file(cmd.out_dir / "trajectory.csv", traj.str());
    write_file(cmd.out_dir / "phases.csv", phases.str());
    write_file(cmd.out_dir / "run_summary.csv", summary.str());
    return run;
}

BatchResult run_batch_command(const BatchCommand& cmd) {
    BatchResult result = run_batch(cmd.config, cmd.options);
    std::ostringstream trials, summary;
    write_trial_records(trials, result.records);
    write_summaries(summary, result.summaries);
    write_file(cmd.out_dir / "trials.csv", trials.str());
    write_file(cmd.out_dir / "summary.csv", summary.str());
    return result;
}

}  // namespace shepherd
