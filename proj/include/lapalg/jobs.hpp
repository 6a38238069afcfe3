#ifndef LAPALG_JOBS_HPP
#define LAPALG_JOBS_HPP

#include <string>

#include <json.hpp>

namespace lapalg {

// Outcome of one job: the JSON report and the process exit code the CLI
// should use (0 = verdict computed, 3 = INDETERMINATE). Input errors and
// budget exhaustion escape as exceptions instead.
struct JobOutcome {
    nlohmann::json report;
    int exit_code = 0;
};

// Dispatches a JSON job description to the matching operation and renders a
// deterministic report: byte-identical output for fixed (input, seed,
// version). Supported commands: check-laplacian, closure,
// separating-generates, decompose-harmonic, membership, polarize,
// homogeneity, quadratic-homogeneity, clifford, finite-group-invariants, iit,
// kns, orbit-sep, schur-ratios.
JobOutcome run_job(const nlohmann::json& job);

}  // namespace lapalg

#endif
