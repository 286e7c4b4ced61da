#pragma once

#include "ripalm/diagnostics.hpp"

namespace ripalm {

struct RunResult {
  IterateState state;
  std::vector<TraceRecord> trace;
  Status status = Status::MaxIterations;
  /// Ergodic state at the end of the run (full-run suprema included).
  ErgodicState ergodic;
};

/// Drive outer steps from lambda = 0, mu = 0, w = x0 until the scaled KKT
/// measure drops below params.tol_kkt or max_outer is reached. Inner budget
/// exhaustion is reported as Status::InnerFailure with the trace so far.
RunResult run(const ConvexProgram &p, const Vector &x0,
              const SolverParams &params);

}  // namespace ripalm
