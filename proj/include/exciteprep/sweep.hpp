#pragma once

#include <Eigen/Dense>
#include <vector>

#include "exciteprep/evolution.hpp"
#include "exciteprep/perturbation.hpp"

namespace exciteprep {

/// Interaction-picture amplitudes over a time grid, one column per grid point
/// (2N x T). Each column is an independent evaluation, which is what the
/// parallel kernels exploit; serial and parallel variants produce bitwise
/// identical results.
struct AmplitudeGrid {
  std::vector<double> times;
  Eigen::MatrixXcd c;           // 2N x T
  Eigen::MatrixXd probability;  // 2N x T
};

/// Thread count to use: `requested` capped by the EXCITE_PREP_THREADS
/// environment variable when set; requested <= 0 means the OpenMP default.
int resolve_thread_count(int requested);

/// Evenly spaced grid 0..tmax inclusive with `steps` points (steps >= 2).
std::vector<double> time_grid(double tmax, int steps);

/// Exact evolution of psi0 over the grid. Serial reference implementation.
AmplitudeGrid evolve_grid_serial(const ElectronicSystem& sys, double w, const Propagator& prop,
                                 const CoupledState& psi0, const std::vector<double>& times);

/// OpenMP variant of evolve_grid_serial.
AmplitudeGrid evolve_grid_parallel(const ElectronicSystem& sys, double w, const Propagator& prop,
                                   const CoupledState& psi0, const std::vector<double>& times,
                                   int threads = 0);

/// Truncated-series amplitudes over the grid. Serial reference implementation.
AmplitudeGrid truncated_grid_serial(const PerturbationTable& table, double lambda,
                                    const std::vector<double>& times, int max_order = -1);

/// OpenMP variant of truncated_grid_serial.
AmplitudeGrid truncated_grid_parallel(const PerturbationTable& table, double lambda,
                                      const std::vector<double>& times, int max_order = -1,
                                      int threads = 0);

/// Dispatchers: threads == 1 runs the serial reference, anything else the
/// OpenMP kernel with the given count.
AmplitudeGrid evolve_grid(const ElectronicSystem& sys, double w, const Propagator& prop,
                          const CoupledState& psi0, const std::vector<double>& times,
                          int threads);
AmplitudeGrid truncated_grid(const PerturbationTable& table, double lambda,
                             const std::vector<double>& times, int max_order, int threads);

}  // namespace exciteprep
