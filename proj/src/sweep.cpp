#include "exciteprep/sweep.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace exciteprep {

int resolve_thread_count(int requested) {
  int threads = requested > 0 ? requested : omp_get_max_threads();
  if (const char* cap_env = std::getenv("EXCITE_PREP_THREADS")) {
    const int cap = std::atoi(cap_env);
    if (cap > 0 && threads > cap) threads = cap;
  }
  return threads > 0 ? threads : 1;
}

std::vector<double> time_grid(double tmax, int steps) {
  if (steps < 2) throw std::invalid_argument("time_grid: at least two points required");
  if (!(tmax > 0.0)) throw std::invalid_argument("time_grid: tmax must be > 0");
  std::vector<double> ts(steps);
  for (int i = 0; i < steps; ++i) ts[i] = tmax * double(i) / double(steps - 1);
  return ts;
}

namespace {

AmplitudeGrid make_grid(int levels, const std::vector<double>& times) {
  AmplitudeGrid grid;
  grid.times = times;
  grid.c.resize(2 * levels, static_cast<Eigen::Index>(times.size()));
  grid.probability.resize(2 * levels, static_cast<Eigen::Index>(times.size()));
  return grid;
}

void fill_column(AmplitudeGrid& grid, Eigen::Index col, const AmplitudeRecord& record) {
  grid.c.col(col) = record.c;
  grid.probability.col(col) = record.probability;
}

}  // namespace

AmplitudeGrid evolve_grid_serial(const ElectronicSystem& sys, double w, const Propagator& prop,
                                 const CoupledState& psi0, const std::vector<double>& times) {
  AmplitudeGrid grid = make_grid(sys.levels(), times);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(times.size()); ++i) {
    const CoupledState state = prop.apply(psi0, times[i]);
    fill_column(grid, i, interaction_amplitudes(sys, w, state, times[i]));
  }
  return grid;
}

AmplitudeGrid evolve_grid_parallel(const ElectronicSystem& sys, double w, const Propagator& prop,
                                   const CoupledState& psi0, const std::vector<double>& times,
                                   int threads) {
  AmplitudeGrid grid = make_grid(sys.levels(), times);
  const auto count = static_cast<Eigen::Index>(times.size());
#pragma omp parallel for schedule(static) num_threads(resolve_thread_count(threads))
  for (Eigen::Index i = 0; i < count; ++i) {
    const CoupledState state = prop.apply(psi0, times[i]);
    fill_column(grid, i, interaction_amplitudes(sys, w, state, times[i]));
  }
  return grid;
}

AmplitudeGrid truncated_grid_serial(const PerturbationTable& table, double lambda,
                                    const std::vector<double>& times, int max_order) {
  AmplitudeGrid grid = make_grid(table.levels(), times);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(times.size()); ++i)
    fill_column(grid, i, truncated_amplitudes(table, lambda, times[i], max_order));
  return grid;
}

AmplitudeGrid truncated_grid_parallel(const PerturbationTable& table, double lambda,
                                      const std::vector<double>& times, int max_order,
                                      int threads) {
  AmplitudeGrid grid = make_grid(table.levels(), times);
  const auto count = static_cast<Eigen::Index>(times.size());
#pragma omp parallel for schedule(static) num_threads(resolve_thread_count(threads))
  for (Eigen::Index i = 0; i < count; ++i)
    fill_column(grid, i, truncated_amplitudes(table, lambda, times[i], max_order));
  return grid;
}

AmplitudeGrid evolve_grid(const ElectronicSystem& sys, double w, const Propagator& prop,
                          const CoupledState& psi0, const std::vector<double>& times,
                          int threads) {
  if (threads == 1) return evolve_grid_serial(sys, w, prop, psi0, times);
  return evolve_grid_parallel(sys, w, prop, psi0, times, threads);
}

AmplitudeGrid truncated_grid(const PerturbationTable& table, double lambda,
                             const std::vector<double>& times, int max_order, int threads) {
  if (threads == 1) return truncated_grid_serial(table, lambda, times, max_order);
  return truncated_grid_parallel(table, lambda, times, max_order, threads);
}

}  // namespace exciteprep
