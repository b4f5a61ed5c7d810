#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "asep/objective.hpp"

namespace asep {

/// Solver parameters. Defaults are the tuned values.
struct SolverConfig {
  double alpha = 0.2;
  std::size_t population_size = 50;  ///< theta
  std::size_t reference_size = 25;   ///< 0.5 theta
  std::size_t elite_size = 5;        ///< 0.1 theta
  double eta = 0.6;                  ///< randomized scale factor (construction)
  double rho = 0.95;                 ///< itemset scale factor (recombination)
  std::size_t max_streak = 2000;     ///< TSSA maximal iteration count
  double gamma = 0.2;                ///< tabu scale factor
  double mu = 0.6;                   ///< quality weight in population management
  double time_limit = 30.0;          ///< seconds; <= 0 disables
  std::size_t stagnation_limit = 50; ///< generations without improvement; 0 disables
  std::size_t max_generations = 0;   ///< 0 disables
  std::uint64_t seed = 1;
  Objective objective = Objective::LargestExcess;
  bool tabu = true;
  std::size_t threads = 1;  ///< workers for the independent construction runs

  /// Sets theta and rescales the reference and elite set sizes (0.5 theta,
  /// 0.1 theta, each at least 1).
  void set_population_size(std::size_t theta);

  /// Throws std::invalid_argument describing the first bad field.
  void validate() const;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// key=value lines, one per field, in a fixed order.
std::string to_key_values(const SolverConfig& config);

/// Applies key=value lines on top of `base`. Blank lines, '#'/';' comments
/// and [section] headers are skipped. Unknown keys throw. Setting `theta`
/// rescales reference/elite sizes unless those keys also appear.
SolverConfig parse_key_values(std::string_view text, SolverConfig base = {});

/// Applies a single key/value pair.
void apply_setting(SolverConfig& config, std::string_view key, std::string_view value);

SolverConfig load_config(const std::string& path, SolverConfig base = {});

}  // namespace asep
