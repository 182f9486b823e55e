#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/pipeline.hpp"
#include "bgmode/rng.hpp"
#include "bgmode/synth.hpp"

namespace bgmode {

// One round of majority-of-three voting on independent inputs that are each
// correct with probability p: the output is correct when at least two are.
inline double accuracy_step(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
  return p * p * p + 3.0 * p * p * (1.0 - p);
}

inline double accuracy_at_level(double p0, int level) {
  if (level < 0) {
    throw DomainError("level must be >= 0, got " + std::to_string(level));
  }
  double p = p0;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " +
                      std::to_string(p0));
  }
  for (int l = 0; l < level; ++l) {
    p = accuracy_step(p);
  }
  return p;
}

// cells[i][0] is the starting probability itself; cells[i][l] for l >= 1 is
// the predicted accuracy after l voting rounds.
struct AccuracyTable {
  std::vector<double> p0_values;
  int levels = 0;
  std::vector<std::vector<double>> cells;
};

inline AccuracyTable build_table(const std::vector<double>& p0_values,
                                 int levels) {
  if (levels < 1) {
    throw DomainError("table needs at least one level, got " +
                      std::to_string(levels));
  }
  if (p0_values.empty()) {
    throw EmptyInputError("table needs at least one starting probability");
  }
  AccuracyTable table;
  table.p0_values = p0_values;
  table.levels = levels;
  table.cells.reserve(p0_values.size());
  for (double p0 : p0_values) {
    std::vector<double> row(static_cast<std::size_t>(levels) + 1);
    row[0] = p0;
    for (int l = 1; l <= levels; ++l) {
      row[static_cast<std::size_t>(l)] =
          accuracy_step(row[static_cast<std::size_t>(l) - 1]);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

struct McOptions {
  std::size_t width = 64;
  std::size_t height = 64;
  // Large enough that a level-6 run (729 draws with replacement) rarely reuses
  // a frame within or across triples; heavier reuse correlates the tournament
  // inputs and drags the empirical accuracy below the independence recursion.
  // Also an exact multiple for common p0 grid points, so p0_realized == p0.
  std::size_t frame_count = 1600;
};

struct McReport {
  double p0_target = 0.0;
  double p0_realized = 0.0;
  int level = 0;
  std::size_t trials = 0;
  std::size_t pixels_checked = 0;
  std::size_t pixels_correct = 0;
  double empirical_accuracy = 0.0;
  double predicted = 0.0;
  double sigma = 0.0;
  bool within_tolerance = false;
};

// Empirical check of the level-accuracy prediction. Each trial builds a fresh
// synthetic scene with an exact per-pixel modal fraction, runs the full
// background pipeline on it, and counts pixels recovered byte-exactly. The
// prediction is evaluated at the realized fraction (which rounding may push
// slightly above the requested p0), and the pass band is four binomial
// standard errors wide.
inline McReport monte_carlo_validate(double p0, int level, std::size_t trials,
                                     std::uint64_t seed,
                                     const McOptions& opts = {}) {
  if (trials < 1) {
    throw ConfigError("trials must be >= 1, got " + std::to_string(trials));
  }
  if (!(p0 <= 1.0)) {
    throw DomainError("p0 must be <= 1, got " + std::to_string(p0));
  }
  if (!(p0 > 0.5)) {
    throw AssumptionError(
        "majority assumption violated: modal fraction p0 must exceed 0.5, "
        "got " +
        std::to_string(p0));
  }

  McReport report;
  report.p0_target = p0;
  report.level = level;
  report.trials = trials;

  for (std::size_t t = 0; t < trials; ++t) {
    MajorityScene scene =
        make_majority_scene(opts.width, opts.height, opts.frame_count, p0,
                            derive_seed(seed, 2 * t));

    PipelineConfig config;
    config.level = level;
    config.seed = derive_seed(seed, 2 * t + 1);
    config.max_level = level > 6 ? level : 6;
    PipelineReport run = generate_background(scene.frames, config);

    report.p0_realized = scene.modal_fraction;

    const auto expected = scene.background.data();
    const auto actual = run.background.data();
    for (std::size_t i = 0; i < expected.size(); ++i) {
      report.pixels_checked += 1;
      if (expected[i] == actual[i]) {
        report.pixels_correct += 1;
      }
    }
  }

  report.empirical_accuracy =
      static_cast<double>(report.pixels_correct) /
      static_cast<double>(report.pixels_checked);
  report.predicted = accuracy_at_level(report.p0_realized, level);
  report.sigma = std::sqrt(report.predicted * (1.0 - report.predicted) /
                           static_cast<double>(report.pixels_checked));
  const double deviation =
      std::abs(report.empirical_accuracy - report.predicted);
  report.within_tolerance =
      report.sigma > 0.0 ? deviation <= 4.0 * report.sigma : deviation == 0.0;
  return report;
}

}  // namespace bgmode
