#include "bgmode/bench.hpp"

#include <gtest/gtest.h>

#include "bgmode/errors.hpp"

namespace bgmode {
namespace {

// Pins the bench to single untimed-calibration runs over exactly
// source_frames frames, so structural assertions do not depend on wall time.
BenchOptions fast_options() {
  BenchOptions opts;
  opts.min_pool_bytes = 0;
  opts.min_sample_seconds = 0.0;
  return opts;
}

TEST(ScalingBench, RejectsDegenerateInputs) {
  BenchOptions opts = fast_options();
  EXPECT_THROW(run_scaling_bench({{16, 16}}, opts), ConfigError);
  EXPECT_THROW(run_scaling_bench({{32, 32}, {16, 16}}, opts), ConfigError);
  EXPECT_THROW(run_scaling_bench({{16, 16}, {16, 16}}, opts), ConfigError);

  BenchOptions bad_repeats = fast_options();
  bad_repeats.repeats = 0;
  EXPECT_THROW(run_scaling_bench({{16, 16}, {32, 32}}, bad_repeats),
               ConfigError);

  BenchOptions bad_frames = fast_options();
  bad_frames.source_frames = 2;
  EXPECT_THROW(run_scaling_bench({{16, 16}, {32, 32}}, bad_frames),
               ConfigError);
}

// Sizes here are too small for stable timing, so the structural fields are
// asserted and the band verdict is not.
TEST(ScalingBench, ReportsRowsRatiosAndChecksums) {
  BenchOptions opts = fast_options();
  opts.level = 2;
  opts.repeats = 1;
  opts.seed = 5;
  opts.source_frames = 9;
  BenchReport report = run_scaling_bench({{16, 16}, {32, 32}}, opts);

  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.level, 2);
  EXPECT_EQ(report.rows[0].pixels, 256u);
  EXPECT_EQ(report.rows[1].pixels, 1024u);
  EXPECT_EQ(report.rows[0].source_frames, 9u);
  EXPECT_EQ(report.rows[0].inner_iterations, 1);
  EXPECT_DOUBLE_EQ(report.rows[0].pixel_ratio, 0.0);
  EXPECT_DOUBLE_EQ(report.rows[1].pixel_ratio, 4.0);
  EXPECT_DOUBLE_EQ(report.rows[1].band_low, 2.5);
  EXPECT_DOUBLE_EQ(report.rows[1].band_high, 6.0);
  EXPECT_GE(report.rows[0].median_seconds, 0.0);
  EXPECT_NE(report.rows[0].checksum, 0u);
  EXPECT_NE(report.rows[0].checksum, report.rows[1].checksum);
}

TEST(ScalingBench, ChecksumsAreSeedStable) {
  BenchOptions opts = fast_options();
  opts.level = 2;
  opts.repeats = 2;
  opts.seed = 31;
  opts.source_frames = 9;
  BenchReport a = run_scaling_bench({{16, 16}, {24, 24}}, opts);
  BenchReport b = run_scaling_bench({{16, 16}, {24, 24}}, opts);
  EXPECT_EQ(a.rows[0].checksum, b.rows[0].checksum);
  EXPECT_EQ(a.rows[1].checksum, b.rows[1].checksum);

  opts.seed = 32;
  BenchReport c = run_scaling_bench({{16, 16}, {24, 24}}, opts);
  EXPECT_NE(a.rows[0].checksum, c.rows[0].checksum);
}

TEST(ScalingBench, ChecksumsIgnoreRepeatAndSampleSettings) {
  BenchOptions one = fast_options();
  one.repeats = 1;
  one.seed = 77;
  one.source_frames = 5;
  BenchOptions nine = one;
  nine.repeats = 9;
  nine.min_sample_seconds = 0.002;
  BenchReport a = run_scaling_bench({{16, 16}, {24, 24}}, one);
  BenchReport b = run_scaling_bench({{16, 16}, {24, 24}}, nine);
  EXPECT_EQ(a.rows[0].checksum, b.rows[0].checksum);
  EXPECT_EQ(a.rows[1].checksum, b.rows[1].checksum);
}

TEST(ScalingBench, BandScalesWithPixelStep) {
  BenchOptions opts = fast_options();
  opts.level = 1;
  opts.repeats = 1;
  opts.source_frames = 3;
  // 16x16 -> 16x32 doubles the pixels: the band halves from the 4x contract.
  BenchReport report = run_scaling_bench({{16, 16}, {16, 32}}, opts);
  EXPECT_DOUBLE_EQ(report.rows[1].pixel_ratio, 2.0);
  EXPECT_DOUBLE_EQ(report.rows[1].band_low, 1.25);
  EXPECT_DOUBLE_EQ(report.rows[1].band_high, 3.0);
}

TEST(ScalingBench, PoolGrowsToMinimumBytes) {
  BenchOptions opts = fast_options();
  opts.level = 1;
  opts.repeats = 1;
  opts.source_frames = 3;
  opts.min_pool_bytes = 1u << 20;
  // 64x64 single-channel frames are 4096 bytes, so a 1 MiB floor needs 256.
  BenchReport report = run_scaling_bench({{64, 64}, {128, 64}}, opts);
  EXPECT_EQ(report.rows[0].source_frames, 256u);
  EXPECT_EQ(report.rows[1].source_frames, 128u);
}

TEST(ScalingBench, SampleFloorAddsInnerIterations) {
  BenchOptions opts = fast_options();
  opts.level = 1;
  opts.repeats = 1;
  opts.source_frames = 3;
  opts.min_sample_seconds = 0.005;
  BenchReport report = run_scaling_bench({{16, 16}, {16, 32}}, opts);
  EXPECT_GE(report.rows[0].inner_iterations, 2);
  EXPECT_LE(report.rows[0].inner_iterations, 4096);
}

}  // namespace
}  // namespace bgmode
