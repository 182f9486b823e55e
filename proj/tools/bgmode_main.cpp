// Command-line front end: background generation, foreground extraction,
// synthetic scene construction, accuracy prediction, Monte Carlo validation,
// and a runtime scaling benchmark.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 unreadable or
// malformed data, 3 a validation verdict of FAIL.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgmode/bgmode.hpp"

namespace {

std::string fmt(double value, int precision = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << value;
  return os.str();
}

// Strips trailing slashes so "<dir>.background.pgm" lands next to the
// directory instead of inside it.
std::string trim_dir_spec(std::string dir) {
  while (dir.size() > 1 && dir.back() == '/') {
    dir.pop_back();
  }
  return dir;
}

struct GenerateOptions {
  std::string input_dir;
  std::string output;
  int level = 1;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

int run_generate(const GenerateOptions& opt) {
  bgmode::FrameSource source = bgmode::load_frame_dir(opt.input_dir);

  if (opt.exhaustive) {
    if (source.size() != 3) {
      throw bgmode::DimensionError(
          "--exhaustive needs exactly 3 input frames, found " +
          std::to_string(source.size()) + " in " + opt.input_dir);
    }
    bgmode::Frame background = bgmode::generate_background_exhaustive(
        source.at(0), source.at(1), source.at(2));
    bgmode::write_frame_file(background, opt.output);
    std::cout << "mode=exhaustive\n"
              << "frames_sampled=3\n"
              << "level=1\n"
              << "width=" << background.width() << "\n"
              << "height=" << background.height() << "\n"
              << "channels=" << background.channels() << "\n"
              << "output=" << opt.output << "\n";
    return 0;
  }

  bgmode::PipelineConfig config;
  config.level = opt.level;
  config.seed = opt.seed;
  if (opt.level > config.max_level) {
    config.max_level = opt.level;
    std::cerr << "warning: level " << opt.level
              << " exceeds the usual maximum of 6; accuracy gains above "
                 "level 6 are negligible while cost grows threefold per "
                 "level\n";
  }

  bgmode::PipelineReport report = bgmode::generate_background(source, config);
  for (const std::string& warning : report.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  bgmode::write_frame_file(report.background, opt.output);
  std::cout << "mode=sampled\n"
            << "frames_sampled=" << report.frames_sampled << "\n"
            << "level=" << report.level_used << "\n"
            << "seed=" << report.seed_used << "\n"
            << "width=" << report.background.width() << "\n"
            << "height=" << report.background.height() << "\n"
            << "channels=" << report.background.channels() << "\n"
            << "output=" << opt.output << "\n";
  return 0;
}

struct SubtractOptions {
  std::string frame;
  std::string background;
  std::string output;
  int threshold = 0;
};

int run_subtract(const SubtractOptions& opt) {
  bgmode::Frame frame = bgmode::read_frame_file(opt.frame);
  bgmode::Frame background = bgmode::read_frame_file(opt.background);
  bgmode::SubtractionConfig config;
  config.threshold = opt.threshold;
  bgmode::ForegroundMask mask = bgmode::subtract(frame, background, config);
  bgmode::write_frame_file(bgmode::mask_to_frame(mask), opt.output);
  bgmode::MaskStats stats = bgmode::mask_stats(mask);
  std::cout << "threshold=" << opt.threshold << "\n"
            << "foreground_pixels=" << stats.foreground_pixels << "\n"
            << "background_pixels=" << stats.background_pixels << "\n"
            << "foreground_fraction=" << fmt(stats.foreground_fraction) << "\n"
            << "output=" << opt.output << "\n";
  return 0;
}

struct SynthOptions {
  std::string kind;
  std::string output_dir;
  std::size_t width = 64;
  std::size_t height = 64;
  std::size_t frames = 320;
  double p0 = 0.8;
  std::uint64_t seed = 0;
};

int run_synth(const SynthOptions& opt) {
  const std::string dir = trim_dir_spec(opt.output_dir);

  if (opt.kind == "ramp") {
    bgmode::RampScene scene = bgmode::make_ramp_scene(opt.width, opt.height);
    bgmode::FrameSource frames;
    for (const bgmode::Frame& frame : scene.frames) {
      frames.push_back(frame);
    }
    bgmode::write_frame_dir(frames, dir);
    const std::string background_path = dir + ".background.ppm";
    bgmode::write_frame_file(scene.background, background_path);
    std::cout << "kind=ramp\n"
              << "frames_written=" << frames.size() << "\n"
              << "width=" << opt.width << "\n"
              << "height=" << opt.height << "\n"
              << "channels=3\n"
              << "frame_dir=" << dir << "\n"
              << "background=" << background_path << "\n";
    return 0;
  }

  bgmode::MajorityScene scene = bgmode::make_majority_scene(
      opt.width, opt.height, opt.frames, opt.p0, opt.seed);
  bgmode::write_frame_dir(scene.frames, dir);
  const std::string background_path = dir + ".background.pgm";
  bgmode::write_frame_file(scene.background, background_path);
  std::cout << "kind=majority\n"
            << "frames_written=" << scene.frames.size() << "\n"
            << "width=" << opt.width << "\n"
            << "height=" << opt.height << "\n"
            << "channels=1\n"
            << "p0_target=" << fmt(scene.p0_target) << "\n"
            << "modal_fraction=" << fmt(scene.modal_fraction) << "\n"
            << "background_per_pixel=" << scene.background_per_pixel << "\n"
            << "seed=" << opt.seed << "\n"
            << "frame_dir=" << dir << "\n"
            << "background=" << background_path << "\n";
  return 0;
}

struct TableOptions {
  std::vector<double> p0_values = {0.50, 0.55, 0.60, 0.65, 0.70, 0.75,
                                   0.80, 0.85, 0.90, 0.95, 1.00};
  int levels = 6;
};

int run_table(const TableOptions& opt) {
  bgmode::AccuracyTable table = bgmode::build_table(opt.p0_values, opt.levels);
  for (const std::vector<double>& row : table.cells) {
    std::cout << "p0=" << fmt(row[0]);
    for (int l = 1; l <= table.levels; ++l) {
      std::cout << " l" << l << "=" << fmt(row[static_cast<std::size_t>(l)]);
    }
    std::cout << "\n";
  }
  return 0;
}

struct ValidateOptions {
  double p0 = 0.8;
  int level = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t width = 64;
  std::size_t height = 64;
  std::size_t frames = bgmode::McOptions{}.frame_count;
};

int run_validate(const ValidateOptions& opt) {
  bgmode::McOptions mc;
  mc.width = opt.width;
  mc.height = opt.height;
  mc.frame_count = opt.frames;
  bgmode::McReport report =
      bgmode::monte_carlo_validate(opt.p0, opt.level, opt.trials, opt.seed, mc);
  std::cout << "p0_target=" << fmt(report.p0_target) << "\n"
            << "p0_realized=" << fmt(report.p0_realized) << "\n"
            << "level=" << report.level << "\n"
            << "trials=" << report.trials << "\n"
            << "pixels_checked=" << report.pixels_checked << "\n"
            << "empirical=" << fmt(report.empirical_accuracy) << "\n"
            << "predicted=" << fmt(report.predicted) << "\n"
            << "sigma=" << fmt(report.sigma, 8) << "\n"
            << "max_deviation=" << fmt(4.0 * report.sigma, 8) << "\n"
            << "verdict=" << (report.within_tolerance ? "PASS" : "FAIL")
            << "\n";
  return report.within_tolerance ? 0 : 3;
}

struct BenchCliOptions {
  std::vector<std::string> sizes;
  int level = 3;
  std::uint64_t seed = 0;
  int repeats = 3;
  std::size_t frames = 27;
};

bgmode::BenchSize parse_size_spec(const std::string& spec) {
  const std::size_t x = spec.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= spec.size()) {
    throw bgmode::ConfigError("size must look like <width>x<height>, got '" +
                              spec + "'");
  }
  bgmode::BenchSize size;
  try {
    std::size_t consumed = 0;
    size.width = std::stoull(spec.substr(0, x), &consumed);
    if (consumed != x) {
      throw std::invalid_argument(spec);
    }
    size.height = std::stoull(spec.substr(x + 1), &consumed);
    if (consumed != spec.size() - x - 1) {
      throw std::invalid_argument(spec);
    }
  } catch (const std::exception&) {
    throw bgmode::ConfigError("size must look like <width>x<height>, got '" +
                              spec + "'");
  }
  return size;
}

int run_bench(const BenchCliOptions& opt) {
  std::vector<bgmode::BenchSize> sizes;
  sizes.reserve(opt.sizes.size());
  for (const std::string& spec : opt.sizes) {
    sizes.push_back(parse_size_spec(spec));
  }

  bgmode::BenchOptions options;
  options.level = opt.level;
  options.seed = opt.seed;
  options.repeats = opt.repeats;
  options.source_frames = opt.frames;
  bgmode::BenchReport report = bgmode::run_scaling_bench(sizes, options);

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const bgmode::BenchRow& row = report.rows[i];
    std::cout << "size=" << row.width << "x" << row.height
              << " pixels=" << row.pixels
              << " frames=" << row.source_frames
              << " iterations=" << row.inner_iterations
              << " median_seconds=" << fmt(row.median_seconds)
              << " checksum=" << row.checksum;
    if (i > 0) {
      std::cout << " pixel_ratio=" << fmt(row.pixel_ratio)
                << " time_ratio=" << fmt(row.time_ratio)
                << " band_low=" << fmt(row.band_low)
                << " band_high=" << fmt(row.band_high)
                << " within_band=" << (row.within_band ? 1 : 0);
    }
    std::cout << "\n";
  }
  std::cout << "level=" << report.level << "\n"
            << "verdict=" << (report.all_within_band ? "PASS" : "FAIL")
            << "\n";
  return report.all_within_band ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static background estimation by hierarchical bitwise "
               "majority voting over sampled frames"};
  app.require_subcommand(1);

  GenerateOptions generate_opt;
  CLI::App* generate = app.add_subcommand(
      "generate", "Estimate the background of a frame directory");
  generate->add_option("-i,--input", generate_opt.input_dir,
                       "Directory of .pgm/.ppm frames")
      ->required();
  generate->add_option("-o,--output", generate_opt.output,
                       "Output image path")
      ->required();
  generate->add_option("-l,--level", generate_opt.level,
                       "Voting depth (3^level frame draws)");
  generate->add_option("-s,--seed", generate_opt.seed, "Sampling seed");
  generate->add_flag("--exhaustive", generate_opt.exhaustive,
                     "Vote once over exactly 3 input frames, no sampling");

  SubtractOptions subtract_opt;
  CLI::App* subtract = app.add_subcommand(
      "subtract", "Extract a foreground mask from a frame");
  subtract->add_option("-f,--frame", subtract_opt.frame, "Input frame")
      ->required();
  subtract->add_option("-b,--background", subtract_opt.background,
                       "Background image")
      ->required();
  subtract->add_option("-o,--output", subtract_opt.output,
                       "Output mask path (PGM)")
      ->required();
  subtract->add_option("-t,--threshold", subtract_opt.threshold,
                       "Per-pixel difference threshold, mask is strict >");

  SynthOptions synth_opt;
  CLI::App* synth = app.add_subcommand(
      "synth", "Write a synthetic frame sequence with a known background");
  synth->add_option("-k,--kind", synth_opt.kind, "Scene kind")
      ->required()
      ->check(CLI::IsMember({"ramp", "majority"}));
  synth->add_option("-o,--output", synth_opt.output_dir,
                    "Frame directory to create; the true background is "
                    "written next to it as <dir>.background.pgm/.ppm")
      ->required();
  synth->add_option("--width", synth_opt.width, "Frame width");
  synth->add_option("--height", synth_opt.height, "Frame height");
  synth->add_option("--frames", synth_opt.frames,
                    "Frame count (majority scenes)");
  synth->add_option("--p0", synth_opt.p0,
                    "Background fraction per pixel (majority scenes)");
  synth->add_option("-s,--seed", synth_opt.seed, "Scene seed");

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "Print predicted accuracy per starting probability and level");
  table->add_option("--p0", table_opt.p0_values,
                    "Starting probabilities (comma separated)")
      ->delimiter(',');
  table->add_option("--levels", table_opt.levels, "Number of voting levels");

  ValidateOptions validate_opt;
  CLI::App* validate = app.add_subcommand(
      "validate",
      "Check the accuracy prediction against simulated scenes");
  validate->add_option("--p0", validate_opt.p0,
                       "Per-pixel background fraction")
      ->required();
  validate->add_option("-l,--level", validate_opt.level, "Voting depth")
      ->required();
  validate->add_option("--trials", validate_opt.trials, "Scenes to simulate");
  validate->add_option("-s,--seed", validate_opt.seed, "Simulation seed");
  validate->add_option("--width", validate_opt.width, "Scene width");
  validate->add_option("--height", validate_opt.height, "Scene height");
  validate->add_option("--frames", validate_opt.frames,
                       "Frames per simulated scene");

  BenchCliOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Measure how runtime scales with image size");
  bench->add_option("--sizes", bench_opt.sizes,
                    "Image sizes as <width>x<height> (comma separated, "
                    "increasing)")
      ->required()
      ->delimiter(',');
  bench->add_option("-l,--level", bench_opt.level, "Voting depth");
  bench->add_option("-s,--seed", bench_opt.seed, "Frame content seed");
  bench->add_option("--repeats", bench_opt.repeats,
                    "Timed repetitions per size (median is reported)");
  bench->add_option("--frames", bench_opt.frames, "Source frames per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (generate->parsed()) {
      return run_generate(generate_opt);
    }
    if (subtract->parsed()) {
      return run_subtract(subtract_opt);
    }
    if (synth->parsed()) {
      return run_synth(synth_opt);
    }
    if (table->parsed()) {
      return run_table(table_opt);
    }
    if (validate->parsed()) {
      return run_validate(validate_opt);
    }
    if (bench->parsed()) {
      return run_bench(bench_opt);
    }
  } catch (const bgmode::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bgmode::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bgmode::ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bgmode::AssumptionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bgmode::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
