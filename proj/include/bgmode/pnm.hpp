#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"

namespace bgmode {

namespace detail {

struct PnmParser {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(what + " (byte offset " + std::to_string(pos) + ")");
  }

  bool at_end() const { return pos >= bytes.size(); }

  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  static bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

  // Header fields are separated by whitespace; '#' starts a comment that runs
  // to the end of its line and counts as a separator.
  void skip_separators() {
    bool any = false;
    while (!at_end()) {
      const std::uint8_t c = bytes[pos];
      if (is_space(c)) {
        ++pos;
        any = true;
      } else if (c == '#') {
        while (!at_end() && bytes[pos] != '\n') {
          ++pos;
        }
        any = true;
      } else {
        break;
      }
    }
    if (!any) {
      fail("expected whitespace between header fields");
    }
  }

  std::size_t parse_number(const char* field, std::size_t max_value) {
    if (at_end() || !is_digit(bytes[pos])) {
      fail(std::string("expected decimal ") + field);
    }
    std::size_t value = 0;
    while (!at_end() && is_digit(bytes[pos])) {
      value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
      if (value > max_value) {
        fail(std::string(field) + " exceeds maximum " +
             std::to_string(max_value));
      }
      ++pos;
    }
    return value;
  }
};

}  // namespace detail

// Decodes a binary PGM (P5, grayscale) or PPM (P6, RGB) byte stream with
// maxval 255. Header comments are accepted; exactly one whitespace byte must
// separate the maxval from the pixel payload, and trailing bytes are an
// error.
inline Frame decode_pnm(std::span<const std::uint8_t> bytes) {
  detail::PnmParser p{bytes, 0};
  if (bytes.size() < 2) {
    p.fail("truncated header: missing magic number");
  }
  int channels = 0;
  if (bytes[0] == 'P' && bytes[1] == '5') {
    channels = 1;
  } else if (bytes[0] == 'P' && bytes[1] == '6') {
    channels = 3;
  } else {
    p.fail("unsupported magic number, want P5 or P6");
  }
  p.pos = 2;

  p.skip_separators();
  const std::size_t width = p.parse_number("width", Frame::kMaxDimension);
  p.skip_separators();
  const std::size_t height = p.parse_number("height", Frame::kMaxDimension);
  p.skip_separators();
  const std::size_t maxval = p.parse_number("maxval", 65535);
  if (maxval != 255) {
    p.fail("unsupported maxval " + std::to_string(maxval) +
           ", only 255 is supported");
  }
  if (width == 0 || height == 0) {
    p.fail("image dimensions must be positive");
  }

  if (p.at_end() || !detail::PnmParser::is_space(bytes[p.pos])) {
    p.fail("expected a single whitespace byte after maxval");
  }
  ++p.pos;

  const std::size_t expected =
      width * height * static_cast<std::size_t>(channels);
  const std::size_t available = bytes.size() - p.pos;
  if (available < expected) {
    p.fail("truncated pixel data: have " + std::to_string(available) +
           " of " + std::to_string(expected) + " bytes");
  }
  if (available > expected) {
    p.pos += expected;
    p.fail("unexpected trailing data after pixel payload");
  }

  std::vector<std::uint8_t> data(bytes.begin() + static_cast<std::ptrdiff_t>(p.pos),
                                 bytes.end());
  return Frame::from_data(width, height, channels, std::move(data));
}

// Canonical encoding: "P5\n<width> <height>\n255\n" (P6 for RGB) followed by
// the raw payload. Byte-stable across platforms.
inline std::vector<std::uint8_t> encode_pnm(const Frame& frame) {
  std::string header = frame.channels() == 1 ? "P5\n" : "P6\n";
  header += std::to_string(frame.width());
  header += ' ';
  header += std::to_string(frame.height());
  header += "\n255\n";

  std::vector<std::uint8_t> out;
  out.reserve(header.size() + frame.size_bytes());
  out.insert(out.end(), header.begin(), header.end());
  const auto data = frame.data();
  out.insert(out.end(), data.begin(), data.end());
  return out;
}

inline Frame read_frame_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::vector<std::uint8_t> bytes;
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  if (size < 0) {
    throw IoError("cannot determine size of " + path.string());
  }
  bytes.resize(static_cast<std::size_t>(size));
  in.seekg(0, std::ios::beg);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!in) {
    throw IoError("read failure on " + path.string());
  }
  try {
    return decode_pnm(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline void write_frame_file(const Frame& frame,
                             const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_pnm(frame);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("write failure on " + path.string());
  }
}

// Loads every .pgm/.ppm file in a directory as one frame sequence, ordered by
// a bytewise filename sort so the result is locale-independent.
inline FrameSource load_frame_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec) || ec) {
    throw IoError(dir.string() + " is not a readable directory");
  }

  std::vector<std::filesystem::path> paths;
  for (std::filesystem::directory_iterator it(dir, ec), end;
       !ec && it != end; it.increment(ec)) {
    if (!it->is_regular_file(ec)) {
      continue;
    }
    const std::string ext = it->path().extension().string();
    if (ext == ".pgm" || ext == ".ppm") {
      paths.push_back(it->path());
    }
  }
  if (ec) {
    throw IoError("cannot list " + dir.string() + ": " + ec.message());
  }
  std::sort(paths.begin(), paths.end(),
            [](const std::filesystem::path& a, const std::filesystem::path& b) {
              return a.filename().string() < b.filename().string();
            });
  if (paths.empty()) {
    throw EmptyInputError("no .pgm or .ppm files in " + dir.string());
  }

  FrameSource source;
  for (const auto& path : paths) {
    Frame frame = read_frame_file(path);
    try {
      source.push_back(std::move(frame));
    } catch (const DimensionError& e) {
      throw DimensionError(path.string() + ": " + e.what());
    }
  }
  return source;
}

// Writes frames as frame_000.pgm, frame_001.pgm, ... (.ppm for RGB), using
// more digits only when the sequence needs them. Returns the paths written.
inline std::vector<std::filesystem::path> write_frame_dir(
    const FrameSource& source, const std::filesystem::path& dir,
    const std::string& prefix = "frame_") {
  if (source.empty()) {
    throw EmptyInputError("no frames to write");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory " + dir.string() + ": " +
                  ec.message());
  }

  int digits = 1;
  for (std::size_t v = source.size() - 1; v >= 10; v /= 10) {
    ++digits;
  }
  digits = std::max(digits, 3);
  const char* ext = source.channels() == 1 ? ".pgm" : ".ppm";

  std::vector<std::filesystem::path> written;
  written.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    std::ostringstream name;
    name << prefix << std::setw(digits) << std::setfill('0') << i << ext;
    const std::filesystem::path path = dir / name.str();
    write_frame_file(source.at(i), path);
    written.push_back(path);
  }
  return written;
}

}  // namespace bgmode
