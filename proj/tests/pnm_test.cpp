#include "bgmode/pnm.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "bgmode/errors.hpp"
#include "bgmode/frame.hpp"
#include "cli_util.hpp"

namespace bgmode {
namespace {

std::vector<std::uint8_t> bytes_of(const std::string& text) {
  return std::vector<std::uint8_t>(text.begin(), text.end());
}

TEST(PnmEncode, CanonicalGrayHeader) {
  Frame f(3, 2, 1);
  std::uint8_t v = 10;
  for (auto& b : f.data()) {
    b = v++;
  }
  const std::vector<std::uint8_t> encoded = encode_pnm(f);
  const std::string expected_header = "P5\n3 2\n255\n";
  ASSERT_EQ(encoded.size(), expected_header.size() + 6);
  EXPECT_TRUE(std::equal(expected_header.begin(), expected_header.end(),
                         encoded.begin()));
  EXPECT_EQ(encoded[expected_header.size()], 10);
  EXPECT_EQ(encoded.back(), 15);
}

TEST(PnmEncode, CanonicalColorHeader) {
  Frame f(2, 1, 3);
  const std::vector<std::uint8_t> encoded = encode_pnm(f);
  const std::string expected_header = "P6\n2 1\n255\n";
  ASSERT_GE(encoded.size(), expected_header.size());
  EXPECT_TRUE(std::equal(expected_header.begin(), expected_header.end(),
                         encoded.begin()));
  EXPECT_EQ(encoded.size(), expected_header.size() + 6);
}

TEST(PnmRoundTrip, GrayAndColor) {
  Frame gray(5, 4, 1);
  std::uint8_t v = 0;
  for (auto& b : gray.data()) {
    b = v;
    v = static_cast<std::uint8_t>(v + 37);
  }
  EXPECT_EQ(decode_pnm(encode_pnm(gray)), gray);

  Frame color(4, 3, 3);
  for (auto& b : color.data()) {
    b = v;
    v = static_cast<std::uint8_t>(v + 41);
  }
  EXPECT_EQ(decode_pnm(encode_pnm(color)), color);
}

TEST(PnmDecode, AcceptsHeaderComments) {
  const std::string text =
      "P5\n# a comment line\n3 # width then height\n2\n# maxval next\n255\n"
      "abcdef";
  Frame f = decode_pnm(bytes_of(text));
  EXPECT_EQ(f.width(), 3u);
  EXPECT_EQ(f.height(), 2u);
  EXPECT_EQ(f.at(0, 0), 'a');
  EXPECT_EQ(f.at(1, 2), 'f');
}

TEST(PnmDecode, AcceptsCrLfAndExtraSpaces) {
  const std::string text = "P5\r\n  3\t2 \r\n255\n" + std::string("abcdef");
  EXPECT_EQ(decode_pnm(bytes_of(text)).width(), 3u);
}

TEST(PnmDecode, RejectsWrongMagic) {
  EXPECT_THROW(decode_pnm(bytes_of("P4\n3 2\n255\nabcdef")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P7\n3 2\n255\nabcdef")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("XX\n3 2\n255\nabcdef")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P")), FormatError);
  EXPECT_THROW(decode_pnm({}), FormatError);
}

TEST(PnmDecode, RejectsBadMaxval) {
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n65535\n" +
                                   std::string(12, 'x'))),
               FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n254\nabcdef")), FormatError);
}

TEST(PnmDecode, RejectsZeroDimensions) {
  EXPECT_THROW(decode_pnm(bytes_of("P5\n0 2\n255\n")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 0\n255\n")), FormatError);
}

TEST(PnmDecode, RejectsTruncatedPayload) {
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n255\nabcde")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n255\n")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n255")), FormatError);
}

TEST(PnmDecode, RejectsTrailingBytes) {
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 2\n255\nabcdefg")), FormatError);
}

TEST(PnmDecode, RejectsNonNumericHeader) {
  EXPECT_THROW(decode_pnm(bytes_of("P5\nww 2\n255\nabcdef")), FormatError);
  EXPECT_THROW(decode_pnm(bytes_of("P5\n3 hh\n255\nabcdef")), FormatError);
}

TEST(PnmDecode, ErrorsCarryByteOffsets) {
  try {
    decode_pnm(bytes_of("P5\n3 2\n254\nabcdef"));
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte offset"), std::string::npos);
  }
}

// The payload begins exactly one byte after the maxval token; a payload whose
// first byte is itself whitespace must survive the round trip.
TEST(PnmDecode, SingleSeparatorKeepsWhitespacePayloadIntact) {
  Frame f(3, 2, 1, ' ');
  Frame back = decode_pnm(encode_pnm(f));
  EXPECT_EQ(back, f);
}

TEST(PnmFiles, WriteReadRoundTrip) {
  cli_util::TempDir tmp;
  Frame f(6, 5, 3);
  std::uint8_t v = 3;
  for (auto& b : f.data()) {
    b = v;
    v = static_cast<std::uint8_t>(v + 29);
  }
  const std::string path = tmp.str("image.ppm");
  write_frame_file(f, path);
  EXPECT_EQ(read_frame_file(path), f);
}

TEST(PnmFiles, MissingFileIsIoError) {
  cli_util::TempDir tmp;
  EXPECT_THROW(read_frame_file(tmp.str("absent.pgm")), IoError);
}

TEST(PnmFiles, FormatErrorNamesTheFile) {
  cli_util::TempDir tmp;
  const std::string path = tmp.str("broken.pgm");
  std::ofstream(path, std::ios::binary) << "P5\n3 2\n254\nabcdef";
  try {
    read_frame_file(path);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.pgm"), std::string::npos);
  }
}

TEST(FrameDir, WriteProducesPaddedNamesAndLoadRestoresOrder) {
  cli_util::TempDir tmp;
  FrameSource source;
  for (int i = 0; i < 4; ++i) {
    source.push_back(Frame(3, 3, 1, static_cast<std::uint8_t>(i * 10)));
  }
  const auto dir = tmp.path() / "frames";
  const auto written = write_frame_dir(source, dir);
  ASSERT_EQ(written.size(), 4u);
  EXPECT_EQ(written[0].filename().string(), "frame_000.pgm");
  EXPECT_EQ(written[3].filename().string(), "frame_003.pgm");

  FrameSource loaded = load_frame_dir(dir);
  ASSERT_EQ(loaded.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(loaded.at(i), source.at(i));
  }
}

TEST(FrameDir, ColorFramesGetPpmExtension) {
  cli_util::TempDir tmp;
  FrameSource source;
  source.push_back(Frame(3, 3, 3, 1));
  const auto written = write_frame_dir(source, tmp.path() / "rgb");
  ASSERT_EQ(written.size(), 1u);
  EXPECT_EQ(written[0].extension().string(), ".ppm");
}

TEST(FrameDir, LoadSortsBytewise) {
  cli_util::TempDir tmp;
  const auto dir = tmp.path() / "frames";
  std::filesystem::create_directories(dir);
  // 'B' (0x42) sorts before 'a' (0x61) bytewise, regardless of locale.
  write_frame_file(Frame(2, 2, 1, 1), (dir / "a.pgm").string());
  write_frame_file(Frame(2, 2, 1, 2), (dir / "B.pgm").string());
  write_frame_file(Frame(2, 2, 1, 3), (dir / "c.pgm").string());
  FrameSource loaded = load_frame_dir(dir);
  ASSERT_EQ(loaded.size(), 3u);
  EXPECT_EQ(loaded.at(0).data()[0], 2);
  EXPECT_EQ(loaded.at(1).data()[0], 1);
  EXPECT_EQ(loaded.at(2).data()[0], 3);
}

TEST(FrameDir, IgnoresOtherExtensions) {
  cli_util::TempDir tmp;
  const auto dir = tmp.path() / "frames";
  std::filesystem::create_directories(dir);
  write_frame_file(Frame(2, 2, 1, 9), (dir / "keep.pgm").string());
  std::ofstream(dir / "notes.txt") << "not an image";
  std::ofstream(dir / "image.png") << "also skipped";
  FrameSource loaded = load_frame_dir(dir);
  EXPECT_EQ(loaded.size(), 1u);
}

TEST(FrameDir, EmptyDirectoryIsEmptyInput) {
  cli_util::TempDir tmp;
  const auto dir = tmp.path() / "nothing";
  std::filesystem::create_directories(dir);
  EXPECT_THROW(load_frame_dir(dir), EmptyInputError);
}

TEST(FrameDir, MissingDirectoryIsIoError) {
  cli_util::TempDir tmp;
  EXPECT_THROW(load_frame_dir(tmp.path() / "absent"), IoError);
}

TEST(FrameDir, MixedShapesNameTheOffendingFile) {
  cli_util::TempDir tmp;
  const auto dir = tmp.path() / "frames";
  std::filesystem::create_directories(dir);
  write_frame_file(Frame(2, 2, 1, 1), (dir / "a_first.pgm").string());
  write_frame_file(Frame(3, 2, 1, 2), (dir / "b_second.pgm").string());
  try {
    load_frame_dir(dir);
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("b_second.pgm"), std::string::npos);
  }
}

TEST(FrameDir, WriteRejectsEmptySource) {
  cli_util::TempDir tmp;
  FrameSource empty;
  EXPECT_THROW(write_frame_dir(empty, tmp.path() / "out"), EmptyInputError);
}

}  // namespace
}  // namespace bgmode
