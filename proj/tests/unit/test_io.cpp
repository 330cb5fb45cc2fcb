#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"
#include "ldlab/io.hpp"

using namespace ldlab;

TEST(Io, CodeRoundTripProperty) {
  Rng rng(81);
  for (int i = 0; i < gen::kCases; ++i) {
    const LinearCode c = gen::small_code(rng);
    const LinearCode back = parse_code(format_code(c));
    EXPECT_EQ(back.field().order(), c.field().order());
    EXPECT_EQ(back.generator(), c.generator());
  }
}

TEST(Io, CodeWithComments) {
  const LinearCode c = parse_code("# Had(2,2)\n2 4 2\n0 0 1 1  # first\n0 1 0 1\n");
  EXPECT_EQ(c.length(), 4u);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.min_distance(), 2u);
}

TEST(Io, WordRoundTripWithErasures) {
  const Word w{0, 1, kErased, 3};
  EXPECT_EQ(format_word(w), "0 1 * 3");
  EXPECT_EQ(parse_word(format_word(w)), w);
}

TEST(Io, GridRoundTripProperty) {
  Rng rng(82);
  for (int i = 0; i < gen::kCases; ++i) {
    const FieldPtr f = gen::small_field(rng);
    const std::size_t rows = 1 + uniform_below(rng, 5), cols = 1 + uniform_below(rng, 5);
    Grid g = Grid::from_flat(rows, cols, gen::with_erasures(gen::vec(*f, rows * cols, rng), uniform_below(rng, 3), rng));
    EXPECT_EQ(parse_grid(format_grid(g)), g);
  }
}

TEST(Io, ParseErrorsCarryPosition) {
  try {
    parse_code("2 x 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.code(), Errc::kParseError);
  }
  try {
    parse_code("2 4 2\n0 0 1 1\n0 1 q 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_word("0 1 ?"), ParseError);
}

TEST(Io, MissingFile) {
  try {
    read_text_file("/nonexistent/ldlab/code.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kFileNotFound);
  }
}

TEST(Io, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "ldlab_io_test.txt").string();
  const LinearCode h = hadamard(make_field(3), 2);
  write_text_file(path, format_code(h));
  EXPECT_EQ(read_code_file(path).generator(), h.generator());
  std::filesystem::remove(path);
}
