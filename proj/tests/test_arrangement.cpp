#include "csmarr/arrangement.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace csmarr {
namespace {

using testing::x;

TEST(Parse, ThreeConcurrentLines) {
  Arrangement a = parse_arrangement("vars 3\n0 1 0\n0 0 1\n0 1 1\n");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a[0].polynomial(), x(3, 1));
  EXPECT_EQ(a[1].polynomial(), x(3, 2));
  EXPECT_EQ(a[2].polynomial(), x(3, 1) + x(3, 2));
  EXPECT_TRUE(a.warnings().empty());
}

TEST(Parse, CollapsesProportionalFormsWithWarning) {
  Arrangement a = parse_arrangement("vars 3\n1 0 0\n2 0 0\n");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].polynomial(), x(3, 0));
  ASSERT_EQ(a.warnings().size(), 1u);
  EXPECT_NE(a.warnings()[0].find("duplicate"), std::string::npos);
}

TEST(Parse, CanonicalizesFirstNonzeroCoefficient) {
  Arrangement a = parse_arrangement("vars 3\n0 -2 4/3\n");
  EXPECT_EQ(a[0][1], Rational(1));
  EXPECT_EQ(a[0][2], Rational(-2, 3));
  EXPECT_EQ(a[0].pivot(), 1u);
}

TEST(Parse, CommentsNameAndCrlf) {
  Arrangement a = parse_arrangement("# name: demo\r\n# another comment\r\n\r\nvars 2\r\n1 1\r\n1 -1\r\n");
  EXPECT_EQ(a.name(), "demo");
  EXPECT_EQ(a.size(), 2u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_arrangement(text);
    } catch (const InputError& e) {
      return e.line();
    }
    return std::size_t(999);
  };
  EXPECT_EQ(line_of("vars 3\n0 0 0\n"), 2u);
  EXPECT_EQ(line_of("vars 3\n1 0\n"), 2u);
  EXPECT_EQ(line_of("# c\nvars 3\n1 0 0\n1 x 0\n"), 4u);
  EXPECT_EQ(line_of("vars 3\n1 0 1/0\n"), 2u);
  EXPECT_EQ(line_of("vars zero\n"), 1u);
  EXPECT_EQ(line_of("1 0 0\n"), 1u);
  EXPECT_EQ(line_of("# only comments\n"), 0u);
  EXPECT_EQ(line_of("vars 0\n"), 1u);
}

TEST(Render, RoundTrip) {
  Arrangement a = parse_arrangement("# name: r\nvars 3\n2 4 -6\n0 1/2 3\n0 0 5\n");
  std::string text = render_arrangement(a);
  EXPECT_EQ(text, "# name: r\nvars 3\n1 2 -3\n0 1 6\n0 0 1\n");
  EXPECT_EQ(parse_arrangement(text), a);
  EXPECT_EQ(render_arrangement(parse_arrangement(text)), text);
}

TEST(DefiningPolynomial, Examples) {
  EXPECT_EQ(defining_polynomial(testing::three_concurrent()), x(3, 1) * x(3, 2) * (x(3, 1) + x(3, 2)));
  EXPECT_EQ(defining_polynomial(testing::empty_plane()), MultiPoly::constant(3, 1));
  EXPECT_EQ(defining_polynomial(testing::boolean_triangle()), x(3, 0) * x(3, 1) * x(3, 2));
}

TEST(DefiningPolynomial, DuplicatedInputEqualsReduction) {
  Arrangement dup = parse_arrangement("vars 3\n1 0 0\n0 1 1\n3 0 0\n0 -2 -2\n");
  Arrangement red = parse_arrangement("vars 3\n1 0 0\n0 1 1\n");
  EXPECT_EQ(defining_polynomial(dup), defining_polynomial(red));
  EXPECT_EQ(dup.warnings().size(), 2u);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(testing::boolean_triangle()), 3u);
  EXPECT_TRUE(is_essential(testing::boolean_triangle()));
  EXPECT_EQ(rank(testing::three_concurrent()), 2u);
  EXPECT_FALSE(is_essential(testing::three_concurrent()));
  EXPECT_EQ(rank(testing::empty_plane()), 0u);
}

}  // namespace
}  // namespace csmarr
