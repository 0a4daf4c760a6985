#include "csmarr/logder.hpp"
#include "csmarr/matrix.hpp"
#include "csmarr/polynomial.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace csmarr {
namespace {

using testing::x;

TEST(Rational, ParsesIntegersAndFractionsInLowestTerms) {
  EXPECT_EQ(*parse_rational("3"), Rational(3));
  EXPECT_EQ(*parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("4/-6"), std::nullopt);
  EXPECT_EQ(parse_rational("1/0"), std::nullopt);
  EXPECT_EQ(parse_rational("1.5"), std::nullopt);
  EXPECT_EQ(parse_rational(""), std::nullopt);
  EXPECT_EQ(parse_rational("+7").value(), Rational(7));
  auto r = *parse_rational("10/4");
  EXPECT_EQ(r.get_num(), 5);
  EXPECT_EQ(r.get_den(), 2);
}

TEST(Monomial, DegreeLexOrder) {
  Monomial a({2, 0, 0}), b({1, 1, 0}), c({0, 0, 3}), d({0, 0, 1});
  EXPECT_GT(a, b);
  EXPECT_GT(c, a);  // higher degree first
  EXPECT_GT(b, d);
  auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_EQ(ms.front(), Monomial({2, 0, 0}));
  EXPECT_EQ(ms.back(), Monomial({0, 0, 2}));
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), std::greater<>()));
  EXPECT_EQ(count_monomials(4, 5), 56u);
}

TEST(PolyMul, Examples) {
  const std::size_t k = 3;
  EXPECT_EQ(poly_mul(x(k, 1), x(k, 2)), MultiPoly::monomial(Monomial({0, 1, 1})));

  MultiPoly expected(k);
  expected.add_term(Monomial({0, 2, 1}), 1);
  expected.add_term(Monomial({0, 1, 2}), 1);
  EXPECT_EQ(poly_mul(x(k, 1) * x(k, 2), x(k, 1) + x(k, 2)), expected);

  EXPECT_TRUE(poly_mul(x(k, 0) + x(k, 1), MultiPoly(k)).is_zero());
}

TEST(PolyMul, DegreeAddsAndMismatchThrows) {
  MultiPoly a = x(3, 0) * x(3, 0) + x(3, 1);
  MultiPoly b = x(3, 2) * x(3, 1) * x(3, 1) - MultiPoly::constant(3, 5);
  EXPECT_EQ(poly_mul(a, b).degree(), a.degree() + b.degree());
  EXPECT_THROW(poly_mul(x(2, 0), x(3, 0)), std::invalid_argument);
}

TEST(PolyPrint, FixedOrder) {
  MultiPoly p = x(3, 1) * x(3, 2) * (x(3, 1) + x(3, 2));
  EXPECT_EQ(p.to_string(), "x1^2*x2 + x1*x2^2");
  MultiPoly q = MultiPoly::constant(3, Rational(-3, 2)) + x(3, 0);
  EXPECT_EQ(q.to_string(), "x0 - 3/2");
}

TEST(ReduceModLinear, Examples) {
  const std::size_t k = 3;
  std::vector<Rational> x1{0, 1, 0}, x1_plus_x2{0, 1, 1}, x2{0, 0, 1};
  EXPECT_TRUE(reduce_mod_linear(x(k, 1) * x(k, 1), x1).is_zero());
  EXPECT_TRUE(reduce_mod_linear(x(k, 1) * x(k, 2) + x(k, 2) * x(k, 2), x1_plus_x2).is_zero());
  EXPECT_EQ(reduce_mod_linear(x(k, 1), x2), x(k, 1));
}

TEST(ReduceModLinear, RemovesPivotVariableAndRejectsZeroForm) {
  const std::size_t k = 3;
  std::vector<Rational> form{0, 2, -3};  // pivot x1
  MultiPoly p = x(k, 1).pow(3) + x(k, 0) * x(k, 1) + x(k, 2);
  MultiPoly r = reduce_mod_linear(p, form);
  for (const auto& [m, c] : r.terms()) EXPECT_EQ(m[1], 0);
  // p - r lies in the ideal of the form
  EXPECT_TRUE(divides(MultiPoly::linear(form), p - r));
  EXPECT_THROW(reduce_mod_linear(p, std::vector<Rational>{0, 0, 0}), std::invalid_argument);
}

TEST(DivideExact, DetectsDivisibility) {
  const std::size_t k = 3;
  MultiPoly q = x(k, 0) * (x(k, 1) - x(k, 2));
  MultiPoly s = x(k, 2) * x(k, 2) + MultiPoly::constant(k, 7) * x(k, 0);
  auto quot = divide_exact(q * s, q);
  ASSERT_TRUE(quot);
  EXPECT_EQ(*quot, s);
  EXPECT_FALSE(divide_exact(q * s + x(k, 1), q));
  EXPECT_THROW(divide_exact(q, MultiPoly(k)), std::invalid_argument);
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(2)).empty());

  auto zero = kernel_basis(QMatrix(1, 3));
  ASSERT_EQ(zero.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(zero[i][j], Rational(i == j ? 1 : 0));

  auto k = kernel_basis(QMatrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (QVector{-1, 1}));  // canonical: 1 in the free column
}

TEST(Rref, RankAndPivots) {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  auto rr = rref(m);
  EXPECT_EQ(rr.rank(), 2u);
  EXPECT_EQ(rr.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rr.reduced(0, 2), Rational(1));
  EXPECT_EQ(rr.reduced(1, 2), Rational(1));
}

TEST(Det, RationalMatrices) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(det(QMatrix::identity(n)), Rational(1));
  EXPECT_EQ(det(QMatrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(det(QMatrix{{Rational(1, 2), 3}, {4, 5}}), Rational(-19, 2));
  EXPECT_THROW(det(QMatrix(2, 3)), std::invalid_argument);
}

TEST(PolyDet, Examples) {
  const std::size_t k = 3;
  PolyMatrix diag{{x(k, 1), MultiPoly(k)}, {MultiPoly(k), x(k, 2)}};
  EXPECT_EQ(poly_det(diag), x(k, 1) * x(k, 2));

  // ⟨x1∂1 + x2∂2, (x1+x2)x2∂2⟩ restricted to the (x1, x2) plane
  PolyMatrix basis{{x(k, 1), x(k, 2)}, {MultiPoly(k), (x(k, 1) + x(k, 2)) * x(k, 2)}};
  EXPECT_EQ(poly_det(basis), x(k, 1) * x(k, 2) * (x(k, 1) + x(k, 2)));

  EXPECT_THROW(poly_det(PolyMatrix{{x(k, 0), x(k, 1)}}), std::invalid_argument);
}

TEST(PolyDet, AgreesWithRationalDetOnConstants) {
  QMatrix q{{2, -1, 0}, {Rational(1, 3), 4, 5}, {7, 0, -2}};
  PolyMatrix p(3, std::vector<MultiPoly>(3, MultiPoly(2)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p[i][j] = MultiPoly::constant(2, q(i, j));
  EXPECT_EQ(poly_det(p), MultiPoly::constant(2, det(q)));
}

TEST(EchelonBasis, MembershipAndSpans) {
  EchelonBasis e(3);
  EXPECT_TRUE(e.insert({1, 1, 0}));
  EXPECT_TRUE(e.insert({0, 1, 1}));
  EXPECT_FALSE(e.insert({1, 2, 1}));
  EXPECT_TRUE(e.contains({2, 0, -2}));
  EXPECT_FALSE(e.contains({0, 0, 1}));
  EXPECT_TRUE(same_span({{1, 1, 0}, {0, 1, 1}}, {{1, 0, -1}, {1, 2, 1}}, 3));
  auto meet = intersect_spans({{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, 3);
  ASSERT_EQ(meet.size(), 1u);
  EXPECT_TRUE(same_span(meet, {{0, 1, 0}}, 3));
}

}  // namespace
}  // namespace csmarr
