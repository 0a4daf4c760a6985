#include "csmarr/chow.hpp"
#include "csmarr/verify.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace csmarr {
namespace {

// Closed-form coefficients used as oracles: 1/(1+X) = Σ (-1)^k X^k and
// 1/(1+X)^2 = Σ (-1)^k (k+1) X^k.
Rational inv1(std::size_t k) { return k % 2 ? -1 : 1; }
Rational inv2(std::size_t k) { return inv1(k) * static_cast<long>(k + 1); }

FormalClass series_csm_oracle(int m, std::size_t n) {
  FormalClass f(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational c = k == 0 ? 1 : 0;
    if (k >= 1) c -= Rational(m) * inv1(k - 1);
    if (k >= 2) c += Rational(m - 1) * inv2(k - 2);
    f += FormalClass::power(n, k, c);
  }
  return f;
}

FormalClass series_closed_oracle(int m, std::size_t n) {
  FormalClass f(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational c = inv2(k);
    if (k >= 1) c -= Rational(m - 2) * inv2(k - 1);
    f += FormalClass::power(n, k, c);
  }
  return f;
}

TEST(Series, MulAndInv) {
  EXPECT_EQ(FormalClass(2, {1, 1}) * FormalClass(2, {1, -1}), FormalClass(2, {1, 0, -1}));
  EXPECT_EQ(series_inv(FormalClass(2, {1, 1})), FormalClass(2, {1, -1, 1}));
  EXPECT_EQ(series_inv(FormalClass(3, {1, -1})), FormalClass(3, {1, 1, 1, 1}));
  EXPECT_THROW(series_inv(FormalClass(2, {0, 1})), std::domain_error);
  EXPECT_THROW(FormalClass(2) * FormalClass(3), std::invalid_argument);
}

TEST(Series, InverseIsTwoSided) {
  FormalClass f(5, {3, Rational(1, 2), -7, 0, 2, 11});
  EXPECT_EQ(f * series_inv(f), FormalClass::one(5));
  EXPECT_EQ(series_inv(series_inv(f)), f);
}

TEST(HypersurfaceSeries, Examples) {
  auto r = verify_hypersurface_series(3, 2);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.csm_side, FormalClass(2, {1, -3, 5}));
  EXPECT_EQ(r.closed_form, FormalClass(2, {1, -3, 5}));

  auto r2 = verify_hypersurface_series(2, 2);
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.csm_side, FormalClass(2, {1, -2, 3}));

  auto r0 = verify_hypersurface_series(2, 0);
  EXPECT_TRUE(r0.equal);
  EXPECT_EQ(r0.csm_side, FormalClass::one(0));
  EXPECT_THROW(verify_hypersurface_series(1, 2), std::invalid_argument);
}

TEST(HypersurfaceSeries, MatchesClosedFormOracles) {
  for (int m = 2; m <= 10; ++m)
    for (std::size_t n = 0; n <= 6; ++n) {
      auto r = verify_hypersurface_series(m, n);
      EXPECT_EQ(r.csm_side, series_csm_oracle(m, n)) << m << "," << n;
      EXPECT_EQ(r.closed_form, series_closed_oracle(m, n)) << m << "," << n;
    }
}

TEST(KoszulSeries, Examples) {
  auto r = verify_koszul_series(3, 2);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.jacobian_class, FormalClass(2, {1, 0, -4}));

  auto r2 = verify_koszul_series(2, 2);
  EXPECT_TRUE(r2.equal);
  // (1+2X)/(1+X)^2 = (1+2X)(1-2X+3X^2)
  EXPECT_EQ(r2.jacobian_class, FormalClass(2, {1, 0, -1}));

  auto r0 = verify_koszul_series(2, 0);
  EXPECT_TRUE(r0.equal);
  EXPECT_EQ(r0.jacobian_class, FormalClass::one(0));
}

TEST(KoszulSeries, TangentClassCancels) {
  // c(TP^4) = (1+X)^5 as a nontrivial unit
  FormalClass tangent = FormalClass::one(4);
  for (int i = 0; i < 5; ++i) tangent = tangent * FormalClass::linear(4, 1);
  for (int m = 2; m <= 6; ++m) {
    auto r = verify_koszul_series(m, 4, tangent);
    EXPECT_TRUE(r.equal) << m;
    EXPECT_EQ(r.derivation_class, tangent * verify_hypersurface_series(m, 4).closed_form);
  }
}

TEST(Projection, Examples) {
  auto r = projection_formula_examples(1, 1, 2);
  EXPECT_EQ(r.ox_pushforward, FormalClass(2, {0, 1}));
  EXPECT_EQ(r.ox_capped, FormalClass(2, {0, 1, 1}));
  EXPECT_FALSE(r.ox_equal);
  EXPECT_EQ(r.oy_pushforward, FormalClass(2, {0, 1, 1}));
  EXPECT_TRUE(r.oy_equal);

  auto r2 = projection_formula_examples(2, 1, 2);
  EXPECT_FALSE(r2.ox_equal);
  EXPECT_TRUE(r2.oy_equal);
  EXPECT_EQ(r2.ox_capped, FormalClass(2, {0, 2, 4}));

  auto r3 = projection_formula_examples(1, 1, 3);
  EXPECT_FALSE(r3.ox_equal);
  EXPECT_TRUE(r3.oy_equal);
  EXPECT_EQ(r3.oy_capped, FormalClass(3, {0, 1, 1, 1}));

  EXPECT_THROW(projection_formula_examples(0, 1, 2), std::invalid_argument);
  EXPECT_THROW(projection_formula_examples(1, 1, 1), std::invalid_argument);
}

TEST(BlowupRing, IntersectionForm) {
  std::vector<std::string> labels{"p", "q"};
  BlowupSurfaceClass h(labels), e1(labels), e2(labels);
  h.set_hyperplane(1);
  e1.set_exceptional(0, 1);
  e2.set_exceptional(1, 1);
  EXPECT_EQ((h * h).point(), Rational(1));
  EXPECT_EQ((e1 * e1).point(), Rational(-1));
  EXPECT_EQ((h * e1).point(), Rational(0));
  EXPECT_EQ((e1 * e2).point(), Rational(0));
  EXPECT_EQ((h * h * h).point(), Rational(0));  // no classes beyond points

  BlowupSurfaceClass u = BlowupSurfaceClass::one(labels) + h + e1;
  u.set_point(5);
  EXPECT_EQ(u * u.inverse(), BlowupSurfaceClass::one(labels));
}

TEST(BlowupChernSnc, ThreeConcurrentLines) {
  auto c = blowup_chern_snc(testing::three_concurrent());
  ASSERT_EQ(c.num_points(), 1u);
  EXPECT_EQ(c.fundamental(), Rational(1));
  EXPECT_EQ(c.hyperplane(), Rational(0));
  EXPECT_EQ(c.exceptional(0), Rational(1));
  EXPECT_EQ(c.point(), Rational(-1));
  EXPECT_EQ(c.to_string(), "1[V^] + E[p0.1.2] - pt");
  EXPECT_EQ(pushforward(c), (CsmClass{{1, 0, -1}}));
}

TEST(BlowupChernSnc, NoTriplePoints) {
  auto c = blowup_chern_snc(testing::boolean_triangle());
  EXPECT_EQ(c.num_points(), 0u);
  EXPECT_EQ(pushforward(c), (CsmClass{{1, 0, 0}}));
  EXPECT_EQ(pushforward(blowup_chern_snc(testing::single_line())), (CsmClass{{1, 2, 1}}));
  EXPECT_THROW(blowup_chern_snc(testing::tetrahedron()), std::invalid_argument);
}

TEST(Pushforward, Examples) {
  std::vector<std::string> labels{"p"};
  BlowupSurfaceClass c = BlowupSurfaceClass::one(labels);
  EXPECT_EQ(pushforward(c), (CsmClass{{1, 0, 0}}));
  c.set_exceptional(0, 1).set_point(-1);
  EXPECT_EQ(pushforward(c), (CsmClass{{1, 0, -1}}));
  BlowupSurfaceClass pts(labels);
  pts.set_point(3);
  EXPECT_EQ(pushforward(pts), (CsmClass{{0, 0, 3}}));
  BlowupSurfaceClass half(labels);
  half.set_point(Rational(1, 2));
  EXPECT_THROW(pushforward(half), std::logic_error);  // non-integral classes are internal errors
}

TEST(TjurinaRoute, Examples) {
  EXPECT_EQ(tjurina_route(testing::three_concurrent()), (CsmClass{{1, 0, -1}}));
  EXPECT_EQ(tjurina_route(testing::generic4()), (CsmClass{{1, -1, 1}}));
  EXPECT_EQ(tjurina_route(testing::two_lines()), (CsmClass{{1, 1, 0}}));
  EXPECT_EQ(chern_class_free(testing::two_lines()), (CsmClass{{1, 1, 0}}));
}

TEST(VerifyRoutes, Examples) {
  auto v = verify_routes(testing::three_concurrent());
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.computed_routes().size(), 4u);
  for (const auto& [name, c] : v.routes) EXPECT_EQ(*c, (CsmClass{{1, 0, -1}})) << name;

  auto g = verify_routes(testing::generic4());
  EXPECT_TRUE(g.pass);
  EXPECT_FALSE(g.routes.at(kRouteExponentProduct));
  EXPECT_EQ(g.computed_routes().size(), 3u);
  EXPECT_EQ(*g.routes.at(kRouteTjurina), (CsmClass{{1, -1, 1}}));

  auto t = verify_routes(testing::tetrahedron());
  EXPECT_TRUE(t.pass);
  EXPECT_EQ(t.computed_routes(), (std::vector<std::string>{kRouteLatticeCsm, kRouteExponentProduct}));
  EXPECT_EQ(*t.routes.at(kRouteExponentProduct), (CsmClass{{1, 0, 0, 0}}));
}

}  // namespace
}  // namespace csmarr
