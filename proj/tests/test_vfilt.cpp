#include <gtest/gtest.h>

#include "hodgevf/vfilt.hpp"
#include "support.hpp"

using namespace hodgevf;
using hodgevf::testing::kXY;
using hodgevf::testing::kXYZ;
using hodgevf::testing::milnor;
using hodgevf::testing::poly;
using hodgevf::testing::q;

namespace {

std::vector<Rational> jump_values(const JumpList& jl) {
  std::vector<Rational> out;
  for (const Jump& j : jl.jumps) out.push_back(j.alpha);
  return out;
}

IdealHandle ideal_of(std::initializer_list<const char*> texts, const std::vector<std::string>& names) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(poly(t, names));
  return IdealHandle(names.size(), gens);
}

bool same_ideal(const IdealHandle& a, const IdealHandle& b) { return a.contains(b) && b.contains(a); }

}  // namespace

class QuadricV : public ::testing::Test {
 protected:
  VFiltration v{milnor("x^2+y^2+z^2")};
};

TEST_F(QuadricV, LevelsArePowersOfTheMaximalIdeal) {
  auto level = v.level(q(5, 2));
  EXPECT_EQ(level->truncation, 1u);
  EXPECT_EQ(level->threshold, q(5, 2));
  EXPECT_TRUE(same_ideal(level->ideal, ideal_of({"x", "y", "z"}, kXYZ)));
  EXPECT_TRUE(same_ideal(v.level(q(7, 2))->ideal, ideal_of({"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, kXYZ)));
  EXPECT_TRUE(v.level(q(3, 2))->ideal.is_unit());
  // between grid points the ideal is the one at the next grid point
  EXPECT_TRUE(same_ideal(v.level(q(2))->ideal, v.level(q(5, 2))->ideal));
}

TEST_F(QuadricV, MembershipAndOrder) {
  EXPECT_TRUE(v.member(poly("x", kXYZ), q(5, 2)));
  EXPECT_FALSE(v.member(poly("x", kXYZ), q(7, 2)));
  EXPECT_TRUE(v.member(poly("1", kXYZ), v.mlct()));
  EXPECT_EQ(v.order(poly("x", kXYZ), q(4)).value, q(5, 2));
  EXPECT_FALSE(v.order(poly("x", kXYZ), q(4)).above_ceiling);
  EXPECT_EQ(v.order(poly("1", kXYZ), q(4)).value, v.mlct());
}

TEST_F(QuadricV, JumpsAndGradedDimensions) {
  EXPECT_EQ(jump_values(v.jumping_numbers(q(4))), (std::vector<Rational>{q(3, 2), q(5, 2), q(7, 2)}));
  EXPECT_EQ(v.gr_dim_formula(q(7, 2)), 6u);
  EXPECT_EQ(v.gr_dim_direct(q(7, 2)), 6u);
  EXPECT_EQ(v.gr_dim_direct(q(3, 2)), 1u);
  EXPECT_EQ(v.codim(q(7, 2)), 4u);
  EXPECT_EQ(v.codim(q(9, 2)), 10u);
  EXPECT_EQ(v.hodge_floor(), 1u);
}

class FermatCubicV : public ::testing::Test {
 protected:
  VFiltration v{milnor("x^3+y^3+z^3")};
};

TEST_F(FermatCubicV, RemarkMemberships) {
  EXPECT_TRUE(v.member(poly("x^4", kXYZ), q(3)));
  EXPECT_FALSE(v.member(poly("x*(y^3+z^3)", kXYZ), q(3)));
  EXPECT_TRUE(v.member(poly("x*(y^3+z^3)", kXYZ), q(8, 3)));
}

TEST_F(FermatCubicV, OrderOfSquaredPartial) {
  const Polynomial fx2 = v.milnor().partials()[0].pow(2);
  VOrder o = v.order(fx2, q(4));
  EXPECT_EQ(o.value, q(3));
  EXPECT_FALSE(o.above_ceiling);
  EXPECT_TRUE(v.member(fx2, q(3)));
  EXPECT_FALSE(v.member(fx2, q(10, 3)));
  // x^N lies deep in the filtration: the order saturates at the ceiling
  VOrder deep = v.order(poly("x^12", kXYZ), q(2));
  EXPECT_EQ(deep.value, q(2));
  EXPECT_TRUE(deep.above_ceiling);
  EXPECT_THROW(v.order(Polynomial(3), q(2)), std::invalid_argument);
}

TEST_F(FermatCubicV, JumpsAndDimensions) {
  EXPECT_EQ(jump_values(v.jumping_numbers(q(2))), (std::vector<Rational>{q(1), q(4, 3), q(5, 3), q(2)}));
  EXPECT_EQ(v.gr_dim_formula(q(2)), 4u);
  EXPECT_EQ(v.gr_dim_direct(q(2)), 4u);
  EXPECT_EQ(v.gr_dim_formula(q(4, 3)), 3u);
  EXPECT_EQ(v.gr_dim_direct(q(4, 3)), 3u);
  EXPECT_EQ(v.gr_dim_formula(q(1, 2)), 0u);
  EXPECT_EQ(v.hodge_floor(), 1u);
}

TEST(VFiltration, CuspJumpsAndMultiplierIdeals) {
  VFiltration v(milnor("x^2+y^3"));
  EXPECT_EQ(jump_values(v.jumping_numbers(q(2))), (std::vector<Rational>{q(5, 6), q(7, 6), q(11, 6)}));
  EXPECT_TRUE(v.multiplier_ideal(q(1, 2)).is_unit());
  EXPECT_TRUE(same_ideal(v.multiplier_ideal(q(5, 6)), ideal_of({"x", "y"}, kXY)));
  EXPECT_THROW(v.multiplier_ideal(q(1)), std::domain_error);
  EXPECT_THROW(v.multiplier_ideal(q(0)), std::domain_error);
  EXPECT_EQ(v.hodge_floor(), 0u);
}

TEST(VFiltration, GridNavigation) {
  VFiltration v(milnor("x^2+y^3"));
  EXPECT_EQ(v.candidates(q(2)), (std::vector<Rational>{q(5, 6), q(7, 6), q(11, 6)}));
  EXPECT_TRUE(v.is_candidate(q(13, 6)));
  EXPECT_FALSE(v.is_candidate(q(1)));
  EXPECT_EQ(v.threshold(q(1)), q(7, 6));
  EXPECT_EQ(v.threshold(q(7, 6)), q(7, 6));
  EXPECT_EQ(v.successor(q(7, 6)), q(11, 6));
  EXPECT_EQ(v.threshold(q(-5)), q(5, 6));
}

TEST(VFiltration, BelowMlctEverythingIsAMember) {
  for (const char* text : {"x^2+y^3", "x^3+y^3+z^3", "x^2+x*y^2+y^4"}) {
    VFiltration v(milnor(text));
    EXPECT_TRUE(v.level(v.mlct())->ideal.is_unit()) << text;
    EXPECT_TRUE(v.level(v.mlct() - q(1, 7))->ideal.is_unit()) << text;
    EXPECT_FALSE(v.level(v.successor(v.mlct()))->ideal.is_unit()) << text;
  }
}

TEST(VFiltration, HodgeFloorOfQuadrics) {
  EXPECT_EQ(hodge_floor(milnor("x^2+y^2")), 1u);
  EXPECT_EQ(hodge_floor(milnor("x^2+y^2+z^2+u^2")), 2u);
  EXPECT_EQ(hodge_floor(milnor("x^2+y^2+z^2+u^2+v^2")), 2u);
}

TEST(VFiltration, FreeFunctionsAgreeWithClass) {
  MilnorData m = milnor("x^3+y^5");
  VFiltration v(m);
  EXPECT_EQ(jumping_numbers(m, q(2)).jumps.size(), v.jumping_numbers(q(2)).jumps.size());
  EXPECT_EQ(gr_dim_formula(m, q(23, 15)), v.gr_dim_formula(q(23, 15)));
  EXPECT_EQ(gr_dim_direct(m, q(23, 15)), 2u);
  EXPECT_TRUE(v_member(m, poly("x", {"x", "y"}), q(11, 15)));
  EXPECT_EQ(v_level(m, q(1)).threshold, q(16, 15));
  EXPECT_EQ(v_order(m, poly("y", {"x", "y"}), q(2)).value, q(11, 15));
  EXPECT_EQ(binomial(5, 2), 10);
}

TEST(VFiltration, PropertyChecksPassOnExamples) {
  for (const char* text : {"x^2+y^3", "x^3+y^3+z^3", "x^2+x*y^2+y^4", "x^3+y^3+z^3+x*y*z"}) {
    VFiltration v(milnor(text));
    for (const PropertyCheck& c : check_properties(v, q(3))) EXPECT_TRUE(c.passed) << text << ": " << c.name << " " << c.detail;
  }
}
