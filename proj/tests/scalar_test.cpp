#include <gtest/gtest.h>

#include "vertexloc/scalar.hpp"

using namespace vertexloc;

namespace {

Scalar T(const char* s) { return parse_scalar(s, VarSet::T); }
Scalar H(const char* s) { return parse_scalar(s, VarSet::THilb); }
Scalar t() { return Scalar::variable(VarSet::T, "t"); }

}  // namespace

TEST(Scalar, SpecializeCancels) {
  Scalar s = H("(1/1)*t1 + (1/1)*t2");
  Scalar r = specialize(s, VarSet::T, {{"t1", t()}, {"t2", -t()}});
  EXPECT_TRUE(r.is_zero());
}

TEST(Scalar, ImaginaryUnitSquare) {
  GScalar g = at_imaginary_unit(t().pow(2));
  EXPECT_EQ(g, GScalar(VarSet::T, Gaussian(-1)));
}

TEST(Scalar, SpecializeLinear) {
  Scalar s = H("(1/1)*t1 + (1/1)*c1");
  Scalar r = specialize(s, VarSet::T, {{"t1", t()}, {"c1", t().scaled(mpq_class(2))}, {"t2", -t()}});
  EXPECT_EQ(r, t().scaled(mpq_class(3)));
}

TEST(Scalar, SpecializePole) {
  Scalar s = Scalar(VarSet::THilb, mpq_class(1)) / H("(1/1)*t1 + (1/1)*t2");
  EXPECT_THROW(specialize(s, VarSet::T, {{"t1", t()}, {"t2", -t()}}), PoleError);
}

TEST(Scalar, Conjugate) {
  EXPECT_EQ(conjugate(t().pow(2)), t().pow(2));
  EXPECT_EQ(conjugate(t()), -t());
}

TEST(Scalar, Serialize) {
  EXPECT_EQ(Scalar(VarSet::T).str(), "0");
  EXPECT_EQ((-t().pow(2)).str(), "(-1/1)*t^2");
  Scalar t1 = Scalar::variable(VarSet::THilb, "t1"), t2 = Scalar::variable(VarSet::THilb, "t2");
  Scalar h = (t1.scaled(mpq_class(2)) - t2).scaled(make_q(1, 3));
  EXPECT_EQ(h.str(), "(2/3)*t1 + (-1/3)*t2");
  EXPECT_EQ(Scalar::t_power(mpq_class(-9), 6).str(), "(-9/1)*t^6");
}

TEST(Scalar, RationalRoundTrip) {
  Scalar s = (t() + Scalar(VarSet::T, mpq_class(1))) / (t().pow(2) - Scalar(VarSet::T, mpq_class(2)));
  EXPECT_EQ(parse_scalar(s.str(), VarSet::T), s);
}

TEST(Scalar, GcdReduces) {
  Scalar one(VarSet::T, mpq_class(1));
  Scalar a = (t() - one) * (t() + one);
  Scalar b = a / (t() - one);
  EXPECT_EQ(b, t() + one);
  EXPECT_TRUE(b.den().is_constant());
}

TEST(Scalar, NegativePowers) {
  Scalar x = Scalar::t_power(mpq_class(3), -2);
  EXPECT_EQ(x * t().pow(2), Scalar(VarSet::T, mpq_class(3)));
  EXPECT_EQ(x.inverse(), Scalar::t_power(make_q(1, 3), 2));
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(t() / Scalar(VarSet::T), std::exception);
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(parse_scalar("t +", VarSet::T), ParseError);
  EXPECT_THROW(parse_scalar("t1", VarSet::T), std::exception);
}

TEST(Scalar, GaussianText) {
  GScalar g = at_imaginary_unit(t() + Scalar(VarSet::T, mpq_class(1)));
  EXPECT_EQ(g, GScalar(VarSet::T, Gaussian(mpq_class(1), mpq_class(1))));
  EXPECT_EQ(coeff_text(Gaussian(mpq_class(1), mpq_class(-1, 2))), "(1/1-1/2*i)");
}
