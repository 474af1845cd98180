#include "homcalc/poly.hpp"
#include "homcalc/poly_parser.hpp"
#include "homcalc/ring_auto.hpp"
#include "homcalc/sigma_derivation.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace homcalc;

namespace {

Rational eval(const Poly& f, const std::vector<Rational>& point)
{
    Rational acc = 0;
    for (const auto& t : f.terms()) {
        Rational m = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.monomial.exponents[i]; ++e) m *= point[i];
        acc += m;
    }
    return acc;
}

// Dense univariate model: coefficient k multiplies t^k.
using Dense = std::vector<Rational>;

Dense dense_of(const Poly& f)
{
    Dense d(f.degree() + 1);
    for (const auto& t : f.terms()) d[t.monomial.exponents[0]] = t.coefficient;
    return d;
}

Dense dense_scale_arg(Dense d, const Rational& lambda)
{
    Rational p = 1;
    for (auto& c : d) {
        c *= p;
        p *= lambda;
    }
    return d;
}

Dense dense_diff(const Dense& d)
{
    Dense out(d.size() > 1 ? d.size() - 1 : 1);
    for (std::size_t k = 1; k < d.size(); ++k) out[k - 1] = d[k] * static_cast<long>(k);
    return out;
}

Dense dense_times_t(const Dense& d)
{
    Dense out(d.size() + 1);
    for (std::size_t k = 0; k < d.size(); ++k) out[k + 1] = d[k];
    return out;
}

Dense dense_sub(Dense a, const Dense& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    return a;
}

Dense trimmed(Dense d)
{
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
}

struct Univariate {
    Variables vars = make_variables({"t"});
    Poly t = Poly::variable(vars, 0);
    Poly p(const char* s) const { return parse_poly(s, vars); }
};

} // namespace

TEST(Poly, MonomialProduct)
{
    Univariate u;
    EXPECT_EQ(u.t.pow(2) * u.t, u.t.pow(3));
}

TEST(Poly, AdditiveInverseIsEmpty)
{
    Univariate u;
    Poly z = u.t + (-u.t);
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.terms().empty());
}

TEST(Poly, SquareMatchesSchoolbookConvolution)
{
    Univariate u;
    Poly f = u.p("3*t^3 - t + 1/2");
    Dense a = dense_of(f);
    Dense conv(2 * a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) conv[i + j] += a[i] * a[j];
    EXPECT_EQ(dense_of(f * f), trimmed(conv));
    EXPECT_EQ((u.t + 1) * (u.t + 1), u.p("t^2 + 2*t + 1"));
}

TEST(Poly, VariableMismatchThrows)
{
    Univariate u;
    auto other = make_variables({"t"});
    Poly s = Poly::variable(make_variables({"s"}), 0);
    EXPECT_THROW(u.t + s, VariableMismatch);
    EXPECT_NO_THROW(u.t + Poly::variable(other, 0));
    EXPECT_NO_THROW(u.t + Poly::constant(make_variables({}), 3));
}

TEST(Poly, CanonicalGrlexPrinting)
{
    auto vars = make_variables({"x", "y"});
    Poly f = parse_poly("y + x^2 - 3 + x*y + 2/3*y^2", vars);
    EXPECT_EQ(f.to_string(), "x^2 + x*y + 2/3*y^2 + y - 3");
}

TEST(Poly, PrintParseRoundTrip)
{
    Univariate u;
    for (const char* s : {"2*t^2 - 1/3", "-t", "0", "-7/2", "t^5 - t^3 + 11"}) {
        Poly f = u.p(s);
        EXPECT_EQ(f.to_string(), std::string(s));
        EXPECT_EQ(u.p(f.to_string().c_str()), f);
    }
}

TEST(Poly, ParserErrorsCarryOffsets)
{
    Univariate u;
    try {
        parse_poly("t + * 2", u.vars);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_FALSE(e.expected().empty());
    }
    EXPECT_THROW(parse_poly("t^-1", u.vars), ParseError);
    EXPECT_THROW(parse_poly("q", u.vars), ParseError);
    EXPECT_THROW(parse_poly("1/0", u.vars), ParseError);
    EXPECT_THROW(parse_poly("(t+1", u.vars), ParseError);
}

TEST(Poly, ExactDivision)
{
    auto vars = make_variables({"x", "y"});
    Poly a = parse_poly("x^2 - y^2", vars);
    EXPECT_EQ(a.divide_exact(parse_poly("x + y", vars)), parse_poly("x - y", vars));
    EXPECT_THROW(a.divide_exact(parse_poly("x + 1", vars)), std::domain_error);
}

TEST(RingAuto, ScalingSquares)
{
    Univariate u;
    auto s = RingAuto::scaling(u.vars, {2});
    EXPECT_EQ(s.apply(u.t.pow(2)), u.p("4*t^2"));
}

TEST(RingAuto, IdentityFixesEverything)
{
    Univariate u;
    auto id = RingAuto::identity(u.vars);
    Poly f = u.p("t^3 - 2*t + 5");
    EXPECT_EQ(id.apply(f), f);
    EXPECT_TRUE(id.is_identity());
}

TEST(RingAuto, SwapVariables)
{
    auto vars = make_variables({"x", "y"});
    auto swap = RingAuto::from_images(vars, {parse_poly("y", vars), parse_poly("x", vars)});
    EXPECT_EQ(swap.apply(parse_poly("x^2*y", vars)), parse_poly("x*y^2", vars));
}

TEST(RingAuto, InverseOfScalingAndTranslation)
{
    Univariate u;
    EXPECT_EQ(RingAuto::scaling(u.vars, {2}).inverse().images()[0], u.p("1/2*t"));
    auto shift = RingAuto::from_images(u.vars, {u.p("t + 1")});
    EXPECT_EQ(shift.inverse().images()[0], u.p("t - 1"));
}

TEST(RingAuto, ShearInverseAgreesWithPointEvaluation)
{
    auto vars = make_variables({"x", "y"});
    auto s = RingAuto::from_images(vars, {parse_poly("2*x + y", vars), parse_poly("y", vars)});
    auto inv = s.inverse();
    // Hand inverse: x -> (x - y)/2, y -> y.
    EXPECT_EQ(inv.images()[0], parse_poly("1/2*x - 1/2*y", vars));
    Poly f = parse_poly("x^2*y", vars);
    EXPECT_EQ(inv.apply(s.apply(f)), f);
    EXPECT_EQ(s.apply(inv.apply(f)), f);
    // sigma(f)(p) = f(L p + t)
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            std::vector<Rational> p{a, b};
            std::vector<Rational> image{2 * a + b, b};
            EXPECT_EQ(eval(s.apply(f), p), eval(f, image));
        }
}

TEST(RingAuto, SingularLinearPartRejected)
{
    auto vars = make_variables({"x", "y"});
    EXPECT_THROW(RingAuto::from_images(vars, {parse_poly("x + y", vars), parse_poly("2*x + 2*y", vars)}),
                 NonInvertible);
    EXPECT_THROW(RingAuto::from_images(vars, {parse_poly("x^2", vars), parse_poly("y", vars)}),
                 std::invalid_argument);
}

TEST(RingAuto, MultiplicativeOnSamples)
{
    auto vars = make_variables({"x", "y"});
    auto s = RingAuto::from_images(vars, {parse_poly("2*x + y - 1", vars), parse_poly("3*y + 1/2", vars)});
    std::vector<Poly> samples;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            Monomial m;
            m.exponents[0] = i;
            m.exponents[1] = j;
            samples.push_back(Poly::monomial(vars, m));
        }
    for (const auto& f : samples)
        for (const auto& g : samples) EXPECT_EQ(s.apply(f * g), s.apply(f) * s.apply(g));
}

TEST(SigmaDerivation, TwistedDerivativeOfCube)
{
    Univariate u;
    auto s = RingAuto::scaling(u.vars, {2});
    auto d = SigmaDerivation::basis(s, 0);
    // term-by-term: d/dt t^3 = 3t^2, then t -> 2t
    Dense expected = dense_scale_arg(dense_diff(dense_of(u.t.pow(3))), 2);
    EXPECT_EQ(dense_of(d.apply(u.t.pow(3))), expected);
    EXPECT_EQ(d.apply(u.t.pow(3)), u.p("12*t^2"));
}

TEST(SigmaDerivation, ZeroAndClassical)
{
    Univariate u;
    auto id = RingAuto::identity(u.vars);
    EXPECT_TRUE(SigmaDerivation::zero(id).apply(u.t.pow(4)).is_zero());
    EXPECT_EQ(SigmaDerivation::basis(id, 0).apply(u.t.pow(2)), u.p("2*t"));
}

TEST(SigmaDerivation, TwistedLeibnizLaw)
{
    auto vars = make_variables({"x", "y"});
    auto s = RingAuto::from_images(vars, {parse_poly("y + 1", vars), parse_poly("2*x", vars)});
    SigmaDerivation d(s, {parse_poly("x*y", vars), parse_poly("1 - x", vars)});
    std::vector<Poly> samples;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            Monomial m;
            m.exponents[0] = i;
            m.exponents[1] = j;
            samples.push_back(Poly::monomial(vars, m));
        }
    for (const auto& f : samples)
        for (const auto& g : samples) EXPECT_EQ(d.apply(f * g), d.apply(f) * s.apply(g) + s.apply(f) * d.apply(g));
}

TEST(SigmaDerivation, BracketMatchesDenseCompositionOracle)
{
    Univariate u;
    const Rational lambda = 2;
    auto s = RingAuto::scaling(u.vars, {lambda});
    auto D = SigmaDerivation::basis(s, 0);
    auto tD = D.scaled(u.t);
    auto br = sder_bracket(tD, D);
    EXPECT_EQ(br, D.scaled(Poly::constant(u.vars, Rational(-1, 4))));

    // Dense operators: sigma scales the argument, sigma^-1 by 1/lambda.
    auto sig = [&](const Dense& f) { return dense_scale_arg(f, lambda); };
    auto sig_inv = [&](const Dense& f) { return dense_scale_arg(f, 1 / lambda); };
    auto opD = [&](const Dense& f) { return sig(dense_diff(f)); };
    auto optD = [&](const Dense& f) { return dense_times_t(opD(f)); };
    for (int k = 0; k <= 4; ++k) {
        Dense tk(k + 1);
        tk[k] = 1;
        Dense lhs = dense_sub(sig(optD(sig_inv(opD(sig_inv(tk))))), sig(opD(sig_inv(optD(sig_inv(tk))))));
        Poly tkp = u.t.pow(k);
        Dense rhs = dense_of(br.apply(tkp));
        EXPECT_EQ(trimmed(lhs), trimmed(rhs)) << "k=" << k;
    }
}

TEST(SigmaDerivation, SelfBracketVanishes)
{
    Univariate u;
    auto s = RingAuto::scaling(u.vars, {3});
    auto D = SigmaDerivation::basis(s, 0).scaled(u.p("t^2 + 1"));
    EXPECT_TRUE(sder_bracket(D, D).is_zero());
}

TEST(SigmaDerivation, ClassicalCommutator)
{
    Univariate u;
    auto id = RingAuto::identity(u.vars);
    Poly f = u.p("t^2"), g = u.p("t + 3");
    auto d = SigmaDerivation::basis(id, 0);
    auto br = sder_bracket(d.scaled(f), d.scaled(g));
    EXPECT_EQ(br, d.scaled(f * g.derivative(0) - g * f.derivative(0)));
}

TEST(SigmaDerivation, AdjointMatchesDenseCompositionOracle)
{
    Univariate u;
    const Rational lambda = 2;
    auto s = RingAuto::scaling(u.vars, {lambda});
    auto D = SigmaDerivation::basis(s, 0);
    EXPECT_EQ(D.ad(), D.scaled(Poly::constant(u.vars, Rational(1, 2))));
    auto sig = [&](const Dense& f) { return dense_scale_arg(f, lambda); };
    auto sig_inv = [&](const Dense& f) { return dense_scale_arg(f, 1 / lambda); };
    for (int k = 0; k <= 4; ++k) {
        Dense tk(k + 1);
        tk[k] = 1;
        Dense lhs = sig(sig(dense_diff(sig_inv(tk))));
        EXPECT_EQ(trimmed(lhs), trimmed(dense_of(D.ad().apply(u.t.pow(k)))));
    }
    // Ad(tD) = sigma(t) Ad(D)
    auto tD = D.scaled(u.t);
    EXPECT_EQ(tD.ad(), D.ad().scaled(u.p("2*t")));
    EXPECT_EQ(tD.ad(), tD);
}

TEST(SigmaDerivation, AdjointIsIdentityForIdentityTwist)
{
    auto vars = make_variables({"x", "y"});
    auto id = RingAuto::identity(vars);
    SigmaDerivation d(id, {parse_poly("x*y", vars), parse_poly("x - 1", vars)});
    EXPECT_EQ(d.ad(), d);
}

TEST(SigmaDerivation, BracketIsHomLieOnGenerators)
{
    auto vars = make_variables({"x", "y"});
    auto s = RingAuto::from_images(vars, {parse_poly("2*x + y", vars), parse_poly("3*y - 1", vars)});
    std::vector<SigmaDerivation> gens;
    std::vector<Poly> coeffs{Poly::constant(vars, 1), parse_poly("x", vars), parse_poly("y", vars)};
    for (std::size_t nu = 0; nu < 2; ++nu)
        for (const auto& c : coeffs) gens.push_back(SigmaDerivation::basis(s, nu).scaled(c));
    for (const auto& a : gens)
        for (const auto& b : gens) {
            EXPECT_EQ(sder_bracket(a, b), SigmaDerivation::zero(s) - sder_bracket(b, a));
            EXPECT_EQ(sder_bracket(a, b).ad(), sder_bracket(a.ad(), b.ad()));
            for (const auto& c : gens) {
                auto j = sder_bracket(a.ad(), sder_bracket(b, c)) + sder_bracket(b.ad(), sder_bracket(c, a)) +
                         sder_bracket(c.ad(), sder_bracket(a, b));
                EXPECT_TRUE(j.is_zero());
            }
        }
}
