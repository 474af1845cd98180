#include "homcalc/algebroid.hpp"
#include "homcalc/identities.hpp"
#include "homcalc/poly_parser.hpp"

#include <gtest/gtest.h>

using namespace homcalc;

namespace {

struct Fixture {
    Variables t_vars = make_variables({"t"});
    RingAuto doubling = RingAuto::scaling(t_vars, {2});
    Poly t = Poly::variable(t_vars, 0);
    Poly one = Poly::constant(t_vars, 1);

    Poly p(const std::string& s) const { return parse_poly(s, t_vars); }

    HomLieAlgebroid tangent() const { return tangent_algebroid(doubling); }

    // g = span(e1, e2), [e1, e2] = e2, twist diag(1, 1/2), acting by e1 -> -4t D, e2 -> D.
    HomLieAlgebroid action() const
    {
        auto g = HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, Rational(1, 2)}));
        g.set_bracket(0, 1, {0, 1});
        auto d = SigmaDerivation::basis(doubling, 0);
        return action_algebroid(g, {d.scaled(t * Rational(-4)), d});
    }

    // Classical action of aff(1) on the line: e1 -> -t d/dt, e2 -> d/dt.
    HomLieAlgebroid classical() const
    {
        auto id = RingAuto::identity(t_vars);
        auto g = HomLieAlgebra::abelian(2, RationalMatrix::identity(2));
        g.set_bracket(0, 1, {0, 1});
        auto d = SigmaDerivation::basis(id, 0);
        return action_algebroid(g, {d.scaled(-t), d});
    }
};

// Dense operator oracle on Q[t] for sigma: t -> 2t and D = sigma o d/dt.
Poly sig(const Poly& f) { return RingAuto::scaling(f.variables(), {2}).apply(f); }
Poly sig_inv(const Poly& f) { return RingAuto::scaling(f.variables(), {Rational(1, 2)}).apply(f); }
Poly D(const Poly& f) { return sig(f.derivative(0)); }

// Double-sum display evaluated on explicit factor lists.
MultiVector display(const HomLieAlgebroid& a, const std::vector<MultiVector>& xs, const std::vector<MultiVector>& ys)
{
    MultiVector out(a.variables(), a.rank(), static_cast<unsigned>(xs.size() + ys.size() - 1));
    const SemilinearMap& phi = a.bundle().phi();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            MultiVector term = bracket(a, xs[i], ys[j]);
            for (std::size_t r = 0; r < xs.size(); ++r)
                if (r != i) term = wedge(term, phi.apply(xs[r]));
            for (std::size_t r = 0; r < ys.size(); ++r)
                if (r != j) term = wedge(term, phi.apply(ys[r]));
            if ((i + j) % 2)
                out -= term;
            else
                out += term;
        }
    return out;
}

} // namespace

TEST(Algebroid, TangentTwistMatrixIsHalf)
{
    Fixture fx;
    auto a = fx.tangent();
    EXPECT_EQ(a.bundle().phi().matrix().to_rational(), RationalMatrix::diagonal({Rational(1, 2)}));
    EXPECT_TRUE(a.basis_bracket(0, 0).is_zero());
}

TEST(Algebroid, TangentTwoVariableScalingTwist)
{
    auto v = make_variables({"x", "y"});
    auto a = tangent_algebroid(RingAuto::scaling(v, {2, 3}));
    EXPECT_EQ(a.bundle().phi().matrix().to_rational(), RationalMatrix::diagonal({Rational(1, 2), Rational(1, 3)}));
}

TEST(Algebroid, TangentBracketMatchesOperatorComposition)
{
    Fixture fx;
    auto a = fx.tangent();
    MultiVector r = bracket(a, a.section(0, fx.t), a.section(0, fx.one));
    EXPECT_EQ(r, a.section(0, fx.p("-1/4")));
    SigmaDerivation as_operator = anchor_of(a, r);
    auto x = [&](const Poly& f) { return fx.t * D(f); };
    for (unsigned k = 0; k <= 4; ++k) {
        Poly f = fx.t.pow(k);
        Poly expected = sig(x(sig_inv(D(sig_inv(f))))) - sig(D(sig_inv(x(sig_inv(f)))));
        EXPECT_EQ(as_operator.apply(f), expected) << "k=" << k;
    }
}

TEST(Algebroid, BracketTwistedLeibnizOnBasis)
{
    Fixture fx;
    auto a = fx.action();
    Poly f = fx.p("t^2 + 1");
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            MultiVector lhs = bracket(a, a.section(i, fx.one), a.section(j, f));
            MultiVector rhs = a.basis_bracket(i, j).scaled(sig(f)) +
                              a.phi_basis(j).scaled(a.anchor_phi(i).apply(f));
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(Algebroid, VerifyPassesOnCatalogInstances)
{
    Fixture fx;
    EXPECT_TRUE(verify_algebroid(fx.tangent()).passed());
    EXPECT_TRUE(verify_algebroid(fx.action()).passed());
    EXPECT_TRUE(verify_algebroid(fx.classical()).passed());
}

TEST(Algebroid, FlippedStructureFunctionFails)
{
    Fixture fx;
    auto a = fx.action();
    auto c = a.structure();
    c[(0 * 2 + 1) * 2 + 1] = -c[(0 * 2 + 1) * 2 + 1];
    c[(1 * 2 + 0) * 2 + 1] = -c[(1 * 2 + 0) * 2 + 1];
    HomLieAlgebroid bad(a.bundle(), c, a.anchors());
    auto report = verify_algebroid(bad);
    EXPECT_FALSE(report.passed());
    ASSERT_FALSE(report.first_failure().empty());
    EXPECT_TRUE(report.find(report.first_failure())->witness.has_value());
}

TEST(Algebroid, DifferentialOfConstantVanishes)
{
    Fixture fx;
    EXPECT_TRUE(differential(fx.tangent(), fx.one).is_zero());
}

TEST(Algebroid, DifferentialOfCoordinatePairsToOne)
{
    Fixture fx;
    auto a = fx.tangent();
    EXPECT_EQ(pair(differential(a, fx.t), a.section(0, fx.one)), fx.one);
}

TEST(Algebroid, DifferentialSquaresToZeroOnRankTwo)
{
    Fixture fx;
    auto a = fx.action();
    MultiForm xi = a.coframe(0, fx.t);
    EXPECT_TRUE(differential(a, differential(a, xi)).is_zero());
    EXPECT_TRUE(differential(a, differential(a, fx.p("t^3 - t"))).is_zero());
}

TEST(Algebroid, DifferentialMatchesEvaluationFormula)
{
    Fixture fx;
    auto a = fx.action();
    const auto& b = a.bundle();
    MultiForm xi = a.coframe(0, fx.p("t^2")) + a.coframe(1, fx.p("t + 3"));
    MultiVector x1 = a.section(0, fx.p("t"));
    MultiVector x2 = a.section(1, fx.p("2*t^2")) + a.section(0, fx.one);
    MultiVector y1 = b.phi_inverse().apply(x1);
    MultiVector y2 = b.phi_inverse().apply(x2);
    Poly expected = anchor_of(a, x1).apply(pair(xi, y2)) - anchor_of(a, x2).apply(pair(xi, y1)) -
                    pair(b.dagger().apply(xi), bracket(a, y1, y2));
    EXPECT_EQ(pair(differential(a, xi), wedge(x1, x2)), expected);
}

TEST(Algebroid, RoundTripThroughDifferential)
{
    Fixture fx;
    for (const auto& a : {fx.tangent(), fx.action(), fx.classical()}) {
        auto rebuilt =
            reconstruct_from_differential(a.bundle(), [&](const MultiForm& xi) { return differential(a, xi); });
        EXPECT_EQ(rebuilt, a) << a.to_string();
    }
}

TEST(Algebroid, ReconstructionRejectsNonSquareZeroOperator)
{
    Fixture fx;
    auto a = fx.action();
    auto bogus = [&](const MultiForm& xi) {
        MultiForm out = differential(a, xi);
        if (xi.grade() == 1) out += MultiForm::basis(a.variables(), 2, 0b11, fx.one).scaled(xi.component(1));
        return out;
    };
    EXPECT_THROW(reconstruct_from_differential(a.bundle(), bogus), PreconditionError);
}

TEST(Algebroid, TwistOfClassicalTangentIsTangent)
{
    Fixture fx;
    auto id = RingAuto::identity(fx.t_vars);
    auto classical = tangent_algebroid(id);
    SemilinearMap alpha(PolyMatrix::from_rational(fx.t_vars, ad_matrix(fx.doubling)), fx.doubling);
    EXPECT_EQ(twist_lie_algebroid(classical, alpha), fx.tangent());
}

TEST(Algebroid, TwistByIdentityIsUnchanged)
{
    Fixture fx;
    auto a = fx.classical();
    auto id = RingAuto::identity(fx.t_vars);
    EXPECT_EQ(twist_lie_algebroid(a, SemilinearMap::identity(id, 2)), a);
}

TEST(Algebroid, TwistRejectsNonMorphism)
{
    Fixture fx;
    auto a = fx.classical();
    SemilinearMap bad(PolyMatrix::from_rational(fx.t_vars, RationalMatrix::diagonal({1, 2})), fx.doubling);
    EXPECT_THROW(twist_lie_algebroid(a, bad), PreconditionError);
}

TEST(Algebroid, TwistedClassicalAlgebroidVerifies)
{
    Fixture fx;
    auto a = fx.classical();
    // alpha(e1) = e1, alpha(e2) = e2/2 over the doubling: (1/2) d/dt (f(2t)) = f'(2t).
    SemilinearMap alpha(PolyMatrix::from_rational(fx.t_vars, RationalMatrix::diagonal({1, Rational(1, 2)})),
                        fx.doubling);
    auto twisted = twist_lie_algebroid(a, alpha);
    EXPECT_TRUE(verify_algebroid(twisted).passed()) << verify_algebroid(twisted).to_text();
    EXPECT_TRUE(verify_identities(twisted, SampleConfig{2}).passed());
}

TEST(Algebroid, ActionPreconditionOnOneDimensionalAlgebra)
{
    Fixture fx;
    auto tD = SigmaDerivation::basis(fx.doubling, 0).scaled(fx.t);
    // Ad(tD) = sigma(t) Ad(D) = 2t * D/2 = tD, so only the twist (1) is equivariant.
    EXPECT_NO_THROW(action_algebroid(HomLieAlgebra::abelian(1, RationalMatrix::diagonal({1})), {tD}));
    EXPECT_THROW(action_algebroid(HomLieAlgebra::abelian(1, RationalMatrix::diagonal({2})), {tD}),
                 PreconditionError);
}

TEST(Algebroid, ActionPreconditionNamesBracketFailure)
{
    Fixture fx;
    auto g = HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, Rational(1, 2)}));
    g.set_bracket(0, 1, {0, 1});
    auto d = SigmaDerivation::basis(fx.doubling, 0);
    try {
        action_algebroid(g, {d.scaled(fx.t * Rational(4)), d});
        FAIL() << "expected rejection";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("bracket"), std::string::npos);
    }
}

TEST(Algebroid, SchoutenOnSectionsIsBracket)
{
    Fixture fx;
    auto a = fx.action();
    MultiVector x = a.section(0, fx.p("t^2"));
    MultiVector y = a.section(1, fx.p("t + 1"));
    EXPECT_EQ(schouten(a, x, y), bracket(a, x, y));
}

TEST(Algebroid, SchoutenWithFunctionIsTwistedAnchor)
{
    Fixture fx;
    auto a = fx.tangent();
    // [[D, t]] = (sigma D sigma^-1)(t) = sigma(D(t/2)) = 1/2.
    MultiVector r = schouten(a, a.section(0, fx.one), MultiVector::scalar(1, fx.t));
    EXPECT_EQ(r.to_poly(), sig(D(sig_inv(fx.t))));
    EXPECT_EQ(r.to_poly(), fx.p("1/2"));
}

TEST(Algebroid, SchoutenIndependentOfCoefficientPlacement)
{
    Fixture fx;
    auto a = fx.action();
    Poly f = fx.p("t^2 + t");
    Poly g = fx.p("3*t");
    MultiVector e1 = a.section(0, fx.one);
    MultiVector e2 = a.section(1, fx.one);
    MultiVector lhs = schouten(a, wedge(e1, e2).scaled(f), e1.scaled(g));
    EXPECT_EQ(lhs, display(a, {e1, e2.scaled(f)}, {e1.scaled(g)}));
    EXPECT_EQ(lhs, display(a, {e1.scaled(f), e2}, {e1.scaled(g)}));
}

TEST(Algebroid, SchoutenOfSectionWithBivector)
{
    Fixture fx;
    auto a = fx.action();
    MultiVector x = a.section(0, fx.t);
    MultiVector y = a.section(0, fx.one);
    MultiVector z = a.section(1, fx.p("t^2"));
    const SemilinearMap& phi = a.bundle().phi();
    MultiVector expected = wedge(bracket(a, x, y), phi.apply(z)) - wedge(bracket(a, x, z), phi.apply(y));
    EXPECT_EQ(schouten(a, x, wedge(y, z)), expected);
}

TEST(Algebroid, SchoutenOfTwoFunctionsIsGradeError)
{
    Fixture fx;
    auto a = fx.tangent();
    EXPECT_THROW(schouten(a, MultiVector::scalar(1, fx.t), MultiVector::scalar(1, fx.t)), GradeError);
}

TEST(Algebroid, InteriorMatchesDefiningEvaluation)
{
    Fixture fx;
    auto a = fx.action();
    const auto& b = a.bundle();
    MultiForm xi = MultiForm::basis(a.variables(), 2, 0b11, fx.p("t^2 + 1"));
    MultiVector x = a.section(0, fx.t) + a.section(1, fx.one);
    MultiVector y = a.section(1, fx.p("t"));
    Poly expected = pair(b.dagger().apply(xi), wedge(b.phi().apply(x), y));
    EXPECT_EQ(pair(interior(a, x, xi), y), expected);
    EXPECT_THROW(interior(a, wedge(x, y), a.coframe(0, fx.one)), GradeError);
}

TEST(Algebroid, InteriorOfSectionOnOneForm)
{
    Fixture fx;
    auto a = fx.action();
    MultiForm xi = a.coframe(1, fx.p("t^3"));
    MultiVector x = a.section(1, fx.p("t - 2")) + a.section(0, fx.one);
    EXPECT_EQ(interior(a, x, xi).to_poly(), sig(pair(xi, x)));
}

TEST(Algebroid, ClassicalCartanFormula)
{
    Fixture fx;
    auto a = fx.classical();
    MultiVector x = a.section(0, fx.p("t^2")) + a.section(1, fx.one);
    MultiForm xi = a.coframe(0, fx.p("t")) + a.coframe(1, fx.p("t^2"));
    MultiForm lie = lie_derivative(a, x, xi);
    EXPECT_EQ(lie, interior(a, x, differential(a, xi)) + differential(a, interior(a, x, xi)));
    for (unsigned j = 0; j < 2; ++j) {
        MultiVector y = a.section(j, fx.p("t + 1"));
        Poly expected = anchor_of(a, x).apply(pair(xi, y)) - pair(xi, bracket(a, x, y));
        EXPECT_EQ(pair(lie, y), expected);
    }
}

TEST(Algebroid, PointCaseLieDerivativeIsCoadjoint)
{
    auto g = HomLieAlgebra::abelian(2, RationalMatrix::diagonal({1, 3}));
    g.set_bracket(0, 1, {0, 1});
    auto empty = make_variables({});
    auto id = RingAuto::identity(empty);
    auto a = action_algebroid(g, {SigmaDerivation::zero(id), SigmaDerivation::zero(id)});
    Representation co = coadjoint(g);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            MultiForm lie = lie_derivative(a, a.section(i, a.function(1)), a.coframe(j, a.function(1)));
            RationalVector expected = co.rho[i].apply(g.basis_vector(j));
            for (unsigned k = 0; k < 2; ++k) EXPECT_EQ(lie.component(IndexSet{1} << k), a.function(expected[k]));
        }
}

TEST(Algebroid, AnchorOfTwistedSection)
{
    Fixture fx;
    auto a = fx.action();
    MultiVector x = a.section(0, fx.t) + a.section(1, fx.p("t^2"));
    EXPECT_EQ(anchor_of_twisted(a, x), anchor_of(a, a.bundle().phi().apply(x)));
}

TEST(Algebroid, HomBundleRejectsNonUnitDeterminant)
{
    Fixture fx;
    PolyMatrix m(fx.t_vars, 2, 2);
    m(0, 0) = fx.one;
    m(1, 1) = fx.t;
    EXPECT_THROW(HomBundle(SemilinearMap(m, fx.doubling)), NonInvertible);
}

TEST(Algebroid, DualBundleTwistIsDagger)
{
    Fixture fx;
    auto a = fx.action();
    const auto& b = a.bundle();
    EXPECT_EQ(b.dual().phi(), b.dagger());
    EXPECT_EQ(b.dual().dagger(), b.phi());
}

TEST(Identities, CatalogPassesOnInstances)
{
    Fixture fx;
    for (const auto& a : {fx.tangent(), fx.action(), fx.classical()}) {
        auto report = verify_identities(a, SampleConfig{2});
        EXPECT_TRUE(report.passed()) << report.to_text();
    }
}

TEST(Identities, EveryMutationIsCaught)
{
    Fixture fx;
    auto a = fx.action();
    for (Mutation m : all_mutations()) {
        auto report = verify_identities(a.with_mutation(m), SampleConfig{2});
        EXPECT_FALSE(report.passed()) << to_string(m);
    }
}

TEST(Identities, UnknownIdThrows)
{
    Fixture fx;
    EXPECT_THROW(verify_identity(fx.tangent(), "no-such-identity"), std::invalid_argument);
}

TEST(Identities, MutatedInteriorReportsWitness)
{
    Fixture fx;
    auto r = verify_identity(fx.action().with_mutation(Mutation::interior_sign), "interior-schouten");
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

TEST(Identities, JacobiatorFormulaOnRankThree)
{
    auto v = make_variables({"x", "y", "z"});
    auto sigma = RingAuto::from_images(v, {parse_poly("2*x + y", v), parse_poly("y", v), parse_poly("3*z", v)});
    auto a = tangent_algebroid(sigma);
    auto r = verify_identity(a, "poisson-jacobiator-formula", SampleConfig{1});
    EXPECT_TRUE(r.passed);
    EXPECT_GT(r.checked, 0u);
}
