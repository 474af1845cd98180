#include "homcalc/poisson.hpp"

namespace homcalc {

namespace {

std::string triple(const Poly& f, const Poly& g, const Poly& h)
{
    return "f=" + f.to_string() + ", g=" + g.to_string() + ", h=" + h.to_string();
}

std::string pair_label(const Poly& f, const Poly& g) { return "f=" + f.to_string() + ", g=" + g.to_string(); }

} // namespace

HomPoissonStructure::HomPoissonStructure(const RingAuto& sigma, MultiVector pi)
    : tangent_(tangent_algebroid(sigma)), pi_(std::move(pi))
{
    if (pi_.rank() != tangent_.rank()) throw RankMismatch("bivector rank differs from the number of variables");
    if (pi_.grade() != 2) throw GradeError("Poisson tensor must have grade 2, got " + std::to_string(pi_.grade()));
    if (!same_variables(pi_.variables(), tangent_.variables()))
        throw VariableMismatch("bivector over a different ring");
}

Poly evaluate_bivector(const MultiVector& pi, const MultiForm& xi, const MultiForm& eta)
{
    return pair(wedge(xi, eta), pi);
}

Poly poisson_bracket(const HomPoissonStructure& p, const Poly& f, const Poly& g)
{
    const auto& t = p.tangent();
    return evaluate_bivector(p.bivector(), differential(t, f), differential(t, g));
}

MultiVector pi_sharp(const HomPoissonStructure& p, const MultiForm& xi)
{
    const auto& t = p.tangent();
    MultiVector out(t.variables(), t.rank(), 1);
    for (unsigned j = 0; j < t.rank(); ++j)
        out.add(IndexSet{1} << j, evaluate_bivector(p.bivector(), xi, t.coframe(j, t.function(1))));
    return out;
}

VerificationReport verify_poisson(const HomPoissonStructure& p, const SampleConfig& config)
{
    VerificationReport report;
    report.structure = "Hom-Poisson tensor on " + std::to_string(p.tangent().rank()) + " variables";
    report.sample_degree = config.max_degree;
    const auto& t = p.tangent();
    const MultiVector& pi = p.bivector();
    const Variables& vars = t.variables();
    const RingAuto& sigma = t.twist();
    const RingAuto sigma_inv = sigma.inverse();

    AxiomCheck square("schouten-square", "Hom-Poisson tensor: [[pi, pi]] = 0");
    const MultiVector s = schouten(t, pi, pi);
    // Witness on coordinate functions: i_{[[pi,pi]]}(dx_a ^ dx_b ^ dx_c) for the first nonzero component.
    std::vector<Poly> x;
    if (!s.is_zero())
        for (unsigned i : indices_of(s.components().begin()->first)) x.push_back(Poly::variable(vars, i));
    square.holds(
        s.is_zero(), [&] { return triple(x[0], x[1], x[2]); },
        [&] {
            MultiForm w = wedge(wedge(differential(t, x[0]), differential(t, x[1])), differential(t, x[2]));
            return interior(t, s, w).to_poly().to_string();
        },
        [] { return std::string("0"); });

    AxiomCheck invariance("ad-invariance", "Hom-Poisson tensor: Ad pi = pi");
    invariance.equal(t.bundle().phi().apply(pi), pi, [] { return std::string("pi"); });

    AxiomCheck formula("jacobiator-formula",
                       "i_{[[pi,pi]]}(df ^ dg ^ dh) = -2 sigma^2 ({sigma^-1 {sigma^-1 f, sigma^-1 g}, sigma^-1 h} + c.p.)");
    auto br = [&](const Poly& f, const Poly& g) { return poisson_bracket(p, f, g); };
    auto term = [&](const Poly& f, const Poly& g, const Poly& h) {
        return br(sigma_inv.apply(br(sigma_inv.apply(f), sigma_inv.apply(g))), sigma_inv.apply(h));
    };
    for_each_monomial_tuple(vars->size(), 3, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = Poly::monomial(vars, m[0]);
        const Poly g = Poly::monomial(vars, m[1]);
        const Poly h = Poly::monomial(vars, m[2]);
        MultiForm w = wedge(wedge(differential(t, f), differential(t, g)), differential(t, h));
        Poly lhs = s.is_zero() ? Poly(vars) : interior(t, s, w).to_poly();
        Poly rhs = sigma.apply(sigma.apply(term(f, g, h) + term(g, h, f) + term(h, f, g))) * Rational(-2);
        return formula.equal(lhs, rhs, [&] { return triple(f, g, h); });
    });

    report.axioms = {square.result(), invariance.result(), formula.result()};
    return report;
}

HomLieAlgebroid cotangent_algebroid(const HomPoissonStructure& p)
{
    const auto& t = p.tangent();
    const MultiVector& pi = p.bivector();
    if (!schouten(t, pi, pi).is_zero()) throw PreconditionError("not a Hom-Poisson tensor: [[pi, pi]] != 0");
    if (!(t.bundle().phi().apply(pi) == pi)) throw PreconditionError("not a Hom-Poisson tensor: Ad pi != pi");

    const unsigned n = t.rank();
    const Variables& vars = t.variables();
    std::vector<MultiForm> e;
    std::vector<MultiVector> sharp;
    for (unsigned i = 0; i < n; ++i) {
        e.push_back(t.coframe(i, t.function(1)));
        sharp.push_back(pi_sharp(p, e.back()));
    }
    std::vector<Poly> c(static_cast<std::size_t>(n) * n * n, Poly(vars));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            MultiForm b = lie_derivative(t, sharp[i], e[j]) - lie_derivative(t, sharp[j], e[i]) -
                          differential(t, evaluate_bivector(pi, e[i], e[j]));
            for (unsigned k = 0; k < n; ++k) c[(i * n + j) * n + k] = b.component(IndexSet{1} << k);
        }
    std::vector<SigmaDerivation> anchor;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Poly> coeff;
        for (unsigned mu = 0; mu < n; ++mu) coeff.push_back(sharp[i].component(IndexSet{1} << mu));
        anchor.emplace_back(t.twist(), std::move(coeff));
    }
    return HomLieAlgebroid(t.bundle().dual(), std::move(c), std::move(anchor));
}

HomPoissonStructure linear_poisson_on_dual(const HomLieAlgebra& g)
{
    const unsigned n = g.dim();
    std::vector<std::string> names;
    for (unsigned k = 0; k < n; ++k) names.push_back("x" + std::to_string(k + 1));
    Variables vars = make_variables(names);
    RingAuto sigma = RingAuto::affine(vars, g.twist().transpose(), std::vector<Rational>(n, 0));
    MultiVector pi(vars, n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Poly coeff(vars);
            for (unsigned k = 0; k < n; ++k) coeff += Poly::variable(vars, k) * g.structure(i, j, k);
            pi.add((IndexSet{1} << i) | (IndexSet{1} << j), coeff);
        }
    return HomPoissonStructure(sigma, std::move(pi));
}

MultiVector bivector_from_bracket(const RingAuto& sigma, const BracketOracle& bracket)
{
    const Variables& vars = sigma.variables();
    const unsigned n = static_cast<unsigned>(vars->size());
    MultiVector pi(vars, n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            pi.add((IndexSet{1} << i) | (IndexSet{1} << j),
                   bracket(Poly::variable(vars, i), Poly::variable(vars, j)));
    return pi;
}

VerificationReport verify_purely_hom_poisson(const RingAuto& sigma, const BracketOracle& bracket,
                                             const SampleConfig& config)
{
    VerificationReport report;
    report.structure = "purely Hom-Poisson algebra on " + std::to_string(sigma.variables()->size()) + " variables";
    report.sample_degree = config.max_degree;
    const Variables& vars = sigma.variables();
    auto mono = [&](const Monomial& m) { return Poly::monomial(vars, m); };

    AxiomCheck skew("bracket-skew", "Hom-Lie algebra: {f,g} = -{g,f}");
    AxiomCheck morphism("twist-morphism", "Hom-Lie algebra: sigma{f,g} = {sigma f, sigma g}");
    for_each_monomial_tuple(vars->size(), 2, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[0]);
        const Poly g = mono(m[1]);
        const Poly fg = bracket(f, g);
        if (!skew.failed()) skew.equal(fg, -bracket(g, f), [&] { return pair_label(f, g); });
        if (!morphism.failed())
            morphism.equal(sigma.apply(fg), bracket(sigma.apply(f), sigma.apply(g)), [&] { return pair_label(f, g); });
        return !(skew.failed() && morphism.failed());
    });

    AxiomCheck jacobi("hom-jacobi", "Hom-Lie algebra: {{f,g},sigma h} + c.p. = 0");
    AxiomCheck leibniz("leibniz", "purely Hom-Poisson (iii): {f,gh} = sigma(g){f,h} + {f,g}sigma(h)");
    for_each_monomial_tuple(vars->size(), 3, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[0]);
        const Poly g = mono(m[1]);
        const Poly h = mono(m[2]);
        if (!jacobi.failed()) {
            Poly sum = bracket(bracket(f, g), sigma.apply(h)) + bracket(bracket(g, h), sigma.apply(f)) +
                       bracket(bracket(h, f), sigma.apply(g));
            jacobi.equal(sum, Poly(vars), [&] { return triple(f, g, h); });
        }
        if (!leibniz.failed())
            leibniz.equal(bracket(f, g * h), sigma.apply(g) * bracket(f, h) + bracket(f, g) * sigma.apply(h),
                          [&] { return triple(f, g, h); });
        return !(jacobi.failed() && leibniz.failed());
    });

    report.axioms = {skew.result(), morphism.result(), jacobi.result(), leibniz.result()};
    return report;
}

} // namespace homcalc
