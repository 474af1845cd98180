#include "homcalc/bialgebroid.hpp"

namespace homcalc {

HomLieBialgebroid::HomLieBialgebroid(HomLieAlgebroid a, HomLieAlgebroid a_star)
    : a_(std::move(a)), a_star_(std::move(a_star))
{
    if (a_.rank() != a_star_.rank()) throw RankMismatch("bialgebroid constituents have different ranks");
    if (!(a_star_.bundle() == a_.bundle().dual()))
        throw PreconditionError("dual constituent must carry the dagger twist of the first");
}

MultiVector dual_differential(const HomLieBialgebroid& b, const MultiVector& x)
{
    return relabel(differential(b.dual(), relabel(x)));
}

MultiVector dual_differential(const HomLieBialgebroid& b, const Poly& f)
{
    return relabel(differential(b.dual(), f));
}

Poly induced_bracket(const HomLieBialgebroid& b, const Poly& f, const Poly& g)
{
    return pair(differential(b.algebroid(), f), dual_differential(b, g));
}

MultiVector anchor_composite(const HomLieAlgebroid& from, const HomLieAlgebroid& to)
{
    if (from.rank() != to.rank()) throw RankMismatch("anchor composite of different ranks");
    const Variables& vars = from.variables();
    const unsigned m = static_cast<unsigned>(vars->size());
    MultiVector out(vars, m, 2);
    for (unsigned mu = 0; mu < m; ++mu)
        for (unsigned nu = mu + 1; nu < m; ++nu) {
            Poly entry(vars);
            for (unsigned i = 0; i < from.rank(); ++i)
                entry += to.anchor(i).coefficient(mu) * from.anchor(i).coefficient(nu);
            out.add((IndexSet{1} << mu) | (IndexSet{1} << nu), entry);
        }
    return out;
}

namespace {

void append_prefixed(VerificationReport& report, const VerificationReport& part, const std::string& prefix)
{
    for (AxiomResult r : part.axioms) {
        r.id = prefix + r.id;
        report.axioms.push_back(std::move(r));
    }
}

} // namespace

VerificationReport verify_bialgebroid(const HomLieBialgebroid& b, const SampleConfig& config)
{
    VerificationReport report;
    const HomLieAlgebroid& a = b.algebroid();
    const HomLieAlgebroid& s = b.dual();
    const unsigned n = a.rank();
    report.structure = "Hom-Lie bialgebroid of rank " + std::to_string(n);
    report.sample_degree = config.max_degree;
    append_prefixed(report, verify_algebroid(a, config), "A.");
    append_prefixed(report, verify_algebroid(s, config), "A*.");
    if (!report.passed()) return report;

    const Variables& vars = a.variables();
    const std::size_t nv = vars->size();
    const SemilinearMap& phi = a.bundle().phi();
    auto mono = [&](const Monomial& m) { return Poly::monomial(vars, m); };

    AxiomCheck compat("compatibility", "Hom-Lie bialgebroid: d_*[x,y] = [[d_* x, phi y]] + [[phi x, d_* y]]");
    AxiomCheck lie("lie-exact", "L_{df} x = [x, d_* f], L the Lie derivative of the dual constituent");
    AxiomCheck exact("exact-bracket", "[d_* f, d_* g] = d_*(pi#(delta f) g) with pi# = a_A o a_{A*}^*");
    const HomLieAlgebroid tangent = tangent_algebroid(a.twist());
    const MultiVector composite = anchor_composite(a, s);
    for_each_monomial_tuple(nv, 2, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[0]);
        const Poly g = mono(m[1]);
        for (unsigned i = 0; i < n && !compat.failed(); ++i)
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector x = a.section(i, f);
                const MultiVector y = a.section(j, g);
                MultiVector rhs = schouten(a, dual_differential(b, x), phi.apply(y)) +
                                  schouten(a, phi.apply(x), dual_differential(b, y));
                if (!compat.equal(dual_differential(b, bracket(a, x, y)), rhs,
                                  [&] { return "x=" + x.to_string() + ", y=" + y.to_string(); }))
                    break;
            }
        for (unsigned i = 0; i < n && !lie.failed(); ++i) {
            const MultiVector x = a.section(i, g);
            MultiVector lhs = relabel(lie_derivative(s, relabel(differential(a, f)), relabel(x)));
            lie.equal(lhs, bracket(a, x, dual_differential(b, f)),
                      [&] { return "f=" + f.to_string() + ", x=" + x.to_string(); });
        }
        if (!exact.failed())
            exact.equal(bracket(a, dual_differential(b, f), dual_differential(b, g)),
                        dual_differential(b, evaluate_bivector(composite, differential(tangent, f),
                                                               differential(tangent, g))),
                        [&] { return "f=" + f.to_string() + ", g=" + g.to_string(); });
        return !(compat.failed() && lie.failed() && exact.failed());
    });

    report.axioms.push_back(compat.result());
    report.axioms.push_back(lie.result());
    report.axioms.push_back(exact.result());
    return report;
}

HomLieBialgebroid from_poisson(const HomPoissonStructure& p)
{
    return HomLieBialgebroid(p.tangent(), cotangent_algebroid(p));
}

HomLieBialgebroid with_trivial_dual(const HomLieAlgebroid& a)
{
    const unsigned n = a.rank();
    std::vector<Poly> c(static_cast<std::size_t>(n) * n * n, Poly(a.variables()));
    std::vector<SigmaDerivation> anchor(n, SigmaDerivation::zero(a.twist()));
    return HomLieBialgebroid(a, HomLieAlgebroid(a.bundle().dual(), std::move(c), std::move(anchor)));
}

HomPoissonStructure induced_poisson(const HomLieBialgebroid& b)
{
    const Variables& vars = b.algebroid().variables();
    const unsigned m = static_cast<unsigned>(vars->size());
    MultiVector pi(vars, m, 2);
    for (unsigned mu = 0; mu < m; ++mu)
        for (unsigned nu = mu + 1; nu < m; ++nu)
            pi.add((IndexSet{1} << mu) | (IndexSet{1} << nu),
                   induced_bracket(b, Poly::variable(vars, mu), Poly::variable(vars, nu)));
    return HomPoissonStructure(b.algebroid().twist(), std::move(pi));
}

HomLieBialgebroid dual_bialgebroid(const HomLieBialgebroid& b)
{
    return HomLieBialgebroid(b.dual(), b.algebroid());
}

} // namespace homcalc
