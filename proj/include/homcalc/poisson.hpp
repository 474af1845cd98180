#pragma once

#include "homcalc/algebroid.hpp"
#include "homcalc/homlie.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"

#include <functional>
#include <string>

namespace homcalc {

// Bivector pi on the tangent Hom-Lie algebroid of a twisted polynomial ring.
class HomPoissonStructure {
public:
    // Throws GradeError unless pi is a bivector over the tangent algebroid of sigma.
    HomPoissonStructure(const RingAuto& sigma, MultiVector pi);

    const HomLieAlgebroid& tangent() const { return tangent_; }
    const MultiVector& bivector() const { return pi_; }
    const RingAuto& twist() const { return tangent_.twist(); }
    const Variables& variables() const { return tangent_.variables(); }

    friend bool operator==(const HomPoissonStructure& a, const HomPoissonStructure& b)
    {
        return a.twist() == b.twist() && a.pi_ == b.pi_;
    }

private:
    HomLieAlgebroid tangent_;
    MultiVector pi_;
};

// pi(xi, eta) = <xi ^ eta, pi> for 1-forms.
Poly evaluate_bivector(const MultiVector& pi, const MultiForm& xi, const MultiForm& eta);

// {f, g} = pi(df, dg).
Poly poisson_bracket(const HomPoissonStructure& p, const Poly& f, const Poly& g);

// pi#(xi) with <eta, pi#(xi)> = pi(xi, eta).
MultiVector pi_sharp(const HomPoissonStructure& p, const MultiForm& xi);

// [[pi, pi]] = 0 and Ad pi = pi exactly, plus a sampled cross-check of the Jacobiator formula.
VerificationReport verify_poisson(const HomPoissonStructure& p, const SampleConfig& config = {});

// Bundle dual to the tangent bundle with twist Ad^dagger, bracket L_{pi# xi} eta - L_{pi# eta} xi - d pi(xi, eta),
// anchor pi#. Throws PreconditionError unless pi is a Hom-Poisson tensor.
HomLieAlgebroid cotangent_algebroid(const HomPoissonStructure& p);

// Linear structure on the dual of g: coordinates x_k are the basis e_k as linear functions, sigma is the
// substitution x_k -> Phi(e_k), and pi^{ij} = sum_k c_ij^k x_k.
HomPoissonStructure linear_poisson_on_dual(const HomLieAlgebra& g);

using BracketOracle = std::function<Poly(const Poly&, const Poly&)>;

// Recovers pi from a bracket by pi^{ij} = {x_i, x_j}.
MultiVector bivector_from_bracket(const RingAuto& sigma, const BracketOracle& bracket);

// Skew-symmetry, sigma-multiplicativity, Hom-Jacobi and the twisted Leibniz rule on monomial samples.
VerificationReport verify_purely_hom_poisson(const RingAuto& sigma, const BracketOracle& bracket,
                                             const SampleConfig& config = {});

} // namespace homcalc
