#pragma once

#include "homcalc/algebroid.hpp"
#include "homcalc/poisson.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"

namespace homcalc {

// Pair of Hom-Lie algebroids on dual bundles. Sections of the dual constituent are forms of the first.
class HomLieBialgebroid {
public:
    // Throws RankMismatch or PreconditionError unless the dual constituent lives on the dual bundle.
    HomLieBialgebroid(HomLieAlgebroid a, HomLieAlgebroid a_star);

    const HomLieAlgebroid& algebroid() const { return a_; }
    const HomLieAlgebroid& dual() const { return a_star_; }

    friend bool operator==(const HomLieBialgebroid& x, const HomLieBialgebroid& y)
    {
        return x.a_ == y.a_ && x.a_star_ == y.a_star_;
    }

private:
    HomLieAlgebroid a_;
    HomLieAlgebroid a_star_;
};

// d_* on multisections of A: the differential of the dual constituent.
MultiVector dual_differential(const HomLieBialgebroid& b, const MultiVector& x);
MultiVector dual_differential(const HomLieBialgebroid& b, const Poly& f);

// {f, g} = <d f, d_* g>.
Poly induced_bracket(const HomLieBialgebroid& b, const Poly& f, const Poly& g);

// Bivector of the composite a_from o a_to^*, read off as P(e^mu, e^nu) = <e^nu, (a_from o a_to^*)(e^mu)>.
MultiVector anchor_composite(const HomLieAlgebroid& from, const HomLieAlgebroid& to);

// Constituent axioms, then d_*[x,y] = [[d_* x, phi y]] + [[phi x, d_* y]], L_{df} x = [x, d_* f] and
// [d_* f, d_* g] = d_*(pi#(delta f) g) with pi# = a_A o a_{A*}^*, on monomial samples. A failing constituent
// ends the report early.
VerificationReport verify_bialgebroid(const HomLieBialgebroid& b, const SampleConfig& config = {});

// Tangent algebroid paired with the cotangent algebroid. Throws PreconditionError for an invalid tensor.
HomLieBialgebroid from_poisson(const HomPoissonStructure& p);

// A paired with the dual bundle carrying the zero bracket and zero anchor.
HomLieBialgebroid with_trivial_dual(const HomLieAlgebroid& a);

// Poisson tensor on the base with pi(dx_mu, dx_nu) = {x_mu, x_nu}.
HomPoissonStructure induced_poisson(const HomLieBialgebroid& b);

// (A*, A).
HomLieBialgebroid dual_bialgebroid(const HomLieBialgebroid& b);

} // namespace homcalc
