#pragma once

#include "homcalc/algebroid.hpp"
#include "homcalc/bialgebroid.hpp"
#include "homcalc/poly_matrix.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace homcalc {

// Sections are grade-1 MultiVectors over the bundle; the operation is stored on basis pairs and extended
// to arbitrary sections by e . fh = sigma(f) e . h + rho(phi e)(f) phi h and
// (fe) . h = sigma(f) e . h - rho(phi h)(f) phi e + D(f) sigma(B(e, h)).
class HomCourantAlgebroid {
public:
    // circ[(i*N + j)*N + k] = (e_i . e_j)_k. Throws PreconditionError for a non-symmetric pairing and
    // NonInvertible unless its determinant is a nonzero rational.
    HomCourantAlgebroid(HomBundle bundle, PolyMatrix pairing, std::vector<Poly> circ,
                        std::vector<SigmaDerivation> anchor);

    const HomBundle& bundle() const { return bundle_; }
    unsigned rank() const { return bundle_.rank(); }
    const Variables& variables() const { return bundle_.variables(); }
    const RingAuto& twist() const { return bundle_.twist(); }

    const PolyMatrix& pairing() const { return pairing_; }
    const Poly& circ(unsigned i, unsigned j, unsigned k) const { return circ_[(i * rank() + j) * rank() + k]; }
    const std::vector<Poly>& circ() const { return circ_; }
    const SigmaDerivation& anchor(unsigned i) const { return anchor_[i]; }
    const std::vector<SigmaDerivation>& anchors() const { return anchor_; }

    MultiVector section(unsigned i, const Poly& f) const;
    const MultiVector& basis_circ(unsigned i, unsigned j) const { return cache_->basis_circ[i * rank() + j]; }
    const MultiVector& phi_basis(unsigned i) const { return cache_->phi_basis[i]; }
    const SigmaDerivation& anchor_phi(unsigned i) const { return cache_->anchor_phi[i]; }
    const PolyMatrix& pairing_inverse() const { return cache_->pairing_inverse; }

    friend bool operator==(const HomCourantAlgebroid& a, const HomCourantAlgebroid& b)
    {
        return a.bundle_ == b.bundle_ && a.pairing_ == b.pairing_ && a.circ_ == b.circ_ && a.anchor_ == b.anchor_;
    }

    std::string to_string() const;

private:
    struct Cache {
        std::vector<MultiVector> basis_circ;
        std::vector<MultiVector> phi_basis;
        std::vector<SigmaDerivation> anchor_phi;
        PolyMatrix pairing_inverse;
    };

    HomBundle bundle_;
    PolyMatrix pairing_;
    std::vector<Poly> circ_;
    std::vector<SigmaDerivation> anchor_;
    std::shared_ptr<const Cache> cache_;
};

Poly pairing(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h);
SigmaDerivation anchor_of(const HomCourantAlgebroid& c, const MultiVector& e);
MultiVector circ(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h);
// [[e, h]] = (e . h - h . e) / 2.
MultiVector skew_bracket(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h);
// D f with B(D f, e) = rho(e) f.
MultiVector gradient(const HomCourantAlgebroid& c, const Poly& f);

// Axioms (i)-(vi) and the derived identities on basis sections with monomial multipliers.
VerificationReport verify_courant(const HomCourantAlgebroid& c, const SampleConfig& config = {});

// E = A + A* with B(x + xi, y + eta) = xi(y) + eta(x), twist phi_A + phi_A^dagger and anchor a_A + a_A*.
HomCourantAlgebroid build_double(const HomLieBialgebroid& b);

// Operation of the double evaluated directly on arbitrary sections:
// ([x,y] + L*_xi y - i_eta d_* phi^-1 x) + ([xi,eta]_* + L_x eta - i_y d (phi^dagger)^-1 xi).
MultiVector double_operation(const HomLieBialgebroid& b, const MultiVector& e, const MultiVector& h);

// Double of the tangent algebroid with the trivial dual: rho is the projection to the tangent part.
HomCourantAlgebroid standard_courant(const RingAuto& sigma);

// V0 = sections of a bundle of the given rank, V1 = functions. l2(m, x) is -l2(x, m).
struct HomLie2Algebra {
    Variables variables;
    unsigned rank = 0;
    std::function<MultiVector(const Poly&)> l1;
    std::function<MultiVector(const MultiVector&, const MultiVector&)> l2;
    std::function<Poly(const MultiVector&, const Poly&)> l2_mixed;
    std::function<Poly(const MultiVector&, const MultiVector&, const MultiVector&)> l3;
    std::function<MultiVector(const MultiVector&)> phi0;
    std::function<Poly(const Poly&)> phi1;
};

// l1 = D, l2 = [[.,.]], l2(e, f) = B(e, D f)/2, l3 = -T with T = B([[e1,e2]], phi e3)/6 + c.p.
// Throws PreconditionError when the Courant axioms fail at sample degree 1.
HomLie2Algebra to_hom_lie_2(const HomCourantAlgebroid& c);

// T(e1, e2, e3) = B([[e1,e2]], phi e3)/6 + c.p.
Poly courant_cubic(const HomCourantAlgebroid& c, const MultiVector& e1, const MultiVector& e2, const MultiVector& e3);

// Compatibility squares and conditions (a), (b), (c1), (c2), (d) on basis sections with monomial multipliers.
VerificationReport verify_hom_lie_2(const HomLie2Algebra& t, const SampleConfig& config = {});

} // namespace homcalc
