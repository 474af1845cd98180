#pragma once

#include "homcalc/error.hpp"
#include "homcalc/exterior.hpp"
#include "homcalc/homlie.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"
#include "homcalc/semilinear.hpp"
#include "homcalc/sigma_derivation.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace homcalc {

// Free module of a given rank over the polynomial ring with an invertible sigma-semilinear twist.
class HomBundle {
public:
    // Throws NonInvertible unless the twist matrix has a nonzero rational determinant.
    explicit HomBundle(SemilinearMap phi);

    const SemilinearMap& phi() const { return phi_; }
    const SemilinearMap& phi_inverse() const { return phi_inverse_; }
    // Twist on forms and its inverse.
    const SemilinearMap& dagger() const { return dagger_; }
    const SemilinearMap& dagger_inverse() const { return dagger_inverse_; }
    const RingAuto& twist() const { return phi_.twist(); }
    const Variables& variables() const { return phi_.variables(); }
    unsigned rank() const { return phi_.rank(); }

    // The dual bundle, twisted by the dagger.
    HomBundle dual() const;

    friend bool operator==(const HomBundle& a, const HomBundle& b) { return a.phi_ == b.phi_; }

private:
    SemilinearMap phi_;
    SemilinearMap phi_inverse_;
    SemilinearMap dagger_;
    SemilinearMap dagger_inverse_;
};

// Deliberate single-sign faults used to measure the reach of the identity catalog.
enum class Mutation {
    none,
    differential_anchor_sign,
    differential_bracket_sign,
    differential_function_sign,
    schouten_sign,
    schouten_anchor_sign,
    schouten_function_sign,
    interior_sign,
    interior_multivector_sign,
    lie_form_sign,
    bracket_left_leibniz_sign,
    bracket_right_leibniz_sign,
};

std::vector<Mutation> all_mutations();
std::string to_string(Mutation m);

// Structure functions c_ij^k with [e_i, e_j] = sum_k c_ij^k e_k and anchor a(e_i) in Der_{sigma,sigma}.
class HomLieAlgebroid {
public:
    // structure[(i*n + j)*n + k] = c_ij^k.
    HomLieAlgebroid(HomBundle bundle, std::vector<Poly> structure, std::vector<SigmaDerivation> anchor);

    const HomBundle& bundle() const { return bundle_; }
    unsigned rank() const { return bundle_.rank(); }
    const Variables& variables() const { return bundle_.variables(); }
    const RingAuto& twist() const { return bundle_.twist(); }

    const Poly& structure(unsigned i, unsigned j, unsigned k) const { return c_[(i * rank() + j) * rank() + k]; }
    const std::vector<Poly>& structure() const { return c_; }
    const SigmaDerivation& anchor(unsigned i) const { return anchor_[i]; }
    const std::vector<SigmaDerivation>& anchors() const { return anchor_; }

    // Basis bracket [e_i, e_j] as a section.
    MultiVector basis_bracket(unsigned i, unsigned j) const;
    // phi(e_i), a(phi e_i), phi^-1(e_i), [phi^-1 e_i, phi^-1 e_j].
    const MultiVector& phi_basis(unsigned i) const { return cache_->phi_basis[i]; }
    const SigmaDerivation& anchor_phi(unsigned i) const { return cache_->anchor_phi[i]; }
    const MultiVector& inverse_basis(unsigned i) const { return cache_->inverse_basis[i]; }
    const MultiVector& shifted_bracket(unsigned i, unsigned j) const { return cache_->shifted[i * rank() + j]; }

    MultiVector section(unsigned i, const Poly& f) const;
    MultiForm coframe(unsigned i, const Poly& f) const;
    Poly function(const Rational& c) const { return Poly::constant(variables(), c); }

    Mutation mutation() const { return mutation_; }
    HomLieAlgebroid with_mutation(Mutation m) const;

    // Exact comparison of bundle, structure functions and anchors.
    friend bool operator==(const HomLieAlgebroid& a, const HomLieAlgebroid& b)
    {
        return a.bundle_ == b.bundle_ && a.c_ == b.c_ && a.anchor_ == b.anchor_;
    }

    std::string to_string() const;

private:
    struct Cache {
        std::vector<MultiVector> phi_basis;
        std::vector<SigmaDerivation> anchor_phi;
        std::vector<MultiVector> inverse_basis;
        std::vector<MultiVector> shifted;
    };

    HomBundle bundle_;
    std::vector<Poly> c_;
    std::vector<SigmaDerivation> anchor_;
    Mutation mutation_ = Mutation::none;
    std::shared_ptr<const Cache> cache_;

    void build_cache();
};

// a(x) and a(phi x) for a section x.
SigmaDerivation anchor_of(const HomLieAlgebroid& alg, const MultiVector& x);
SigmaDerivation anchor_of_twisted(const HomLieAlgebroid& alg, const MultiVector& x);

// [x, y]_A for arbitrary sections, expanded by skew-symmetry and the twisted Leibniz rule.
MultiVector bracket(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y);

// Twisted Chevalley-Eilenberg differential; grade-0 forms are functions.
MultiForm differential(const HomLieAlgebroid& alg, const MultiForm& xi);
MultiForm differential(const HomLieAlgebroid& alg, const Poly& f);

// Hom-Schouten bracket of multisections; grade-0 inputs are functions.
MultiVector schouten(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y);

// i_X Xi = (phi^dagger Xi)(phi X, ...), grade m - k.
MultiForm interior(const HomLieAlgebroid& alg, const MultiVector& x, const MultiForm& xi);
// i_Xi X = (phi X)(phi^dagger Xi, ...), grade k - m.
MultiVector interior(const HomLieAlgebroid& alg, const MultiForm& xi, const MultiVector& x);

// L_x X = [[x, X]] for a section x.
MultiVector lie_derivative(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y);
// L_X Xi = (i_X d - (-1)^k d i_{phi^-1 X}) ((phi^dagger)^-1 Xi).
MultiForm lie_derivative(const HomLieAlgebroid& alg, const MultiVector& x, const MultiForm& xi);

// Pullback tangent bundle: basis D_mu = sigma o d/dx_mu, twist Ad_sigma, bracket [.,.]_sigma, identity anchor.
HomLieAlgebroid tangent_algebroid(const RingAuto& sigma);

// Matrix of Ad_sigma on the basis sigma o d/dx_mu.
RationalMatrix ad_matrix(const RingAuto& sigma);

// Trivial bundle with fiber g; throws PreconditionError naming the failed action identity.
HomLieAlgebroid action_algebroid(const HomLieAlgebra& g, const std::vector<SigmaDerivation>& action);

// Pullback of a classical Lie algebroid (identity twists) along sigma, twisted by the bracket morphism alpha.
// Bracket [x!, y!] = [alpha x, alpha y]!, anchor a(x!) = sigma o a(x). Throws PreconditionError.
HomLieAlgebroid twist_lie_algebroid(const HomLieAlgebroid& classical, const SemilinearMap& alpha);

using DifferentialOracle = std::function<MultiForm(const MultiForm&)>;

// Anchor a(x)(f) = <df, x>; bracket from d on the dagger-shifted coframe.
// Throws PreconditionError when the operator violates a sampled law of a twisted DGCA.
HomLieAlgebroid reconstruct_from_differential(const HomBundle& bundle, const DifferentialOracle& d,
                                              const SampleConfig& config = {});

// Hom-Lie algebra axioms of the section bracket, the twisted Leibniz rule and the anchor representation.
VerificationReport verify_algebroid(const HomLieAlgebroid& alg, const SampleConfig& config = {});

} // namespace homcalc
