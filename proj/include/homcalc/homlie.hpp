#pragma once

#include "homcalc/error.hpp"
#include "homcalc/exterior.hpp"
#include "homcalc/rational.hpp"
#include "homcalc/report.hpp"

#include <vector>

namespace homcalc {

using RationalVector = std::vector<Rational>;

// Finite-dimensional Hom-Lie algebra over Q with [e_i, e_j] = sum_k c_ij^k e_k and invertible twist.
class HomLieAlgebra {
public:
    // structure[(i*dim + j)*dim + k] = c_ij^k; stored as given, skew-symmetry is a verified axiom.
    HomLieAlgebra(unsigned dim, std::vector<Rational> structure, RationalMatrix twist);

    static HomLieAlgebra abelian(unsigned dim, RationalMatrix twist);

    unsigned dim() const { return dim_; }
    const RationalMatrix& twist() const { return twist_; }
    const RationalMatrix& twist_inverse() const { return twist_inverse_; }
    const Rational& structure(unsigned i, unsigned j, unsigned k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rational>& structure() const { return c_; }

    // Sets c_ij = v and c_ji = -v.
    void set_bracket(unsigned i, unsigned j, const RationalVector& v);

    RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
    RationalVector basis_vector(unsigned i) const;

    friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.c_ == b.c_ && a.twist_ == b.twist_;
    }

private:
    unsigned dim_;
    std::vector<Rational> c_;
    RationalMatrix twist_;
    RationalMatrix twist_inverse_;
};

VerificationReport verify_homlie(const HomLieAlgebra& g);

// (V, beta, rho) with rho(e_i) a dim V square matrix.
struct Representation {
    RationalMatrix beta;
    std::vector<RationalMatrix> rho;

    RationalMatrix action(const RationalVector& x) const;
};

VerificationReport verify_representation(const HomLieAlgebra& g, const Representation& r);
Representation adjoint(const HomLieAlgebra& g);
// (V*, (beta^-1)^T, rho*) with <rho*(x) xi, u> = -<xi, rho(Phi^-1 x) beta^-2 u>.
Representation dual_representation(const HomLieAlgebra& g, const Representation& r);
Representation coadjoint(const HomLieAlgebra& g);

// Graded extension of the bracket to the exterior algebra of g, twist applied to omitted factors.
MultiVector extended_bracket(const HomLieAlgebra& g, const MultiVector& x, const MultiVector& y);
MultiVector to_multivector(const RationalVector& v);
MultiVector apply_twist(const HomLieAlgebra& g, const MultiVector& x);

class PurelyHomLieBialgebra {
public:
    // Throws PreconditionError unless the dual twist is (Phi^-1)^T.
    PurelyHomLieBialgebra(HomLieAlgebra g, HomLieAlgebra dual);

    const HomLieAlgebra& algebra() const { return g_; }
    const HomLieAlgebra& dual() const { return dual_; }
    // Delta(x) with <Delta(x), xi ^ eta> = <x, [xi, eta]_*>.
    MultiVector cobracket(const RationalVector& x) const;

private:
    HomLieAlgebra g_;
    HomLieAlgebra dual_;
};

VerificationReport verify_bialgebra(const PurelyHomLieBialgebra& b);

struct QuadraticHomLieAlgebra {
    HomLieAlgebra algebra;
    RationalMatrix pairing;
};

// g + g* with the bracket built from both coadjoint actions and the pairing xi(y) + eta(x).
QuadraticHomLieAlgebra build_double(const PurelyHomLieBialgebra& b);
// Hom-Lie axioms plus symmetry, nondegeneracy, twist compatibility and invariance of the pairing.
VerificationReport verify_quadratic(const QuadraticHomLieAlgebra& q);

} // namespace homcalc
