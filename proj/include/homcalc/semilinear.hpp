#pragma once

#include "homcalc/exterior.hpp"
#include "homcalc/poly_matrix.hpp"
#include "homcalc/ring_auto.hpp"

#include <memory>
#include <vector>

namespace homcalc {

// phi(f e_J) = sigma(f) * (P e_{j1}) ^ ... ^ (P e_{jk}), with phi(e_j) = sum_i P_ij e_i.
class SemilinearMap {
public:
    SemilinearMap(PolyMatrix matrix, RingAuto twist);

    static SemilinearMap identity(const RingAuto& twist, unsigned rank);

    const PolyMatrix& matrix() const { return matrix_; }
    const RingAuto& twist() const { return twist_; }
    const Variables& variables() const { return twist_.variables(); }
    unsigned rank() const { return static_cast<unsigned>(matrix_.rows()); }
    bool is_identity() const { return trivial_; }

    template <Side S>
    Multi<S> apply(const Multi<S>& x) const;
    Poly apply(const Poly& f) const { return twist_.apply(f); }

    // Matrix sigma^-1(P^-1), twist sigma^-1.
    SemilinearMap inverse() const;
    // Action on forms: <dagger(xi), x> = sigma <xi, phi^-1 x>; matrix (P^-1)^T, twist sigma.
    SemilinearMap dagger() const;
    // (this o inner): matrix P * sigma(Q), twist sigma o tau.
    SemilinearMap compose(const SemilinearMap& inner) const;

    friend bool operator==(const SemilinearMap& a, const SemilinearMap& b)
    {
        return a.twist_ == b.twist_ && a.matrix_ == b.matrix_;
    }

private:
    PolyMatrix matrix_;
    RingAuto twist_;
    bool trivial_ = false;
    // Basis images indexed by IndexSet; filled for every set when the rank is small.
    std::shared_ptr<const std::vector<MultiVector>> images_;

    MultiVector basis_image(IndexSet set) const;
};

} // namespace homcalc

namespace homcalc {

// i_X xi = contract(phi X, phi^dagger xi): grade m - k.
MultiForm interior(const SemilinearMap& phi, const SemilinearMap& phi_dagger, const MultiVector& x, const MultiForm& xi);
MultiForm interior(const SemilinearMap& phi, const MultiVector& x, const MultiForm& xi);

} // namespace homcalc
