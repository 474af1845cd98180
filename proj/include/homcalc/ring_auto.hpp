#pragma once

#include "homcalc/poly.hpp"
#include "homcalc/rational.hpp"

#include <memory>
#include <vector>

namespace homcalc {

// Invertible affine substitution x_i -> sum_j L_ij x_j + t_i acting on polynomials.
class RingAuto {
public:
    RingAuto();

    static RingAuto identity(Variables vars);
    // Throws std::invalid_argument for non-affine images, NonInvertible for a singular linear part.
    static RingAuto from_images(Variables vars, std::vector<Poly> images);
    static RingAuto affine(Variables vars, const RationalMatrix& linear, const std::vector<Rational>& translation);
    static RingAuto scaling(Variables vars, const std::vector<Rational>& factors);

    const Variables& variables() const;
    const std::vector<Poly>& images() const;
    const RationalMatrix& linear() const;
    const std::vector<Rational>& translation() const;
    bool is_identity() const;

    Poly apply(const Poly& f) const;
    RingAuto inverse() const;
    // (this o inner)(f) = this(inner(f)).
    RingAuto compose(const RingAuto& inner) const;
    RingAuto power(int k) const;

    friend bool operator==(const RingAuto& a, const RingAuto& b);

    struct Data;

private:
    RingAuto(std::shared_ptr<const Data> forward, std::shared_ptr<const Data> backward);

    std::shared_ptr<const Data> forward_;
    std::shared_ptr<const Data> backward_;
};

} // namespace homcalc
