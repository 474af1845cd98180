#pragma once

#include "homcalc/poly.hpp"
#include "homcalc/ring_auto.hpp"

#include <string>
#include <vector>

namespace homcalc {

// D = sum_mu h_mu * (sigma o d/dx_mu); satisfies D(fg) = D(f)sigma(g) + sigma(f)D(g).
class SigmaDerivation {
public:
    SigmaDerivation(RingAuto sigma, std::vector<Poly> coefficients);

    static SigmaDerivation zero(const RingAuto& sigma);
    static SigmaDerivation basis(const RingAuto& sigma, std::size_t mu);

    const RingAuto& sigma() const { return sigma_; }
    const Variables& variables() const { return sigma_.variables(); }
    const std::vector<Poly>& coefficients() const { return coefficients_; }
    const Poly& coefficient(std::size_t mu) const { return coefficients_[mu]; }
    bool is_zero() const;

    Poly apply(const Poly& f) const;
    // sigma o D o sigma^-1
    SigmaDerivation ad() const;
    SigmaDerivation scaled(const Poly& f) const;

    SigmaDerivation& operator+=(const SigmaDerivation& other);
    friend SigmaDerivation operator+(SigmaDerivation a, const SigmaDerivation& b) { return a += b; }
    friend SigmaDerivation operator-(SigmaDerivation a, const SigmaDerivation& b);
    friend bool operator==(const SigmaDerivation& a, const SigmaDerivation& b);

    std::string to_string() const;

private:
    RingAuto sigma_;
    std::vector<Poly> coefficients_;
};

// sigma D1 sigma^-1 D2 sigma^-1 - sigma D2 sigma^-1 D1 sigma^-1
SigmaDerivation sder_bracket(const SigmaDerivation& d1, const SigmaDerivation& d2);

} // namespace homcalc
