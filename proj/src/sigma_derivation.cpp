#include "homcalc/sigma_derivation.hpp"

#include "homcalc/error.hpp"

namespace homcalc {

namespace {

void require_same(const SigmaDerivation& a, const SigmaDerivation& b)
{
    if (!(a.sigma() == b.sigma())) throw VariableMismatch("derivations twisted by different automorphisms");
}

} // namespace

SigmaDerivation::SigmaDerivation(RingAuto sigma, std::vector<Poly> coefficients)
    : sigma_(std::move(sigma)), coefficients_(std::move(coefficients))
{
    const auto& vars = sigma_.variables();
    if (coefficients_.size() != vars->size()) throw std::invalid_argument("derivation needs one coefficient per variable");
    for (auto& c : coefficients_) {
        if (c.is_constant())
            c = Poly::constant(vars, c.constant_value());
        else if (!same_variables(c.variables(), vars))
            throw VariableMismatch("derivation coefficient over a foreign ring");
    }
}

SigmaDerivation SigmaDerivation::zero(const RingAuto& sigma)
{
    return SigmaDerivation(sigma, std::vector<Poly>(sigma.variables()->size(), Poly(sigma.variables())));
}

SigmaDerivation SigmaDerivation::basis(const RingAuto& sigma, std::size_t mu)
{
    SigmaDerivation d = zero(sigma);
    d.coefficients_.at(mu) = Poly::constant(sigma.variables(), 1);
    return d;
}

bool SigmaDerivation::is_zero() const
{
    for (const auto& c : coefficients_)
        if (!c.is_zero()) return false;
    return true;
}

Poly SigmaDerivation::apply(const Poly& f) const
{
    Poly out(variables());
    for (std::size_t mu = 0; mu < coefficients_.size(); ++mu) {
        if (coefficients_[mu].is_zero()) continue;
        Poly df = f.derivative(mu);
        if (df.is_zero()) continue;
        out += coefficients_[mu] * sigma_.apply(df);
    }
    return out;
}

SigmaDerivation SigmaDerivation::ad() const
{
    const RingAuto inv = sigma_.inverse();
    std::vector<Poly> coeffs;
    for (std::size_t nu = 0; nu < coefficients_.size(); ++nu)
        coeffs.push_back(sigma_.apply(apply(inv.images()[nu])));
    return SigmaDerivation(sigma_, std::move(coeffs));
}

SigmaDerivation SigmaDerivation::scaled(const Poly& f) const
{
    SigmaDerivation out = *this;
    for (auto& c : out.coefficients_) c = f * c;
    return out;
}

SigmaDerivation& SigmaDerivation::operator+=(const SigmaDerivation& other)
{
    require_same(*this, other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
}

SigmaDerivation operator-(SigmaDerivation a, const SigmaDerivation& b)
{
    require_same(a, b);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) a.coefficients_[i] -= b.coefficients_[i];
    return a;
}

bool operator==(const SigmaDerivation& a, const SigmaDerivation& b)
{
    return a.sigma_ == b.sigma_ && a.coefficients_ == b.coefficients_;
}

std::string SigmaDerivation::to_string() const
{
    std::string out;
    for (std::size_t mu = 0; mu < coefficients_.size(); ++mu) {
        if (coefficients_[mu].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coefficients_[mu].to_string() + ")*D_" + variables()->name(mu);
    }
    return out.empty() ? "0" : out;
}

SigmaDerivation sder_bracket(const SigmaDerivation& d1, const SigmaDerivation& d2)
{
    require_same(d1, d2);
    const RingAuto& s = d1.sigma();
    const RingAuto inv = s.inverse();
    std::vector<Poly> coeffs;
    for (const auto& x : inv.images()) {
        Poly a = s.apply(d1.apply(inv.apply(d2.apply(x))));
        Poly b = s.apply(d2.apply(inv.apply(d1.apply(x))));
        coeffs.push_back(a - b);
    }
    return SigmaDerivation(s, std::move(coeffs));
}

} // namespace homcalc
