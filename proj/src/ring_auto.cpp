#include "homcalc/ring_auto.hpp"

#include "homcalc/error.hpp"

#include <stdexcept>

namespace homcalc {

struct RingAuto::Data {
    Variables vars;
    std::vector<Poly> images;
    RationalMatrix linear;
    std::vector<Rational> translation;
    bool identity = true;
    // Set when every image is c_i * x_{target_i}.
    bool monomial_map = true;
    std::vector<std::size_t> target;
    std::vector<Rational> scale;
};

namespace {

std::shared_ptr<const RingAuto::Data> make_data(const Variables& vars, const RationalMatrix& linear,
                                                const std::vector<Rational>& translation)
{
    auto d = std::make_shared<RingAuto::Data>();
    const std::size_t n = vars->size();
    d->vars = vars;
    d->linear = linear;
    d->translation = translation;
    d->identity = linear.is_identity();
    d->target.assign(n, 0);
    d->scale.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (translation[i] != 0) {
            d->identity = false;
            d->monomial_map = false;
        }
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (linear(i, j) == 0) continue;
            ++nonzero;
            d->target[i] = j;
            d->scale[i] = linear(i, j);
        }
        if (nonzero != 1) d->monomial_map = false;
        Poly img = Poly::constant(vars, translation[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (linear(i, j) != 0) img += Poly::variable(vars, j) * linear(i, j);
        d->images.push_back(std::move(img));
    }
    return d;
}

std::shared_ptr<const RingAuto::Data> inverse_data(const RingAuto::Data& d)
{
    RationalMatrix inv = d.linear.inverse();
    std::vector<Rational> t = inv.apply(d.translation);
    for (auto& v : t) v = -v;
    return make_data(d.vars, inv, t);
}

} // namespace

RingAuto::RingAuto() : RingAuto(identity(make_variables({}))) {}

RingAuto::RingAuto(std::shared_ptr<const Data> forward, std::shared_ptr<const Data> backward)
    : forward_(std::move(forward)), backward_(std::move(backward))
{
}

RingAuto RingAuto::identity(Variables vars)
{
    const std::size_t n = vars->size();
    return affine(std::move(vars), RationalMatrix::identity(n), std::vector<Rational>(n));
}

RingAuto RingAuto::affine(Variables vars, const RationalMatrix& linear, const std::vector<Rational>& translation)
{
    const std::size_t n = vars->size();
    if (linear.rows() != n || linear.cols() != n || translation.size() != n)
        throw std::invalid_argument("automorphism data does not match the variable count");
    auto fwd = make_data(vars, linear, translation);
    auto bwd = inverse_data(*fwd);
    return RingAuto(std::move(fwd), std::move(bwd));
}

RingAuto RingAuto::scaling(Variables vars, const std::vector<Rational>& factors)
{
    const std::size_t n = vars->size();
    if (factors.size() != n) throw std::invalid_argument("scaling needs one factor per variable");
    return affine(std::move(vars), RationalMatrix::diagonal(factors), std::vector<Rational>(n));
}

RingAuto RingAuto::from_images(Variables vars, std::vector<Poly> images)
{
    const std::size_t n = vars->size();
    if (images.size() != n) throw std::invalid_argument("automorphism needs one image per variable");
    RationalMatrix linear(n, n);
    std::vector<Rational> translation(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Poly& img = images[i];
        if (!img.is_constant() && !same_variables(img.variables(), vars))
            throw VariableMismatch("automorphism image over a different variable list");
        if (img.degree() > 1)
            throw std::invalid_argument("image of " + vars->name(i) + " is not affine: " + img.to_string());
        for (const auto& t : img.terms()) {
            if (t.monomial.is_one()) {
                translation[i] = t.coefficient;
                continue;
            }
            for (std::size_t j = 0; j < n; ++j)
                if (t.monomial.exponents[j] == 1) linear(i, j) = t.coefficient;
        }
    }
    return affine(std::move(vars), linear, translation);
}

const Variables& RingAuto::variables() const { return forward_->vars; }
const std::vector<Poly>& RingAuto::images() const { return forward_->images; }
const RationalMatrix& RingAuto::linear() const { return forward_->linear; }
const std::vector<Rational>& RingAuto::translation() const { return forward_->translation; }
bool RingAuto::is_identity() const { return forward_->identity; }

Poly RingAuto::apply(const Poly& f) const
{
    const Data& d = *forward_;
    if (f.is_constant()) return Poly::constant(d.vars, f.constant_value());
    if (!same_variables(f.variables(), d.vars)) throw VariableMismatch("automorphism applied to a foreign polynomial");
    if (d.identity) return f;
    const std::size_t n = d.vars->size();
    if (d.monomial_map) {
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            Term img{Monomial{}, t.coefficient};
            for (std::size_t i = 0; i < n; ++i) {
                auto e = t.monomial.exponents[i];
                if (e == 0) continue;
                img.monomial.exponents[d.target[i]] = static_cast<std::uint16_t>(img.monomial.exponents[d.target[i]] + e);
                Rational p;
                mpz_pow_ui(mpq_numref(p.get_mpq_t()), mpq_numref(d.scale[i].get_mpq_t()), e);
                mpz_pow_ui(mpq_denref(p.get_mpq_t()), mpq_denref(d.scale[i].get_mpq_t()), e);
                p.canonicalize();
                img.coefficient *= p;
            }
            out.push_back(std::move(img));
        }
        return Poly::from_terms(d.vars, std::move(out));
    }
    std::vector<std::vector<Poly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Poly::constant(d.vars, 1));
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * d.images[i]);
        return powers[i][e];
    };
    Poly out(d.vars);
    for (const auto& t : f.terms()) {
        Poly term = Poly::constant(d.vars, t.coefficient);
        for (std::size_t i = 0; i < n; ++i)
            if (t.monomial.exponents[i]) term *= power(i, t.monomial.exponents[i]);
        out += term;
    }
    return out;
}

RingAuto RingAuto::inverse() const { return RingAuto(backward_, forward_); }

RingAuto RingAuto::compose(const RingAuto& inner) const
{
    if (!same_variables(variables(), inner.variables())) throw VariableMismatch("composing automorphisms of different rings");
    std::vector<Poly> images;
    for (const auto& img : inner.images()) images.push_back(apply(img));
    return from_images(variables(), std::move(images));
}

RingAuto RingAuto::power(int k) const
{
    RingAuto base = k < 0 ? inverse() : *this;
    RingAuto result = identity(variables());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) result = base.compose(result);
    return result;
}

bool operator==(const RingAuto& a, const RingAuto& b)
{
    return same_variables(a.variables(), b.variables()) && a.linear() == b.linear() &&
           a.translation() == b.translation();
}

} // namespace homcalc
