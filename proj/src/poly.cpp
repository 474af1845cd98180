#include "homcalc/poly.hpp"

#include "homcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace homcalc {

namespace {

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

const Variables& empty_variables()
{
    static const Variables vars = std::make_shared<const VariableSet>(std::vector<std::string>{});
    return vars;
}

void sort_and_combine(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.monomial, b.monomial); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = std::move(terms[i]);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].monomial == acc.monomial; ++j) acc.coefficient += terms[j].coefficient;
        if (acc.coefficient != 0) terms[out++] = std::move(acc);
        i = j;
    }
    terms.resize(out);
}

std::string monomial_string(const Monomial& m, const VariableSet& vars)
{
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (m.exponents[i] > 1) out += '^' + std::to_string(m.exponents[i]);
    }
    return out;
}

} // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > kMaxVariables)
        throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Variables make_variables(std::vector<std::string> names)
{
    return std::make_shared<const VariableSet>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b)
{
    return a == b || *a == *b;
}

Monomial Monomial::variable(std::size_t index)
{
    Monomial m;
    m.exponents[index] = 1;
    return m;
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto e : exponents) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exponents[i] = static_cast<std::uint16_t>(a.exponents[i] + b.exponents[i]);
    return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b)
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;
}

Variables common_variables(const Poly& a, const Poly& b)
{
    if (same_variables(a.variables(), b.variables())) return a.variables();
    if (a.num_variables() == 0 && a.is_constant()) return b.variables();
    if (b.num_variables() == 0 && b.is_constant()) return a.variables();
    throw VariableMismatch("polynomials over different variable lists");
}

Poly::Poly() : vars_(empty_variables()) {}

Poly::Poly(Variables vars) : vars_(vars ? std::move(vars) : empty_variables()) {}

Poly Poly::constant(Variables vars, const Rational& c)
{
    Poly p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

Poly Poly::variable(Variables vars, std::size_t index)
{
    if (index >= vars->size()) throw std::out_of_range("variable index out of range");
    Poly p(std::move(vars));
    p.terms_.push_back({Monomial::variable(index), 1});
    return p;
}

Poly Poly::monomial(Variables vars, const Monomial& m, const Rational& c)
{
    Poly p(std::move(vars));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(Variables vars, std::vector<Term> terms)
{
    Poly p(std::move(vars));
    p.terms_ = std::move(terms);
    sort_and_combine(p.terms_);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Poly::constant_value() const
{
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return 0;
}

unsigned Poly::degree() const
{
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Poly Poly::derivative(std::size_t var) const
{
    Poly out(vars_);
    for (const auto& t : terms_) {
        auto e = t.monomial.exponents[var];
        if (e == 0) continue;
        Term d{t.monomial, t.coefficient * e};
        d.monomial.exponents[var] = static_cast<std::uint16_t>(e - 1);
        out.terms_.push_back(std::move(d));
    }
    // Differentiation in one variable preserves relative grlex order.
    return out;
}

Poly Poly::divide_exact(const Poly& d) const
{
    Variables vars = common_variables(*this, d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (d.is_constant()) {
        Poly q = *this;
        q.vars_ = vars;
        q *= Rational(1 / d.constant_value());
        return q;
    }
    const Term& lead = d.terms_.front();
    Poly rem = *this;
    rem.vars_ = vars;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& r = rem.terms_.front();
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (r.monomial.exponents[i] < lead.monomial.exponents[i])
                throw std::domain_error("polynomial is not divisible");
            m.exponents[i] = static_cast<std::uint16_t>(r.monomial.exponents[i] - lead.monomial.exponents[i]);
        }
        Term q{m, r.coefficient / lead.coefficient};
        rem -= Poly::monomial(vars, q.monomial, q.coefficient) * d;
        quotient.push_back(std::move(q));
    }
    return from_terms(vars, std::move(quotient));
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly& Poly::operator+=(const Poly& b)
{
    vars_ = common_variables(*this, b);
    if (b.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].monomial, b.terms_[j].monomial))) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || grlex_greater(b.terms_[j].monomial, terms_[i].monomial)) {
            merged.push_back(b.terms_[j++]);
        } else {
            Rational c = terms_[i].coefficient + b.terms_[j].coefficient;
            if (c != 0) merged.push_back({terms_[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& b)
{
    return *this += -b;
}

Poly& Poly::operator*=(const Poly& b)
{
    *this = *this * b;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Variables vars = common_variables(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(vars);
    if (b.is_constant()) {
        Poly out = a;
        out.vars_ = vars;
        return out *= b.constant_value();
    }
    if (a.is_constant()) {
        Poly out = b;
        out.vars_ = vars;
        return out *= a.constant_value();
    }
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return Poly::from_terms(vars, std::move(terms));
}

Poly operator-(Poly a)
{
    for (auto& t : a.terms_) t.coefficient = -t.coefficient;
    return a;
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.is_constant() || !b.is_constant()) {
        if (!same_variables(a.vars_, b.vars_)) return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    return true;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        bool negative = t.coefficient < 0;
        Rational mag = abs(t.coefficient);
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = monomial_string(t.monomial, *vars_);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace homcalc
