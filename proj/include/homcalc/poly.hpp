#pragma once

#include "homcalc/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homcalc {

inline constexpr std::size_t kMaxVariables = 8;

class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using Variables = std::shared_ptr<const VariableSet>;

Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& a, const Variables& b);

struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exponents{};

    static Monomial variable(std::size_t index);
    unsigned degree() const;
    bool is_one() const { return degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Graded lexicographic: larger total degree first, ties broken by exponent of x1, x2, ...
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Rational coefficient;
};

class Poly {
public:
    Poly();
    explicit Poly(Variables vars);

    static Poly constant(Variables vars, const Rational& c);
    static Poly variable(Variables vars, std::size_t index);
    static Poly monomial(Variables vars, const Monomial& m, const Rational& c = 1);
    static Poly from_terms(Variables vars, std::vector<Term> terms);

    const Variables& variables() const { return vars_; }
    std::size_t num_variables() const { return vars_->size(); }
    // Sorted by grlex_greater, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;
    unsigned degree() const;

    Poly derivative(std::size_t var) const;
    // Throws std::domain_error when d does not divide *this.
    Poly divide_exact(const Poly& d) const;
    Poly pow(unsigned e) const;

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator+(Poly a, const Rational& c) { return a += constant(a.vars_, c); }
    friend Poly operator-(Poly a, const Rational& c) { return a -= constant(a.vars_, c); }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    Variables vars_;
    std::vector<Term> terms_;
};

// Variable set shared by both operands; a constant over zero variables adapts to the other side.
Variables common_variables(const Poly& a, const Poly& b);

} // namespace homcalc
