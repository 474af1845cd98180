#pragma once

#include "homcalc/poly.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace homcalc {

struct SampleConfig {
    // Bound on the joint total degree of the monomial multipliers in one sample tuple.
    unsigned max_degree = 3;
};

// Ascending total degree, grlex within a degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree);

// Visits every tuple of `slots` monomials whose degrees sum to at most `budget`.
// Stops early when fn returns false; returns false in that case.
bool for_each_monomial_tuple(std::size_t nvars, std::size_t slots, unsigned budget,
                             const std::function<bool(const std::vector<Monomial>&)>& fn);

} // namespace homcalc
