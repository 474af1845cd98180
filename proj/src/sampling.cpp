#include "homcalc/sampling.hpp"

#include <algorithm>

namespace homcalc {

namespace {

void monomials_of_degree(std::size_t nvars, unsigned degree, std::size_t var, Monomial& current,
                         std::vector<Monomial>& out)
{
    if (var + 1 == nvars) {
        current.exponents[var] = static_cast<std::uint16_t>(degree);
        out.push_back(current);
        current.exponents[var] = 0;
        return;
    }
    for (unsigned e = degree + 1; e-- > 0;) {
        current.exponents[var] = static_cast<std::uint16_t>(e);
        monomials_of_degree(nvars, degree - e, var + 1, current, out);
    }
    current.exponents[var] = 0;
}

bool visit(const std::vector<std::vector<Monomial>>& by_degree, std::size_t slots, unsigned budget,
           std::vector<Monomial>& tuple, const std::function<bool(const std::vector<Monomial>&)>& fn)
{
    if (tuple.size() == slots) return fn(tuple);
    for (unsigned d = 0; d <= budget && d < by_degree.size(); ++d)
        for (const auto& m : by_degree[d]) {
            tuple.push_back(m);
            bool go_on = visit(by_degree, slots, budget - d, tuple, fn);
            tuple.pop_back();
            if (!go_on) return false;
        }
    return true;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree)
{
    std::vector<Monomial> out;
    if (nvars == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned d = 0; d <= degree; ++d) {
        Monomial current;
        monomials_of_degree(nvars, d, 0, current, out);
    }
    return out;
}

bool for_each_monomial_tuple(std::size_t nvars, std::size_t slots, unsigned budget,
                             const std::function<bool(const std::vector<Monomial>&)>& fn)
{
    std::vector<std::vector<Monomial>> by_degree;
    if (nvars == 0) {
        by_degree.push_back({Monomial{}});
    } else {
        for (unsigned d = 0; d <= budget; ++d) {
            Monomial current;
            by_degree.emplace_back();
            monomials_of_degree(nvars, d, 0, current, by_degree.back());
        }
    }
    std::vector<Monomial> tuple;
    tuple.reserve(slots);
    return visit(by_degree, slots, budget, tuple, fn);
}

} // namespace homcalc
