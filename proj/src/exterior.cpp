#include "homcalc/exterior.hpp"

#include "homcalc/error.hpp"

#include <algorithm>

namespace homcalc {

std::vector<unsigned> indices_of(IndexSet s)
{
    std::vector<unsigned> out;
    for (unsigned i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

IndexSet index_set(const std::vector<unsigned>& indices)
{
    IndexSet s = 0;
    for (auto i : indices) s |= IndexSet{1} << i;
    return s;
}

std::vector<IndexSet> index_sets(unsigned rank, unsigned size)
{
    std::vector<IndexSet> out;
    if (size > rank) return out;
    for (IndexSet s = 0; s < (IndexSet{1} << rank); ++s)
        if (grade_of(s) == size) out.push_back(s);
    return out;
}

int shuffle_sign(IndexSet a, IndexSet b)
{
    if (a & b) return 0;
    unsigned inversions = 0;
    for (unsigned j : indices_of(b)) inversions += grade_of(a >> (j + 1));
    return inversions % 2 ? -1 : 1;
}

template <Side S>
Multi<S>::Multi(Variables vars, unsigned rank, unsigned grade) : vars_(std::move(vars)), rank_(rank), grade_(grade)
{
    if (rank_ > kMaxRank) throw RankMismatch("rank exceeds " + std::to_string(kMaxRank));
}

template <Side S>
Multi<S> Multi<S>::basis(Variables vars, unsigned rank, IndexSet set, const Poly& coefficient)
{
    Multi m(std::move(vars), rank, grade_of(set));
    m.add(set, coefficient);
    return m;
}

template <Side S>
Multi<S> Multi<S>::basis(Variables vars, unsigned rank, IndexSet set)
{
    Poly one = Poly::constant(vars, 1);
    return basis(std::move(vars), rank, set, one);
}

template <Side S>
Multi<S> Multi<S>::from_indices(Variables vars, unsigned rank, const std::vector<unsigned>& indices,
                                const Poly& coefficient)
{
    Multi m(vars, rank, static_cast<unsigned>(indices.size()));
    std::vector<unsigned> sorted = indices;
    int sign = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j) {
            if (sorted[j] == sorted[j + 1]) return m;
            if (sorted[j] > sorted[j + 1]) {
                std::swap(sorted[j], sorted[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j)
        if (sorted[j] == sorted[j + 1]) return m;
    m.add(index_set(sorted), sign > 0 ? coefficient : -coefficient);
    return m;
}

template <Side S>
Multi<S> Multi<S>::scalar(unsigned rank, const Poly& f)
{
    Multi m(f.variables(), rank, 0);
    m.add(0, f);
    return m;
}

template <Side S>
Poly Multi<S>::component(IndexSet set) const
{
    auto it = components_.find(set);
    return it == components_.end() ? Poly(vars_) : it->second;
}

template <Side S>
Poly Multi<S>::to_poly() const
{
    if (grade_ != 0) throw GradeError("element of grade " + std::to_string(grade_) + " is not a function");
    return component(0);
}

template <Side S>
void Multi<S>::add(IndexSet set, const Poly& coefficient)
{
    if (grade_of(set) != grade_) throw GradeError("component grade does not match element grade");
    if (rank_ < 32 && (set >> rank_) != 0) throw RankMismatch("basis index exceeds rank");
    if (coefficient.is_zero()) return;
    if (vars_->size() == 0 && coefficient.num_variables() != 0) vars_ = coefficient.variables();
    auto [it, inserted] = components_.try_emplace(set, coefficient);
    if (inserted) {
        if (!it->second.is_constant() && !same_variables(it->second.variables(), vars_))
            throw VariableMismatch("coefficient over a foreign ring");
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) components_.erase(it);
}

template <Side S>
void Multi<S>::check_compatible(const Multi& b) const
{
    if (rank_ != b.rank_) throw RankMismatch("exterior elements of different rank");
    if (grade_ != b.grade_) throw GradeError("adding elements of different grade");
}

template <Side S>
Multi<S>& Multi<S>::operator+=(const Multi& b)
{
    check_compatible(b);
    for (const auto& [set, c] : b.components_) add(set, c);
    return *this;
}

template <Side S>
Multi<S>& Multi<S>::operator-=(const Multi& b)
{
    check_compatible(b);
    for (const auto& [set, c] : b.components_) add(set, -c);
    return *this;
}

template <Side S>
Multi<S> Multi<S>::scaled(const Poly& f) const
{
    Multi out(vars_, rank_, grade_);
    if (f.is_zero()) return out;
    for (const auto& [set, c] : components_) out.add(set, f * c);
    return out;
}

template <Side S>
Multi<S> Multi<S>::scaled(const Rational& q) const
{
    Multi out(vars_, rank_, grade_);
    if (q == 0) return out;
    for (const auto& [set, c] : components_) out.add(set, c * q);
    return out;
}

template <Side S>
std::string Multi<S>::to_string() const
{
    if (components_.empty()) return "0";
    std::string out;
    for (const auto& [set, c] : components_) {
        if (!out.empty()) out += " + ";
        std::string idx;
        for (unsigned i : indices_of(set)) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
        std::string coeff = c.to_string();
        bool simple = c.terms().size() == 1 && c.terms()[0].coefficient > 0;
        if (set == 0)
            out += simple ? coeff : "(" + coeff + ")";
        else
            out += (coeff == "1" ? "" : (simple ? coeff : "(" + coeff + ")") + "*") +
                   (S == Side::vector ? "e_{" : "e^{") + idx + "}";
    }
    return out;
}

template class Multi<Side::vector>;
template class Multi<Side::form>;

template <Side S>
Multi<S> wedge(const Multi<S>& a, const Multi<S>& b)
{
    if (a.rank() != b.rank()) throw RankMismatch("wedge of elements of different rank");
    const Variables& vars = a.variables()->size() ? a.variables() : b.variables();
    Multi<S> out(vars, a.rank(), a.grade() + b.grade());
    for (const auto& [sa, ca] : a.components())
        for (const auto& [sb, cb] : b.components()) {
            int sign = shuffle_sign(sa, sb);
            if (sign == 0) continue;
            Poly c = ca * cb;
            out.add(sa | sb, sign > 0 ? c : -c);
        }
    return out;
}

template MultiVector wedge(const MultiVector&, const MultiVector&);
template MultiForm wedge(const MultiForm&, const MultiForm&);

Poly pair(const MultiForm& xi, const MultiVector& x)
{
    if (xi.rank() != x.rank()) throw RankMismatch("pairing elements of different rank");
    if (xi.grade() != x.grade()) throw GradeError("pairing elements of different grade");
    Poly acc(x.variables()->size() ? x.variables() : xi.variables());
    const auto& small = xi.components().size() <= x.components().size() ? xi.components() : x.components();
    const auto& large = &small == &xi.components() ? x.components() : xi.components();
    for (const auto& [set, c] : small) {
        auto it = large.find(set);
        if (it != large.end()) acc += c * it->second;
    }
    return acc;
}

template <Side S>
Multi<S> contract(const Multi<dual_side(S)>& a, const Multi<S>& b)
{
    if (a.rank() != b.rank()) throw RankMismatch("contracting elements of different rank");
    if (a.grade() > b.grade()) throw GradeError("contraction grade underflow");
    const Variables& vars = b.variables()->size() ? b.variables() : a.variables();
    Multi<S> out(vars, b.rank(), b.grade() - a.grade());
    for (const auto& [sa, ca] : a.components())
        for (const auto& [sb, cb] : b.components()) {
            if ((sa & sb) != sa) continue;
            IndexSet rest = sb & ~sa;
            Poly c = ca * cb;
            out.add(rest, shuffle_sign(sa, rest) > 0 ? c : -c);
        }
    return out;
}

template MultiVector contract(const MultiForm&, const MultiVector&);
template MultiForm contract(const MultiVector&, const MultiForm&);

template <Side S>
Multi<dual_side(S)> relabel(const Multi<S>& a)
{
    Multi<dual_side(S)> out(a.variables(), a.rank(), a.grade());
    for (const auto& [set, c] : a.components()) out.add(set, c);
    return out;
}

template MultiForm relabel(const MultiVector&);
template MultiVector relabel(const MultiForm&);

} // namespace homcalc
