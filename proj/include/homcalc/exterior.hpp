#pragma once

#include "homcalc/poly.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace homcalc {

// Bit i set <=> basis index i (0-based) present; indices are implicitly increasing.
using IndexSet = std::uint32_t;
inline constexpr unsigned kMaxRank = 16;

inline unsigned grade_of(IndexSet s) { return static_cast<unsigned>(std::popcount(s)); }
std::vector<unsigned> indices_of(IndexSet s);
IndexSet index_set(const std::vector<unsigned>& indices);
// All index sets of the given size over rank n, increasing numerically.
std::vector<IndexSet> index_sets(unsigned rank, unsigned size);
// Sign of sorting the concatenation (I, J); 0 when they overlap.
int shuffle_sign(IndexSet a, IndexSet b);

enum class Side { vector, form };

constexpr Side dual_side(Side s) { return s == Side::vector ? Side::form : Side::vector; }

// Homogeneous element of the exterior algebra of a free module with polynomial coefficients.
template <Side S>
class Multi {
public:
    Multi(Variables vars, unsigned rank, unsigned grade);

    static Multi basis(Variables vars, unsigned rank, IndexSet set, const Poly& coefficient);
    static Multi basis(Variables vars, unsigned rank, IndexSet set);
    // Any order of indices; sorted with the permutation sign. Repeats give zero.
    static Multi from_indices(Variables vars, unsigned rank, const std::vector<unsigned>& indices, const Poly& coefficient);
    static Multi scalar(unsigned rank, const Poly& f);

    const Variables& variables() const { return vars_; }
    unsigned rank() const { return rank_; }
    unsigned grade() const { return grade_; }
    const std::map<IndexSet, Poly>& components() const { return components_; }
    Poly component(IndexSet set) const;
    bool is_zero() const { return components_.empty(); }
    Poly to_poly() const;

    void add(IndexSet set, const Poly& coefficient);

    Multi& operator+=(const Multi& b);
    Multi& operator-=(const Multi& b);
    friend Multi operator+(Multi a, const Multi& b) { return a += b; }
    friend Multi operator-(Multi a, const Multi& b) { return a -= b; }
    friend Multi operator-(Multi a)
    {
        for (auto& [set, c] : a.components_) c = -c;
        return a;
    }
    Multi scaled(const Poly& f) const;
    Multi scaled(const Rational& q) const;

    friend bool operator==(const Multi& a, const Multi& b)
    {
        return a.rank_ == b.rank_ && a.grade_ == b.grade_ && a.components_ == b.components_;
    }

    std::string to_string() const;

private:
    Variables vars_;
    unsigned rank_;
    unsigned grade_;
    std::map<IndexSet, Poly> components_;

    void check_compatible(const Multi& b) const;
};

using MultiVector = Multi<Side::vector>;
using MultiForm = Multi<Side::form>;

template <Side S>
Multi<S> wedge(const Multi<S>& a, const Multi<S>& b);

// <MultiForm, MultiVector> with <e^I, e_J> = delta_IJ on increasing index sets.
Poly pair(const MultiForm& xi, const MultiVector& x);

// Characterized by <contract(a, b), c> = <b, a ^ c>.
template <Side S>
Multi<S> contract(const Multi<dual_side(S)>& a, const Multi<S>& b);

// Same components read on the other side (A-multivectors as forms of the dual bundle).
template <Side S>
Multi<dual_side(S)> relabel(const Multi<S>& a);

} // namespace homcalc
