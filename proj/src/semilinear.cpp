#include "homcalc/semilinear.hpp"

#include "homcalc/error.hpp"

namespace homcalc {

namespace {

constexpr unsigned kCachedRank = 8;

MultiVector column(const PolyMatrix& m, unsigned j)
{
    MultiVector v(m.variables(), static_cast<unsigned>(m.rows()), 1);
    for (unsigned i = 0; i < m.rows(); ++i) v.add(IndexSet{1} << i, m(i, j));
    return v;
}

} // namespace

SemilinearMap::SemilinearMap(PolyMatrix matrix, RingAuto twist) : matrix_(std::move(matrix)), twist_(std::move(twist))
{
    if (matrix_.rows() != matrix_.cols()) throw RankMismatch("twist matrix is not square");
    if (matrix_.rows() > kMaxRank) throw RankMismatch("rank exceeds " + std::to_string(kMaxRank));
    if (!same_variables(matrix_.variables(), twist_.variables()))
        throw VariableMismatch("twist matrix and automorphism over different rings");
    trivial_ = matrix_.is_identity() && twist_.is_identity();
    const unsigned n = rank();
    if (n <= kCachedRank) {
        auto images = std::make_shared<std::vector<MultiVector>>();
        images->reserve(std::size_t{1} << n);
        images->push_back(MultiVector::basis(variables(), n, 0));
        for (IndexSet s = 1; s < (IndexSet{1} << n); ++s) {
            unsigned low = static_cast<unsigned>(std::countr_zero(s));
            images->push_back(wedge(column(matrix_, low), (*images)[s & (s - 1)]));
        }
        images_ = std::move(images);
    }
}

SemilinearMap SemilinearMap::identity(const RingAuto& twist, unsigned rank)
{
    return SemilinearMap(PolyMatrix::identity(twist.variables(), rank), twist);
}

MultiVector SemilinearMap::basis_image(IndexSet set) const
{
    if (images_) return (*images_)[set];
    MultiVector acc = MultiVector::basis(variables(), rank(), 0);
    auto idx = indices_of(set);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) acc = wedge(column(matrix_, *it), acc);
    return acc;
}

template <Side S>
Multi<S> SemilinearMap::apply(const Multi<S>& x) const
{
    if (x.rank() != rank()) throw RankMismatch("semilinear map applied to an element of different rank");
    if (trivial_) return x;
    Multi<S> out(variables(), rank(), x.grade());
    for (const auto& [set, c] : x.components()) {
        Poly sc = twist_.apply(c);
        const MultiVector image = basis_image(set);
        for (const auto& [target, p] : image.components()) out.add(target, sc * p);
    }
    return out;
}

template MultiVector SemilinearMap::apply(const MultiVector&) const;
template MultiForm SemilinearMap::apply(const MultiForm&) const;

SemilinearMap SemilinearMap::inverse() const
{
    RingAuto inv = twist_.inverse();
    return SemilinearMap(matrix_.inverse().map(inv), inv);
}

SemilinearMap SemilinearMap::dagger() const
{
    return SemilinearMap(matrix_.inverse().transpose(), twist_);
}

SemilinearMap SemilinearMap::compose(const SemilinearMap& inner) const
{
    return SemilinearMap(matrix_ * inner.matrix_.map(twist_), twist_.compose(inner.twist_));
}

} // namespace homcalc

namespace homcalc {

MultiForm interior(const SemilinearMap& phi, const SemilinearMap& phi_dagger, const MultiVector& x, const MultiForm& xi)
{
    if (x.grade() > xi.grade())
        throw GradeError("interior product of a grade " + std::to_string(x.grade()) + " multivector into a " +
                         std::to_string(xi.grade()) + "-form");
    return contract(phi.apply(x), phi_dagger.apply(xi));
}

MultiForm interior(const SemilinearMap& phi, const MultiVector& x, const MultiForm& xi)
{
    return interior(phi, phi.dagger(), x, xi);
}

} // namespace homcalc
