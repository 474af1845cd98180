#include "homcalc/poly_matrix.hpp"

#include "homcalc/error.hpp"

namespace homcalc {

PolyMatrix::PolyMatrix(Variables vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), data_(rows * cols, Poly(vars_))
{
}

PolyMatrix PolyMatrix::identity(Variables vars, std::size_t n)
{
    PolyMatrix m(vars, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(vars, 1);
    return m;
}

PolyMatrix PolyMatrix::from_rational(Variables vars, const RationalMatrix& r)
{
    PolyMatrix m(vars, r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = Poly::constant(vars, r(i, j));
    return m;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(vars_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::map(const RingAuto& sigma) const
{
    PolyMatrix out = *this;
    for (auto& p : out.data_) p = sigma.apply(p);
    return out;
}

bool PolyMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Poly& p = (*this)(i, j);
            if (!p.is_constant() || p.constant_value() != (i == j ? 1 : 0)) return false;
        }
    return true;
}

bool PolyMatrix::is_constant() const
{
    for (const auto& p : data_)
        if (!p.is_constant()) return false;
    return true;
}

RationalMatrix PolyMatrix::to_rational() const
{
    if (!is_constant()) throw std::domain_error("matrix has non-constant entries");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).constant_value();
    return r;
}

Poly PolyMatrix::determinant() const
{
    if (rows_ != cols_) throw NonInvertible("matrix is not square");
    const std::size_t n = rows_;
    if (n == 0) return Poly::constant(vars_, 1);
    PolyMatrix a = *this;
    Poly prev = Poly::constant(vars_, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Poly(vars_);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divide_exact(prev);
            a(i, k) = Poly(vars_);
        }
        prev = a(k, k);
    }
    Poly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

PolyMatrix PolyMatrix::inverse() const
{
    if (rows_ != cols_) throw NonInvertible("matrix is not square");
    const std::size_t n = rows_;
    if (is_constant()) return from_rational(vars_, to_rational().inverse());
    // Fraction-free Gauss-Jordan on [M | I]; the left block ends as c*I, the right as c*M^-1.
    PolyMatrix a(vars_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (*this)(i, j);
        a(i, n + i) = Poly::constant(vars_, 1);
    }
    Poly prev = Poly::constant(vars_, 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw NonInvertible("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(k, j));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divide_exact(prev);
            }
            a(i, k) = Poly(vars_);
        }
        prev = a(k, k);
    }
    if (!prev.is_constant() || prev.is_zero())
        throw NonInvertible("determinant " + prev.to_string() + " is not a nonzero constant");
    Rational scale = 1 / prev.constant_value();
    PolyMatrix inv(vars_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j) * scale;
    return inv;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_) throw RankMismatch("matrix shapes do not compose");
    PolyMatrix c(a.vars_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

} // namespace homcalc
