#pragma once

#include "homcalc/poly.hpp"
#include "homcalc/rational.hpp"
#include "homcalc/ring_auto.hpp"

#include <string>
#include <vector>

namespace homcalc {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Variables vars, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(Variables vars, std::size_t n);
    static PolyMatrix from_rational(Variables vars, const RationalMatrix& m);

    const Variables& variables() const { return vars_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix transpose() const;
    PolyMatrix map(const RingAuto& sigma) const;
    bool is_identity() const;
    bool is_constant() const;
    RationalMatrix to_rational() const;

    // Fraction-free elimination; exact over the polynomial ring.
    Poly determinant() const;
    // Requires a nonzero rational determinant; throws NonInvertible otherwise.
    PolyMatrix inverse() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    std::string to_string() const;

private:
    Variables vars_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;
};

} // namespace homcalc
