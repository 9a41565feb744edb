#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qdiv/error.hpp"

namespace qdiv {

using cplx = std::complex<double>;

// Dense complex matrix, row-major storage. Indexing contract is (row, col).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        require(rows >= 1 && cols >= 1, ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
    }

    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<cplx>& d) {
        ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    cplx operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    cplx trace() const;
    double max_abs() const;            // ||A||_max
    double norm_one() const;           // max column sum of |a_ij|
    double norm_fro() const;

    // max_ij |a_ij - conj(a_ji)|
    double herm_deviation() const;
    bool is_hermitian(double tol = 1e-10) const {
        return is_square() && herm_deviation() <= tol * std::max(1.0, max_abs());
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Blocked matrix product; runs the block loops with OpenMP when the
// problem is large enough to pay for it.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A^dagger)/2
ComplexMatrix hermitize(const ComplexMatrix& a);

// Top-left j x j block, 1 <= j <= rows.
ComplexMatrix leading_principal_submatrix(const ComplexMatrix& a, int j);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qdiv
