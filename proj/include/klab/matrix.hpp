#ifndef KLAB_MATRIX_HPP
#define KLAB_MATRIX_HPP

#include "klab/rational.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace klab {

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static DenseMatrix identity(std::size_t order) {
        DenseMatrix m(order, order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    [[nodiscard]] T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<BigInt>;

Eigen::MatrixXd to_eigen(const RationalMatrix& m);

} // namespace klab

#endif // KLAB_MATRIX_HPP
