#ifndef ALV_EXACT_INT_MATRIX_HPP
#define ALV_EXACT_INT_MATRIX_HPP

#include "alv/exact/numbers.hpp"

#include <cstddef>
#include <initializer_list>

namespace alv::exact {

// Dense row-major matrix of big integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: zero dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Rational counterpart, used for dual coordinates and exact elimination.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("RatMatrix: zero dimension");
    }

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

RatMatrix to_rational(const IntMatrix& m);

}  // namespace alv::exact

#endif
