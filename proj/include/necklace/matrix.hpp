#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace necklace {

/// Dense square matrix over a commutative ring T (rationals or polynomials).
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}
    Matrix(std::size_t n, std::vector<T> row_major) : n_(n), a_(std::move(row_major))
    {
        if (a_.size() != n * n)
            throw std::invalid_argument("matrix data has wrong size");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    T trace() const
    {
        T t = T(0);
        for (std::size_t i = 0; i < n_; ++i)
            t = t + (*this)(i, i);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("matrix size mismatch");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0))
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned k)
{
    Matrix<T> out = Matrix<T>::identity(m.size());
    for (unsigned i = 0; i < k; ++i)
        out = out * m;
    return out;
}

} // namespace necklace
