#pragma once

// Scalar types shared by every fockpt header.
//
// All numerics are templated on a real type `T`. `double` is fine for
// well-conditioned work; `wide` (IEEE binary128 via Boost.Multiprecision)
// is the working precision for spectra near the exceptional point, where
// eigenvalue condition numbers of the degree-m representation reach 1e10.

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace fockpt
{

using wide = boost::multiprecision::float128;

template <typename T>
using complex = std::complex<T>;

template <typename T>
using matrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
using vector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

/// Largest supported homogeneous degree; (m)! overflows double beyond it.
inline constexpr int max_degree = 170;

/// Precondition or argument violation (CLI maps it to a usage error).
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (e.g. |alpha| >= 1
/// where bi-orthogonality is required).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Iterative solver failure or an inapplicable numerical route.
class numerical_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
inline T to_real(double x)
{
    return T(x);
}

template <typename T>
inline double to_double(const T& x)
{
    return static_cast<double>(x);
}

template <typename T>
inline std::complex<double> to_double(const std::complex<T>& z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <typename T>
inline std::complex<T> imag_unit()
{
    return {T(0), T(1)};
}

/// i^k for integer k >= 0.
template <typename T>
inline std::complex<T> i_pow(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {T(1), T(0)};
    case 1: return {T(0), T(1)};
    case 2: return {T(-1), T(0)};
    default: return {T(0), T(-1)};
    }
}

template <typename T>
inline T factorial(int n)
{
    T r(1);
    for (int k = 2; k <= n; ++k)
        r *= T(k);
    return r;
}

template <typename T>
inline T frobenius_norm(const matrix<T>& a)
{
    T s(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            s += std::norm(a(i, j));
    using std::sqrt;
    return sqrt(s);
}

/// Converts a matrix between precisions (entrywise cast).
template <typename To, typename From>
inline matrix<To> cast_matrix(const matrix<From>& a)
{
    matrix<To> r(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            r(i, j) = std::complex<To>(To(a(i, j).real()), To(a(i, j).imag()));
    return r;
}

/// Machine epsilon of T.
template <typename T>
inline T epsilon()
{
    return std::numeric_limits<T>::epsilon();
}

} // namespace fockpt
