#pragma once

#include <fockpt/instantiations.hpp>

#include <complex>
#include <random>
#include <vector>

namespace fockpt::testing
{

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20240611);
    return engine;
}

template <typename T = double>
std::complex<T> random_complex(std::mt19937_64& g = rng())
{
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(g), im = n(g);
    return {T(re), T(im)};
}

template <typename T = double>
homogeneous_polynomial<T> random_polynomial(int m, std::mt19937_64& g = rng())
{
    homogeneous_polynomial<T> p(m);
    for (int k = 0; k <= m; ++k)
        p[k] = random_complex<T>(g);
    return p;
}

inline int random_degree(int max_m, std::mt19937_64& g = rng())
{
    return std::uniform_int_distribution<int>(0, max_m)(g);
}

template <typename T = double>
matrix<T> random_matrix(int n, std::mt19937_64& g = rng())
{
    matrix<T> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = random_complex<T>(g);
    return a;
}

inline double dist(const std::complex<double>& a, const std::complex<double>& b) { return std::abs(a - b); }

template <typename T>
double dist(const std::complex<T>& a, const std::complex<double>& b)
{
    return std::abs(to_double(a) - b);
}

template <typename T>
double norm_d(const matrix<T>& a)
{
    return to_double(frobenius_norm<T>(a));
}

/// alpha in {0, 0.1, ..., 0.9, 0.99}
inline std::vector<double> real_phase_grid()
{
    std::vector<double> a;
    for (int i = 0; i <= 9; ++i)
        a.push_back(i / 10.0);
    a.push_back(0.99);
    return a;
}

/// alpha in {0.1, ..., 0.9}
inline std::vector<double> interior_grid()
{
    std::vector<double> a;
    for (int i = 1; i <= 9; ++i)
        a.push_back(i / 10.0);
    return a;
}

} // namespace fockpt::testing
