#pragma once

// Quadratic two-mode boson operators B = 1/2 sum_{j,k} B_jk a_j^dag a_k and
// their tridiagonal matrices on the degree-m homogeneous subspace.
//
// In the Fock realization a_j^dag a_k acts as z_j d/dz_k. On f_k = z1^(m-k) z2^k
//     z1 d1 f_k = (m-k) f_k         z2 d2 f_k = k f_k
//     z1 d2 f_k = k f_(k-1)         z2 d1 f_k = (m-k) f_(k+1)
// so, with columns indexing the source basis vector,
//     diag[k]  = 1/2 (B11 (m-k) + B22 k)
//     super[k] = 1/2 B12 (k+1)     (row k,   column k+1)
//     sub[k]   = 1/2 B21 (m-k)     (row k+1, column k)

#include "scalar.hpp"

#include <vector>

namespace fockpt
{

template <typename T>
struct quadratic_boson_operator
{
    std::complex<T> b11{};
    std::complex<T> b22{};
    std::complex<T> b12{};
    std::complex<T> b21{};

    /// B(c1, c2, i alpha, i alpha).
    static quadratic_boson_operator coupled(const T& c1, const T& c2, const T& alpha)
    {
        return {{c1, T(0)}, {c2, T(0)}, {T(0), alpha}, {T(0), alpha}};
    }

    bool is_hermitian(const T& tol = T(0)) const
    {
        using std::abs;
        return abs(b11.imag()) <= tol && abs(b22.imag()) <= tol && abs(b21 - std::conj(b12)) <= tol;
    }

    friend quadratic_boson_operator operator+(const quadratic_boson_operator& x, const quadratic_boson_operator& y)
    {
        return {x.b11 + y.b11, x.b22 + y.b22, x.b12 + y.b12, x.b21 + y.b21};
    }
};

template <typename T>
struct tridiagonal_matrix
{
    std::vector<std::complex<T>> diag;
    std::vector<std::complex<T>> sub;   ///< c_0..c_{l-2}, below the diagonal
    std::vector<std::complex<T>> super; ///< d_0..d_{l-2}, above the diagonal

    int size() const { return static_cast<int>(diag.size()); }

    /// True when every super-diagonal entry is nonzero, so the three-term
    /// recursion for the characteristic polynomial is well defined.
    bool recursion_applicable() const
    {
        for (const auto& d : super)
            if (d == std::complex<T>{})
                return false;
        return true;
    }

    matrix<T> dense() const
    {
        const int l = size();
        matrix<T> a = matrix<T>::Zero(l, l);
        for (int k = 0; k < l; ++k)
            a(k, k) = diag[static_cast<std::size_t>(k)];
        for (int k = 0; k + 1 < l; ++k) {
            a(k, k + 1) = super[static_cast<std::size_t>(k)];
            a(k + 1, k) = sub[static_cast<std::size_t>(k)];
        }
        return a;
    }

    friend tridiagonal_matrix operator+(tridiagonal_matrix x, const tridiagonal_matrix& y)
    {
        if (x.size() != y.size())
            throw usage_error("tridiagonal sum: size mismatch");
        for (std::size_t k = 0; k < x.diag.size(); ++k)
            x.diag[k] += y.diag[k];
        for (std::size_t k = 0; k < x.sub.size(); ++k) {
            x.sub[k] += y.sub[k];
            x.super[k] += y.super[k];
        }
        return x;
    }

    friend bool operator==(const tridiagonal_matrix&, const tridiagonal_matrix&) = default;
};

template <typename T>
tridiagonal_matrix<T> tridiagonal_rep(const quadratic_boson_operator<T>& op, int m)
{
    if (m < 0 || m > max_degree)
        throw usage_error("degree " + std::to_string(m) + " outside [0, " + std::to_string(max_degree) + "]");
    const T half = T(1) / T(2);
    tridiagonal_matrix<T> t;
    t.diag.resize(static_cast<std::size_t>(m) + 1);
    t.sub.resize(static_cast<std::size_t>(m));
    t.super.resize(static_cast<std::size_t>(m));
    for (int k = 0; k <= m; ++k)
        t.diag[static_cast<std::size_t>(k)] = half * (op.b11 * T(m - k) + op.b22 * T(k));
    for (int k = 0; k < m; ++k) {
        t.super[static_cast<std::size_t>(k)] = half * op.b12 * T(k + 1);
        t.sub[static_cast<std::size_t>(k)] = half * op.b21 * T(m - k);
    }
    return t;
}

template <typename T>
tridiagonal_matrix<T> scale(tridiagonal_matrix<T> t, const std::complex<T>& s)
{
    for (auto& x : t.diag)
        x *= s;
    for (auto& x : t.sub)
        x *= s;
    for (auto& x : t.super)
        x *= s;
    return t;
}

/// The matrix 2 J_0 = 2 B(1, -1, i alpha, i alpha) on degree m, whose
/// diagonal is (m, m-2, ..., -m).
template <typename T>
tridiagonal_matrix<T> doubled_j0(const T& alpha, int m)
{
    return scale(tridiagonal_rep(quadratic_boson_operator<T>::coupled(T(1), T(-1), alpha), m),
                 std::complex<T>(T(2)));
}

} // namespace fockpt
