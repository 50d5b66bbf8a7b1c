#pragma once

// Homogeneous polynomials in two complex variables and the Segal-Bargmann
// (Gaussian measure) inner product restricted to them.
//
// A degree-m polynomial is stored densely in the basis
//     f_k = z1^(m-k) z2^k,   k = 0..m,
// so coeffs[k] multiplies f_k. On monomials the Gaussian inner product is
//     <z1^a z2^b, z1^c z2^d> = a! b! if (a,b) == (c,d), 0 otherwise,
// which makes the Gram matrix of the basis diagonal with weights (m-k)! k!.

#include "scalar.hpp"

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace fockpt
{

template <typename T>
class homogeneous_polynomial
{
public:
    homogeneous_polynomial() : coeffs_(1) {}

    /// Zero polynomial of degree m.
    explicit homogeneous_polynomial(int degree)
    {
        check_degree(degree);
        coeffs_.assign(static_cast<std::size_t>(degree) + 1, std::complex<T>{});
    }

    explicit homogeneous_polynomial(std::vector<std::complex<T>> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw usage_error("homogeneous polynomial needs at least one coefficient");
        check_degree(degree());
    }

    homogeneous_polynomial(std::initializer_list<std::complex<T>> coeffs)
        : homogeneous_polynomial(std::vector<std::complex<T>>(coeffs))
    {
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const std::complex<T>> coeffs() const { return coeffs_; }

    const std::complex<T>& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    std::complex<T>& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const std::complex<T>& c) { return c == std::complex<T>{}; });
    }

    /// Value at (z1, z2).
    std::complex<T> operator()(const std::complex<T>& z1, const std::complex<T>& z2) const
    {
        std::complex<T> sum{};
        const int m = degree();
        for (int k = 0; k <= m; ++k) {
            std::complex<T> term = coeffs_[static_cast<std::size_t>(k)];
            for (int e = 0; e < m - k; ++e)
                term *= z1;
            for (int e = 0; e < k; ++e)
                term *= z2;
            sum += term;
        }
        return sum;
    }

    homogeneous_polynomial& operator*=(const std::complex<T>& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend homogeneous_polynomial operator*(homogeneous_polynomial p, const std::complex<T>& s)
    {
        p *= s;
        return p;
    }

    friend homogeneous_polynomial operator+(homogeneous_polynomial p, const homogeneous_polynomial& q)
    {
        same_degree(p, q);
        for (int k = 0; k <= p.degree(); ++k)
            p[k] += q[k];
        return p;
    }

    friend homogeneous_polynomial operator-(homogeneous_polynomial p, const homogeneous_polynomial& q)
    {
        same_degree(p, q);
        for (int k = 0; k <= p.degree(); ++k)
            p[k] -= q[k];
        return p;
    }

    friend bool operator==(const homogeneous_polynomial&, const homogeneous_polynomial&) = default;

    /// Coefficients as a column vector (for matrix actions).
    vector<T> to_vector() const
    {
        vector<T> v(static_cast<Eigen::Index>(coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            v(static_cast<Eigen::Index>(k)) = coeffs_[k];
        return v;
    }

    static homogeneous_polynomial from_vector(const vector<T>& v)
    {
        return homogeneous_polynomial(std::vector<std::complex<T>>(v.data(), v.data() + v.size()));
    }

    static void same_degree(const homogeneous_polynomial& p, const homogeneous_polynomial& q)
    {
        if (p.degree() != q.degree())
            throw usage_error("inhomogeneous pairing: degrees " + std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
    }

private:
    static void check_degree(int m)
    {
        if (m < 0 || m > max_degree)
            throw usage_error("polynomial degree " + std::to_string(m) + " outside [0, " +
                              std::to_string(max_degree) + "]");
    }

    std::vector<std::complex<T>> coeffs_;
};

/// Diagonal of the Gram matrix of {f_k} at degree m: weights[k] = (m-k)! k!.
template <typename T>
struct gram_diagonal
{
    int degree = 0;
    std::vector<T> weights;
};

template <typename T>
gram_diagonal<T> make_gram_diagonal(int m)
{
    if (m < 0 || m > max_degree)
        throw usage_error("gram diagonal degree " + std::to_string(m) + " outside [0, " +
                          std::to_string(max_degree) + "]");
    std::vector<T> fact(static_cast<std::size_t>(m) + 1);
    fact[0] = T(1);
    for (int k = 1; k <= m; ++k)
        fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k) - 1] * T(k);
    gram_diagonal<T> g{m, std::vector<T>(static_cast<std::size_t>(m) + 1)};
    for (int k = 0; k <= m; ++k)
        g.weights[static_cast<std::size_t>(k)] =
            fact[static_cast<std::size_t>(m - k)] * fact[static_cast<std::size_t>(k)];
    return g;
}

/// <z1^a z2^b, z1^c z2^d> under the product Gaussian measure.
template <typename T>
std::complex<T> monomial_inner_product(int a, int b, int c, int d)
{
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw usage_error("monomial exponents must be non-negative");
    if (a != c || b != d)
        return {};
    return {factorial<T>(a) * factorial<T>(b), T(0)};
}

/// <p, q> = sum_k p_k conj(q_k) (m-k)! k!; linear in p, conjugate-linear in q.
template <typename T>
std::complex<T> poly_inner_product(const homogeneous_polynomial<T>& p, const homogeneous_polynomial<T>& q)
{
    homogeneous_polynomial<T>::same_degree(p, q);
    const auto g = make_gram_diagonal<T>(p.degree());
    std::complex<T> s{};
    for (int k = 0; k <= p.degree(); ++k)
        s += p[k] * std::conj(q[k]) * g.weights[static_cast<std::size_t>(k)];
    return s;
}

template <typename T>
T fock_norm(const homogeneous_polynomial<T>& p)
{
    using std::sqrt;
    return sqrt(poly_inner_product(p, p).real());
}

/// Scales p so that coeffs[0] == 1.
template <typename T>
homogeneous_polynomial<T> normalize_leading(const homogeneous_polynomial<T>& p)
{
    if (p[0] == std::complex<T>{})
        throw numerical_error("cannot gauge-fix: vanishing leading coefficient");
    return p * (std::complex<T>(T(1)) / p[0]);
}

/// Gauge used for symmetry comparisons. Picks the first coefficient whose
/// modulus exceeds `rel_cutoff` times the largest one, index k0, and scales
/// so that it equals i^k0. For k0 == 0 this is normalize_leading; the i^k
/// phase is the pattern A_0 f_0 + i A_1 f_1 + A_2 f_2 + ... with real A_k
/// taken by eigenfunctions of real spectra, so the fallback stays in the
/// same gauge when the leading coefficient vanishes (e.g. at alpha = 0).
template <typename T>
homogeneous_polynomial<T> gauge_fix(const homogeneous_polynomial<T>& p, double rel_cutoff = 1e-12)
{
    using std::abs;
    T largest(0);
    for (const auto& c : p.coeffs())
        largest = std::max<T>(largest, abs(c));
    if (largest == T(0))
        throw usage_error("cannot gauge-fix the zero polynomial");
    int k0 = 0;
    while (abs(p[k0]) <= T(rel_cutoff) * largest)
        ++k0;
    if (k0 == 0)
        return normalize_leading(p);
    return p * (i_pow<T>(k0) / p[k0]);
}

} // namespace fockpt
