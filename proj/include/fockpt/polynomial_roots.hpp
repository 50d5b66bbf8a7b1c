#pragma once

// Roots of a complex polynomial as eigenvalues of its balanced companion
// matrix, found with a single-shift complex QR iteration on the (already
// upper Hessenberg) companion form.

#include "scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace fockpt
{

/// Root finder gave up; carries the roots that did converge.
class root_finding_error : public numerical_error
{
public:
    root_finding_error(const std::string& what, std::vector<std::complex<double>> partial)
        : numerical_error(what), partial_(std::move(partial))
    {
    }

    const std::vector<std::complex<double>>& partial_roots() const { return partial_; }

private:
    std::vector<std::complex<double>> partial_;
};

namespace detail
{

/// Parlett-Reinsch balancing with radix 2; a diagonal similarity, so the
/// Hessenberg pattern is preserved.
template <typename T>
void balance(matrix<T>& a)
{
    using std::abs;
    const Eigen::Index n = a.rows();
    const T radix(2);
    const T sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            T r(0), c(0);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                c += abs(a(j, i));
                r += abs(a(i, j));
            }
            if (c == T(0) || r == T(0))
                continue;
            T g = r / radix;
            T f(1);
            const T s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < T(0.95) * s) {
                done = false;
                const T inv = T(1) / f;
                a.row(i) *= inv;
                a.col(i) *= f;
            }
        }
    }
}

/// Eigenvalues of an upper Hessenberg matrix by shifted QR with Givens
/// rotations. Only the active unreduced block is updated.
template <typename T>
std::vector<std::complex<T>> hessenberg_eigenvalues(matrix<T> h, int max_iter_per_root = 60)
{
    using std::abs;
    using std::sqrt;
    using C = std::complex<T>;
    const int n = static_cast<int>(h.rows());
    std::vector<C> eig(static_cast<std::size_t>(n));
    std::vector<bool> found(static_cast<std::size_t>(n), false);
    const T eps = epsilon<T>();

    T hnorm(0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            hnorm = std::max<T>(hnorm, abs(h(i, j)));
    if (hnorm == T(0))
        hnorm = T(1);

    auto fail = [&](int hi) {
        std::vector<std::complex<double>> partial;
        for (int k = hi + 1; k < n; ++k)
            partial.push_back(to_double(eig[static_cast<std::size_t>(k)]));
        throw root_finding_error("companion QR did not converge after " + std::to_string(max_iter_per_root) +
                                     " iterations on one root",
                                 std::move(partial));
    };

    std::vector<C> cs(static_cast<std::size_t>(n)), ss(static_cast<std::size_t>(n));
    int hi = n - 1;
    int iter = 0;
    while (hi >= 0) {
        int lo = hi;
        while (lo > 0) {
            T s = abs(h(lo - 1, lo - 1)) + abs(h(lo, lo));
            if (s == T(0))
                s = hnorm;
            if (abs(h(lo, lo - 1)) <= eps * s) {
                h(lo, lo - 1) = C{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[static_cast<std::size_t>(hi)] = h(hi, hi);
            found[static_cast<std::size_t>(hi)] = true;
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > max_iter_per_root)
            fail(hi);

        // Wilkinson shift from the trailing 2x2 block; ad hoc shifts break cycles.
        C mu;
        if (iter % 11 == 0) {
            mu = h(hi, hi) + C(abs(h(hi, hi - 1).real()) + abs(h(hi - 1, std::max(hi - 2, lo)).real()), T(0));
        } else {
            const C a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
            const C half_diff = (a - d) / T(2);
            const C disc = sqrt(half_diff * half_diff + b * c);
            const C mean = (a + d) / T(2);
            const C m1 = mean + disc, m2 = mean - disc;
            mu = abs(m1 - d) < abs(m2 - d) ? m1 : m2;
        }

        for (int k = lo; k <= hi; ++k)
            h(k, k) -= mu;
        for (int k = lo; k < hi; ++k) {
            const C x = h(k, k), y = h(k + 1, k);
            const T r = sqrt(std::norm(x) + std::norm(y));
            C c(T(1)), s{};
            if (r != T(0)) {
                c = x / r;
                s = y / r;
            }
            cs[static_cast<std::size_t>(k)] = c;
            ss[static_cast<std::size_t>(k)] = s;
            for (int j = k; j <= hi; ++j) {
                const C u = h(k, j), v = h(k + 1, j);
                h(k, j) = std::conj(c) * u + std::conj(s) * v;
                h(k + 1, j) = -s * u + c * v;
            }
        }
        for (int k = lo; k < hi; ++k) {
            const C c = cs[static_cast<std::size_t>(k)], s = ss[static_cast<std::size_t>(k)];
            for (int i = lo; i <= std::min(k + 1, hi); ++i) {
                const C u = h(i, k), v = h(i, k + 1);
                h(i, k) = u * c + v * s;
                h(i, k + 1) = -u * std::conj(s) + v * std::conj(c);
            }
        }
        for (int k = lo; k <= hi; ++k)
            h(k, k) += mu;
    }
    return eig;
}

} // namespace detail

/// Roots of sum_k coeffs[k] x^k (ascending order), with multiplicity.
/// Exact zero roots are split off before the companion iteration.
template <typename T>
std::vector<std::complex<T>> polynomial_roots(std::span<const std::complex<T>> coeffs)
{
    using C = std::complex<T>;
    std::size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1] == C{})
        --top;
    if (top == 0)
        throw usage_error("roots of the zero polynomial are undefined");
    std::size_t low = 0;
    while (coeffs[low] == C{})
        ++low;

    std::vector<C> roots(low, C{});
    const int n = static_cast<int>(top - 1 - low);
    if (n == 0)
        return roots;
    const C lead = coeffs[top - 1];
    if (n == 1) {
        roots.push_back(-coeffs[low] / lead);
        return roots;
    }
    matrix<T> comp = matrix<T>::Zero(n, n);
    for (int j = 0; j < n; ++j)
        comp(0, j) = -coeffs[top - 2 - static_cast<std::size_t>(j)] / lead;
    for (int i = 1; i < n; ++i)
        comp(i, i - 1) = C(T(1));
    detail::balance(comp);
    auto eig = detail::hessenberg_eigenvalues(std::move(comp));
    roots.insert(roots.end(), eig.begin(), eig.end());
    return roots;
}

template <typename T>
std::vector<std::complex<T>> polynomial_roots(const std::vector<std::complex<T>>& coeffs)
{
    return polynomial_roots(std::span<const std::complex<T>>(coeffs));
}

/// Horner evaluation of an ascending coefficient vector.
template <typename T>
std::complex<T> evaluate_polynomial(std::span<const std::complex<T>> coeffs, const std::complex<T>& x)
{
    std::complex<T> r{};
    for (std::size_t k = coeffs.size(); k-- > 0;)
        r = r * x + coeffs[k];
    return r;
}

} // namespace fockpt
