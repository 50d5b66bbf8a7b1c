#pragma once

// Eigenvalues and eigenvectors of tridiagonal representations.
//
// Primary route: the three-term recursion
//     Q_{-1} = 0,  Q_0 = 1,
//     Q_{n+1}(x) = [(x - b_n) Q_n(x) - c_{n-1} Q_{n-1}(x)] / d_n,
// with d_{l-1} := 1, makes Q_l a nonzero multiple of the characteristic
// polynomial. Its roots are the eigenvalues and (Q_0(x), ..., Q_{l-1}(x))
// is the matching right eigenvector. Independent route: a dense complex
// Schur eigensolver (Eigen).

#include "boson_operator.hpp"
#include "fock_poly.hpp"
#include "polynomial_roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace fockpt
{

template <typename T>
struct recursion_polynomials
{
    int degree = 0;                                  ///< l, the matrix size
    std::vector<std::vector<std::complex<T>>> polys; ///< Q_0..Q_l, ascending coefficients

    std::complex<T> evaluate(int n, const std::complex<T>& x) const
    {
        return evaluate_polynomial(std::span<const std::complex<T>>(polys[static_cast<std::size_t>(n)]), x);
    }
};

template <typename T>
struct eigen_pair
{
    std::complex<T> value{};
    std::vector<std::complex<T>> vector;
    T residual{}; ///< |A v - value v| / |v| (Euclidean)
};

namespace detail
{

inline void require_recursion(bool applicable)
{
    if (!applicable)
        throw numerical_error("three-term recursion inapplicable: zero super-diagonal entry");
}

template <typename T>
T euclidean_norm(const std::vector<std::complex<T>>& v)
{
    using std::sqrt;
    T s(0);
    for (const auto& x : v)
        s += std::norm(x);
    return sqrt(s);
}

template <typename T>
T pair_residual(const matrix<T>& a, const std::complex<T>& value, const std::vector<std::complex<T>>& v)
{
    const Eigen::Index n = a.rows();
    vector<T> x(n);
    for (Eigen::Index i = 0; i < n; ++i)
        x(i) = v[static_cast<std::size_t>(i)];
    const vector<T> r = a * x - value * x;
    using std::sqrt;
    T rn(0), xn(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        rn += std::norm(r(i));
        xn += std::norm(x(i));
    }
    return sqrt(rn / xn);
}

} // namespace detail

/// Orders eigenvalues by real part, then imaginary part. Real parts closer
/// than 1e-9 of the spectral scale are treated as equal so that rounding
/// noise does not reorder purely imaginary spectra.
template <typename T>
void sort_spectrum(std::vector<eigen_pair<T>>& pairs)
{
    using std::abs;
    using std::round;
    T scale(1);
    for (const auto& p : pairs)
        scale = std::max<T>(scale, abs(p.value));
    const T quantum = T(1e-9) * scale;
    std::stable_sort(pairs.begin(), pairs.end(), [&](const eigen_pair<T>& x, const eigen_pair<T>& y) {
        const T kx = round(x.value.real() / quantum), ky = round(y.value.real() / quantum);
        if (kx != ky)
            return kx < ky;
        return x.value.imag() < y.value.imag();
    });
}

template <typename T>
recursion_polynomials<T> build_recursion_polynomials(const tridiagonal_matrix<T>& t)
{
    using C = std::complex<T>;
    detail::require_recursion(t.recursion_applicable());
    const int l = t.size();
    recursion_polynomials<T> q{l, {}};
    q.polys.reserve(static_cast<std::size_t>(l) + 1);
    q.polys.push_back({C(T(1))});
    for (int n = 0; n < l; ++n) {
        const auto& qn = q.polys[static_cast<std::size_t>(n)];
        std::vector<C> next(qn.size() + 1, C{});
        const C b = t.diag[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < qn.size(); ++k) {
            next[k + 1] += qn[k];
            next[k] -= b * qn[k];
        }
        if (n > 0) {
            const C c = t.sub[static_cast<std::size_t>(n) - 1];
            const auto& prev = q.polys[static_cast<std::size_t>(n) - 1];
            for (std::size_t k = 0; k < prev.size(); ++k)
                next[k] -= c * prev[k];
        }
        const C d = n + 1 < l ? t.super[static_cast<std::size_t>(n)] : C(T(1));
        for (auto& x : next)
            x /= d;
        q.polys.push_back(std::move(next));
    }
    return q;
}

/// Q_0(x)..Q_l(x) evaluated directly by the recursion (no coefficients).
template <typename T>
std::vector<std::complex<T>> recursion_values(const tridiagonal_matrix<T>& t, const std::complex<T>& x)
{
    using C = std::complex<T>;
    const int l = t.size();
    std::vector<C> q(static_cast<std::size_t>(l) + 1);
    q[0] = C(T(1));
    for (int n = 0; n < l; ++n) {
        C v = (x - t.diag[static_cast<std::size_t>(n)]) * q[static_cast<std::size_t>(n)];
        if (n > 0)
            v -= t.sub[static_cast<std::size_t>(n) - 1] * q[static_cast<std::size_t>(n) - 1];
        const C d = n + 1 < l ? t.super[static_cast<std::size_t>(n)] : C(T(1));
        q[static_cast<std::size_t>(n) + 1] = v / d;
    }
    return q;
}

namespace detail
{

/// One inverse-iteration step: y = (A - x I)^-1 v, x' = x + v^H v / v^H y.
template <typename T>
std::complex<T> inverse_iteration_step(const matrix<T>& a, const std::complex<T>& x,
                                       const std::vector<std::complex<T>>& v)
{
    using std::isfinite;
    const Eigen::Index n = a.rows();
    matrix<T> shifted = a;
    for (Eigen::Index i = 0; i < n; ++i)
        shifted(i, i) -= x;
    vector<T> rhs(n);
    for (Eigen::Index i = 0; i < n; ++i)
        rhs(i) = v[static_cast<std::size_t>(i)];
    const vector<T> y = shifted.partialPivLu().solve(rhs);
    const std::complex<T> vy = rhs.dot(y); // conjugates rhs
    const std::complex<T> vv = rhs.dot(rhs);
    if (vy == std::complex<T>{})
        return x;
    const std::complex<T> next = x + vv / vy;
    if (!isfinite(next.real()) || !isfinite(next.imag()))
        return x;
    return next;
}

} // namespace detail

/// Eigenpairs from the zeros of Q_l. Each root gets one inverse-iteration
/// refinement, kept only if it lowers the residual.
template <typename T>
std::vector<eigen_pair<T>> eigen_via_recursion(const tridiagonal_matrix<T>& t)
{
    using C = std::complex<T>;
    const auto q = build_recursion_polynomials(t);
    const int l = t.size();
    const matrix<T> a = t.dense();
    const auto roots = polynomial_roots(std::span<const C>(q.polys.back()));

    auto make_pair = [&](const C& x) {
        auto values = recursion_values(t, x);
        values.pop_back();
        eigen_pair<T> p{x, std::move(values), T(0)};
        p.residual = detail::pair_residual(a, p.value, p.vector);
        return p;
    };

    std::vector<eigen_pair<T>> pairs;
    pairs.reserve(static_cast<std::size_t>(l));
    for (const auto& root : roots) {
        auto best = make_pair(root);
        if (l > 1) {
            auto refined = make_pair(detail::inverse_iteration_step(a, root, best.vector));
            if (refined.residual < best.residual)
                best = std::move(refined);
        }
        pairs.push_back(std::move(best));
    }
    sort_spectrum(pairs);
    return pairs;
}

inline constexpr int dense_iterations_per_row = 60;

/// Full eigendecomposition by Eigen's complex Schur solver; independent of
/// the recursion route.
template <typename T>
std::vector<eigen_pair<T>> dense_eigensolve(const matrix<T>& h)
{
    if (h.rows() != h.cols() || h.rows() == 0)
        throw usage_error("dense eigensolve needs a non-empty square matrix");
    Eigen::ComplexEigenSolver<matrix<T>> solver;
    solver.setMaxIterations(dense_iterations_per_row * h.rows());
    solver.compute(h, true);
    if (solver.info() != Eigen::Success)
        throw numerical_error("dense eigensolver did not converge within " +
                              std::to_string(dense_iterations_per_row * h.rows()) + " iterations");
    std::vector<eigen_pair<T>> pairs;
    for (Eigen::Index j = 0; j < h.rows(); ++j) {
        eigen_pair<T> p;
        p.value = solver.eigenvalues()(j);
        p.vector.assign(solver.eigenvectors().col(j).data(), solver.eigenvectors().col(j).data() + h.rows());
        p.residual = detail::pair_residual(h, p.value, p.vector);
        pairs.push_back(std::move(p));
    }
    sort_spectrum(pairs);
    return pairs;
}

enum class solver_route
{
    recursion,
    dense,
};

template <typename T>
struct spectrum_result
{
    solver_route route = solver_route::recursion;
    std::vector<eigen_pair<T>> pairs;
};

/// Recursion when every super-diagonal entry is nonzero, dense otherwise.
template <typename T>
spectrum_result<T> eigensolve(const tridiagonal_matrix<T>& t)
{
    if (t.recursion_applicable())
        return {solver_route::recursion, eigen_via_recursion(t)};
    return {solver_route::dense, dense_eigensolve(t.dense())};
}

/// omega(alpha) = sqrt(1 - alpha^2) for |alpha| <= 1, i sqrt(alpha^2 - 1) beyond.
template <typename T>
std::complex<T> omega(const T& alpha)
{
    using std::abs;
    using std::sqrt;
    const T a2 = alpha * alpha;
    if (abs(alpha) <= T(1))
        return {sqrt(T(1) - a2), T(0)};
    return {T(0), sqrt(a2 - T(1))};
}

/// {-m w, -(m-2) w, ..., m w} for the matrix 2 J_0 of degree m.
template <typename T>
std::vector<std::complex<T>> closed_form_spectrum(int m, const T& alpha)
{
    if (m < 0)
        throw usage_error("degree must be non-negative");
    const auto w = omega(alpha);
    std::vector<std::complex<T>> s;
    s.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        s.push_back(T(2 * k - m) * w);
    return s;
}

struct eigen_cluster
{
    std::complex<double> center;
    int algebraic = 0;
    int geometric = 0;
};

struct exceptional_report
{
    double alpha = std::nan("");
    double tolerance = 0.0;
    std::complex<double> cluster_center; ///< center of the largest cluster
    double max_pairwise_gap = 0.0;       ///< over the whole spectrum
    std::vector<int> jordan_rank_profile; ///< rank((A - center I)^k), k = 0..l
    std::vector<eigen_cluster> clusters;
    bool diagonalizable = true;
    /// Non-diagonalizable with the whole spectrum inside one tolerance ball.
    bool exceptional_point = false;
};

namespace detail
{

template <typename T>
int numerical_rank(const matrix<T>& a, const T& threshold)
{
    Eigen::JacobiSVD<matrix<T>> svd(a);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold)
            ++r;
    return r;
}

template <typename T>
T spectral_norm(const matrix<T>& a)
{
    Eigen::JacobiSVD<matrix<T>> svd(a);
    return svd.singularValues().size() ? T(svd.singularValues()(0)) : T(0);
}

} // namespace detail

inline constexpr double default_cluster_rel_tol = 1e-6;

/// Clusters the spectrum (single linkage at `tol`; tol <= 0 selects
/// 1e-6 |A|_2) and tests each multiple cluster for semisimplicity via the
/// rank of A - center I. Geometric multiplicity is l - rank, capped by the
/// algebraic one.
template <typename T>
exceptional_report detect_exceptional_point(const tridiagonal_matrix<T>& t, double tol = 0.0)
{
    using C = std::complex<T>;
    using std::abs;
    const matrix<T> a = t.dense();
    const int l = t.size();
    const T anorm = detail::spectral_norm(a);
    const T ctol = tol > 0 ? T(tol) : T(default_cluster_rel_tol) * std::max<T>(anorm, T(1));

    std::vector<C> values;
    for (const auto& p : eigensolve(t).pairs)
        values.push_back(p.value);

    exceptional_report rep;
    rep.tolerance = to_double(ctol);
    T gap(0);
    std::vector<int> parent(static_cast<std::size_t>(l));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[static_cast<std::size_t>(i)] != i)
            i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
        return i;
    };
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const T d = abs(values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(j)]);
            gap = std::max(gap, d);
            if (d < ctol)
                parent[static_cast<std::size_t>(find(i))] = find(j);
        }
    rep.max_pairwise_gap = to_double(gap);

    const T scale = std::max<T>(anorm, T(1));
    auto rank_of_power = [&](const C& center, int k) {
        if (k == 0)
            return l;
        matrix<T> shifted = a;
        for (int i = 0; i < l; ++i)
            shifted(i, i) -= center;
        matrix<T> power = shifted;
        for (int e = 1; e < k; ++e)
            power = (power * shifted).eval();
        T threshold = T(k) * ctol;
        for (int e = 1; e < k; ++e)
            threshold *= scale;
        return detail::numerical_rank(power, threshold);
    };

    std::size_t largest = 0;
    std::vector<C> centers;
    for (int root = 0; root < l; ++root) {
        std::vector<C> members;
        for (int i = 0; i < l; ++i)
            if (find(i) == root)
                members.push_back(values[static_cast<std::size_t>(i)]);
        if (members.empty())
            continue;
        C center{};
        for (const auto& v : members)
            center += v;
        center /= T(static_cast<int>(members.size()));
        eigen_cluster c{to_double(center), static_cast<int>(members.size()), 1};
        if (c.algebraic > 1)
            c.geometric = std::clamp(l - rank_of_power(center, 1), 1, c.algebraic);
        if (c.geometric < c.algebraic)
            rep.diagonalizable = false;
        if (rep.clusters.empty() || c.algebraic > rep.clusters[largest].algebraic)
            largest = rep.clusters.size();
        rep.clusters.push_back(c);
        centers.push_back(center);
    }

    const auto& main = rep.clusters[largest];
    rep.cluster_center = main.center;
    for (int k = 0; k <= l; ++k)
        rep.jordan_rank_profile.push_back(rank_of_power(centers[largest], k));
    rep.exceptional_point = !rep.diagonalizable && l > 1 && gap < ctol;
    return rep;
}

/// Largest distance between paired eigenvalues, pairing each value of `a`
/// greedily with its nearest unused partner in `b`.
template <typename T>
T spectrum_distance(const std::vector<std::complex<T>>& a, const std::vector<std::complex<T>>& b)
{
    using std::abs;
    if (a.size() != b.size())
        throw usage_error("spectrum_distance: size mismatch");
    std::vector<bool> used(b.size(), false);
    T worst(0);
    for (const auto& x : a) {
        std::size_t best = b.size();
        T best_d(0);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            const T d = abs(x - b[j]);
            if (best == b.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

template <typename T>
std::vector<std::complex<T>> values_of(const std::vector<eigen_pair<T>>& pairs)
{
    std::vector<std::complex<T>> v;
    v.reserve(pairs.size());
    for (const auto& p : pairs)
        v.push_back(p.value);
    return v;
}

/// sum_k v_k f_k with leading coefficient fixed to 1.
template <typename T>
homogeneous_polynomial<T> eigenfunction_of(const eigen_pair<T>& pair, int m)
{
    if (static_cast<int>(pair.vector.size()) != m + 1)
        throw usage_error("eigenvector length " + std::to_string(pair.vector.size()) + " does not match degree " +
                          std::to_string(m));
    return normalize_leading(homogeneous_polynomial<T>(pair.vector));
}

} // namespace fockpt
