#pragma once

// Deformed su(2) built from a bi-orthogonal pair of bases in C^2 and its
// Jordan-Schwinger realization on degree-m homogeneous polynomials.
//
// With sin(theta) = alpha and omega = cos(theta) = sqrt(1 - alpha^2):
//     J_1 = B(-i alpha, i alpha, 1, 1)
//     J_2 = B(0, 0, -i, i)
//     J_3 = J_0 = B(1, -1, i alpha, i alpha)
//     J_+- = omega^-p (J_1 +- i omega J_2)
// satisfy
//     [J_0, J_+-] = +- omega J_+-,   [J_+, J_-] = 2 omega^(1 - 2p) J_0.

#include "boson_operator.hpp"
#include "spectral.hpp"

#include <array>
#include <cmath>

namespace fockpt
{

template <typename T>
using pair_of_vectors = std::array<vector<T>, 2>;

template <typename T>
struct biorthogonal_system
{
    T alpha{};
    T theta{};
    T omega{};
    matrix<T> t_matrix; ///< cos(theta/2) 1 - w sin(theta/2) sigma_2
    pair_of_vectors<T> u;
    pair_of_vectors<T> phi; ///< omega T u_j
    pair_of_vectors<T> chi; ///< (T^dag)^-1 u_j

    /// <phi_j | chi_k>.
    matrix<T> overlap() const
    {
        matrix<T> g(2, 2);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                g(j, k) = phi[static_cast<std::size_t>(j)].dot(chi[static_cast<std::size_t>(k)]);
        return g;
    }
};

template <typename T>
matrix<T> pauli(int which)
{
    using C = std::complex<T>;
    matrix<T> s = matrix<T>::Zero(2, 2);
    switch (which) {
    case 1:
        s(0, 1) = s(1, 0) = C(T(1));
        break;
    case 2:
        s(0, 1) = C(T(0), T(-1));
        s(1, 0) = C(T(0), T(1));
        break;
    default:
        s(0, 0) = C(T(1));
        s(1, 1) = C(T(-1));
        break;
    }
    return s;
}

namespace detail
{
template <typename T>
void require_unit_interval(const T& alpha)
{
    using std::abs;
    if (!(abs(alpha) < T(1)))
        throw domain_error("bi-orthogonality restriction violated: |alpha| < 1 required, got alpha = " +
                           std::to_string(to_double(alpha)));
}
} // namespace detail

/// Default weight of sigma_2 in T. With weight 1, det T = cos(theta) = omega,
/// so T is invertible exactly on |alpha| < 1. Weight 2 (the other reading)
/// makes T singular at alpha = 0.8 and is rejected there.
inline constexpr double default_sigma2_weight = 1.0;

template <typename T>
biorthogonal_system<T> build_biorthogonal(const T& alpha, double sigma2_weight = default_sigma2_weight)
{
    using std::abs;
    using std::asin;
    using std::cos;
    using std::sin;
    using std::sqrt;
    using C = std::complex<T>;
    detail::require_unit_interval(alpha);

    biorthogonal_system<T> s;
    s.alpha = alpha;
    s.theta = asin(alpha);
    s.omega = sqrt(T(1) - alpha * alpha);
    const T half = s.theta / T(2);
    s.t_matrix = C(cos(half)) * matrix<T>::Identity(2, 2) - C(T(sigma2_weight) * sin(half)) * pauli<T>(2);

    const C det = s.t_matrix.determinant();
    if (abs(det) <= T(1e-12))
        throw domain_error("bi-orthogonal transform is singular at alpha = " + std::to_string(to_double(alpha)));

    const T r = T(1) / sqrt(T(2));
    const matrix<T> t_dag_inv = s.t_matrix.adjoint().inverse();
    for (int j = 0; j < 2; ++j) {
        vector<T> u(2);
        u(0) = C(r);
        u(1) = C(j == 0 ? r : -r);
        s.u[static_cast<std::size_t>(j)] = u;
        s.phi[static_cast<std::size_t>(j)] = C(s.omega) * (s.t_matrix * u);
        s.chi[static_cast<std::size_t>(j)] = t_dag_inv * u;
    }
    return s;
}

template <typename T>
struct jordan_schwinger_triple
{
    matrix<T> j1, j2, j3;
};

template <typename T>
jordan_schwinger_triple<T> jordan_schwinger(const T& alpha, int m)
{
    using C = std::complex<T>;
    using op = quadratic_boson_operator<T>;
    const op b1{C(T(0), -alpha), C(T(0), alpha), C(T(1)), C(T(1))};
    const op b2{C{}, C{}, C(T(0), T(-1)), C(T(0), T(1))};
    const op b3 = op::coupled(T(1), T(-1), alpha);
    return {tridiagonal_rep(b1, m).dense(), tridiagonal_rep(b2, m).dense(), tridiagonal_rep(b3, m).dense()};
}

template <typename T>
struct sigma_generators_result
{
    std::array<matrix<T>, 3> sigma;
    /// max_m |sigma_m - J_m(alpha)| at m = 1 (Frobenius).
    T residual_vs_jordan_schwinger{};
    /// max_m |sigma_m - J_m(-alpha)| at m = 1.
    T residual_vs_mirrored{};
};

/// Deformed generators sigma_m = i^(m+1)/2 sum_jk c^(m)_jk omega^-[m=2] |phi_j><chi_k|.
/// Coefficients, with j, k in {1, 2}:
///     c^(1)_jk = (-1)^j delta_jk
///     c^(3)_jk = 1 - (-1)^j c^(1)_jk     (= 1 - delta_jk)
///     c^(2)_jk = (-1)^j c^(3)_jk
template <typename T>
sigma_generators_result<T> sigma_generators(const T& alpha, double sigma2_weight = default_sigma2_weight)
{
    using C = std::complex<T>;
    const auto sys = build_biorthogonal(alpha, sigma2_weight);
    auto sign = [](int j) { return j % 2 == 0 ? 1 : -1; };
    auto coeff = [&](int m, int j, int k) {
        const int c1 = j == k ? sign(j) : 0;
        const int c3 = 1 - sign(j) * c1;
        return m == 1 ? c1 : m == 3 ? c3 : sign(j) * c3;
    };

    sigma_generators_result<T> r;
    for (int m = 1; m <= 3; ++m) {
        matrix<T> s = matrix<T>::Zero(2, 2);
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                const int c = coeff(m, j, k);
                if (c != 0)
                    s += C(T(c)) * sys.phi[static_cast<std::size_t>(j - 1)] *
                         sys.chi[static_cast<std::size_t>(k - 1)].adjoint();
            }
        C prefactor = i_pow<T>(m + 1) / T(2);
        if (m == 2)
            prefactor /= sys.omega;
        r.sigma[static_cast<std::size_t>(m - 1)] = prefactor * s;
    }

    const auto js = jordan_schwinger(alpha, 1);
    const auto mirrored = jordan_schwinger(T(-alpha), 1);
    const std::array<const matrix<T>*, 3> direct{&js.j1, &js.j2, &js.j3};
    const std::array<const matrix<T>*, 3> mirror{&mirrored.j1, &mirrored.j2, &mirrored.j3};
    for (std::size_t m = 0; m < 3; ++m) {
        r.residual_vs_jordan_schwinger =
            std::max(r.residual_vs_jordan_schwinger, frobenius_norm<T>(r.sigma[m] - *direct[m]));
        r.residual_vs_mirrored = std::max(r.residual_vs_mirrored, frobenius_norm<T>(r.sigma[m] - *mirror[m]));
    }
    return r;
}

template <typename T>
struct algebra_bundle
{
    T alpha{};
    T p{};
    int m = 0;
    T omega{};
    matrix<T> j1, j2, j3;
    matrix<T> j_plus, j_minus, j0;
    matrix<T> casimir_plus, casimir_minus;
};

/// Casimir branches omega^-2 J_0 (J_0 +- omega) + omega^(2p-2) J_-+ J_+-.
template <typename T>
std::array<matrix<T>, 2> casimir_branches(const algebra_bundle<T>& b)
{
    using C = std::complex<T>;
    using std::pow;
    const Eigen::Index n = b.j0.rows();
    const matrix<T> id = matrix<T>::Identity(n, n);
    const T w2 = T(1) / (b.omega * b.omega);
    const C ladder = C(pow(b.omega, T(2) * b.p - T(2)));
    const matrix<T> plus = C(w2) * b.j0 * (b.j0 + C(b.omega) * id) + ladder * b.j_minus * b.j_plus;
    const matrix<T> minus = C(w2) * b.j0 * (b.j0 - C(b.omega) * id) + ladder * b.j_plus * b.j_minus;
    return {plus, minus};
}

template <typename T>
algebra_bundle<T> ladder_operators(const T& alpha, const T& p, int m)
{
    using C = std::complex<T>;
    using std::pow;
    using std::sqrt;
    detail::require_unit_interval(alpha);
    algebra_bundle<T> b;
    b.alpha = alpha;
    b.p = p;
    b.m = m;
    b.omega = sqrt(T(1) - alpha * alpha);
    auto js = jordan_schwinger(alpha, m);
    b.j1 = std::move(js.j1);
    b.j2 = std::move(js.j2);
    b.j3 = std::move(js.j3);
    const C scale(pow(b.omega, -p));
    const C iw(T(0), b.omega);
    b.j_plus = scale * (b.j1 + iw * b.j2);
    b.j_minus = scale * (b.j1 - iw * b.j2);
    b.j0 = b.j3;
    auto c = casimir_branches(b);
    b.casimir_plus = std::move(c[0]);
    b.casimir_minus = std::move(c[1]);
    return b;
}

template <typename T>
matrix<T> commutator(const matrix<T>& a, const matrix<T>& b)
{
    return a * b - b * a;
}

template <typename T>
struct commutator_residuals
{
    T r_plus{};  ///< |[J0, J+] - omega J+|
    T r_minus{}; ///< |[J0, J-] + omega J-|
    T r_pm{};    ///< |[J+, J-] - 2 omega^(1-2p) J0|

    T max() const { return std::max({r_plus, r_minus, r_pm}); }
};

template <typename T>
commutator_residuals<T> compute_commutator_residuals(const algebra_bundle<T>& b)
{
    using C = std::complex<T>;
    using std::pow;
    const C w(b.omega);
    const C k(T(2) * pow(b.omega, T(1) - T(2) * b.p));
    return {frobenius_norm<T>(commutator(b.j0, b.j_plus) - w * b.j_plus),
            frobenius_norm<T>(commutator(b.j0, b.j_minus) + w * b.j_minus),
            frobenius_norm<T>(commutator(b.j_plus, b.j_minus) - k * b.j0)};
}

/// Structure constants f[a][b][c] with [X_a, X_b] = sum_c f[a][b][c] X_c in
/// the basis (J0, J+, J-), fitted by least squares from the bundle matrices.
template <typename T>
struct structure_constants
{
    std::array<std::array<std::array<std::complex<T>, 3>, 3>, 3> f{};
    T fit_residual{}; ///< largest |[X_a, X_b] - sum_c f X_c|
};

template <typename T>
structure_constants<T> fit_structure_constants(const algebra_bundle<T>& b)
{
    const std::array<const matrix<T>*, 3> basis{&b.j0, &b.j_plus, &b.j_minus};
    const Eigen::Index n = b.j0.rows();
    if (n < 2)
        throw usage_error("structure constants need degree m >= 1");
    matrix<T> design(n * n, 3);
    for (int c = 0; c < 3; ++c)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                design(j * n + i, c) = (*basis[static_cast<std::size_t>(c)])(i, j);
    const auto qr = design.colPivHouseholderQr();
    structure_constants<T> s;
    for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb) {
            const matrix<T> br = commutator(*basis[static_cast<std::size_t>(a)], *basis[static_cast<std::size_t>(bb)]);
            vector<T> rhs(n * n);
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index i = 0; i < n; ++i)
                    rhs(j * n + i) = br(i, j);
            const vector<T> f = qr.solve(rhs);
            for (int c = 0; c < 3; ++c)
                s.f[static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)][static_cast<std::size_t>(c)] = f(c);
            const vector<T> res = design * f - rhs;
            T rn(0);
            for (Eigen::Index i = 0; i < res.size(); ++i)
                rn += std::norm(res(i));
            using std::sqrt;
            s.fit_residual = std::max<T>(s.fit_residual, sqrt(rn));
        }
    return s;
}

template <typename T>
struct killing_form
{
    /// Basis order (J0, J+, J-).
    std::array<std::array<std::complex<T>, 3>, 3> g{};

    std::complex<T> determinant() const
    {
        return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
               g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
               g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    }

    T distance(const killing_form& o) const
    {
        using std::abs;
        T d(0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                d = std::max<T>(d, abs(g[i][j] - o.g[i][j]));
        return d;
    }
};

/// g_jk = tr(ad_j ad_k) with (ad_a)_{cb} = f[a][b][c].
template <typename T>
killing_form<T> killing_from_structure(const structure_constants<T>& s)
{
    killing_form<T> k;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            std::complex<T> tr{};
            // tr(ad_a ad_b) = sum_{c,d} f[a][d][c] f[b][c][d]
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = 0; d < 3; ++d)
                    tr += s.f[a][d][c] * s.f[b][c][d];
            k.g[a][b] = tr;
        }
    return k;
}

/// Killing form of the algebra at (alpha, p), from structure constants
/// fitted on the degree-m realization (default m = 1).
template <typename T>
killing_form<T> compute_killing_form(const T& alpha, const T& p, int m = 1)
{
    return killing_from_structure(fit_structure_constants(ladder_operators(alpha, p, m)));
}

/// 2 [[w^2, 0, 0], [0, 0, 2 w^(2-2p)], [0, 2 w^(2-2p), 0]].
template <typename T>
killing_form<T> expected_killing_form(const T& alpha, const T& p)
{
    using std::pow;
    using std::sqrt;
    detail::require_unit_interval(alpha);
    const T w = sqrt(T(1) - alpha * alpha);
    killing_form<T> k;
    k.g[0][0] = T(2) * w * w;
    k.g[1][2] = k.g[2][1] = T(4) * pow(w, T(2) - T(2) * p);
    return k;
}

template <typename T>
struct casimir_report
{
    matrix<T> c_plus, c_minus;
    T commutation_residual{}; ///< max over g in {J0, J+, J-} and both branches of |[C, g]|
    T branch_gap{};           ///< |C_+ - C_-|
};

template <typename T>
casimir_report<T> casimir(const algebra_bundle<T>& b)
{
    casimir_report<T> r{b.casimir_plus, b.casimir_minus, T(0), frobenius_norm<T>(b.casimir_plus - b.casimir_minus)};
    for (const matrix<T>* c : {&r.c_plus, &r.c_minus})
        for (const matrix<T>* g : {&b.j0, &b.j_plus, &b.j_minus})
            r.commutation_residual = std::max(r.commutation_residual, frobenius_norm<T>(commutator(*c, *g)));
    return r;
}

/// Residual summary used by the algebra check and the scan.
template <typename T>
struct algebra_residuals
{
    commutator_residuals<T> commutators;
    T killing_deviation{};
    T killing_fit{};
    T casimir_gap{};
    T casimir_commutation{};
};

template <typename T>
algebra_residuals<T> check_algebra(const T& alpha, const T& p, int m)
{
    const auto bundle = ladder_operators(alpha, p, m);
    const auto cas = casimir(bundle);
    algebra_residuals<T> r{compute_commutator_residuals(bundle), T(0), T(0), cas.branch_gap, cas.commutation_residual};
    if (m >= 1) {
        const auto sc = fit_structure_constants(bundle);
        r.killing_deviation = killing_from_structure(sc).distance(expected_killing_form(alpha, p));
        r.killing_fit = sc.fit_residual;
    }
    return r;
}

} // namespace fockpt
