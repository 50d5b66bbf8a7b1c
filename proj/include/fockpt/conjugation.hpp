#pragma once

// Weighted composition conjugations and the PT-type operators they generate
// on two-variable homogeneous polynomials.
//
//   W_(theta, eta, upsilon) psi(z) = upsilon e^(eta z) conj(psi(conj(theta z + eta)))
//
// With eta = 0, upsilon = 1 and theta_j = s_j in {+1, -1} per variable,
// the action on coefficients of f_k = z1^(m-k) z2^k is
//   c_k -> conj(c_k) s1^(m-k) s2^k.
// Antilinear maps are only ever applied as coefficient maps; the sandwich
// W H W of a linear H is returned as the linear matrix D conj(H) D.

#include "fock_poly.hpp"

#include <string_view>

namespace fockpt
{

template <typename T>
struct conjugation_triple
{
    std::complex<T> theta{T(1)};
    std::complex<T> eta{};
    std::complex<T> upsilon{T(1)};
};

/// |theta| = 1, conj(theta) eta + conj(eta) = 0, |upsilon|^2 e^(|eta|^2) = 1.
template <typename T>
bool validate_triple(const conjugation_triple<T>& t, double tol = 1e-12)
{
    using std::abs;
    using std::exp;
    const T eps = T(tol);
    const bool unimodular = abs(abs(t.theta) - T(1)) <= eps;
    const bool shift = abs(std::conj(t.theta) * t.eta + std::conj(t.eta)) <= eps;
    const bool weight = abs(std::norm(t.upsilon) * exp(std::norm(t.eta)) - T(1)) <= eps;
    return unimodular && shift && weight;
}

/// Two-variable conjugation with eta = 0, upsilon = 1 and theta_j = s_j.
struct pt_operator
{
    int s1 = 1;
    int s2 = 1;

    friend bool operator==(const pt_operator&, const pt_operator&) = default;
};

/// W_2^(1): flips z1.
inline constexpr pt_operator partial_pt_first{-1, 1};
/// W_2^(2): flips z2.
inline constexpr pt_operator partial_pt_second{1, -1};
/// W_2: flips both variables.
inline constexpr pt_operator global_pt{-1, -1};
/// Plain complex conjugation T.
inline constexpr pt_operator time_reversal{1, 1};

inline std::string_view name(const pt_operator& w)
{
    if (w == partial_pt_first)
        return "W2(1)";
    if (w == partial_pt_second)
        return "W2(2)";
    if (w == global_pt)
        return "W2";
    return "T";
}

/// Per-variable triple (theta_j, 0, 1) of w, j in {1, 2}.
template <typename T>
conjugation_triple<T> variable_triple(const pt_operator& w, int j)
{
    return {std::complex<T>(T(j == 1 ? w.s1 : w.s2)), {}, std::complex<T>(T(1))};
}

/// s1^(m-k) s2^k, the diagonal of D in W H W = D conj(H) D.
inline int pt_sign(const pt_operator& w, int m, int k)
{
    int s = 1;
    if (w.s1 < 0 && (m - k) % 2 != 0)
        s = -s;
    if (w.s2 < 0 && k % 2 != 0)
        s = -s;
    return s;
}

template <typename T>
homogeneous_polynomial<T> apply_pt(const pt_operator& w, const homogeneous_polynomial<T>& p)
{
    homogeneous_polynomial<T> r(p.degree());
    const int m = p.degree();
    for (int k = 0; k <= m; ++k)
        r[k] = std::conj(p[k]) * T(pt_sign(w, m, k));
    return r;
}

namespace detail
{
template <typename T>
int square_degree(const matrix<T>& h)
{
    if (h.rows() != h.cols() || h.rows() < 1)
        throw usage_error("dimension mismatch: expected a non-empty square matrix");
    return static_cast<int>(h.rows()) - 1;
}
} // namespace detail

/// Fock adjoint on the degree-m subspace: H* = G^-1 H^dag G, so that
/// <H p, q> = <p, H* q> for all degree-m p, q.
template <typename T>
matrix<T> star_adjoint(const matrix<T>& h, int m)
{
    if (detail::square_degree(h) != m)
        throw usage_error("dimension mismatch: matrix is " + std::to_string(h.rows()) + "x" +
                          std::to_string(h.cols()) + ", degree " + std::to_string(m) + " needs " +
                          std::to_string(m + 1));
    const auto g = make_gram_diagonal<T>(m);
    matrix<T> r = h.adjoint();
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            r(i, j) *= g.weights[static_cast<std::size_t>(j)] / g.weights[static_cast<std::size_t>(i)];
    return r;
}

/// The linear operator W H W for antilinear W: D conj(H) D.
template <typename T>
matrix<T> conjugate_operator(const pt_operator& w, const matrix<T>& h)
{
    const int m = detail::square_degree(h);
    matrix<T> r = h.conjugate();
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            r(i, j) *= T(pt_sign(w, m, i) * pt_sign(w, m, j));
    return r;
}

enum class symmetry_kind
{
    symmetric,
    antisymmetric,
    broken,
};

inline std::string_view name(symmetry_kind v)
{
    switch (v) {
    case symmetry_kind::symmetric: return "symmetric";
    case symmetry_kind::antisymmetric: return "antisymmetric";
    default: return "broken";
    }
}

struct symmetry_verdict
{
    pt_operator op;
    symmetry_kind verdict = symmetry_kind::broken;
    double residual = 0.0; ///< min(|W psi - psi|, |W psi + psi|) / |psi|, Fock norm
};

inline constexpr double default_symmetry_tol = 1e-9;

/// Classifies a gauge-fixed state as W-symmetric, W-antisymmetric or broken.
/// Residuals are relative to the Fock norm of the gauge-fixed state.
template <typename T>
symmetry_verdict classify_symmetry(const homogeneous_polynomial<T>& p, const pt_operator& w,
                                   double tol = default_symmetry_tol)
{
    if (p.is_zero())
        throw usage_error("cannot classify the zero polynomial");
    const auto psi = gauge_fix(p);
    const auto wpsi = apply_pt(w, psi);
    const T norm = fock_norm(psi);
    const T plus = fock_norm(wpsi - psi) / norm;
    const T minus = fock_norm(wpsi + psi) / norm;
    symmetry_verdict v{w};
    if (plus < T(tol))
        v.verdict = symmetry_kind::symmetric;
    else if (minus < T(tol))
        v.verdict = symmetry_kind::antisymmetric;
    v.residual = to_double(plus < minus ? plus : minus);
    return v;
}

} // namespace fockpt
