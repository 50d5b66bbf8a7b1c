// polynomial_roots and spectral.

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fockpt;
using fockpt::testing::dist;
using C = std::complex<double>;
using W = std::complex<wide>;

namespace
{

tridiagonal_matrix<wide> wide_operator(double alpha, int m) { return doubled_j0(wide(alpha), m); }

std::vector<C> as_double(const std::vector<W>& v)
{
    std::vector<C> r;
    for (const auto& x : v)
        r.push_back(to_double(x));
    return r;
}

double max_distance(const std::vector<C>& a, const std::vector<C>& b) { return spectrum_distance(a, b); }

// det(x I - A) by the Faddeev-LeVerrier recurrence, ascending coefficients.
std::vector<C> characteristic_polynomial(const matrix<double>& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<C> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    matrix<double> mk = matrix<double>::Zero(n, n);
    const matrix<double> id = matrix<double>::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        mk = a * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
        c[static_cast<std::size_t>(n - k)] = -(a * mk).trace() / double(k);
    }
    return c;
}

} // namespace

// ---------------------------------------------------------------------------
// polynomial_roots

TEST(PolynomialRoots, KnownRoots)
{
    // (x - 1)(x + 2)(x - i)
    const std::vector<C> expected{1, -2, C(0, 1)};
    std::vector<C> coeffs{1};
    for (const auto& r : expected) {
        std::vector<C> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= r * coeffs[k];
        }
        coeffs = next;
    }
    EXPECT_LT(max_distance(polynomial_roots(coeffs), expected), 1e-12);
}

TEST(PolynomialRoots, ZeroRootsAreSplitOffExactly)
{
    // x^3 (x^2 - 4)
    const std::vector<C> coeffs{0, 0, 0, -4, 0, 1};
    auto roots = polynomial_roots(coeffs);
    ASSERT_EQ(roots.size(), 5u);
    EXPECT_EQ(std::count(roots.begin(), roots.end(), C{}), 3);
    EXPECT_LT(max_distance(roots, {0, 0, 0, 2, -2}), 1e-13);
}

TEST(PolynomialRoots, TrailingZeroCoefficientsLowerTheDegree)
{
    const std::vector<C> coeffs{-6, 1, 1, 0, 0};
    EXPECT_LT(max_distance(polynomial_roots(coeffs), {2, -3}), 1e-13);
    EXPECT_TRUE(polynomial_roots(std::vector<C>{3}).empty());
}

TEST(PolynomialRoots, ZeroPolynomialIsRejected)
{
    EXPECT_THROW(polynomial_roots(std::vector<C>{0, 0}), usage_error);
}

TEST(PolynomialRoots, RandomRootsRecovered)
{
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + fockpt::testing::random_degree(11);
        std::vector<C> roots;
        for (int i = 0; i < n; ++i)
            roots.push_back(fockpt::testing::random_complex());
        std::vector<C> coeffs{1};
        for (const auto& r : roots) {
            std::vector<C> next(coeffs.size() + 1);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                next[k + 1] += coeffs[k];
                next[k] -= r * coeffs[k];
            }
            coeffs = next;
        }
        const auto found = polynomial_roots(coeffs);
        for (const auto& x : found) {
            const C v = evaluate_polynomial(std::span<const C>(coeffs), x);
            double scale = 0;
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                scale += std::abs(coeffs[k]) * std::pow(std::abs(x), double(k));
            EXPECT_LT(std::abs(v) / scale, 1e-12);
        }
        EXPECT_LT(max_distance(found, roots), 1e-6);
    }
}

TEST(PolynomialRoots, WideRootsOfHighDegree)
{
    // Roots 1..12: badly conditioned in double, fine in binary128.
    std::vector<W> coeffs{W(1)};
    for (int r = 1; r <= 12; ++r) {
        std::vector<W> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= wide(r) * coeffs[k];
        }
        coeffs = next;
    }
    std::vector<C> expected;
    for (int r = 1; r <= 12; ++r)
        expected.push_back(double(r));
    EXPECT_LT(max_distance(as_double(polynomial_roots(coeffs)), expected), 1e-15);
}

TEST(PolynomialRoots, IterationCapReportsPartialRoots)
{
    matrix<double> h(2, 2);
    h << C(0), C(1), C(1), C(0);
    try {
        (void)detail::hessenberg_eigenvalues(h, 0);
        FAIL() << "expected root_finding_error";
    } catch (const root_finding_error& e) {
        EXPECT_TRUE(e.partial_roots().empty());
        EXPECT_NE(std::string(e.what()).find("did not converge"), std::string::npos);
    }
}

// ---------------------------------------------------------------------------
// recursion

TEST(Recursion, DegreeOneCharacteristicPolynomial)
{
    const auto t = doubled_j0(0.6, 1);
    const auto q = build_recursion_polynomials(t);
    ASSERT_EQ(q.polys.size(), 3u);
    EXPECT_EQ(q.polys[0], std::vector<C>{1});
    // Q_2 is proportional to x^2 - 0.64.
    const auto& q2 = q.polys[2];
    ASSERT_EQ(q2.size(), 3u);
    EXPECT_LT(std::abs(q2[1] / q2[2]), 1e-15);
    EXPECT_LT(std::abs(q2[0] / q2[2] - (-0.64)), 1e-15);
}

TEST(Recursion, DiagonalFreeExample)
{
    tridiagonal_matrix<double> t{{0, 0}, {C(0, 1)}, {C(0, 1)}};
    const auto q = build_recursion_polynomials(t);
    const auto& q2 = q.polys[2];
    EXPECT_LT(std::abs(q2[0] / q2[2] - 1.0), 1e-15);
    EXPECT_LT(max_distance(polynomial_roots(q2), {C(0, 1), C(0, -1)}), 1e-14);
}

TEST(Recursion, LastPolynomialIsCharacteristicPolynomial)
{
    for (int trial = 0; trial < 50; ++trial) {
        const int l = 1 + fockpt::testing::random_degree(7);
        tridiagonal_matrix<double> t;
        for (int k = 0; k < l; ++k)
            t.diag.push_back(fockpt::testing::random_complex());
        for (int k = 0; k + 1 < l; ++k) {
            t.sub.push_back(fockpt::testing::random_complex());
            t.super.push_back(fockpt::testing::random_complex());
        }
        const auto q = build_recursion_polynomials(t);
        const auto charpoly = characteristic_polynomial(t.dense());
        const auto& ql = q.polys.back();
        ASSERT_EQ(ql.size(), charpoly.size());
        const C ratio = ql.back();
        for (std::size_t k = 0; k < ql.size(); ++k)
            EXPECT_LT(std::abs(ql[k] / ratio - charpoly[k]), 1e-9 * (1 + std::abs(charpoly[k])));
        for (int n = 0; n <= l; ++n) {
            const C x = fockpt::testing::random_complex();
            EXPECT_LT(std::abs(q.evaluate(n, x) - recursion_values(t, x)[static_cast<std::size_t>(n)]),
                      1e-9 * (1 + std::abs(q.evaluate(n, x))));
        }
    }
}

TEST(Recursion, ZeroSuperDiagonalIsRejected)
{
    const auto t = doubled_j0(0.0, 3);
    try {
        (void)build_recursion_polynomials(t);
        FAIL() << "expected numerical_error";
    } catch (const numerical_error& e) {
        EXPECT_NE(std::string(e.what()).find("three-term recursion inapplicable"), std::string::npos);
    }
    const auto r = eigensolve(t);
    EXPECT_EQ(r.route, solver_route::dense);
    EXPECT_LT(max_distance(values_of(r.pairs), {-3, -1, 1, 3}), 1e-14);
}

TEST(EigenViaRecursion, Examples)
{
    const auto pairs = eigen_via_recursion(doubled_j0(0.6, 1));
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_LT(dist(pairs[0].value, -0.8), 1e-14);
    EXPECT_LT(dist(pairs[1].value, 0.8), 1e-14);
    const auto psi = eigenfunction_of(pairs[1], 1);
    EXPECT_LT(std::abs(psi[1] - C(0, 1.0 / 3)), 1e-14);

    EXPECT_LT(max_distance(values_of(eigen_via_recursion(doubled_j0(0.6, 2))), {-1.6, 0, 1.6}), 1e-14);
    EXPECT_LT(max_distance(values_of(dense_eigensolve(doubled_j0(0.0, 2).dense())), {-2, 0, 2}), 1e-14);
}

TEST(DenseEigensolve, Examples)
{
    EXPECT_LT(max_distance(values_of(dense_eigensolve(doubled_j0(0.6, 1).dense())), {-0.8, 0.8}), 1e-8);
    EXPECT_LT(max_distance(values_of(dense_eigensolve(doubled_j0(0.6, 2).dense())), {-1.6, 0, 1.6}), 1e-8);

    const auto id = dense_eigensolve(matrix<double>::Identity(4, 4).eval());
    for (const auto& p : id)
        EXPECT_EQ(p.value, C(1));

    matrix<double> nil = matrix<double>::Zero(2, 2);
    nil(0, 1) = 1;
    const auto n = dense_eigensolve(nil);
    EXPECT_EQ(n[0].value, C{});
    EXPECT_EQ(n[1].value, C{});
    EXPECT_THROW(dense_eigensolve(matrix<double>::Zero(2, 3).eval()), usage_error);
}

TEST(DenseEigensolve, SortedLexicographically)
{
    const auto pairs = dense_eigensolve(doubled_j0(1.5, 4).dense());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const C a = pairs[i - 1].value, b = pairs[i].value;
        EXPECT_TRUE(a.real() < b.real() - 1e-9 || (std::abs(a.real() - b.real()) <= 1e-8 && a.imag() <= b.imag()));
    }
}

TEST(ClosedForm, Examples)
{
    EXPECT_LT(max_distance(closed_form_spectrum(3, 0.6), {-2.4, -0.8, 0.8, 2.4}), 1e-15);
    for (const auto& v : closed_form_spectrum(2, 1.0))
        EXPECT_EQ(v, C{});
    EXPECT_LT(max_distance(closed_form_spectrum(2, 1.25), {C(0, -1.5), 0, C(0, 1.5)}), 1e-15);
    EXPECT_LT(max_distance(values_of(dense_eigensolve(doubled_j0(1.25, 2).dense())), {C(0, -1.5), 0, C(0, 1.5)}),
              1e-8);
    EXPECT_THROW(closed_form_spectrum(-1, 0.5), usage_error);
}

TEST(ClosedForm, BranchConvention)
{
    EXPECT_LT(dist(omega(0.6), C(0.8)), 1e-15);
    EXPECT_LT(dist(omega(-0.6), C(0.8)), 1e-15);
    EXPECT_EQ(omega(1.0), C(0));
    EXPECT_LT(dist(omega(1.25), C(0, 0.75)), 1e-15);
    EXPECT_LT(dist(omega(-1.25), C(0, 0.75)), 1e-15);
}

// ---------------------------------------------------------------------------
// invariants over the grids (binary128)

TEST(SpectralInvariants, ClosedFormAgreement)
{
    for (int m = 0; m <= 10; ++m)
        for (double alpha : fockpt::testing::real_phase_grid()) {
            const auto t = wide_operator(alpha, m);
            const auto got = values_of(eigensolve(t).pairs);
            const auto want = closed_form_spectrum(m, wide(alpha));
            EXPECT_LT(to_double(spectrum_distance(got, want)), 1e-8) << "m=" << m << " alpha=" << alpha;
        }
}

TEST(SpectralInvariants, OracleEquivalence)
{
    auto alphas = fockpt::testing::real_phase_grid();
    alphas.push_back(1.5);
    for (int m = 1; m <= 10; ++m)
        for (double alpha : alphas) {
            if (alpha == 0)
                continue; // recursion inapplicable
            const auto t = wide_operator(alpha, m);
            const auto rec = eigen_via_recursion(t);
            const auto dense = dense_eigensolve(t.dense());
            EXPECT_LT(to_double(spectrum_distance(values_of(rec), values_of(dense))), 1e-8)
                << "m=" << m << " alpha=" << alpha;
            for (const auto& p : rec)
                EXPECT_LT(to_double(p.residual), 1e-8);
            for (const auto& p : dense)
                EXPECT_LT(to_double(p.residual), 1e-8);
        }
}

TEST(SpectralInvariants, RecursionValuesAlternateRealAndImaginary)
{
    for (int m = 1; m <= 10; ++m)
        for (double alpha : fockpt::testing::interior_grid()) {
            const auto t = wide_operator(alpha, m);
            for (const auto& lambda : closed_form_spectrum(m, wide(alpha))) {
                const auto q = recursion_values(t, lambda);
                for (int n = 0; n <= m; ++n) {
                    const C v = to_double(q[static_cast<std::size_t>(n)]);
                    const double scale = std::max(1.0, std::abs(v));
                    if (n % 2 == 0)
                        EXPECT_LT(std::abs(v.imag()) / scale, 1e-10) << m << ' ' << alpha << ' ' << n;
                    else
                        EXPECT_LT(std::abs(v.real()) / scale, 1e-10) << m << ' ' << alpha << ' ' << n;
                }
            }
        }
}

TEST(SpectralInvariants, SpectrumSymmetricUnderNegation)
{
    for (int m = 1; m <= 10; ++m)
        for (double alpha : {0.2, 0.7, 0.95, 1.25, 1.5, 2.0}) {
            const auto v = values_of(eigensolve(wide_operator(alpha, m)).pairs);
            std::vector<W> neg;
            for (const auto& x : v)
                neg.push_back(-x);
            EXPECT_LT(to_double(spectrum_distance(v, neg)), 1e-8);
        }
}

TEST(SpectralInvariants, ParityPatternOfEigenfunctions)
{
    for (int m = 1; m <= 10; ++m)
        for (double alpha : fockpt::testing::real_phase_grid()) {
            for (const auto& p : eigensolve(wide_operator(alpha, m)).pairs) {
                const homogeneous_polynomial<wide> psi(p.vector);
                const auto v1 = classify_symmetry(psi, partial_pt_first);
                const auto v2 = classify_symmetry(psi, partial_pt_second);
                if (m % 2 == 1) {
                    EXPECT_EQ(v1.verdict, symmetry_kind::antisymmetric) << m << ' ' << alpha;
                    EXPECT_EQ(v2.verdict, symmetry_kind::symmetric) << m << ' ' << alpha;
                } else {
                    EXPECT_EQ(v1.verdict, symmetry_kind::symmetric) << m << ' ' << alpha;
                    EXPECT_EQ(v2.verdict, symmetry_kind::symmetric) << m << ' ' << alpha;
                }
            }
        }
}

TEST(SpectralInvariants, ComplexEigenvaluesBreakPartialSymmetry)
{
    for (int m = 1; m <= 10; ++m)
        for (double alpha : {1.25, 1.5}) {
            for (const auto& p : eigensolve(wide_operator(alpha, m)).pairs) {
                if (std::abs(to_double(p.value.imag())) <= 1e-8)
                    continue;
                const homogeneous_polynomial<wide> psi(p.vector);
                EXPECT_EQ(classify_symmetry(psi, partial_pt_first).verdict, symmetry_kind::broken);
                EXPECT_EQ(classify_symmetry(psi, partial_pt_second).verdict, symmetry_kind::broken);
            }
        }
}

// ---------------------------------------------------------------------------
// eigenfunctions

namespace
{

homogeneous_polynomial<wide> eigenfunction_for(double alpha, int m, const C& lambda)
{
    for (const auto& p : eigensolve(wide_operator(alpha, m)).pairs)
        if (dist(p.value, lambda) < 1e-8)
            return eigenfunction_of(p, m);
    throw std::runtime_error("eigenvalue not found");
}

double coefficient_distance(const homogeneous_polynomial<wide>& p, const std::vector<C>& want)
{
    double d = 0;
    for (int k = 0; k <= p.degree(); ++k)
        d = std::max(d, dist(p[k], want[static_cast<std::size_t>(k)]));
    return d;
}

} // namespace

TEST(Eigenfunctions, DegreeTwoPatterns)
{
    const double w = 0.8;
    const double g_plus = std::sqrt((1 - w) / (1 + w)), g_minus = std::sqrt((1 + w) / (1 - w));
    const double g0 = 2 / std::sqrt(1 - w * w);
    EXPECT_NEAR(g_plus, 1.0 / 3, 1e-15);
    EXPECT_NEAR(g_minus, 3.0, 1e-14);
    EXPECT_NEAR(g0, 10.0 / 3, 1e-14);

    const auto plus = eigenfunction_for(0.6, 2, 1.6);
    EXPECT_LT(coefficient_distance(plus, {1, C(0, 2 * g_plus), -g_plus * g_plus}), 1e-9);
    EXPECT_LT(coefficient_distance(plus, {1, C(0, 2.0 / 3), -1.0 / 9}), 1e-9);

    const auto zero = eigenfunction_for(0.6, 2, 0);
    EXPECT_LT(coefficient_distance(zero, {1, C(0, g0), -1}), 1e-9);

    const auto minus = eigenfunction_for(0.6, 2, -1.6);
    EXPECT_LT(coefficient_distance(minus, {1, C(0, 2 * g_minus), -g_minus * g_minus}), 1e-9);
}

TEST(Eigenfunctions, DegreeThreeOuterPatterns)
{
    for (double alpha : fockpt::testing::interior_grid()) {
        const double w = std::sqrt(1 - alpha * alpha);
        const double gp = std::sqrt((1 - w) / (1 + w)), gm = std::sqrt((1 + w) / (1 - w));
        for (const auto& [lambda, g] : {std::pair{3 * w, gp}, std::pair{-3 * w, gm}}) {
            const auto psi = eigenfunction_for(alpha, 3, lambda);
            EXPECT_LT(coefficient_distance(psi, {1, C(0, 3 * g), -3 * g * g, C(0, -g * g * g)}), 1e-9)
                << "alpha=" << alpha << " lambda=" << lambda;
        }
    }
}

TEST(Eigenfunctions, DegreeThreeInnerStatesAreEigenvectors)
{
    const auto t = wide_operator(0.6, 3);
    const matrix<wide> a = t.dense();
    for (const auto& p : eigensolve(t).pairs) {
        if (std::abs(std::abs(to_double(p.value)) - 0.8) > 1e-8)
            continue;
        const vector<wide> v = eigenfunction_of(p, 3).to_vector();
        const vector<wide> r = a * v - p.value * v;
        EXPECT_LT(to_double(frobenius_norm<wide>(r)), 1e-20);
    }
}

TEST(Eigenfunctions, DegreeOneExample)
{
    const auto psi = eigenfunction_for(0.6, 1, 0.8);
    EXPECT_LT(coefficient_distance(psi, {1, C(0, 1.0 / 3)}), 1e-12);
}

TEST(Eigenfunctions, LengthMismatch)
{
    eigen_pair<double> p{C(1), {C(1), C(2)}, 0};
    EXPECT_THROW(eigenfunction_of(p, 2), usage_error);
}

// ---------------------------------------------------------------------------
// exceptional points

TEST(ExceptionalPoint, DegreeOneAtUnitCoupling)
{
    const auto t = doubled_j0(1.0, 1);
    const matrix<double> a = t.dense();
    EXPECT_GT(fockpt::testing::norm_d<double>(a), 1.0);
    EXPECT_EQ(fockpt::testing::norm_d<double>(a * a), 0.0);

    const auto rep = detect_exceptional_point(t);
    EXPECT_FALSE(rep.diagonalizable);
    EXPECT_TRUE(rep.exceptional_point);
    ASSERT_EQ(rep.clusters.size(), 1u);
    EXPECT_EQ(rep.clusters[0].algebraic, 2);
    EXPECT_EQ(rep.clusters[0].geometric, 1);
    EXPECT_EQ(rep.jordan_rank_profile, (std::vector<int>{2, 1, 0}));
    EXPECT_LT(std::abs(rep.cluster_center), 1e-6);
}

TEST(ExceptionalPoint, SeparatedSpectrumIsDiagonalizable)
{
    const auto rep = detect_exceptional_point(doubled_j0(0.6, 1));
    EXPECT_TRUE(rep.diagonalizable);
    EXPECT_FALSE(rep.exceptional_point);
    EXPECT_EQ(rep.clusters.size(), 2u);
}

TEST(ExceptionalPoint, SemisimpleDegenerateCase)
{
    tridiagonal_matrix<double> id{{1, 1}, {0}, {0}};
    const auto rep = detect_exceptional_point(id);
    ASSERT_EQ(rep.clusters.size(), 1u);
    EXPECT_EQ(rep.clusters[0].algebraic, 2);
    EXPECT_EQ(rep.clusters[0].geometric, 2);
    EXPECT_TRUE(rep.diagonalizable);
    EXPECT_FALSE(rep.exceptional_point);
}

TEST(ExceptionalPoint, SmallDegreesAtUnitCoupling)
{
    for (int m = 1; m <= 3; ++m) {
        const auto t = wide_operator(1.0, m);
        const auto rep = detect_exceptional_point(t);
        for (const auto& p : eigensolve(t).pairs)
            EXPECT_LT(std::abs(to_double(p.value)), 1e-6);
        EXPECT_FALSE(rep.diagonalizable) << m;
        EXPECT_TRUE(rep.exceptional_point) << m;
        // A single Jordan block of size m + 1: ranks drop by one per power.
        std::vector<int> profile;
        for (int k = 0; k <= m + 1; ++k)
            profile.push_back(m + 1 - k);
        EXPECT_EQ(rep.jordan_rank_profile, profile) << m;

        const auto near = detect_exceptional_point(wide_operator(0.99, m));
        EXPECT_TRUE(near.diagonalizable) << m;
        EXPECT_FALSE(near.exceptional_point) << m;
    }
}
