#pragma once

// Explicit instantiation declarations for the `double` and `wide` builds of
// the heavy templates. Including this header is optional; it only moves the
// Eigen and binary128 instantiations into the prebuilt fockpt_instances
// library so that client translation units compile quickly.

#include "conjugation.hpp"
#include "deformed_algebra.hpp"
#include "spectral.hpp"

#define FOCKPT_INSTANTIATE(EXTERN, T)                                                                              \
    EXTERN template std::vector<std::complex<T>> polynomial_roots<T>(std::span<const std::complex<T>>);          \
    EXTERN template recursion_polynomials<T> build_recursion_polynomials<T>(const tridiagonal_matrix<T>&);       \
    EXTERN template std::vector<eigen_pair<T>> eigen_via_recursion<T>(const tridiagonal_matrix<T>&);             \
    EXTERN template std::vector<eigen_pair<T>> dense_eigensolve<T>(const matrix<T>&);                            \
    EXTERN template spectrum_result<T> eigensolve<T>(const tridiagonal_matrix<T>&);                              \
    EXTERN template exceptional_report detect_exceptional_point<T>(const tridiagonal_matrix<T>&, double);        \
    EXTERN template matrix<T> star_adjoint<T>(const matrix<T>&, int);                                            \
    EXTERN template matrix<T> conjugate_operator<T>(const pt_operator&, const matrix<T>&);                       \
    EXTERN template symmetry_verdict classify_symmetry<T>(const homogeneous_polynomial<T>&, const pt_operator&,  \
                                                          double);                                               \
    EXTERN template biorthogonal_system<T> build_biorthogonal<T>(const T&, double);                              \
    EXTERN template sigma_generators_result<T> sigma_generators<T>(const T&, double);                            \
    EXTERN template jordan_schwinger_triple<T> jordan_schwinger<T>(const T&, int);                               \
    EXTERN template algebra_bundle<T> ladder_operators<T>(const T&, const T&, int);                              \
    EXTERN template commutator_residuals<T> compute_commutator_residuals<T>(const algebra_bundle<T>&);           \
    EXTERN template structure_constants<T> fit_structure_constants<T>(const algebra_bundle<T>&);                 \
    EXTERN template killing_form<T> compute_killing_form<T>(const T&, const T&, int);                            \
    EXTERN template casimir_report<T> casimir<T>(const algebra_bundle<T>&);                                      \
    EXTERN template algebra_residuals<T> check_algebra<T>(const T&, const T&, int);

namespace fockpt
{
FOCKPT_INSTANTIATE(extern, double)
FOCKPT_INSTANTIATE(extern, wide)
} // namespace fockpt
