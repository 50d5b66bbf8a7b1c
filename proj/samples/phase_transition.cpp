// Eigenvalues of 2 J_0 for m = 3 as the coupling crosses the exceptional
// point at alpha = 1, together with the W2(1) verdict of each eigenfunction.

#include <fockpt/instantiations.hpp>

#include <cstdio>

int main()
{
    using namespace fockpt;
    const int m = 3;
    for (double alpha : {0.0, 0.5, 0.9, 0.99, 1.0, 1.01, 1.25, 1.5}) {
        const auto t = doubled_j0(wide(alpha), m);
        const auto ep = detect_exceptional_point(t);
        std::printf("alpha = %-5g%s\n", alpha, ep.exceptional_point ? "  (exceptional point)" : "");
        for (const auto& p : eigensolve(t).pairs) {
            const auto v = to_double(p.value);
            const auto verdict = classify_symmetry(homogeneous_polynomial<wide>(p.vector), partial_pt_first);
            std::printf("  %+.10f %+.10fi   W2(1): %s\n", v.real() == 0 ? 0.0 : v.real(), v.imag() == 0 ? 0.0 : v.imag(),
                        std::string(name(verdict.verdict)).c_str());
        }
    }
}
