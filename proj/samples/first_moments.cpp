// Minimal tour of the library: closed forms, the dual symbolic route, and
// one quadrature verification. Build target: samples_first_moments.

#include <iostream>

#include "gzmom/gzmom.hpp"

using namespace gzmom;

int main() {
    std::cout << "normalized moments m_N, exact:\n";
    for (unsigned N = 0; N <= 3; ++N) {
        auto m = moment_closed(N);
        std::cout << "  m_" << N << " = " << to_display_string(m.value)
                  << "\n      = " << format_real(eval_numeric(m.value, 30), 15)
                  << "    M_" << 2 * N << " = " << format_real(moment_value(N), 12)
                  << "\n";
    }

    std::cout << "\nsame values through the sequence operators:\n";
    for (unsigned N = 0; N <= 3; ++N)
        std::cout << "  G^(" << 2 * N << ")(0) == m_" << N << " exactly: "
                  << (g_deriv_at_0(2 * N) == moment_closed(N).value ? "yes" : "NO")
                  << "\n";

    std::cout << "\nderivatives of the auto-correlation at 1:\n";
    for (unsigned k = 0; k <= 2; ++k) {
        auto d = a_deriv_closed(k);
        std::cout << "  A^(" << k << ")(1) = " << to_c_basis_string(d.value) << " = "
                  << format_real(eval_numeric(d.value, 30), 12) << "\n";
    }

    QuadConfig cfg;
    MomentReport r = verify_moment(1, cfg);
    std::cout << "\nquadrature check, N = 1:\n  closed     = "
              << format_real(r.closed_decimal, 15)
              << "\n  quadrature = " << format_real(r.quadrature_decimal, 15)
              << "\n  rel err    = " << format_real(r.rel_err, 3)
              << (r.pass ? "  (pass)" : "  (FAIL)") << "\n";
    return r.pass ? 0 : 1;
}
