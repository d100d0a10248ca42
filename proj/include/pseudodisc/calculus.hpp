#pragma once

#include "pseudodisc/discmap.hpp"

#include <vector>

namespace pseudodisc {

/// d/d(conj zeta): exact monomial differentiation, output degree = input degree.
DiscMap d_bar(const DiscMap& m);

/// d/d(zeta).
DiscMap d_z(const DiscMap& m);

/// Cauchy-Green operator T(f)(z) = (1/pi) iint_Delta f(zeta)/(z - zeta) dA in
/// closed form on monomials:
///   T(zeta^j conj(zeta)^k) = z^j conj(z)^{k+1}/(k+1)                    (j <= k)
///   T(zeta^j conj(zeta)^k) = (z^j conj(z)^{k+1} - z^{j-k-1})/(k+1)      (j >= k+1)
/// The output has degree d+1. Satisfies d_bar(cauchy_green(m)) = m.
DiscMap cauchy_green(const DiscMap& m);

/// Singular-integral quadrature oracle for T: polar coordinates centered at
/// the singularity z (the 1/(z-zeta) factor cancels against the Jacobian, and
/// the radial integrand is a polynomial integrated exactly by Gauss-Legendre);
/// the angular direction is refined until two trapezoid levels agree to tol.
/// Independent of the closed-form table above.
Eigen::VectorXcd cauchy_green_oracle(const DiscMap& f, Complex z, double tol = 1e-8);

/// Boundary Cauchy integral C(h)(z) = oint h(zeta) dzeta / (zeta - z) by the
/// trapezoid rule over uniformly spaced boundary samples (spectrally accurate).
/// Throws DomainError when |z| > 1 - margin (margin = 0.05).
Eigen::VectorXcd cauchy_boundary(const std::vector<Eigen::VectorXcd>& boundary_samples,
                                 Complex z, double margin = 0.05);

/// Sparse closed-form action of T, d_z, d_bar on each basis monomial.
struct OperatorTable {
    struct Term {
        int j, k;
        double factor;
    };
    int degree = 0;
    // indexed [j][k]
    std::vector<std::vector<std::vector<Term>>> T_action, dz_action, dbar_action;

    static OperatorTable build(int d);

    /// Checks d_bar(T(zeta^j conj(zeta)^k)) == zeta^j conj(zeta)^k with exact
    /// double arithmetic on every monomial of the table.
    bool dbar_T_is_identity() const;
};

} // namespace pseudodisc
