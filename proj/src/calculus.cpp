#include "pseudodisc/calculus.hpp"
#include "pseudodisc/errors.hpp"

#include <cmath>
#include <numbers>

namespace pseudodisc {

DiscMap d_bar(const DiscMap& m) {
    DiscMap out(m.components(), m.degree());
    for (int a = 0; a < m.components(); ++a)
        for (int j = 0; j <= m.degree(); ++j)
            for (int k = 1; k <= m.degree(); ++k)
                out.c(a, j, k - 1) = static_cast<double>(k) * m.c(a, j, k);
    return out;
}

DiscMap d_z(const DiscMap& m) {
    DiscMap out(m.components(), m.degree());
    for (int a = 0; a < m.components(); ++a)
        for (int j = 1; j <= m.degree(); ++j)
            for (int k = 0; k <= m.degree(); ++k)
                out.c(a, j - 1, k) = static_cast<double>(j) * m.c(a, j, k);
    return out;
}

DiscMap cauchy_green(const DiscMap& m) {
    int d = m.degree();
    DiscMap out(m.components(), d + 1);
    for (int a = 0; a < m.components(); ++a)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k) {
                Complex c = m.c(a, j, k);
                if (c == Complex(0.0)) continue;
                double inv = 1.0 / (k + 1);
                out.c(a, j, k + 1) += c * inv;
                if (j >= k + 1) out.c(a, j - k - 1, 0) -= c * inv;
            }
    return out;
}

Eigen::VectorXcd cauchy_green_oracle(const DiscMap& f, Complex z, double tol) {
    if (std::abs(z) >= 1.0)
        throw DomainError("cauchy_green_oracle: interior point required");
    int n = f.components();
    // Substituting zeta = z + rho e^{ia} gives
    //   T(f)(z) = -(1/pi) int_a int_0^{rho_max(a)} f(z + rho e^{ia}) e^{-ia} drho da.
    // The radial integrand is a polynomial in rho of degree 2d: Gauss-Legendre
    // with d+2 points is exact. The angular integral is smooth periodic;
    // trapezoid levels are doubled until they agree to tol.
    int ng = f.degree() + 2;
    std::vector<double> gx, gw;
    gauss_legendre_01(ng, gx, gw);

    auto angular_sum = [&](int Na) {
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
        std::vector<Complex> pts(ng);
        for (int ia = 0; ia < Na; ++ia) {
            double a = 2.0 * std::numbers::pi * ia / Na;
            Complex ea(std::cos(a), std::sin(a));
            double b = (z * std::conj(ea)).real();
            double rho_max = -b + std::sqrt(b * b + 1.0 - std::norm(z));
            for (int ig = 0; ig < ng; ++ig) pts[ig] = z + (rho_max * gx[ig]) * ea;
            auto vals = synthesize(f, pts);
            Eigen::VectorXcd radial = Eigen::VectorXcd::Zero(n);
            for (int ig = 0; ig < ng; ++ig) radial += gw[ig] * vals[ig];
            acc += rho_max * std::conj(ea) * radial;
        }
        return Eigen::VectorXcd(-(2.0 / Na) * acc);
    };

    Eigen::VectorXcd prev = angular_sum(64);
    for (int Na = 128; Na <= 8192; Na *= 2) {
        Eigen::VectorXcd cur = angular_sum(Na);
        if ((cur - prev).norm() <= tol * (1.0 + cur.norm())) return cur;
        prev = cur;
    }
    return prev;
}

Eigen::VectorXcd cauchy_boundary(const std::vector<Eigen::VectorXcd>& boundary_samples,
                                 Complex z, double margin) {
    if (std::abs(z) > 1.0 - margin)
        throw DomainError("cauchy_boundary: evaluation point too close to the boundary");
    int Nb = static_cast<int>(boundary_samples.size());
    if (Nb < 4) throw DiscretizationError("cauchy_boundary: too few boundary samples");
    int n = static_cast<int>(boundary_samples[0].size());
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
    for (int m = 0; m < Nb; ++m) {
        double t = 2.0 * std::numbers::pi * m / Nb;
        Complex zeta(std::cos(t), std::sin(t));
        // dzeta = i zeta dt
        acc += boundary_samples[m] * (Complex(0, 1) * zeta / (zeta - z));
    }
    return acc * (2.0 * std::numbers::pi / Nb);
}

OperatorTable OperatorTable::build(int d) {
    OperatorTable t;
    t.degree = d;
    auto grid = [&](auto&&) {
        return std::vector<std::vector<std::vector<Term>>>(
            d + 1, std::vector<std::vector<Term>>(d + 1));
    };
    t.T_action = grid(0);
    t.dz_action = grid(0);
    t.dbar_action = grid(0);
    for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= d; ++k) {
            double inv = 1.0 / (k + 1);
            t.T_action[j][k].push_back({j, k + 1, inv});
            if (j >= k + 1) t.T_action[j][k].push_back({j - k - 1, 0, -inv});
            if (j >= 1) t.dz_action[j][k].push_back({j - 1, k, static_cast<double>(j)});
            if (k >= 1) t.dbar_action[j][k].push_back({j, k - 1, static_cast<double>(k)});
        }
    return t;
}

bool OperatorTable::dbar_T_is_identity() const {
    for (int j = 0; j <= degree; ++j)
        for (int k = 0; k <= degree; ++k) {
            // apply T then d_bar symbolically over the sparse terms
            std::vector<Term> acc;
            for (const Term& t1 : T_action[j][k]) {
                if (t1.k >= 1) acc.push_back({t1.j, t1.k - 1, t1.factor * t1.k});
            }
            if (acc.size() != 1) return false;
            if (acc[0].j != j || acc[0].k != k) return false;
            if (acc[0].factor != 1.0) return false;  // exact: fl((1/(k+1))*(k+1)) == 1
        }
    return true;
}

} // namespace pseudodisc
