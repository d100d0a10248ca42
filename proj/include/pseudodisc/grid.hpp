#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

namespace pseudodisc {

using Complex = std::complex<double>;

/// Quadrature/evaluation grid for the unit disc and the transforms between
/// node values and bi-monomial coefficients.
///
/// Nodes are a tensor product of Gauss-Legendre points in s = r^2 (so that
/// the area element r dr dtheta is integrated exactly for polynomial radial
/// profiles) and uniform angles. With Nr >= d+1 and Ntheta >= 2(2d+1) the
/// quadrature integrates zeta^j conj(zeta)^k exactly for j,k <= 2d and the
/// angular modes of quadratic nonlinearities do not alias.
class DiscretizationSpec {
public:
    /// Defaults: Nr = d+4, Ntheta = 4d+8.
    explicit DiscretizationSpec(int degree, int radial_nodes = -1, int angular_nodes = -1);

    int degree() const { return d_; }
    int radial_nodes() const { return Nr_; }
    int angular_nodes() const { return Nt_; }
    int node_count() const { return Nr_ * Nt_; }

    /// Node zeta_{i*Ntheta+m} = r_i exp(i theta_m), all strictly inside the disc.
    const std::vector<Complex>& nodes() const { return nodes_; }
    /// Positive weights summing to pi.
    const std::vector<double>& weights() const { return weights_; }

    const std::vector<double>& radii() const { return r_; }
    const std::vector<double>& angles() const { return theta_; }

    /// p-norm of a scalar field given by its node values:
    /// (sum_i w_i |v_i|^p)^(1/p). A node filter of the same length may
    /// restrict the sum (nullptr = full disc).
    double field_norm(const Eigen::VectorXcd& values, double p,
                      const std::vector<bool>* filter = nullptr) const;

    // --- internals shared by the transforms (grid powers, Fourier table) ---
    /// r_i^t, t = 0..2d+2.
    const Eigen::MatrixXd& radial_powers() const { return rpow_; }
    /// e^{i q theta_m} for q = -(d+1)..(d+1); column index q + (d+1).
    const Eigen::MatrixXcd& angular_phases() const { return phases_; }
    /// Pseudo-inverse data of the radial design matrix for angular mode |q|.
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& radial_qr(int absq) const {
        return radial_qr_[absq];
    }

private:
    int d_, Nr_, Nt_;
    std::vector<double> r_, s_, wgl_, theta_;
    std::vector<Complex> nodes_;
    std::vector<double> weights_;
    Eigen::MatrixXd rpow_;
    Eigen::MatrixXcd phases_;
    std::vector<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>> radial_qr_;
};

/// Gauss-Legendre nodes and weights on (0,1), exact for degree <= 2n-1.
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w);

} // namespace pseudodisc
