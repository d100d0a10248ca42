#include "pseudodisc/grid.hpp"
#include "pseudodisc/errors.hpp"

#include <cmath>
#include <numbers>

namespace pseudodisc {

void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    // Newton iteration on P_n over [-1,1], Chebyshev initial guesses.
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[i] = 0.5 * (1.0 + t);
        w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
    // ascending order
    for (int i = 0; i < n / 2; ++i) {
        std::swap(x[i], x[n - 1 - i]);
        std::swap(w[i], w[n - 1 - i]);
    }
}

DiscretizationSpec::DiscretizationSpec(int degree, int radial_nodes, int angular_nodes)
    : d_(degree),
      Nr_(radial_nodes > 0 ? radial_nodes : degree + 4),
      Nt_(angular_nodes > 0 ? angular_nodes : 4 * degree + 8) {
    if (d_ < 0) throw DiscretizationError("degree must be >= 0");
    if (Nr_ < d_ + 1)
        throw DiscretizationError("radial_nodes must be >= degree+1");
    if (Nt_ < 2 * (2 * d_ + 1))
        throw DiscretizationError("angular_nodes must be >= 2(2*degree+1)");

    gauss_legendre_01(Nr_, s_, wgl_);
    r_.resize(Nr_);
    for (int i = 0; i < Nr_; ++i) r_[i] = std::sqrt(s_[i]);

    theta_.resize(Nt_);
    for (int m = 0; m < Nt_; ++m) theta_[m] = 2.0 * std::numbers::pi * m / Nt_;

    nodes_.resize(Nr_ * Nt_);
    weights_.resize(Nr_ * Nt_);
    double wsum = 0.0;
    for (int i = 0; i < Nr_; ++i) {
        double wi = wgl_[i] * std::numbers::pi / Nt_;
        for (int m = 0; m < Nt_; ++m) {
            nodes_[i * Nt_ + m] = r_[i] * Complex(std::cos(theta_[m]), std::sin(theta_[m]));
            weights_[i * Nt_ + m] = wi;
            wsum += wi;
        }
        if (wi <= 0.0) throw DiscretizationError("nonpositive quadrature weight");
        if (r_[i] >= 1.0) throw DiscretizationError("node outside the open disc");
    }
    if (std::abs(wsum - std::numbers::pi) > 1e-12 * std::numbers::pi)
        throw DiscretizationError("quadrature weights do not sum to pi");

    rpow_.resize(Nr_, 2 * d_ + 3);
    for (int i = 0; i < Nr_; ++i) {
        rpow_(i, 0) = 1.0;
        for (int t = 1; t < 2 * d_ + 3; ++t) rpow_(i, t) = rpow_(i, t - 1) * r_[i];
    }

    phases_.resize(Nt_, 2 * d_ + 3);
    for (int m = 0; m < Nt_; ++m)
        for (int q = -(d_ + 1); q <= d_ + 1; ++q)
            phases_(m, q + d_ + 1) = Complex(std::cos(q * theta_[m]), std::sin(q * theta_[m]));

    radial_qr_.reserve(d_ + 1);
    for (int q = 0; q <= d_; ++q) {
        int K = d_ - q;
        Eigen::MatrixXd A(Nr_, K + 1);
        for (int i = 0; i < Nr_; ++i) {
            double base = rpow_(i, q);
            for (int k = 0; k <= K; ++k) {
                A(i, k) = base;
                base *= s_[i];
            }
        }
        radial_qr_.emplace_back(A);
        if (radial_qr_.back().rank() < K + 1)
            throw DiscretizationError("rank-deficient radial design matrix; increase Nr");
    }
}

double DiscretizationSpec::field_norm(const Eigen::VectorXcd& values, double p,
                                      const std::vector<bool>* filter) const {
    if (values.size() != static_cast<Eigen::Index>(nodes_.size()))
        throw DiscretizationError("field_norm: value vector does not match the grid");
    double acc = 0.0;
    bool any = false;
    for (size_t i = 0; i < nodes_.size(); ++i) {
        if (filter && !(*filter)[i]) continue;
        any = true;
        acc += weights_[i] * std::pow(std::abs(values[static_cast<Eigen::Index>(i)]), p);
    }
    if (!any) throw DomainError("field_norm: empty restriction");
    return std::pow(acc, 1.0 / p);
}

} // namespace pseudodisc
