#include "pseudodisc/discmap.hpp"
#include "pseudodisc/errors.hpp"

#include <cmath>
#include <numbers>

namespace pseudodisc {

DiscMap::DiscMap(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw DiscretizationError("DiscMap needs n >= 1, d >= 0");
    coeffs_.assign(n, Eigen::MatrixXcd::Zero(d + 1, d + 1));
}

bool DiscMap::finite() const {
    for (const auto& m : coeffs_)
        if (!m.allFinite()) return false;
    return true;
}

DiscMap DiscMap::resized(int new_d) const {
    DiscMap out(n_, new_d);
    int dd = std::min(d_, new_d);
    for (int a = 0; a < n_; ++a)
        out.coeffs_[a].topLeftCorner(dd + 1, dd + 1) = coeffs_[a].topLeftCorner(dd + 1, dd + 1);
    return out;
}

DiscMap DiscMap::conjugated() const {
    DiscMap out(n_, d_);
    for (int a = 0; a < n_; ++a) out.coeffs_[a] = coeffs_[a].transpose().conjugate();
    return out;
}

double DiscMap::coeff_norm() const {
    double acc = 0.0;
    for (const auto& m : coeffs_) acc += m.squaredNorm();
    return std::sqrt(acc);
}

DiscMap& DiscMap::operator+=(const DiscMap& o) {
    if (o.n_ != n_ || o.d_ != d_) throw DiscretizationError("DiscMap shape mismatch");
    for (int a = 0; a < n_; ++a) coeffs_[a] += o.coeffs_[a];
    return *this;
}

DiscMap& DiscMap::operator-=(const DiscMap& o) {
    if (o.n_ != n_ || o.d_ != d_) throw DiscretizationError("DiscMap shape mismatch");
    for (int a = 0; a < n_; ++a) coeffs_[a] -= o.coeffs_[a];
    return *this;
}

DiscMap& DiscMap::operator*=(Complex s) {
    for (auto& m : coeffs_) m *= s;
    return *this;
}

std::vector<Eigen::VectorXcd> synthesize(const DiscMap& m, const std::vector<Complex>& pts) {
    int n = m.components(), d = m.degree();
    std::vector<Eigen::VectorXcd> out(pts.size(), Eigen::VectorXcd::Zero(n));
    for (size_t p = 0; p < pts.size(); ++p) {
        Complex z = pts[p];
        if (std::abs(z) > 1.0 + 1e-12)
            throw DomainError("synthesize: point outside the closed disc");
        Complex zb = std::conj(z);
        for (int a = 0; a < n; ++a) {
            // Horner in zeta over rows, each row Horner in conj(zeta).
            Complex acc = 0.0;
            for (int j = d; j >= 0; --j) {
                Complex row = 0.0;
                for (int k = d; k >= 0; --k) row = row * zb + m.c(a, j, k);
                acc = acc * z + row;
            }
            out[p][a] = acc;
        }
    }
    return out;
}

GridField synthesize_grid(const DiscMap& m, const DiscretizationSpec& spec) {
    int n = m.components(), d = m.degree();
    int Nr = spec.radial_nodes(), Nt = spec.angular_nodes();
    if (d > spec.degree() + 1)
        throw DiscretizationError("synthesize_grid: map degree exceeds grid capacity");
    GridField out = GridField::Zero(Nr * Nt, n);
    const auto& rpow = spec.radial_powers();
    const auto& ph = spec.angular_phases();
    int qoff = spec.degree() + 1;
    Eigen::VectorXcd radial(Nr);
    for (int a = 0; a < n; ++a) {
        for (int q = -d; q <= d; ++q) {
            radial.setZero();
            bool used = false;
            for (int j = std::max(0, q); j <= d && j - q <= d; ++j) {
                int k = j - q;
                Complex c = m.c(a, j, k);
                if (c == Complex(0.0)) continue;
                used = true;
                radial += c * rpow.col(j + k).cast<Complex>();
            }
            if (!used) continue;
            for (int i = 0; i < Nr; ++i) {
                Complex ri = radial[i];
                if (ri == Complex(0.0)) continue;
                for (int mm = 0; mm < Nt; ++mm) out(i * Nt + mm, a) += ri * ph(mm, q + qoff);
            }
        }
    }
    return out;
}

AnalyzeResult analyze(const GridField& samples, const DiscretizationSpec& spec) {
    int Nr = spec.radial_nodes(), Nt = spec.angular_nodes(), d = spec.degree();
    if (samples.rows() != Nr * Nt)
        throw DiscretizationError("analyze: samples must cover every grid node");
    int n = static_cast<int>(samples.cols());
    DiscMap out(n, d);
    const auto& ph = spec.angular_phases();
    int qoff = spec.degree() + 1;

    for (int a = 0; a < n; ++a) {
        for (int q = -d; q <= d; ++q) {
            // Angular projection: fhat_q(r_i) = (1/Nt) sum_m f(r_i, theta_m) e^{-iq theta_m}.
            Eigen::VectorXcd fhat(Nr);
            for (int i = 0; i < Nr; ++i) {
                Complex acc = 0.0;
                for (int mm = 0; mm < Nt; ++mm)
                    acc += samples(i * Nt + mm, a) * std::conj(ph(mm, q + qoff));
                fhat[i] = acc / static_cast<double>(Nt);
            }
            // Radial fit in r^|q| s^k against the precomputed design QR.
            const auto& qr = spec.radial_qr(std::abs(q));
            Eigen::MatrixXd rhs(Nr, 2);
            rhs.col(0) = fhat.real();
            rhs.col(1) = fhat.imag();
            Eigen::MatrixXd sol = qr.solve(rhs);
            int K = d - std::abs(q);
            for (int k = 0; k <= K; ++k) {
                int jj = q >= 0 ? q + k : k;
                int kk = q >= 0 ? k : k - q;
                out.c(a, jj, kk) = Complex(sol(k, 0), sol(k, 1));
            }
        }
    }

    GridField resynth = synthesize_grid(out, spec);
    double acc = 0.0;
    const auto& w = spec.weights();
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < Nr * Nt; ++i)
            acc += w[i] * std::norm(samples(i, a) - resynth(i, a));
    return {std::move(out), std::sqrt(acc)};
}

MultiplyResult multiply(const DiscMap& f, const DiscMap& g) {
    if (f.components() != 1 || g.components() != 1)
        throw DiscretizationError("multiply: scalar maps expected");
    if (f.degree() != g.degree())
        throw DiscretizationError("multiply: degrees must match");
    int d = f.degree();
    DiscMap out(1, d);
    double tail2 = 0.0;
    for (int j1 = 0; j1 <= d; ++j1)
        for (int k1 = 0; k1 <= d; ++k1) {
            Complex c1 = f.c(0, j1, k1);
            if (c1 == Complex(0.0)) continue;
            for (int j2 = 0; j2 <= d; ++j2)
                for (int k2 = 0; k2 <= d; ++k2) {
                    Complex c2 = g.c(0, j2, k2);
                    if (c2 == Complex(0.0)) continue;
                    int j = j1 + j2, k = k1 + k2;
                    Complex c = c1 * c2;
                    if (j <= d && k <= d)
                        out.c(0, j, k) += c;
                    else
                        tail2 += std::norm(c) * std::numbers::pi / (j + k + 1);
                }
        }
    return {std::move(out), std::sqrt(tail2)};
}

DiscMap monomial_map(int d, int j, int k, Complex coeff, int n, int comp) {
    DiscMap m(n, d);
    m.c(comp, j, k) = coeff;
    return m;
}

} // namespace pseudodisc
