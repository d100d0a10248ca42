#include "pseudodisc/structure.hpp"
#include "pseudodisc/errors.hpp"

#include <cmath>

namespace pseudodisc {

namespace {
constexpr double kFdStep = 1e-5;
// |z1| must stay below 3^{1/4} for the example's rational entry.
const double kR6PoleRadius = std::pow(3.0, 0.25) * (1.0 - 1e-9);
} // namespace

StructureSpec StructureSpec::standard(int n) {
    return StructureSpec(n, StructureKind::Standard);
}

StructureSpec StructureSpec::polynomial(int n, std::vector<PolyEntry> entries) {
    StructureSpec s(n, StructureKind::Polynomial);
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
            throw ValidationError("polynomial structure entry out of range");
        for (const auto& t : e.terms)
            if (static_cast<int>(t.powers_z.size()) != n ||
                static_cast<int>(t.powers_zbar.size()) != n)
                throw ValidationError("polynomial term power lists must have length n");
    }
    s.entries_ = std::move(entries);
    return s;
}

StructureSpec StructureSpec::builtin_example_r6() {
    return StructureSpec(3, StructureKind::BuiltinExampleR6);
}

StructureSpec StructureSpec::rational_table(int n, MatrixEval eval, std::vector<MatrixEval> dz,
                                            std::vector<MatrixEval> dzbar,
                                            std::function<bool(const Eigen::VectorXcd&)> region) {
    if (!eval) throw ValidationError("rational_table requires an entry evaluator");
    if (!dz.empty() && static_cast<int>(dz.size()) != n)
        throw ValidationError("rational_table: need one dz evaluator per coordinate");
    if (!dzbar.empty() && static_cast<int>(dzbar.size()) != n)
        throw ValidationError("rational_table: need one dzbar evaluator per coordinate");
    StructureSpec s(n, StructureKind::RationalTable);
    s.eval_ = std::move(eval);
    s.dz_ = std::move(dz);
    s.dzbar_ = std::move(dzbar);
    s.region_ = std::move(region);
    return s;
}

Eigen::MatrixXcd eval_builtin_r6(const Eigen::VectorXcd& z) {
    if (z.size() != 3) throw ValidationError("example-r6 structure expects z in C^3");
    if (std::abs(z[0]) >= kR6PoleRadius)
        throw DomainError("example-r6: |z1| at the pole radius 3^(1/4)");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(3, 3);
    Complex q = z[0] * z[0] * std::conj(z[0]) * std::conj(z[0]);
    A(1, 0) = 6.0 * z[0] * z[0] * z[2] / (3.0 - q);
    A(2, 0) = -z[1];
    return A;
}

Eigen::MatrixXcd StructureSpec::eval(const Eigen::VectorXcd& z) const {
    if (z.size() != n_) throw ValidationError("structure evaluated at wrong dimension");
    switch (kind_) {
        case StructureKind::Standard:
            return Eigen::MatrixXcd::Zero(n_, n_);
        case StructureKind::Polynomial: {
            Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n_, n_);
            for (const auto& e : entries_)
                for (const auto& t : e.terms) {
                    Complex v = t.coeff;
                    for (int i = 0; i < n_; ++i) {
                        for (int p = 0; p < t.powers_z[i]; ++p) v *= z[i];
                        for (int p = 0; p < t.powers_zbar[i]; ++p) v *= std::conj(z[i]);
                    }
                    A(e.row, e.col) += v;
                }
            return A;
        }
        case StructureKind::BuiltinExampleR6:
            return eval_builtin_r6(z);
        case StructureKind::RationalTable:
            return eval_(z);
    }
    throw Error("unreachable");
}

Eigen::MatrixXcd StructureSpec::fd_dz(int j, const Eigen::VectorXcd& z, bool bar) const {
    Eigen::VectorXcd zp = z, zm = z;
    zp[j] += kFdStep;
    zm[j] -= kFdStep;
    Eigen::MatrixXcd Dx = (eval(zp) - eval(zm)) / (2.0 * kFdStep);
    zp = z; zm = z;
    zp[j] += Complex(0, kFdStep);
    zm[j] -= Complex(0, kFdStep);
    Eigen::MatrixXcd Dy = (eval(zp) - eval(zm)) / (2.0 * kFdStep);
    return bar ? Eigen::MatrixXcd(0.5 * (Dx + Complex(0, 1) * Dy))
               : Eigen::MatrixXcd(0.5 * (Dx - Complex(0, 1) * Dy));
}

Eigen::MatrixXcd StructureSpec::eval_dz(int j, const Eigen::VectorXcd& z) const {
    switch (kind_) {
        case StructureKind::Standard:
            return Eigen::MatrixXcd::Zero(n_, n_);
        case StructureKind::Polynomial: {
            Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(n_, n_);
            for (const auto& e : entries_)
                for (const auto& t : e.terms) {
                    if (t.powers_z[j] == 0) continue;
                    Complex v = t.coeff * static_cast<double>(t.powers_z[j]);
                    for (int i = 0; i < n_; ++i) {
                        int pz = t.powers_z[i] - (i == j ? 1 : 0);
                        for (int p = 0; p < pz; ++p) v *= z[i];
                        for (int p = 0; p < t.powers_zbar[i]; ++p) v *= std::conj(z[i]);
                    }
                    D(e.row, e.col) += v;
                }
            return D;
        }
        case StructureKind::BuiltinExampleR6: {
            Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
            Complex z1 = z[0], z3 = z[2];
            Complex q = z1 * z1 * std::conj(z1) * std::conj(z1);
            Complex den = 3.0 - q;
            if (j == 0)
                D(1, 0) = (12.0 * z1 * z3 * den + 12.0 * z1 * z1 * z1 * std::conj(z1) *
                                                      std::conj(z1) * z3) /
                          (den * den);
            if (j == 1) D(2, 0) = -1.0;
            if (j == 2) D(1, 0) = 6.0 * z1 * z1 / den;
            return D;
        }
        case StructureKind::RationalTable:
            if (!dz_.empty()) return dz_[j](z);
            return fd_dz(j, z, false);
    }
    throw Error("unreachable");
}

Eigen::MatrixXcd StructureSpec::eval_dzbar(int j, const Eigen::VectorXcd& z) const {
    switch (kind_) {
        case StructureKind::Standard:
            return Eigen::MatrixXcd::Zero(n_, n_);
        case StructureKind::Polynomial: {
            Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(n_, n_);
            for (const auto& e : entries_)
                for (const auto& t : e.terms) {
                    if (t.powers_zbar[j] == 0) continue;
                    Complex v = t.coeff * static_cast<double>(t.powers_zbar[j]);
                    for (int i = 0; i < n_; ++i) {
                        for (int p = 0; p < t.powers_z[i]; ++p) v *= z[i];
                        int pb = t.powers_zbar[i] - (i == j ? 1 : 0);
                        for (int p = 0; p < pb; ++p) v *= std::conj(z[i]);
                    }
                    D(e.row, e.col) += v;
                }
            return D;
        }
        case StructureKind::BuiltinExampleR6: {
            Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
            if (j == 0) {
                Complex z1 = z[0], z3 = z[2];
                Complex q = z1 * z1 * std::conj(z1) * std::conj(z1);
                Complex den = 3.0 - q;
                D(1, 0) = 12.0 * z1 * z1 * z1 * z1 * std::conj(z1) * z3 / (den * den);
            }
            return D;
        }
        case StructureKind::RationalTable:
            if (!dzbar_.empty()) return dzbar_[j](z);
            return fd_dz(j, z, true);
    }
    throw Error("unreachable");
}

bool StructureSpec::analytic_derivatives() const {
    switch (kind_) {
        case StructureKind::Standard:
        case StructureKind::Polynomial:
        case StructureKind::BuiltinExampleR6:
            return true;
        case StructureKind::RationalTable:
            return !dz_.empty() && !dzbar_.empty();
    }
    return false;
}

bool StructureSpec::region_ok(const Eigen::VectorXcd& z) const {
    switch (kind_) {
        case StructureKind::Standard:
        case StructureKind::Polynomial:
            return true;
        case StructureKind::BuiltinExampleR6:
            return std::abs(z[0]) < kR6PoleRadius;
        case StructureKind::RationalTable:
            return region_ ? region_(z) : true;
    }
    return true;
}

Eigen::MatrixXd j_standard(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        J(2 * a, 2 * a + 1) = -1.0;
        J(2 * a + 1, 2 * a) = 1.0;
    }
    return J;
}

Eigen::MatrixXcd j_to_a(const Eigen::MatrixXd& J) {
    if (J.rows() != J.cols() || J.rows() % 2 != 0)
        throw NotAStructure("J must be a square 2n x 2n matrix");
    int n = static_cast<int>(J.rows()) / 2;
    Eigen::MatrixXd JJ = J * J + Eigen::MatrixXd::Identity(2 * n, 2 * n);
    if (JJ.cwiseAbs().maxCoeff() > 1e-10)
        throw NotAStructure("J^2 != -Id");
    Eigen::MatrixXd S = j_standard(n) + J;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0 || smax / smin > 1e8)
        throw ChartError("J + J_st numerically singular; not in the chart class");
    Eigen::MatrixXd L = S.partialPivLu().solve(J - j_standard(n));
    // absorb conjugation: M = L * C with C = diag(1,-1) per complex coordinate
    Eigen::MatrixXd M = L;
    for (int b = 0; b < n; ++b) M.col(2 * b + 1) *= -1.0;
    // extract the complex blocks [[alpha, beta], [beta, -alpha]]
    Eigen::MatrixXcd A(n, n);
    double defect = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double alpha = M(2 * a, 2 * b), beta = M(2 * a + 1, 2 * b);
            A(a, b) = Complex(alpha, beta);
            defect = std::max(defect, std::abs(M(2 * a + 1, 2 * b + 1) + alpha));
            defect = std::max(defect, std::abs(M(2 * a, 2 * b + 1) - beta));
        }
    if (defect > 1e-8)
        throw ChartError("composite map is not complex-linear");
    return A;
}

Eigen::MatrixXd a_to_j(const Eigen::MatrixXcd& A) {
    int n = static_cast<int>(A.rows());
    if (A.cols() != n) throw ValidationError("a_to_j: square matrix expected");
    Eigen::MatrixXd M(2 * n, 2 * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double alpha = A(a, b).real(), beta = A(a, b).imag();
            M(2 * a, 2 * b) = alpha;
            M(2 * a, 2 * b + 1) = beta;
            M(2 * a + 1, 2 * b) = beta;
            M(2 * a + 1, 2 * b + 1) = -alpha;
        }
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M - I);
    Eigen::MatrixXd J = -j_standard(n) * (M + I) * lu.inverse();
    Eigen::MatrixXd JJ = J * J + I;
    if (JJ.cwiseAbs().maxCoeff() > 1e-8)
        throw ChartError("a_to_j: reconstructed J fails J^2 = -Id (A inadmissible?)");
    return J;
}

AdmissibilityReport admissibility(const StructureSpec& S,
                                  const std::vector<Eigen::VectorXcd>& probes,
                                  double eps_adm, bool throw_on_violation) {
    if (probes.empty()) throw ValidationError("admissibility: no probe points");
    AdmissibilityReport rep;
    rep.margin = std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(S.dim(), S.dim());
    for (const auto& z : probes) {
        Eigen::MatrixXcd A = S.eval(z);
        double det = std::abs((I - A * A.conjugate()).determinant());
        if (det < rep.margin) {
            rep.margin = det;
            rep.worst_point = z;
        }
    }
    if (throw_on_violation && rep.margin < eps_adm) {
        std::vector<Complex> worst(rep.worst_point.data(),
                                   rep.worst_point.data() + rep.worst_point.size());
        throw AdmissibilityViolation("det(I - A conj(A)) margin below threshold", worst,
                                     rep.margin);
    }
    return rep;
}

} // namespace pseudodisc
