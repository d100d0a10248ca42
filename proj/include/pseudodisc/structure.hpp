#pragma once

#include "pseudodisc/discmap.hpp"

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pseudodisc {

enum class StructureKind { Standard, Polynomial, BuiltinExampleR6, RationalTable };

/// One bi-monomial term coeff * prod_i z_i^{pz[i]} conj(z_i)^{pzb[i]} of a
/// polynomial structure entry.
struct PolyTerm {
    Complex coeff;
    std::vector<int> powers_z, powers_zbar;
};

struct PolyEntry {
    int row = 0, col = 0;
    std::vector<PolyTerm> terms;
};

/// An almost complex structure on R^{2n} given by its complex n x n matrix
/// A(z) together with first-derivative evaluators. Immutable after
/// construction; evaluators are pure.
class StructureSpec {
public:
    using MatrixEval = std::function<Eigen::MatrixXcd(const Eigen::VectorXcd&)>;

    static StructureSpec standard(int n);
    static StructureSpec polynomial(int n, std::vector<PolyEntry> entries);
    /// The R^6 example: A_{21} = 6 z1^2 z3 / (3 - z1^2 conj(z1)^2), A_{31} = -z2.
    static StructureSpec builtin_example_r6();
    /// Entry evaluator with optional analytic derivative evaluators; missing
    /// derivatives fall back to central finite differences (step 1e-5).
    static StructureSpec rational_table(int n, MatrixEval eval,
                                        std::vector<MatrixEval> dz = {},
                                        std::vector<MatrixEval> dzbar = {},
                                        std::function<bool(const Eigen::VectorXcd&)> region = {});

    int dim() const { return n_; }
    StructureKind kind() const { return kind_; }

    Eigen::MatrixXcd eval(const Eigen::VectorXcd& z) const;
    /// Wirtinger derivative of every entry with respect to z_j.
    Eigen::MatrixXcd eval_dz(int j, const Eigen::VectorXcd& z) const;
    Eigen::MatrixXcd eval_dzbar(int j, const Eigen::VectorXcd& z) const;
    /// Analytic derivatives available (vs finite-difference fallback)?
    bool analytic_derivatives() const;

    /// Pole guard / validity region for the entry formulas.
    bool region_ok(const Eigen::VectorXcd& z) const;

    const std::vector<PolyEntry>& entries() const { return entries_; }

private:
    StructureSpec(int n, StructureKind k) : n_(n), kind_(k) {}
    Eigen::MatrixXcd fd_dz(int j, const Eigen::VectorXcd& z, bool bar) const;

    int n_;
    StructureKind kind_;
    std::vector<PolyEntry> entries_;                 // Polynomial
    MatrixEval eval_;                                // RationalTable
    std::vector<MatrixEval> dz_, dzbar_;             // RationalTable (optional)
    std::function<bool(const Eigen::VectorXcd&)> region_;
};

/// Standard structure matrix J_st on R^{2n}, coordinates interleaved as
/// (x_1, y_1, ..., x_n, y_n) with z_j = x_j + i y_j.
Eigen::MatrixXd j_standard(int n);

/// Complex matrix of J: the complex-linear M with
/// (J_st + J)^{-1} (J - J_st)(conj v) = M v.
/// Throws NotAStructure when J^2 != -Id, ChartError when J + J_st is
/// numerically singular or the composite fails to be complex-linear.
Eigen::MatrixXcd j_to_a(const Eigen::MatrixXd& J);

/// Inverse direction, solving the defining relation for J given A.
Eigen::MatrixXd a_to_j(const Eigen::MatrixXcd& A);

struct AdmissibilityReport {
    double margin = 0.0;
    Eigen::VectorXcd worst_point;
};

/// min over probes of |det(I - A(z) conj(A(z)))|; throws
/// AdmissibilityViolation (carrying the worst probe) when below eps_adm.
AdmissibilityReport admissibility(const StructureSpec& S,
                                  const std::vector<Eigen::VectorXcd>& probes,
                                  double eps_adm = 1e-6, bool throw_on_violation = true);

/// Exact rational evaluation of the builtin R^6 example matrix.
Eigen::MatrixXcd eval_builtin_r6(const Eigen::VectorXcd& z);

} // namespace pseudodisc
