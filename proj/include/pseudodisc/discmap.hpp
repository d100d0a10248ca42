#pragma once

#include "pseudodisc/grid.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace pseudodisc {

/// Node values of a map Delta -> C^n: rows = grid nodes, cols = components.
using GridField = Eigen::MatrixXcd;

/// A map Delta -> C^n stored as truncated bi-monomial coefficients:
/// component a is sum_{j,k <= d} c(a,j,k) zeta^j conj(zeta)^k.
class DiscMap {
public:
    DiscMap() : n_(0), d_(-1) {}
    DiscMap(int n, int d);

    int components() const { return n_; }
    int degree() const { return d_; }

    Complex& c(int a, int j, int k) { return coeffs_[a](j, k); }
    const Complex& c(int a, int j, int k) const { return coeffs_[a](j, k); }

    Eigen::MatrixXcd& component(int a) { return coeffs_[a]; }
    const Eigen::MatrixXcd& component(int a) const { return coeffs_[a]; }

    bool finite() const;

    /// Copy with the degree changed; raising pads with zeros, lowering
    /// truncates (use multiply/analyze when the tail matters).
    DiscMap resized(int new_d) const;

    /// Pointwise complex conjugate (coefficients conjugate and j<->k swap).
    DiscMap conjugated() const;

    double coeff_norm() const;

    DiscMap& operator+=(const DiscMap& o);
    DiscMap& operator-=(const DiscMap& o);
    DiscMap& operator*=(Complex s);
    friend DiscMap operator+(DiscMap a, const DiscMap& b) { return a += b; }
    friend DiscMap operator-(DiscMap a, const DiscMap& b) { return a -= b; }
    friend DiscMap operator*(Complex s, DiscMap a) { return a *= s; }

private:
    int n_, d_;
    std::vector<Eigen::MatrixXcd> coeffs_;
};

/// Exact polynomial evaluation at arbitrary points of the closed disc.
/// Throws DomainError for points outside.
std::vector<Eigen::VectorXcd> synthesize(const DiscMap& m, const std::vector<Complex>& pts);

/// Evaluation on all grid nodes (fast path, grouped by angular mode).
GridField synthesize_grid(const DiscMap& m, const DiscretizationSpec& spec);

struct AnalyzeResult {
    DiscMap map;
    /// Weighted-L2 misfit between the samples and the synthesized fit.
    double residual = 0.0;
};

/// Least-squares fit of node samples in the degree-d bi-monomial space.
/// Exact (up to round-off amplified by the monomial basis conditioning)
/// when the samples come from a degree-d map.
AnalyzeResult analyze(const GridField& samples, const DiscretizationSpec& spec);

struct MultiplyResult {
    DiscMap map;
    /// Aggregate size of the discarded coefficients, each weighted by the
    /// L2 norm of its monomial: sqrt(sum |c|^2 pi/(j+k+1)).
    double tail_norm = 0.0;
};

/// Coefficient convolution of two scalar maps, truncated to the common degree.
MultiplyResult multiply(const DiscMap& f, const DiscMap& g);

/// Scalar map of a single monomial c * zeta^j conj(zeta)^k.
DiscMap monomial_map(int d, int j, int k, Complex coeff = 1.0, int n = 1, int comp = 0);

} // namespace pseudodisc
