#pragma once

#include "pseudodisc/discmap.hpp"

namespace pseudodisc {

enum class NormTag { Lp, W1p, W2p, Sup, Holder };

enum class Restriction { Full, Half1, Half2, Overlap };

/// Which norm to take and over which part of the disc. Halves are
/// Delta_1 = {Re > -tau}, Delta_2 = {Re < tau}, overlap their intersection.
struct NormKind {
    NormTag tag = NormTag::Lp;
    double p = 4.0;
    double alpha = 0.5;           // Holder exponent
    Restriction restriction = Restriction::Full;
    double tau = 0.3;             // half-disc overlap parameter

    static NormKind lp(double p, Restriction r = Restriction::Full, double tau = 0.3) {
        return {NormTag::Lp, p, 0.5, r, tau};
    }
    static NormKind w1p(double p, Restriction r = Restriction::Full, double tau = 0.3) {
        return {NormTag::W1p, p, 0.5, r, tau};
    }
    static NormKind w2p(double p, Restriction r = Restriction::Full, double tau = 0.3) {
        return {NormTag::W2p, p, 0.5, r, tau};
    }
    static NormKind sup() { return {NormTag::Sup, 4.0, 0.5, Restriction::Full, 0.3}; }
    static NormKind holder(double alpha) {
        return {NormTag::Holder, 4.0, alpha, Restriction::Full, 0.3};
    }
};

/// Node filter (grid mask) for a restriction.
std::vector<bool> restriction_filter(const DiscretizationSpec& spec, Restriction r, double tau);

/// Norm of a coefficient map. L^p by quadrature of the pointwise C^n norm;
/// W^{k,p} as the sum over Wirtinger derivative orders (derivatives exact in
/// coefficient space); Sup/Holder by dense sampling (diagnostic lower bounds).
double norm(const DiscMap& m, const NormKind& kind, const DiscretizationSpec& spec);

/// L^p norm of a vector field already sampled on the grid.
double field_lp(const GridField& values, double p, const DiscretizationSpec& spec,
                const std::vector<bool>* filter = nullptr);

/// ||d phi||_{L^p} with the pointwise Frobenius convention
/// |d phi|^2 = 2 sum_a (|d_z phi_a|^2 + |d_bar phi_a|^2).
double differential_lp(const DiscMap& m, double p, const DiscretizationSpec& spec);

} // namespace pseudodisc
