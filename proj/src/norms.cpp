#include "pseudodisc/norms.hpp"
#include "pseudodisc/calculus.hpp"
#include "pseudodisc/errors.hpp"

#include <cmath>
#include <numbers>

namespace pseudodisc {

std::vector<bool> restriction_filter(const DiscretizationSpec& spec, Restriction r, double tau) {
    const auto& nodes = spec.nodes();
    std::vector<bool> keep(nodes.size(), true);
    if (r == Restriction::Full) return keep;
    for (size_t i = 0; i < nodes.size(); ++i) {
        double x = nodes[i].real();
        switch (r) {
            case Restriction::Half1: keep[i] = x > -tau; break;
            case Restriction::Half2: keep[i] = x < tau; break;
            case Restriction::Overlap: keep[i] = std::abs(x) < tau; break;
            default: break;
        }
    }
    return keep;
}

double field_lp(const GridField& values, double p, const DiscretizationSpec& spec,
                const std::vector<bool>* filter) {
    Eigen::VectorXcd pointwise(values.rows());
    for (Eigen::Index i = 0; i < values.rows(); ++i) pointwise[i] = values.row(i).norm();
    return spec.field_norm(pointwise, p, filter);
}

namespace {

double lp_of_map(const DiscMap& m, double p, const DiscretizationSpec& spec,
                 const std::vector<bool>* filter) {
    return field_lp(synthesize_grid(m, spec), p, spec, filter);
}

// Dense sample set for sup/Holder estimates: about 4x the grid resolution,
// including a boundary ring.
std::vector<Complex> dense_samples(const DiscretizationSpec& spec) {
    int Nr = 2 * spec.radial_nodes() + 1, Nt = 2 * spec.angular_nodes();
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(Nr) * Nt + Nt);
    for (int i = 1; i <= Nr; ++i) {
        double r = std::sqrt(static_cast<double>(i) / Nr);
        for (int m = 0; m < Nt; ++m) {
            double t = 2.0 * std::numbers::pi * m / Nt;
            pts.emplace_back(r * std::cos(t), r * std::sin(t));
        }
    }
    return pts;
}

} // namespace

double norm(const DiscMap& m, const NormKind& kind, const DiscretizationSpec& spec) {
    const std::vector<bool> filt = restriction_filter(spec, kind.restriction, kind.tau);
    const std::vector<bool>* f = kind.restriction == Restriction::Full ? nullptr : &filt;
    switch (kind.tag) {
        case NormTag::Lp:
            return lp_of_map(m, kind.p, spec, f);
        case NormTag::W1p:
            return lp_of_map(m, kind.p, spec, f) + lp_of_map(d_z(m), kind.p, spec, f) +
                   lp_of_map(d_bar(m), kind.p, spec, f);
        case NormTag::W2p: {
            DiscMap mz = d_z(m), mb = d_bar(m);
            return lp_of_map(m, kind.p, spec, f) + lp_of_map(mz, kind.p, spec, f) +
                   lp_of_map(mb, kind.p, spec, f) + lp_of_map(d_z(mz), kind.p, spec, f) +
                   lp_of_map(d_bar(mz), kind.p, spec, f) + lp_of_map(d_bar(mb), kind.p, spec, f);
        }
        case NormTag::Sup: {
            auto pts = dense_samples(spec);
            auto vals = synthesize(m, pts);
            double s = 0.0;
            for (const auto& v : vals) s = std::max(s, v.norm());
            return s;
        }
        case NormTag::Holder: {
            auto pts = dense_samples(spec);
            // subsample pairs to keep the quotient search bounded
            size_t stride = std::max<size_t>(1, pts.size() / 192);
            std::vector<Complex> sub;
            for (size_t i = 0; i < pts.size(); i += stride) sub.push_back(pts[i]);
            auto vals = synthesize(m, sub);
            double s = 0.0;
            for (const auto& v : vals) s = std::max(s, v.norm());
            double q = 0.0;
            for (size_t i = 0; i < sub.size(); ++i)
                for (size_t j = i + 1; j < sub.size(); ++j) {
                    double dist = std::abs(sub[i] - sub[j]);
                    if (dist < 1e-12) continue;
                    q = std::max(q, (vals[i] - vals[j]).norm() / std::pow(dist, kind.alpha));
                }
            return s + q;
        }
    }
    throw Error("norm: unknown kind");
}

double differential_lp(const DiscMap& m, double p, const DiscretizationSpec& spec) {
    GridField gz = synthesize_grid(d_z(m), spec);
    GridField gb = synthesize_grid(d_bar(m), spec);
    Eigen::VectorXcd pointwise(gz.rows());
    for (Eigen::Index i = 0; i < gz.rows(); ++i)
        pointwise[i] = std::sqrt(2.0 * (gz.row(i).squaredNorm() + gb.row(i).squaredNorm()));
    return spec.field_norm(pointwise, p);
}

} // namespace pseudodisc
