// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace stab {

// ---------------------------------------------------------------------------
// cutting functions

CutModelParams CutModelParams::from_peaks(double e1, double e2, double e_min, double e_max,
                                          double kappa) {
    if (!(e_max > e_min)) throw std::invalid_argument("CutModelParams: e_max must exceed e_min");
    CutModelParams p;
    p.e1 = e1;
    p.e2 = e2;
    p.e_min = e_min;
    p.e_max = e_max;
    p.kappa = kappa;
    p.u = 1.0 / p.span();
    p.lambda = kappa * p.u * p.u * (e1 - e2) * (e1 - e2);
    return p;
}

CuttingFunction CuttingFunction::field_analytic(double theta, double e_min, double e_max) {
    if (!(e_max > e_min))
        throw std::invalid_argument("CuttingFunction: e_max must exceed e_min");
    CuttingFunction c;
    c.source_ = Source::FieldAnalytic;
    c.theta_ = theta;
    c.e_min_ = e_min;
    c.e_max_ = e_max;
    return c;
}

CuttingFunction CuttingFunction::binned(EnergyGrid grid, std::vector<double> values,
                                        Source source) {
    if (static_cast<int>(values.size()) != grid.n_bins)
        throw std::invalid_argument("CuttingFunction: value count does not match grid");
    CuttingFunction c;
    c.source_ = source;
    c.grid_ = grid;
    c.values_ = std::move(values);
    return c;
}

double CuttingFunction::operator()(double energy) const {
    if (values_.empty())
        return 0.5 - std::cos(theta_) * energy / (e_max_ - e_min_);
    return values_[grid_.bin_of(energy)];
}

double CuttingFunction::slope(double energy) const {
    if (values_.empty()) return -std::cos(theta_) / (e_max_ - e_min_);
    const int b = grid_.bin_of(energy);
    const int b0 = std::max(b - 1, 0);
    const int b1 = std::min(b + 1, grid_.n_bins - 1);
    if (b1 == b0) return 0.0;
    return (values_[b1] - values_[b0]) / ((b1 - b0) * grid_.bin_width);
}

CuttingFunction cutting_function_field(double theta, double e_min, double e_max) {
    return CuttingFunction::field_analytic(theta, e_min, e_max);
}

std::pair<EnergyDistribution, double> apply_cut(const EnergyDistribution& g,
                                                const CuttingFunction& cut) {
    double b = 0.0;
    for (int i = 0; i < g.grid.n_bins; ++i)
        b += cut(g.grid.center(i)) * g.density[i] * g.grid.bin_width;
    if (b < 1e-14)
        throw ZeroProbabilityError("apply_cut: outcome probability below 1e-14");
    EnergyDistribution out = g;
    for (int i = 0; i < out.grid.n_bins; ++i)
        out.density[i] = cut(g.grid.center(i)) * g.density[i] / b;
    return {std::move(out), b};
}

// ---------------------------------------------------------------------------
// two-peak model averages

McResult mc_avg_delta_g_two_peak(const CutModelParams& params, int n, long trials,
                                 rng::Engine& gen, AxisMode mode) {
    if (n < 0) throw std::invalid_argument("mc_avg_delta_g_two_peak: n < 0");
    if (trials < 1) throw std::invalid_argument("mc_avg_delta_g_two_peak: trials < 1");
    if (n == 0) return {0.0, 0.0};

    const double r1 = params.e1 / params.span();
    const double r2 = params.e2 / params.span();
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);

    double sum = 0.0, sum2 = 0.0;
    for (long t = 0; t < trials; ++t) {
        double pa = 1.0, pb = 1.0;
        for (int i = 0; i < n; ++i) {
            const double c = mode == AxisMode::SphereUniform
                                 ? unif(gen)
                                 : (sign(gen) == 0 ? -1.0 : 1.0);
            pa *= 0.5 - c * r1;
            pb *= 0.5 - c * r2;
        }
        const double f = std::abs(pa - pb);
        sum += f;
        sum2 += f * f;
    }
    const double m = sum / trials;
    const double var = std::max(sum2 / trials - m * m, 0.0);
    const double scale = 0.5 * std::pow(2.0, n);
    McResult r;
    r.mean = scale * m;
    r.std_error = trials > 1 ? scale * std::sqrt(var / (trials - 1)) : 0.0;
    return r;
}

namespace {

// 32-point Gauss-Legendre nodes/weights on [-1, 1] by Newton on P_32.
struct GaussLegendre32 {
    double x[32], w[32];
    GaussLegendre32() {
        constexpr int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double p0 = 0, p1 = 0, dp = 0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

}  // namespace

double quad_avg_delta_g_two_peak(const CutModelParams& params, int n) {
    if (n < 0) throw std::invalid_argument("quad_avg_delta_g_two_peak: n < 0");
    if (n == 0) return 0.0;
    if (n > 4)
        throw std::invalid_argument("quad_avg_delta_g_two_peak: tensor quadrature limited to n <= 4");

    static const GaussLegendre32 gl;
    const double r1 = params.e1 / params.span();
    const double r2 = params.e2 / params.span();

    std::vector<int> idx(n, 0);
    double total = 0.0;
    while (true) {
        double pa = 1.0, pb = 1.0, wt = 1.0;
        for (int i = 0; i < n; ++i) {
            const double c = gl.x[idx[i]];
            wt *= gl.w[idx[i]];
            pa *= 0.5 - c * r1;
            pb *= 0.5 - c * r2;
        }
        total += wt * std::abs(pa - pb);
        int d = 0;
        while (d < n && ++idx[d] == 32) idx[d++] = 0;
        if (d == n) break;
    }
    return 0.5 * total;
}

double binomial_avg_delta_g(int n, double p1, double p2) {
    if (n < 0) throw std::invalid_argument("binomial_avg_delta_g: n < 0");
    if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
        throw std::invalid_argument("binomial_avg_delta_g: p outside [0,1]");
    auto pmf = [n](double p, int k) -> double {
        if (p == 0.0) return k == 0 ? 1.0 : 0.0;
        if (p == 1.0) return k == n ? 1.0 : 0.0;
        const double lg = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        return std::exp(lg + k * std::log(p) + (n - k) * std::log1p(-p));
    };
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += std::abs(pmf(p1, k) - pmf(p2, k));
    return 0.5 * s;
}

double approx_delta_g(int n, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("approx_delta_g: lambda < 0");
    return std::sqrt(1.0 - std::exp(-lambda * n));
}

double fit_lambda(std::span<const int> ns, std::span<const double> means) {
    if (ns.size() != means.size() || ns.empty())
        throw std::invalid_argument("fit_lambda: need matching nonempty samples");
    auto loss = [&](double lam) {
        double s = 0.0;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double r = means[i] * means[i] - (1.0 - std::exp(-lam * ns[i]));
            s += r * r;
        }
        return s;
    };
    double best = 1e-6, best_loss = loss(best);
    for (double lg = -6.0; lg <= 1.3; lg += 0.01) {
        const double lam = std::pow(10.0, lg);
        const double l = loss(lam);
        if (l < best_loss) {
            best = lam;
            best_loss = l;
        }
    }
    // golden-section refinement around the scan minimum
    double lo = best / 1.05, hi = best * 1.05;
    constexpr double kInvPhi = 0.6180339887498949;
    double a = hi - kInvPhi * (hi - lo), b = lo + kInvPhi * (hi - lo);
    double fa = loss(a), fb = loss(b);
    for (int it = 0; it < 200 && hi - lo > 1e-12 * best; ++it) {
        if (fa < fb) {
            hi = b; b = a; fb = fa;
            a = hi - kInvPhi * (hi - lo);
            fa = loss(a);
        } else {
            lo = a; a = b; fa = fb;
            b = lo + kInvPhi * (hi - lo);
            fb = loss(b);
        }
    }
    return 0.5 * (lo + hi);
}

double gaussian_width_update(double w_prev, double cut_value, double cut_slope) {
    if (!(w_prev > 0.0)) throw std::invalid_argument("gaussian_width_update: w_prev <= 0");
    if (!(cut_value > 0.0)) throw std::invalid_argument("gaussian_width_update: cut_value <= 0");
    const double r = cut_slope / cut_value;
    return 1.0 / std::sqrt(1.0 / (w_prev * w_prev) + r * r);
}

NarrowingEstimates narrowing_estimates(double tau_m, double epsilon1, double n_sites,
                                       double w0, double u) {
    if (tau_m <= 0 || epsilon1 <= 0 || n_sites <= 0 || w0 <= 0 || u <= 0)
        throw std::invalid_argument("narrowing_estimates: all inputs must be positive");
    NarrowingEstimates est;
    est.n_critical = 1.0 / (w0 * w0 * u * u);
    est.tau_c = tau_m * epsilon1 * epsilon1 * n_sites / (w0 * w0);
    return est;
}

PairProbability pair_probability(int n, int n_nn, int n_sites) {
    if (n < 0) throw std::invalid_argument("pair_probability: n < 0");
    PairProbability p;
    for (int k = 1; k <= n; ++k) {
        const double factor = 1.0 - (k - 1.0) * n_nn / n_sites;
        if (factor <= 0.0)
            throw std::domain_error("pair_probability: product factor <= 0 (formula domain exceeded)");
        p.exact *= factor;
    }
    p.approx = std::exp(-static_cast<double>(n) * n * n_nn / n_sites);
    return p;
}

double pair_probability_time(double t, int n_nn, int n_sites, double tau_m) {
    if (tau_m <= 0.0) throw std::invalid_argument("pair_probability_time: tau_m <= 0");
    return std::exp(-static_cast<double>(n_nn) * n_sites * t * t / (tau_m * tau_m));
}

// ---------------------------------------------------------------------------
// exact pair cutting function (eigenbasis route)

namespace {

// P(axis) applied to every column of V, in the product basis.
CMatrix project_columns(const CMatrix& v, int site, Axis axis) {
    const std::size_t dim = v.rows;
    const std::size_t mask = std::size_t{1} << site;
    const cplx up{std::cos(axis.theta / 2.0), 0.0};
    const cplx dn = std::polar(std::sin(axis.theta / 2.0), axis.phi);
    CMatrix out(dim, v.cols);
    for (std::size_t j = 0; j < v.cols; ++j) {
        const cplx* in = v.col(j);
        cplx* o = out.col(j);
        for (std::size_t x = 0; x < dim; ++x) {
            if (x & mask) continue;
            const cplx c = std::conj(up) * in[x] + std::conj(dn) * in[x | mask];
            o[x] = up * c;
            o[x | mask] = dn * c;
        }
    }
    return out;
}

std::vector<double> bin_average(const std::vector<double>& diag,
                                const std::vector<double>& energies, const EnergyGrid& grid,
                                std::vector<int>& counts) {
    std::vector<double> acc(grid.n_bins, 0.0);
    counts.assign(grid.n_bins, 0);
    for (std::size_t k = 0; k < diag.size(); ++k) {
        const int b = grid.bin_of(energies[k]);
        acc[b] += diag[k];
        counts[b] += 1;
    }
    for (int b = 0; b < grid.n_bins; ++b)
        if (counts[b] > 0) acc[b] /= counts[b];
    // empty bins inherit the nearest populated bin
    for (int b = 0; b < grid.n_bins; ++b) {
        if (counts[b] > 0) continue;
        int left = b - 1, right = b + 1;
        while (left >= 0 && counts[left] == 0) --left;
        while (right < grid.n_bins && counts[right] == 0) ++right;
        if (left >= 0 && (right >= grid.n_bins || b - left <= right - b))
            acc[b] = acc[left];
        else if (right < grid.n_bins)
            acc[b] = acc[right];
    }
    return acc;
}

}  // namespace

PairCutResult pair_cutting_function(const HamiltonianSpec& spec, int site_a, int site_b,
                                    Axis axis_a, Axis axis_b, double delay,
                                    const Spectrum& spectrum, double bin_width) {
    if (!spectrum.has_vectors())
        throw std::invalid_argument("pair_cutting_function: spectrum carries no eigenvectors");
    if (site_a < 0 || site_a >= spec.n_sites || site_b < 0 || site_b >= spec.n_sites)
        throw std::invalid_argument("pair_cutting_function: site out of range");
    if (delay < 0.0) throw std::invalid_argument("pair_cutting_function: delay < 0");

    const std::size_t dim = spectrum.eigenvalues.size();
    const CMatrix& v = spectrum.eigenvectors;
    const std::vector<double>& en = spectrum.eigenvalues;

    // projectors in the eigenbasis
    CMatrix pa = matmul_adj(v, project_columns(v, site_a, axis_a));
    CMatrix pb = matmul_adj(v, project_columns(v, site_b, axis_b));

    // A = P_b e^{-iH delay} P_a: row-scale P_a by the propagator phases
    CMatrix upa = pa;
    for (std::size_t j = 0; j < dim; ++j) {
        cplx* c = upa.col(j);
        for (std::size_t i = 0; i < dim; ++i) c[i] *= std::polar(1.0, -en[i] * delay);
    }
    const CMatrix a = matmul(pb, upa);

    std::vector<double> diag_total(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        const cplx* c = a.col(k);
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) s += std::norm(c[i]);
        diag_total[k] = s;
    }

    // S = P - 1/2; S_b(delay) gets the eigenbasis phase conjugation
    CMatrix sa = pa, sb = pb;
    for (std::size_t k = 0; k < dim; ++k) {
        sa.at(k, k) -= 0.5;
        sb.at(k, k) -= 0.5;
    }
    CMatrix sbt = sb;
    for (std::size_t j = 0; j < dim; ++j) {
        cplx* c = sbt.col(j);
        for (std::size_t i = 0; i < dim; ++i) c[i] *= std::polar(1.0, (en[i] - en[j]) * delay);
    }

    const CMatrix sab = matmul(sa, sbt);  // S_a S_b(t)
    std::vector<double> diag_two(dim), diag_three(dim), diag_la(dim), diag_lb(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        // diag of {S_a, S_b(t)} = 2 Re diag(S_a S_b(t)) by hermiticity
        diag_two[k] = sab.at(k, k).real();
        cplx t3{0.0, 0.0};
        for (std::size_t j = 0; j < dim; ++j) t3 += sab.at(k, j) * sa.at(j, k);
        diag_three[k] = t3.real();
        diag_la[k] = 0.5 * sa.at(k, k).real();
        diag_lb[k] = 0.25 * sbt.at(k, k).real();
    }

    PairCutResult res;
    res.grid = EnergyGrid::covering(spectrum.e_min, spectrum.e_max, bin_width);
    res.total = bin_average(diag_total, en, res.grid, res.bin_counts);
    std::vector<int> scratch;
    res.two_spin = bin_average(diag_two, en, res.grid, scratch);
    res.three_spin = bin_average(diag_three, en, res.grid, scratch);
    res.lone_a = bin_average(diag_la, en, res.grid, scratch);
    res.lone_b = bin_average(diag_lb, en, res.grid, scratch);
    res.cut = CuttingFunction::binned(res.grid, res.total, CuttingFunction::Source::PairExact);
    return res;
}

std::vector<double> spin_diag_profile(const Spectrum& spectrum, int site, Axis axis,
                                      const EnergyGrid& grid) {
    if (!spectrum.has_vectors())
        throw std::invalid_argument("spin_diag_profile: spectrum carries no eigenvectors");
    const std::size_t dim = spectrum.eigenvalues.size();
    const CMatrix pv = project_columns(spectrum.eigenvectors, site, axis);
    std::vector<double> diag(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const cplx* vk = spectrum.eigenvectors.col(k);
        const cplx* pk = pv.col(k);
        cplx s{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) s += std::conj(vk[i]) * pk[i];
        diag[k] = s.real() - 0.5;  // [S]_kk = [P]_kk - 1/2
    }
    std::vector<int> counts;
    return bin_average(diag, spectrum.eigenvalues, grid, counts);
}

double heating_drift(const EnergyDistribution& g0, const EnergyDistribution& gn, double e_min,
                     double e_max) {
    if (!(e_max > e_min)) throw std::invalid_argument("heating_drift: e_max must exceed e_min");
    const double m0 = distribution_moments(g0).first;
    const double mn = distribution_moments(gn).first;
    return (mn - m0) / (e_max - e_min);
}

}  // namespace stab
