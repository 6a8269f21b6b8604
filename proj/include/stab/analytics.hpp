// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stab/distribution.hpp"
#include "stab/hamiltonian.hpp"
#include "stab/state.hpp"

namespace stab {

/// Raised by apply_cut when the outcome probability collapses to zero.
struct ZeroProbabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the analytic two-peak cutting model: peak energies e1, e2 on
/// a spectrum [e_min, e_max], mean absolute cut slope u, fit constant kappa
/// and per-measurement rate lambda = kappa * u^2 * (e1 - e2)^2.
struct CutModelParams {
    double e1 = 0.0, e2 = 0.0;
    double e_min = -1.0, e_max = 1.0;
    double u = 0.0;
    double kappa = 0.0;
    double lambda = 0.0;

    double span() const { return e_max - e_min; }

    /// Derives u = 1/span and lambda from kappa.
    static CutModelParams from_peaks(double e1, double e2, double e_min, double e_max,
                                     double kappa);
};

/// Multiplicative modification of g(E) by one measurement: either the
/// analytic field-Hamiltonian form or a per-bin table from an exact
/// eigenbasis evaluation.
class CuttingFunction {
  public:
    enum class Source { FieldAnalytic, PairExact };

    CuttingFunction() = default;  // constant 1/2 (theta = pi/2 on [-1, 1])

    static CuttingFunction field_analytic(double theta, double e_min, double e_max);
    static CuttingFunction binned(EnergyGrid grid, std::vector<double> values,
                                  Source source = Source::PairExact);

    double operator()(double energy) const;
    double slope(double energy) const;
    Source source() const { return source_; }

  private:
    Source source_ = Source::FieldAnalytic;
    // field-analytic parameters
    double theta_ = 1.5707963267948966, e_min_ = -1.0, e_max_ = 1.0;
    // binned table
    EnergyGrid grid_;
    std::vector<double> values_;
};

/// E -> 1/2 - cos(theta) * E / (e_max - e_min).
CuttingFunction cutting_function_field(double theta, double e_min, double e_max);

/// Pointwise multiply and renormalize; returns the new distribution and the
/// normalization B = integral(cut * g), i.e. the outcome probability.
std::pair<EnergyDistribution, double> apply_cut(const EnergyDistribution& g,
                                                const CuttingFunction& cut);

enum class AxisMode { SphereUniform, ZOnly };

struct McResult {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of the outcome-averaged stability measure for the
/// two-delta-peak model after n measurements:
///   0.5 * integral over c in [-1,1]^n of |prod(1/2 - c_i e1') - prod(1/2 - c_i e2')|
/// with e' = e / span and c_i = cos(theta_i). ZOnly restricts c_i to {-1,+1},
/// which samples the binomial closed form.
McResult mc_avg_delta_g_two_peak(const CutModelParams& params, int n, long trials,
                                 rng::Engine& gen, AxisMode mode = AxisMode::SphereUniform);

/// Tensor Gauss-Legendre evaluation (32 nodes per axis) of the same integral;
/// cross-check path for n <= 4.
double quad_avg_delta_g_two_peak(const CutModelParams& params, int n);

/// Closed form 0.5 * sum_k |Binom(n,p1,k) - Binom(n,p2,k)| for measurements
/// along z only, p_i = 1/2 - e_i/span.
double binomial_avg_delta_g(int n, double p1, double p2);

/// sqrt(1 - exp(-lambda n)).
double approx_delta_g(int n, double lambda);

/// Least squares of mean^2 = 1 - exp(-lambda n) over the given points.
double fit_lambda(std::span<const int> ns, std::span<const double> means);

/// Width after one linear cut: (1/w^2 + (slope/value)^2)^(-1/2).
double gaussian_width_update(double w_prev, double cut_value, double cut_slope);

struct NarrowingEstimates {
    double n_critical = 0.0;  // 1 / (w0^2 u^2)
    double tau_c = 0.0;       // tau_m * eps1^2 * n_sites / w0^2
};

NarrowingEstimates narrowing_estimates(double tau_m, double epsilon1, double n_sites,
                                       double w0, double u);

struct PairProbability {
    double exact = 1.0;
    double approx = 1.0;
};

/// Probability that n random single-site measurements contain no
/// nearest-neighbour pair: exact product and exp(-n^2 n_nn / n_sites).
PairProbability pair_probability(int n, int n_nn, int n_sites);

/// Same in time: exp(-n_nn * n_sites * t^2 / tau_m^2).
double pair_probability_time(double t, int n_nn, int n_sites, double tau_m);

struct Axis {
    double theta = 0.0;
    double phi = 0.0;
};

/// Bin-resolved pieces of the two-measurement cutting function
/// [A^dag A]_diag(E) with A = P_b exp(-i H delay) P_a.
struct PairCutResult {
    CuttingFunction cut;            // total, per bin
    EnergyGrid grid;
    std::vector<double> total;      // = 1/4 + lone terms + two_spin + three_spin
    std::vector<double> two_spin;   // 1/2 [{S_a(0), S_b(delay)}]_diag
    std::vector<double> three_spin; // [S_a S_b(delay) S_a]_diag
    std::vector<double> lone_a;     // 1/2 [S_a]_diag
    std::vector<double> lone_b;     // 1/4 [S_b(delay)]_diag
    std::vector<int> bin_counts;    // eigenstates per bin
};

/// Exact eigenbasis evaluation of the pair cutting function; needs a spectrum
/// with eigenvectors. Empty bins inherit the nearest populated bin's value.
PairCutResult pair_cutting_function(const HamiltonianSpec& spec, int site_a, int site_b,
                                    Axis axis_a, Axis axis_b, double delay,
                                    const Spectrum& spectrum, double bin_width);

/// Bin-averaged diagonal [S(axis)]_diag(E) of a single spin operator.
std::vector<double> spin_diag_profile(const Spectrum& spectrum, int site, Axis axis,
                                      const EnergyGrid& grid);

/// (mean(gn) - mean(g0)) / (e_max - e_min).
double heating_drift(const EnergyDistribution& g0, const EnergyDistribution& gn,
                     double e_min, double e_max);

}  // namespace stab
