// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stab/linalg.hpp"
#include "stab/state.hpp"

namespace stab {

enum class HamiltonianKind { Field, XYZ };

/// Spin-1/2 chain Hamiltonian. Two families:
///   Field: H = -h_z * sum_i S_iz
///   XYZ:   H = -sum_<ij> (j_x S_ix S_jx + j_y S_iy S_jy + j_z S_iz S_jz)
/// with nearest-neighbour bonds; `periodic` adds the wrap bond for n_sites >= 3.
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::Field;
    int n_sites = 1;
    double h_z = 0.0;
    double j_x = 0.0, j_y = 0.0, j_z = 0.0;
    bool periodic = false;

    static HamiltonianSpec field(int n_sites, double h_z);
    static HamiltonianSpec xyz(int n_sites, double j_x, double j_y, double j_z, bool periodic);

    std::size_t dim() const { return std::size_t{1} << n_sites; }
    std::vector<std::pair<int, int>> bonds() const;

    /// Cheap upper bound on the spectral radius (used to size imaginary-time steps).
    double norm_bound() const;
};

/// Matrix-free H application with the diagonal precomputed once. Reuse across
/// many applies (time stepping); a single apply via the free function is fine too.
class HamiltonianOperator {
  public:
    explicit HamiltonianOperator(const HamiltonianSpec& spec);

    /// out = H * in; `out` is overwritten, dimensions must match.
    void apply(const cvec& in, cvec& out) const;

    const HamiltonianSpec& spec() const { return spec_; }

  private:
    HamiltonianSpec spec_;
    std::vector<double> diag_;
    struct FlipTerm {
        std::size_t mask;        // bits of the bond pair
        std::size_t bit_i, bit_j;
        double coeff_equal;      // amplitude when the two bits agree
        double coeff_diff;
    };
    std::vector<FlipTerm> flips_;
};

/// H|psi>, without renormalization.
SpinState apply_hamiltonian(const HamiltonianSpec& spec, const SpinState& psi);

/// <psi|H|psi> for normalized psi. Throws if the norm is off by more than 1e-6
/// or the imaginary residue exceeds 1e-10.
double energy_expectation(const HamiltonianSpec& spec, const SpinState& psi);

/// Full eigendecomposition.
struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    CMatrix eigenvectors;             // column k belongs to eigenvalues[k]; empty unless requested
    double e_min = 0.0, e_max = 0.0;

    bool has_vectors() const { return !eigenvectors.empty(); }
    double span() const { return e_max - e_min; }
};

/// Field kind uses the analytic level ladder; XYZ goes through a dense
/// Hermitian eigensolver. Sizes above the per-kind caps raise an error.
Spectrum exact_spectrum(const HamiltonianSpec& spec, bool want_vectors);

/// Canonical energy standard deviation sqrt(<E^2> - <E>^2) at temperature T
/// (k_B = 1); equals T*sqrt(C_V). T = 0 is rejected.
double canonical_width(const Spectrum& spectrum, double T);

/// Canonical mean energy at temperature T.
double canonical_energy(const Spectrum& spectrum, double T);

}  // namespace stab
