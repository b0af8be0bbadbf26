#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "beamcode/chancode.hpp"
#include "beamcode/spatial.hpp"

namespace beamcode {

enum class BeamformerKind { BpskInduced, AntennaSelection, ConvBeamspace };

/// T x N_a beamforming matrix, row-major. Every row has unit Euclidean norm
/// (checked to 1e-9 at construction), so beamformed noise stays white.
struct Beamformer {
  int n_rows = 0;      // T
  int n_antennas = 0;  // N_a
  std::vector<cdouble> weights;
  BeamformerKind kind = BeamformerKind::AntennaSelection;
  std::string provenance;

  const cdouble* row(int t) const {
    return weights.data() + std::size_t(t) * n_antennas;
  }
};

/// Length-P filter with unit L2 norm, enforced to 1e-12 at construction.
/// Taps whose norm deviates from 1 by more than 1e-6 are rejected rather than
/// silently rescaled.
struct Filter {
  std::vector<cdouble> taps;
  int length() const { return static_cast<int>(taps.size()); }
};

Filter make_filter(std::vector<cdouble> taps);

/// All-ones filter scaled to unit norm: 1_P / sqrt(P).
Filter boxcar_filter(int length);

/// Squared filter response |B(f_n; w)|^2 sampled on a grid.
struct Beampattern {
  std::vector<double> values;
};

/// W = (1/N_a) * B * A_U^H against the ULA manifold, valid in the N_a = N_g
/// regime where the manifold is a scaled DFT matrix and the closed-form
/// pseudoinverse (1/N_a) A_U^H applies. Satisfies W a_U(f_n) = b_n.
Beamformer bpsk_beamformer(const BpskCodebook& codebook, const SpatialGrid& grid);

/// Row t is the transposed standard basis vector at antenna position k_t.
Beamformer antenna_selection_beamformer(const SensorSet& omega, int n_antennas);

/// Row t is the filter's conjugate placed at shift k_t and zero-padded:
/// [0_{k_t}, w^H, 0_{N_a - P - k_t}]. Requires k_T + P <= N_a.
Beamformer conv_beamformer(const Filter& filter, const SensorSet& shifts,
                           int n_antennas);

/// B(f; w) = sum_{n=1}^{P} conj(w_n) e^{j pi (n-1) f}.
cdouble filter_response(const Filter& filter, double f);

Beampattern beampattern(const Filter& filter, const SpatialGrid& grid);

/// W * a_U(f) against the ambient ULA {0, ..., N_a - 1}.
CVec apply_to_ula_steering(const Beamformer& w, double f);

struct IsotropyReport {
  double max_gain_deviation = 0.0;  // max_n | ||W a_U(f_n)||^2 - T |
  double tolerance = 0.0;           // 1e-6 * T
  bool isotropic = false;
};

IsotropyReport check_isotropy(const Beamformer& w, const SpatialGrid& grid);

/// Plain-text matrix form for cross-implementation comparison: one row per
/// line, entries as "re+imj" tokens separated by single spaces.
void write_beamformer(std::ostream& os, const Beamformer& w);
std::string beamformer_to_text(const Beamformer& w);

}  // namespace beamcode
