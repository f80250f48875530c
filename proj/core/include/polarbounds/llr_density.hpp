// Quantized LLR densities of BMS channels and the polar density-evolution
// transforms acting on them.
//
// A density lives on a uniform grid of `bins` (odd) cells covering
// [-grid_half_width, +grid_half_width] nats, plus an explicit atom at +inf
// for the perfectly-known part. Bin centers are k * bin_width for integer
// k, so LLR 0 is always a bin center. All densities are conditioned on the
// all-zero codeword (the usual density-evolution convention), which makes
// the symmetry a(-l) = e^-l a(l) a checkable property rather than stored
// state. BEC densities (two atoms: LLR 0 and +inf) are closed under both
// polar transforms with no quantization error.
#pragma once

#include <string>
#include <vector>

#include "polarbounds/channel.hpp"

namespace polar {

struct QuantizationParams {
    int bins = 2001;
    double grid_half_width = 40.0;  // nats
};

class LlrDensity {
public:
    // All-zero density on the given grid; fill via add_mass and friends.
    LlrDensity(double grid_half_width, int bins);

    double grid_half_width() const { return half_width_; }
    int bins() const { return bins_; }
    double bin_width() const { return bin_width_; }
    int center_index() const { return (bins_ - 1) / 2; }

    double llr_at(int index) const { return (index - center_index()) * bin_width_; }
    // Nearest bin, clamped to the grid.
    int index_of(double llr) const;

    double mass(int index) const { return mass_[index]; }
    const std::vector<double>& masses() const { return mass_; }
    double infinity_mass() const { return inf_mass_; }

    void add_mass(int index, double m) { mass_[index] += m; }
    void add_infinity_mass(double m) { inf_mass_ += m; }

    double total_mass() const;
    bool same_grid(const LlrDensity& other) const;

    // Throws std::runtime_error if mass is negative anywhere or the total
    // deviates from 1 by more than 1e-12.
    void validate() const;

    // Construction metadata: human-readable source plus the LLR snap error
    // introduced by placing atoms on the grid (0 when atoms are exact).
    const std::string& source_label() const { return source_label_; }
    double snap_error() const { return snap_error_; }
    void set_provenance(std::string label, double snap_error);

private:
    double half_width_;
    int bins_;
    double bin_width_;
    std::vector<double> mass_;
    double inf_mass_ = 0.0;
    std::string source_label_;
    double snap_error_ = 0.0;
};

// Discretize a parametric channel onto the grid. BEC and BSC become exact
// atoms (BSC atoms snapped to the nearest bin, snap error recorded); BIAWGN
// integrates the N(2/sigma^2, 4/sigma^2) LLR law per bin with the tail mass
// folded into the extreme bins. Requires odd bins >= 3 and, for the BSC, a
// grid wide enough to hold the atom at ln((1-p)/p).
LlrDensity density_from_channel(const BmsChannel& ch, int bins, double grid_half_width);
LlrDensity density_from_channel(const BmsChannel& ch, const QuantizationParams& q = {});

// Channel functionals, evaluated on the quantized density.
double capacity(const LlrDensity& d);       // bits/channel use, in [0,1]
double dispersion(const LlrDensity& d);     // bits^2, >= 0
double bhattacharyya(const LlrDensity& d);  // in [0,1]

// Polar transforms: check-node (box) and variable-node convolution of the
// density with itself. Both return a density on the same grid; out-of-grid
// mass of the variable convolution saturates into the extreme bins. The
// +inf atom is handled algebraically (box with +inf is the identity,
// variable convolution with +inf is +inf).
LlrDensity polar_minus(const LlrDensity& d);
LlrDensity polar_plus(const LlrDensity& d);

// Stable check-node combination of two scalar LLRs.
double box_llr(double a, double b);

// Bracket [eps_l, eps_h] of the one-step polarization gap
// I(W+) - I(W) = I(W) - I(W-) for any BMS channel of the given capacity.
struct EpsilonBounds {
    double lo;
    double hi;
};
EpsilonBounds epsilon_bounds(double capacity_bits);

// Self-describing JSON record (grid parameters plus mass vector), used to
// cache densities and trees between CLI invocations.
std::string to_json(const LlrDensity& d);
LlrDensity density_from_json(const std::string& text);

}  // namespace polar
