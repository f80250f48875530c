// Gallager exponent functions of a BMS channel, evaluated in LLR form on a
// quantized density (or in closed form for BEC/BSC). Exponents are in nats;
// rates are in bits per channel use throughout.
#pragma once

#include <optional>
#include <vector>

#include "polarbounds/llr_density.hpp"

namespace polar {

struct ExpurgatedResult {
    double value;     // nats
    bool cap_active;  // the rho search hit rho_cap with positive slope
};

struct ExtremalExponents {
    double bsc;  // E(BSC with the given capacity, R), nats
    double bec;  // E(BEC with the given capacity, R), nats
};

// Reusable exponent evaluator for one channel. Construction compacts the
// density to its support; with Accel::on, E0 is additionally cached as a
// cubic Hermite interpolant over rho (error ~1e-12), which makes the rate
// optimizations inside the rate-split recursions cheap for densities with
// wide support. BEC/BSC instances evaluate E0 in closed form.
class ChannelExponent {
public:
    enum class Accel { off, on };

    explicit ChannelExponent(const LlrDensity& d, Accel accel = Accel::off);
    static ChannelExponent bec(double erasure);
    static ChannelExponent bsc(double crossover);

    // E0(W, rho) in nats, exact evaluation (no interpolation).
    double e0(double rho) const;
    double e0_derivative(double rho) const;

    double bhattacharyya() const { return z_; }

    // E_r(W, R) = max_{0<=rho<=1} E0 - rho R ln2; infinity at R = 0.
    double random_coding(double rate_bits) const;

    // E_ex(W, R) = sup_{rho>=1} E_x - rho R ln2, searched on [1, rho_cap].
    ExpurgatedResult expurgated(double rate_bits) const;

    // Typical-code exponent: max(E_r(R), E_ex(R)) in the asymptotic form,
    // max(E_r(R), E_ex(R + 2/n1)) at finite outer blocklength n1.
    double typical(double rate_bits) const;
    double typical(double rate_bits, int n1) const;

    static constexpr double rho_cap = 64.0;

private:
    ChannelExponent() = default;

    enum class Kind { density, bec, bsc };
    Kind kind_ = Kind::density;
    double param_ = 0.0;  // eps or p for the closed forms

    std::vector<double> llr_, mass_;  // compacted support
    double inf_mass_ = 0.0;
    double z_ = 0.0;
    double deriv0_ = 0.0, deriv1_ = 0.0;  // dE0/drho at 0 and 1

    struct Spline {
        std::vector<double> y, dy;
        double step;
        double eval(double x) const;
    };
    std::optional<Spline> spline_;

    std::pair<double, double> e0_and_derivative(double rho) const;
    double e0_fast(double rho) const;  // spline when present, exact otherwise
};

// One-shot evaluations of the operations above on a density.
double gallager_e0(const LlrDensity& d, double rho);
double random_coding_exponent(const LlrDensity& d, double rate_bits);
double expurgated_ex(const LlrDensity& d, double rho);  // E_x(W, rho)
ExpurgatedResult expurgated_exponent(const LlrDensity& d, double rate_bits);
double typical_exponent(const LlrDensity& d, double rate_bits);
double typical_exponent(const LlrDensity& d, double rate_bits, int n1);

// Typical-code exponents of the extremal channels (BSC and BEC) with the
// given capacity; these bound E(W, R) for every BMS channel of the same
// capacity from below and above.
ExtremalExponents extremal_exponents(double capacity_bits, double rate_bits);

}  // namespace polar
