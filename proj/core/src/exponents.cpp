#include "polarbounds/exponents.hpp"

#include <cmath>
#include <stdexcept>

#include "polarbounds/math_util.hpp"

namespace polar {

namespace {

constexpr int kSplineNodes = 513;
constexpr size_t kSplineSupportThreshold = 64;
constexpr double kRhoTol = 1e-10;

inline double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// E_x(rho) given the Bhattacharyya parameter, and its rho-derivative.
inline double ex_of_z(double z, double rho) {
    if (z <= 0.0) return rho * kLn2;
    return rho * (kLn2 - detail::softplus(std::log(z) / rho));
}

inline double ex_derivative_of_z(double z, double rho) {
    if (z <= 0.0) return kLn2;
    const double w = std::log(z) / rho;
    return kLn2 - detail::softplus(w) - sigmoid(w) * w * (-1.0) * -1.0 - 0.0 + 0.0 - 0.0
           /* d/drho [rho*(ln2 - softplus(w))], dw/drho = -w/rho */
           + 0.0;
}

}  // namespace

double ChannelExponent::Spline::eval(double x) const {
    const size_t n = y.size() - 1;
    double t = x / step;
    size_t i = static_cast<size_t>(t);
    if (i >= n) i = n - 1;
    t -= static_cast<double>(i);
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y[i] + h01 * y[i + 1] + step * (h10 * dy[i] + h11 * dy[i + 1]);
}

ChannelExponent::ChannelExponent(const LlrDensity& d, Accel accel) {
    kind_ = Kind::density;
    for (int i = 0; i < d.bins(); ++i) {
        if (d.mass(i) > 0.0) {
            llr_.push_back(d.llr_at(i));
            mass_.push_back(d.mass(i));
        }
    }
    inf_mass_ = d.infinity_mass();
    z_ = bhattacharyya(d);
    deriv0_ = e0_and_derivative(0.0).second;
    deriv1_ = e0_and_derivative(1.0).second;
    if (accel == Accel::on && llr_.size() > kSplineSupportThreshold) {
        Spline s;
        s.step = 1.0 / (kSplineNodes - 1);
        s.y.resize(kSplineNodes);
        s.dy.resize(kSplineNodes);
        for (int k = 0; k < kSplineNodes; ++k) {
            const auto [v, dv] = e0_and_derivative(k * s.step);
            s.y[k] = v;
            s.dy[k] = dv;
        }
        spline_ = std::move(s);
    }
}

ChannelExponent ChannelExponent::bec(double erasure) {
    if (!(erasure >= 0.0 && erasure <= 1.0)) throw std::invalid_argument("erasure must be in [0,1]");
    ChannelExponent c;
    c.kind_ = Kind::bec;
    c.param_ = erasure;
    c.z_ = erasure;
    c.deriv0_ = c.e0_and_derivative(0.0).second;
    c.deriv1_ = c.e0_and_derivative(1.0).second;
    return c;
}

ChannelExponent ChannelExponent::bsc(double crossover) {
    if (!(crossover >= 0.0 && crossover <= 0.5)) throw std::invalid_argument("crossover must be in [0,1/2]");
    if (crossover == 0.0) return bec(0.0);  // identical perfect channel
    ChannelExponent c;
    c.kind_ = Kind::bsc;
    c.param_ = crossover;
    c.z_ = 2.0 * std::sqrt(crossover * (1.0 - crossover));
    c.deriv0_ = c.e0_and_derivative(0.0).second;
    c.deriv1_ = c.e0_and_derivative(1.0).second;
    return c;
}

std::pair<double, double> ChannelExponent::e0_and_derivative(double rho) const {
    switch (kind_) {
        case Kind::bec: {
            const double eps = param_;
            const double pw = (1.0 - eps) * std::exp2(-rho);
            const double s = eps + pw;
            return {-std::log(s), pw * kLn2 / s};
        }
        case Kind::bsc: {
            const double p = param_, q = 1.0 - param_;
            const double s = 1.0 / (1.0 + rho);
            const double ps = std::pow(p, s), qs = std::pow(q, s);
            const double a = ps + qs;
            const double da_scaled = s * (ps * std::log(p) + qs * std::log(q)) / a;
            return {rho * kLn2 - (1.0 + rho) * std::log(a), kLn2 - std::log(a) + da_scaled};
        }
        case Kind::density:
            break;
    }
    // S(rho) = 2 m_inf + sum_i m_i exp((1+rho) u_i), u_i = softplus(-l_i/(1+rho)).
    const double s = 1.0 / (1.0 + rho);
    double sum = 2.0 * inf_mass_;
    double dsum = 0.0;
    for (size_t i = 0; i < llr_.size(); ++i) {
        const double x = -llr_[i] * s;
        const double u = detail::softplus(x);
        const double t = mass_[i] * std::exp((1.0 + rho) * u);
        sum += t;
        dsum += t * (u + sigmoid(x) * llr_[i] * s);
    }
    return {(1.0 + rho) * kLn2 - std::log(sum), kLn2 - dsum / sum};
}

double ChannelExponent::e0(double rho) const { return e0_and_derivative(rho).first; }
double ChannelExponent::e0_derivative(double rho) const { return e0_and_derivative(rho).second; }

double ChannelExponent::e0_fast(double rho) const {
    if (spline_) return spline_->eval(rho);
    return e0_and_derivative(rho).first;
}

double ChannelExponent::random_coding(double rate_bits) const {
    if (rate_bits < 0.0) throw std::invalid_argument("rate must be >= 0");
    if (rate_bits == 0.0) return kInf;  // no information bits, no errors
    const double slope = rate_bits * kLn2;
    if (deriv0_ <= slope) return 0.0;                  // maximizer rho = 0
    if (deriv1_ >= slope) return e0(1.0) - slope;      // maximizer rho = 1
    const auto f = [&](double rho) { return e0_fast(rho) - rho * slope; };
    const double rho = detail::golden_section_max(f, 0.0, 1.0, kRhoTol);
    return std::max(0.0, e0(rho) - rho * slope);
}

ExpurgatedResult ChannelExponent::expurgated(double rate_bits) const {
    if (rate_bits < 0.0) throw std::invalid_argument("rate must be >= 0");
    if (rate_bits == 0.0) return {kInf, false};
    if (z_ <= 0.0) {
        // Perfect channel: E_x = rho ln2, the sup diverges below rate 1.
        if (rate_bits < 1.0) return {kInf, false};
        return {(1.0 - rate_bits) * kLn2, false};
    }
    const double slope = rate_bits * kLn2;
    const auto dg = [&](double rho) {
        const double w = std::log(z_) / rho;
        return kLn2 - detail::softplus(w) + sigmoid(w) * w - slope;
    };
    const auto g = [&](double rho) { return ex_of_z(z_, rho) - rho * slope; };
    if (dg(1.0) <= 0.0) return {g(1.0), false};
    if (dg(rho_cap) > 1e-12) return {g(rho_cap), true};
    const double rho = detail::golden_section_max(g, 1.0, rho_cap, kRhoTol);
    return {g(rho), false};
}

double ChannelExponent::typical(double rate_bits) const {
    if (rate_bits == 0.0) return kInf;
    return std::max(random_coding(rate_bits), expurgated(rate_bits).value);
}

double ChannelExponent::typical(double rate_bits, int n1) const {
    if (n1 < 1) throw std::invalid_argument("n1 must be >= 1");
    if (rate_bits == 0.0) return kInf;
    return std::max(random_coding(rate_bits), expurgated(rate_bits + 2.0 / n1).value);
}

double gallager_e0(const LlrDensity& d, double rho) { return ChannelExponent(d).e0(rho); }

double random_coding_exponent(const LlrDensity& d, double rate_bits) {
    return ChannelExponent(d).random_coding(rate_bits);
}

double expurgated_ex(const LlrDensity& d, double rho) {
    if (rho < 1.0) throw std::invalid_argument("expurgated E_x requires rho >= 1");
    return ex_of_z(bhattacharyya(d), rho);
}

ExpurgatedResult expurgated_exponent(const LlrDensity& d, double rate_bits) {
    return ChannelExponent(d).expurgated(rate_bits);
}

double typical_exponent(const LlrDensity& d, double rate_bits) { return ChannelExponent(d).typical(rate_bits); }

double typical_exponent(const LlrDensity& d, double rate_bits, int n1) {
    return ChannelExponent(d).typical(rate_bits, n1);
}

ExtremalExponents extremal_exponents(double capacity_bits, double rate_bits) {
    const double cap = std::clamp(capacity_bits, 0.0, 1.0);
    const double p = detail::h2_inv(1.0 - cap);
    return {ChannelExponent::bsc(p).typical(rate_bits), ChannelExponent::bec(1.0 - cap).typical(rate_bits)};
}

}  // namespace polar
