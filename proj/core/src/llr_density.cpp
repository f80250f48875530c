#include "polarbounds/llr_density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "polarbounds/math_util.hpp"

namespace polar {

LlrDensity::LlrDensity(double grid_half_width, int bins)
    : half_width_(grid_half_width), bins_(bins), mass_(static_cast<size_t>(bins), 0.0) {
    if (bins < 3 || bins % 2 == 0) throw std::invalid_argument("bins must be odd and >= 3");
    if (!(grid_half_width > 0.0)) throw std::invalid_argument("grid_half_width must be positive");
    bin_width_ = 2.0 * grid_half_width / bins;
}

int LlrDensity::index_of(double llr) const {
    const int idx = center_index() + static_cast<int>(std::lround(llr / bin_width_));
    return std::clamp(idx, 0, bins_ - 1);
}

double LlrDensity::total_mass() const {
    double s = inf_mass_;
    for (double m : mass_) s += m;
    return s;
}

bool LlrDensity::same_grid(const LlrDensity& other) const {
    return bins_ == other.bins_ && half_width_ == other.half_width_;
}

void LlrDensity::validate() const {
    for (double m : mass_)
        if (m < 0.0) throw std::runtime_error("LlrDensity: negative bin mass");
    if (inf_mass_ < 0.0) throw std::runtime_error("LlrDensity: negative infinity mass");
    if (std::abs(total_mass() - 1.0) > 1e-12) throw std::runtime_error("LlrDensity: total mass deviates from 1");
}

void LlrDensity::set_provenance(std::string label, double snap_error) {
    source_label_ = std::move(label);
    snap_error_ = snap_error;
}

LlrDensity density_from_channel(const BmsChannel& ch, int bins, double grid_half_width) {
    LlrDensity d(grid_half_width, bins);
    switch (ch.kind()) {
        case BmsChannel::Kind::BEC: {
            const double eps = ch.parameter();
            d.add_mass(d.center_index(), eps);
            d.add_infinity_mass(1.0 - eps);
            d.set_provenance(ch.label(), 0.0);
            break;
        }
        case BmsChannel::Kind::BSC: {
            const double p = ch.parameter();
            if (p == 0.0) {
                d.add_infinity_mass(1.0);
                d.set_provenance(ch.label(), 0.0);
                break;
            }
            const double l0 = std::log((1.0 - p) / p);
            if (l0 > grid_half_width)
                throw std::invalid_argument("grid_half_width too small for the BSC atom at ln((1-p)/p)");
            const int plus = d.index_of(l0);
            const int minus = d.bins() - 1 - plus;  // grid is symmetric
            d.add_mass(plus, 1.0 - p);
            d.add_mass(minus, p);
            d.set_provenance(ch.label(), std::abs(d.llr_at(plus) - l0));
            break;
        }
        case BmsChannel::Kind::BIAWGN: {
            const double sigma = ch.parameter();
            const double mu = 2.0 / (sigma * sigma);
            const double sd = 2.0 / sigma;
            // N(mu, sd^2) integrated per bin via CDF differences; the first
            // and last bins absorb the tails.
            const auto cdf = [&](double x) { return 0.5 * std::erfc(-(x - mu) / (sd * std::sqrt(2.0))); };
            double prev = 0.0;  // CDF at -inf
            for (int i = 0; i < d.bins(); ++i) {
                const double upper = (i == d.bins() - 1) ? 1.0 : cdf(d.llr_at(i) + 0.5 * d.bin_width());
                d.add_mass(i, upper - prev);
                prev = upper;
            }
            d.set_provenance(ch.label(), 0.0);
            break;
        }
    }
    d.validate();
    return d;
}

LlrDensity density_from_channel(const BmsChannel& ch, const QuantizationParams& q) {
    return density_from_channel(ch, q.bins, q.grid_half_width);
}

namespace {

// Per-symbol information density log2(2/(1+e^-l)) at LLR l, in bits.
inline double info_density(double l) { return 1.0 - detail::softplus(-l) / kLn2; }

}  // namespace

double capacity(const LlrDensity& d) {
    double s = d.infinity_mass();
    for (int i = 0; i < d.bins(); ++i) {
        const double m = d.mass(i);
        if (m > 0.0) s += m * info_density(d.llr_at(i));
    }
    return std::clamp(s, 0.0, 1.0);
}

double dispersion(const LlrDensity& d) {
    double mean = d.infinity_mass();
    double second = d.infinity_mass();  // info density is 1 at +inf
    for (int i = 0; i < d.bins(); ++i) {
        const double m = d.mass(i);
        if (m > 0.0) {
            const double x = info_density(d.llr_at(i));
            mean += m * x;
            second += m * x * x;
        }
    }
    return std::max(0.0, second - mean * mean);
}

double bhattacharyya(const LlrDensity& d) {
    double z = 0.0;
    for (int i = 0; i < d.bins(); ++i) {
        const double m = d.mass(i);
        if (m > 0.0) z += m * std::exp(-0.5 * d.llr_at(i));
    }
    return std::clamp(z, 0.0, 1.0);
}

double box_llr(double a, double b) {
    if (std::isinf(a)) return b;
    if (std::isinf(b)) return a;
    const double aa = std::abs(a), ab = std::abs(b);
    const double mag = std::min(aa, ab) + std::log1p(std::exp(-(aa + ab))) - std::log1p(std::exp(-std::abs(aa - ab)));
    return (a < 0) == (b < 0) ? mag : -mag;
}

namespace {

// Output-bin table for the box convolution of a grid with itself, cached per
// grid so curve sweeps do not recompute the 4M-entry map for every node.
struct BoxTable {
    int bins;
    double half_width;
    std::vector<int32_t> out;  // out[i*bins+j] = bin index of box(llr_i, llr_j)
};

std::shared_ptr<const BoxTable> box_table_for(const LlrDensity& d) {
    static std::mutex mu;
    static std::vector<std::shared_ptr<const BoxTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& t : cache)
        if (t->bins == d.bins() && t->half_width == d.grid_half_width()) return t;

    auto table = std::make_shared<BoxTable>();
    table->bins = d.bins();
    table->half_width = d.grid_half_width();
    const int n = d.bins();
    table->out.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double li = d.llr_at(i);
        for (int j = i; j < n; ++j) {
            const int k = d.index_of(box_llr(li, d.llr_at(j)));
            table->out[static_cast<size_t>(i) * n + j] = k;
            table->out[static_cast<size_t>(j) * n + i] = k;
        }
    }
    if (cache.size() >= 2) cache.erase(cache.begin());
    cache.push_back(table);
    return table;
}

std::vector<int> support_of(const LlrDensity& d) {
    std::vector<int> s;
    for (int i = 0; i < d.bins(); ++i)
        if (d.mass(i) > 0.0) s.push_back(i);
    return s;
}

}  // namespace

LlrDensity polar_minus(const LlrDensity& d) {
    LlrDensity out(d.grid_half_width(), d.bins());
    const double inf = d.infinity_mass();
    out.add_infinity_mass(inf * inf);
    // box with +inf is the identity; the finite part pairs with itself.
    const auto support = support_of(d);
    for (int i : support) out.add_mass(i, 2.0 * inf * d.mass(i));
    const auto table = box_table_for(d);
    const int n = d.bins();
    for (size_t a = 0; a < support.size(); ++a) {
        const int i = support[a];
        const double mi = d.mass(i);
        const int32_t* row = table->out.data() + static_cast<size_t>(i) * n;
        out.add_mass(row[i], mi * mi);
        for (size_t b = a + 1; b < support.size(); ++b) {
            const int j = support[b];
            out.add_mass(row[j], 2.0 * mi * d.mass(j));
        }
    }
    out.set_provenance(d.source_label() + "-", d.snap_error());
    return out;
}

LlrDensity polar_plus(const LlrDensity& d) {
    LlrDensity out(d.grid_half_width(), d.bins());
    const double inf = d.infinity_mass();
    out.add_infinity_mass(inf * (2.0 - inf));  // +inf absorbs everything it meets
    const auto support = support_of(d);
    const int n = d.bins();
    const int m = d.center_index();
    for (size_t a = 0; a < support.size(); ++a) {
        const int i = support[a];
        const double mi = d.mass(i);
        out.add_mass(std::clamp(2 * i - m, 0, n - 1), mi * mi);
        for (size_t b = a + 1; b < support.size(); ++b) {
            const int j = support[b];
            out.add_mass(std::clamp(i + j - m, 0, n - 1), 2.0 * mi * d.mass(j));
        }
    }
    out.set_provenance(d.source_label() + "+", d.snap_error());
    return out;
}

EpsilonBounds epsilon_bounds(double capacity_bits) {
    const double x = capacity_bits;
    if (x <= 0.0 || x >= 1.0) return {0.0, 0.0};
    const double hi = x - x * x;
    const double u = detail::h2_inv(1.0 - x);
    const double lo = x - 1.0 + detail::h2(u * (2.0 - 2.0 * u));
    return {std::max(0.0, lo), hi};
}

std::string to_json(const LlrDensity& d) {
    nlohmann::json j;
    j["type"] = "llr_density";
    j["grid_half_width"] = d.grid_half_width();
    j["bins"] = d.bins();
    j["mass_at_plus_infinity"] = d.infinity_mass();
    j["mass"] = d.masses();
    j["source"] = d.source_label();
    j["snap_error"] = d.snap_error();
    return j.dump();
}

LlrDensity density_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("type", "") != "llr_density") throw std::invalid_argument("not an llr_density record");
    LlrDensity d(j.at("grid_half_width").get<double>(), j.at("bins").get<int>());
    const auto& mass = j.at("mass");
    if (static_cast<int>(mass.size()) != d.bins()) throw std::invalid_argument("mass vector size mismatch");
    for (int i = 0; i < d.bins(); ++i) d.add_mass(i, mass[i].get<double>());
    d.add_infinity_mass(j.at("mass_at_plus_infinity").get<double>());
    d.set_provenance(j.value("source", ""), j.value("snap_error", 0.0));
    d.validate();
    return d;
}

}  // namespace polar
