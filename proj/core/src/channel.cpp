#include "polarbounds/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polar {

BmsChannel::BmsChannel(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {
    switch (kind_) {
        case Kind::BEC:
            if (!(parameter >= 0.0 && parameter <= 1.0))
                throw std::invalid_argument("BEC erasure probability must be in [0,1]");
            break;
        case Kind::BSC:
            if (!(parameter >= 0.0 && parameter <= 0.5))
                throw std::invalid_argument("BSC crossover probability must be in [0,1/2]");
            break;
        case Kind::BIAWGN:
            if (!(parameter > 0.0)) throw std::invalid_argument("BIAWGN sigma must be positive");
            break;
    }
}

BmsChannel BmsChannel::biawgn_from_snr_db(double snr_db) {
    return biawgn(std::pow(10.0, -snr_db / 20.0));
}

double BmsChannel::snr_db() const {
    if (kind_ != Kind::BIAWGN) throw std::logic_error("snr_db is defined for BIAWGN only");
    return -20.0 * std::log10(parameter_);
}

std::string BmsChannel::label() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::BEC: os << "bec(" << parameter_ << ")"; break;
        case Kind::BSC: os << "bsc(" << parameter_ << ")"; break;
        case Kind::BIAWGN: os << "biawgn(sigma=" << parameter_ << ")"; break;
    }
    return os.str();
}

std::string to_string(BmsChannel::Kind kind) {
    switch (kind) {
        case BmsChannel::Kind::BEC: return "bec";
        case BmsChannel::Kind::BSC: return "bsc";
        case BmsChannel::Kind::BIAWGN: return "biawgn";
    }
    return "?";
}

BmsChannel::Kind channel_kind_from_string(const std::string& name) {
    if (name == "bec") return BmsChannel::Kind::BEC;
    if (name == "bsc") return BmsChannel::Kind::BSC;
    if (name == "biawgn") return BmsChannel::Kind::BIAWGN;
    throw std::invalid_argument("unknown channel kind: " + name);
}

}  // namespace polar
