#pragma once

#include <string>

namespace polar {

// Parametric description of a binary memoryless symmetric channel.
//
// Parameter meaning by kind:
//   BEC    - erasure probability eps in [0, 1]
//   BSC    - crossover probability p in [0, 1/2]
//   BIAWGN - noise standard deviation sigma > 0, unit-energy antipodal
//            signaling (SNR = 1/sigma^2)
class BmsChannel {
public:
    enum class Kind { BEC, BSC, BIAWGN };

    BmsChannel(Kind kind, double parameter);

    static BmsChannel bec(double eps) { return {Kind::BEC, eps}; }
    static BmsChannel bsc(double p) { return {Kind::BSC, p}; }
    static BmsChannel biawgn(double sigma) { return {Kind::BIAWGN, sigma}; }
    static BmsChannel biawgn_from_snr_db(double snr_db);

    Kind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    double snr_db() const;  // BIAWGN only

    std::string label() const;

private:
    Kind kind_;
    double parameter_;
};

std::string to_string(BmsChannel::Kind kind);
BmsChannel::Kind channel_kind_from_string(const std::string& name);

}  // namespace polar
