// The 2^lambda polarized sub-channels of a BMS channel, with per-node
// cached functionals. Nodes are stored heap-style (root 0, minus child
// 2k+1, plus child 2k+2); leaf i is reached by reading the bits of i from
// the most significant position down, 0 = minus, so leaf 0 is the all-minus
// sub-channel and leaves below 2^(lambda-1) descend from W-.
#pragma once

#include <string>
#include <vector>

#include "polarbounds/channel.hpp"
#include "polarbounds/llr_density.hpp"

namespace polar {

struct SubchannelNode {
    LlrDensity density;
    double capacity;       // bits
    double dispersion;     // bits^2
    double bhattacharyya;
};

class SubchannelTree {
public:
    SubchannelTree(const BmsChannel& ch, int lambda, const QuantizationParams& q);

    int lambda() const { return lambda_; }
    int leaf_count() const { return 1 << lambda_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    const SubchannelNode& node(int heap_index) const { return nodes_[heap_index]; }
    const SubchannelNode& root() const { return nodes_[0]; }
    const SubchannelNode& leaf(int i) const { return nodes_[leaf_heap_index(i)]; }
    int leaf_heap_index(int i) const;

    static int minus_child(int heap_index) { return 2 * heap_index + 1; }
    static int plus_child(int heap_index) { return 2 * heap_index + 2; }

    const BmsChannel& channel() const { return channel_; }
    const QuantizationParams& quantization() const { return quant_; }

    // Erasure rate of leaf i; valid only for BEC trees (where it is exact).
    double leaf_erasure(int i) const;

private:
    friend SubchannelTree tree_from_json(const std::string&);
    SubchannelTree(BmsChannel ch, int lambda, QuantizationParams q, std::vector<SubchannelNode> nodes);

    BmsChannel channel_;
    int lambda_;
    QuantizationParams quant_;
    std::vector<SubchannelNode> nodes_;
};

SubchannelTree build_tree(const BmsChannel& ch, int lambda, const QuantizationParams& q = {});

std::string to_json(const SubchannelTree& t);
SubchannelTree tree_from_json(const std::string& text);

}  // namespace polar
