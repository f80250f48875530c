#include "polarbounds/subchannel_tree.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace polar {

namespace {

SubchannelNode make_node(LlrDensity d) {
    SubchannelNode n{std::move(d), 0.0, 0.0, 0.0};
    n.capacity = capacity(n.density);
    n.dispersion = dispersion(n.density);
    n.bhattacharyya = bhattacharyya(n.density);
    return n;
}

}  // namespace

SubchannelTree::SubchannelTree(const BmsChannel& ch, int lambda, const QuantizationParams& q)
    : channel_(ch), lambda_(lambda), quant_(q) {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    nodes_.reserve((2u << lambda) - 1);
    nodes_.push_back(make_node(density_from_channel(ch, q)));
    for (int idx = 0; minus_child(idx) < static_cast<int>((2u << lambda) - 1); ++idx) {
        nodes_.push_back(make_node(polar_minus(nodes_[idx].density)));
        nodes_.push_back(make_node(polar_plus(nodes_[idx].density)));
    }
}

SubchannelTree::SubchannelTree(BmsChannel ch, int lambda, QuantizationParams q, std::vector<SubchannelNode> nodes)
    : channel_(ch), lambda_(lambda), quant_(q), nodes_(std::move(nodes)) {}

int SubchannelTree::leaf_heap_index(int i) const {
    if (i < 0 || i >= leaf_count()) throw std::out_of_range("leaf index");
    int idx = 0;
    for (int bit = lambda_ - 1; bit >= 0; --bit) idx = ((i >> bit) & 1) ? plus_child(idx) : minus_child(idx);
    return idx;
}

double SubchannelTree::leaf_erasure(int i) const {
    if (channel_.kind() != BmsChannel::Kind::BEC) throw std::logic_error("leaf_erasure requires a BEC tree");
    const auto& d = leaf(i).density;
    return d.mass(d.center_index());
}

SubchannelTree build_tree(const BmsChannel& ch, int lambda, const QuantizationParams& q) {
    return SubchannelTree(ch, lambda, q);
}

std::string to_json(const SubchannelTree& t) {
    nlohmann::json j;
    j["type"] = "subchannel_tree";
    j["lambda"] = t.lambda();
    j["channel"] = {{"kind", to_string(t.channel().kind())}, {"parameter", t.channel().parameter()}};
    j["quantization"] = {{"bins", t.quantization().bins}, {"grid_half_width", t.quantization().grid_half_width}};
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (int i = 0; i < t.node_count(); ++i) nodes.push_back(nlohmann::json::parse(to_json(t.node(i).density)));
    return j.dump();
}

SubchannelTree tree_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("type", "") != "subchannel_tree") throw std::invalid_argument("not a subchannel_tree record");
    const int lambda = j.at("lambda").get<int>();
    BmsChannel ch(channel_kind_from_string(j.at("channel").at("kind").get<std::string>()),
                  j.at("channel").at("parameter").get<double>());
    QuantizationParams q{j.at("quantization").at("bins").get<int>(),
                         j.at("quantization").at("grid_half_width").get<double>()};
    std::vector<SubchannelNode> nodes;
    for (const auto& nj : j.at("nodes")) {
        LlrDensity d = density_from_json(nj.dump());
        SubchannelNode n{std::move(d), 0.0, 0.0, 0.0};
        n.capacity = capacity(n.density);
        n.dispersion = dispersion(n.density);
        n.bhattacharyya = bhattacharyya(n.density);
        nodes.push_back(std::move(n));
    }
    if (static_cast<int>(nodes.size()) != (2 << lambda) - 1) throw std::invalid_argument("node count mismatch");
    return SubchannelTree(ch, lambda, q, std::move(nodes));
}

}  // namespace polar
