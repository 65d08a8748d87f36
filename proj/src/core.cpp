#include "rxlimit/core.hpp"

#include <array>

namespace rxlimit {

namespace {

const std::array<NodePreset, 3> kNodePresets = {{
    {"5nm", SemiconductorNode(5.0, kGap5nm),
     "published switching-energy gap estimate for 5 nm silicon"},
    {"10nm", SemiconductorNode(10.0, kGap10nm),
     "calibrated so the default power budget yields a 2.17 Gbps ceiling"},
    {"14nm", SemiconductorNode(14.0, kGap14nm),
     "calibrated so the default power budget yields a 1.55 Gbps ceiling"},
}};

}  // namespace

std::span<const NodePreset> known_nodes() { return kNodePresets; }

std::optional<SemiconductorNode> find_node(std::string_view name) {
    for (const NodePreset& preset : kNodePresets) {
        if (preset.name == name) return preset.node;
    }
    return std::nullopt;
}

}  // namespace rxlimit
