#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xc/nvalue.hpp"

namespace xc {

// The structure a round of evaluation leaves behind and broadcasts: one node
// per visited expression, carrying a payload at application/exchange nodes.
// `origin` ties a node to the expression id that produced it; 0 means unknown
// (e.g. a tree read back from text).
struct ValueTree {
    std::optional<NValue> payload;
    std::vector<ValueTree> children;
    std::uint32_t origin = 0;
};

ValueTree branch(std::vector<ValueTree> children = {}, std::uint32_t origin = 0);
ValueTree payload_node(NValue payload, std::vector<ValueTree> children = {},
                       std::uint32_t origin = 0);

bool tree_equal(const ValueTree& a, const ValueTree& b);  // ignores origins

// Trees received from neighbours, keyed by the sending device (the executing
// device's own previous tree appears under its own id).
using TreeMap = std::map<DeviceId, ValueTree>;

// Keeps each neighbour's i-th subtree (1-based); entries without one vanish.
TreeMap project(const TreeMap& trees, size_t i);

// Keeps entries whose root payload (at the sender's own id) is a function
// aligning with `name`.
TreeMap filter_by_function(const TreeMap& trees, const std::string& name);

// Text form: B(child; child) for payload-free nodes, P(nvalue; child; child)
// otherwise. Origins are not serialized.
std::string serialize_tree(const ValueTree& t);
ValueTree parse_tree(const std::string& text);

}  // namespace xc
