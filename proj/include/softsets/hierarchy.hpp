#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "softsets/core.hpp"

namespace softsets {

struct TreeNode {
    std::string name;
    std::optional<std::string> parent;
};

struct TreeSoftInstance {
    Universe universe;
    Subset base;  // H
    std::vector<TreeNode> nodes;
    std::map<std::string, Subset> assignment;  // partial: node -> subset of H
    std::string rule = "intersection";

    bool has_node(const std::string& name) const;
};

// Intersection of the assigned nodes in the selection; the base set when none is assigned.
Subset treesoft_eval(const TreeSoftInstance& inst, const std::set<std::string>& nodes);

struct ForestSoftInstance {
    Universe universe;
    Subset base;
    std::vector<std::pair<std::string, TreeSoftInstance>> trees;
};

// Union over the trees meeting the selection of each tree's evaluation on its share.
Subset forestsoft_eval(const ForestSoftInstance& inst, const std::set<std::string>& nodes);

using Edge = std::pair<std::string, std::string>;

struct GraphicSoftInstance {
    Universe universe;
    std::vector<std::string> vertices;
    std::map<std::string, Subset> vertexSets;
    std::map<Edge, Subset> edgeSets;  // endpoints stored in vertex-list order

    Edge edge(const std::string& a, const std::string& b) const;
};

Subset graphicsoft_eval(const GraphicSoftInstance& inst, const std::set<std::string>& vertices,
                        const std::vector<Edge>& edges);

struct CycleSoftInstance {
    Universe universe;
    std::vector<std::string> cycle;
    std::map<std::string, Subset> values;
};

Subset cyclesoft_eval(const CycleSoftInstance& inst, const std::set<std::string>& vertices);

struct ClusterSoftInstance {
    Universe universe;
    std::vector<std::pair<std::string, SoftSet>> members;
    std::map<std::string, std::vector<std::string>> clusters;  // cluster -> member names
};

Subset clustersoft_eval(const ClusterSoftInstance& inst, const std::string& cluster);

struct DagSoftInstance {
    SoftSet soft;
    std::vector<Edge> edges;  // a -> b means b refines a
};

struct DagCheck {
    ValidationReport report;
    std::vector<std::string> order;  // one topological order, empty when cyclic
};

DagCheck dagsoft_check(const DagSoftInstance& inst);

ValidationReport validate(const TreeSoftInstance& inst);
ValidationReport validate(const ForestSoftInstance& inst);
ValidationReport validate(const GraphicSoftInstance& inst);
ValidationReport validate(const CycleSoftInstance& inst);
ValidationReport validate(const ClusterSoftInstance& inst);
ValidationReport validate(const DagSoftInstance& inst);

}  // namespace softsets
