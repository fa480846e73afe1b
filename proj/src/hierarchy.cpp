#include "softsets/hierarchy.hpp"

#include <algorithm>
#include <queue>

namespace softsets {

bool TreeSoftInstance::has_node(const std::string& name) const {
    return std::any_of(nodes.begin(), nodes.end(),
                       [&](const TreeNode& n) { return n.name == name; });
}

Subset treesoft_eval(const TreeSoftInstance& inst, const std::set<std::string>& nodes) {
    std::optional<Subset> acc;
    for (const auto& name : nodes) {
        if (!inst.has_node(name)) throw UnknownNode("unknown node '" + name + "'");
        auto it = inst.assignment.find(name);
        if (it == inst.assignment.end()) continue;
        acc = acc ? intersect(*acc, it->second) : it->second;
    }
    return acc ? *acc : inst.base;
}

Subset forestsoft_eval(const ForestSoftInstance& inst, const std::set<std::string>& nodes) {
    for (const auto& name : nodes) {
        bool found = std::any_of(inst.trees.begin(), inst.trees.end(),
                                 [&](const auto& t) { return t.second.has_node(name); });
        if (!found) throw UnknownNode("unknown node '" + name + "'");
    }
    Subset out;
    for (const auto& [tree_name, tree] : inst.trees) {
        std::set<std::string> share;
        for (const auto& name : nodes)
            if (tree.has_node(name)) share.insert(name);
        if (!share.empty()) out = unite(out, treesoft_eval(tree, share));
    }
    return out;
}

Edge GraphicSoftInstance::edge(const std::string& a, const std::string& b) const {
    auto ia = std::find(vertices.begin(), vertices.end(), a);
    auto ib = std::find(vertices.begin(), vertices.end(), b);
    if (ia == vertices.end() || ib == vertices.end())
        throw NotASubgraph("edge {" + a + "," + b + "} names an unknown vertex");
    return ia <= ib ? Edge{a, b} : Edge{b, a};
}

Subset graphicsoft_eval(const GraphicSoftInstance& inst, const std::set<std::string>& vertices,
                        const std::vector<Edge>& edges) {
    Subset acc = inst.universe.full();
    for (const auto& v : vertices) {
        auto it = inst.vertexSets.find(v);
        if (it == inst.vertexSets.end()) throw NotASubgraph("unknown vertex '" + v + "'");
        acc = intersect(acc, it->second);
    }
    for (const auto& [a, b] : edges) {
        Edge e = inst.edge(a, b);
        auto it = inst.edgeSets.find(e);
        if (it == inst.edgeSets.end())
            throw NotASubgraph("{" + a + "," + b + "} is not an edge of the attribute graph");
        if (!vertices.count(a) || !vertices.count(b))
            throw NotASubgraph("edge {" + a + "," + b + "} has an endpoint outside the vertex set");
        acc = intersect(acc, it->second);
    }
    return acc;
}

Subset cyclesoft_eval(const CycleSoftInstance& inst, const std::set<std::string>& vertices) {
    Subset acc = inst.universe.full();
    for (const auto& v : vertices) {
        auto it = inst.values.find(v);
        if (it == inst.values.end()) throw UnknownNode("unknown cycle vertex '" + v + "'");
        acc = intersect(acc, it->second);
    }
    return acc;
}

Subset clustersoft_eval(const ClusterSoftInstance& inst, const std::string& cluster) {
    auto it = inst.clusters.find(cluster);
    if (it == inst.clusters.end()) throw UnknownCluster("unknown cluster '" + cluster + "'");
    Subset out;
    for (const auto& member : it->second) {
        auto m = std::find_if(inst.members.begin(), inst.members.end(),
                              [&](const auto& p) { return p.first == member; });
        if (m == inst.members.end()) throw UnknownIdentifier("unknown member '" + member + "'");
        for (const auto& [param, value] : m->second.values) out = unite(out, value);
    }
    return out;
}

DagCheck dagsoft_check(const DagSoftInstance& inst) {
    DagCheck out{{"dagsoft", {}}, {}};
    auto& r = out.report;
    const auto& F = inst.soft.values;
    std::map<std::string, std::vector<std::string>> succ;
    std::map<std::string, std::size_t> indegree;
    for (const auto& [p, v] : F) indegree[p] = 0;
    bool endpoints_ok = true;
    for (const auto& [a, b] : inst.edges) {
        if (!F.count(a) || !F.count(b)) {
            r.add("UNKNOWN_PARAM", "/edges", {a, b}, "edge names an unknown parameter");
            endpoints_ok = false;
            continue;
        }
        succ[a].push_back(b);
        ++indegree[b];
        Subset gap = subtract(F.at(b), F.at(a));
        if (!gap.empty()) {
            std::vector<std::string> w{a, b};
            for (const auto& x : inst.soft.universe.names(gap)) w.push_back(x);
            r.add("COHERENCE", "/edges", w, "F(" + b + ") is not contained in F(" + a + ")");
        }
    }
    if (!endpoints_ok) return out;

    std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
    for (const auto& [p, d] : indegree)
        if (d == 0) ready.push(p);
    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string p = ready.top();
        ready.pop();
        order.push_back(p);
        for (const auto& q : succ[p])
            if (--indegree[q] == 0) ready.push(q);
    }
    if (order.size() != F.size()) {
        std::vector<std::string> stuck;
        for (const auto& [p, d] : indegree)
            if (d > 0) stuck.push_back(p);
        r.add("ACYCLICITY", "/edges", stuck, "the parameter graph has a directed cycle");
    } else {
        out.order = std::move(order);
    }
    return out;
}

static void check_tree(const TreeSoftInstance& inst, const std::string& prefix, ValidationReport& r) {
    std::map<std::string, const TreeNode*> by_name;
    std::size_t roots = 0;
    for (const auto& n : inst.nodes) {
        if (!by_name.emplace(n.name, &n).second)
            r.add("DUPLICATE_NODE", prefix + "/nodes", {n.name}, "node name repeated");
        if (!n.parent) ++roots;
    }
    if (roots != 1)
        r.add("ROOT", prefix + "/nodes", {}, "tree needs exactly one root, found " + std::to_string(roots));
    for (const auto& n : inst.nodes) {
        if (n.parent && !by_name.count(*n.parent)) {
            r.add("UNKNOWN_PARENT", prefix + "/nodes", {n.name, *n.parent}, "parent is not a node");
            continue;
        }
        const TreeNode* cur = &n;
        std::size_t steps = 0;
        while (cur && cur->parent && steps <= inst.nodes.size()) {
            auto it = by_name.find(*cur->parent);
            cur = it == by_name.end() ? nullptr : it->second;
            ++steps;
        }
        if (steps > inst.nodes.size())
            r.add("CYCLE", prefix + "/nodes", {n.name}, "parent links form a cycle");
    }
    for (const auto& [name, value] : inst.assignment) {
        if (!by_name.count(name))
            r.add("UNKNOWN_NODE", prefix + "/assignment", {name}, "assignment to an unknown node");
        Subset outside = subtract(value, inst.base);
        if (!outside.empty()) {
            std::vector<std::string> w{name};
            for (const auto& x : inst.universe.names(outside)) w.push_back(x);
            r.add("NOT_IN_BASE", prefix + "/assignment/" + name, w, "assigned set leaves the base set");
        }
    }
    if (inst.rule != "intersection")
        r.add("RULE", prefix + "/rule", {inst.rule}, "only the intersection rule is supported");
}

ValidationReport validate(const TreeSoftInstance& inst) {
    ValidationReport r{"treesoft", {}};
    check_tree(inst, "", r);
    return r;
}

ValidationReport validate(const ForestSoftInstance& inst) {
    ValidationReport r{"forestsoft", {}};
    std::set<std::string> seen;
    for (std::size_t i = 0; i < inst.trees.size(); ++i) {
        const auto& [name, tree] = inst.trees[i];
        std::string prefix = "/trees/" + std::to_string(i);
        for (const auto& n : tree.nodes)
            if (!seen.insert(n.name).second)
                r.add("DUPLICATE_NODE", prefix + "/nodes", {n.name}, "node name used by two trees");
        if (tree.base != inst.base || !(tree.universe == inst.universe))
            r.add("TREE_BASE", prefix, {name}, "tree does not share the forest base set");
        check_tree(tree, prefix, r);
    }
    return r;
}

ValidationReport validate(const GraphicSoftInstance& inst) {
    ValidationReport r{"graphicsoft", {}};
    std::set<std::string> vs;
    for (const auto& v : inst.vertices)
        if (!vs.insert(v).second) r.add("DUPLICATE_VERTEX", "/vertices", {v}, "vertex repeated");
    for (const auto& v : inst.vertices)
        if (!inst.vertexSets.count(v))
            r.add("VERTEX_SET_MISSING", "/vertexSets", {v}, "vertex has no assigned set");
    for (const auto& [v, s] : inst.vertexSets)
        if (!vs.count(v)) r.add("UNKNOWN_VERTEX", "/vertexSets", {v}, "set for an unknown vertex");
    for (const auto& [e, s] : inst.edgeSets) {
        if (!vs.count(e.first) || !vs.count(e.second) || e.first == e.second)
            r.add("EDGE_ENDPOINT", "/edges", {e.first, e.second},
                  "edge must join two distinct known vertices");
    }
    return r;
}

ValidationReport validate(const CycleSoftInstance& inst) {
    ValidationReport r{"cyclesoft", {}};
    if (inst.cycle.size() < 3) r.add("CYCLE_TOO_SHORT", "/cycle", {}, "a cycle needs at least 3 vertices");
    std::set<std::string> seen;
    for (const auto& a : inst.cycle) {
        if (!seen.insert(a).second) r.add("DUPLICATE_PARAM", "/cycle", {a}, "parameter repeated");
        if (!inst.values.count(a)) r.add("VALUE_MISSING", "/values", {a}, "no value for parameter");
    }
    for (const auto& [a, v] : inst.values)
        if (!seen.count(a)) r.add("VALUE_EXTRA", "/values", {a}, "value for a parameter off the cycle");
    return r;
}

ValidationReport validate(const ClusterSoftInstance& inst) {
    ValidationReport r{"clustersoft", {}};
    std::map<std::string, std::string> owner;
    std::set<std::string> names;
    for (const auto& [name, soft] : inst.members) {
        if (!names.insert(name).second) r.add("DUPLICATE_MEMBER", "/members", {name}, "member name repeated");
        if (!(soft.universe == inst.universe))
            r.add("MEMBER_UNIVERSE", "/members", {name}, "member over a different universe");
    }
    for (const auto& [cluster, members] : inst.clusters)
        for (const auto& m : members) {
            if (!names.count(m)) {
                r.add("UNKNOWN_MEMBER", "/clusters/" + cluster, {cluster, m}, "unknown member");
                continue;
            }
            auto [it, fresh] = owner.emplace(m, cluster);
            if (!fresh)
                r.add("OVERLAP", "/clusters/" + cluster, {it->second, cluster, m},
                      "member belongs to two clusters");
        }
    for (const auto& name : names)
        if (!owner.count(name)) r.add("UNCOVERED", "/clusters", {name}, "member is in no cluster");
    return r;
}

ValidationReport validate(const DagSoftInstance& inst) { return dagsoft_check(inst).report; }

}  // namespace softsets
