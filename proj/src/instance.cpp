#include "mcst/instance.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"

namespace mcst {

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

int Graph::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i] == id) return static_cast<int>(i);
    return -1;
}

int Graph::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return static_cast<int>(i);
    return -1;
}

NodeMask Graph::mask_of(const std::vector<std::string>& ids) const {
    NodeMask mask = 0;
    for (const auto& id : ids) {
        int i = node_index(id);
        if (i < 0) throw Error(ErrorCode::ValidationFailed, "unknown node: " + id);
        mask |= NodeMask(1) << i;
    }
    return mask;
}

std::vector<std::string> Graph::ids_of(NodeMask mask) const {
    std::vector<std::string> ids;
    for (int i = 0; i < node_count(); ++i)
        if (mask & (NodeMask(1) << i)) ids.push_back(nodes_[static_cast<std::size_t>(i)]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::string Graph::set_key(NodeMask mask) const {
    std::string key;
    auto ids = ids_of(mask);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) key += ",";
        key += ids[i];
    }
    return key;
}

bool Graph::edge_inside(int e, NodeMask mask) const {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    return (mask >> ed.u & 1) && (mask >> ed.v & 1);
}

bool Graph::edge_crosses(int e, NodeMask mask) const {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    return (mask >> ed.u & 1) != (mask >> ed.v & 1);
}

bool Graph::connected() const {
    if (nodes_.empty()) return false;
    Dsu dsu(nodes_.size());
    for (const Edge& e : edges_) dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
    return dsu.components() == 1;
}

bool operator==(const Edge& a, const Edge& b) {
    return a.id == b.id && a.u == b.u && a.v == b.v && a.cost == b.cost;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.nodes() == b.nodes() && a.edges() == b.edges();
}

bool SetOrder::operator()(NodeMask a, NodeMask b) const {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return graph->ids_of(a) < graph->ids_of(b);
}

bool operator==(const Chain& a, const Chain& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.set(i).mask != b.set(i).mask || a.set(i).bound != b.set(i).bound) return false;
    return true;
}

bool operator==(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.chain == b.chain && a.lambda == b.lambda;
}

std::vector<int> FractionalPoint::support() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < values.size(); ++e)
        if (values[e] > 0) out.push_back(static_cast<int>(e));
    return out;
}

Rational FractionalPoint::total() const {
    Rational t = 0;
    for (const auto& v : values) t += v;
    return t;
}

bool operator==(const FractionalPoint& a, const FractionalPoint& b) {
    return a.values == b.values;
}

FractionalPoint point_in_unit_box(const Graph& graph, std::vector<Rational> values) {
    if (values.size() != static_cast<std::size_t>(graph.edge_count()))
        throw Error(ErrorCode::ValidationFailed, "point has wrong number of edge values");
    for (std::size_t e = 0; e < values.size(); ++e) {
        if (values[e] < 0 || values[e] > 1)
            throw Error(ErrorCode::ValidationFailed,
                        "value of " + graph.edge(static_cast<int>(e)).id + " outside [0,1]");
    }
    return FractionalPoint{std::move(values)};
}

std::vector<std::string> Tree::ids(const Graph& graph) const {
    std::vector<std::string> out;
    for (int e : edges) out.push_back(graph.edge(e).id);
    std::sort(out.begin(), out.end());
    return out;
}

bool Tree::contains(int e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool is_spanning_tree(const Graph& graph, const std::vector<int>& edges) {
    if (edges.size() + 1 != static_cast<std::size_t>(graph.node_count())) return false;
    Dsu dsu(static_cast<std::size_t>(graph.node_count()));
    for (int e : edges) {
        const Edge& ed = graph.edge(e);
        if (!dsu.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) return false;
    }
    return dsu.components() == 1;
}

Instance validate_instance(const RawInstance& raw) {
    std::vector<std::string> violations;

    std::set<std::string> node_ids(raw.nodes.begin(), raw.nodes.end());
    if (node_ids.size() != raw.nodes.size()) violations.push_back("duplicate node identifiers");
    if (raw.nodes.empty()) violations.push_back("graph has no nodes");
    if (raw.nodes.size() > kMaxNodes)
        violations.push_back("more than " + std::to_string(kMaxNodes) + " nodes");
    for (const auto& id : raw.nodes)
        if (id.empty() || id.find(',') != std::string::npos)
            violations.push_back("node identifier must be nonempty and comma-free: '" + id + "'");

    std::vector<Edge> edges;
    std::set<std::string> edge_ids;
    auto node_pos = [&](const std::string& id) {
        for (std::size_t i = 0; i < raw.nodes.size(); ++i)
            if (raw.nodes[i] == id) return static_cast<int>(i);
        return -1;
    };
    for (const RawEdge& re : raw.edges) {
        if (!edge_ids.insert(re.id).second)
            violations.push_back("duplicate edge identifier: " + re.id);
        int u = node_pos(re.u);
        int v = node_pos(re.v);
        if (u < 0) violations.push_back("edge " + re.id + " references unknown node " + re.u);
        if (v < 0) violations.push_back("edge " + re.id + " references unknown node " + re.v);
        if (u >= 0 && u == v) violations.push_back("edge " + re.id + " is a self-loop");
        if (re.cost < 0) violations.push_back("edge " + re.id + " has negative cost");
        if (u >= 0 && v >= 0 && u != v) edges.push_back(Edge{re.id, u, v, re.cost});
    }

    Graph graph(raw.nodes, edges);
    if (!raw.nodes.empty() && violations.empty() && !graph.connected())
        violations.push_back("graph is disconnected");

    std::vector<ChainSet> sets;
    NodeMask prev = 0;
    for (std::size_t i = 0; i < raw.chain.size(); ++i) {
        const RawChainSet& rc = raw.chain[i];
        NodeMask mask = 0;
        bool ok = true;
        for (const auto& id : rc.nodes) {
            int p = node_pos(id);
            if (p < 0) {
                violations.push_back("chain set " + std::to_string(i + 1) +
                                     " references unknown node " + id);
                ok = false;
            } else {
                mask |= NodeMask(1) << p;
            }
        }
        if (mask == 0) {
            violations.push_back("chain set " + std::to_string(i + 1) + " is empty");
            ok = false;
        }
        if (ok && i > 0) {
            bool nested = (prev & ~mask) == 0 && prev != mask;
            if (!nested)
                violations.push_back("chain is not strictly nested at set " + std::to_string(i + 1));
        }
        if (ok && !raw.nodes.empty() && mask == graph.full_mask())
            violations.push_back("chain set " + std::to_string(i + 1) +
                                 " equals the full node set");
        if (rc.bound < 1)
            violations.push_back("bound of chain set " + std::to_string(i + 1) +
                                 " must be a positive integer");
        sets.push_back(ChainSet{mask, rc.bound});
        prev = mask;
    }

    if (raw.lambda <= 1) violations.push_back("lambda must exceed 1");

    if (!violations.empty()) throw Error(ErrorCode::ValidationFailed, violations);
    return Instance{std::move(graph), Chain(std::move(sets)), raw.lambda};
}

std::vector<std::size_t> chain_sets_crossed(const Graph& graph, const Chain& chain, int e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (graph.edge_crosses(e, chain.set(i).mask)) out.push_back(i);
    return out;
}

std::vector<std::size_t> chain_sets_crossed(const Graph& graph, const Chain& chain,
                                            const std::string& edge_id) {
    int e = graph.edge_index(edge_id);
    if (e < 0) throw Error(ErrorCode::UnknownEdge, edge_id);
    return chain_sets_crossed(graph, chain, e);
}

Rational cut_value(const Graph& graph, const std::vector<Rational>& values, NodeMask set) {
    Rational total = 0;
    for (int e = 0; e < graph.edge_count(); ++e)
        if (graph.edge_crosses(e, set)) total += values[static_cast<std::size_t>(e)];
    return total;
}

Rational inside_value(const Graph& graph, const std::vector<Rational>& values, NodeMask set) {
    Rational total = 0;
    for (int e = 0; e < graph.edge_count(); ++e)
        if (graph.edge_inside(e, set)) total += values[static_cast<std::size_t>(e)];
    return total;
}

}  // namespace mcst
