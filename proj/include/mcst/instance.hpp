#ifndef MCST_INSTANCE_HPP
#define MCST_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mcst/rational.hpp"

namespace mcst {

/// Node subsets are bitmasks over node indices; every subset-enumeration
/// routine in this library is guarded by this envelope.
using NodeMask = std::uint32_t;
inline constexpr int kMaxNodes = 18;

struct Edge {
    std::string id;
    int u = -1;
    int v = -1;
    Rational cost;
};

/// Undirected connected multigraph. Self-loops are rejected at construction;
/// parallel edges are allowed (contraction creates them).
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<std::string> nodes, std::vector<Edge> edges);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    int node_index(const std::string& id) const;  // -1 when absent
    int edge_index(const std::string& id) const;  // -1 when absent

    NodeMask full_mask() const { return (NodeMask(1) << node_count()) - 1; }
    NodeMask mask_of(const std::vector<std::string>& ids) const;
    /// Lexicographically sorted identifiers of the masked nodes.
    std::vector<std::string> ids_of(NodeMask mask) const;
    /// Canonical "id1,id2,..." key for a node set.
    std::string set_key(NodeMask mask) const;

    bool edge_inside(int e, NodeMask mask) const;
    bool edge_crosses(int e, NodeMask mask) const;
    bool connected() const;

  private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
};

bool operator==(const Edge& a, const Edge& b);
bool operator==(const Graph& a, const Graph& b);

/// Orders node sets by (size, lexicographic sorted-identifier sequence); the
/// deterministic tie-break used throughout decomposition and separation.
struct SetOrder {
    const Graph* graph;
    bool operator()(NodeMask a, NodeMask b) const;
};

struct ChainSet {
    NodeMask mask = 0;
    long bound = 0;
};

/// Strictly nested family S_1 < S_2 < ... < S_l < V with positive bounds.
class Chain {
  public:
    Chain() = default;
    explicit Chain(std::vector<ChainSet> sets) : sets_(std::move(sets)) {}

    std::size_t size() const { return sets_.size(); }
    const ChainSet& set(std::size_t i) const { return sets_[i]; }
    const std::vector<ChainSet>& sets() const { return sets_; }

  private:
    std::vector<ChainSet> sets_;
};

bool operator==(const Chain& a, const Chain& b);

struct Instance {
    Graph graph;
    Chain chain;
    Rational lambda;
};

bool operator==(const Instance& a, const Instance& b);

/// Rational-valued vector over the graph's edges. Values live in [0,1] for
/// polytope points; raw vectors (e.g. separation inputs) only need x >= 0.
struct FractionalPoint {
    std::vector<Rational> values;

    std::vector<int> support() const;
    Rational total() const;
};

bool operator==(const FractionalPoint& a, const FractionalPoint& b);

/// Checked constructor: rejects values outside [0,1] or size mismatches.
FractionalPoint point_in_unit_box(const Graph& graph, std::vector<Rational> values);

struct Tree {
    std::vector<int> edges;  // ascending edge indices

    std::vector<std::string> ids(const Graph& graph) const;
    bool contains(int e) const;
};

bool is_spanning_tree(const Graph& graph, const std::vector<int>& edges);

// -- raw (pre-validation) instance description ------------------------------

struct RawEdge {
    std::string id, u, v;
    Rational cost;
};

struct RawChainSet {
    std::vector<std::string> nodes;
    long bound = 0;
};

struct RawInstance {
    std::vector<std::string> nodes;
    std::vector<RawEdge> edges;
    std::vector<RawChainSet> chain;
    Rational lambda = Rational(2);
};

/// Validates every structural invariant at once; throws
/// Error(ValidationFailed, all violations) on any failure.
Instance validate_instance(const RawInstance& raw);

// -- spec operations ---------------------------------------------------------

/// Indices (0-based) of chain sets crossed by the edge, in chain order. For a
/// chain this is always a contiguous interval.
std::vector<std::size_t> chain_sets_crossed(const Graph& graph, const Chain& chain,
                                            const std::string& edge_id);
std::vector<std::size_t> chain_sets_crossed(const Graph& graph, const Chain& chain, int e);

/// x(delta(S)): mass of edges with exactly one endpoint in S.
Rational cut_value(const Graph& graph, const std::vector<Rational>& values, NodeMask set);

/// x(E(S)): mass of edges with both endpoints in S.
Rational inside_value(const Graph& graph, const std::vector<Rational>& values, NodeMask set);

}  // namespace mcst

#endif
