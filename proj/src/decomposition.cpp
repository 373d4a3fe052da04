#include "mcst/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"

namespace mcst {

namespace {

bool laminar_pair(NodeMask a, NodeMask b) {
    NodeMask common = a & b;
    return common == 0 || common == a || common == b;
}

}  // namespace

bool LaminarFamily::contains(NodeMask set) const {
    return std::find(sets.begin(), sets.end(), set) != sets.end();
}

bool LaminarFamily::laminar_with_all(NodeMask set) const {
    for (NodeMask member : sets)
        if (!laminar_pair(member, set)) return false;
    return true;
}

int Piece::child_of_node(int node) const {
    for (std::size_t c = 0; c < children.size(); ++c)
        if (children[c] >> node & 1) return static_cast<int>(c);
    return -1;
}

const Piece& LaminarDecomposition::piece_of(NodeMask set) const {
    for (std::size_t i = 0; i < family.sets.size(); ++i)
        if (family.sets[i] == set) return pieces[i];
    throw Error(ErrorCode::UnknownPiece, "set is not a member of the laminar family");
}

std::vector<NodeMask> tight_sets(const FractionalPoint& x, const Graph& graph) {
    if (graph.node_count() > kMaxNodes)
        throw Error(ErrorCode::TooLarge, "tight-set enumeration guard exceeded");
    if (x.values.size() != static_cast<std::size_t>(graph.edge_count()))
        throw Error(ErrorCode::NotInPolytope, "point has wrong number of edge values");

    for (int e = 0; e < graph.edge_count(); ++e)
        if (x.values[static_cast<std::size_t>(e)] < 0)
            throw Error(ErrorCode::NotInPolytope, "negative value on " + graph.edge(e).id);

    NodeMask full = graph.full_mask();
    if (inside_value(graph, x.values, full) != graph.node_count() - 1)
        throw Error(ErrorCode::NotInPolytope, "x(E) != |V|-1");

    std::vector<NodeMask> tight;
    for (NodeMask set = 1; set <= full; ++set) {
        Rational mass = inside_value(graph, x.values, set);
        Rational bound = std::popcount(set) - 1;
        if (mass > bound && set != full)
            throw Error(ErrorCode::NotInPolytope,
                        "subset constraint violated at " + graph.set_key(set));
        if (mass == bound) tight.push_back(set);
    }
    std::sort(tight.begin(), tight.end(), SetOrder{&graph});
    return tight;
}

LaminarDecomposition laminar_decomposition(const FractionalPoint& x, const Graph& graph,
                                           const std::vector<NodeMask>& seed) {
    std::vector<NodeMask> tight = tight_sets(x, graph);

    LaminarFamily family;
    std::vector<NodeMask> ordered_seed = seed;
    std::sort(ordered_seed.begin(), ordered_seed.end(), SetOrder{&graph});
    for (NodeMask s : ordered_seed) {
        if (family.contains(s)) continue;
        if (std::find(tight.begin(), tight.end(), s) == tight.end())
            throw Error(ErrorCode::InternalInvariant,
                        "seed set " + graph.set_key(s) + " is not tight at x");
        if (!family.laminar_with_all(s))
            throw Error(ErrorCode::InternalInvariant, "seed family is not laminar");
        family.sets.push_back(s);
    }
    for (NodeMask s : tight) {
        if (family.contains(s)) continue;
        if (family.laminar_with_all(s)) family.sets.push_back(s);
    }
    std::sort(family.sets.begin(), family.sets.end(), SetOrder{&graph});

    LaminarDecomposition decomp;
    decomp.point = x;
    decomp.family = family;
    decomp.pieces.reserve(family.sets.size());
    for (NodeMask set : family.sets) {
        Piece piece;
        piece.set = set;
        // children: maximal family members properly contained in set
        for (NodeMask cand : family.sets) {
            if (cand == set || (cand & ~set) != 0) continue;
            bool maximal = true;
            for (NodeMask other : family.sets) {
                if (other == set || other == cand) continue;
                if ((cand & ~other) == 0 && (other & ~set) == 0) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) piece.children.push_back(cand);
        }
        for (int e = 0; e < graph.edge_count(); ++e) {
            if (!graph.edge_inside(e, set)) continue;
            bool in_child = false;
            for (NodeMask child : piece.children)
                if (graph.edge_inside(e, child)) {
                    in_child = true;
                    break;
                }
            if (!in_child) piece.piece_edges.push_back(e);
        }
        decomp.pieces.push_back(std::move(piece));
    }
    return decomp;
}

PieceRestriction restrict_to_piece(const FractionalPoint& x, const LaminarDecomposition& decomp,
                                   NodeMask set, const Graph& graph) {
    const Piece& piece = decomp.piece_of(set);
    PieceRestriction out{&piece, {}};
    Rational mass = 0;
    for (int e : piece.piece_edges) {
        out.values.push_back(x.values[static_cast<std::size_t>(e)]);
        mass += x.values[static_cast<std::size_t>(e)];
    }
    std::size_t piece_nodes = piece.children.empty() ? 1 : piece.children.size();
    if (mass != Rational(static_cast<long>(piece_nodes)) - 1)
        throw Error(ErrorCode::InternalInvariant,
                    "restriction of x to " + graph.set_key(set) +
                        " is not a fractional spanning tree (mass mismatch)");
    // subset constraints of the contracted piece, by enumeration
    std::size_t k = piece.children.size();
    if (k >= 2) {
        for (std::uint32_t sub = 1; sub + 1 < (std::uint32_t(1) << k); ++sub) {
            int cnt = std::popcount(sub);
            if (cnt < 2) continue;
            Rational inside = 0;
            for (std::size_t idx = 0; idx < piece.piece_edges.size(); ++idx) {
                int e = piece.piece_edges[idx];
                int cu = piece.child_of_node(graph.edge(e).u);
                int cv = piece.child_of_node(graph.edge(e).v);
                if ((sub >> cu & 1) && (sub >> cv & 1)) inside += out.values[idx];
            }
            if (inside > cnt - 1)
                throw Error(ErrorCode::InternalInvariant,
                            "restriction violates a subset constraint of the piece");
        }
    }
    return out;
}

}  // namespace mcst
