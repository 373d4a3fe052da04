#ifndef MCST_DECOMPOSITION_HPP
#define MCST_DECOMPOSITION_HPP

#include <vector>

#include "mcst/instance.hpp"
#include "mcst/rational.hpp"

namespace mcst {

/// Pairwise nested-or-disjoint node sets; always contains V and every
/// singleton, ordered by (size, lexicographic node order).
struct LaminarFamily {
    std::vector<NodeMask> sets;

    bool contains(NodeMask set) const;
    bool laminar_with_all(NodeMask set) const;
};

/// G_L: the children of L contracted inside (L, E(L)). piece_edges are the
/// edges of E(L) lying inside no child; a singleton piece has one node and
/// no edges.
struct Piece {
    NodeMask set = 0;
    std::vector<NodeMask> children;   // one per contracted piece node
    std::vector<int> piece_edges;     // ascending edge indices

    int child_of_node(int node) const;  // index into children, -1 if absent
};

struct LaminarDecomposition {
    FractionalPoint point;
    LaminarFamily family;
    std::vector<Piece> pieces;  // aligned with family.sets

    const Piece& piece_of(NodeMask set) const;  // throws UNKNOWN_PIECE
};

/// All nonempty A with x(E(A)) = |A|-1, by subset enumeration, ordered by
/// (size, lex). Rejects x outside the spanning-tree polytope.
std::vector<NodeMask> tight_sets(const FractionalPoint& x, const Graph& graph);

/// Greedy maximal laminar family of tight sets (seeded members first), plus
/// the contracted piece for every member.
LaminarDecomposition laminar_decomposition(const FractionalPoint& x, const Graph& graph,
                                           const std::vector<NodeMask>& seed = {});

/// x restricted to the piece edges of L; asserts the restriction is a
/// fractional spanning tree of G_L.
struct PieceRestriction {
    const Piece* piece;
    std::vector<Rational> values;  // aligned with piece->piece_edges
};
PieceRestriction restrict_to_piece(const FractionalPoint& x, const LaminarDecomposition& decomp,
                                   NodeMask set, const Graph& graph);

}  // namespace mcst

#endif
