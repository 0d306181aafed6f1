#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "outf3/exact_linear.hpp"

namespace outf3::graphact {

/// Finite multigraph. Edges carry an iota (source) and tau (target) endpoint;
/// loops and parallel edges are allowed, and connectivity is computed rather
/// than assumed. Edge identity is explicit so group actions and orientation
/// flips stay unambiguous.
struct FiniteGraph {
    struct Edge {
        std::string name;
        int iota;
        int tau;
    };

    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;

    std::size_t vertex_count() const { return vertex_names.size(); }
    std::size_t edge_count() const { return edges.size(); }

    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;

    /// Loops count twice.
    std::size_t valence(int vertex) const;
    std::size_t component_count() const;
    bool is_connected() const;

    /// One declaration per line: "vertex <name>" / "edge <name> <iota> <tau>".
    static FiniteGraph parse(std::istream& in);
    static FiniteGraph parse(const std::string& text);
    std::string serialize() const;
};

/// Rank of a connected graph: E - V + 1.
int graph_rank(const FiniteGraph& g);

/// The weight space: functions f on edges with, at every vertex, the sum of
/// incoming weights equal to the sum of outgoing ones. Loops cancel out of
/// the constraint. Dimension is E - V + #components.
exactlin::Subspace cycle_space(const FiniteGraph& g);

/// Morphism of graphs: vertices map to vertices; each edge maps either onto
/// an edge (with +-1 orientation) or collapses to a vertex.
struct GraphMorphism {
    struct EdgeImage {
        int edge = -1;    // target edge, or -1 when collapsed
        int sign = 1;     // orientation, meaningful when edge >= 0
        int vertex = -1;  // target vertex when collapsed
        bool collapsed() const { return edge < 0; }
    };

    FiniteGraph domain;
    FiniteGraph codomain;
    std::vector<int> vertex_map;
    std::vector<EdgeImage> edge_map;

    /// Endpoint compatibility. Throws PreconditionError when violated.
    void validate() const;

    bool is_automorphism() const;
    bool operator==(const GraphMorphism& rhs) const {
        return vertex_map == rhs.vertex_map && same_edge_images(rhs);
    }
    bool same_edge_images(const GraphMorphism& rhs) const;

    GraphMorphism inverse() const;  // automorphisms only
    static GraphMorphism identity(const FiniteGraph& g);
};

/// g after f.
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

/// Contracts each connected component of the chosen edge set to a vertex.
/// Point preimages of the returned morphism are connected by construction.
std::pair<FiniteGraph, GraphMorphism> collapse(const FiniteGraph& g,
                                               const std::set<int>& edge_ids);

/// Pushforward of weights on cycle spaces, as a matrix with respect to the
/// canonical cycle-space bases of domain and codomain. Collapsing maps give
/// surjections; automorphisms give invertible integer matrices. Functorial.
exactlin::RationalMatrix induced_homology(const GraphMorphism& m);

// Builders.
FiniteGraph n_rose(int n);
FiniteGraph n_cage(int n);
FiniteGraph cube_skeleton();
FiniteGraph tetrahedron_skeleton();
FiniteGraph k33();

}  // namespace outf3::graphact
