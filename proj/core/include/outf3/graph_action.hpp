#pragma once

#include <iosfwd>

#include "outf3/graph.hpp"

namespace outf3::graphact {

/// Group acting on a graph by automorphisms. Construction closes the named
/// generators under composition (breadth-first, capped) and verifies each
/// element is invertible, so the table really is a group.
class GroupActionOnGraph {
public:
    static GroupActionOnGraph build(const FiniteGraph& graph,
                                    std::vector<std::pair<std::string, GraphMorphism>> generators,
                                    std::size_t cap = 5000);

    /// Trivial action, useful as a baseline.
    static GroupActionOnGraph trivial(const FiniteGraph& graph);

    const FiniteGraph& graph() const { return graph_; }
    const std::vector<std::pair<std::string, GraphMorphism>>& generators() const {
        return generators_;
    }
    const std::vector<GraphMorphism>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    std::set<int> orbit_of_edge(int edge) const;
    std::vector<std::set<int>> edge_orbits() const;
    bool edge_transitive() const;

    /// Action text format, one generator per line:
    ///   gen <name>: v a->b ...; e x->y[+|-] ...
    static GroupActionOnGraph parse(const FiniteGraph& graph, std::istream& in,
                                    std::size_t cap = 5000);
    static GroupActionOnGraph parse(const FiniteGraph& graph, const std::string& text,
                                    std::size_t cap = 5000);

private:
    FiniteGraph graph_;
    std::vector<std::pair<std::string, GraphMorphism>> generators_;
    std::vector<GraphMorphism> elements_;
};

/// Collapses every edge outside the orbit of e; the action descends to the
/// quotient and is edge-transitive there.
std::pair<FiniteGraph, GraphMorphism> orbit_collapse(const FiniteGraph& g,
                                                     const GroupActionOnGraph& action, int edge);

/// The action induced on the orbit collapse.
GroupActionOnGraph descend_action(const GroupActionOnGraph& action,
                                  const GraphMorphism& collapse_map);

/// No orbit of the action spans a forest with an edge. Preconditions: the
/// graph is connected and has no valence-2 vertices.
///
/// Checking single orbits suffices: an invariant forest is a union of
/// orbits, and every orbit inside a forest is itself a forest.
bool is_admissible(const FiniteGraph& g, const GroupActionOnGraph& action);

/// Cross-validation: tests every nonempty union of orbits directly.
/// Exponential in the orbit count; callers keep it to graphs with few edges.
bool is_admissible_bruteforce(const FiniteGraph& g, const GroupActionOnGraph& action);

bool edge_set_is_forest(const FiniteGraph& g, const std::set<int>& edge_ids);

}  // namespace outf3::graphact
