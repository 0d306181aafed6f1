#include "outf3/graph_action.hpp"

#include <functional>
#include <sstream>

#include "outf3/errors.hpp"

namespace outf3::graphact {

GroupActionOnGraph GroupActionOnGraph::build(
    const FiniteGraph& graph, std::vector<std::pair<std::string, GraphMorphism>> generators,
    std::size_t cap) {
    GroupActionOnGraph action;
    action.graph_ = graph;

    for (auto& [name, m] : generators) {
        m.validate();
        if (!m.is_automorphism())
            throw PreconditionError("action generator '" + name + "' is not an automorphism");
        m.inverse();  // throws when not invertible
    }
    action.generators_ = std::move(generators);

    action.elements_.push_back(GraphMorphism::identity(graph));
    std::size_t frontier_begin = 0;
    while (frontier_begin < action.elements_.size()) {
        std::size_t frontier_end = action.elements_.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (const auto& [name, gen] : action.generators_) {
                GraphMorphism candidate = compose(gen, action.elements_[k]);
                bool known = false;
                for (const auto& existing : action.elements_)
                    if (existing == candidate) {
                        known = true;
                        break;
                    }
                if (known) continue;
                if (action.elements_.size() + 1 > cap)
                    throw CapExceededError("group action closure exceeded its cap", cap);
                action.elements_.push_back(std::move(candidate));
            }
        }
        frontier_begin = frontier_end;
    }
    return action;
}

GroupActionOnGraph GroupActionOnGraph::trivial(const FiniteGraph& graph) {
    return build(graph, {});
}

std::set<int> GroupActionOnGraph::orbit_of_edge(int edge) const {
    if (edge < 0 || edge >= static_cast<int>(graph_.edge_count()))
        throw PreconditionError("edge id out of range");
    std::set<int> orbit;
    for (const GraphMorphism& m : elements_)
        orbit.insert(m.edge_map[static_cast<std::size_t>(edge)].edge);
    return orbit;
}

std::vector<std::set<int>> GroupActionOnGraph::edge_orbits() const {
    std::vector<std::set<int>> orbits;
    std::vector<bool> seen(graph_.edge_count(), false);
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
        if (seen[e]) continue;
        std::set<int> orbit = orbit_of_edge(static_cast<int>(e));
        for (int x : orbit) seen[static_cast<std::size_t>(x)] = true;
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool GroupActionOnGraph::edge_transitive() const {
    return edge_orbits().size() <= 1;
}

namespace {

GraphMorphism parse_generator_line(const FiniteGraph& graph, const std::string& spec,
                                   const std::string& name) {
    // spec looks like: "v a->b c->d; e x->y+ z->w-"
    auto semi = spec.find(';');
    if (semi == std::string::npos)
        throw ParseError("generator '" + name + "' needs 'v ...; e ...'");
    std::string vpart = spec.substr(0, semi);
    std::string epart = spec.substr(semi + 1);

    GraphMorphism m;
    m.domain = graph;
    m.codomain = graph;
    m.vertex_map.resize(graph.vertex_count(), -1);
    m.edge_map.resize(graph.edge_count());

    std::istringstream vin(vpart);
    std::string token;
    vin >> token;  // leading 'v'
    if (token != "v")
        throw ParseError("generator '" + name + "' vertex section must start with 'v'");
    while (vin >> token) {
        auto arrow = token.find("->");
        if (arrow == std::string::npos)
            throw ParseError("bad vertex mapping '" + token + "'");
        int from = graph.vertex_index(token.substr(0, arrow));
        int to = graph.vertex_index(token.substr(arrow + 2));
        m.vertex_map[static_cast<std::size_t>(from)] = to;
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        if (m.vertex_map[v] < 0) m.vertex_map[v] = static_cast<int>(v);  // unlisted: fixed

    std::vector<bool> edge_set(graph.edge_count(), false);
    std::istringstream ein(epart);
    ein >> token;  // leading 'e'
    if (token != "e")
        throw ParseError("generator '" + name + "' edge section must start with 'e'");
    while (ein >> token) {
        auto arrow = token.find("->");
        if (arrow == std::string::npos)
            throw ParseError("bad edge mapping '" + token + "'");
        std::string target = token.substr(arrow + 2);
        int sign = 1;
        if (target.ends_with("+")) {
            target.pop_back();
        } else if (target.ends_with("-")) {
            target.pop_back();
            sign = -1;
        }
        int from = graph.edge_index(token.substr(0, arrow));
        int to = graph.edge_index(target);
        m.edge_map[static_cast<std::size_t>(from)] = GraphMorphism::EdgeImage{to, sign, -1};
        edge_set[static_cast<std::size_t>(from)] = true;
    }
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        if (!edge_set[e]) m.edge_map[e] = GraphMorphism::EdgeImage{static_cast<int>(e), 1, -1};

    m.validate();
    return m;
}

}  // namespace

GroupActionOnGraph GroupActionOnGraph::parse(const FiniteGraph& graph, std::istream& in,
                                             std::size_t cap) {
    std::vector<std::pair<std::string, GraphMorphism>> generators;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind.starts_with("#")) continue;
        if (kind != "gen")
            throw ParseError("unknown action declaration '" + kind + "'");
        std::string name;
        if (!(ls >> name) || !name.ends_with(":"))
            throw ParseError("generator line must look like 'gen <name>: ...'");
        name.pop_back();
        std::string rest;
        std::getline(ls, rest);
        generators.emplace_back(name, parse_generator_line(graph, rest, name));
    }
    return build(graph, std::move(generators), cap);
}

GroupActionOnGraph GroupActionOnGraph::parse(const FiniteGraph& graph, const std::string& text,
                                             std::size_t cap) {
    std::istringstream in(text);
    return parse(graph, in, cap);
}

std::pair<FiniteGraph, GraphMorphism> orbit_collapse(const FiniteGraph& g,
                                                     const GroupActionOnGraph& action, int edge) {
    std::set<int> orbit = action.orbit_of_edge(edge);
    std::set<int> to_collapse;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!orbit.count(static_cast<int>(e))) to_collapse.insert(static_cast<int>(e));
    return collapse(g, to_collapse);
}

GroupActionOnGraph descend_action(const GroupActionOnGraph& action,
                                  const GraphMorphism& collapse_map) {
    const FiniteGraph& quotient = collapse_map.codomain;
    std::vector<std::pair<std::string, GraphMorphism>> generators;
    for (const auto& [name, gen] : action.generators()) {
        GraphMorphism down;
        down.domain = quotient;
        down.codomain = quotient;
        down.vertex_map.assign(quotient.vertex_count(), -1);
        down.edge_map.resize(quotient.edge_count());

        // Vertices of the quotient are classes of collapsed vertices; the
        // automorphism permutes classes because it permutes the collapsed
        // edge set.
        for (std::size_t v = 0; v < collapse_map.domain.vertex_count(); ++v) {
            int down_from = collapse_map.vertex_map[v];
            int down_to =
                collapse_map.vertex_map[static_cast<std::size_t>(gen.vertex_map[v])];
            if (down.vertex_map[static_cast<std::size_t>(down_from)] < 0)
                down.vertex_map[static_cast<std::size_t>(down_from)] = down_to;
            else if (down.vertex_map[static_cast<std::size_t>(down_from)] != down_to)
                throw PreconditionError("action does not descend to the quotient");
        }
        for (std::size_t e = 0; e < collapse_map.domain.edge_count(); ++e) {
            const auto& down_img = collapse_map.edge_map[e];
            if (down_img.collapsed()) continue;
            const auto& gen_img = gen.edge_map[e];
            const auto& target = collapse_map.edge_map[static_cast<std::size_t>(gen_img.edge)];
            if (target.collapsed())
                throw PreconditionError("action does not preserve the collapsed edge set");
            down.edge_map[static_cast<std::size_t>(down_img.edge)] =
                GraphMorphism::EdgeImage{target.edge, target.sign * gen_img.sign * down_img.sign,
                                         -1};
        }
        down.validate();
        generators.emplace_back(name, std::move(down));
    }
    return GroupActionOnGraph::build(quotient, std::move(generators));
}

bool edge_set_is_forest(const FiniteGraph& g, const std::set<int>& edge_ids) {
    // A forest has no cycle: adding each edge must join two distinct
    // components. Loops fail immediately.
    std::vector<int> parent(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) parent[v] = static_cast<int>(v);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int e : edge_ids) {
        const auto& edge = g.edges[static_cast<std::size_t>(e)];
        int a = find(edge.iota);
        int b = find(edge.tau);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

namespace {

void check_admissibility_preconditions(const FiniteGraph& g) {
    if (!g.is_connected())
        throw PreconditionError("admissibility requires a connected graph");
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.valence(static_cast<int>(v)) == 2)
            throw PreconditionError("admissibility requires no valence-2 vertices");
}

}  // namespace

bool is_admissible(const FiniteGraph& g, const GroupActionOnGraph& action) {
    check_admissibility_preconditions(g);
    for (const std::set<int>& orbit : action.edge_orbits())
        if (!orbit.empty() && edge_set_is_forest(g, orbit)) return false;
    return true;
}

bool is_admissible_bruteforce(const FiniteGraph& g, const GroupActionOnGraph& action) {
    check_admissibility_preconditions(g);
    auto orbits = action.edge_orbits();
    if (orbits.size() > 20)
        throw PreconditionError("too many orbits for the exhaustive check");
    for (std::size_t mask = 1; mask < (std::size_t(1) << orbits.size()); ++mask) {
        std::set<int> union_edges;
        for (std::size_t k = 0; k < orbits.size(); ++k)
            if ((mask >> k) & 1) union_edges.insert(orbits[k].begin(), orbits[k].end());
        if (!union_edges.empty() && edge_set_is_forest(g, union_edges)) return false;
    }
    return true;
}

}  // namespace outf3::graphact
