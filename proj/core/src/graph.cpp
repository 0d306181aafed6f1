#include "outf3/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "outf3/errors.hpp"

namespace outf3::graphact {

using exactlin::Rational;
using exactlin::RationalMatrix;
using exactlin::Subspace;
using exactlin::Vector;

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

int FiniteGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    throw PreconditionError("no vertex named '" + name + "'");
}

int FiniteGraph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    throw PreconditionError("no edge named '" + name + "'");
}

std::size_t FiniteGraph::valence(int vertex) const {
    std::size_t count = 0;
    for (const Edge& e : edges) {
        if (e.iota == vertex) ++count;
        if (e.tau == vertex) ++count;
    }
    return count;
}

std::size_t FiniteGraph::component_count() const {
    if (vertex_names.empty()) return 0;
    UnionFind uf(vertex_count());
    for (const Edge& e : edges) uf.unite(e.iota, e.tau);
    std::set<int> roots;
    for (std::size_t v = 0; v < vertex_count(); ++v) roots.insert(uf.find(static_cast<int>(v)));
    return roots.size();
}

bool FiniteGraph::is_connected() const {
    return component_count() <= 1;
}

FiniteGraph FiniteGraph::parse(std::istream& in) {
    FiniteGraph g;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind.starts_with("#")) continue;
        if (kind == "vertex") {
            std::string name;
            if (!(ls >> name))
                throw ParseError("vertex line needs a name");
            g.vertex_names.push_back(name);
        } else if (kind == "edge") {
            std::string name, iota, tau;
            if (!(ls >> name >> iota >> tau))
                throw ParseError("edge line needs a name and two endpoints");
            g.edges.push_back(Edge{name, g.vertex_index(iota), g.vertex_index(tau)});
        } else {
            throw ParseError("unknown graph declaration '" + kind + "'");
        }
    }
    return g;
}

FiniteGraph FiniteGraph::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string FiniteGraph::serialize() const {
    std::ostringstream out;
    for (const std::string& v : vertex_names) out << "vertex " << v << "\n";
    for (const Edge& e : edges)
        out << "edge " << e.name << " " << vertex_names[static_cast<std::size_t>(e.iota)] << " "
            << vertex_names[static_cast<std::size_t>(e.tau)] << "\n";
    return out.str();
}

int graph_rank(const FiniteGraph& g) {
    if (!g.is_connected())
        throw PreconditionError("rank requires a connected graph");
    return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

Subspace cycle_space(const FiniteGraph& g) {
    // Vertex-by-edge flow constraints; loops hit both sides and drop out.
    RationalMatrix constraints(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edges[e];
        if (edge.iota == edge.tau) continue;
        constraints.at(static_cast<std::size_t>(edge.iota), e) += 1;
        constraints.at(static_cast<std::size_t>(edge.tau), e) -= 1;
    }
    return exactlin::kernel(constraints);
}

void GraphMorphism::validate() const {
    if (vertex_map.size() != domain.vertex_count() || edge_map.size() != domain.edge_count())
        throw PreconditionError("morphism map sizes do not match the domain");
    for (int v : vertex_map)
        if (v < 0 || v >= static_cast<int>(codomain.vertex_count()))
            throw PreconditionError("vertex image out of range");
    for (std::size_t e = 0; e < edge_map.size(); ++e) {
        const auto& img = edge_map[e];
        const auto& edge = domain.edges[e];
        int vi = vertex_map[static_cast<std::size_t>(edge.iota)];
        int vt = vertex_map[static_cast<std::size_t>(edge.tau)];
        if (img.collapsed()) {
            if (img.vertex < 0 || img.vertex >= static_cast<int>(codomain.vertex_count()))
                throw PreconditionError("collapsed edge image out of range");
            if (vi != img.vertex || vt != img.vertex)
                throw PreconditionError("collapsed edge endpoints disagree with the image vertex");
        } else {
            if (img.edge < 0 || img.edge >= static_cast<int>(codomain.edge_count()))
                throw PreconditionError("edge image out of range");
            const auto& target = codomain.edges[static_cast<std::size_t>(img.edge)];
            int want_iota = img.sign > 0 ? target.iota : target.tau;
            int want_tau = img.sign > 0 ? target.tau : target.iota;
            if (vi != want_iota || vt != want_tau)
                throw PreconditionError("edge image endpoints are incompatible");
        }
    }
}

bool GraphMorphism::is_automorphism() const {
    if (domain.vertex_count() != codomain.vertex_count() ||
        domain.edge_count() != codomain.edge_count())
        return false;
    std::vector<bool> vertex_hit(codomain.vertex_count(), false);
    for (int v : vertex_map) {
        if (vertex_hit[static_cast<std::size_t>(v)]) return false;
        vertex_hit[static_cast<std::size_t>(v)] = true;
    }
    std::vector<bool> edge_hit(codomain.edge_count(), false);
    for (const auto& img : edge_map) {
        if (img.collapsed()) return false;
        if (edge_hit[static_cast<std::size_t>(img.edge)]) return false;
        edge_hit[static_cast<std::size_t>(img.edge)] = true;
    }
    return true;
}

bool GraphMorphism::same_edge_images(const GraphMorphism& rhs) const {
    if (edge_map.size() != rhs.edge_map.size()) return false;
    for (std::size_t e = 0; e < edge_map.size(); ++e) {
        const auto& a = edge_map[e];
        const auto& b = rhs.edge_map[e];
        if (a.collapsed() != b.collapsed()) return false;
        if (a.collapsed()) {
            if (a.vertex != b.vertex) return false;
        } else if (a.edge != b.edge || a.sign != b.sign) {
            return false;
        }
    }
    return true;
}

GraphMorphism GraphMorphism::inverse() const {
    if (!is_automorphism())
        throw PreconditionError("only automorphisms invert");
    GraphMorphism inv;
    inv.domain = codomain;
    inv.codomain = domain;
    inv.vertex_map.resize(vertex_map.size());
    inv.edge_map.resize(edge_map.size());
    for (std::size_t v = 0; v < vertex_map.size(); ++v)
        inv.vertex_map[static_cast<std::size_t>(vertex_map[v])] = static_cast<int>(v);
    for (std::size_t e = 0; e < edge_map.size(); ++e) {
        EdgeImage img;
        img.edge = static_cast<int>(e);
        img.sign = edge_map[e].sign;
        inv.edge_map[static_cast<std::size_t>(edge_map[e].edge)] = img;
    }
    inv.validate();
    return inv;
}

GraphMorphism GraphMorphism::identity(const FiniteGraph& g) {
    GraphMorphism m;
    m.domain = g;
    m.codomain = g;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) m.vertex_map.push_back(static_cast<int>(v));
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        m.edge_map.push_back(EdgeImage{static_cast<int>(e), 1, -1});
    return m;
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
    if (f.codomain.vertex_count() != g.domain.vertex_count() ||
        f.codomain.edge_count() != g.domain.edge_count())
        throw PreconditionError("morphisms do not compose");
    GraphMorphism out;
    out.domain = f.domain;
    out.codomain = g.codomain;
    for (int v : f.vertex_map)
        out.vertex_map.push_back(g.vertex_map[static_cast<std::size_t>(v)]);
    for (const auto& img : f.edge_map) {
        if (img.collapsed()) {
            out.edge_map.push_back(GraphMorphism::EdgeImage{
                -1, 1, g.vertex_map[static_cast<std::size_t>(img.vertex)]});
            continue;
        }
        const auto& next = g.edge_map[static_cast<std::size_t>(img.edge)];
        if (next.collapsed()) {
            out.edge_map.push_back(GraphMorphism::EdgeImage{-1, 1, next.vertex});
        } else {
            out.edge_map.push_back(GraphMorphism::EdgeImage{next.edge, next.sign * img.sign, -1});
        }
    }
    return out;
}

std::pair<FiniteGraph, GraphMorphism> collapse(const FiniteGraph& g,
                                               const std::set<int>& edge_ids) {
    for (int e : edge_ids)
        if (e < 0 || e >= static_cast<int>(g.edge_count()))
            throw PreconditionError("collapsed edge id out of range");

    // Components of the chosen edge set become the new vertices.
    UnionFind uf(g.vertex_count());
    for (int e : edge_ids) {
        const auto& edge = g.edges[static_cast<std::size_t>(e)];
        uf.unite(edge.iota, edge.tau);
    }
    std::vector<int> new_vertex(g.vertex_count(), -1);
    FiniteGraph q;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int root = uf.find(static_cast<int>(v));
        if (new_vertex[static_cast<std::size_t>(root)] < 0) {
            new_vertex[static_cast<std::size_t>(root)] = static_cast<int>(q.vertex_names.size());
            q.vertex_names.push_back(g.vertex_names[static_cast<std::size_t>(root)]);
        }
        new_vertex[v] = new_vertex[static_cast<std::size_t>(root)];
    }

    GraphMorphism m;
    m.domain = g;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        m.vertex_map.push_back(new_vertex[static_cast<std::size_t>(uf.find(static_cast<int>(v)))]);

    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edges[e];
        if (edge_ids.count(static_cast<int>(e))) {
            m.edge_map.push_back(GraphMorphism::EdgeImage{
                -1, 1, m.vertex_map[static_cast<std::size_t>(edge.iota)]});
        } else {
            int idx = static_cast<int>(q.edges.size());
            q.edges.push_back(
                FiniteGraph::Edge{edge.name, m.vertex_map[static_cast<std::size_t>(edge.iota)],
                                  m.vertex_map[static_cast<std::size_t>(edge.tau)]});
            m.edge_map.push_back(GraphMorphism::EdgeImage{idx, 1, -1});
        }
    }
    m.codomain = q;
    m.validate();
    return {q, m};
}

RationalMatrix induced_homology(const GraphMorphism& m) {
    Subspace source = cycle_space(m.domain);
    Subspace target = cycle_space(m.codomain);

    RationalMatrix out(target.dimension(), source.dimension());
    for (std::size_t b = 0; b < source.dimension(); ++b) {
        Vector weights = source.basis().row(b);
        Vector pushed(m.codomain.edge_count(), Rational(0));
        for (std::size_t e = 0; e < m.edge_map.size(); ++e) {
            const auto& img = m.edge_map[e];
            if (img.collapsed()) continue;
            pushed[static_cast<std::size_t>(img.edge)] += Rational(img.sign) * weights[e];
        }
        auto coords = target.coordinates(pushed);
        if (!coords)
            throw PreconditionError(
                "pushforward left the cycle space; the morphism is not a collapse "
                "or isomorphism");
        for (std::size_t r = 0; r < target.dimension(); ++r) out.at(r, b) = (*coords)[r];
    }
    return out;
}

FiniteGraph n_rose(int n) {
    if (n < 1)
        throw PreconditionError("a rose needs at least one petal");
    FiniteGraph g;
    g.vertex_names = {"v"};
    for (int k = 0; k < n; ++k)
        g.edges.push_back(FiniteGraph::Edge{"p" + std::to_string(k + 1), 0, 0});
    return g;
}

FiniteGraph n_cage(int n) {
    if (n < 1)
        throw PreconditionError("a cage needs at least one edge");
    FiniteGraph g;
    g.vertex_names = {"u", "w"};
    for (int k = 0; k < n; ++k)
        g.edges.push_back(FiniteGraph::Edge{"c" + std::to_string(k + 1), 0, 1});
    return g;
}

FiniteGraph cube_skeleton() {
    FiniteGraph g;
    for (int v = 0; v < 8; ++v) g.vertex_names.push_back("v" + std::to_string(v));
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w)
                g.edges.push_back(
                    FiniteGraph::Edge{"e" + std::to_string(v) + std::to_string(w), v, w});
        }
    return g;
}

FiniteGraph tetrahedron_skeleton() {
    FiniteGraph g;
    for (int v = 0; v < 4; ++v) g.vertex_names.push_back("v" + std::to_string(v));
    for (int v = 0; v < 4; ++v)
        for (int w = v + 1; w < 4; ++w)
            g.edges.push_back(
                FiniteGraph::Edge{"e" + std::to_string(v) + std::to_string(w), v, w});
    return g;
}

FiniteGraph k33() {
    FiniteGraph g;
    for (int v = 0; v < 6; ++v) g.vertex_names.push_back("v" + std::to_string(v));
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            g.edges.push_back(
                FiniteGraph::Edge{"e" + std::to_string(a) + std::to_string(b), a, b});
    return g;
}

}  // namespace outf3::graphact
