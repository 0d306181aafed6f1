#include "outf3/rep_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace outf3::repdecomp {

using exactlin::Rational;
using exactlin::RationalMatrix;
using exactlin::Vector;

std::vector<int> EigenDecomposition::nonzero_masks() const {
    std::vector<int> masks;
    for (int mask = 0; mask < kSubsets; ++mask)
        if (space(mask).dimension() > 0) masks.push_back(mask);
    return masks;
}

Vector EigenDecomposition::block_coordinates(const Vector& v) const {
    return basis_inverse_ * v;
}

bool EigenDecomposition::projection_nonzero(const RationalMatrix& matrix, int from_mask,
                                            int to_mask) const {
    const Subspace& from = space(from_mask);
    for (std::size_t r = 0; r < from.dimension(); ++r) {
        Vector coords = block_coordinates(matrix * from.basis().row(r));
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0 && slot_mask_[k] == to_mask) return true;
    }
    return false;
}

EigenDecomposition epsilon_decomposition(const Representation& rep) {
    const std::size_t d = rep.dimension();
    const RationalMatrix id = RationalMatrix::identity(d);
    const std::array<const RationalMatrix*, 3> eps = {&rep.image("e1"), &rep.image("e2"),
                                                      &rep.image("e3")};
    for (const auto* m : eps)
        if ((*m) * (*m) != id)
            throw PreconditionError("epsilon image is not an involution");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if ((*eps[a]) * (*eps[b]) != (*eps[b]) * (*eps[a]))
                throw PreconditionError("epsilon images do not commute");

    EigenDecomposition dec;
    dec.dimension_ = d;
    std::size_t total = 0;
    for (int mask = 0; mask < EigenDecomposition::kSubsets; ++mask) {
        Subspace e = Subspace::full(d);
        for (int i = 0; i < 3; ++i) {
            // E_I is cut out by ker(eps_i - (-1)^{chi_I(i)}).
            RationalMatrix shifted = ((mask >> i) & 1) ? (*eps[static_cast<std::size_t>(i)] + id)
                                                       : (*eps[static_cast<std::size_t>(i)] - id);
            e = exactlin::intersect(e, exactlin::kernel(shifted));
        }
        total += e.dimension();
        dec.spaces_[static_cast<std::size_t>(mask)] = std::move(e);
    }
    if (total != d)
        throw ViolationError("eigenspaces do not span the whole space");

    RationalMatrix basis(d, d);
    std::size_t col = 0;
    for (int mask = 0; mask < EigenDecomposition::kSubsets; ++mask) {
        const Subspace& e = dec.spaces_[static_cast<std::size_t>(mask)];
        for (std::size_t r = 0; r < e.dimension(); ++r) {
            for (std::size_t row = 0; row < d; ++row) basis.at(row, col) = e.basis().at(r, row);
            dec.slot_mask_.push_back(mask);
            ++col;
        }
    }
    auto inv = basis.inverse();
    if (!inv)
        throw ViolationError("eigenbasis is not independent");
    dec.basis_ = std::move(basis);
    dec.basis_inverse_ = std::move(*inv);
    return dec;
}

std::array<std::size_t, 4> level_dimensions(const EigenDecomposition& dec) {
    std::array<std::size_t, 4> dims{0, 0, 0, 0};
    for (int mask = 0; mask < EigenDecomposition::kSubsets; ++mask) {
        int level = std::popcount(static_cast<unsigned>(mask));
        dims[static_cast<std::size_t>(level)] += dec.space(mask).dimension();
    }
    // Within one level every E_I must have the same dimension.
    for (int level = 0; level <= 3; ++level) {
        std::size_t expected = 0;
        bool first = true;
        for (int mask = 0; mask < EigenDecomposition::kSubsets; ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) != level) continue;
            std::size_t dim = dec.space(mask).dimension();
            if (first) {
                expected = dim;
                first = false;
            } else if (dim != expected) {
                throw ViolationError(
                    "eigenspace dimensions differ inside level " + std::to_string(level) +
                    "; the input is not a representation of the full group");
            }
        }
    }
    return dims;
}

std::string mask_str(int mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= 3; ++i) {
        if (!((mask >> (i - 1)) & 1)) continue;
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::vector<std::vector<int>> Diagram::components() const {
    std::map<int, int> comp;
    for (int v : vertices) comp[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (const auto& [a, b] : edges) comp[find(a)] = find(b);
    std::map<int, std::vector<int>> grouped;
    for (int v : vertices) grouped[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : grouped) out.push_back(std::move(members));
    return out;
}

nlohmann::json Diagram::to_json() const {
    nlohmann::json adjacency = nlohmann::json::object();
    for (int v : vertices) adjacency[std::to_string(v)] = nlohmann::json::array();
    for (const auto& [from, to] : edges) adjacency[std::to_string(from)].push_back(to);
    nlohmann::json j;
    j["vertices"] = vertices;
    j["adjacency"] = adjacency;
    return j;
}

std::string Diagram::render() const {
    std::ostringstream out;
    for (int level = 3; level >= 0; --level) {
        out << "V" << level << ":";
        bool any = false;
        for (int v : vertices)
            if (std::popcount(static_cast<unsigned>(v)) == level) {
                out << " " << mask_str(v);
                any = true;
            }
        if (!any) out << " -";
        out << "\n";
    }
    // Self-loops are suppressed at render time; a vertex without one marks
    // its arrows with a leading '>' tail.
    std::set<std::pair<int, int>> drawn;
    for (const auto& [from, to] : edges) {
        if (from == to) continue;
        if (drawn.count({to, from}) || drawn.count({from, to})) continue;
        const bool mutual = has_edge(to, from);
        const bool tail_from = !has_edge(from, from);
        const bool tail_to = !has_edge(to, to);
        if (mutual) {
            out << mask_str(from) << (tail_from ? " >" : " ") << "--" << (tail_to ? "< " : " ")
                << mask_str(to) << "\n";
        } else {
            out << mask_str(from) << (tail_from ? " >" : " ") << "-> " << mask_str(to) << "\n";
        }
        drawn.insert({from, to});
    }
    return out.str();
}

Diagram minimal_diagram(const Representation& rep, const freegrp::FreeAutomorphism& x) {
    EigenDecomposition dec = epsilon_decomposition(rep);
    RationalMatrix m = rep.image_of(x);
    Diagram d;
    d.vertices = dec.nonzero_masks();
    for (int from : d.vertices)
        for (int to : d.vertices)
            if (dec.projection_nonzero(m, from, to)) d.edges.insert({from, to});
    return d;
}

Diagram minimal_diagram(const Representation& rep, const std::string& word) {
    return minimal_diagram(rep, freegrp::evaluate_word(word, 3));
}

Permutation Permutation::identity() {
    return Permutation{{0, 1, 2, 3}};
}

Permutation Permutation::transposition(int a, int b) {
    Permutation p = identity();
    std::swap(p.image[static_cast<std::size_t>(a)], p.image[static_cast<std::size_t>(b)]);
    return p;
}

int Permutation::apply_mask(int mask) const {
    int out = 0;
    for (int i = 1; i <= 3; ++i)
        if ((mask >> (i - 1)) & 1) out |= 1 << (apply(i) - 1);
    return out;
}

Permutation Permutation::inverse() const {
    Permutation p = identity();
    for (int i = 1; i <= 3; ++i) p.image[static_cast<std::size_t>(apply(i))] = i;
    return p;
}

Diagram diagram_pushforward(const Diagram& d, const Permutation& perm) {
    Diagram out;
    for (int v : d.vertices) out.vertices.push_back(perm.apply_mask(v));
    std::sort(out.vertices.begin(), out.vertices.end());
    for (const auto& [from, to] : d.edges)
        out.edges.insert({perm.apply_mask(from), perm.apply_mask(to)});
    return out;
}

bool check_diamond(const Representation& rep, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 3 || j > 3)
        throw PreconditionError("diamond indices must be distinct and in 1..3");
    EigenDecomposition dec = epsilon_decomposition(rep);
    const std::string suffix = std::to_string(i) + std::to_string(j);
    const RationalMatrix& rho = rep.image("r" + suffix);
    const RationalMatrix& lambda = rep.image("l" + suffix);

    const int bit_i = 1 << (i - 1);
    const int bit_j = 1 << (j - 1);
    for (int base = 0; base < EigenDecomposition::kSubsets; ++base) {
        if (base & (bit_i | bit_j)) continue;  // J ranges over subsets avoiding i, j
        Subspace diamond =
            component_span(dec, {base, base | bit_i, base | bit_j, base | bit_i | bit_j});
        if (!diamond.contains(exactlin::apply(rho, diamond))) return false;
        if (!diamond.contains(exactlin::apply(lambda, diamond))) return false;
    }
    return true;
}

bool factors_through_gl3(const Representation& rep) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            const std::string suffix = std::to_string(i) + std::to_string(j);
            if (rep.image("r" + suffix) != rep.image("l" + suffix)) return false;
        }
    return true;
}

long IrrepMultiplicities::of(const std::string& name) const {
    auto it = multiplicity.find(name);
    if (it == multiplicity.end())
        throw PreconditionError("no irreducible named " + name);
    return it->second;
}

nlohmann::json IrrepMultiplicities::to_json() const {
    nlohmann::json j;
    j["group"] = group == SymGroup::S3 ? "S3" : "S4";
    j["multiplicities"] = multiplicity;
    return j;
}

const CharacterTable& character_table(SymGroup g) {
    // Class order: identity, transposition, (double transposition,) 3-cycle,
    // (4-cycle). Class sizes are cross-checked by closure enumeration in the
    // tests.
    static const CharacterTable s3{
        SymGroup::S3,
        6,
        {
            {"identity", 1, ""},
            {"transposition", 3, "s12"},
            {"three_cycle", 2, "s12 s13"},
        },
        {
            {"trivial", {1, {1, 1, 1}}},
            {"determinant", {1, {1, -1, 1}}},
            {"standard", {2, {2, 0, -1}}},
        },
    };
    static const CharacterTable s4{
        SymGroup::S4,
        24,
        {
            {"identity", 1, ""},
            {"transposition", 6, "s12"},
            {"double_transposition", 3, "s12 s34"},
            {"three_cycle", 8, "s12 s13"},
            {"four_cycle", 6, "s12 s23 s34"},
        },
        {
            {"trivial", {1, {1, 1, 1, 1, 1}}},
            {"determinant", {1, {1, -1, 1, 1, -1}}},
            {"standard", {3, {3, 1, -1, 0, -1}}},
            {"signed_standard", {3, {3, -1, -1, 0, 1}}},
            {"partition22", {2, {2, 0, 2, -1, 0}}},
        },
    };
    return g == SymGroup::S3 ? s3 : s4;
}

IrrepMultiplicities sym_decompose(const Representation& rep, SymGroup which) {
    const CharacterTable& table = character_table(which);

    std::vector<Rational> traces;
    for (const ConjugacyClass& cls : table.classes) {
        RationalMatrix m = rep.image_of_word(cls.word);
        Rational trace(0);
        for (std::size_t k = 0; k < m.rows(); ++k) trace += m.at(k, k);
        traces.push_back(trace);
    }

    IrrepMultiplicities result;
    result.group = which;
    for (const auto& [name, data] : table.irreducibles) {
        const auto& [dim, chi] = data;
        Rational inner(0);
        for (std::size_t c = 0; c < table.classes.size(); ++c)
            inner += Rational(table.classes[c].size) * Rational(chi[c]) * traces[c];
        inner /= table.order;
        if (inner.get_den() != 1 || inner < 0)
            throw ViolationError("character of '" + rep.name() +
                                 "' is not a nonnegative integer combination of " +
                                 std::string(which == SymGroup::S3 ? "S3" : "S4") +
                                 " irreducibles");
        result.multiplicity[name] = static_cast<long>(inner.get_num().get_si());
    }

    // The multiplicities must reconstruct the restricted character exactly.
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        Rational rebuilt(0);
        for (const auto& [name, data] : table.irreducibles)
            rebuilt += Rational(result.multiplicity.at(name)) * Rational(data.second[c]);
        if (rebuilt != traces[c])
            throw ViolationError("irreducible multiplicities fail to reconstruct the trace on " +
                                 table.classes[c].name);
    }

    std::size_t total = 0;
    for (const auto& [name, data] : table.irreducibles)
        total += static_cast<std::size_t>(result.multiplicity.at(name)) *
                 static_cast<std::size_t>(data.first);
    if (total != rep.dimension())
        throw ViolationError("multiplicities do not add up to the dimension");
    return result;
}

KillV4Report kill_v4_check(const Representation& rep) {
    const std::array<const char*, 3> v4_words = {"s12 s34", "s13 s24", "s14 s23"};
    KillV4Report report;
    report.premise_holds = true;
    for (const char* word : v4_words)
        if (!rep.image_of_word(word).is_identity()) report.premise_holds = false;
    if (!report.premise_holds) return report;

    // Premise holds: the Nielsen images must all be trivial and the image
    // group collapses to the one generated by image(e1).
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            const std::string suffix = std::to_string(i) + std::to_string(j);
            if (!rep.image("r" + suffix).is_identity() || !rep.image("l" + suffix).is_identity())
                throw ViolationError(
                    "V4 dies but a Nielsen image of '" + rep.name() +
                    "' is not the identity; the input cannot be a representation");
        }
    const RationalMatrix& e1 = rep.image("e1");
    if (e1 * e1 != RationalMatrix::identity(rep.dimension()))
        throw ViolationError("V4 dies but image(e1) is not an involution");
    report.image_order = e1.is_identity() ? 1 : 2;
    return report;
}

Subspace component_span(const EigenDecomposition& dec, const std::vector<int>& masks) {
    Subspace out(dec.dimension());
    for (int mask : masks) out = exactlin::sum(out, dec.space(mask));
    return out;
}

}  // namespace outf3::repdecomp
