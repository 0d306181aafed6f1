#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "outf3/representation.hpp"

namespace outf3::repdecomp {

using exactlin::Subspace;

/// Simultaneous eigenspace family of the commuting involutions e1, e2, e3.
///
/// Subsets I of {1,2,3} are bitmasks: bit (i-1) set means e_i acts as -1.
/// E_I is the intersection over i of ker(image(e_i) - (-1)^{[i in I]}).
/// The spaces are independent and sum to the whole space; the concatenated
/// bases form a change-of-basis matrix, cached here with its inverse so that
/// projections onto individual E_J are a coordinate lookup.
class EigenDecomposition {
public:
    static constexpr int kRank = 3;
    static constexpr int kSubsets = 8;

    std::size_t dimension() const { return dimension_; }
    const Subspace& space(int mask) const { return spaces_.at(static_cast<std::size_t>(mask)); }
    std::vector<int> nonzero_masks() const;

    /// Coordinates of v in the concatenated eigenbasis, one block per mask.
    exactlin::Vector block_coordinates(const exactlin::Vector& v) const;
    /// Mask owning coordinate slot k of block_coordinates.
    int mask_of_slot(std::size_t k) const { return slot_mask_[k]; }

    /// True when the projection of (matrix * E_I) onto E_J is nonzero.
    bool projection_nonzero(const exactlin::RationalMatrix& matrix, int from_mask,
                            int to_mask) const;

private:
    friend EigenDecomposition epsilon_decomposition(const Representation& rep);

    std::size_t dimension_ = 0;
    std::array<Subspace, kSubsets> spaces_{Subspace(0), Subspace(0), Subspace(0), Subspace(0),
                                           Subspace(0), Subspace(0), Subspace(0), Subspace(0)};
    exactlin::RationalMatrix basis_;          // columns: eigenbasis vectors
    exactlin::RationalMatrix basis_inverse_;
    std::vector<int> slot_mask_;              // mask per eigenbasis column
};

/// Splits the space into the E_I. Throws PreconditionError unless the images
/// of e1, e2, e3 pairwise commute and square to the identity, and
/// ViolationError if the eigenspaces fail to fill the space.
EigenDecomposition epsilon_decomposition(const Representation& rep);

/// Dimensions of the levels V_0..V_3 (V_i sums the E_I with |I| = i).
/// Throws ViolationError when two E_I of the same cardinality have different
/// dimensions, which cannot happen for a genuine representation.
std::array<std::size_t, 4> level_dimensions(const EigenDecomposition& dec);

/// Directed graph on the nonzero E_I: an edge I -> J records that x maps
/// part of E_I across E_J. Self-loops are kept in the data.
struct Diagram {
    std::vector<int> vertices;              // masks, ascending
    std::set<std::pair<int, int>> edges;    // (from, to)

    bool operator==(const Diagram&) const = default;

    bool has_edge(int from, int to) const { return edges.count({from, to}) > 0; }
    /// Vertex sets of the connected components of the underlying undirected
    /// graph.
    std::vector<std::vector<int>> components() const;

    nlohmann::json to_json() const;
    /// Row-per-level picture, V_3 on top. Mutual edges print as I -- J; a
    /// vertex with no self-loop marks its outgoing edges with a leading '>'.
    std::string render() const;
};

std::string mask_str(int mask);

Diagram minimal_diagram(const Representation& rep, const freegrp::FreeAutomorphism& x);
Diagram minimal_diagram(const Representation& rep, const std::string& word);

/// Permutation of {1..3} by images.
struct Permutation {
    std::array<int, 4> image;  // image[i] for i = 1..3; image[0] unused
    static Permutation identity();
    static Permutation transposition(int a, int b);
    int apply(int i) const { return image[static_cast<std::size_t>(i)]; }
    int apply_mask(int mask) const;
    Permutation inverse() const;
};

/// Relabels vertices and edges by I -> perm(I).
Diagram diagram_pushforward(const Diagram& d, const Permutation& perm);

/// True when both r_ij and l_ij map every diamond
/// E_J + E_{J+i} + E_{J+j} + E_{J+i+j} (J avoiding i, j) into itself.
bool check_diamond(const Representation& rep, int i, int j);

/// True when image(r_ij) == image(l_ij) for every pair, which is exactly the
/// condition for factoring through GL_3(Z).
bool factors_through_gl3(const Representation& rep);

// ---------------------------------------------------------------------------
// Symmetric group characters.
// ---------------------------------------------------------------------------

enum class SymGroup { S3, S4 };

struct IrrepMultiplicities {
    SymGroup group;
    /// Keyed by irreducible name: trivial, determinant, standard, and for S4
    /// also signed_standard and partition22.
    std::map<std::string, long> multiplicity;

    long of(const std::string& name) const;
    nlohmann::json to_json() const;
};

struct ConjugacyClass {
    std::string name;
    long size;
    std::string word;  // class representative as sigma tokens
};

struct CharacterTable {
    SymGroup group;
    long order;
    std::vector<ConjugacyClass> classes;
    // irreducible name -> (dimension, character value per class)
    std::vector<std::pair<std::string, std::pair<long, std::vector<long>>>> irreducibles;
};

const CharacterTable& character_table(SymGroup g);

/// Restricts the representation to S3 (sigma_ij) or S4 (adding sigma_i4) and
/// decomposes by exact character inner products. Multiplicities must be
/// nonnegative integers reconstructing every class trace, else
/// ViolationError.
IrrepMultiplicities sym_decompose(const Representation& rep, SymGroup which);

/// Outcome of the kernel-contains-V4 test.
struct KillV4Report {
    bool premise_holds = false;   // all three V4 elements map to the identity
    std::size_t image_order = 0;  // 1 or 2 when the premise holds
};

/// When every V4 element maps to the identity, every r_ij and l_ij image must
/// be the identity and the image group is generated by image(e1). A genuine
/// representation can never satisfy the premise and fail the conclusion;
/// if that happens the input was corrupt and ViolationError is thrown.
KillV4Report kill_v4_check(const Representation& rep);

/// Sum of the E_I over a set of masks.
Subspace component_span(const EigenDecomposition& dec, const std::vector<int>& masks);

}  // namespace outf3::repdecomp
