#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outf3/exact_linear.hpp"
#include "outf3/int_matrix.hpp"

#include "json.hpp"

namespace outf3::torelli {

using exactlin::Rational;
using exactlin::RationalMatrix;
using exactlin::Subspace;
using exactlin::Vector;

/// Sym^2 of the dual action: sym2_map of the inverse transpose. This is the
/// convention under which the displayed congruence identities hold, e.g.
/// applying the square of the a1 -> a1 a3 transvection to v1v3 and
/// subtracting v1v3 leaves -2 v1v1. Multiplicative; throws on singular input.
RationalMatrix sym2_dual_rep(const RationalMatrix& g);

/// Coordinate of the monomial v_i v_j (1-based, unordered) of a 6-vector.
Rational& mu(Vector& v, int i, int j);
const Rational& mu(const Vector& v, int i, int j);

/// The images on the 6-dimensional space of the nine congruence elements:
/// e_i e_j for the three pairs and the squared transvections r_ij^2 for the
/// six ordered pairs.
class CongruenceGeneratorSet {
public:
    /// The standard nine, from the abelianized generators.
    static CongruenceGeneratorSet standard();

    /// Validates that every underlying 3x3 matrix is integral, unimodular and
    /// congruent to the identity mod 2, then applies sym2_dual_rep.
    static CongruenceGeneratorSet from_gl3(
        const std::vector<std::pair<std::string, RationalMatrix>>& gl3_elements);

    std::size_t size() const { return gens_.size(); }
    const std::vector<std::pair<std::string, RationalMatrix>>& generators() const {
        return gens_;
    }

private:
    std::vector<std::pair<std::string, RationalMatrix>> gens_;  // 6x6 images
};

/// Smallest generator-invariant subspace containing the start vector,
/// computed by span saturation. The trace records which generator enlarged
/// the span at each step.
struct SubmoduleClosure {
    Vector start;
    Subspace space;
    std::vector<std::string> trace;

    nlohmann::json to_json() const;
};

SubmoduleClosure cyclic_submodule(const Vector& v, const CongruenceGeneratorSet& gens,
                                  std::size_t cap = 16);

struct ProbeEntry {
    std::string label;
    Vector vector;
    std::size_t closure_dim = 0;
    std::vector<std::string> trace;
};

struct ProbeReport {
    std::vector<ProbeEntry> entries;
    std::size_t full_count = 0;
    bool all_full() const { return full_count == entries.size(); }
    std::vector<const ProbeEntry*> failures() const;
    nlohmann::json to_json() const;
};

/// Closure sweep over the monomial basis, all two-monomial sums and
/// differences, and seeded random nonzero vectors with numerators and
/// denominators in [-9, 9]. A non-full closure is report data, never an
/// exception.
ProbeReport irreducibility_probe(int sample_count, std::uint64_t seed);

}  // namespace outf3::torelli
