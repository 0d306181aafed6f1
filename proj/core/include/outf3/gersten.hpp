#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "outf3/errors.hpp"
#include "outf3/free_group.hpp"
#include "outf3/int_matrix.hpp"

#include "json.hpp"

namespace outf3::gersten {

using freegrp::GeneratorName;
using freegrp::GeneratorPower;
using freegrp::GeneratorWord;

/// Finite presentation data: generator names plus relator words over them.
struct Presentation {
    int rank = 0;
    std::vector<GeneratorName> generators;
    std::vector<GeneratorWord> relators;

    nlohmann::json to_json() const;
};

/// The presentation of Out(F_n) on e1 and all r_ij, l_ij, with the nine
/// relation families instantiated over every valid index tuple. Requires
/// n >= 3. Relations stated as equalities x = y are stored as x y^{-1}.
Presentation gersten_presentation(int n);

/// A group we can compute in: multiplication, inversion, identity and a
/// decidable equality.
template <typename G>
concept EffectiveGroup = requires(const G& g, const typename G::Element& a,
                                  const typename G::Element& b) {
    { g.multiply(a, b) } -> std::same_as<typename G::Element>;
    { g.invert(a) } -> std::same_as<typename G::Element>;
    { g.identity() } -> std::same_as<typename G::Element>;
    { g.equal(a, b) } -> std::same_as<bool>;
};

/// Out(F_n) with outer equality. Equality caches inner-witness outcomes keyed
/// by the canonical map of the quotient automorphism, since relator
/// verification asks the same question for repeated values.
class OuterGroup {
public:
    using Element = freegrp::FreeAutomorphism;
    explicit OuterGroup(int rank) : rank_(rank) {}

    Element multiply(const Element& a, const Element& b) const { return freegrp::compose(a, b); }
    Element invert(const Element& a) const { return freegrp::inverse(a); }
    Element identity() const { return Element::identity(rank_); }
    bool equal(const Element& a, const Element& b) const;
    /// The conjugating word when the element is inner, as text.
    std::optional<std::string> identity_witness(const Element& e) const;

private:
    std::optional<freegrp::FreeWord> witness(const Element& e) const;

    int rank_;
    mutable std::unordered_map<std::string, std::optional<freegrp::FreeWord>> cache_;
};

/// Square integer matrices under multiplication (used for abelianized
/// assignments; elements must be invertible over Z for invert()).
class IntMatrixGroup {
public:
    using Element = IntMatrix;
    explicit IntMatrixGroup(std::size_t n) : n_(n) {}

    Element multiply(const Element& a, const Element& b) const { return a * b; }
    Element invert(const Element& a) const { return a.inverse_unimodular(); }
    Element identity() const { return IntMatrix::identity(n_); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

private:
    std::size_t n_;
};

/// Square rational matrices under multiplication.
class RationalMatrixGroup {
public:
    using Element = exactlin::RationalMatrix;
    explicit RationalMatrixGroup(std::size_t n) : n_(n) {}

    Element multiply(const Element& a, const Element& b) const { return a * b; }
    Element invert(const Element& a) const {
        auto inv = a.inverse();
        if (!inv)
            throw PreconditionError("group element is singular");
        return *inv;
    }
    Element identity() const { return exactlin::RationalMatrix::identity(n_); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

private:
    std::size_t n_;
};

struct RelatorOutcome {
    std::string relator;
    bool passed = false;
    std::optional<std::string> witness;
};

struct VerificationReport {
    std::vector<RelatorOutcome> outcomes;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    bool all_passed() const { return fail_count() == 0; }
    std::vector<std::string> failing_relators() const;

    nlohmann::json to_json() const;
};

/// Assignment of a target element to each generator name (keyed by token).
template <typename Element>
using Assignment = std::map<std::string, Element>;

template <EffectiveGroup G>
typename G::Element evaluate_relator(const GeneratorWord& word,
                                     const Assignment<typename G::Element>& assignment,
                                     const G& target) {
    typename G::Element value = target.identity();
    for (const GeneratorPower& p : word) {
        auto it = assignment.find(freegrp::to_string(p.gen));
        if (it == assignment.end())
            throw PreconditionError("assignment missing generator " + freegrp::to_string(p.gen));
        typename G::Element factor = p.exponent >= 0 ? it->second : target.invert(it->second);
        for (int s = 0; s < std::abs(p.exponent); ++s) value = target.multiply(value, factor);
    }
    return value;
}

/// Checks every relator of p under the assignment. Failures are data in the
/// report, not errors.
template <EffectiveGroup G>
VerificationReport verify_homomorphism(const Presentation& p,
                                       const Assignment<typename G::Element>& assignment,
                                       const G& target) {
    for (const GeneratorName& g : p.generators)
        if (!assignment.count(freegrp::to_string(g)))
            throw PreconditionError("assignment missing generator " + freegrp::to_string(g));

    VerificationReport report;
    for (const GeneratorWord& relator : p.relators) {
        RelatorOutcome outcome;
        outcome.relator = freegrp::to_string(relator);
        typename G::Element value = evaluate_relator(relator, assignment, target);
        outcome.passed = target.equal(value, target.identity());
        if constexpr (requires { target.identity_witness(value); }) {
            if (outcome.passed) outcome.witness = target.identity_witness(value);
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

/// Identity assignment: each presentation generator maps to itself in Out.
Assignment<freegrp::FreeAutomorphism> identity_assignment(const Presentation& p);
/// Each generator maps to its induced matrix on H_1.
Assignment<IntMatrix> abelianization_assignment(const Presentation& p);

/// Multiplicatively closed set reached from the generators, breadth-first.
template <EffectiveGroup G>
struct ElementSet {
    std::vector<typename G::Element> elements;  // elements[0] is the identity
    std::size_t order() const { return elements.size(); }

    bool contains(const G& group, const typename G::Element& e) const {
        for (const auto& x : elements)
            if (group.equal(x, e)) return true;
        return false;
    }
};

/// Breadth-first closure under right multiplication by the generating set.
/// Throws CapExceededError if more than cap distinct elements appear.
template <EffectiveGroup G>
ElementSet<G> closure(const G& group, const std::vector<typename G::Element>& generators,
                      std::size_t cap) {
    if (cap < 1)
        throw PreconditionError("closure cap must be at least 1");
    ElementSet<G> set;
    set.elements.push_back(group.identity());
    std::size_t frontier_begin = 0;
    while (frontier_begin < set.elements.size()) {
        const std::size_t frontier_end = set.elements.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (const auto& gen : generators) {
                typename G::Element candidate = group.multiply(set.elements[k], gen);
                bool known = false;
                for (const auto& existing : set.elements) {
                    if (group.equal(existing, candidate)) {
                        known = true;
                        break;
                    }
                }
                if (known) continue;
                if (set.elements.size() + 1 > cap)
                    throw CapExceededError("closure exceeded its cap", cap);
                set.elements.push_back(std::move(candidate));
            }
        }
        frontier_begin = frontier_end;
    }
    return set;
}

}  // namespace outf3::gersten
