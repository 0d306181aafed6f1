#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outf3/errors.hpp"
#include "outf3/int_matrix.hpp"

namespace outf3::freegrp {

/// One letter a_i^{+-1} of the free group F_n. Indices are 1-based.
struct Letter {
    int index;
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in F_n. Reduction happens eagerly in every operation,
/// so a FreeWord never contains an adjacent cancelling pair.
class FreeWord {
public:
    FreeWord() = default;
    static FreeWord from_letters(std::vector<Letter> letters);  // reduces
    static FreeWord generator(int index, int sign = +1);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& letter(std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    FreeWord operator*(const FreeWord& rhs) const;  // concatenate + reduce
    FreeWord inverse() const;
    /// w * this * w^{-1}, reduced.
    FreeWord conjugated_by(const FreeWord& w) const;
    FreeWord power(int k) const;

    bool operator==(const FreeWord&) const = default;

    int max_index() const;
    std::vector<long> exponent_sums(int rank) const;

    std::string str() const;  // e.g. "a1 a2^-1", "1" for the empty word

private:
    std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Named automorphism generators.
//
//   e<i>        a_i -> a_i^{-1}
//   r<i><j>     a_i -> a_i a_j            (right multiplication)
//   l<i><j>     a_i -> a_j a_i            (left multiplication)
//   s<i><j>     swap a_i and a_j          (i, j <= rank)
//   s<i><n+1>   a_i -> a_i^{-1}, a_j -> a_j a_i^{-1} for j != i
//   D           every a_i -> a_i^{-1}
// ---------------------------------------------------------------------------

enum class GenKind { Epsilon, Rho, Lambda, Sigma, Delta };

struct GeneratorName {
    GenKind kind;
    int i = 0;  // first index (unused for Delta)
    int j = 0;  // second index (Rho/Lambda/Sigma only)
    bool operator==(const GeneratorName&) const = default;
};

std::string to_string(const GeneratorName& g);
GeneratorName parse_generator_name(const std::string& token);

/// One factor of a generator word: a named generator with an exponent.
struct GeneratorPower {
    GeneratorName gen;
    int exponent = 1;
};

using GeneratorWord = std::vector<GeneratorPower>;

std::string to_string(const GeneratorWord& word);
/// Parses whitespace-separated tokens like "e1 r21^-1 s23 D^2". Juxtaposition
/// composes right-to-left: the rightmost factor acts first.
GeneratorWord parse_generator_word(const std::string& text);

/// Automorphism of F_n assembled from the named generators. Instances exist
/// only through make_generator / compose / inverse, so every instance is
/// invertible and carries the generator word it was built from.
class FreeAutomorphism {
public:
    static FreeAutomorphism identity(int rank);

    int rank() const { return rank_; }
    const FreeWord& image(int index) const;  // image of a_index, 1-based
    const std::vector<FreeWord>& images() const { return images_; }
    const GeneratorWord& provenance() const { return provenance_; }

    FreeWord apply(const FreeWord& w) const;

    /// True when both automorphisms have identical images (equality in Aut,
    /// not Out).
    bool same_map(const FreeAutomorphism& other) const;
    bool is_identity() const;

    /// Canonical text form of the underlying map, usable as a cache key.
    std::string map_key() const;

private:
    friend FreeAutomorphism make_generator(const GeneratorName&, int);
    friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&);
    friend FreeAutomorphism inverse(const FreeAutomorphism&);
    FreeAutomorphism() = default;

    int rank_ = 0;
    std::vector<FreeWord> images_;
    GeneratorWord provenance_;
};

/// Builds a named generator. Throws PreconditionError for out-of-range or
/// coincident indices.
FreeAutomorphism make_generator(const GeneratorName& name, int rank);

/// Left-action convention: compose(a, b) applies b first, then a.
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

FreeAutomorphism inverse(const FreeAutomorphism& aut);

FreeAutomorphism evaluate_word(const GeneratorWord& word, int rank);
FreeAutomorphism evaluate_word(const std::string& text, int rank);

/// Finds w with aut(a_i) = w a_i w^{-1} for every i, if one exists.
///
/// The candidate conjugators come from the first basis letter the
/// automorphism moves: if aut(a_p) = v a_p v^{-1} (forced shape for an inner
/// automorphism), then w = v a_p^k, and |k| is bounded by half the longest
/// image. The remaining equations filter the candidates.
std::optional<FreeWord> inner_witness(const FreeAutomorphism& aut);

/// Equality in Out(F_n): differ by an inner automorphism.
bool outer_equal(const FreeAutomorphism& a, const FreeAutomorphism& b);

/// The induced matrix on H_1(F_n, Z): column i holds the exponent sums of
/// aut(a_i). A monoid homomorphism with determinant +-1.
IntMatrix abelianization(const FreeAutomorphism& aut);

/// Automorphism class with outer-equality semantics.
struct OuterElement {
    FreeAutomorphism representative;
    bool operator==(const OuterElement& rhs) const {
        return outer_equal(representative, rhs.representative);
    }
};

}  // namespace outf3::freegrp
