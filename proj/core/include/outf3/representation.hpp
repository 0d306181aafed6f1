#pragma once

#include <map>
#include <string>
#include <vector>

#include "outf3/exact_linear.hpp"
#include "outf3/free_group.hpp"
#include "outf3/gersten.hpp"

namespace outf3::repdecomp {

using exactlin::RationalMatrix;

/// The full named generator alphabet of Out(F_3), as tokens.
const std::vector<std::string>& named_generators3();

/// Assignment of an invertible matrix to every named Out(F_3) generator.
///
/// Built-in representations pull back GL_3(Z) through the abelianization;
/// file-based ones supply images for the 13 presentation generators and the
/// rest are derived from the generator identities:
///
///   m_ij   = l_ij l_ji^{-1} r_ij          (equals e_i s_ij)
///   e_j    = e_i m_ij^2   for j derived from e_1
///   s_ij   = e_i m_ij
///   D      = e1 e2 e3
///   s_i4   = e_i r_ji r_ki   (j < k the other two indices)
class Representation {
public:
    /// Built-in pullbacks: "standard", "dual", "det", "sym2", "sym2dual",
    /// or a '+'-joined sum such as "standard+det".
    static Representation pullback(const std::string& name);

    /// From images of the 13 presentation generators. Verifies every Gersten
    /// relator; a failing relator raises ViolationError.
    static Representation from_generator_images(
        const std::map<std::string, RationalMatrix>& thirteen, std::string name = "custom");

    /// No verification, for negative tests. The map must cover all 22 tokens.
    static Representation unchecked(std::map<std::string, RationalMatrix> images,
                                    std::string name = "unchecked");

    static Representation parse_json(const nlohmann::json& j, std::string name = "file");

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return dimension_; }
    bool verified() const { return verified_; }

    const RationalMatrix& image(const std::string& token) const;
    const RationalMatrix& image(const freegrp::GeneratorName& g) const;
    RationalMatrix image_of(const freegrp::FreeAutomorphism& aut) const;
    RationalMatrix image_of_word(const freegrp::GeneratorWord& word) const;
    RationalMatrix image_of_word(const std::string& word) const;

    /// Names recognised by pullback(), singletons first.
    static std::vector<std::string> built_in_names();
    /// The verification suite: all built-ins plus every direct sum of
    /// standard/dual/det pullbacks of total dimension <= 6.
    static std::vector<std::string> suite_names();

private:
    Representation() = default;

    std::string name_;
    std::size_t dimension_ = 0;
    bool verified_ = false;
    std::map<std::string, RationalMatrix> images_;
};

}  // namespace outf3::repdecomp
