#include "outf3/representation.hpp"

#include <functional>
#include <sstream>

namespace outf3::repdecomp {

using exactlin::Rational;

const std::vector<std::string>& named_generators3() {
    static const std::vector<std::string> names = {
        "e1", "e2", "e3",
        "r12", "r13", "r21", "r23", "r31", "r32",
        "l12", "l13", "l21", "l23", "l31", "l32",
        "s12", "s13", "s23",
        "s14", "s24", "s34",
        "D",
    };
    return names;
}

namespace {

using Functor = std::function<RationalMatrix(const RationalMatrix&)>;

RationalMatrix dual_of(const RationalMatrix& m) {
    auto inv = m.inverse();
    if (!inv)
        throw PreconditionError("dual of a singular matrix");
    return inv->transpose();
}

Functor component_functor(const std::string& name) {
    if (name == "standard") return [](const RationalMatrix& m) { return m; };
    if (name == "dual") return dual_of;
    if (name == "det")
        return [](const RationalMatrix& m) {
            RationalMatrix out(1, 1);
            out.at(0, 0) = m.determinant();
            return out;
        };
    if (name == "sym2") return [](const RationalMatrix& m) { return exactlin::sym2_map(m); };
    if (name == "sym2dual")
        return [](const RationalMatrix& m) { return exactlin::sym2_map(dual_of(m)); };
    throw ParseError("unknown representation component '" + name + "'");
}

std::vector<std::string> split_plus(const std::string& name) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(name);
    while (std::getline(in, part, '+')) parts.push_back(part);
    if (parts.empty())
        throw ParseError("empty representation name");
    return parts;
}

void check_verifies(const std::map<std::string, RationalMatrix>& images, std::size_t dim,
                    const std::string& name) {
    gersten::Presentation p = gersten::gersten_presentation(3);
    gersten::Assignment<RationalMatrix> assignment;
    for (const auto& g : p.generators) {
        const std::string token = freegrp::to_string(g);
        assignment.emplace(token, images.at(token));
    }
    auto report = gersten::verify_homomorphism(p, assignment, gersten::RationalMatrixGroup(dim));
    if (!report.all_passed()) {
        throw ViolationError("generator images for '" + name + "' violate relator " +
                             report.failing_relators().front());
    }
}

}  // namespace

Representation Representation::pullback(const std::string& name) {
    std::vector<Functor> functors;
    for (const std::string& part : split_plus(name)) functors.push_back(component_functor(part));

    Representation rep;
    rep.name_ = name;
    for (const std::string& token : named_generators3()) {
        RationalMatrix ab =
            freegrp::abelianization(freegrp::evaluate_word(token, 3)).to_rational();
        RationalMatrix img = functors.front()(ab);
        for (std::size_t k = 1; k < functors.size(); ++k)
            img = RationalMatrix::direct_sum(img, functors[k](ab));
        rep.images_.emplace(token, std::move(img));
    }
    rep.dimension_ = rep.images_.at("e1").rows();
    check_verifies(rep.images_, rep.dimension_, name);
    rep.verified_ = true;
    return rep;
}

Representation Representation::from_generator_images(
    const std::map<std::string, RationalMatrix>& thirteen, std::string name) {
    gersten::Presentation p = gersten::gersten_presentation(3);

    std::map<std::string, RationalMatrix> images;
    std::size_t dim = 0;
    for (const auto& g : p.generators) {
        const std::string token = freegrp::to_string(g);
        auto it = thirteen.find(token);
        if (it == thirteen.end())
            throw PreconditionError("missing image for generator " + token);
        if (!it->second.is_square())
            throw PreconditionError("image of " + token + " is not square");
        if (dim == 0) dim = it->second.rows();
        if (it->second.rows() != dim)
            throw PreconditionError("generator images have mixed dimensions");
        if (!it->second.inverse())
            throw PreconditionError("image of " + token + " is singular");
        images.emplace(token, it->second);
    }
    check_verifies(images, dim, name);

    auto mul = [](const RationalMatrix& a, const RationalMatrix& b) { return a * b; };
    auto inv = [](const RationalMatrix& m) { return *m.inverse(); };

    auto m_of = [&](int i, int j) {
        auto tok = [](const char* k, int a, int b) {
            return std::string(k) + std::to_string(a) + std::to_string(b);
        };
        return mul(mul(images.at(tok("l", i, j)), inv(images.at(tok("l", j, i)))),
                   images.at(tok("r", i, j)));
    };

    const RationalMatrix m12 = m_of(1, 2), m13 = m_of(1, 3), m23 = m_of(2, 3);
    const RationalMatrix& e1 = images.at("e1");
    RationalMatrix e2 = mul(e1, mul(m12, m12));
    RationalMatrix e3 = mul(e1, mul(m13, m13));
    images.emplace("e2", e2);
    images.emplace("e3", e3);
    images.emplace("s12", mul(e1, m12));
    images.emplace("s13", mul(e1, m13));
    images.emplace("s23", mul(e2, m23));
    images.emplace("D", mul(e1, mul(e2, e3)));
    images.emplace("s14", mul(e1, mul(images.at("r21"), images.at("r31"))));
    images.emplace("s24", mul(e2, mul(images.at("r12"), images.at("r32"))));
    images.emplace("s34", mul(e3, mul(images.at("r13"), images.at("r23"))));

    Representation rep;
    rep.name_ = std::move(name);
    rep.dimension_ = dim;
    rep.images_ = std::move(images);
    rep.verified_ = true;
    return rep;
}

Representation Representation::unchecked(std::map<std::string, RationalMatrix> images,
                                         std::string name) {
    for (const std::string& token : named_generators3())
        if (!images.count(token))
            throw PreconditionError("unchecked representation missing " + token);
    Representation rep;
    rep.name_ = std::move(name);
    rep.dimension_ = images.at("e1").rows();
    rep.images_ = std::move(images);
    rep.verified_ = false;
    return rep;
}

Representation Representation::parse_json(const nlohmann::json& j, std::string name) {
    if (!j.contains("generators") || !j["generators"].is_object())
        throw ParseError("representation JSON needs a 'generators' object");
    std::map<std::string, RationalMatrix> images;
    for (const auto& [token, matrix] : j["generators"].items())
        images.emplace(token, RationalMatrix::from_json(matrix));
    return from_generator_images(images, std::move(name));
}

const RationalMatrix& Representation::image(const std::string& token) const {
    auto it = images_.find(token);
    if (it == images_.end())
        throw PreconditionError("no image stored for generator " + token);
    return it->second;
}

const RationalMatrix& Representation::image(const freegrp::GeneratorName& g) const {
    return image(freegrp::to_string(g));
}

RationalMatrix Representation::image_of(const freegrp::FreeAutomorphism& aut) const {
    return image_of_word(aut.provenance());
}

RationalMatrix Representation::image_of_word(const freegrp::GeneratorWord& word) const {
    RationalMatrix out = RationalMatrix::identity(dimension_);
    for (const freegrp::GeneratorPower& p : word) {
        const RationalMatrix& img = image(p.gen);
        RationalMatrix factor = p.exponent >= 0 ? img : *img.inverse();
        for (int s = 0; s < std::abs(p.exponent); ++s) out = out * factor;
    }
    return out;
}

RationalMatrix Representation::image_of_word(const std::string& word) const {
    return image_of_word(freegrp::parse_generator_word(word));
}

std::vector<std::string> Representation::built_in_names() {
    return {"standard", "dual", "det", "sym2", "sym2dual"};
}

std::vector<std::string> Representation::suite_names() {
    std::vector<std::string> names = built_in_names();
    // Direct sums of standard/dual/det with at least two parts, dimension <= 6.
    for (int a = 0; a * 3 <= 6; ++a)
        for (int b = 0; a * 3 + b * 3 <= 6; ++b)
            for (int c = 0; a * 3 + b * 3 + c <= 6; ++c) {
                if (a + b + c < 2) continue;
                std::string name;
                for (int k = 0; k < a; ++k) name += name.empty() ? "standard" : "+standard";
                for (int k = 0; k < b; ++k) name += name.empty() ? "dual" : "+dual";
                for (int k = 0; k < c; ++k) name += name.empty() ? "det" : "+det";
                names.push_back(std::move(name));
            }
    return names;
}

}  // namespace outf3::repdecomp
