#include "outf3/torelli.hpp"

#include <random>

#include "outf3/free_group.hpp"

namespace outf3::torelli {

RationalMatrix sym2_dual_rep(const RationalMatrix& g) {
    if (!g.is_square() || g.rows() != 3)
        throw PreconditionError("sym2_dual_rep expects a 3x3 matrix");
    auto inv = g.inverse();
    if (!inv)
        throw PreconditionError("sym2_dual_rep of a singular matrix");
    return exactlin::sym2_map(inv->transpose());
}

Rational& mu(Vector& v, int i, int j) {
    if (i > j) std::swap(i, j);
    return v[exactlin::sym2_index(3, static_cast<std::size_t>(i - 1),
                                  static_cast<std::size_t>(j - 1))];
}

const Rational& mu(const Vector& v, int i, int j) {
    if (i > j) std::swap(i, j);
    return v[exactlin::sym2_index(3, static_cast<std::size_t>(i - 1),
                                  static_cast<std::size_t>(j - 1))];
}

CongruenceGeneratorSet CongruenceGeneratorSet::standard() {
    std::vector<std::pair<std::string, RationalMatrix>> gl3;
    const std::array<std::pair<int, int>, 3> pairs = {{{1, 2}, {1, 3}, {2, 3}}};
    for (auto [i, j] : pairs) {
        std::string word = "e" + std::to_string(i) + " e" + std::to_string(j);
        gl3.emplace_back(word,
                         freegrp::abelianization(freegrp::evaluate_word(word, 3)).to_rational());
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            std::string word = "r" + std::to_string(i) + std::to_string(j) + "^2";
            gl3.emplace_back(word,
                             freegrp::abelianization(freegrp::evaluate_word(word, 3)).to_rational());
        }
    return from_gl3(gl3);
}

CongruenceGeneratorSet CongruenceGeneratorSet::from_gl3(
    const std::vector<std::pair<std::string, RationalMatrix>>& gl3_elements) {
    CongruenceGeneratorSet set;
    for (const auto& [name, m] : gl3_elements) {
        if (!m.is_square() || m.rows() != 3)
            throw PreconditionError("congruence generator '" + name + "' is not 3x3");
        if (!m.is_integer())
            throw PreconditionError("congruence generator '" + name + "' is not integral");
        Rational det = m.determinant();
        if (det != 1 && det != -1)
            throw PreconditionError("congruence generator '" + name + "' is not unimodular");
        IntMatrix zm(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                zm.at(r, c) = static_cast<long long>(m.at(r, c).get_num().get_si());
        if (!zm.congruent_identity_mod(2))
            throw PreconditionError("congruence generator '" + name +
                                    "' is not congruent to the identity mod 2");
        set.gens_.emplace_back(name, sym2_dual_rep(m));
    }
    return set;
}

nlohmann::json SubmoduleClosure::to_json() const {
    nlohmann::json j;
    nlohmann::json vec = nlohmann::json::array();
    for (const Rational& q : start) vec.push_back(exactlin::rational_to_string(q));
    j["vector"] = vec;
    j["closure_dim"] = space.dimension();
    j["trace"] = trace;
    return j;
}

SubmoduleClosure cyclic_submodule(const Vector& v, const CongruenceGeneratorSet& gens,
                                  std::size_t cap) {
    if (cap < 1)
        throw PreconditionError("iteration cap must be at least 1");
    if (v.size() != 6)
        throw PreconditionError("vectors live in the 6-dimensional space");

    SubmoduleClosure closure{v, Subspace::span_of_vectors({v}, 6), {}};

    bool grew = true;
    std::size_t rounds = 0;
    while (grew && closure.space.dimension() < 6) {
        if (++rounds > cap)
            throw CapExceededError("span saturation did not stabilize", cap);
        grew = false;
        for (const auto& [name, matrix] : gens.generators()) {
            for (std::size_t r = 0; r < closure.space.dimension(); ++r) {
                Vector image = matrix * closure.space.basis().row(r);
                if (closure.space.contains(image)) continue;
                std::vector<Vector> extended;
                for (std::size_t k = 0; k < closure.space.dimension(); ++k)
                    extended.push_back(closure.space.basis().row(k));
                extended.push_back(image);
                closure.space = Subspace::span_of_vectors(extended, 6);
                closure.trace.push_back(name);
                grew = true;
                break;  // re-scan with the enlarged span
            }
        }
    }
    return closure;
}

std::vector<const ProbeEntry*> ProbeReport::failures() const {
    std::vector<const ProbeEntry*> out;
    for (const ProbeEntry& e : entries)
        if (e.closure_dim != 6) out.push_back(&e);
    return out;
}

nlohmann::json ProbeReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const ProbeEntry& e : entries) {
        nlohmann::json entry;
        nlohmann::json vec = nlohmann::json::array();
        for (const Rational& q : e.vector) vec.push_back(exactlin::rational_to_string(q));
        entry["label"] = e.label;
        entry["vector"] = vec;
        entry["closure_dim"] = e.closure_dim;
        entry["trace"] = e.trace;
        arr.push_back(std::move(entry));
    }
    nlohmann::json j;
    j["entries"] = arr;
    j["full_count"] = full_count;
    j["total"] = entries.size();
    return j;
}

ProbeReport irreducibility_probe(int sample_count, std::uint64_t seed) {
    if (sample_count < 1)
        throw PreconditionError("sample count must be at least 1");
    CongruenceGeneratorSet gens = CongruenceGeneratorSet::standard();

    ProbeReport report;
    auto run = [&](const std::string& label, const Vector& v) {
        SubmoduleClosure closure = cyclic_submodule(v, gens);
        ProbeEntry entry{label, v, closure.space.dimension(), closure.trace};
        if (entry.closure_dim == 6) ++report.full_count;
        report.entries.push_back(std::move(entry));
    };

    auto monomial_name = [](std::size_t k) {
        auto [a, b] = exactlin::sym2_monomial(3, k);
        return "v" + std::to_string(a + 1) + "v" + std::to_string(b + 1);
    };

    for (std::size_t k = 0; k < 6; ++k) {
        Vector v(6, Rational(0));
        v[k] = 1;
        run("basis " + monomial_name(k), v);
    }
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            Vector sum(6, Rational(0)), diff(6, Rational(0));
            sum[a] = 1;
            sum[b] = 1;
            diff[a] = 1;
            diff[b] = -1;
            run(monomial_name(a) + "+" + monomial_name(b), sum);
            run(monomial_name(a) + "-" + monomial_name(b), diff);
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int s = 0; s < sample_count; ++s) {
        Vector v(6, Rational(0));
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t k = 0; k < 6; ++k) {
                Rational q(numerator(rng), denominator(rng));
                q.canonicalize();
                if (sign(rng)) q = -q;
                v[k] = q;
                if (q != 0) nonzero = true;
            }
        }
        run("random " + std::to_string(s), v);
    }
    return report;
}

}  // namespace outf3::torelli
