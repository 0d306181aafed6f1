#include "outf3/gersten.hpp"

namespace outf3::gersten {

namespace {

using freegrp::GenKind;

GeneratorName rho(int i, int j) { return GeneratorName{GenKind::Rho, i, j}; }
GeneratorName lam(int i, int j) { return GeneratorName{GenKind::Lambda, i, j}; }
GeneratorName eps(int i) { return GeneratorName{GenKind::Epsilon, i}; }

GeneratorWord commutator(const GeneratorWord& a, const GeneratorWord& b) {
    // [a, b] = a b a^{-1} b^{-1}
    GeneratorWord word = a;
    word.insert(word.end(), b.begin(), b.end());
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        word.push_back(GeneratorPower{it->gen, -it->exponent});
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        word.push_back(GeneratorPower{it->gen, -it->exponent});
    return word;
}

GeneratorWord gen_word(const GeneratorName& g, int exponent = 1) {
    return {GeneratorPower{g, exponent}};
}

GeneratorWord concat(std::initializer_list<GeneratorWord> parts) {
    GeneratorWord out;
    for (const GeneratorWord& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

GeneratorWord inverse_of(const GeneratorWord& w) {
    GeneratorWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(GeneratorPower{it->gen, -it->exponent});
    return out;
}

GeneratorWord repeat(const GeneratorWord& w, int times) {
    GeneratorWord out;
    for (int k = 0; k < times; ++k) out.insert(out.end(), w.begin(), w.end());
    return out;
}

}  // namespace

Presentation gersten_presentation(int n) {
    if (n < 3)
        throw PreconditionError("the presentation requires rank >= 3");

    Presentation p;
    p.rank = n;
    p.generators.push_back(eps(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            p.generators.push_back(rho(i, j));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            p.generators.push_back(lam(i, j));
        }

    auto& rel = p.relators;

    // [r_ij, r_kl] = [l_ij, l_kl] = 1 for k not in {i,j}, l != i
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l || k == i || k == j || l == i) continue;
                    rel.push_back(commutator(gen_word(rho(i, j)), gen_word(rho(k, l))));
                    rel.push_back(commutator(gen_word(lam(i, j)), gen_word(lam(k, l))));
                }
        }

    // [l_ij, r_kl] = 1 for k != j, l != i
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l || k == j || l == i) continue;
                    rel.push_back(commutator(gen_word(lam(i, j)), gen_word(rho(k, l))));
                }
        }

    // Four commutator identities with value r_ik^{-1}, and the l-mirror with
    // value l_ik^{-1}, for distinct i, j, k.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                const GeneratorWord rik = gen_word(rho(i, k));
                rel.push_back(concat({commutator(gen_word(rho(i, j), -1), gen_word(rho(j, k), -1)), rik}));
                rel.push_back(concat({commutator(gen_word(rho(i, j)), gen_word(lam(j, k))), rik}));
                rel.push_back(concat({inverse_of(commutator(gen_word(rho(i, j), -1), gen_word(rho(j, k)))), rik}));
                rel.push_back(concat({inverse_of(commutator(gen_word(rho(i, j)), gen_word(lam(j, k), -1))), rik}));

                const GeneratorWord lik = gen_word(lam(i, k));
                rel.push_back(concat({commutator(gen_word(lam(i, j), -1), gen_word(lam(j, k), -1)), lik}));
                rel.push_back(concat({commutator(gen_word(lam(i, j)), gen_word(rho(j, k))), lik}));
                rel.push_back(concat({inverse_of(commutator(gen_word(lam(i, j), -1), gen_word(lam(j, k)))), lik}));
                rel.push_back(concat({inverse_of(commutator(gen_word(lam(i, j)), gen_word(rho(j, k), -1))), lik}));
            }
        }

    // r_ij r_ji^{-1} l_ij = l_ij l_ji^{-1} r_ij and (r_ij r_ji^{-1} l_ij)^4 = 1
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            GeneratorWord lhs = concat({gen_word(rho(i, j)), gen_word(rho(j, i), -1), gen_word(lam(i, j))});
            GeneratorWord rhs = concat({gen_word(lam(i, j)), gen_word(lam(j, i), -1), gen_word(rho(i, j))});
            rel.push_back(concat({lhs, inverse_of(rhs)}));
            rel.push_back(repeat(lhs, 4));
        }

    // [e1, r_ij] = [e1, l_ij] = 1 for i, j != 1
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) {
            if (i == j) continue;
            rel.push_back(commutator(gen_word(eps(1)), gen_word(rho(i, j))));
            rel.push_back(commutator(gen_word(eps(1)), gen_word(lam(i, j))));
        }

    // r_12^{e1} = l_12^{-1} and r_21^{e1} = r_21^{-1}, e1 an involution
    rel.push_back(concat({gen_word(eps(1)), gen_word(rho(1, 2)), gen_word(eps(1)), gen_word(lam(1, 2))}));
    rel.push_back(concat({gen_word(eps(1)), gen_word(rho(2, 1)), gen_word(eps(1)), gen_word(rho(2, 1))}));

    // e1^2 = 1
    rel.push_back(gen_word(eps(1), 2));

    // For each fixed j: product over i != j (ascending) of r_ij l_ij^{-1} = 1.
    // The product order is not pinned by the relation family; ascending i is
    // the recorded choice, and the factors commute in every verified target.
    for (int j = 1; j <= n; ++j) {
        GeneratorWord word;
        for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            word.push_back(GeneratorPower{rho(i, j), 1});
            word.push_back(GeneratorPower{lam(i, j), -1});
        }
        rel.push_back(std::move(word));
    }

    return p;
}

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["rank"] = rank;
    j["generators"] = nlohmann::json::array();
    for (const GeneratorName& g : generators) j["generators"].push_back(freegrp::to_string(g));
    j["relators"] = nlohmann::json::array();
    for (const GeneratorWord& w : relators) j["relators"].push_back(freegrp::to_string(w));
    return j;
}

bool OuterGroup::equal(const Element& a, const Element& b) const {
    return witness(freegrp::compose(a, freegrp::inverse(b))).has_value();
}

std::optional<std::string> OuterGroup::identity_witness(const Element& e) const {
    auto w = witness(e);
    if (!w) return std::nullopt;
    return w->str();
}

std::optional<freegrp::FreeWord> OuterGroup::witness(const Element& e) const {
    const std::string key = e.map_key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto result = freegrp::inner_witness(e);
    cache_.emplace(key, result);
    return result;
}

std::size_t VerificationReport::pass_count() const {
    std::size_t count = 0;
    for (const RelatorOutcome& o : outcomes)
        if (o.passed) ++count;
    return count;
}

std::size_t VerificationReport::fail_count() const {
    return outcomes.size() - pass_count();
}

std::vector<std::string> VerificationReport::failing_relators() const {
    std::vector<std::string> out;
    for (const RelatorOutcome& o : outcomes)
        if (!o.passed) out.push_back(o.relator);
    return out;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const RelatorOutcome& o : outcomes) {
        nlohmann::json entry;
        entry["relator"] = o.relator;
        entry["status"] = o.passed ? "pass" : "fail";
        if (o.witness) entry["witness"] = *o.witness;
        arr.push_back(std::move(entry));
    }
    return arr;
}

Assignment<freegrp::FreeAutomorphism> identity_assignment(const Presentation& p) {
    Assignment<freegrp::FreeAutomorphism> a;
    for (const GeneratorName& g : p.generators)
        a.emplace(freegrp::to_string(g), freegrp::make_generator(g, p.rank));
    return a;
}

Assignment<IntMatrix> abelianization_assignment(const Presentation& p) {
    Assignment<IntMatrix> a;
    for (const GeneratorName& g : p.generators)
        a.emplace(freegrp::to_string(g), freegrp::abelianization(freegrp::make_generator(g, p.rank)));
    return a;
}

}  // namespace outf3::gersten
