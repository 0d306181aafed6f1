#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "outf3/gersten.hpp"

using namespace outf3;
using namespace outf3::gersten;
using freegrp::FreeAutomorphism;
using freegrp::evaluate_word;

namespace {

bool has_relator(const Presentation& p, const std::string& word) {
    return std::any_of(p.relators.begin(), p.relators.end(), [&](const GeneratorWord& w) {
        return freegrp::to_string(w) == word;
    });
}

std::vector<FreeAutomorphism> outer_generators(std::initializer_list<const char*> words) {
    std::vector<FreeAutomorphism> gens;
    for (const char* w : words) gens.push_back(evaluate_word(w, 3));
    return gens;
}

}  // namespace

TEST_CASE("presentation shape for n = 3") {
    Presentation p = gersten_presentation(3);
    CHECK(p.generators.size() == 13);  // 1 + 2 * 3 * 2
    CHECK_THROWS_AS(gersten_presentation(2), PreconditionError);

    // (r12 r21^-1 l12)^4 = 1
    CHECK(has_relator(p, "r12 r21^-1 l12 r12 r21^-1 l12 r12 r21^-1 l12 r12 r21^-1 l12"));
    // rewriting of r12^{e1} = l12^{-1}
    CHECK(has_relator(p, "e1 r12 e1 l12"));
    // e1^2 = 1
    CHECK(has_relator(p, "e1^2"));
    // product family for fixed j = 1, ascending i
    CHECK(has_relator(p, "r21 l21^-1 r31 l31^-1"));
}

TEST_CASE("presentation serializes generator names and relator words") {
    Presentation p = gersten_presentation(3);
    nlohmann::json j = p.to_json();
    CHECK(j["rank"] == 3);
    CHECK(j["generators"].size() == 13);
    CHECK(j["relators"].size() == p.relators.size());
    CHECK(j["generators"][0] == "e1");
}

TEST_CASE("every relator abelianizes to the identity matrix") {
    Presentation p = gersten_presentation(3);
    IntMatrixGroup target(3);
    auto report = verify_homomorphism(p, abelianization_assignment(p), target);
    CHECK(report.outcomes.size() == p.relators.size());
    CHECK(report.pass_count() + report.fail_count() == report.outcomes.size());
    CHECK(report.all_passed());
}

TEST_CASE("identity assignment into outer automorphisms certifies the relators") {
    Presentation p = gersten_presentation(3);
    OuterGroup target(3);
    auto report = verify_homomorphism(p, identity_assignment(p), target);
    CHECK(report.all_passed());
    // every passing relator carries the conjugating witness
    for (const RelatorOutcome& o : report.outcomes) CHECK(o.witness.has_value());
}

TEST_CASE("corrupted assignment fails and is reported") {
    Presentation p = gersten_presentation(3);
    IntMatrixGroup target(3);
    auto assignment = abelianization_assignment(p);
    assignment.at("r21") = freegrp::abelianization(evaluate_word("r12", 3));
    auto report = verify_homomorphism(p, assignment, target);
    CHECK(report.fail_count() >= 1);
    CHECK(!report.all_passed());
    CHECK(report.failing_relators().size() == report.fail_count());

    nlohmann::json j = report.to_json();
    std::size_t fails = 0;
    for (const auto& entry : j)
        if (entry["status"] == "fail") ++fails;
    CHECK(fails == report.fail_count());
}

TEST_CASE("missing assignment entries are precondition errors") {
    Presentation p = gersten_presentation(3);
    IntMatrixGroup target(3);
    auto assignment = abelianization_assignment(p);
    assignment.erase("l32");
    CHECK_THROWS_AS(verify_homomorphism(p, assignment, target), PreconditionError);
}

TEST_CASE("closure of transposition images has order 6") {
    OuterGroup target(3);
    auto set = closure(target, outer_generators({"s12", "s13"}), 100);
    CHECK(set.order() == 6);
    CHECK(set.contains(target, target.identity()));
}

TEST_CASE("closure caps overflow with a named cap") {
    OuterGroup target(3);
    CHECK_THROWS_AS(closure(target, outer_generators({"s12", "s13"}), 4), CapExceededError);
    try {
        closure(target, outer_generators({"s12", "s13"}), 4);
    } catch (const CapExceededError& e) {
        CHECK(e.cap() == 4);
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("finite subgroup orders: W3, G3, S4, V4") {
    OuterGroup target(3);

    auto w3 = closure(target, outer_generators({"e1", "s12", "s13"}), 200);
    CHECK(w3.order() == 48);

    auto g3 = closure(target, outer_generators({"D", "s12", "s13", "s14"}), 200);
    CHECK(g3.order() == 48);

    auto s4 = closure(target, outer_generators({"s12", "s13", "s14"}), 200);
    CHECK(s4.order() == 24);

    // S3 sits inside W3
    auto s3 = closure(target, outer_generators({"s12", "s13"}), 200);
    for (const auto& e : s3.elements) CHECK(w3.contains(target, e));

    // the Klein four set inside G3's closure: 4 elements, closed
    std::vector<FreeAutomorphism> v4 = {
        FreeAutomorphism::identity(3),
        evaluate_word("s12 s34", 3),
        evaluate_word("s13 s24", 3),
        evaluate_word("s14 s23", 3),
    };
    for (const auto& e : v4) CHECK(g3.contains(target, e));
    for (std::size_t i = 0; i < v4.size(); ++i)
        for (std::size_t j = i + 1; j < v4.size(); ++j)
            CHECK(!target.equal(v4[i], v4[j]));
    for (const auto& a : v4)
        for (const auto& b : v4) {
            auto prod = target.multiply(a, b);
            bool in_set = false;
            for (const auto& e : v4) in_set = in_set || target.equal(prod, e);
            CHECK(in_set);
        }
}

TEST_CASE("Delta is central in G3's closure") {
    OuterGroup target(3);
    auto g3 = closure(target, outer_generators({"D", "s12", "s13", "s14"}), 200);
    FreeAutomorphism delta = evaluate_word("D", 3);
    for (const auto& e : g3.elements)
        CHECK(target.equal(target.multiply(delta, e), target.multiply(e, delta)));
}
