#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "outf3/free_group.hpp"

using namespace outf3;
using namespace outf3::freegrp;

namespace {

FreeWord random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Letter> letters;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
    return FreeWord::from_letters(letters);
}

bool is_reduced(const FreeWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w.letter(i).index == w.letter(i + 1).index && w.letter(i).sign == -w.letter(i + 1).sign)
            return false;
    return true;
}

// Oracle: enumerate every reduced word of length <= max_len and test the
// conjugation equations directly. Exponential, fine for max_len ~ 6.
std::optional<FreeWord> brute_force_witness(const FreeAutomorphism& aut, std::size_t max_len) {
    const int rank = aut.rank();
    std::vector<FreeWord> frontier{FreeWord{}};
    std::vector<FreeWord> all{FreeWord{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<FreeWord> next;
        for (const FreeWord& w : frontier)
            for (int i = 1; i <= rank; ++i)
                for (int s : {1, -1}) {
                    FreeWord longer = w * FreeWord::generator(i, s);
                    if (longer.size() == len) next.push_back(longer);
                }
        for (const FreeWord& w : next) all.push_back(w);
        frontier = std::move(next);
    }
    for (const FreeWord& w : all) {
        bool ok = true;
        for (int i = 1; i <= rank && ok; ++i)
            ok = aut.image(i) == FreeWord::generator(i).conjugated_by(w);
        if (ok) return w;
    }
    return std::nullopt;
}

const std::vector<std::string> kNamedGenerators3 = {
    "e1", "e2", "e3", "r12", "r13", "r21", "r23", "r31", "r32",
    "l12", "l13", "l21", "l23", "l31", "l32", "s12", "s13", "s23",
    "s14", "s24", "s34", "D",
};

FreeAutomorphism random_short_automorphism(std::mt19937_64& rng, int factors) {
    std::uniform_int_distribution<std::size_t> pick(0, kNamedGenerators3.size() - 1);
    FreeAutomorphism out = FreeAutomorphism::identity(3);
    for (int k = 0; k < factors; ++k)
        out = compose(out, make_generator(parse_generator_name(kNamedGenerators3[pick(rng)]), 3));
    return out;
}

}  // namespace

TEST_CASE("generator definitions match the fixed formulas") {
    // r21: a2 -> a2 a1, others fixed
    FreeAutomorphism r21 = make_generator(parse_generator_name("r21"), 3);
    CHECK(r21.image(2) == FreeWord::generator(2) * FreeWord::generator(1));
    CHECK(r21.image(1) == FreeWord::generator(1));
    CHECK(r21.image(3) == FreeWord::generator(3));

    // e1: a1 -> a1^{-1}
    FreeAutomorphism e1 = make_generator(parse_generator_name("e1"), 3);
    CHECK(e1.image(1) == FreeWord::generator(1, -1));
    CHECK(e1.image(2) == FreeWord::generator(2));

    // s14: a1 -> a1^{-1}, a2 -> a2 a1^{-1}, a3 -> a3 a1^{-1}
    FreeAutomorphism s14 = make_generator(parse_generator_name("s14"), 3);
    CHECK(s14.image(1) == FreeWord::generator(1, -1));
    CHECK(s14.image(2) == FreeWord::generator(2) * FreeWord::generator(1, -1));
    CHECK(s14.image(3) == FreeWord::generator(3) * FreeWord::generator(1, -1));

    // l12: a1 -> a2 a1
    FreeAutomorphism l12 = make_generator(parse_generator_name("l12"), 3);
    CHECK(l12.image(1) == FreeWord::generator(2) * FreeWord::generator(1));

    // s12 swaps, D inverts everything
    FreeAutomorphism s12 = make_generator(parse_generator_name("s12"), 3);
    CHECK(s12.image(1) == FreeWord::generator(2));
    CHECK(s12.image(2) == FreeWord::generator(1));
    FreeAutomorphism delta = make_generator(parse_generator_name("D"), 3);
    for (int i = 1; i <= 3; ++i) CHECK(delta.image(i) == FreeWord::generator(i, -1));
}

TEST_CASE("invalid generators are rejected") {
    CHECK_THROWS_AS(make_generator(GeneratorName{GenKind::Rho, 1, 1}, 3), PreconditionError);
    CHECK_THROWS_AS(make_generator(GeneratorName{GenKind::Rho, 1, 4}, 3), PreconditionError);
    CHECK_THROWS_AS(make_generator(GeneratorName{GenKind::Epsilon, 4}, 3), PreconditionError);
    CHECK_THROWS_AS(make_generator(GeneratorName{GenKind::Sigma, 1, 5}, 3), PreconditionError);
    CHECK_THROWS_AS(make_generator(GeneratorName{GenKind::Sigma, 2, 2}, 3), PreconditionError);
}

TEST_CASE("apply substitutes and reduces") {
    FreeAutomorphism r21 = evaluate_word("r21", 3);
    CHECK(r21.apply(FreeWord::generator(2)) == FreeWord::generator(2) * FreeWord::generator(1));

    FreeAutomorphism id = FreeAutomorphism::identity(3);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        FreeWord w = random_word(rng, 3, 40);
        CHECK(id.apply(w) == w);
    }

    // e1 on a1 a2 a1
    FreeAutomorphism e1 = evaluate_word("e1", 3);
    FreeWord w = FreeWord::generator(1) * FreeWord::generator(2) * FreeWord::generator(1);
    FreeWord expect =
        FreeWord::generator(1, -1) * FreeWord::generator(2) * FreeWord::generator(1, -1);
    CHECK(e1.apply(w) == expect);

    CHECK_THROWS_AS(e1.apply(FreeWord::generator(5)), PreconditionError);
}

TEST_CASE("free reduction is idempotent and apply returns reduced words") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        FreeWord w = random_word(rng, 3, 64);
        CHECK(is_reduced(w));
        CHECK(FreeWord::from_letters(w.letters()) == w);
        FreeAutomorphism aut = random_short_automorphism(rng, 4);
        CHECK(is_reduced(aut.apply(w)));
    }
}

TEST_CASE("apply is a homomorphism on concatenation") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        FreeAutomorphism aut = random_short_automorphism(rng, 5);
        FreeWord u = random_word(rng, 3, 20);
        FreeWord v = random_word(rng, 3, 20);
        CHECK(aut.apply(u * v) == aut.apply(u) * aut.apply(v));
    }
}

TEST_CASE("compose applies right factor first") {
    // e1 s14 acts on a2 as a2 -> a2 a1, matching r21 r31
    FreeAutomorphism left = evaluate_word("e1 s14", 3);
    CHECK(left.apply(FreeWord::generator(2)) == FreeWord::generator(2) * FreeWord::generator(1));
    FreeAutomorphism right = evaluate_word("r21 r31", 3);
    CHECK(left.same_map(right));

    // l12 l21^-1 r12 equals e1 s12 exactly
    FreeAutomorphism m12 = evaluate_word("l12 l21^-1 r12", 3);
    CHECK(m12.image(1) == FreeWord::generator(2));
    CHECK(m12.image(2) == FreeWord::generator(1, -1));
    CHECK(m12.same_map(evaluate_word("e1 s12", 3)));

    std::mt19937_64 rng(5);
    FreeAutomorphism x = random_short_automorphism(rng, 6);
    CHECK(compose(x, FreeAutomorphism::identity(3)).same_map(x));

    CHECK_THROWS_AS(compose(FreeAutomorphism::identity(2), FreeAutomorphism::identity(3)),
                    PreconditionError);
}

TEST_CASE("compose is associative on sampled words") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        FreeAutomorphism a = random_short_automorphism(rng, 3);
        FreeAutomorphism b = random_short_automorphism(rng, 3);
        FreeAutomorphism c = random_short_automorphism(rng, 3);
        CHECK(compose(compose(a, b), c).same_map(compose(a, compose(b, c))));
    }
}

TEST_CASE("inverse undoes every named generator") {
    for (const std::string& token : kNamedGenerators3) {
        FreeAutomorphism g = make_generator(parse_generator_name(token), 3);
        CHECK(compose(g, inverse(g)).is_identity());
        CHECK(compose(inverse(g), g).is_identity());
    }
    // involutions
    CHECK(inverse(evaluate_word("e1", 3)).same_map(evaluate_word("e1", 3)));
    // r21^{-1}: a2 -> a2 a1^{-1}
    FreeAutomorphism r21inv = inverse(evaluate_word("r21", 3));
    CHECK(r21inv.image(2) == FreeWord::generator(2) * FreeWord::generator(1, -1));
    CHECK(inverse(FreeAutomorphism::identity(3)).is_identity());

    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        FreeAutomorphism a = random_short_automorphism(rng, 5);
        CHECK(compose(a, inverse(a)).is_identity());
    }
}

TEST_CASE("inner witness on conjugations and the identity") {
    // r_i1 l_i1^{-1} sends a_i to a1^{-1} a_i a1; the product over i = 2, 3
    // is conjugation by a1^{-1}.
    FreeWord conjugator = FreeWord::generator(1, -1);
    FreeAutomorphism inner = evaluate_word("r21 l21^-1 r31 l31^-1", 3);
    for (int i = 1; i <= 3; ++i)
        CHECK(inner.image(i) == FreeWord::generator(i).conjugated_by(conjugator));
    auto w = inner_witness(inner);
    REQUIRE(w.has_value());
    CHECK(*w == conjugator);

    auto empty = inner_witness(FreeAutomorphism::identity(3));
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    CHECK(!inner_witness(evaluate_word("e1", 3)).has_value());
}

TEST_CASE("inner witness agrees with brute force on short automorphisms") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 60; ++t) {
        FreeAutomorphism aut = random_short_automorphism(rng, 3);
        std::size_t longest = 0;
        for (int i = 1; i <= 3; ++i) longest = std::max(longest, aut.image(i).size());
        if (longest > 3) continue;  // keep the oracle within length 6
        auto fast = inner_witness(aut);
        auto slow = brute_force_witness(aut, 6);
        CHECK(fast.has_value() == slow.has_value());
        if (fast && slow) {
            for (int i = 1; i <= 3; ++i)
                CHECK(aut.image(i) == FreeWord::generator(i).conjugated_by(*fast));
        }
    }
    // conjugations constructed directly, mixed letters
    for (int t = 0; t < 20; ++t) {
        FreeWord w = random_word(rng, 3, 3);
        FreeAutomorphism aut = FreeAutomorphism::identity(3);
        // compose conjugation by each letter of w via the generator identities
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
            std::string tok_r, tok_l;
            // conjugation by a_k = product over i != k of r_ik l_ik^{-1} (inner)
            int k = it->index;
            FreeAutomorphism step = FreeAutomorphism::identity(3);
            for (int i = 1; i <= 3; ++i) {
                if (i == k) continue;
                FreeAutomorphism ri = evaluate_word("r" + std::to_string(i) + std::to_string(k), 3);
                FreeAutomorphism li = evaluate_word("l" + std::to_string(i) + std::to_string(k), 3);
                step = compose(step, compose(ri, inverse(li)));
            }
            if (it->sign < 0) step = inverse(step);
            aut = compose(step, aut);
        }
        auto fast = inner_witness(aut);
        REQUIRE(fast.has_value());
        for (int i = 1; i <= 3; ++i)
            CHECK(aut.image(i) == FreeWord::generator(i).conjugated_by(*fast));
    }
}

TEST_CASE("outer equality examples") {
    CHECK(outer_equal(evaluate_word("e1 s14", 3), evaluate_word("r31 r21", 3)));
    CHECK(!outer_equal(evaluate_word("r21", 3), evaluate_word("l21", 3)));

    // (l21)^{D s23} = r31
    FreeAutomorphism h = evaluate_word("D s23", 3);
    FreeAutomorphism conj = compose(inverse(h), compose(evaluate_word("l21", 3), h));
    CHECK(outer_equal(conj, evaluate_word("r31", 3)));
}

TEST_CASE("outer equality is an equivalence relation on samples") {
    std::mt19937_64 rng(47);
    std::vector<FreeAutomorphism> sample;
    for (int t = 0; t < 8; ++t) sample.push_back(random_short_automorphism(rng, 3));
    for (const auto& a : sample) CHECK(outer_equal(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample) CHECK(outer_equal(a, b) == outer_equal(b, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (outer_equal(a, b) && outer_equal(b, c)) CHECK(outer_equal(a, c));
}

TEST_CASE("abelianization matrices") {
    IntMatrix ab_r21 = abelianization(evaluate_word("r21", 3));
    IntMatrix expect_r21 = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(ab_r21 == expect_r21);

    IntMatrix ab_e1 = abelianization(evaluate_word("e1", 3));
    CHECK(ab_e1 == IntMatrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    IntMatrix ab_delta = abelianization(evaluate_word("D", 3));
    CHECK(ab_delta == IntMatrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    CHECK(abelianization(evaluate_word("e1 e2 e3", 3)) == ab_delta);
}

TEST_CASE("abelianization is multiplicative with unit determinant") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 40; ++t) {
        FreeAutomorphism a = random_short_automorphism(rng, 4);
        FreeAutomorphism b = random_short_automorphism(rng, 4);
        CHECK(abelianization(compose(a, b)) == abelianization(a) * abelianization(b));
        long long det = abelianization(a).determinant();
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("generator word parser") {
    GeneratorWord w = parse_generator_word("e1 r21^-1 s23 D^2");
    REQUIRE(w.size() == 4);
    CHECK(w[1].exponent == -1);
    CHECK(w[3].exponent == 2);
    CHECK(to_string(w) == "e1 r21^-1 s23 D^2");
    CHECK_THROWS_AS(parse_generator_word("q17"), ParseError);
    CHECK_THROWS_AS(parse_generator_word("r21^x"), ParseError);
}
