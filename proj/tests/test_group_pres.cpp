#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbiweight/presentation.hpp"
#include "orbiweight/int_matrix.hpp"

using namespace orbiweight;

TEST_CASE("words reduce freely") {
    Word w = Word::gen(0, 2) * Word::gen(0, -2);
    CHECK(w.empty());
    w = Word::gen(0, 1) * Word::gen(1, 1) * Word::gen(1, -1) * Word::gen(0, 3);
    CHECK(w == Word::gen(0, 4));
    CHECK(w.inverse() == Word::gen(0, -4));
    CHECK((Word::gen(0) * Word::gen(1)).inverse() ==
          Word::gen(1, -1) * Word::gen(0, -1));
    CHECK(Word::gen(0).pow(0).empty());
    CHECK(Word::gen(0, 2).pow(-2) == Word::gen(0, -4));
    const Word ab = Word::gen(0) * Word::gen(1);
    CHECK(ab.pow(2) == Word::gen(0) * Word::gen(1) * Word::gen(0) * Word::gen(1));
}

TEST_CASE("exponent sums survive reduction") {
    const Word w = Word::gen(0, 3) * Word::gen(1, -1) * Word::gen(0, -3) * Word::gen(1, 4);
    CHECK(w.exponent_sum(0) == 0);
    CHECK(w.exponent_sum(1) == 3);
    CHECK(equation_relator(Word::gen(0, 2), Word::gen(1, 3)).exponent_sum(1) == -3);
}

TEST_CASE("presentation parsing") {
    const std::string text = "# knot group\n"
                             "x y\n"
                             "x^2 = y^3\n"
                             "x y x^-1 y^-1 # commutator relator\n";
    const Presentation p = parse_presentation(text);
    REQUIRE(p.generators == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0] == Word::gen(0, 2) * Word::gen(1, -3));
    CHECK(print_word(p.relators[1], p) == "x y x^-1 y^-1");
}

TEST_CASE("presentation printing round-trips") {
    Presentation p;
    p.generators = {"t", "x", "z"};
    p.add_relator(Word::gen(1, 3) * Word::gen(2, -3));
    p.add_relator(Word::gen(0) * Word::gen(1) * Word::gen(0, -1) * Word::gen(1, 2));
    const Presentation q = parse_presentation(print_presentation(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
}

TEST_CASE("parse errors are reported") {
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("x\ny^2\n"), ParseError);
    Presentation p;
    p.generators = {"x"};
    CHECK_THROWS_AS(parse_word("x^", p), ParseError);
    CHECK_THROWS_AS(parse_word("3x", p), ParseError);
}

TEST_CASE("smith normal form fixtures") {
    auto mat = [](std::size_t r, std::size_t c, std::vector<i64> v) {
        IntMatrix m(r, c);
        m.a = std::move(v);
        return m;
    };
    CHECK(smith_normal_form(mat(1, 2, {2, -3})).diagonal == std::vector<cpp_int>{1});
    CHECK(smith_normal_form(mat(2, 2, {2, 0, 0, 2})).diagonal == std::vector<cpp_int>{2, 2});
    CHECK(smith_normal_form(mat(2, 2, {-1, -1, -1, -1})).diagonal == std::vector<cpp_int>{1, 0});
    CHECK(smith_normal_form(mat(2, 3, {2, 4, 4, -6, 6, 12})).diagonal ==
          std::vector<cpp_int>{2, 6});
    CHECK(smith_normal_form(IntMatrix(0, 3)).diagonal.empty());
}

TEST_CASE("smith diagonal divisibility holds on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> entry(-9, 9), dim(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (auto& x : m.a) x = entry(rng);
        const SmithResult s = smith_normal_form(m); // self-verifying
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
        }
    }
}

TEST_CASE("abelianization fixtures") {
    const Presentation cyclic6 = parse_presentation("x\nx^6\n");
    auto r = abelianization(cyclic6);
    CHECK(r.rank == 0);
    CHECK(r.torsion == std::vector<i64>{6});
    CHECK_FALSE(r.is_infinite_cyclic);

    const Presentation z2 = parse_presentation("x y\nx y x^-1 y^-1\n");
    r = abelianization(z2);
    CHECK(r.rank == 2);
    CHECK(r.torsion.empty());

    const Presentation trefoil = parse_presentation("x y\nx^2 = y^3\n");
    r = abelianization(trefoil);
    CHECK(r.is_infinite_cyclic);

    const Presentation free1 = parse_presentation("x\n");
    CHECK(abelianization(free1).is_infinite_cyclic);

    const Presentation trivial = parse_presentation("x\nx\n");
    r = abelianization(trivial);
    CHECK((r.rank == 0 && r.torsion.empty()));
}

TEST_CASE("minors criterion fixtures") {
    CHECK(minors_criterion(exponent_matrix(parse_presentation("x y\nx^2 = y^3\n"))));
    CHECK_FALSE(minors_criterion(exponent_matrix(parse_presentation("x\nx^6\n"))));
    CHECK_FALSE(minors_criterion(exponent_matrix(parse_presentation("x y\nx y x^-1 y^-1\n"))));
    // rank g-1 but minor gcd 2: Z + Z/2
    CHECK_FALSE(minors_criterion(exponent_matrix(parse_presentation("x y\nx^2\n"))));
    // one generator, no relators: minors of the empty 0x1 matrix
    CHECK(minors_criterion(exponent_matrix(parse_presentation("x\n"))));
}

namespace {

Presentation random_presentation(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ngen(1, 5), nrel(0, 6), nsyl(0, 6);
    std::uniform_int_distribution<i64> expo(-9, 9);
    Presentation p;
    const int g = ngen(rng);
    for (int i = 0; i < g; ++i) p.generators.push_back("g" + std::to_string(i));
    std::uniform_int_distribution<int> pick(0, g - 1);
    const int r = nrel(rng);
    for (int i = 0; i < r; ++i) {
        Word w;
        const int s = nsyl(rng);
        for (int j = 0; j < s; ++j) w.append(pick(rng), expo(rng));
        p.relators.push_back(w);
    }
    return p;
}

} // namespace

TEST_CASE("minors criterion agrees with the smith oracle on random presentations") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 2000; ++trial) {
        const Presentation p = random_presentation(rng);
        const bool minors = minors_criterion(exponent_matrix(p));
        const bool smith = abelianization(p).is_infinite_cyclic;
        if (minors != smith) {
            CAPTURE(print_presentation(p));
            REQUIRE(minors == smith);
        }
    }
}

TEST_CASE("abelianization is invariant under presentation moves") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Presentation p = random_presentation(rng);
        const auto base = abelianization(p);

        // shuffle relators
        Presentation shuffled = p;
        std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);
        auto moved = abelianization(shuffled);
        CHECK(moved.rank == base.rank);
        CHECK(moved.torsion == base.torsion);

        // invert a relator
        if (!p.relators.empty()) {
            Presentation inverted = p;
            inverted.relators[0] = inverted.relators[0].inverse();
            moved = abelianization(inverted);
            CHECK(moved.rank == base.rank);
            CHECK(moved.torsion == base.torsion);

            // conjugate a relator by a generator
            Presentation conj = p;
            const Word c = Word::gen(0);
            conj.relators[0] = c * conj.relators[0] * c.inverse();
            moved = abelianization(conj);
            CHECK(moved.rank == base.rank);
            CHECK(moved.torsion == base.torsion);
        }

        // adjoin a generator killed by a new relator
        Presentation stab = p;
        stab.generators.push_back("extra");
        stab.add_relator(Word::gen(static_cast<int>(stab.generators.size()) - 1));
        moved = abelianization(stab);
        CHECK(moved.rank == base.rank);
        CHECK(moved.torsion == base.torsion);
    }
}
