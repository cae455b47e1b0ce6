#include <doctest.h>

#include "perfdig/digraph.hpp"
#include "perfdig/gen.hpp"

using namespace perfdig;

TEST_CASE("build_digraph basics") {
    const Digraph c3 = build_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.arc_count() == 3);
    CHECK(c3.arc(0, 1));
    CHECK_FALSE(c3.arc(1, 0));

    const Digraph empty = build_digraph(0, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.arc_count() == 0);

    // duplicates collapse
    CHECK(build_digraph(2, {{0, 1}, {0, 1}}) == build_digraph(2, {{0, 1}}));

    CHECK_THROWS_AS(build_digraph(2, {{0, 0}}), LoopArcError);
    CHECK_THROWS_AS(build_digraph(2, {{0, 2}}), OutOfRangeError);
    CHECK_THROWS_AS(Digraph(65), OutOfRangeError);
    CHECK_THROWS_AS(Digraph(-1), OutOfRangeError);
}

TEST_CASE("mask helpers") {
    CHECK(mask_vertices(mask_of({4, 1, 2})) == std::vector<int>{1, 2, 4});
    CHECK(mask_lex_less(mask_of({0, 1, 5}), mask_of({0, 2, 3})));
    CHECK_FALSE(mask_lex_less(mask_of({0, 2, 3}), mask_of({0, 1, 5})));
    CHECK(mask_lex_less(mask_of({0}), mask_of({0, 2})));   // prefix first
    CHECK(mask_lex_less(mask_of({0, 2}), mask_of({1})));
    CHECK_FALSE(mask_lex_less(mask_of({1}), mask_of({1})));
}

TEST_CASE("symmetric and oriented parts") {
    const Digraph c3 = named_instance("c3");
    CHECK(symmetric_part(c3) == Digraph(3));
    CHECK(oriented_part(c3) == c3);

    const Digraph digon = build_digraph(2, {{0, 1}, {1, 0}});
    CHECK(symmetric_part(digon) == digon);
    CHECK(oriented_part(digon) == Digraph(2));

    const Digraph p3p = named_instance("p3_plus");
    CHECK(symmetric_part(p3p) == build_digraph(3, {{0, 1}, {1, 0}}));
    CHECK(oriented_part(p3p) == build_digraph(3, {{1, 2}}));

    const Digraph k3 = named_instance("sym_complete", 3);
    CHECK(oriented_part(k3) == Digraph(3));
}

TEST_CASE("arc sets split into symmetric and oriented parts") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Digraph d = random_digraph({7, 0.3, 0.4, mix64(seed)});
        const Digraph s = symmetric_part(d), o = oriented_part(d);
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v) {
                if (u == v) continue;
                CHECK(d.arc(u, v) == (s.arc(u, v) || o.arc(u, v)));
                CHECK_FALSE((s.arc(u, v) && o.arc(u, v)));
            }
        CHECK(symmetric_part(s) == s);
        CHECK(oriented_part(s) == Digraph(7));
        CHECK(reverse(reverse(d)) == d);
        CHECK(symmetric_part(reverse(d)) == s);
    }
}

TEST_CASE("induced subdigraph relabels by increasing id") {
    const Digraph c3 = named_instance("c3");
    CHECK(induced_subdigraph(c3, mask_of({0, 1})) == build_digraph(2, {{0, 1}}));
    CHECK(induced_subdigraph(c3, c3.full_mask()) == c3);

    Digraph c4_chord = named_instance("dicycle", 4);
    c4_chord.add_arc(0, 2);
    CHECK(induced_subdigraph(c4_chord, mask_of({0, 2, 3})) == named_instance("c3"));

    CHECK_THROWS_AS(induced_subdigraph(c3, vbit(5)), OutOfRangeError);
}

TEST_CASE("nested induction composes") {
    const Digraph d = random_digraph({8, 0.3, 0.3, 99});
    const VertexMask outer = mask_of({0, 2, 3, 5, 7});
    const Digraph h = induced_subdigraph(d, outer);
    // {2,3,7} sit at positions {1,2,4} of the outer subset
    CHECK(induced_subdigraph(h, mask_of({1, 2, 4})) ==
          induced_subdigraph(d, mask_of({2, 3, 7})));
}

TEST_CASE("reverse") {
    const Digraph p3 = named_instance("p3");
    CHECK(reverse(p3) == build_digraph(3, {{2, 1}, {1, 0}}));
    const Digraph sym = named_instance("sym_path", 4);
    CHECK(reverse(sym) == sym);
    const Digraph c3 = named_instance("c3");
    CHECK(reverse(c3) == build_digraph(3, {{1, 0}, {2, 1}, {0, 2}}));
    CHECK_FALSE(reverse(c3) == c3);
}

TEST_CASE("acyclicity") {
    CHECK_FALSE(is_acyclic(build_digraph(2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_acyclic(named_instance("c3")));
    const Digraph tt4 =
        build_digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_acyclic(tt4));
    CHECK(is_acyclic(Digraph(0)));
    CHECK(is_acyclic(Digraph(1)));

    // any digon forces a cycle
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = random_digraph({6, 0.4, 0.3, mix64(seed ^ 77)});
        if (symmetric_part(d).arc_count() > 0) CHECK_FALSE(is_acyclic(d));
    }
}

TEST_CASE("symmetric components") {
    auto blocks = symmetric_components(named_instance("c3"));
    CHECK(blocks == std::vector<VertexMask>{vbit(0), vbit(1), vbit(2)});

    blocks = symmetric_components(named_instance("sym_complete", 4));
    CHECK(blocks == std::vector<VertexMask>{mask_of({0, 1, 2, 3})});

    const Digraph two_digons =
        build_digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}});
    CHECK(symmetric_components(two_digons) ==
          std::vector<VertexMask>{mask_of({0, 1}), mask_of({2, 3})});
}

TEST_CASE("symmetric complement") {
    CHECK(symmetric_complement(Digraph(3)) == named_instance("sym_complete", 3));
    const Digraph c5 = named_instance("sym_cycle", 5);
    CHECK(symmetric_complement(symmetric_complement(c5)) == c5);
    CHECK_THROWS_AS(symmetric_complement(named_instance("c3")), NotSymmetricError);
}
