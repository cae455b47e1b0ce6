#include <doctest.h>

#include "perfdig/suites.hpp"

using namespace perfdig;

TEST_CASE("suite names round trip") {
    for (const char* name : {"theorem1", "semistrong", "prop2", "structure3", "solvers"})
        CHECK(suite_name(suite_from_name(name)) == name);
    CHECK_THROWS_AS(suite_from_name("bogus"), UnknownNameError);
}

TEST_CASE("small suite runs are clean and deterministic") {
    const SuiteReport t1 = run_suite(SuiteKind::Theorem1, 3, 0, 1);
    CHECK(t1.trials == 64);  // every loopless digraph on three vertices
    CHECK(t1.ok());

    const SuiteReport semi = run_suite(SuiteKind::SemiStrong, 5, 25, 7);
    CHECK(semi.ok());
    CHECK(semi.trials >= 25);

    const SuiteReport prop = run_suite(SuiteKind::Prop2, 5, 25, 7);
    CHECK(prop.ok());
    CHECK(prop.trials == semi.trials);  // identical pair stream

    const SuiteReport s3 = run_suite(SuiteKind::Structure3, 5, 20, 11);
    CHECK(s3.ok());
    CHECK(s3.trials >= 20);

    const SuiteReport sol = run_suite(SuiteKind::Solvers, 4, 30, 3);
    CHECK(sol.ok());
    CHECK(sol.trials == 30);

    const SuiteReport again = run_suite(SuiteKind::SemiStrong, 5, 25, 7);
    CHECK(again.trials == semi.trials);
    CHECK(again.failures.size() == semi.failures.size());
}

TEST_CASE("encode_digraph is compact and stable") {
    CHECK(encode_digraph(Digraph(2)) == "n=2;");
    Digraph d(3);
    d.add_arc(2, 0);
    d.add_arc(0, 1);
    CHECK(encode_digraph(d) == "n=3;(0,1)(2,0)");
}
