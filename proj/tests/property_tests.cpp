#include "doctest.h"
#include "properties.hpp"

namespace {

void expect(const props::Tally& t, int at_least)
{
    CHECK(t.cases >= at_least);
    CHECK_MESSAGE(t.ok(), t.failures << " of " << t.cases << " failed; first: " << t.first);
}

}  // namespace

TEST_CASE("hurwitz moves preserve the product") { expect(props::hurwitz_invariance(1000), 1000); }

TEST_CASE("hurwitz left undoes hurwitz right") { expect(props::hurwitz_inverse(1000), 1000); }

TEST_CASE("cyclic permutation and conjugation conjugate the product") { expect(props::conjugation(1000), 1000); }

TEST_CASE("daisy substitution changes length by -(p-1)") { expect(props::substitution_deltas(1000), 1000); }

TEST_CASE("smith form agrees with gcd of minors") { expect(props::smith_vs_minors(500), 500); }

TEST_CASE("word files round-trip")
{
    expect(props::parser_round_trip(props::shipped_words()), 100);
    expect(props::parser_round_trip_random(1000), 1000);
}
