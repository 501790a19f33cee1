#include "doctest.h"

#include "twist/invariants.hpp"

using namespace twist;

TEST_CASE("euler characteristic and census of base words")
{
    auto x = build_word({"H", 3, -1});
    CHECK(euler_char(x) == 4 - 4 * 3 + static_cast<long long>(x.size()));
    auto c = classify_cycles(x);
    CHECK(c.s0 == static_cast<long long>(x.size()));
    CHECK(c.total() == c.s0);
}

TEST_CASE("hyperelliptic signature formula")
{
    CycleCensus c;
    c.s0 = 4 * 3 + 4 * 2;  // not a word, just arithmetic
    CHECK(sigma_hyperelliptic_exact(c, 3) == Rational(-4 * 20, 7));
    CHECK_THROWS_AS(sigma_hyperelliptic(c, 3), std::domain_error);
    CycleCensus u;
    u.unknown = 1;
    CHECK_THROWS_AS(sigma_hyperelliptic_exact(u, 3), std::domain_error);
    CycleCensus s;
    s.sep[1] = 1;
    // h(g-h)-type term: 4*1*2/7 - 1
    CHECK(sigma_hyperelliptic_exact(s, 3) == Rational(4 * 1 * 2, 7) - Rational(1));
}

TEST_CASE("rational blowdown deltas")
{
    for (int p = 2; p <= 10; ++p) {
        auto d = rational_blowdown_delta(p);
        CHECK(d.de == -(p - 1));
        CHECK(d.dsigma == p - 1);
        CHECK(d.dc1sq == p - 1);
        CHECK(d.db2plus == 0);
    }
    CHECK(sigma_substituted(-32, {{2, 2}, {4, 1}}) == -32 + 2 + 3);
}

TEST_CASE("spin witness on a separating letter")
{
    auto cat = Catalog::standard(3);
    auto w = make_word(cat, {"c1", "y1", "c2"});
    auto s = spin1_witness(w, 2);
    REQUIRE(s.has_value());
    CHECK(s->l == 0);
    CHECK(s->sum_letter == 1);
}

TEST_CASE("spin witness search respects the bound")
{
    auto cat = Catalog::standard(2);
    auto w = make_word(cat, {"c1", "c2"});
    CHECK_FALSE(spin1_witness(w, 3).has_value());
    auto v = make_word(cat, {"c1", "c3", "d1", "e2"});
    auto s = spin1_witness(v, 3);
    if (s) CHECK(s->l <= 3);
}

TEST_CASE("homeomorphism labels")
{
    CHECK(homeo_text(7, 37) == "7CP2#37CP2bar");
    CHECK(homeo_text(1, 16) == "CP2#16CP2bar");
}

TEST_CASE("certificate sign")
{
    CycleCensus base;
    base.s0 = 56;
    CycleCensus derived;
    derived.s0 = 54;
    auto c = nonhyperelliptic_certificate(base, derived, {{2, 1}}, 3);
    // 1 substitution of type 2 removes one letter: predicted sigma rises by 1, formula by 8/7
    CHECK(c.discrepancy == Rational(-1, 7));
}

TEST_CASE("invariant report of a derived word")
{
    auto f = generate({"I", 3, 2});
    auto r = invariant_report(f.word, f.provenance, 2);
    CHECK(r.e == 46);
    CHECK(r.sigma == -30);
    CHECK(r.sigma_path == "provenance");
    REQUIRE(r.b2plus.has_value());
    CHECK(*r.b2plus == 7);
    CHECK(*r.b2minus == 37);
    CHECK(r.h1.trivial());
    CHECK(r.hyperelliptic.certified);
    CHECK(r.hyperelliptic.discrepancy == Rational(6, 7));
}

TEST_CASE("table formats")
{
    auto f = generate({"I", 3, -1});
    std::vector<ReportRow> rows{{invariant_report(f.word, f.provenance, 2), "x"}};
    auto csv = format_rows(rows, TableFormat::csv);
    CHECK(csv.rfind("genus,k,m,e,sigma,b2plus,b2minus,c1sq,chi_h,h1,spin,homeo_label,hyperelliptic", 0) == 0);
    auto md = format_rows(rows, TableFormat::md);
    CHECK(md.find("| genus |") != std::string::npos);
    auto js = format_rows(rows, TableFormat::json);
    CHECK(js.find("\"schema\"") != std::string::npos);
}
