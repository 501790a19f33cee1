#include "doctest.h"
#include "oracles.hpp"

#include "twist/word.hpp"

using namespace twist;

namespace {

std::shared_ptr<const Catalog> cat3() { return Catalog::standard(3); }

// Chain name c<i> as the braid generator sigma_i.
std::vector<std::pair<int, int>> as_braid(const GenWord& w)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& x : w) out.push_back({std::stoi(x.name.substr(1)), x.exp});
    return out;
}

}  // namespace

TEST_CASE("normal form of letters")
{
    auto cat = cat3();
    // a conjugator commuting with the base is stripped
    CHECK(normalize(*cat, Letter{{{"c5", 1}}, "c1"}) == plain("c1"));
    // aliases expand to their recipe
    auto d1 = normalize(*cat, plain("d1"));
    CHECK(d1.base == "c1");
    CHECK(d1.conj == GenWord{{"c2", 1}});
    // free reduction
    CHECK(reduce_word(*cat, {{"c2", 1}, {"c2", -1}, {"c3", 1}}) == GenWord{{"c3", 1}});
    // commuting generators reach a fixed trace order
    CHECK(normalize(*cat, Letter{{{"c3", 1}, {"c1", 1}}, "c2"}) == normalize(*cat, Letter{{{"c1", 1}, {"c3", 1}}, "c2"}));
}

TEST_CASE("letter comparison reports homology-only coincidences")
{
    auto cat = cat3();
    CHECK(letters_equal(*cat, plain("d1"), Letter{{{"c2", 1}}, "c1"}) == LetterRelation::equal);
    CHECK(letters_equal(*cat, plain("c1"), plain("c3")) == LetterRelation::distinct);
    // dbar1 and e2 share a class but are different words
    CHECK(letters_equal(*cat, plain("dbar1"), plain("e2")) == LetterRelation::homology_equal_only);
}

TEST_CASE("hurwitz moves")
{
    auto w = make_word(cat3(), {"c1", "c2", "c3"});
    auto r = hurwitz_right(w, 0);
    CHECK(r.letters[1] == plain("c1"));
    CHECK(r.letters[0] == normalize(*w.cat, Letter{{{"c1", 1}}, "c2"}));
    CHECK(word_image(r) == word_image(w));
    auto back = hurwitz_left(r, 0);
    CHECK(back.letters == w.letters);
    CHECK_THROWS_AS(hurwitz_right(w, 2), StepError);
}

TEST_CASE("commutation and braid moves check registration")
{
    auto w = make_word(cat3(), {"c1", "c3", "c1", "c2", "c1"});
    auto s = commute_adjacent(w, 0);
    CHECK(s.letters[0] == plain("c3"));
    CHECK_THROWS_AS(commute_adjacent(w, 2), StepError);
    auto b = braid_rewrite(w, 2);
    CHECK(b.letters[2] == plain("c2"));
    CHECK(b.letters[3] == plain("c1"));
    CHECK(b.letters[4] == plain("c2"));
    CHECK_THROWS_AS(braid_rewrite(w, 0), StepError);
}

TEST_CASE("cyclic permutation and conjugation")
{
    auto w = make_word(cat3(), {"c1", "c2", "c3", "c4"});
    auto c = cyclic_permute(w, 1);
    CHECK(c.letters.front() == plain("c2"));
    CHECK(c.letters.back() == plain("c1"));
    auto u = parse_genword(*w.cat, "c2 c3^-1");
    auto cw = global_conjugate(w, u);
    auto m = w.cat->word_matrix(u);
    CHECK(word_image(cw) == m * word_image(w) * m.inverse());
}

TEST_CASE("action facts in both pattern directions")
{
    auto cat = cat3();
    auto f = *cat->fact("R1:5,2,3");  // c5 c4 c3 c2 . c4 = c3 . c5 c4 c3 c2
    auto w = make_word(cat, {"c5", "c4", "c3", "c2", "c4"});
    auto a = apply_action_fact(w, f, 0);
    std::vector<Letter> expect;
    for (auto n : {"c3", "c5", "c4", "c3", "c2"}) expect.push_back(plain(n));
    CHECK(a.letters == expect);
    auto b = apply_action_fact(a, f, 0);
    CHECK(b.letters == w.letters);
}

TEST_CASE("chain facts hold in the braid group")
{
    // The chain curves generate a copy of the Artin braid group; the actor relations are braid identities.
    for (int g = 2; g <= 4; ++g) {
        auto cat = Catalog::standard(g);
        const int top = 2 * g + 1, n = top + 1;
        std::vector<std::string> ids;
        for (int k = 1; k <= top; ++k)
            for (int m = 1; m <= top; ++m)
                for (int i = 1; i <= top; ++i) {
                    ids.push_back("R1:" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(i));
                    ids.push_back("R2:" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(i));
                }
        for (int i = 1; i < top; ++i) ids.push_back("SH:" + std::to_string(i));
        int checked = 0;
        for (const auto& id : ids) {
            auto f = cat->fact(id);
            if (!f) continue;
            CAPTURE(id);
            auto actor = as_braid(f->actor);
            auto lhs = actor;
            lhs.push_back({std::stoi(f->source.substr(1)), 1});
            std::vector<std::pair<int, int>> rhs{{std::stoi(f->target.substr(1)), 1}};
            rhs.insert(rhs.end(), actor.begin(), actor.end());
            CHECK(oracle::braid(n, lhs) == oracle::braid(n, rhs));
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("substitution replaces one side")
{
    auto cat = cat3();
    auto r = *cat->relator("lantern");
    auto w = make_word(cat, r.lhs);
    auto s = substitute(w, r, 0);
    CHECK(s.size() == r.rhs.size());
    CHECK(word_image(s) == word_image(w));
    auto back = substitute(s, r, 0);
    CHECK(back.letters == w.letters);
    CHECK_THROWS_AS(substitute(make_word(cat, {"c1"}), r, 0), StepError);
}

TEST_CASE("conjugator parsing")
{
    auto cat = cat3();
    CHECK(parse_genword(*cat, "c1^2 c3^-1") == GenWord{{"c1", 1}, {"c1", 1}, {"c3", -1}});
    CHECK(format_genword({{"c1", 1}, {"c1", 1}, {"c3", -1}}) == "c1^2 c3^-1");
    CHECK(parse_genword(*cat, "phi") == phi_word(*cat));
    // phi = c7^4 c5^3 c3^2 c1 at genus 3
    CHECK(phi_word(*cat).size() == 10);
    CHECK_THROWS(parse_genword(*cat, "nosuch"));
}

TEST_CASE("commutation suggestions")
{
    auto w = make_word(cat3(), {"c1", "c3", "c5", "c2"});
    auto s = suggest_commutations(w, {0, 3});
    CHECK_FALSE(s.ok);
    auto t = suggest_commutations(make_word(cat3(), {"c1", "c3", "c5", "c7"}), {0, 3});
    REQUIRE(t.ok);
    CHECK_FALSE(t.swaps.empty());
}
