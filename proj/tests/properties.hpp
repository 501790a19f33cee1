#pragma once

// Randomized checks shared by the property suite and the acceptance runner.
// Each returns how many cases ran and how many failed, plus the first failure.

#include "oracles.hpp"

#include "twist/relators.hpp"

#include <random>
#include <string>

namespace props {

using namespace twist;

struct Tally {
    int cases = 0;
    int failures = 0;
    std::string first;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0) first = what;
    }
    bool ok() const { return failures == 0; }
};

inline std::vector<std::string> plain_pool(const Catalog& cat)
{
    std::vector<std::string> out;
    for (const auto& c : cat.curves())
        if (c.kind == CurveKind::chain || c.kind == CurveKind::derived) out.push_back(c.name);
    return out;
}

// A short word whose letters carry nontrivial conjugators: random plain letters scrambled by Hurwitz moves.
inline Factorization random_word(std::mt19937& rng, int g, size_t len, int scramble)
{
    auto cat = Catalog::standard(g);
    auto pool = plain_pool(*cat);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::vector<std::string> names;
    for (size_t i = 0; i < len; ++i) names.push_back(pool[pick(rng)]);
    auto w = make_word(cat, names);
    std::uniform_int_distribution<size_t> at(0, len - 2);
    for (int s = 0; s < scramble; ++s) w = rng() % 2 ? hurwitz_right(w, at(rng)) : hurwitz_left(w, at(rng));
    return w;
}

inline Tally hurwitz_invariance(int n, unsigned seed = 1)
{
    std::mt19937 rng(seed);
    Tally t;
    for (int i = 0; i < n; ++i) {
        const int g = 2 + i % 3;
        auto w = random_word(rng, g, 4 + rng() % 4, 2);
        const auto before = word_image(w);
        const size_t k = rng() % (w.size() - 1);
        auto v = rng() % 2 ? hurwitz_right(w, k) : hurwitz_left(w, k);
        t.check(word_image(v) == before, "hurwitz move changed the product at g=" + std::to_string(g));
    }
    return t;
}

inline Tally hurwitz_inverse(int n, unsigned seed = 2)
{
    std::mt19937 rng(seed);
    Tally t;
    for (int i = 0; i < n; ++i) {
        auto w = random_word(rng, 2 + i % 3, 4 + rng() % 4, 2);
        const size_t k = rng() % (w.size() - 1);
        const bool a = hurwitz_left(hurwitz_right(w, k), k).letters == w.letters;
        const bool b = hurwitz_right(hurwitz_left(w, k), k).letters == w.letters;
        t.check(a && b, "HL(HR(w)) != w");
    }
    return t;
}

inline Tally conjugation(int n, unsigned seed = 3)
{
    std::mt19937 rng(seed);
    Tally t;
    for (int i = 0; i < n; ++i) {
        const int g = 2 + i % 3;
        auto w = random_word(rng, g, 4 + rng() % 4, 1);
        const auto img = word_image(w);
        if (i % 2 == 0) {
            const size_t k = rng() % w.size();
            const auto p = window_image(w, 0, k);
            t.check(word_image(cyclic_permute(w, k)) == p.inverse() * img * p, "CYC is not a conjugation");
        } else {
            const Catalog& cat = *w.cat;
            GenWord u;
            const int top = 2 * g + 1;
            for (int j = 0, len = 1 + static_cast<int>(rng() % 3); j < len; ++j)
                u.push_back({cat.chain_name(1 + static_cast<int>(rng() % top)), rng() % 2 ? 1 : -1});
            const auto m = cat.word_matrix(u);
            t.check(word_image(global_conjugate(w, u)) == m * img * m.inverse(), "CONJ is not a conjugation");
        }
    }
    return t;
}

inline Tally substitution_deltas(int n, unsigned seed = 4)
{
    std::mt19937 rng(seed);
    Tally t;
    for (int i = 0; i < n; ++i) {
        const int g = 3 + i % 4;
        auto cat = Catalog::standard(g);
        std::vector<Relator> daisies;
        for (const auto& id : cat->relator_ids()) {
            auto r = *cat->relator(id);
            if (r.p >= 2 && r.type != "chain") daisies.push_back(r);
        }
        const Relator& r = daisies[rng() % daisies.size()];
        auto pool = plain_pool(*cat);
        std::vector<std::string> names;
        const size_t pre = rng() % 4, post = rng() % 4;
        for (size_t j = 0; j < pre; ++j) names.push_back(pool[rng() % pool.size()]);
        names.insert(names.end(), r.lhs.begin(), r.lhs.end());
        for (size_t j = 0; j < post; ++j) names.push_back(pool[rng() % pool.size()]);
        auto w = make_word(cat, names);
        auto s = substitute(w, r, pre);
        const long long d = static_cast<long long>(s.size()) - static_cast<long long>(w.size());
        auto back = substitute(s, r, pre);
        t.check(d == -(r.p - 1) && back.letters == w.letters && word_image(s) == word_image(w),
                "substitution of " + r.id + " gave delta " + std::to_string(d));
    }
    return t;
}

inline Tally smith_vs_minors(int n, unsigned seed = 5)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    Tally t;
    for (int i = 0; i < n; ++i) {
        const int r = dim(rng), c = dim(rng);
        oracle::Mat m(r, std::vector<long long>(c));
        IntMatrix im(r, std::vector<Int>(c));
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b) {
                // sparse-ish so that torsion and rank drops both show up
                m[a][b] = rng() % 3 == 0 ? 0 : entry(rng);
                im[a][b] = Int(m[a][b]);
            }
        auto expect = oracle::invariant_factors(m, r, c);
        auto got = smith_diagonal(im);
        bool same = got.size() == expect.size();
        for (size_t k = 0; same && k < got.size(); ++k) same = got[k] == Int(expect[k]);
        auto grp = smith_invariants(im, r, c);
        int units = 0;
        for (long long d : expect) units += d == 1;
        same = same && grp.rank == r - static_cast<int>(expect.size()) &&
               grp.torsion.size() == expect.size() - static_cast<size_t>(units);
        t.check(same, "smith form disagrees with the minors oracle");
    }
    return t;
}

// Every shipped word, each base word and relator side at g=2..6.
inline std::vector<WordFile> shipped_words()
{
    std::vector<WordFile> out;
    for (const auto& id : shipped_ids()) out.push_back(generate(id));
    for (int g = 2; g <= 6; ++g)
        for (const std::string f : {"H", "I", "G"}) out.push_back(generate({f, g, -1}));
    return out;
}

inline Tally parser_round_trip(const std::vector<WordFile>& words)
{
    Tally t;
    for (const auto& f : words) {
        const std::string text = serialize_wordfile(f.word, f.provenance);
        bool ok = false;
        try {
            auto back = parse_wordfile(text);
            ok = back.word.letters == f.word.letters && back.word.rhs == f.word.rhs &&
                 back.provenance.word_id == f.provenance.word_id && back.provenance.subs == f.provenance.subs &&
                 serialize_wordfile(back.word, back.provenance) == text;
        } catch (const std::exception&) {
        }
        t.check(ok, "round trip failed for " + f.provenance.word_id);
    }
    return t;
}

inline Tally parser_round_trip_random(int n, unsigned seed = 6)
{
    std::mt19937 rng(seed);
    std::vector<WordFile> words;
    for (int i = 0; i < n; ++i) words.push_back({random_word(rng, 2 + i % 5, 3 + rng() % 5, 3), {}});
    return parser_round_trip(words);
}

}  // namespace props
