#include "twist/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twist {

Letter plain(const std::string& name) { return Letter{{}, name}; }

Factorization make_word(std::shared_ptr<const Catalog> cat, const std::vector<std::string>& names)
{
    Factorization w;
    w.cat = std::move(cat);
    for (const auto& n : names) {
        w.cat->at(n);
        w.letters.push_back(normalize(*w.cat, plain(n)));
    }
    return w;
}

GenWord expand_gens(const Catalog& cat, const GenWord& w)
{
    GenWord out;
    for (const auto& x : w) {
        const CurveEntry& e = cat.at(x.name);
        if (!e.alias) {
            out.push_back(x);
            continue;
        }
        GenWord u = expand_gens(cat, e.def_conj);
        GenWord mid = expand_gens(cat, {{e.def_base, x.exp}});
        out.insert(out.end(), u.begin(), u.end());
        out.insert(out.end(), mid.begin(), mid.end());
        GenWord ui = inverse(u);
        out.insert(out.end(), ui.begin(), ui.end());
    }
    return out;
}

GenWord reduce_word(const Catalog& cat, const GenWord& w)
{
    GenWord out;
    for (const auto& x : w) {
        bool cancelled = false;
        for (size_t k = out.size(); k-- > 0;) {
            if (out[k].name == x.name) {
                if (out[k].exp == -x.exp) {
                    out.erase(out.begin() + static_cast<long>(k));
                    cancelled = true;
                }
                break;
            }
            if (!cat.commute(out[k].name, x.name)) break;
        }
        if (!cancelled) out.push_back(x);
    }
    return out;
}

namespace {

bool commutes_with_all(const Catalog& cat, const GenWord& w, size_t from, size_t to, const std::string& name)
{
    for (size_t k = from; k < to; ++k)
        if (!cat.commute(w[k].name, name)) return false;
    return true;
}

GenWord lex_form(const Catalog& cat, GenWord w)
{
    GenWord out;
    auto key = [&](const Gen& x) { return std::make_pair(cat.at(x.name).order, x.exp > 0 ? 0 : 1); };
    while (!w.empty()) {
        size_t best = w.size();
        for (size_t j = 0; j < w.size(); ++j) {
            if (!commutes_with_all(cat, w, 0, j, w[j].name)) continue;
            if (best == w.size() || key(w[j]) < key(w[best])) best = j;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<long>(best));
    }
    return out;
}

}  // namespace

Letter normalize(const Catalog& cat, const Letter& l)
{
    GenWord conj = expand_gens(cat, l.conj);
    std::string base = l.base;
    while (true) {
        const CurveEntry& e = cat.at(base);
        if (!e.alias) break;
        GenWord d = expand_gens(cat, e.def_conj);
        conj.insert(conj.end(), d.begin(), d.end());
        base = e.def_base;
    }
    conj = reduce_word(cat, conj);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = conj.size(); j-- > 0;) {
            const std::string& x = conj[j].name;
            if (!(x == base || cat.disjoint(x, base))) continue;
            if (!commutes_with_all(cat, conj, j + 1, conj.size(), x)) continue;
            conj.erase(conj.begin() + static_cast<long>(j));
            changed = true;
            break;
        }
    }
    return Letter{lex_form(cat, conj), base};
}

HomClass letter_class(const Catalog& cat, const Letter& l)
{
    return cat.apply_word(l.conj, cat.at(l.base).cls);
}

std::vector<std::string> support(const Catalog& cat, const Letter& l)
{
    Letter n = normalize(cat, l);
    std::set<std::string> s{n.base};
    for (const auto& x : n.conj) s.insert(x.name);
    return {s.begin(), s.end()};
}

LetterRelation letters_equal(const Catalog& cat, const Letter& a, const Letter& b)
{
    if (normalize(cat, a) == normalize(cat, b)) return LetterRelation::equal;
    if (equal_up_to_sign(letter_class(cat, a), letter_class(cat, b))) return LetterRelation::homology_equal_only;
    return LetterRelation::distinct;
}

const char* relation_name(LetterRelation r)
{
    switch (r) {
    case LetterRelation::equal: return "equal";
    case LetterRelation::distinct: return "distinct";
    case LetterRelation::homology_equal_only: return "homology-equal-only";
    }
    return "distinct";
}

SpMatrix window_image(const Factorization& w, size_t from, size_t to)
{
    std::vector<SignedClass> f;
    for (size_t k = from; k < to; ++k) f.push_back({letter_class(*w.cat, w.letters[k]), 1});
    return product_image(w.genus(), f);
}

SpMatrix word_image(const Factorization& w) { return window_image(w, 0, w.size()); }

bool is_relator(const Factorization& w) { return word_image(w).is_identity(); }

namespace {

void need(bool cond, const std::string& why)
{
    if (!cond) throw StepError(why);
}

void need_index(const Factorization& w, size_t i, size_t span)
{
    need(i + span <= w.size(), "index " + std::to_string(i + 1) + " out of range for a word of length " +
                                   std::to_string(w.size()));
}

void check_window(const Factorization& before, const Factorization& after, size_t from, size_t to_before,
                  size_t to_after, const char* what)
{
    if (window_image(before, from, to_before) != window_image(after, from, to_after))
        throw StepError(std::string(what) + " changed the Sp image");
}

}  // namespace

Factorization hurwitz_right(const Factorization& w, size_t i)
{
    need_index(w, i, 2);
    const Catalog& cat = *w.cat;
    const Letter a = w.letters[i], b = w.letters[i + 1];
    GenWord c = a.conj;
    c.push_back({a.base, 1});
    GenWord ai = inverse(a.conj);
    c.insert(c.end(), ai.begin(), ai.end());
    c.insert(c.end(), b.conj.begin(), b.conj.end());
    Factorization out = w;
    out.letters[i] = normalize(cat, Letter{c, b.base});
    out.letters[i + 1] = a;
    check_window(w, out, i, i + 2, i + 2, "HR");
    return out;
}

Factorization hurwitz_left(const Factorization& w, size_t i)
{
    need_index(w, i, 2);
    const Catalog& cat = *w.cat;
    const Letter a = w.letters[i], b = w.letters[i + 1];
    GenWord c = b.conj;
    c.push_back({b.base, -1});
    GenWord bi = inverse(b.conj);
    c.insert(c.end(), bi.begin(), bi.end());
    c.insert(c.end(), a.conj.begin(), a.conj.end());
    Factorization out = w;
    out.letters[i] = b;
    out.letters[i + 1] = normalize(cat, Letter{c, a.base});
    check_window(w, out, i, i + 2, i + 2, "HL");
    return out;
}

Factorization cyclic_permute(const Factorization& w, size_t k)
{
    Factorization out = w;
    if (w.letters.empty()) return out;
    k %= w.size();
    std::rotate(out.letters.begin(), out.letters.begin() + static_cast<long>(k), out.letters.end());
    return out;
}

Factorization global_conjugate(const Factorization& w, const GenWord& u)
{
    const Catalog& cat = *w.cat;
    for (const auto& x : u) {
        cat.at(x.name);
        need(!cat.is_boundary_letter(x.name), "CONJ by a boundary letter is meaningless");
    }
    Factorization out = w;
    for (auto& l : out.letters) {
        GenWord c = u;
        c.insert(c.end(), l.conj.begin(), l.conj.end());
        l = normalize(cat, Letter{c, l.base});
    }
    const SpMatrix m = cat.word_matrix(u);
    for (size_t k = 0; k < w.size(); ++k)
        if (!equal_up_to_sign(letter_class(cat, out.letters[k]), m.apply(letter_class(cat, w.letters[k]))))
            throw StepError("CONJ: letter " + std::to_string(k + 1) + " class is not the conjugated class");
    return out;
}

bool letters_commute(const Catalog& cat, const Letter& a, const Letter& b)
{
    if (a == b) return true;
    // Conjugating both letters by a shared conjugator prefix does not change disjointness.
    size_t p = 0;
    while (p < a.conj.size() && p < b.conj.size() && a.conj[p] == b.conj[p]) ++p;
    Letter ra = normalize(cat, Letter{GenWord(a.conj.begin() + static_cast<long>(p), a.conj.end()), a.base});
    Letter rb = normalize(cat, Letter{GenWord(b.conj.begin() + static_cast<long>(p), b.conj.end()), b.base});
    if (ra == rb) return true;
    if (pairing(letter_class(cat, ra), letter_class(cat, rb)) != 0) return false;
    for (const auto& x : support(cat, ra))
        for (const auto& y : support(cat, rb))
            if (!cat.disjoint(x, y)) return false;
    return true;
}

Factorization commute_adjacent(const Factorization& w, size_t i)
{
    need_index(w, i, 2);
    need(letters_commute(*w.cat, w.letters[i], w.letters[i + 1]),
         "COMM: letters " + std::to_string(i + 1) + "," + std::to_string(i + 2) + " are not registered disjoint");
    Factorization out = w;
    std::swap(out.letters[i], out.letters[i + 1]);
    check_window(w, out, i, i + 2, i + 2, "COMM");
    return out;
}

Factorization braid_rewrite(const Factorization& w, size_t i)
{
    need_index(w, i, 3);
    const Letter& x = w.letters[i];
    const Letter& y = w.letters[i + 1];
    const Letter& z = w.letters[i + 2];
    need(x == z && x.conj == y.conj, "BRAID: letters do not form t_a t_b t_a");
    need(w.cat->braid_pair(x.base, y.base), "BRAID: " + x.base + "," + y.base + " is not a registered braid pair");
    Factorization out = w;
    out.letters[i] = y;
    out.letters[i + 1] = x;
    out.letters[i + 2] = y;
    check_window(w, out, i, i + 3, i + 3, "BRAID");
    return out;
}

Factorization apply_action_fact(const Factorization& w, const ActionFact& f, size_t i)
{
    const Catalog& cat = *w.cat;
    need(cat.fact_holds(f), "FACT " + f.id + " is not validated");
    need_index(w, i, 1);
    const size_t L = f.actor.size();
    Factorization out = w;
    const Letter& first = w.letters[i];

    if (first.conj.empty() || i + L < w.size()) {
        // Pattern mode: the actor letters must appear literally, all sharing one conjugator.
        auto same = [&](size_t k, const std::string& name) {
            return k < w.size() && w.letters[k].conj == first.conj &&
                   w.letters[k] == normalize(cat, Letter{first.conj, name});
        };
        bool actor_first = true, target_first = true;
        for (size_t k = 0; k < L; ++k) {
            need(f.actor[k].exp > 0, "FACT pattern mode needs a positive actor");
            actor_first = actor_first && same(i + k, f.actor[k].name);
            target_first = target_first && same(i + 1 + k, f.actor[k].name);
        }
        actor_first = actor_first && same(i + L, f.source);
        target_first = target_first && same(i, f.target);
        if (actor_first) {
            out.letters.erase(out.letters.begin() + static_cast<long>(i + L));
            out.letters.insert(out.letters.begin() + static_cast<long>(i), normalize(cat, Letter{first.conj, f.target}));
            check_window(w, out, i, i + L + 1, i + L + 1, "FACT");
            return out;
        }
        if (target_first) {
            out.letters.erase(out.letters.begin() + static_cast<long>(i));
            out.letters.insert(out.letters.begin() + static_cast<long>(i + L), normalize(cat, Letter{first.conj, f.source}));
            check_window(w, out, i, i + L + 1, i + L + 1, "FACT");
            return out;
        }
        if (first.conj.empty()) throw StepError("FACT " + f.id + ": pattern does not match at " + std::to_string(i + 1));
    }

    // Letter mode: [v : source] = [v A^-1 : target] and [v : target] = [v A : source].
    std::vector<Letter> options;
    if (first.base == normalize(cat, plain(f.source)).base) {
        // The stored conjugator may have lost a tail of A that fixes the source; for every
        // split A = P R with R fixing the source, [v : source] = [v R : source].
        for (size_t cut = f.actor.size() + 1; cut-- > 0;) {
            bool fixes = true;
            for (size_t k = cut; k < f.actor.size(); ++k)
                fixes = fixes && cat.commute(f.actor[k].name, f.source);
            if (!fixes) break;
            GenWord p(f.actor.begin(), f.actor.begin() + static_cast<long>(cut));
            options.push_back(normalize(cat, Letter{concat(first.conj, inverse(p)), f.target}));
        }
    }
    if (first.base == normalize(cat, plain(f.target)).base)
        options.push_back(normalize(cat, Letter{concat(first.conj, f.actor), f.source}));
    need(!options.empty(), "FACT " + f.id + ": letter " + std::to_string(i + 1) + " has neither source nor target base");
    auto best = std::min_element(options.begin(), options.end(),
                                 [](const Letter& a, const Letter& b) { return a.conj.size() < b.conj.size(); });
    out.letters[i] = *best;
    need(equal_up_to_sign(letter_class(cat, out.letters[i]), letter_class(cat, first)), "FACT changed a letter class");
    return out;
}

Factorization substitute(const Factorization& w, const Relator& r, size_t i)
{
    const Catalog& cat = *w.cat;
    auto matches = [&](const std::vector<std::string>& side) {
        if (i + side.size() > w.size()) return false;
        for (size_t k = 0; k < side.size(); ++k)
            if (w.letters[i + k] != normalize(cat, plain(side[k]))) return false;
        return true;
    };
    const bool fwd = matches(r.lhs);
    const bool bwd = !fwd && matches(r.rhs);
    need(fwd || bwd, "SUB " + r.id + ": no literal match at " + std::to_string(i + 1));
    const auto& from = fwd ? r.lhs : r.rhs;
    const auto& to = fwd ? r.rhs : r.lhs;
    const auto& bfrom = fwd ? r.lhs_boundary : r.rhs_boundary;
    const auto& bto = fwd ? r.rhs_boundary : r.lhs_boundary;

    Factorization out = w;
    out.letters.erase(out.letters.begin() + static_cast<long>(i), out.letters.begin() + static_cast<long>(i + from.size()));
    std::vector<Letter> ins;
    for (const auto& n : to) ins.push_back(normalize(cat, plain(n)));
    out.letters.insert(out.letters.begin() + static_cast<long>(i), ins.begin(), ins.end());
    for (const auto& [b, e] : bfrom) out.rhs[b] += e;
    for (const auto& [b, e] : bto) out.rhs[b] -= e;
    for (auto it = out.rhs.begin(); it != out.rhs.end();)
        it = it->second == 0 ? out.rhs.erase(it) : std::next(it);
    check_window(w, out, i, i + from.size(), i + to.size(), "SUB");
    return out;
}

Factorization expand_aliases(const Factorization& w)
{
    Factorization out = w;
    for (auto& l : out.letters) l = normalize(*w.cat, l);
    return out;
}

CommuteSuggestion suggest_commutations(const Factorization& w, const std::vector<size_t>& positions)
{
    CommuteSuggestion s;
    if (positions.empty()) {
        s.ok = true;
        return s;
    }
    Factorization cur = w;
    const size_t start = positions.front();
    for (size_t k = 1; k < positions.size(); ++k) {
        size_t p = positions[k];
        const size_t dest = start + k;
        if (p < dest) return s;
        while (p > dest) {
            if (!letters_commute(*cur.cat, cur.letters[p - 1], cur.letters[p])) return s;
            std::swap(cur.letters[p - 1], cur.letters[p]);
            s.swaps.push_back(p - 1);
            --p;
        }
    }
    s.ok = true;
    return s;
}

GenWord phi_word(const Catalog& cat)
{
    GenWord w;
    const int g = cat.genus();
    for (int i = g + 1; i >= 1; --i)
        for (int t = 0; t < i; ++t) w.push_back({cat.chain_name(2 * i - 1), 1});
    return w;
}

GenWord parse_genword(const Catalog& cat, const std::string& text)
{
    GenWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto hat = tok.find('^');
        std::string name = tok.substr(0, hat);
        long e = 1;
        if (hat != std::string::npos) {
            std::string ex = tok.substr(hat + 1);
            size_t used = 0;
            try {
                e = std::stol(ex, &used);
            } catch (...) {
                used = 0;
            }
            if (used != ex.size() || ex.empty()) throw StepError("bad exponent in '" + tok + "'");
        }
        GenWord unit;
        if (name == "phi")
            unit = phi_word(cat);
        else if (cat.find(name))
            unit = {{name, 1}};
        else
            throw StepError("unknown curve '" + name + "'");
        if (e < 0) unit = inverse(unit);
        for (long t = 0; t < std::labs(e); ++t) w.insert(w.end(), unit.begin(), unit.end());
    }
    return w;
}

std::string format_genword(const GenWord& w)
{
    std::string s;
    for (size_t k = 0; k < w.size();) {
        size_t j = k;
        while (j < w.size() && w[j] == w[k]) ++j;
        const long run = static_cast<long>(j - k) * w[k].exp;
        if (!s.empty()) s += ' ';
        s += w[k].name;
        if (run != 1) s += "^" + std::to_string(run);
        k = j;
    }
    return s;
}

}  // namespace twist
