#include "twist/relators.hpp"

#include "builders.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twist {

namespace {

std::string num(const std::string& stem, int i) { return stem + std::to_string(i); }

std::vector<std::string> seq(const Catalog& cat, int from, int to)
{
    std::vector<std::string> out;
    const int dir = from <= to ? 1 : -1;
    for (int i = from;; i += dir) {
        out.push_back(cat.chain_name(i));
        if (i == to) break;
    }
    return out;
}

void append(std::vector<std::string>& a, const std::vector<std::string>& b, int times = 1)
{
    for (int t = 0; t < times; ++t) a.insert(a.end(), b.begin(), b.end());
}

const std::set<std::string> kBase{"H", "I", "G"};
const std::set<std::string> kRelator{"chain", "lantern", "D", "Dp", "D2"};
const std::set<std::string> kDerived{"H1", "H2", "Hd", "W47", "Id", "Gd"};
const std::set<std::string> kLemma{"lem41a", "lem41b", "lem42a", "lem42b"};
const std::set<std::string> kLifted{"lem1", "lem2", "lem3", "chain-lift", "thm4.1-lift", "thm4.2-lift"};

void need(bool ok, const WordId& id, const std::string& why)
{
    if (!ok) throw std::invalid_argument(id.str() + ": " + why);
}

int boundary_of(const WordId& id)
{
    const int g = id.g;
    if (id.family == "thm4.1-lift") return 2 * g + 6;
    if (id.family == "thm4.2-lift") return 8;
    return 1;
}

void check_range(const WordId& id)
{
    const int g = id.g;
    const std::string& f = id.family;
    need(g >= 2 && g <= 12, id, "genus out of range 2..12");
    const bool with_k = f == "chain" || kLemma.count(f) || ((f == "I" || f == "G") && id.k >= 0);
    need(with_k || id.k < 0, id, "unexpected parameter k");
    if (f == "chain") need(id.k >= 2 && id.k <= 2 * g + 1, id, "chain length must be 2..2g+1");
    if (f == "D" || f == "Dp" || f == "H1" || f == "H2" || f == "thm4.1-lift" || f == "thm4.2-lift")
        need(g >= 3, id, "needs g >= 3");
    if (f == "I" && id.k >= 0) {
        need(g >= 3, id, "needs g >= 3");
        need(id.k >= 1 && id.k <= g + 1, id, "k must be 1..g+1");
    }
    if (f == "G" && id.k >= 0) need(id.k >= 1 && id.k <= g, id, "k must be 1..g");
    if (f == "lem41a" || f == "lem41b") need(id.k >= 2 && id.k <= 2 * g + 1, id, "k must be 2..2g+1");
    if (f == "lem42a" || f == "lem42b") need(id.k >= 0 && id.k <= g, id, "l must be 0..g");
}

}  // namespace

std::string WordId::str() const
{
    std::string s = family + "@g=" + std::to_string(g);
    if (k >= 0) s += ",k=" + std::to_string(k);
    return s;
}

WordId parse_word_id(const std::string& text)
{
    WordId id;
    const auto at = text.find('@');
    if (at == std::string::npos || at == 0) throw std::invalid_argument("word id '" + text + "' needs the form NAME@g=<int>[,k=<int>]");
    id.family = text.substr(0, at);
    std::stringstream rest(text.substr(at + 1));
    std::string part;
    bool have_g = false;
    while (std::getline(rest, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("word id '" + text + "': bad parameter '" + part + "'");
        const std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(val, &used);
        } catch (...) {
            used = 0;
        }
        if (used == 0 || used != val.size()) throw std::invalid_argument("word id '" + text + "': bad number '" + val + "'");
        if (key == "g") {
            id.g = v;
            have_g = true;
        } else if (key == "k" || key == "l") {
            id.k = v;
        } else {
            throw std::invalid_argument("word id '" + text + "': unknown parameter '" + key + "'");
        }
    }
    if (!have_g) throw std::invalid_argument("word id '" + text + "': missing g");
    const std::string& f = id.family;
    if (!kBase.count(f) && !kRelator.count(f) && !kDerived.count(f) && !kLemma.count(f) && !kLifted.count(f))
        throw std::invalid_argument("unknown word family '" + f + "'");
    check_range(id);
    return id;
}

bool is_derived_family(const std::string& f) { return kDerived.count(f) > 0; }
bool is_lifted_family(const std::string& f) { return kLifted.count(f) > 0; }
bool is_lemma_family(const std::string& f) { return kLemma.count(f) > 0; }

namespace {

bool scripted(const WordId& id)
{
    return kDerived.count(id.family) || kLemma.count(id.family) || kLifted.count(id.family) ||
           ((id.family == "I" || id.family == "G") && id.k >= 0);
}

}  // namespace

Factorization build_word(const WordId& id)
{
    check_range(id);
    const int g = id.g;
    const std::string& f = id.family;
    auto cat = Catalog::standard(g);
    std::vector<std::string> names;
    if (f == "H") {
        std::vector<std::string> half = seq(*cat, 1, 2 * g);
        half.push_back(cat->chain_name(2 * g + 1));
        half.push_back(cat->chain_name(2 * g + 1));
        append(half, seq(*cat, 2 * g, 1));
        append(names, half, 2);
    } else if (f == "I") {
        append(names, seq(*cat, 1, 2 * g + 1), 2 * g + 2);
    } else if (f == "G") {
        append(names, seq(*cat, 1, 2 * g), 4 * g + 2);
    } else if (kRelator.count(f)) {
        const std::string rid = f == "chain" ? num("chain", id.k) : f;
        auto r = cat->relator(rid);
        need(r.has_value(), id, "relator not available at this genus");
        names = r->lhs;
    } else {
        throw std::invalid_argument(id.str() + " is a scripted word; use derive");
    }
    return make_word(cat, names);
}

namespace {

std::shared_ptr<const Catalog> catalog_for(const WordId& id)
{
    return kLifted.count(id.family) ? Catalog::standard(id.g, boundary_of(id)) : Catalog::standard(id.g);
}

std::vector<std::string> lifted_palindrome_pair(const Catalog& cat)
{
    const int g = cat.genus();
    std::vector<std::string> half{cat.chain_name(2 * g + 1)};
    append(half, seq(cat, 2 * g, 1));
    append(half, seq(cat, 1, 2 * g));
    half.push_back("alphap");
    std::vector<std::string> out;
    append(out, half, 2);
    return out;
}

Factorization initial_word(const WordId& id)
{
    const int g = id.g;
    const std::string& f = id.family;
    if (f == "H1" || f == "H2" || f == "Hd" || f == "W47") return build_word({"H", g, -1});
    if (f == "I" || f == "Id") return build_word({"I", g, -1});
    if (f == "G" || f == "Gd") return build_word({"G", g, -1});
    auto cat = catalog_for(id);
    std::vector<std::string> names;
    const int k = id.k;
    if (f == "lem41a") {
        append(names, seq(*cat, k - 1, 1));
        append(names, seq(*cat, k, 1));
    } else if (f == "lem41b") {
        append(names, seq(*cat, 1, k));
        append(names, seq(*cat, 1, k - 1));
    } else if (f == "lem42a") {
        if (k > 0) append(names, seq(*cat, 2 * k, 1));
        append(names, seq(*cat, 2 * k + 1, 1));
    } else if (f == "lem42b") {
        append(names, seq(*cat, 1, 2 * k + 1));
        if (k > 0) append(names, seq(*cat, 1, 2 * k));
    } else if (f == "lem1") {
        append(names, seq(*cat, 1, 2 * g), 2 * g + 1);
    } else if (f == "lem2" || f == "chain-lift") {
        append(names, seq(*cat, 1, 2 * g), 4 * g + 2);
    } else {
        names = lifted_palindrome_pair(*cat);
    }
    Factorization w = make_word(cat, names);
    if (f == "lem2" || f == "chain-lift" || f == "lem3" || f == "thm4.1-lift" || f == "thm4.2-lift")
        w.rhs["delta"] = 1;
    return w;
}

std::filesystem::path data_dir()
{
    if (const char* env = std::getenv("TWIST_DATA_DIR")) return env;
    return TWIST_DATA_DIR;
}

}  // namespace

std::pair<Factorization, Script> build_script(const WordId& id)
{
    check_range(id);
    if (!scripted(id)) throw std::invalid_argument(id.str() + " is not a scripted word");
    const std::string& f = id.family;
    build::Builder b(initial_word(id));
    b.script.header = id.str();
    const int g = id.g;
    if (f == "H1" || f == "thm4.1-lift") {
        build::one_daisy(b);
    } else if (f == "H2" || f == "thm4.2-lift") {
        build::two_daisy(b, build::TwoDaisyMode::two_daisies);
    } else if (f == "Hd") {
        build::two_daisy(b, build::TwoDaisyMode::daisy_2g2);
    } else if (f == "W47") {
        build::two_daisy(b, build::TwoDaisyMode::squares);
    } else if (f == "I") {
        build::odd_chain_daisies(b, id.k);
    } else if (f == "Id") {
        build::odd_chain_big_daisy(b);
    } else if (f == "G" || f == "Gd") {
        build::even_chain_big_daisy(b, f == "Gd" ? g : id.k);
    } else if (f == "lem41a") {
        build::staircase_down(b, 0, id.k);
    } else if (f == "lem41b") {
        build::staircase_up(b, 0, id.k);
    } else if (f == "lem42a") {
        build::phi_sort(b, 0, id.k);
    } else if (f == "lem42b") {
        build::phi_sort_inverse(b, 0, id.k);
    } else if (f == "lem1") {
        std::vector<std::string> target;
        for (const auto& l : lemma_expected(id).letters) target.push_back(l.base);
        build::braid_transform(b, 0, target);
    } else if (f == "lem2") {
        build::lift_chain(b);
    } else if (f == "lem3") {
        build::hyperelliptic_opening(b);
    }
    return {initial_word(id), b.script};
}

std::string script_filename(const WordId& id)
{
    std::string s = id.family + "_g" + std::to_string(id.g);
    if (id.k >= 0) s += "_k" + std::to_string(id.k);
    for (char& ch : s)
        if (ch == '.' || ch == '-') ch = '_';
    return s + ".script";
}

Derivation derive(const WordId& id, const ReplayOptions& opt)
{
    check_range(id);
    if (!scripted(id)) throw std::invalid_argument(id.str() + " is not a scripted word");
    Derivation d;
    d.id = id;
    d.initial = initial_word(id);
    const auto path = data_dir() / "scripts" / script_filename(id);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        d.script = parse_script(ss.str());
    } else {
        d.script = build_script(id).second;
    }
    d.trace = replay_script(d.script, d.initial, opt);
    const std::string& f = id.family;
    if (f[0] == 'H' || f == "W47" || f == "thm4.1-lift" || f == "thm4.2-lift")
        d.provenance.word_id = WordId{"H", id.g, -1}.str();
    else if (f == "I" || f == "Id")
        d.provenance.word_id = WordId{"I", id.g, -1}.str();
    else if (f == "G" || f == "Gd")
        d.provenance.word_id = WordId{"G", id.g, -1}.str();
    std::map<int, int> census;
    for (const auto& s : d.trace.substitutions)
        if (s.p >= 2 && s.relator != "LZ") ++census[s.p];
    for (const auto& [p, n] : census) d.provenance.subs.emplace_back(p, n);
    return d;
}

Factorization lemma_expected(const WordId& id)
{
    auto cat = catalog_for(id);
    const int k = id.k;
    const int g = id.g;
    std::vector<std::string> names;
    auto power = [&](int i, int e) { append(names, {cat->chain_name(i)}, e); };
    const std::string& f = id.family;
    if (f == "lem41a") {
        power(k, k);
        for (int i = k - 1; i >= 1; --i) names.push_back(num("dbar", i));
    } else if (f == "lem41b") {
        for (int i = 1; i < k; ++i) names.push_back(num("d", i));
        power(k, k);
    } else if (f == "lem42a") {
        power(2 * k + 1, k + 1);
        if (k > 0) append(names, seq(*cat, 2 * k, 1));
        for (int i = 2 * k; i >= 2; i -= 2) names.push_back(num("d", i));
    } else if (f == "lem42b") {
        for (int i = 2; i <= 2 * k; i += 2) names.push_back(num("dbar", i));
        if (k > 0) append(names, seq(*cat, 1, 2 * k));
        power(2 * k + 1, k + 1);
    } else if (f == "lem1") {
        append(names, seq(*cat, 1, 2 * g - 1), 2 * g);
        append(names, seq(*cat, 2 * g, 1));
        append(names, seq(*cat, 1, 2 * g));
    } else {
        throw std::invalid_argument(id.str() + " has no closed-form expected word");
    }
    return make_word(cat, names);
}

std::optional<WordId> projection_target(const WordId& lifted)
{
    const std::string& f = lifted.family;
    if (f == "thm4.1-lift") return WordId{"H1", lifted.g, -1};
    if (f == "thm4.2-lift") return WordId{"H2", lifted.g, -1};
    if (f == "lem2" || f == "lem3") return WordId{"H", lifted.g, -1};
    if (f == "chain-lift") return WordId{"G", lifted.g, -1};
    return std::nullopt;
}

Factorization project(const Factorization& lifted, std::shared_ptr<const Catalog> closed)
{
    const Catalog& lc = *lifted.cat;
    Factorization out;
    out.cat = closed;
    for (const auto& l : lifted.letters) {
        if (lc.is_boundary_letter(l.base)) continue;
        Letter p;
        for (const auto& x : l.conj) {
            if (lc.is_boundary_letter(x.name)) continue;
            p.conj.push_back({lc.at(x.name).projection, x.exp});
        }
        p.base = lc.at(l.base).projection;
        out.letters.push_back(normalize(*closed, p));
    }
    return out;
}

std::vector<WordId> shipped_ids()
{
    std::vector<WordId> out;
    for (const std::string f : {"lem41a", "lem41b"})
        for (int k = 2; k <= 6; ++k) out.push_back({f, 3, k});
    for (const std::string f : {"lem42a", "lem42b"})
        for (int l = 0; l <= 3; ++l) out.push_back({f, 3, l});
    for (int g = 2; g <= 5; ++g)
        for (const std::string f : {"lem1", "lem2", "lem3", "chain-lift"}) out.push_back({f, g, -1});
    for (int g = 3; g <= 5; ++g)
        for (const std::string f : {"thm4.1-lift", "thm4.2-lift"}) out.push_back({f, g, -1});
    for (int g = 2; g <= 6; ++g) {
        if (g >= 3) {
            out.push_back({"H1", g, -1});
            out.push_back({"H2", g, -1});
            for (int k = 1; k <= g + 1; ++k) out.push_back({"I", g, k});
        }
        out.push_back({"W47", g, -1});
        out.push_back({"Hd", g, -1});
        out.push_back({"Id", g, -1});
        out.push_back({"Gd", g, -1});
    }
    return out;
}

WordFile generate(const WordId& id)
{
    if (!scripted(id)) return {build_word(id), {}};
    Derivation d = derive(id);
    if (!d.trace.ok) throw std::runtime_error(id.str() + ": " + d.trace.error);
    return {d.trace.result, d.provenance};
}

}  // namespace twist
