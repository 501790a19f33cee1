#include "twist/wordfile.hpp"

#include <algorithm>
#include <map>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace twist {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string text;
    int line = 0, col = 0;
};

std::vector<Token> tokenize(const std::string& text, int first_line)
{
    std::vector<Token> out;
    int line = first_line, col = 1;
    size_t k = 0;
    while (k < text.size()) {
        char ch = text[k];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++k;
            continue;
        }
        if (ch == '#') {
            while (k < text.size() && text[k] != '\n') ++k;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++k;
            ++col;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (ch == '[') {
            size_t close = text.find(']', k);
            size_t nl = text.find('\n', k);
            if (close == std::string::npos || (nl != std::string::npos && nl < close))
                throw ParseError(line, col, "unterminated '['");
            size_t end = close + 1;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            t.text = text.substr(k, end - k);
        } else {
            size_t end = k;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            t.text = text.substr(k, end - k);
        }
        col += static_cast<int>(t.text.size());
        k += t.text.size();
        out.push_back(t);
    }
    return out;
}

int parse_count(const std::string& s, const Token& t, bool allow_negative)
{
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (...) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw ParseError(t.line, t.col, "bad exponent '" + s + "'");
    if (!allow_negative && v <= 0)
        throw ParseError(t.line, t.col, "negative or zero power '" + t.text + "' (positive relators only)");
    if (v == 0) throw ParseError(t.line, t.col, "zero exponent in '" + t.text + "'");
    return static_cast<int>(v);
}

bool valid_name(const std::string& s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

WordFile parse_wordfile(const std::string& text, const CatalogProvider& provider)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    WordFile wf;
    int genus = -1, boundary = -1;
    std::string rest;
    int body_line = 0;

    // Header and optional provenance line.
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (genus < 0) {
            if (kw != "surface") throw ParseError(lineno, static_cast<int>(first) + 1, "expected 'surface genus=<int> boundary=<int>'");
            std::string a, b, extra;
            ls >> a >> b;
            auto num = [&](const std::string& tok, const std::string& key) {
                if (tok.rfind(key, 0) != 0) throw ParseError(lineno, 1, "expected " + key + "<int>");
                Token t{tok, lineno, 1};
                std::string v = tok.substr(key.size());
                size_t used = 0;
                long x = -1;
                try {
                    x = std::stol(v, &used);
                } catch (...) {
                    used = 0;
                }
                if (v.empty() || used != v.size() || x < 0) throw ParseError(lineno, 1, "bad value in '" + tok + "'");
                return static_cast<int>(x);
            };
            genus = num(a, "genus=");
            boundary = num(b, "boundary=");
            if (ls >> extra) throw ParseError(lineno, 1, "trailing text in header");
            if (genus < 1 || genus > 31) throw ParseError(lineno, 1, "genus out of range");
            continue;
        }
        if (kw == "from") {
            std::string id, subs, list, extra;
            if (!(ls >> id)) throw ParseError(lineno, 1, "from needs a word id");
            wf.provenance.word_id = id;
            if (ls >> subs) {
                if (subs != "subs" || !(ls >> list)) throw ParseError(lineno, 1, "expected 'subs <p>:<count>[,...]'");
                std::stringstream ss(list);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto colon = item.find(':');
                    Token t{item, lineno, 1};
                    if (colon == std::string::npos) throw ParseError(lineno, 1, "bad subs item '" + item + "'");
                    wf.provenance.subs.emplace_back(parse_count(item.substr(0, colon), t, false),
                                                    parse_count(item.substr(colon + 1), t, false));
                }
                if (ls >> extra) throw ParseError(lineno, 1, "trailing text after subs");
            }
            continue;
        }
        body_line = lineno;
        rest = line + "\n";
        break;
    }
    if (genus < 0) throw ParseError(lineno + 1, 1, "missing surface header");
    std::string more((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    rest += more;

    auto cat = provider ? provider(genus, boundary) : Catalog::standard(genus, boundary);
    wf.word.cat = cat;
    bool rhs_side = false;
    for (const Token& t : tokenize(rest, body_line ? body_line : lineno + 1)) {
        if (t.text == "=") {
            if (boundary == 0) throw ParseError(t.line, t.col, "'=' is only allowed in lifted words");
            if (rhs_side) throw ParseError(t.line, t.col, "second '='");
            rhs_side = true;
            continue;
        }
        Letter l;
        int power = 1;
        if (t.text[0] == '[') {
            auto close = t.text.find(']');
            std::string inner = t.text.substr(1, close - 1);
            std::string tail = t.text.substr(close + 1);
            if (!tail.empty()) {
                if (tail[0] != '^') throw ParseError(t.line, t.col + static_cast<int>(close) + 1, "unexpected text after ']'");
                power = parse_count(tail.substr(1), t, false);
            }
            auto colon = inner.rfind(':');
            if (colon == std::string::npos) throw ParseError(t.line, t.col, "conjugated letter needs '<word>:<name>'");
            l.base = inner.substr(colon + 1);
            try {
                l.conj = parse_genword(*cat, inner.substr(0, colon));
            } catch (const StepError& e) {
                throw ParseError(t.line, t.col + 1, e.what());
            }
        } else {
            auto hat = t.text.find('^');
            l.base = t.text.substr(0, hat);
            if (hat != std::string::npos) power = parse_count(t.text.substr(hat + 1), t, false);
        }
        if (!valid_name(l.base)) throw ParseError(t.line, t.col, "bad token '" + t.text + "'");
        if (l.base == "phi") throw ParseError(t.line, t.col, "phi is only allowed inside conjugators");
        if (!cat->find(l.base)) throw ParseError(t.line, t.col, "unknown curve '" + l.base + "' for genus " + std::to_string(genus));
        const bool is_b = cat->is_boundary_letter(l.base);
        if (rhs_side) {
            if (!is_b || !l.conj.empty()) throw ParseError(t.line, t.col, "only boundary letters may follow '='");
            wf.word.rhs[l.base] += power;
            continue;
        }
        if (is_b) throw ParseError(t.line, t.col, "boundary letter '" + l.base + "' must follow '='");
        Letter n = normalize(*cat, l);
        for (int k = 0; k < power; ++k) wf.word.letters.push_back(n);
    }
    return wf;
}

namespace {

size_t run_count(const GenWord& w)
{
    size_t n = 0;
    for (size_t k = 0; k < w.size(); ++k)
        if (k == 0 || !(w[k] == w[k - 1])) ++n;
    return n;
}

}  // namespace

std::string format_letter(const Catalog& cat, const Letter& in)
{
    const Letter l = normalize(cat, in);
    if (l.conj.empty()) return l.base;
    // Candidates [phi^k r : name] with name the base or an alias over it; fewest tokens wins.
    std::string best_text;
    size_t best_cost = SIZE_MAX;
    const GenWord phi = phi_word(cat);
    std::vector<std::string> names{l.base};
    for (const auto& e : cat.curves()) {
        if (!e.alias) continue;
        const CurveEntry* b = &e;
        while (b->alias) b = &cat.at(b->def_base);
        if (b->name == l.base) names.push_back(e.name);
    }
    // phi powers only pay off once the conjugator is about as long as phi itself
    const bool try_phi = 2 * l.conj.size() >= phi.size();
    for (int k : {0, -1, 1, -2, 2}) {
        if (best_cost == 0) break;
        if (k != 0 && !try_phi) continue;
        GenWord pk;
        for (int t = 0; t < std::abs(k); ++t) pk = concat(pk, k > 0 ? phi : inverse(phi));
        for (const auto& name : names) {
            const Letter a = normalize(cat, plain(name));
            GenWord r = reduce_word(cat, concat(concat(inverse(pk), l.conj), inverse(a.conj)));
            if (normalize(cat, Letter{concat(pk, r), name}) != l) continue;
            // drop whole runs of r that do not change the letter
            for (size_t k2 = 0; k2 < r.size();) {
                size_t j = k2;
                while (j < r.size() && r[j] == r[k2]) ++j;
                GenWord shorter(r.begin(), r.begin() + static_cast<long>(k2));
                shorter.insert(shorter.end(), r.begin() + static_cast<long>(j), r.end());
                if (normalize(cat, Letter{concat(pk, shorter), name}) == l)
                    r = std::move(shorter);
                else
                    k2 = j;
            }
            const size_t cost = run_count(r) + (k != 0 ? 1 : 0);
            if (cost >= best_cost) continue;
            best_cost = cost;
            std::string conj = k == 0 ? "" : (k == 1 ? "phi" : "phi^" + std::to_string(k));
            if (!r.empty()) conj += (conj.empty() ? "" : " ") + format_genword(r);
            best_text = conj.empty() ? name : "[" + conj + ":" + name + "]";
        }
    }
    if (best_text.empty()) return "[" + format_genword(l.conj) + ":" + l.base + "]";
    return best_text;
}

std::string format_body(const Factorization& w)
{
    std::vector<std::string> toks;
    // derived words repeat the same conjugated letters many times
    std::map<std::string, std::string> memo;
    for (size_t k = 0; k < w.size();) {
        size_t j = k;
        while (j < w.size() && w.letters[j] == w.letters[k]) ++j;
        const Letter& l = w.letters[k];
        const std::string key = format_genword(l.conj) + ":" + l.base;
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, format_letter(*w.cat, l)).first;
        std::string t = it->second;
        if (j - k > 1) t += "^" + std::to_string(j - k);
        toks.push_back(t);
        k = j;
    }
    if (!w.rhs.empty()) {
        toks.push_back("=");
        // natural order: bdelta2 before bdelta10
        std::vector<std::pair<std::string, int>> rhs(w.rhs.begin(), w.rhs.end());
        auto key = [](const std::string& n) {
            const size_t d = n.find_first_of("0123456789");
            return std::make_pair(n.substr(0, d), d == std::string::npos ? 0 : std::stoi(n.substr(d)));
        };
        std::stable_sort(rhs.begin(), rhs.end(), [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
        for (const auto& [b, e] : rhs) toks.push_back(e == 1 ? b : b + "^" + std::to_string(e));
    }
    std::string s;
    for (size_t k = 0; k < toks.size(); ++k) {
        s += toks[k];
        s += (k + 1 == toks.size() || (k + 1) % 12 == 0) ? "\n" : " ";
    }
    return s;
}

std::string serialize_wordfile(const Factorization& w, const Provenance& prov)
{
    std::string s = "surface genus=" + std::to_string(w.genus()) + " boundary=" + std::to_string(w.boundary()) + "\n";
    if (prov.present()) {
        s += "from " + prov.word_id;
        if (!prov.subs.empty()) {
            s += " subs ";
            for (size_t k = 0; k < prov.subs.size(); ++k)
                s += (k ? "," : "") + std::to_string(prov.subs[k].first) + ":" + std::to_string(prov.subs[k].second);
        }
        s += "\n";
    }
    return s + format_body(w);
}

}  // namespace twist
