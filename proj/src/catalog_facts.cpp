#include "twist/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twist {

namespace {

std::vector<int> parse_params(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) return {};
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) return {};
            out.push_back(v);
        } catch (...) {
            return {};
        }
    }
    return out;
}

}  // namespace

bool Catalog::fact_holds(const ActionFact& f) const
{
    if (!find(f.source) || !find(f.target)) return false;
    for (const auto& x : f.actor)
        if (!find(x.name)) return false;
    HomClass img = apply_word(f.actor, at(f.source).cls);
    return equal_up_to_sign(img, at(f.target).cls);
}

bool Catalog::register_fact(const ActionFact& f)
{
    if (!fact_holds(f)) return false;
    custom_facts_[f.id] = f;
    return true;
}

// Family ids (a_i is the chain curve of this catalog):
//   R1:k,m,i   (a_k ... a_m)(a_{i+1}) = a_i            k > m, m <= i < k
//   R2:m,k,i   (a_m ... a_k)(a_i) = a_{i+1}            m < k, m <= i < k
//   R3:l,m,i   (a_{2l} ... a_1 a_{2l+1} ... a_m)(a_{i+2}) = a_i
//   R4:l,m,i   (a_m ... a_{2l+1} a_1 ... a_{2l})(a_i) = a_{i+2}
//   R5:i       (a_{2g+1} ... a_1 a_1 ... a_{2g+1})(a_i) = a_i
//   R6         (a_{2g} ... a_1 a_1 ... a_{2g})(a'_{2g+1}) = a_{2g+1}
//   SH:i       (a_1 ... a_{2g+1})(a_i) = a_{i+1}
std::optional<ActionFact> Catalog::fact(const std::string& id) const
{
    auto cit = custom_facts_.find(id);
    if (cit != custom_facts_.end()) return cit->second;

    const int top = 2 * g_ + 1;
    auto colon = id.find(':');
    const std::string fam = id.substr(0, colon);
    const std::vector<int> p = colon == std::string::npos ? std::vector<int>{} : parse_params(id.substr(colon + 1));
    auto in = [&](int v) { return v >= 1 && v <= top; };
    auto a = [&](int i) { return chain_name(i); };
    auto run = [&](int from, int to) {
        GenWord w;
        const int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            w.push_back({a(i), 1});
            if (i == to) break;
        }
        return w;
    };

    ActionFact f;
    f.id = id;
    if (fam == "R1" && p.size() == 3) {
        const int k = p[0], m = p[1], i = p[2];
        if (!(in(k) && in(m) && k > m && m <= i && i < k)) return std::nullopt;
        f.actor = run(k, m);
        f.source = a(i + 1);
        f.target = a(i);
    } else if (fam == "R2" && p.size() == 3) {
        const int m = p[0], k = p[1], i = p[2];
        if (!(in(k) && in(m) && m < k && m <= i && i < k)) return std::nullopt;
        f.actor = run(m, k);
        f.source = a(i);
        f.target = a(i + 1);
    } else if (fam == "R3" && p.size() == 3) {
        const int l = p[0], m = p[1], i = p[2];
        if (!(l >= 1 && in(2 * l + 1) && m >= 1 && m <= 2 * l && i >= 1 && i <= 2 * l - 1)) return std::nullopt;
        f.actor = concat(run(2 * l, 1), run(2 * l + 1, m));
        f.source = a(i + 2);
        f.target = a(i);
    } else if (fam == "R4" && p.size() == 3) {
        const int l = p[0], m = p[1], i = p[2];
        if (!(l >= 1 && in(2 * l + 1) && m >= 1 && m <= 2 * l && i >= 1 && i <= 2 * l - 1)) return std::nullopt;
        f.actor = concat(run(m, 2 * l + 1), run(1, 2 * l));
        f.source = a(i);
        f.target = a(i + 2);
    } else if (fam == "R5" && p.size() == 1) {
        if (!in(p[0])) return std::nullopt;
        f.actor = concat(run(top, 1), run(1, top));
        f.source = a(p[0]);
        f.target = a(p[0]);
    } else if (fam == "R6" && p.empty() && colon == std::string::npos) {
        f.actor = concat(run(2 * g_, 1), run(1, 2 * g_));
        f.source = lifted() ? "alphap" : a(top);
        f.target = a(top);
    } else if (fam == "SH" && p.size() == 1) {
        if (!(p[0] >= 1 && p[0] < top)) return std::nullopt;
        f.actor = run(1, top);
        f.source = a(p[0]);
        f.target = a(p[0] + 1);
    } else {
        return std::nullopt;
    }
    if (!fact_holds(f)) return std::nullopt;
    return f;
}

ValidationReport Catalog::validate() const
{
    ValidationReport rep;
    const int g = g_;
    const int top = 2 * g + 1;
    auto c = [this](int i) { return chain_name(i); };

    // Chain intersection pattern, adjacent pairs first so the first failure names the pair.
    for (int i = 1; i < top; ++i) {
        Int p = pairing(at(c(i)).cls, at(c(i + 1)).cls);
        if (abs(p) != 1)
            rep.fail("chain pattern <" + c(i) + "," + c(i + 1) + "> = " + p.str());
    }
    for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j)
            if (pairing(at(c(i)).cls, at(c(j)).cls) != 0)
                rep.fail("chain pattern <" + c(i) + "," + c(j) + "> != 0");
    if (rep.ok) rep.pass("chain intersection pattern");

    // Planar dependency among odd chain curves: some signed sum vanishes.
    {
        const int q = g + 1;
        bool found = false;
        for (unsigned long mask = 0; mask < (1ul << q) && !found; ++mask) {
            HomClass s = zero_class(g);
            for (int k = 0; k < q; ++k) {
                const HomClass& v = at(c(2 * k + 1)).cls;
                s = add(s, (mask >> k) & 1 ? negate(v) : v);
            }
            found = is_zero(s);
        }
        if (found)
            rep.pass("odd chain classes telescope to zero");
        else
            rep.fail("odd chain classes admit no vanishing signed sum");
    }

    for (const auto& e : curves_) {
        if (e.z2 != z2_bits(e.cls)) rep.fail("z2 class of " + e.name + " is not the reduction of its class");
        if (e.kind == CurveKind::boundary) continue;
        if (e.separating_genus && !is_zero(e.cls)) rep.fail(e.name + " is labelled separating but has nonzero class");
        if (!e.separating_genus && is_zero(e.cls)) rep.fail(e.name + " has zero class but no separation label");
        if (!e.separating_genus) {
            // Primitive: gcd of the coordinates is 1.
            Int gc = 0;
            for (const auto& x : e.cls) gc = boost::multiprecision::gcd(gc, abs(x));
            if (gc != 1) rep.fail(e.name + " has a non-primitive class");
        }
        if (e.alias) {
            HomClass re = apply_word(e.def_conj, at(e.def_base).cls);
            if (!equal_up_to_sign(re, e.cls)) rep.fail("recipe of " + e.name + " does not reproduce its class");
        }
    }
    if (rep.ok) rep.pass("curve classes, z2 reductions, separation labels and recipes");

    for (const auto& [a, list] : disjoint_)
        for (const auto& b : list)
            if (pairing(at(a).cls, at(b).cls) != 0) rep.fail("registered disjoint pair " + a + "," + b + " pairs nontrivially");
    for (const auto& [a, b] : braid_pairs())
        if (abs(pairing(at(a).cls, at(b).cls)) != 1) rep.fail("braid pair " + a + "," + b + " does not pair to +-1");
    if (rep.ok) rep.pass("disjointness and braid-pair registrations");

    for (const auto& [id, r] : relators_) {
        if (relator_side_image(*this, r.lhs) != relator_side_image(*this, r.rhs))
            rep.fail("relator " + id + " is not the identity in Sp");
        else
            rep.pass("relator " + id + " is the identity in Sp");
        if (r.type == "daisy" || r.type == "lantern") {
            // central boundary letters count toward the length on their side
            int dl = static_cast<int>(r.lhs.size()) - static_cast<int>(r.rhs.size());
            for (const auto& [b, e] : r.lhs_boundary) dl += e;
            for (const auto& [b, e] : r.rhs_boundary) dl -= e;
            if (dl != r.p - 1) rep.fail("relator " + id + " length delta is not p-1");
        }
    }

    if (!lifted()) {
        auto z2eq = [&](const std::string& n, std::initializer_list<int> idx) {
            std::uint64_t want = 0;
            for (int i : idx) want ^= at(c(i)).z2;
            if (at(n).z2 == want)
                rep.pass("z2 anchor " + n);
            else
                rep.fail("z2 anchor " + n + " mismatch");
        };
        z2eq("dbar" + std::to_string(2 * g), {2 * g, 2 * g + 1});
        z2eq("e" + std::to_string(2 * g), {2 * g - 1, 2 * g});
        if (g >= 3) z2eq("x" + std::to_string(g), {2 * g - 1, 2 * g + 1});
        if (g >= 2) {
            const CurveEntry& y1 = at("y1");
            if (!is_zero(y1.cls) || y1.separating_genus != 1)
                rep.fail("y1 must be separating of genus 1");
            else
                rep.pass("y1 separating of genus 1");
        }

        // Daisy sign searches: report how many sign patterns survive.
        if (g >= 3) {
            std::vector<HomClass> petals;
            for (int j = 1; j <= g; ++j) petals.push_back(at(c(2 * j - 1)).cls);
            SignSearch s = daisy_sign_search(g, at(c(top)).cls, petals, g - 1);
            if (s.solutions == 0) rep.fail("D_{g-1} sign search has no solution");
            rep.notes.push_back("D_{g-1} sign search: " + std::to_string(s.solutions) + " solution(s)");
        }
        if (g >= 2) {
            std::vector<HomClass> petals{at(c(top)).cls};
            for (int rep2 = 0; rep2 < 2; ++rep2)
                for (int j = 2; j <= g; ++j) petals.push_back(at(c(2 * j - 1)).cls);
            SignSearch s = daisy_sign_search(g, at(c(top)).cls, petals, 2 * g - 2);
            if (s.solutions == 0) rep.fail("D_{2(g-1)} sign search has no solution");
            int primitive = 0;
            for (const auto& e : s.all) primitive += e[0] == -1;
            rep.notes.push_back("D_{2(g-1)} sign search: " + std::to_string(s.solutions) + " solution(s), " +
                                std::to_string(primitive) +
                                " with y1 separating; pairs sharing a petal class are told apart by aliasing y_{g+1..2g-1} to x_2..x_g");
        }
    }

    // Action facts: every family instance on this chain, plus custom registrations.
    int checked = 0;
    auto try_fact = [&](const std::string& id) {
        if (fact(id)) ++checked;
    };
    for (int k = 2; k <= top; ++k)
        for (int m = 1; m < k; ++m)
            for (int i = m; i < k; ++i) {
                try_fact("R1:" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(i));
                try_fact("R2:" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(i));
            }
    for (int i = 1; i <= top; ++i) try_fact("R5:" + std::to_string(i));
    for (int i = 1; i < top; ++i) try_fact("SH:" + std::to_string(i));
    if (!fact("R6")) rep.fail("fact R6 does not hold in Sp");
    for (const auto& [id, f] : custom_facts_)
        if (!fact_holds(f)) rep.fail("fact " + id + " does not hold in Sp");
    int expected = 0;
    for (int k = 2; k <= top; ++k) expected += 2 * (k * (k - 1) / 2);
    expected += top + (top - 1);
    if (checked != expected)
        rep.fail("only " + std::to_string(checked) + " of " + std::to_string(expected) + " family facts hold in Sp");
    else
        rep.pass(std::to_string(checked) + " R1/R2/R5/SH family facts hold in Sp");
    return rep;
}

namespace {

std::string class_str(const HomClass& v)
{
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
    return s;
}

std::string word_str(const GenWord& w)
{
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : ".") + x.name + (x.exp < 0 ? "^-1" : "");
    return s;
}

GenWord parse_word(const std::string& s)
{
    GenWord w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty()) continue;
        auto hat = tok.find("^-1");
        if (hat != std::string::npos)
            w.push_back({tok.substr(0, hat), -1});
        else
            w.push_back({tok, 1});
    }
    return w;
}

const char* kind_str(CurveKind k)
{
    switch (k) {
    case CurveKind::chain: return "chain";
    case CurveKind::derived: return "derived";
    case CurveKind::daisy: return "daisy";
    case CurveKind::auxiliary: return "auxiliary";
    case CurveKind::lifted: return "lifted";
    case CurveKind::boundary: return "boundary";
    }
    return "chain";
}

CurveKind kind_from(const std::string& s)
{
    for (CurveKind k : {CurveKind::chain, CurveKind::derived, CurveKind::daisy, CurveKind::auxiliary,
                        CurveKind::lifted, CurveKind::boundary})
        if (s == kind_str(k)) return k;
    throw std::invalid_argument("unknown curve kind '" + s + "'");
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace

std::string Catalog::dump() const
{
    std::ostringstream os;
    os << "catalog genus=" << g_ << " boundary=" << n_ << "\n";
    for (const auto& e : curves_) {
        os << "curve " << e.name << " kind=" << kind_str(e.kind) << " class=" << class_str(e.cls);
        if (e.separating_genus) os << " sep=" << *e.separating_genus;
        if (e.alias) os << " def=" << word_str(e.def_conj) << ":" << e.def_base;
        if (!e.projection.empty()) os << " proj=" << e.projection;
        os << "\n";
    }
    for (const auto& [a, list] : disjoint_)
        for (const auto& b : list)
            if (index_.at(a) < index_.at(b)) os << "disjoint " << a << " " << b << "\n";
    for (const auto& [id, r] : relators_) {
        os << "relator " << id << " type=" << r.type << " p=" << r.p << " lhs " << join(r.lhs) << " rhs "
           << join(r.rhs);
        for (const auto& [b, n] : r.lhs_boundary) os << " lhsb " << b << "^" << n;
        for (const auto& [b, n] : r.rhs_boundary) os << " rhsb " << b << "^" << n;
        os << "\n";
    }
    for (const auto& [id, f] : custom_facts_)
        os << "fact " << id << " actor=" << word_str(f.actor) << " source=" << f.source << " target=" << f.target
           << "\n";
    return os.str();
}

Catalog Catalog::load(const std::string& text)
{
    Catalog cat;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "catalog") {
            std::string a, b;
            ls >> a >> b;
            if (a.rfind("genus=", 0) != 0 || b.rfind("boundary=", 0) != 0) bad("malformed header");
            cat.g_ = std::stoi(a.substr(6));
            cat.n_ = std::stoi(b.substr(9));
            header = true;
        } else if (!header) {
            bad("missing catalog header");
        } else if (kw == "curve") {
            CurveEntry e;
            ls >> e.name;
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) bad("expected key=value");
                std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                if (k == "kind") {
                    e.kind = kind_from(v);
                } else if (k == "class") {
                    std::stringstream vs(v);
                    std::string t;
                    while (std::getline(vs, t, ',')) e.cls.push_back(Int(t));
                } else if (k == "sep") {
                    e.separating_genus = std::stoi(v);
                } else if (k == "def") {
                    auto colon = v.rfind(':');
                    e.alias = true;
                    e.def_conj = parse_word(v.substr(0, colon));
                    e.def_base = v.substr(colon + 1);
                } else if (k == "proj") {
                    e.projection = v;
                } else {
                    bad("unknown key " + k);
                }
            }
            if (static_cast<int>(e.cls.size()) != 2 * cat.g_) bad("class length must be 2g");
            cat.add_curve(e);
        } else if (kw == "disjoint") {
            std::string a, b;
            ls >> a >> b;
            if (!cat.find(a) || !cat.find(b)) bad("disjoint pair names unknown curve");
            cat.add_disjoint(a, b);
        } else if (kw == "relator") {
            Relator r;
            std::string t, p;
            ls >> r.id >> t >> p;
            r.type = t.substr(5);
            r.p = std::stoi(p.substr(2));
            std::string tok, side;
            while (ls >> tok) {
                if (tok == "lhs" || tok == "rhs" || tok == "lhsb" || tok == "rhsb") {
                    side = tok;
                    continue;
                }
                if (side == "lhs")
                    r.lhs.push_back(tok);
                else if (side == "rhs")
                    r.rhs.push_back(tok);
                else {
                    auto hat = tok.find('^');
                    auto& m = side == "lhsb" ? r.lhs_boundary : r.rhs_boundary;
                    m[tok.substr(0, hat)] = std::stoi(tok.substr(hat + 1));
                }
            }
            cat.add_relator(r);
        } else if (kw == "fact") {
            ActionFact f;
            ls >> f.id;
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                if (k == "actor") f.actor = parse_word(v);
                if (k == "source") f.source = v;
                if (k == "target") f.target = v;
            }
            if (!cat.register_fact(f)) bad("fact " + f.id + " fails homology validation");
        } else {
            bad("unknown record '" + kw + "'");
        }
    }
    if (!header) throw std::invalid_argument("catalog: empty input");
    return cat;
}

}  // namespace twist
