#include "twist/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace twist {

namespace {

std::string num(const std::string& stem, int i) { return stem + std::to_string(i); }

HomClass chain_class(int g, int i)
{
    // c_{2k} -> a_k ; c_{2k-1} -> b_{k-1} + b_k with b_0 = b_{g+1} = 0
    if (i % 2 == 0) return basis_a(g, i / 2);
    const int k = (i + 1) / 2;
    HomClass v = zero_class(g);
    if (k - 1 >= 1) v = add(v, basis_b(g, k - 1));
    if (k <= g) v = add(v, basis_b(g, k));
    return v;
}

std::vector<std::string> repeat(const std::string& n, int times)
{
    return std::vector<std::string>(std::max(times, 0), n);
}

}  // namespace

Catalog Catalog::build(int g, int boundary)
{
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (boundary < 0) throw std::invalid_argument("boundary must be >= 0");
    Catalog cat;
    cat.g_ = g;
    cat.n_ = boundary;
    if (boundary == 0)
        cat.build_closed();
    else
        cat.build_lifted();
    return cat;
}

std::shared_ptr<const Catalog> Catalog::standard(int g, int boundary)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Catalog>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(g, boundary);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto cat = std::make_shared<const Catalog>(build(g, boundary));
    cache[key] = cat;
    return cat;
}

void Catalog::build_closed()
{
    const int g = g_;
    const int top = 2 * g + 1;
    for (int i = 1; i <= top; ++i) {
        CurveEntry e;
        e.name = num("c", i);
        e.kind = CurveKind::chain;
        e.cls = chain_class(g, i);
        add_curve(e);
    }
    for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j) add_disjoint(num("c", i), num("c", j));

    auto alias = [&](const std::string& name, GenWord conj, const std::string& base) {
        CurveEntry e;
        e.name = name;
        e.kind = CurveKind::derived;
        e.alias = true;
        e.def_conj = conj;
        e.def_base = base;
        e.cls = apply_word(conj, at(base).cls);
        add_curve(e);
    };
    auto c = [](int i) { return num("c", i); };
    for (int i = 1; i <= 2 * g; ++i) {
        alias(num("d", i), {{c(i + 1), 1}}, c(i));
        alias(num("dbar", i), {{c(i + 1), -1}}, c(i));
    }
    for (int i = 1; i <= 2 * g; ++i) {
        alias(num("e", i + 1), {{c(i), 1}}, c(i + 1));
        alias(num("ebar", i + 1), {{c(i), -1}}, c(i + 1));
    }
    for (int j = 1; j <= 2 * g; ++j) {
        GenWord w{{c(j + 1), -1}};
        if (j > 1) w.push_back({c(j - 1), -1});
        w.push_back({c(j + 1), -1});
        alias(num("f", j), w, c(j));
    }

    add_chain_relators();

    const HomClass top_cls = at(c(top)).cls;

    // D_{g-1}: delta0 = c_{2g+1}, petals c1, c3, ..., c_{2g-1}.
    if (g >= 3) {
        std::vector<HomClass> petals;
        for (int j = 1; j <= g; ++j) petals.push_back(at(c(2 * j - 1)).cls);
        SignSearch s = daisy_sign_search(g, top_cls, petals, g - 1);
        if (s.solutions == 0) throw std::logic_error("no sign solution for D_{g-1}");
        const auto& eps = s.all.front();
        for (const std::string stem : {"x", "xp"})
            for (int j = 1; j <= g; ++j) {
                CurveEntry e;
                e.name = num(stem, j);
                e.kind = CurveKind::daisy;
                e.cls = eps[j - 1] > 0 ? add(petals[j - 1], top_cls) : add(petals[j - 1], negate(top_cls));
                add_curve(e);
                for (int i = 1; i <= top; i += 2) add_disjoint(e.name, c(i));
            }
        Relator d;
        d.type = "daisy";
        d.p = g - 1;
        for (int j = 1; j <= g; ++j) d.lhs.push_back(c(2 * j - 1));
        for (auto& n : repeat(c(top), g - 2)) d.lhs.push_back(n);
        Relator dp = d;
        d.id = "D";
        dp.id = "Dp";
        for (int j = 1; j <= g; ++j) {
            d.rhs.push_back(num("x", j));
            dp.rhs.push_back(num("xp", j));
        }
        add_relator(d);
        add_relator(dp);
    }

    // D_{2(g-1)}: delta0 = c_{2g+1}; petals c_{2g+1}, c3..c_{2g-1}, c3..c_{2g-1}.
    if (g >= 2) {
        std::vector<HomClass> petals{top_cls};
        for (int rep = 0; rep < 2; ++rep)
            for (int j = 2; j <= g; ++j) petals.push_back(at(c(2 * j - 1)).cls);
        const int q = 2 * g - 1;
        SignSearch s = daisy_sign_search(g, top_cls, petals, 2 * g - 2);
        const std::vector<int>* pick = nullptr;
        for (const auto& eps : s.all) {
            if (eps[0] != -1) continue;  // y1 must be primitive or zero; 2*c_{2g+1} is neither
            bool ok = true;
            for (int k = 2; k <= g && g >= 3; ++k) {
                HomClass y = eps[g + k - 2] > 0 ? add(petals[g + k - 2], top_cls)
                                                : add(petals[g + k - 2], negate(top_cls));
                if (!equal_up_to_sign(y, at(num("x", k)).cls)) ok = false;
            }
            if (ok) {
                pick = &eps;
                break;
            }
        }
        if (!pick) throw std::logic_error("no admissible sign solution for D_{2(g-1)}");
        for (int j = 1; j <= q; ++j) {
            CurveEntry e;
            e.name = num("y", j);
            if (g >= 3 && j > g) {
                e.kind = CurveKind::daisy;
                e.alias = true;
                e.def_base = num("x", j - g + 1);
                e.cls = at(e.def_base).cls;
                add_curve(e);
                continue;
            }
            e.kind = CurveKind::daisy;
            const int eps = (*pick)[j - 1];
            e.cls = eps > 0 ? add(petals[j - 1], top_cls) : add(petals[j - 1], negate(top_cls));
            if (j == 1) e.separating_genus = 1;
            add_curve(e);
            for (int i = 3; i <= top; i += 2) add_disjoint(e.name, c(i));
        }
        Relator d;
        d.id = "D2";
        d.type = "daisy";
        d.p = 2 * g - 2;
        for (int j = 2; j <= g; ++j) {
            d.lhs.push_back(c(2 * j - 1));
            d.lhs.push_back(c(2 * j - 1));
        }
        for (auto& n : repeat(c(top), 2 * g - 2)) d.lhs.push_back(n);
        for (int j = 1; j <= q; ++j) d.rhs.push_back(num("y", j));
        add_relator(d);
    }

    // Lantern.
    if (g == 2 || g == 3) {
        Relator l = *relator(g == 2 ? "D2" : "D");
        l.id = "lantern";
        l.type = "lantern";
        add_relator(l);
    } else if (g >= 4) {
        const HomClass w = at("r3").cls;
        std::vector<HomClass> petals{at("c1").cls, at("c3").cls, at("c5").cls};
        SignSearch s = daisy_sign_search(g, w, petals, 2);
        if (s.solutions == 0) throw std::logic_error("no sign solution for the lantern");
        const auto& eps = s.all.front();
        Relator l;
        l.id = "lantern";
        l.type = "lantern";
        l.p = 2;
        l.lhs = {"r3", "c1", "c3", "c5"};
        for (int j = 1; j <= 3; ++j) {
            CurveEntry e;
            e.name = num("l", j);
            e.kind = CurveKind::daisy;
            e.cls = eps[j - 1] > 0 ? add(petals[j - 1], w) : add(petals[j - 1], negate(w));
            add_curve(e);
            for (const std::string b : {"c1", "c3", "c5", "r3"}) add_disjoint(e.name, b);
            l.rhs.push_back(e.name);
        }
        add_relator(l);
    }
}

void Catalog::add_chain_relators()
{
    // Boundary curves of chain neighbourhoods that are not chain curves themselves.
    const int g = g_;
    const int top = 2 * g + 1;
    auto c = [this](int i) { return chain_name(i); };
    if (!lifted()) {
        for (int h = 1; h < g; ++h) {
            CurveEntry s;
            s.name = num("sep", h);
            s.kind = CurveKind::auxiliary;
            s.cls = zero_class(g);
            s.separating_genus = h;
            add_curve(s);
            for (int i = 1; i <= top; ++i)
                if (i != 2 * h + 1) add_disjoint(s.name, c(i));
        }
        for (int h = 2; h < g; ++h)
            for (const std::string stem : {"r", "rp"}) {
                CurveEntry r;
                r.name = num(stem, h);
                r.kind = CurveKind::auxiliary;
                r.cls = basis_b(g, h);
                add_curve(r);
                for (int i = 1; i <= top; ++i)
                    if (i != 2 * h) add_disjoint(r.name, c(i));
            }
        for (int h = 2; h < g; ++h) add_disjoint(num("r", h), num("rp", h));
    }

    for (int k = 2; k <= top; ++k) {
        Relator r;
        r.id = num("chain", k);
        r.type = "chain";
        const int power = (k % 2 == 1) ? k + 1 : 2 * k + 2;
        for (int t = 0; t < power; ++t)
            for (int i = 1; i <= k; ++i) r.lhs.push_back(c(i));
        if (k == top) {
            // (c1 ... c_{2g+1})^{2g+2} = 1 in the closed group
            if (lifted()) continue;
        } else if (k % 2 == 0) {
            const int h = k / 2;
            if (h < g) {
                if (lifted()) continue;
                r.rhs.push_back(num("sep", h));
            } else if (lifted()) {
                r.rhs_boundary["delta"] = 1;
            }
        } else {
            const int h = (k + 1) / 2;
            if (h == g) {
                r.rhs.push_back(c(top));
                r.rhs.push_back(lifted() ? "alphap" : c(top));
            } else {
                if (lifted()) continue;
                r.rhs.push_back(num("r", h));
                r.rhs.push_back(num("rp", h));
            }
        }
        add_relator(r);
    }
}

void Catalog::build_lifted()
{
    const int g = g_;
    const int top = 2 * g + 1;
    const Catalog closed = build(g, 0);
    for (int i = 1; i <= top; ++i) {
        CurveEntry e;
        e.name = num("alpha", i);
        e.kind = CurveKind::lifted;
        e.projection = num("c", i);
        e.cls = closed.at(e.projection).cls;
        add_curve(e);
    }
    CurveEntry ap;
    ap.name = "alphap";
    ap.kind = CurveKind::lifted;
    ap.projection = num("c", top);
    ap.cls = closed.at(ap.projection).cls;
    add_curve(ap);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j) add_disjoint(num("alpha", i), num("alpha", j));
    for (int i = 1; i <= top; ++i)
        if (i != 2 * g) add_disjoint("alphap", num("alpha", i));

    if (g >= 3)
        for (int j = 1; j <= g; ++j) {
            CurveEntry e;
            e.name = num("chi", j);
            e.kind = CurveKind::lifted;
            e.projection = num("x", j);
            e.cls = closed.at(e.projection).cls;
            add_curve(e);
            for (int i = 1; i <= top; i += 2) add_disjoint(e.name, num("alpha", i));
        }
    for (int j = 1; j <= n_; ++j) {
        CurveEntry z;
        z.name = num("zeta", j);
        z.kind = CurveKind::lifted;
        z.projection = num("c", top);
        z.cls = closed.at(z.projection).cls;
        add_curve(z);
        add_disjoint(z.name, num("alpha", top));
        add_disjoint(z.name, "alphap");
    }
    for (int j = 1; j <= n_; ++j) {
        CurveEntry b;
        b.name = num("bdelta", j);
        b.kind = CurveKind::boundary;
        b.cls = zero_class(g);
        add_curve(b);
    }
    CurveEntry d;
    d.name = "delta";
    d.kind = CurveKind::boundary;
    d.cls = zero_class(g);
    add_curve(d);

    add_chain_relators();

    if (g >= 3) {
        Relator r;
        r.id = "LD";
        r.type = "daisy";
        r.p = g - 1;
        for (int j = 1; j <= g; ++j) r.lhs.push_back(num("alpha", 2 * j - 1));
        for (auto& n : repeat(num("alpha", top), g - 2)) r.lhs.push_back(n);
        for (int j = 1; j <= g; ++j) r.rhs.push_back(num("chi", j));
        add_relator(r);
    }
    if (n_ >= 2) {
        // alpha_{2g+1}^{n-1} . bdelta_1 ... bdelta_n . alphap = zeta_1 ... zeta_n . delta
        Relator r;
        r.id = "LZ";
        r.type = "daisy";
        r.p = n_;
        r.lhs = repeat(num("alpha", top), n_ - 1);
        r.lhs.push_back("alphap");
        for (int j = 1; j <= n_; ++j) {
            r.lhs_boundary[num("bdelta", j)] = 1;
            r.rhs.push_back(num("zeta", j));
        }
        r.rhs_boundary["delta"] = 1;
        add_relator(r);
    }
}

}  // namespace twist
