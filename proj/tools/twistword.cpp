#include "twist/invariants.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace twist;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// TWIST_CATALOG names a dumped catalog used instead of the built-in one when genus and boundary match.
std::shared_ptr<const Catalog> provide(int g, int n)
{
    if (const char* path = std::getenv("TWIST_CATALOG")) {
        auto c = std::make_shared<Catalog>(Catalog::load(slurp(path)));
        if (c->genus() == g && c->boundary() == n) return c;
    }
    return Catalog::standard(g, n);
}

WordFile read_word(const std::string& path)
{
    try {
        return parse_wordfile(slurp(path), provide);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::pair<int, int> range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stoi(text), std::stoi(text)};
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (...) {
        throw UsageError("bad range '" + text + "' (use a..b)");
    }
}

// The scripted word a provenance block refers to, if the substitution record is one we ship.
std::optional<WordId> derived_for(const Provenance& prov)
{
    const WordId base = parse_word_id(prov.word_id);
    const int g = base.g;
    if (prov.subs.size() != 1) return std::nullopt;
    const auto [p, n] = prov.subs.front();
    if (base.family == "H") {
        if (p == g - 1 && n == 1 && g >= 3) return WordId{"H1", g, -1};
        if (p == g - 1 && n == 2 && g >= 3) return WordId{"H2", g, -1};
        if (p == 2 * g - 2 && n == 1) return WordId{"Hd", g, -1};
    } else if (base.family == "I") {
        if (p == 2 * g - 2 && n == (g + 1) / 2) return WordId{"Id", g, -1};
        if (p == g - 1 && g >= 3 && n >= 1 && n <= g + 1) return WordId{"I", g, n};
    } else if (base.family == "G") {
        if (p == 2 * g - 2 && n == g) return WordId{"Gd", g, -1};
    }
    return std::nullopt;
}

int cmd_gen(const std::string& id_text, const std::string& out, bool trace)
{
    const WordId id = parse_word_id(id_text);
    WordFile wf;
    if (trace && (is_derived_family(id.family) || is_lemma_family(id.family) || is_lifted_family(id.family) ||
                  ((id.family == "I" || id.family == "G") && id.k >= 0))) {
        ReplayOptions opt;
        opt.keep_snapshots = true;
        Derivation d = derive(id, opt);
        for (const auto& e : d.trace.entries)
            std::cerr << e.step << "\t" << e.text << "\t[" << e.checkpoint << "] len=" << e.length << "\n";
        if (!d.trace.ok) throw std::runtime_error(d.trace.error);
        wf = {d.trace.result, d.provenance};
    } else {
        wf = generate(id);
    }
    const std::string text = serialize_wordfile(wf.word, wf.provenance);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out) << text;
    }
    return 0;
}

int cmd_verify(const std::string& path)
{
    const WordFile wf = read_word(path);
    const Factorization& w = wf.word;
    bool all = true;
    auto line = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        all = all && ok;
    };
    const ValidationReport cat = w.cat->validate();
    line(cat.ok, "catalog validation" + (cat.ok ? std::string() : ": " + cat.first_failure));
    if (w.cat->lifted()) {
        line(is_relator(w), "projection maps to the identity in Sp");
        bool central = true;
        for (const auto& l : w.letters) central = central && !w.cat->is_boundary_letter(l.base);
        line(central, "boundary letters only on the right side");
    } else {
        line(is_relator(w), "word maps to the identity in Sp");
    }
    if (wf.provenance.present()) {
        const WordId base = parse_word_id(wf.provenance.word_id);
        long long drop = 0;
        for (const auto& [p, n] : wf.provenance.subs) drop += static_cast<long long>(p - 1) * n;
        const auto base_len = static_cast<long long>(build_word(base).size());
        if (!w.cat->lifted())
            line(base_len - drop == static_cast<long long>(w.size()),
                 "length " + std::to_string(w.size()) + " = |" + base.str() + "| - " + std::to_string(drop));
        if (auto id = derived_for(wf.provenance); id && !w.cat->lifted()) {
            const Derivation d = derive(*id);
            line(d.trace.ok, "replay of " + id->str() + (d.trace.ok ? "" : ": " + d.trace.error));
            bool same = d.trace.ok && d.word().letters.size() == w.letters.size();
            for (size_t i = 0; same && i < w.size(); ++i) same = d.word().letters[i] == w.letters[i];
            line(same, "word equals the replayed derivation of " + id->str());
        }
    }
    return all ? 0 : 1;
}

void print_report(const InvariantReport& r, const Factorization& w)
{
    std::cout << "genus " << r.genus << "  letters " << r.m << "\n";
    std::cout << "census: s0=" << r.census.s0;
    for (const auto& [h, n] : r.census.sep) std::cout << " s" << h << "=" << n;
    if (r.census.unknown) std::cout << " unknown=" << r.census.unknown;
    std::cout << "\n";
    std::cout << "e " << r.e << "\nsigma " << r.sigma << " (" << r.sigma_path << ")\n";
    if (r.b2plus) std::cout << "b2+ " << *r.b2plus << "\nb2- " << *r.b2minus << "\n";
    std::cout << "c1^2 " << r.c1sq << "\nchi_h " << rat(r.chi_h) << "\nH1 " << r.h1.str() << "\n";
    std::cout << "spin " << spin_text(r, w) << "\n";
    if (r.homeo_label) std::cout << "homeomorphic to " << *r.homeo_label << " (assuming the standard classification of simply connected odd forms)\n";
    std::cout << "hyperelliptic " << (r.hyperelliptic.certified ? "no, " : "undetermined, ") << r.hyperelliptic.reason << "\n";
    for (const auto& n : r.notes) std::cout << "note " << n << "\n";
}

TableFormat table_format(bool json, bool csv)
{
    return json ? TableFormat::json : csv ? TableFormat::csv : TableFormat::md;
}

int cmd_invariants(const std::string& path, bool json, bool csv, bool md, int lmax)
{
    const WordFile wf = read_word(path);
    const InvariantReport r = invariant_report(wf.word, wf.provenance, lmax);
    if (json || csv || md)
        std::cout << format_rows({{r, spin_text(r, wf.word)}}, table_format(json, csv));
    else
        print_report(r, wf.word);
    return 0;
}

int cmd_spin(const std::string& path, int lmax)
{
    const WordFile wf = read_word(path);
    const auto s = spin1_witness(wf.word, lmax);
    if (!s) {
        std::cout << "undetermined (no witness with l <= " << lmax << ")\n";
        return 1;
    }
    std::cout << "non-spin witness " << s->str(wf.word) << "\n";
    return 0;
}

int cmd_sections(const std::string& path, int expect, const std::string& against)
{
    const WordFile wf = read_word(path);
    std::optional<Factorization> closed;
    bool cyclic = false;
    if (!against.empty()) {
        const WordId id = parse_word_id(against);
        closed = generate(id).word;
        cyclic = id.family == "H";
    }
    const SectionAudit a = section_audit(wf.word, expect, closed, cyclic);
    std::cout << (a.pass ? "PASS " : "FAIL ") << a.reason << "\n";
    return a.pass ? 0 : 1;
}

int cmd_report(const std::string& family, const std::string& genus, const std::string& ks, TableFormat f)
{
    const auto [g0, g1] = range(genus);
    std::vector<ReportRow> rows;
    for (int g = g0; g <= g1; ++g) {
        int k0 = 0, k1 = 0;
        if (family == "Y") k1 = g >= 3 ? g + 1 : 0;
        else if (family == "H") k1 = g >= 3 ? 2 : 0;
        else if (family == "G") k1 = g;
        else throw UsageError("family must be Y, H or G");
        if (!ks.empty()) std::tie(k0, k1) = range(ks);
        for (int k = k0; k <= k1; ++k) {
            WordId id;
            if (family == "Y") id = k == 0 ? WordId{"I", g, -1} : WordId{"I", g, k};
            else if (family == "H") id = WordId{k == 0 ? "H" : k == 1 ? "H1" : "H2", g, -1};
            else id = k == 0 ? WordId{"G", g, -1} : k == g ? WordId{"Gd", g, -1} : WordId{"G", g, k};
            const WordId checked = parse_word_id(id.str());
            const WordFile wf = generate(checked);
            const InvariantReport r = invariant_report(wf.word, wf.provenance);
            rows.push_back({r, spin_text(r, wf.word)});
        }
    }
    std::cout << format_rows(rows, f);
    return 0;
}

int cmd_catalog(int g, int n, bool validate, bool dump)
{
    auto cat = provide(g, n);
    if (dump) std::cout << cat->dump();
    if (!validate) return 0;
    const ValidationReport r = cat->validate();
    for (const auto& c : r.checks) std::cout << c << "\n";
    for (const auto& c : r.notes) std::cout << "note " << c << "\n";
    std::cout << (r.ok ? "catalog valid\n" : "catalog INVALID: " + r.first_failure + "\n");
    return r.ok ? 0 : 1;
}

int cmd_regen(const std::string& dir)
{
    std::filesystem::create_directories(dir);
    for (const auto& id : shipped_ids()) {
        const auto [initial, script] = build_script(id);
        std::ofstream(std::filesystem::path(dir) / script_filename(id)) << script.str();
    }
    std::cout << "wrote " << shipped_ids().size() << " scripts to " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"twistword: Dehn twist words, derivation replay and fibration invariants"};
    app.require_subcommand(1);

    std::string id_text, out, path, family, genus, ks, against, dir = std::string(TWIST_DATA_DIR) + "/scripts";
    bool trace = false, json = false, csv = false, md = false, validate = false, dump = false;
    int lmax = 3, expect = -1, g = 3, n = 0;

    auto* gen = app.add_subcommand("gen", "emit a built-in or derived word file");
    gen->add_option("id", id_text, "word id, e.g. I@g=3,k=2")->required();
    gen->add_option("-o,--out", out, "output file");
    gen->add_flag("--trace", trace, "print the replay trace to stderr");

    auto* verify = app.add_subcommand("verify", "check a word file");
    verify->add_option("file", path)->required();

    auto* inv = app.add_subcommand("invariants", "invariant report of a word file");
    inv->add_option("file", path)->required();
    inv->add_flag("--json", json);
    inv->add_flag("--csv", csv);
    inv->add_flag("--md", md);
    inv->add_option("--lmax", lmax, "spin witness search depth");

    auto* spin = app.add_subcommand("spin", "search a non-spin witness");
    spin->add_option("file", path)->required();
    spin->add_option("--lmax", lmax);

    auto* sec = app.add_subcommand("sections", "audit the sections of a lifted word");
    sec->add_option("file", path)->required();
    sec->add_option("--expect", expect, "expected section count");
    sec->add_option("--against", against, "closed word id the projection must equal");

    auto* rep = app.add_subcommand("report", "invariant table for a word family");
    rep->add_option("--family", family, "Y, H or G")->required();
    rep->add_option("--genus", genus, "a..b")->required();
    rep->add_option("--k", ks, "a..b");
    rep->add_flag("--json", json);
    rep->add_flag("--csv", csv);

    auto* cat = app.add_subcommand("catalog", "curve catalog");
    cat->add_option("--genus", g)->required();
    cat->add_option("--boundary", n);
    cat->add_flag("--validate", validate);
    cat->add_flag("--dump", dump);

    auto* regen = app.add_subcommand("regen-scripts", "rebuild the shipped derivation scripts");
    regen->add_option("--dir", dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*gen) return cmd_gen(id_text, out, trace);
        if (*verify) return cmd_verify(path);
        if (*inv) return cmd_invariants(path, json, csv, md, lmax);
        if (*spin) return cmd_spin(path, lmax);
        if (*sec) return cmd_sections(path, expect, against);
        if (*rep) return cmd_report(family, genus, ks, table_format(json, csv));
        if (*cat) return cmd_catalog(g, n, validate, dump);
        if (*regen) return cmd_regen(dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
