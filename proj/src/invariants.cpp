#include "twist/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace twist {

long long CycleCensus::total() const
{
    long long t = s0 + unknown;
    for (const auto& [h, n] : sep) t += n;
    return t;
}

long long euler_char(const Factorization& w)
{
    return 4 - 4 * static_cast<long long>(w.genus()) + static_cast<long long>(w.size());
}

CycleCensus classify_cycles(const Factorization& w)
{
    const Catalog& cat = *w.cat;
    const int g = w.genus();
    CycleCensus c;
    for (const auto& l : w.letters) {
        if (!is_zero(letter_class(cat, l))) {
            ++c.s0;
            continue;
        }
        const auto& entry = cat.at(normalize(cat, l).base);
        if (entry.separating_genus && entry.kind != CurveKind::boundary) {
            const int h = std::min(*entry.separating_genus, g - *entry.separating_genus);
            ++c.sep[h];
        } else {
            ++c.unknown;
        }
    }
    return c;
}

Rational sigma_hyperelliptic_exact(const CycleCensus& c, int g)
{
    if (c.unknown > 0) throw std::domain_error("census has separating cycles of unknown genus");
    const long long q = 2 * g + 1;
    Rational s = Rational(-(g + 1), q) * c.s0;
    for (const auto& [h, n] : c.sep) s += (Rational(4LL * h * (g - h), q) - 1) * n;
    return s;
}

long long sigma_hyperelliptic(const CycleCensus& c, int g)
{
    const Rational s = sigma_hyperelliptic_exact(c, g);
    if (s.denominator() != 1) {
        std::ostringstream os;
        os << "signature formula gives the non-integer " << s;
        throw std::domain_error(os.str());
    }
    return s.numerator();
}

long long sigma_substituted(long long base_sigma, const SubstitutionRecord& rec)
{
    for (const auto& [p, n] : rec) base_sigma += static_cast<long long>(p - 1) * n;
    return base_sigma;
}

BlowdownDelta rational_blowdown_delta(int p)
{
    if (p < 2) throw std::invalid_argument("rational blow-down needs p >= 2");
    return {-(p - 1), p - 1, p - 1, 0, 0};
}

std::string SpinWitness::str(const Factorization& w) const
{
    std::ostringstream os;
    os << "l=" << l;
    if (l == 0) {
        os << " separating " << format_letter(*w.cat, w.letters[sum_letter]) << " at " << sum_letter + 1;
        return os.str();
    }
    os << " (";
    for (size_t k = 0; k < letters.size(); ++k)
        os << (k ? ", " : "") << format_letter(*w.cat, w.letters[letters[k]]) << "@" << letters[k] + 1;
    os << ") sum " << format_letter(*w.cat, w.letters[sum_letter]) << "@" << sum_letter + 1;
    return os.str();
}

std::optional<SpinWitness> spin1_witness(const Factorization& w, int l_max)
{
    const Catalog& cat = *w.cat;
    const int g = w.genus();
    std::vector<std::uint64_t> cls;
    std::vector<size_t> rep;
    std::unordered_map<std::uint64_t, size_t> first;
    for (size_t i = 0; i < w.size(); ++i) {
        const std::uint64_t z = z2_bits(letter_class(cat, w.letters[i]));
        if (z == 0) {
            SpinWitness s;
            s.l = 0;
            s.sum_letter = i;
            return s;
        }
        if (first.emplace(z, i).second) {
            cls.push_back(z);
            rep.push_back(i);
        }
    }
    const size_t n = cls.size();
    std::vector<size_t> pick;
    std::optional<SpinWitness> found;
    // depth-first over increasing index tuples of distinct classes
    auto rec = [&](auto&& self, size_t from, std::uint64_t sum, int pairs, int l) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == l) {
            if ((l + pairs) % 2 != 0) return;
            auto it = first.find(sum);
            if (it == first.end()) return;
            SpinWitness s;
            s.l = l;
            for (size_t k : pick) s.letters.push_back(rep[k]);
            s.sum_letter = it->second;
            found = s;
            return;
        }
        for (size_t k = from; k < n && !found; ++k) {
            int extra = 0;
            for (size_t j : pick) extra += z2_pairing(cls[j], cls[k], g);
            pick.push_back(k);
            self(self, k + 1, sum ^ cls[k], pairs + extra, l);
            pick.pop_back();
        }
    };
    for (int l = 1; l <= l_max && !found; ++l) rec(rec, 0, 0, 0, l);
    return found;
}

Certificate nonhyperelliptic_certificate(const CycleCensus& base, const CycleCensus& derived,
                                         const SubstitutionRecord& rec, int g)
{
    Certificate c;
    if (rec.empty()) {
        c.reason = "not applicable: no substitutions";
        return c;
    }
    if (!base.sep.empty() || base.unknown) {
        c.reason = "not applicable: base word has separating cycles";
        return c;
    }
    const Rational predicted = sigma_hyperelliptic_exact(base, g) + (sigma_substituted(0, rec));
    const Rational formula = sigma_hyperelliptic_exact(derived, g);
    c.discrepancy = predicted - formula;
    c.certified = c.discrepancy != Rational(0);
    std::ostringstream os;
    os << "provenance sigma " << rat(predicted) << " vs hyperelliptic formula " << rat(formula);
    c.reason = os.str();
    return c;
}

SectionAudit section_audit(const Factorization& lifted, int expect_n, const std::optional<Factorization>& closed, bool cyclic)
{
    SectionAudit a;
    const Catalog& cat = *lifted.cat;
    auto fail = [&](const std::string& why) {
        a.pass = false;
        a.reason = why;
        return a;
    };
    if (!cat.lifted()) return fail("word is not over a lifted alphabet");
    for (size_t i = 0; i < lifted.size(); ++i)
        if (cat.is_boundary_letter(lifted.letters[i].base))
            return fail("boundary letter among the twists at position " + std::to_string(i + 1));
    std::vector<int> seen;
    for (const auto& [name, e] : lifted.rhs) {
        if (name.rfind("bdelta", 0) != 0) return fail("right side contains " + name + " instead of section boundaries");
        if (e != 1) return fail(name + " occurs " + std::to_string(e) + " times");
        seen.push_back(std::stoi(name.substr(6)));
    }
    std::sort(seen.begin(), seen.end());
    for (size_t k = 0; k < seen.size(); ++k)
        if (seen[k] != static_cast<int>(k) + 1) return fail("boundary letters are not bdelta1..bdelta" + std::to_string(seen.size()));
    a.n = static_cast<int>(seen.size());
    if (expect_n >= 0 && a.n != expect_n)
        return fail("found " + std::to_string(a.n) + " sections, expected " + std::to_string(expect_n));
    if (closed) {
        const Factorization p = project(lifted, closed->cat);
        std::vector<Letter> want;
        for (const auto& l : closed->letters) want.push_back(normalize(*closed->cat, l));
        bool match = false;
        if (p.letters.size() == want.size()) {
            const size_t rots = cyclic ? want.size() : 1;
            for (size_t r = 0; r < rots && !match; ++r) {
                bool ok = true;
                for (size_t i = 0; i < want.size() && ok; ++i) ok = p.letters[(i + r) % want.size()] == want[i];
                match = ok;
            }
        }
        if (!match) return fail("projection differs from the closed word");
    }
    a.pass = true;
    a.reason = "n = " + std::to_string(a.n);
    return a;
}

std::string homeo_text(long long b2plus, long long b2minus)
{
    auto part = [](long long n, const char* s) { return n == 1 ? std::string(s) : std::to_string(n) + s; };
    return part(b2plus, "CP2") + "#" + part(b2minus, "CP2bar");
}

InvariantReport invariant_report(const Factorization& w, const Provenance& prov, int l_max)
{
    if (w.cat->lifted()) throw std::invalid_argument("invariants need a closed-surface word");
    InvariantReport r;
    const int g = w.genus();
    r.genus = g;
    r.m = static_cast<long long>(w.size());
    r.e = euler_char(w);
    r.census = classify_cycles(w);
    if (prov.present()) {
        const WordId base_id = parse_word_id(prov.word_id);
        const Factorization base = build_word(base_id);
        const CycleCensus bc = classify_cycles(base);
        r.sigma = sigma_substituted(sigma_hyperelliptic(bc, g), prov.subs);
        r.sigma_path = "provenance";
        for (const auto& [p, n] : prov.subs) r.k += n;
        long long de = 0;
        for (const auto& [p, n] : prov.subs) de += static_cast<long long>(p - 1) * n;
        if (euler_char(base) - de != r.e) r.notes.push_back("letter count disagrees with the substitution record");
        r.hyperelliptic = nonhyperelliptic_certificate(bc, r.census, prov.subs, g);
        if (base_id.family == "H" && prov.subs == SubstitutionRecord{{g - 1, 1}})
            r.notes.push_back("label check: the blow-down deltas give b2minus = 3g+7 = " + std::to_string(3 * g + 7) +
                              "; a CP2#(3g+5)CP2bar label would contradict e = " + std::to_string(r.e));
    } else {
        r.sigma = sigma_hyperelliptic(r.census, g);
        r.sigma_path = "hyperelliptic";
        r.hyperelliptic.reason = "not applicable: no substitution record";
    }
    std::vector<HomClass> classes;
    for (const auto& l : w.letters) classes.push_back(letter_class(*w.cat, l));
    r.h1 = h1_cokernel(classes, g);
    if (r.h1.trivial()) {
        r.b2plus = (r.e - 2 + r.sigma) / 2;
        r.b2minus = (r.e - 2 - r.sigma) / 2;
    }
    r.c1sq = 2 * r.e + 3 * r.sigma;
    r.chi_h = Rational(r.e + r.sigma, 4);
    r.spin = spin1_witness(w, l_max);
    if (r.h1.trivial() && r.spin) r.homeo_label = homeo_text(*r.b2plus, *r.b2minus);
    return r;
}

std::string spin_text(const InvariantReport& r, const Factorization& w)
{
    return r.spin ? "non-spin " + r.spin->str(w) : std::string("undetermined");
}

std::string rat(const Rational& q)
{
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << "/" << q.denominator();
    return os.str();
}

namespace {

std::string hyper_text(const Certificate& c)
{
    return c.certified ? "non-hyperelliptic (discrepancy " + rat(c.discrepancy) + ")" : "undetermined";
}

std::vector<std::string> cells(const ReportRow& row)
{
    const auto& r = row.rep;
    auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); };
    return {std::to_string(r.genus), std::to_string(r.k), std::to_string(r.m), std::to_string(r.e),
            std::to_string(r.sigma), opt(r.b2plus), opt(r.b2minus), std::to_string(r.c1sq), rat(r.chi_h),
            r.h1.str(), row.spin, r.homeo_label.value_or(""), hyper_text(r.hyperelliptic)};
}

const std::vector<std::string> kColumns{"genus", "k", "m", "e", "sigma", "b2plus", "b2minus",
                                        "c1sq", "chi_h", "h1", "spin", "homeo_label", "hyperelliptic"};

}  // namespace

std::string format_rows(const std::vector<ReportRow>& rows, TableFormat f)
{
    std::ostringstream os;
    if (f == TableFormat::json) {
        nlohmann::json j;
        j["schema"] = 1;
        j["columns"] = kColumns;
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rows) {
            const auto c = cells(row);
            nlohmann::json o;
            for (size_t k = 0; k < kColumns.size(); ++k) o[kColumns[k]] = c[k];
            const auto& r = row.rep;
            for (const char* key : {"genus", "k", "m", "e", "sigma", "c1sq"}) o[key] = std::stoll(o[key].get<std::string>());
            if (r.b2plus) o["b2plus"] = *r.b2plus; else o["b2plus"] = nullptr;
            if (r.b2minus) o["b2minus"] = *r.b2minus; else o["b2minus"] = nullptr;
            o["sigma_path"] = r.sigma_path;
            o["notes"] = r.notes;
            j["rows"].push_back(o);
        }
        os << j.dump(2) << "\n";
        return os.str();
    }
    auto csv_cell = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    if (f == TableFormat::csv) {
        for (size_t k = 0; k < kColumns.size(); ++k) os << (k ? "," : "") << kColumns[k];
        os << "\n";
        for (const auto& row : rows) {
            const auto c = cells(row);
            for (size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << csv_cell(c[k]);
            os << "\n";
        }
        return os.str();
    }
    os << "|";
    for (const auto& c : kColumns) os << " " << c << " |";
    os << "\n|";
    for (size_t k = 0; k < kColumns.size(); ++k) os << "---|";
    os << "\n";
    for (const auto& row : rows) {
        os << "|";
        for (const auto& c : cells(row)) os << " " << c << " |";
        os << "\n";
    }
    return os.str();
}

}  // namespace twist
