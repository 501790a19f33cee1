#pragma once

#include "twist/relators.hpp"

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twist {

using Rational = boost::rational<long long>;

std::string rat(const Rational& q);  // "n" or "n/d"

struct CycleCensus {
    long long s0 = 0;
    std::map<int, long long> sep;  // separation genus h -> count
    long long unknown = 0;         // zero-class letters without a genus label
    long long total() const;
};

long long euler_char(const Factorization& w);
CycleCensus classify_cycles(const Factorization& w);

// Throws std::domain_error on an incomplete census or a non-integer result.
Rational sigma_hyperelliptic_exact(const CycleCensus& c, int g);
long long sigma_hyperelliptic(const CycleCensus& c, int g);

using SubstitutionRecord = std::vector<std::pair<int, int>>;  // (p, count)
long long sigma_substituted(long long base_sigma, const SubstitutionRecord& rec);

struct BlowdownDelta {
    int de, dsigma, dc1sq, dchi_h, db2plus;
};
BlowdownDelta rational_blowdown_delta(int p);

struct SpinWitness {
    int l = 0;
    std::vector<size_t> letters;  // 0-based positions of the summands
    size_t sum_letter = 0;        // a letter carrying the sum class
    std::string str(const Factorization& w) const;
};
std::optional<SpinWitness> spin1_witness(const Factorization& w, int l_max = 3);

struct Certificate {
    bool certified = false;
    Rational discrepancy{0};
    std::string reason;
};
// Signature predicted by provenance minus the hyperelliptic-formula value of the substituted word's census.
Certificate nonhyperelliptic_certificate(const CycleCensus& base, const CycleCensus& derived,
                                         const SubstitutionRecord& rec, int g);

struct SectionAudit {
    bool pass = false;
    int n = 0;
    std::string reason;
};
// Boundary census of a lifted word; when `closed` is given the projection must equal it
// letterwise (or up to rotation when `cyclic`).
SectionAudit section_audit(const Factorization& lifted, int expect_n,
                           const std::optional<Factorization>& closed = std::nullopt, bool cyclic = false);

struct InvariantReport {
    int genus = 0;
    int k = 0;  // substitutions applied
    long long m = 0;
    long long e = 0;
    long long sigma = 0;
    std::string sigma_path;  // "hyperelliptic" or "provenance"
    std::optional<long long> b2plus, b2minus;
    long long c1sq = 0;
    Rational chi_h{0};
    AbelianGroup h1;
    std::optional<SpinWitness> spin;
    std::optional<std::string> homeo_label;
    Certificate hyperelliptic;
    CycleCensus census;
    std::vector<std::string> notes;
};

// With provenance, sigma is the base word's hyperelliptic-formula value plus the blow-down deltas; without it
// the word itself is taken as hyperelliptic.
InvariantReport invariant_report(const Factorization& w, const Provenance& prov = {}, int l_max = 3);

std::string spin_text(const InvariantReport& r, const Factorization& w);
std::string homeo_text(long long b2plus, long long b2minus);

enum class TableFormat { csv, md, json };
// Fixed columns: genus, k, m, e, sigma, b2plus, b2minus, c1sq, chi_h, h1, spin, homeo_label, hyperelliptic.
struct ReportRow {
    InvariantReport rep;
    std::string spin;
};
std::string format_rows(const std::vector<ReportRow>& rows, TableFormat f);

}  // namespace twist
