#pragma once

#include "twist/homology.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twist {

// One signed generator inside a conjugator word: t_name^exp with exp = +-1.
struct Gen {
    std::string name;
    int exp = 1;
    bool operator==(const Gen&) const = default;
};
using GenWord = std::vector<Gen>;

GenWord inverse(const GenWord& w);
GenWord concat(const GenWord& a, const GenWord& b);
GenWord positive_word(const std::vector<std::string>& names);

enum class CurveKind { chain, derived, daisy, auxiliary, lifted, boundary };

struct CurveEntry {
    std::string name;
    CurveKind kind = CurveKind::chain;
    HomClass cls;
    std::uint64_t z2 = 0;
    std::optional<int> separating_genus;
    // Alias recipe: the curve is [def_conj : def_base].
    bool alias = false;
    GenWord def_conj;
    std::string def_base;
    // Closed-surface name a lifted curve projects to; empty for boundary letters.
    std::string projection;
    int order = 0;  // position in the catalog, used for canonical ordering
};

// actor(source) = target; used as  actor . t_source  <->  t_target . actor
struct ActionFact {
    std::string id;
    GenWord actor;
    std::string source;
    std::string target;
};

// LHS <-> RHS, both positive letter sequences of plain curve names; lifted
// relators may also carry central boundary letters on each side.
struct Relator {
    std::string id;
    std::string type;  // "daisy", "lantern", "chain"
    int p = 0;         // daisy type (2 for lantern)
    std::vector<std::string> lhs, rhs;
    std::map<std::string, int> lhs_boundary, rhs_boundary;
};

struct ValidationReport {
    bool ok = true;
    std::string first_failure;
    std::vector<std::string> checks;  // one line per check performed
    std::vector<std::string> notes;   // ambiguity reports and the like
    void fail(const std::string& why);
    void pass(const std::string& what) { checks.push_back("ok   " + what); }
};

// Result of the daisy sign search: interior classes delta_j + eps_j * delta_0.
struct SignSearch {
    int solutions = 0;
    std::vector<std::vector<int>> all;  // every admissible sign vector, one entry per interior curve
};

SignSearch daisy_sign_search(int g, const HomClass& delta0, const std::vector<HomClass>& deltas, int p);

class Catalog {
public:
    Catalog() = default;
    static std::shared_ptr<const Catalog> standard(int g, int boundary = 0);
    static Catalog build(int g, int boundary = 0);

    int genus() const { return g_; }
    int boundary() const { return n_; }
    bool lifted() const { return n_ > 0; }
    std::string chain_name(int i) const;  // c<i> or alpha<i>

    const CurveEntry* find(const std::string& name) const;
    const CurveEntry& at(const std::string& name) const;
    const std::vector<CurveEntry>& curves() const { return curves_; }

    bool disjoint(const std::string& a, const std::string& b) const;
    bool commute(const std::string& a, const std::string& b) const { return a == b || disjoint(a, b); }
    bool braid_pair(const std::string& a, const std::string& b) const;
    std::vector<std::pair<std::string, std::string>> braid_pairs() const;
    bool is_boundary_letter(const std::string& name) const;

    // Sp image of a conjugator word (functional composition).
    SpMatrix word_matrix(const GenWord& w) const;
    HomClass apply_word(const GenWord& w, const HomClass& v) const;

    // Facts: looked up by id; family ids are instantiated and validated on demand.
    std::optional<ActionFact> fact(const std::string& id) const;
    bool fact_holds(const ActionFact& f) const;
    // Registers a custom fact after homology validation; returns false if rejected.
    bool register_fact(const ActionFact& f);

    std::optional<Relator> relator(const std::string& id) const;
    std::vector<std::string> relator_ids() const;

    // Mutation used while building and by fault-injection tests.
    void add_curve(CurveEntry e);
    void set_class(const std::string& name, const HomClass& cls);
    void add_disjoint(const std::string& a, const std::string& b);
    void add_relator(Relator r);

    ValidationReport validate() const;

    std::string dump() const;
    static Catalog load(const std::string& text);

private:
    int g_ = 0;
    int n_ = 0;
    std::vector<CurveEntry> curves_;
    std::map<std::string, size_t> index_;
    std::map<std::string, std::vector<std::string>> disjoint_;
    std::set<std::pair<std::string, std::string>> disjoint_pairs_;  // both orders, for lookup
    std::map<std::string, ActionFact> custom_facts_;
    std::map<std::string, Relator> relators_;

    void build_closed();
    void build_lifted();
    void add_chain_relators();
};

SpMatrix relator_side_image(const Catalog& cat, const std::vector<std::string>& side);

}  // namespace twist
