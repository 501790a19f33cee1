#pragma once

#include "twist/catalog.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace twist {

struct Letter {
    GenWord conj;  // w in w . t_base . w^-1
    std::string base;
    bool operator==(const Letter&) const = default;
};

Letter plain(const std::string& name);

struct Factorization {
    std::shared_ptr<const Catalog> cat;
    std::vector<Letter> letters;
    // Central boundary letters standing on the other side of a lifted relation,
    // as an exponent tally (empty for closed relators).
    std::map<std::string, int> rhs;

    int genus() const { return cat->genus(); }
    int boundary() const { return cat->boundary(); }
    size_t size() const { return letters.size(); }
};

Factorization make_word(std::shared_ptr<const Catalog> cat, const std::vector<std::string>& names);

class StepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Alias expansion, reduction in the right-angled Artin group of the catalog,
// removal of trailing conjugator letters that fix the base, lexicographic trace form.
Letter normalize(const Catalog& cat, const Letter& l);
GenWord reduce_word(const Catalog& cat, const GenWord& w);
GenWord expand_gens(const Catalog& cat, const GenWord& w);

HomClass letter_class(const Catalog& cat, const Letter& l);
std::vector<std::string> support(const Catalog& cat, const Letter& l);

enum class LetterRelation { equal, distinct, homology_equal_only };
LetterRelation letters_equal(const Catalog& cat, const Letter& a, const Letter& b);
const char* relation_name(LetterRelation r);

SpMatrix word_image(const Factorization& w);
SpMatrix window_image(const Factorization& w, size_t from, size_t to);  // [from, to)
bool is_relator(const Factorization& w);

// Elementary operations; positions are 0-based.
Factorization hurwitz_right(const Factorization& w, size_t i);
Factorization hurwitz_left(const Factorization& w, size_t i);
Factorization cyclic_permute(const Factorization& w, size_t k);
Factorization global_conjugate(const Factorization& w, const GenWord& u);
Factorization commute_adjacent(const Factorization& w, size_t i);
Factorization braid_rewrite(const Factorization& w, size_t i);
Factorization apply_action_fact(const Factorization& w, const ActionFact& f, size_t i);
Factorization substitute(const Factorization& w, const Relator& r, size_t i);
Factorization expand_aliases(const Factorization& w);

bool letters_commute(const Catalog& cat, const Letter& a, const Letter& b);

// Commutation moves that would bring the letters at `positions` (increasing) into a
// contiguous block starting at positions.front(). Returns 0-based COMM indices, or
// an empty optional-like result (ok=false) if some swap is not a registered commutation.
struct CommuteSuggestion {
    bool ok = false;
    std::vector<size_t> swaps;
};
CommuteSuggestion suggest_commutations(const Factorization& w, const std::vector<size_t>& positions);

// Conjugator words: tokens `name` or `name^k` separated by spaces; `phi` is the
// builtin alias c_{2g+1}^{g+1} c_{2g-1}^g ... c_3^2 c_1 (alpha names when lifted).
GenWord phi_word(const Catalog& cat);
GenWord parse_genword(const Catalog& cat, const std::string& text);
std::string format_genword(const GenWord& w);

}  // namespace twist
