#pragma once

#include "twist/script.hpp"
#include "twist/wordfile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twist {

// Word ids look like  H@g=4, I@g=3,k=2, chain@g=3,k=5, lem41a@g=3,k=4, thm41lift@g=3.
struct WordId {
    std::string family;
    int g = 0;
    int k = -1;  // optional second parameter
    std::string str() const;
};

WordId parse_word_id(const std::string& text);

// Base words and relator sides (the petal side for relator ids).
Factorization build_word(const WordId& id);

struct Derivation {
    WordId id;
    Factorization initial;
    Script script;
    Trace trace;
    Provenance provenance;
    const Factorization& word() const { return trace.result; }
};

bool is_derived_family(const std::string& family);
bool is_lifted_family(const std::string& family);
bool is_lemma_family(const std::string& family);

// Scripted words: derived closed words, lifted relations and the lemma demonstrations.
Derivation derive(const WordId& id, const ReplayOptions& opt = {});

// Builder output only (no replay): initial word plus script.
std::pair<Factorization, Script> build_script(const WordId& id);

// The closed word a lifted relation projects to (letterwise), when there is one.
std::optional<WordId> projection_target(const WordId& lifted);
Factorization project(const Factorization& lifted, std::shared_ptr<const Catalog> closed);

// Expected right-hand side of a lemma demonstration.
Factorization lemma_expected(const WordId& id);

// Every id whose script ships under data/scripts.
std::vector<WordId> shipped_ids();
std::string script_filename(const WordId& id);

// Gen / report entry point: base, relator-side, or scripted word with its provenance.
WordFile generate(const WordId& id);

}  // namespace twist
