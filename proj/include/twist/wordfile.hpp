#pragma once

#include "twist/word.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twist {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct Provenance {
    std::string word_id;                   // e.g. I@g=3,k=2
    std::vector<std::pair<int, int>> subs;  // (daisy type p, count)
    bool present() const { return !word_id.empty(); }
};

struct WordFile {
    Factorization word;
    Provenance provenance;
};

using CatalogProvider = std::function<std::shared_ptr<const Catalog>(int genus, int boundary)>;

WordFile parse_wordfile(const std::string& text, const CatalogProvider& provider = {});
std::string serialize_wordfile(const Factorization& w, const Provenance& prov = {});

std::string format_letter(const Catalog& cat, const Letter& l);
std::string format_body(const Factorization& w);

}  // namespace twist
