#pragma once

#include "twist/script.hpp"

#include <string>
#include <vector>

namespace twist::build {

// Records steps while applying them, so every builder position is checked as it is produced.
class Builder {
public:
    explicit Builder(Factorization w) : cur(std::move(w)) {}

    Factorization cur;
    Script script;

    void note(const std::string& text) { script.note(text); }
    void hr(size_t p) { put(StepKind::HR, p + 1); }
    void hl(size_t p) { put(StepKind::HL, p + 1); }
    void comm(size_t p) { put(StepKind::COMM, p + 1); }
    void braid(size_t p) { put(StepKind::BRAID, p + 1); }
    void fact(const std::string& id, size_t p) { put(StepKind::FACT, p + 1, id); }
    void sub(const std::string& id, size_t p) { put(StepKind::SUB, p + 1, id); }
    void cyc(size_t k) { put(StepKind::CYC, k); }
    void conj(const std::string& u) { put(StepKind::CONJ, 0, u); }

    // Letter moves one slot, keeping its own form; the letter it crosses is conjugated
    // unless the two commute.
    void push_left(size_t p);
    void push_right(size_t p);
    void move_left(size_t from, size_t to);
    void move_right(size_t from, size_t to);

    // Reorders the mutually commuting block at [pos, pos + names.size()) into `names`.
    void arrange(size_t pos, const std::vector<std::string>& names);

    std::string c(int i) const { return cur.cat->chain_name(i); }
    size_t find(const std::string& name, size_t from = 0) const;
    void expect(size_t pos, const std::vector<std::string>& names, const char* where) const;

private:
    void put(StepKind k, size_t index, std::string arg = {});
};

std::vector<std::string> run(const std::string& stem, int from, int to);  // stem<from> .. stem<to>, either direction

// Chain staircases; a_i stands for chain curve c_{i+off}.
void staircase_down(Builder& b, size_t pos, int k, int off = 0);
void staircase_up(Builder& b, size_t pos, int k, int off = 0);
// Conjugator words for phi_l.
std::string phi_text(const Builder& b, int l, bool inverse);
void phi_sort(Builder& b, size_t pos, int l);
void phi_sort_inverse(Builder& b, size_t pos, int l);

// Equal-length positive braid words in plain chain letters; BRAID/COMM moves only.
void braid_transform(Builder& b, size_t pos, const std::vector<std::string>& target);

void odd_even_split(Builder& b, size_t pos);     // c1 ... c2g -> (e2 ... e2g)(c1 c3 ... c2g-1)
void descending_split(Builder& b, size_t pos);  // c2g ... c1 -> (c2g-1 ... c1)(ebar2g ... ebar2)
// (a1 ... an)^2 -> squares of the letters with the parity of n, then the pushed block, then the bar block.
void square_split(Builder& b, size_t pos, int n, int off);

}  // namespace twist::build

namespace twist::build {

// Whole-word plans. Each works on the Builder's current word; lifted catalogs use alpha names.
void hyperelliptic_opening(Builder& b);           // H(g) (or its lift) -> (c2g+1 ... c1)^2 (c1 ... c2g+1)(c1 ... c2g c2g+1)
void one_daisy(Builder& b);                       // H(g) -> H(g,1)
// H(g) -> the word with squared odd letters; mode 0: c1^2 ... c2g-1^2 c2g+1^{2g+4},
// mode 1: (c1 c3 ... c2g-1 c2g+1^{g-2})^2 c2g+1^8; then substitutions per mode.
enum class TwoDaisyMode { squares, two_daisies, daisy_2g2 };
void two_daisy(Builder& b, TwoDaisyMode mode);
void odd_chain_daisies(Builder& b, int k);        // I(g) -> I(g,k)
void odd_chain_big_daisy(Builder& b);             // I(g) -> I with D_{2(g-1)} in every 4-block
void even_chain_big_daisy(Builder& b, int k);     // G(g) -> G(g,k)
void lift_chain(Builder& b);                      // (alpha1 ... alpha2g)^{4g+2} -> lift of H(g)

}  // namespace twist::build
