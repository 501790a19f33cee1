#include "builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace twist::build {

namespace {

std::string id3(const char* fam, int a, int b, int c)
{
    return std::string(fam) + ":" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

}  // namespace

std::vector<std::string> run(const std::string& stem, int from, int to)
{
    std::vector<std::string> out;
    const int dir = from <= to ? 1 : -1;
    for (int i = from;; i += dir) {
        out.push_back(stem + std::to_string(i));
        if (i == to) break;
    }
    return out;
}

void Builder::put(StepKind k, size_t index, std::string arg)
{
    script.add(k, index, std::move(arg));
    try {
        cur = apply_step(cur, script.steps.back());
    } catch (const std::exception& e) {
        throw std::logic_error("builder step " + std::to_string(script.size()) + " (" +
                               script.steps.back().str() + "): " + e.what());
    }
}

void Builder::push_left(size_t p)
{
    if (letters_commute(*cur.cat, cur.letters[p - 1], cur.letters[p]))
        comm(p - 1);
    else
        hl(p - 1);
}

void Builder::push_right(size_t p)
{
    if (letters_commute(*cur.cat, cur.letters[p], cur.letters[p + 1]))
        comm(p);
    else
        hr(p);
}

void Builder::move_left(size_t from, size_t to)
{
    for (size_t p = from; p > to; --p) push_left(p);
}

void Builder::move_right(size_t from, size_t to)
{
    for (size_t p = from; p < to; ++p) push_right(p);
}

void Builder::arrange(size_t pos, const std::vector<std::string>& names)
{
    const Catalog& cat = *cur.cat;
    for (size_t t = 0; t < names.size(); ++t) {
        const Letter want = normalize(cat, plain(names[t]));
        size_t p = pos + t;
        while (p < pos + names.size() && cur.letters[p] != want) ++p;
        if (p == pos + names.size()) throw std::logic_error("arrange: " + names[t] + " missing");
        for (; p > pos + t; --p) comm(p - 1);
    }
}

size_t Builder::find(const std::string& name, size_t from) const
{
    const Letter want = normalize(*cur.cat, plain(name));
    for (size_t p = from; p < cur.size(); ++p)
        if (cur.letters[p] == want) return p;
    throw std::logic_error("letter " + name + " not found");
}

void Builder::expect(size_t pos, const std::vector<std::string>& names, const char* where) const
{
    for (size_t k = 0; k < names.size(); ++k)
        if (pos + k >= cur.size() || cur.letters[pos + k] != normalize(*cur.cat, plain(names[k])))
            throw std::logic_error(std::string(where) + ": expected " + names[k] + " at " + std::to_string(pos + k + 1));
}

void staircase_down(Builder& b, size_t pos, int k, int off)
{
    // (a_{k-1} ... a_1)(a_k ... a_1)  ->  a_k^k abar_{k-1} ... abar_1
    if (k == 2) {
        b.fact(id3("R1", 2 + off, 1 + off, 1 + off), pos);
        b.hl(pos + 1);
        return;
    }
    const int j = k - 1;
    b.move_left(pos + j, pos + 1);
    staircase_down(b, pos + 2, j, off);
    for (int t = 0; t < j; ++t) b.fact(id3("R2", j + off, j + 1 + off, j + off), pos + t);
    b.hl(pos + j);
}

void staircase_up(Builder& b, size_t pos, int k, int off)
{
    // (a_1 ... a_k)(a_1 ... a_{k-1})  ->  b_1 ... b_{k-1} a_k^k
    if (k == 2) {
        b.fact(id3("R2", 1 + off, 2 + off, 1 + off), pos);
        b.hr(pos);
        return;
    }
    const int j = k - 1;
    b.move_right(pos + j, pos + 2 * j - 1);
    staircase_up(b, pos, j, off);
    // a_j^j sits at [pos+j-1, pos+2j-1), then a_{j+1} a_j
    for (int t = 0; t < j; ++t) b.fact(id3("R1", j + 1 + off, j + off, j + off), pos + 2 * j - 2 - t);
    b.hr(pos + j - 1);
}


namespace {

std::string power(const Builder& b, int i, int e)
{
    return e == 1 ? b.c(i) : b.c(i) + "^" + std::to_string(e);
}

// D (a_{2l} ... a_1)(a_{2l+1} ... a_1) E  ->  D' (a_{2l} ... a_1)(b_{2l} ... b_2) a_{2l+1}^{l+1} E'
void shift_forward(Builder& b, size_t pos, int l)
{
    if (l == 1) {
        b.conj(b.c(1));
        b.move_left(pos + 4, pos);
        b.fact(id3("R3", 1, 2, 1), pos);
        b.hr(pos + 2);
        return;
    }
    const int j = l - 1;
    const size_t s2 = pos + 2 * j + 2;
    b.move_left(s2, pos + 2);
    b.move_left(s2 + 1, pos + 3);
    shift_forward(b, pos + 4, j);
    b.conj(power(b, 2 * j + 1, j + 1));
    for (int t = 0; t <= j; ++t) b.move_left(pos + 4 + 3 * j + t, pos + t);
    const size_t q = pos + j + 1;
    b.move_right(q + 3, q + 3 + 2 * j);
    b.move_right(q + 2, q + 2 + 2 * j);
    for (int t = 0; t <= j; ++t) b.fact(id3("R3", j + 1, 2 * j + 2, 2 * j + 1), pos + j - t);
    b.hr(pos + 2 * j + 2);
    for (int t = 0; t <= j + 1; ++t) {
        const size_t from = pos + 3 * j + 4 - t;
        b.move_right(from, from + j);
    }
}

// D (a_1 ... a_{2l+1})(a_1 ... a_{2l}) E  ->  D' a_{2l+1}^{l+1} (bbar_2 ... bbar_{2l})(a_1 ... a_{2l}) E'
void shift_backward(Builder& b, size_t pos, int l)
{
    if (l == 1) {
        b.conj(b.c(1) + "^-1");
        b.move_right(pos, pos + 4);
        b.fact(id3("R4", 1, 2, 1), pos);
        b.hl(pos + 1);
        return;
    }
    const int j = l - 1;
    b.move_right(pos + 2 * j + 2, pos + 4 * j + 2);
    b.move_right(pos + 2 * j + 1, pos + 4 * j + 1);
    shift_backward(b, pos, j);
    b.conj(power(b, 2 * j + 1, -(j + 1)));
    for (int t = 0; t <= j; ++t) b.move_right(pos + j - t, pos + 4 * j + 4 - t);
    const size_t r = pos + j;
    b.move_left(pos + 3 * j, r);
    b.move_left(pos + 3 * j + 1, r + 1);
    for (int t = 0; t <= j; ++t) b.fact(id3("R4", j + 1, 2 * j + 2, 2 * j + 1), r + t);
    b.hl(r + j + 1);
    for (int t = 0; t <= j + 1; ++t) b.move_left(pos + j + t, pos + t);
}

}  // namespace

std::string phi_text(const Builder& b, int l, bool inv)
{
    std::string s;
    if (!inv) {
        for (int i = l; i >= 0; --i) s += (s.empty() ? "" : " ") + power(b, 2 * i + 1, i + 1);
    } else {
        for (int i = 0; i <= l; ++i) s += (s.empty() ? "" : " ") + power(b, 2 * i + 1, -(i + 1));
    }
    return s;
}

void phi_sort(Builder& b, size_t pos, int l)
{
    if (l == 0) {
        b.conj(b.c(1));
        return;
    }
    shift_forward(b, pos, l);
    b.conj(power(b, 2 * l + 1, l + 1));
    for (int t = 0; t <= l; ++t) b.move_left(pos + 3 * l + t, pos + t);
}

void phi_sort_inverse(Builder& b, size_t pos, int l)
{
    if (l == 0) {
        b.conj(b.c(1) + "^-1");
        return;
    }
    shift_backward(b, pos, l);
    b.conj(power(b, 2 * l + 1, -(l + 1)));
    for (int t = 0; t <= l; ++t) b.move_right(pos + l - t, pos + 4 * l - t);
}

void odd_even_split(Builder& b, size_t pos)
{
    const int g = b.cur.genus();
    for (int t = 1; t <= g; ++t) {
        // [e2 .. e_{2t-2}][c1 .. c_{2t-3}] c_{2t-1} c_{2t}
        const size_t at = pos + 2 * (t - 1);
        b.hr(at);
        b.move_left(at, pos + t - 1);
    }
}

void descending_split(Builder& b, size_t pos)
{
    const int g = b.cur.genus();
    for (int t = 0; t < g; ++t) {
        // [c_{2g-1} .. c_{2g-2t+1}][ebar_{2g} .. ebar_{2g-2t+2}] c_{2g-2t} c_{2g-2t-1}
        const size_t at = pos + 2 * t;
        b.hl(at);
        b.move_left(at, pos + t);
    }
}

void square_split(Builder& b, size_t pos, int n, int off)
{
    const int parity = n % 2;
    int o = 0, d = 0;
    for (int half = 0; half < 2; ++half) {
        const size_t base = pos + static_cast<size_t>(half * n);
        o = d = 0;
        for (int i = 1; i <= n; ++i) {
            if (i % 2 != parity) continue;
            if (i > 1) {
                const size_t at = base + static_cast<size_t>(o + d);
                b.hl(at);
                b.move_left(at, base + static_cast<size_t>(o));
                ++d;
            }
            ++o;
        }
    }
    // second odd block across the first bar block
    for (int t = 0; t < o; ++t) b.move_left(pos + static_cast<size_t>(n + t), pos + static_cast<size_t>(o + t));
    std::vector<std::string> sq;
    for (int i = 1; i <= n; ++i)
        if (i % 2 == parity) {
            sq.push_back(b.c(i + off));
            sq.push_back(b.c(i + off));
        }
    b.arrange(pos, sq);
}

namespace {

void bring_to_front(Builder& b, size_t p, const std::string& s, size_t end)
{
    if (p >= end) throw std::logic_error("braid_transform: words are not equal as positive braids");
    const std::string t = b.cur.letters[p].base;
    if (t == s) return;
    bring_to_front(b, p + 1, s, end);
    if (b.cur.cat->disjoint(s, t)) {
        b.comm(p);
    } else {
        bring_to_front(b, p + 2, t, end);
        b.braid(p);
    }
}

std::vector<std::string> repeat(const std::string& n, int k)
{
    return std::vector<std::string>(static_cast<size_t>(std::max(k, 0)), n);
}

void append(std::vector<std::string>& a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
}

}  // namespace

void braid_transform(Builder& b, size_t pos, const std::vector<std::string>& target)
{
    const size_t end = pos + target.size();
    for (size_t k = 0; k < target.size(); ++k) bring_to_front(b, pos + k, target[k], end);
}

void hyperelliptic_opening(Builder& b)
{
    const int g = b.cur.genus();
    const size_t n = static_cast<size_t>(2 * g);
    if (!b.cur.cat->lifted()) {
        b.note("rotate to (c2g+1 c2g ... c1 c1 ... c2g c2g+1)^2");
        b.cyc(n + 1);
    }
    b.note("move the second top curve in front of the palindrome");
    b.fact("R6", 1);
    b.note("push the descending half across the full palindrome");
    for (size_t t = 0; t < n; ++t) b.fact("R5:" + std::to_string(n - t), 1 + t);
}

void one_daisy(Builder& b)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    const bool lifted = b.cur.cat->lifted();
    hyperelliptic_opening(b);
    b.note("descending staircase");
    staircase_down(b, 1, 2 * g + 1);
    b.note("ascending shift");
    phi_sort_inverse(b, 4 * G + 2, g);
    b.note("rotate the top power to the end");
    b.cyc(2 * G + 2);
    if (lifted) b.move_right(6 * G + 1, 8 * G + 3);
    b.note("split the ascending run into e-curves and odd curves");
    odd_even_split(b, 3 * G);
    b.sub(lifted ? "LD" : "D", 4 * G);
    if (lifted) b.sub("LZ", 5 * G);
}

void two_daisy(Builder& b, TwoDaisyMode mode)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    const bool lifted = b.cur.cat->lifted();
    const std::string top = b.c(2 * g + 1);
    hyperelliptic_opening(b);
    b.note("descending shift");
    phi_sort(b, 1, g);
    b.note("split the descending run");
    descending_split(b, G + 2);
    b.conj("phi^-1");
    b.note("ascending shift");
    phi_sort_inverse(b, 4 * G + 2, g);
    b.note("rotate the odd prefix to the end");
    b.cyc(2 * G + 2);
    if (lifted) b.move_right(6 * G + 1, 8 * G + 3);
    odd_even_split(b, 3 * G);

    const int tops = lifted ? 2 * g + 3 : 2 * g + 4;
    std::vector<std::string> want;
    if (mode == TwoDaisyMode::two_daisies) {
        for (int rep = 0; rep < 2; ++rep) {
            for (int j = 1; j <= g; ++j) want.push_back(b.c(2 * j - 1));
            append(want, repeat(top, g - 2));
        }
        append(want, repeat(top, tops - 2 * (g - 2)));
    } else {
        for (int j = 1; j <= g; ++j) append(want, repeat(b.c(2 * j - 1), 2));
        append(want, repeat(top, tops));
    }
    b.note("collect the commuting odd curves");
    b.arrange(4 * G, want);
    if (mode == TwoDaisyMode::two_daisies) {
        b.sub(lifted ? "LD" : "D", 4 * G);
        b.sub(lifted ? "LD" : "D", 5 * G);
        if (lifted) b.sub("LZ", 6 * G);
    } else if (mode == TwoDaisyMode::daisy_2g2) {
        b.sub("D2", 4 * G + 2);
    }
}

void odd_chain_daisies(Builder& b, int k)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    const size_t block = 4 * G + 2;
    for (size_t p = 0; p <= G; ++p) {
        const size_t s = p * block;
        if (p > 0) b.conj("phi");
        b.note("pair " + std::to_string(p + 1) + ": ascending shift");
        phi_sort_inverse(b, s, g);
        odd_even_split(b, s + G);
    }
    const size_t shrink = G - 2;
    for (int j = 0; j < k; ++j) {
        const size_t J = static_cast<size_t>(j);
        b.sub(j + 1 < k ? "D" : "Dp", J * block - J * shrink + 2 * G);
    }
}

void odd_chain_big_daisy(Builder& b)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    const size_t B = 2 * G + 1;
    const size_t blocks = (G + 1) / 2;
    const std::string top = b.c(2 * g + 1);
    for (size_t q = 0; q < blocks; ++q) {
        const size_t s = q * 4 * B;
        b.note("4-block " + std::to_string(q + 1) + ": ascending staircase");
        staircase_up(b, s, 2 * g + 1);
        b.note("square split");
        square_split(b, s + 2 * B, 2 * g + 1, 0);
        std::vector<std::string> want;
        for (int j = 1; j <= g; ++j) append(want, repeat(b.c(2 * j - 1), 2));
        append(want, repeat(top, 2 * g + 4));
        b.arrange(s + 2 * G, want);
    }
    const size_t shrink = 2 * G - 3;
    for (size_t q = 0; q < blocks; ++q) b.sub("D2", q * 4 * B - q * shrink + 2 * G + 2);
}

void even_chain_big_daisy(Builder& b, int k)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    const size_t B = 2 * G;
    const std::string top = b.c(2 * g + 1);
    std::string h;
    for (int i = 1; i <= 2 * g + 1; ++i) h += (i > 1 ? " " : "") + b.c(i);
    b.note("conjugate by the chain product and rename each letter one step up the chain");
    b.conj(h);
    for (size_t p = 0; p < b.cur.size(); ++p) {
        const std::string& base = b.cur.letters[p].base;
        b.fact("SH:" + base.substr(1), p);
    }
    for (size_t q = 0; q < G; ++q) {
        const size_t s = q * 4 * B;
        b.note("4-block " + std::to_string(q + 1) + ": ascending staircase");
        staircase_up(b, s, 2 * g, 1);
        b.note("square split");
        square_split(b, s + 2 * B, 2 * g, 1);
        std::vector<std::string> want;
        for (int j = 2; j <= g; ++j) append(want, repeat(b.c(2 * j - 1), 2));
        append(want, repeat(top, 2 * g + 3));
        b.arrange(s + 2 * G - 1, want);
    }
    const size_t shrink = 2 * G - 3;
    for (size_t q = 0; q < static_cast<size_t>(k); ++q) b.sub("D2", q * 4 * B - q * shrink + 2 * G - 1);
}

void lift_chain(Builder& b)
{
    const int g = b.cur.genus();
    const size_t G = static_cast<size_t>(g);
    std::vector<std::string> half;
    for (int r = 0; r < 2 * g; ++r)
        for (int i = 1; i < 2 * g; ++i) half.push_back(b.c(i));
    for (int i = 2 * g; i >= 1; --i) half.push_back(b.c(i));
    for (int i = 1; i <= 2 * g; ++i) half.push_back(b.c(i));
    const size_t n1 = half.size();
    b.note("positive braid rewriting of each half");
    braid_transform(b, 0, half);
    braid_transform(b, n1, half);
    const std::string chain = "chain" + std::to_string(2 * g - 1);
    b.sub(chain, 0);
    b.sub(chain, 4 * G + 2);
    b.comm(0);
    b.cyc(1);
    b.comm(4 * G + 1);
}

}  // namespace twist::build
