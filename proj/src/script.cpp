#include "twist/script.hpp"

#include "twist/wordfile.hpp"

#include <sstream>

namespace twist {

namespace {

const char* kind_name(StepKind k)
{
    switch (k) {
    case StepKind::HR: return "HR";
    case StepKind::HL: return "HL";
    case StepKind::CYC: return "CYC";
    case StepKind::CONJ: return "CONJ";
    case StepKind::COMM: return "COMM";
    case StepKind::BRAID: return "BRAID";
    case StepKind::FACT: return "FACT";
    case StepKind::SUB: return "SUB";
    case StepKind::EXPAND: return "EXPAND";
    }
    return "EXPAND";
}

}  // namespace

std::string Step::str() const
{
    std::string s = kind_name(kind);
    switch (kind) {
    case StepKind::CONJ: s += " " + arg; break;
    case StepKind::FACT:
    case StepKind::SUB: s += " " + arg + " " + std::to_string(index); break;
    case StepKind::EXPAND: break;
    default: s += " " + std::to_string(index);
    }
    return s;
}

void Script::add(StepKind k, size_t index, std::string arg, std::string comment)
{
    Step st{k, index, std::move(arg), std::move(comment)};
    if (!pending_.empty()) {
        st.comment = st.comment.empty() ? pending_ : pending_ + "; " + st.comment;
        pending_.clear();
    }
    steps.push_back(std::move(st));
}

void Script::note(const std::string& text)
{
    pending_ = pending_.empty() ? text : pending_ + "; " + text;
}

std::string Script::str() const
{
    std::ostringstream os;
    if (!header.empty()) {
        std::istringstream in(header);
        std::string line;
        while (std::getline(in, line)) os << "# " << line << "\n";
    }
    for (const auto& st : steps) {
        if (!st.comment.empty()) os << "# " << st.comment << "\n";
        os << st.str() << "\n";
    }
    return os.str();
}

Script parse_script(const std::string& text)
{
    Script s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string comment;
    auto bad = [&](const std::string& why) {
        throw ParseError(lineno, 1, why);
    };
    auto number = [&](std::istringstream& ls) {
        std::string tok;
        if (!(ls >> tok)) bad("missing index");
        size_t used = 0;
        long v = -1;
        try {
            v = std::stol(tok, &used);
        } catch (...) {
            used = 0;
        }
        if (used != tok.size() || v < 0) bad("bad index '" + tok + "'");
        return static_cast<size_t>(v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::string c = line.substr(first + 1);
            if (!c.empty() && c[0] == ' ') c.erase(0, 1);
            comment = comment.empty() ? c : comment + "; " + c;
            continue;
        }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        Step st;
        if (kw == "HR" || kw == "HL" || kw == "CYC" || kw == "COMM" || kw == "BRAID") {
            st.kind = kw == "HR" ? StepKind::HR
                    : kw == "HL" ? StepKind::HL
                    : kw == "CYC" ? StepKind::CYC
                    : kw == "COMM" ? StepKind::COMM
                                   : StepKind::BRAID;
            st.index = number(ls);
            if (st.kind != StepKind::CYC && st.index == 0) bad("positions are 1-based");
        } else if (kw == "CONJ") {
            st.kind = StepKind::CONJ;
            std::getline(ls, st.arg);
            auto b = st.arg.find_first_not_of(" \t");
            st.arg = b == std::string::npos ? "" : st.arg.substr(b);
            if (st.arg.empty()) bad("CONJ needs a word");
        } else if (kw == "FACT" || kw == "SUB") {
            st.kind = kw == "FACT" ? StepKind::FACT : StepKind::SUB;
            if (!(ls >> st.arg)) bad(kw + " needs an id");
            st.index = number(ls);
            if (st.index == 0) bad("positions are 1-based");
        } else if (kw == "EXPAND") {
            st.kind = StepKind::EXPAND;
        } else {
            bad("unknown step '" + kw + "'");
        }
        std::string extra;
        if (st.kind != StepKind::CONJ && (ls >> extra)) bad("trailing text '" + extra + "'");
        st.comment = comment;
        comment.clear();
        s.steps.push_back(st);
    }
    return s;
}

Factorization apply_step(const Factorization& w, const Step& st, std::string* checkpoint)
{
    const Catalog& cat = *w.cat;
    auto cp = [&](const char* s) {
        if (checkpoint) *checkpoint = s;
    };
    const size_t i = st.index == 0 ? 0 : st.index - 1;
    switch (st.kind) {
    case StepKind::HR: cp("window product"); return hurwitz_right(w, i);
    case StepKind::HL: cp("window product"); return hurwitz_left(w, i);
    case StepKind::COMM: cp("window product"); return commute_adjacent(w, i);
    case StepKind::BRAID: cp("window product"); return braid_rewrite(w, i);
    case StepKind::CYC: cp("cyclic conjugate"); return cyclic_permute(w, st.index);
    case StepKind::CONJ: cp("letter classes conjugated"); return global_conjugate(w, parse_genword(cat, st.arg));
    case StepKind::EXPAND: cp("letters renormalized"); return expand_aliases(w);
    case StepKind::FACT: {
        auto f = cat.fact(st.arg);
        if (!f) throw StepError("FACT " + st.arg + " is not a registered fact");
        cp("window product");
        return apply_action_fact(w, *f, i);
    }
    case StepKind::SUB: {
        auto r = cat.relator(st.arg);
        if (!r) throw StepError("SUB: unknown relator " + st.arg);
        cp("window product");
        return substitute(w, *r, i);
    }
    }
    throw StepError("unknown step");
}

Trace replay_script(const Script& s, const Factorization& initial, const ReplayOptions& opt)
{
    Trace t;
    Factorization cur = initial;
    // current image = conj . initial image . conj^-1
    SpMatrix conj(2 * initial.genus());
    for (size_t k = 0; k < s.steps.size(); ++k) {
        const Step& st = s.steps[k];
        TraceEntry e;
        e.step = k + 1;
        e.text = st.str();
        try {
            const size_t before = cur.size();
            if (opt.verify_full_image && st.kind == StepKind::CYC && !cur.letters.empty())
                conj = window_image(cur, 0, st.index % cur.size()).inverse() * conj;
            if (opt.verify_full_image && st.kind == StepKind::CONJ)
                conj = cur.cat->word_matrix(parse_genword(*cur.cat, st.arg)) * conj;
            cur = apply_step(cur, st, &e.checkpoint);
            if (st.kind == StepKind::SUB) {
                auto r = cur.cat->relator(st.arg);
                t.substitutions.push_back({r->id, r->p, static_cast<int>(cur.size()) - static_cast<int>(before)});
            }
        } catch (const std::exception& ex) {
            t.ok = false;
            t.failed_step = k + 1;
            t.error = "step " + std::to_string(k + 1) + " (" + st.str() + "): " + ex.what();
            t.result = cur;
            return t;
        }
        e.length = cur.size();
        if (opt.keep_snapshots) e.snapshot = format_body(cur);
        t.entries.push_back(std::move(e));
    }
    if (opt.verify_full_image) {
        // Moves preserve the product up to the conjugations performed by CYC/CONJ, so
        // relators must stay relators.
        if (word_image(cur) != conj * word_image(initial) * conj.inverse()) {
            t.ok = false;
            t.failed_step = s.steps.size();
            t.error = is_relator(initial) ? "final word is not a relator although the initial word was"
                                          : "final image is not the expected conjugate of the initial image";
        }
    }
    t.result = cur;
    return t;
}

}  // namespace twist
