#pragma once

#include "twist/word.hpp"

#include <string>
#include <vector>

namespace twist {

enum class StepKind { HR, HL, CYC, CONJ, COMM, BRAID, FACT, SUB, EXPAND };

struct Step {
    StepKind kind = StepKind::EXPAND;
    size_t index = 0;   // 1-based position (HR, HL, COMM, BRAID, FACT, SUB) or rotation (CYC)
    std::string arg;    // conjugator text (CONJ), fact id (FACT), relator id (SUB)
    std::string comment;

    std::string str() const;
};

struct Script {
    std::string header;        // free text kept as leading comments
    std::vector<Step> steps;

    void add(StepKind k, size_t index, std::string arg = {}, std::string comment = {});
    void note(const std::string& text);  // comment attached to the next step
    std::string str() const;
    size_t size() const { return steps.size(); }

private:
    std::string pending_;
};

Script parse_script(const std::string& text);

struct TraceEntry {
    size_t step = 0;   // 1-based
    std::string text;
    size_t length = 0;
    std::string checkpoint;  // which Sp condition was verified
    std::string snapshot;    // word snapshot (only when requested)
};

struct SubstitutionEvent {
    std::string relator;
    int p = 0;
    int delta = 0;
};

struct Trace {
    bool ok = true;
    size_t failed_step = 0;  // 1-based, 0 when ok
    std::string error;
    std::vector<TraceEntry> entries;
    std::vector<SubstitutionEvent> substitutions;
    Factorization result;
};

struct ReplayOptions {
    bool keep_snapshots = false;
    bool verify_full_image = true;  // compare full Sp images of the initial and final words
};

Trace replay_script(const Script& s, const Factorization& initial, const ReplayOptions& opt = {});

// Applies one step; throws StepError on a failed precondition.
Factorization apply_step(const Factorization& w, const Step& st, std::string* checkpoint = nullptr);

}  // namespace twist
