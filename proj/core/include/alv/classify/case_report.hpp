#ifndef ALV_CLASSIFY_CASE_REPORT_HPP
#define ALV_CLASSIFY_CASE_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace alv::classify {

enum class Verdict { confirmed, refuted, inapplicable };

std::string to_string(Verdict v);

struct TranscriptEntry {
    std::string check;
    std::string detail;
    bool passed = true;
};

// Machine-readable verdict for one statement of the source: named derived
// values plus the ordered list of checks that were run. The verdict is
// `confirmed` only when every transcript entry passed.
struct CaseReport {
    std::string id;
    std::string source_ref;
    std::vector<std::pair<std::string, nlohmann::json>> values;
    std::vector<TranscriptEntry> transcript;
    Verdict verdict = Verdict::inapplicable;

    void value(const std::string& key, nlohmann::json v) { values.emplace_back(key, std::move(v)); }
    void step(const std::string& check, const std::string& detail, bool passed) {
        transcript.push_back({check, detail, passed});
    }
    bool all_passed() const {
        for (const auto& e : transcript)
            if (!e.passed) return false;
        return true;
    }
    void conclude() { verdict = all_passed() ? Verdict::confirmed : Verdict::refuted; }
};

// External inputs: statements imported with citation rather than verified
// here. Every transcript that leans on one names it explicitly.
struct Axiom {
    std::string name;
    std::string statement;
    std::string citation;
};

const Axiom& axiom_order3_fixed_locus();   // >= 6 fixed curves => exactly (6, 9)
const Axiom& axiom_order2_fixed_locus();   // >= 10 fixed curves => exactly 10
const Axiom& axiom_even_eight();           // disjoint 2-divisible sums have 0/8/16 curves
const Axiom& axiom_a19_d19_uniqueness();   // the two 19-curve types are unique, A19 has index 2

void cite_axiom(CaseReport& r, const Axiom& a);

}  // namespace alv::classify

#endif
