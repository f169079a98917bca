#pragma once

#include <string>
#include <vector>

// Identity suites behind `llt verify` and the acceptance harness. Every
// suite pits an expansion formula against an independent route (brute
// enumeration, closed form, exhaustive search, or character arithmetic)
// and records the first counterexample it meets.

namespace llt {

struct VerifyOptions {
    int max_cells = 3;   // |mu| bound for tuple-based suites
    int max_copies = 4;  // n bound for tuple-based suites
    int max_len = 7;     // word length bound (foata)
    int max_n = 6;       // size bound (kw, h-family)
    int k_range = 2;     // h-family k entries scanned in [-k_range, k_range]
};

struct VerifyResult {
    std::string suite;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // first counterexamples, one line each
    bool passed() const { return failures == 0; }
};

VerifyResult verify_theorem_a(const VerifyOptions& opt);
VerifyResult verify_theorem_b(const VerifyOptions& opt);
VerifyResult verify_foata(const VerifyOptions& opt);
VerifyResult verify_h_family(const VerifyOptions& opt);
VerifyResult verify_dmu(const VerifyOptions& opt);
VerifyResult verify_positivity(const VerifyOptions& opt);
VerifyResult verify_components(const VerifyOptions& opt);
VerifyResult verify_rs_split(const VerifyOptions& opt);
VerifyResult verify_kw(const VerifyOptions& opt);

// Runs one named suite, or all of them for "all". Throws
// std::invalid_argument for an unknown name.
std::vector<VerifyResult> run_verify(const std::string& suite, const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();

}  // namespace llt
