#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace dgram::checks {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;             // one line
    std::vector<std::string> notes;  // diff reports, reported discrepancies
    double seconds = 0;
    double budget_seconds = 0;       // 0: no runtime limit
};

struct Options {
    std::size_t max_k = 3;  // z2/signed sweeps; the partition algebra goes one higher
    std::string fixture_dir;
    std::uint64_t seed = 20240611;
};

std::string default_fixture_dir();

CheckResult check_reference_structure(const Options& opt);
CheckResult check_reference_gram(const Options& opt);
CheckResult check_reference_reduction(const Options& opt);
CheckResult check_stirling(const Options& opt);
CheckResult check_oracle_equivalence(const Options& opt);
CheckResult check_structural(const Options& opt);
CheckResult check_poset_duality(const Options& opt);
CheckResult check_phi_identities(const Options& opt);
CheckResult check_semisimplicity(const Options& opt);
CheckResult check_zero_through_blocks(const Options& opt);

// Runs the checks whose ids are listed (all ten when empty).
std::vector<CheckResult> run_checks(const Options& opt, const std::set<int>& only = {});

// "PASS 3 reduction ... (0.41 s)"; known failures are tagged.
std::string format_line(const CheckResult& r, bool known_failure);

}  // namespace dgram::checks
