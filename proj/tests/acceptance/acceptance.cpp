// One line per acceptance criterion. Criteria listed with --known-failures
// may fail without failing the run; an unexpected pass of one is an error so
// the list cannot go stale.
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "checks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    dgram::checks::Options opt;
    std::string known_text;
    bool verbose = true;
    app.add_option("--k", opt.max_k, "sweep bound for the z2/signed algebras");
    app.add_option("--fixtures", opt.fixture_dir, "fixture directory");
    app.add_option("--known-failures", known_text, "comma-separated criteria expected to fail");
    app.add_flag("!--quiet", verbose, "omit diff notes");
    CLI11_PARSE(app, argc, argv);

    std::set<int> known;
    std::stringstream ss(known_text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) known.insert(std::stoi(item));

    int unexpected = 0;
    for (const auto& r : dgram::checks::run_checks(opt)) {
        bool is_known = known.count(r.id) > 0;
        std::cout << dgram::checks::format_line(r, is_known) << '\n';
        if (verbose)
            for (const auto& n : r.notes) std::cout << "    " << n << '\n';
        if (!r.pass && !is_known) ++unexpected;
        if (r.pass && is_known) {
            std::cout << "    listed as a known failure but passed\n";
            ++unexpected;
        }
    }
    std::cout << (unexpected ? "acceptance: FAILED" : "acceptance: ok") << '\n';
    return unexpected ? 1 : 0;
}
