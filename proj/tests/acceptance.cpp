// One line per acceptance criterion; exit status is nonzero if any fails.
#include "atfkit/suites.hpp"

#include <chrono>
#include <iostream>

int main() {
    struct Criterion {
        int number;
        const char* title;
        const char* suite;
    };
    const Criterion criteria[] = {
        {1, "classification of type I equations", "classification"},
        {2, "Markov tree enumeration and descent", "markov-trees"},
        {3, "mutation correspondence with Markov triples", "mutation-correspondence"},
        {4, "anticanonical degree of catalog diagrams", "degree-invariance"},
        {5, "type I identity on triangular diagrams", "type-one-identity"},
        {6, "predicted hull edge lengths", "hull"},
        {7, "blown-up plane family", "cp2x1-family"},
        {8, "area and monotonicity under operations", "area-conservation"},
        {9, "reproducibility against goldens", "reproducibility"},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        atf::SuiteReport r;
        std::string error;
        try {
            r = atf::run_suite({c.suite});
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = error.empty() && r.passed();
        if (!ok) ++failed;
        std::cout << "criterion " << c.number << " [" << c.suite << "] " << (ok ? "PASS" : "FAIL") << ": " << c.title
                  << " (" << r.checks << " checks, " << r.failures << " failures, " << secs << " s)";
        if (!error.empty()) std::cout << " error: " << error;
        else if (!r.first_counterexample.empty()) std::cout << " first counterexample: " << r.first_counterexample;
        std::cout << "\n";
    }
    std::cout << (9 - failed) << "/9 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
