// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "npoly/rational.hpp"
#include "npoly/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string label;
    std::vector<npoly::verify::CheckResult> results;
    double seconds = 0;

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

constexpr long long kBudget = 10000000;
constexpr std::uint64_t kSeed = 20240901;

}  // namespace

int main() {
    using namespace npoly;
    using namespace npoly::verify;
    std::vector<Criterion> table;

    auto run = [&table](int number, const std::string& label, auto&& fn) {
        Criterion c;
        c.number = number;
        c.label = label;
        auto start = std::chrono::steady_clock::now();
        try {
            c.results = fn();
        } catch (const std::exception& e) {
            c.results = {{label, false, std::string("exception: ") + e.what()}};
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        table.push_back(c);
        const Criterion& back = table.back();
        std::printf("[%s] %2d. %-28s (%6.2f s)", back.pass() ? "PASS" : "FAIL", back.number,
                    back.label.c_str(), back.seconds);
        for (const auto& r : back.results)
            if (!r.pass) std::printf("  <- %s: %s", r.name.c_str(), r.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
    };

    using Checks = std::vector<CheckResult>;

    run(1, "hodge-product-identity", [] {
        return Checks{hodge_product_identity(kSeed, 50, 5)};
    });
    run(2, "hp-1d-closed-form", [] { return Checks{hp_closed_form(8)}; });
    run(3, "poincare-sanity", [] { return Checks{poincare_sanity(kSeed, 50, 5, 8)}; });
    run(4, "decH-identity", [] { return Checks{dec_h_identity(kSeed, 20, 3)}; });
    run(5, "lambda-equivalence", [] { return Checks{lambda_equivalence(12)}; });
    run(6, "hs-consistency", [] {
        return Checks{hs_consistency(5, 6), hs_prime_independence(5, 6, 3)};
    });
    run(7, "gnp-matching", [] { return Checks{gnp_matching(kSeed, 200)}; });
    run(8, "gnp-coincidence", [] { return Checks{gnp_coincidence(5, 211)}; });
    run(9, "gnp-convergence-(3,2)", [] {
        return Checks{gnp_convergence(3, 2, 500, 120, Rat(1, 10))};
    });
    run(10, "oracle-lower-bound", [] {
        return Checks{oracle_lower_bound(kSeed, {3, 5, 7}, 30, 5, kBudget),
                      oracle_attains_hodge(kSeed + 1, 3, 2, 2, 20, kBudget),
                      oracle_attains_hodge(kSeed + 2, 5, 4, 1, 20, kBudget),
                      oracle_attains_hodge(kSeed + 3, 7, 3, 2, 20, kBudget)};
    });
    run(11, "kunneth-identity", [] {
        return Checks{kunneth_identity(kSeed, {3, 5}, 5, kBudget)};
    });
    run(12, "poisson-identity", [] {
        return Checks{poisson_identity(kSeed, {5, 13}, 5, kBudget)};
    });
    run(13, "l-degree-window", [] { return Checks{l_degree_checks(kSeed, 6, kBudget)}; });

    int failures = 0;
    for (const auto& c : table)
        if (!c.pass()) ++failures;
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", table.size());
    return 0;
}
