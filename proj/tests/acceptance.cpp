// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "normord/cli/commands.hpp"
#include "normord/cli/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace normord;
using namespace normord::cli;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budgetSeconds;
    std::function<std::vector<CheckResult>()> run;
    std::function<std::string(const std::vector<CheckResult>&)> extra;  // empty string means fine
};

int runCriterion(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string problem;
    try {
        results = c.run();
        for (const auto& r : results) {
            if (!r.ok()) {
                problem = r.name + ": " + (r.failureDetails.empty() ? "failed" : r.failureDetails.front());
                break;
            }
        }
        if (problem.empty() && c.extra) problem = c.extra(results);
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.budgetSeconds) {
        problem = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budgetSeconds) + " s";
    }
    std::size_t cases = 0;
    for (const auto& r : results) cases += r.cases;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (problem.empty() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << cases << " cases, "
         << secs << " s)";
    if (!problem.empty()) line << " -- " << problem;
    std::cout << line.str() << std::endl;
    return problem.empty() ? 0 : 1;
}

CheckResult cliExample() {
    CheckResult r;
    r.name = "order command output";
    std::ostringstream out, err;
    const int code = runCli({"order", "--word", "(YX)^3", "--s", "1"}, out, err);
    r.expect(code == 0, "exit code " + std::to_string(code));
    r.expect(out.str() ==
                 "q^3*Y^3X^3 + (q*alpha1 + 2*q^2*alpha1)*Y^3X^2 + (alpha1^2 + q*alpha1^2)*Y^3X + (2*q*alpha0 + q^2*alpha0)*Y^2X^2 + "
                 "(2*alpha0*alpha1 + q*alpha0*alpha1)*Y^2X + alpha0^2*YX\n",
             "printed " + out.str());
    return r;
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240607;
    std::vector<Criterion> criteria{
        {1, "(YX)^3 expansion for s=1", 1.0, [] { return std::vector<CheckResult>{checkYX3Expansion(), cliExample()}; }, {}},
        {2, "placements = rewriting on all length-8 words (s=0..3) and 200 random words", 300.0,
         [=] {
             return std::vector<CheckResult>{checkOracleAllWords(8, 8, 3), checkOracleRandomWords(200, 12, 3, seed)};
         },
         {}},
        {3, "static, sequential and recurrence engines agree", 300.0,
         [] { return std::vector<CheckResult>{checkStaticEngines(12), checkSequentialDp(8, 3)}; }, {}},
        {4, "recurrence suites and column-peeling recurrence", 600.0,
         [=] {
             MasterRecurrenceOptions mo;
             mo.boards = 50;
             mo.seed = seed;
             return std::vector<CheckResult>{checkFamilyRecurrences(RecurrenceBounds{}), cli::checkMasterRecurrence(mo)};
         },
         {}},
        {5, "classical Stirling and Lah anchors at q=1", 600.0, [] { return std::vector<CheckResult>{checkClassicalAnchors(7, 6, 7)}; }, {}},
        {6, "rectangle closed forms and the (1,1) check", 600.0,
         [] { return std::vector<CheckResult>{checkRectangles(5, 5), checkUnitRectangleRelation()}; }, {}},
        {7, "binomial theorem and quantum plane", 600.0, [] { return std::vector<CheckResult>{checkBinomial(7, 2), checkQuantumPlane(10)}; }, {}},
        {8, "X^mY^n via alternating sums, Eulerian comparison reported", 60.0,
         [] { return std::vector<CheckResult>{checkBasicWord(6, 6), eulerianReport(6, 6)}; },
         [](const std::vector<CheckResult>& rs) -> std::string {
             for (const auto& line : rs.back().info) {
                 if (line.rfind("(m,n,r,t)=(1,1,1,0):", 0) == 0) return "";
             }
             return "Eulerian report does not list (1,1,1,0)";
         }},
        {9, "13 mixed placements on J_3", 600.0, [] { return std::vector<CheckResult>{checkJ3Count()}; }, {}},
    };
    int failed = 0;
    for (const auto& c : criteria) failed += runCriterion(c);
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
