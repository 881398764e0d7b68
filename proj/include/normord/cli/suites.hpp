#pragma once

#include "normord/board.hpp"
#include "normord/recurrences.hpp"
#include "normord/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace normord::cli {

/// Outcome of one verification check.
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> failureDetails;  // the first few only
    std::vector<std::string> info;            // informational lines, never failures
    double seconds = 0;

    bool ok() const { return failures == 0; }
    void pass() { ++cases; }
    void fail(const std::string& detail);
    /// Counts a case and records a failure when !ok.
    void expect(bool ok, const std::string& detail);
};

// Case generators.
std::vector<Word> allWords(std::size_t length);
/// Ferrers boards with 1..maxCells cells and no zero-height columns, each
/// also with one zero-height column added on the right, plus the empty board.
std::vector<Board> ferrersBoardsUpTo(int maxCells);
/// count words, lengths uniform in 1..maxLen, letters uniform; deterministic in seed.
std::vector<Word> randomWords(int count, int maxLen, std::uint64_t seed);

// Checks.
CheckResult checkYX3Expansion();
CheckResult checkOracleAllWords(int minLen, int maxLen, int sMax);
CheckResult checkOracleRandomWords(int count, int maxLen, int sMax, std::uint64_t seed);
CheckResult checkOreDoubleSum(int maxLen);
CheckResult checkConfluence(int count, int maxLen, int sMax, std::uint64_t seed);
CheckResult checkLinearity(int count, std::uint64_t seed);
CheckResult checkSpecializationConsistency(int maxLen);
CheckResult checkExponentBookkeeping(int maxLen, int sMax);

CheckResult checkStaticEngines(int maxCells);
CheckResult checkSequentialDp(int maxLen, int sMax);
CheckResult checkReductions(int maxCells);
CheckResult checkProductFormula(int maxN);
CheckResult checkJ3Count();

struct RecurrenceBounds {
    int oreStirlingN = 7;
    int oreLahN = 6;
    int polyS = 3;
    int polyN = 6;
    int scherkR = 3;
    int scherkN = 5;
    int qLahN = 6;
};
CheckResult checkFamilyRecurrences(const RecurrenceBounds& b);
CheckResult checkMasterRecurrence(const MasterRecurrenceOptions& opts);

CheckResult checkClassicalAnchors(int stirlingN, int lahN, int factorizationN);
CheckResult checkScherkBridge(int maxR, int maxN);
CheckResult checkFamilyEntriesAgainstTables(int maxN);

CheckResult checkRectangles(int maxM, int maxN);
CheckResult checkUnitRectangleRelation();
CheckResult checkBasicWord(int maxM, int maxN);
/// Always passes; lists every (m,n,r,t) where the Eulerian closed form disagrees.
CheckResult eulerianReport(int maxM, int maxN);
CheckResult checkCompositionIdentity(int maxM, int maxN);
CheckResult checkNamedBoards(int maxN, int maxR);

CheckResult checkBinomial(int maxM, int maxS);
CheckResult checkOreBinomialIdentity(int maxM);
CheckResult checkQuantumPlane(int maxM);

struct SuiteOptions {
    int maxLen = 8;             // oracle: every word up to this length
    int sMax = 3;
    int randomCount = 200;
    int randomMaxLen = 12;
    int maxCells = 12;          // engines: Ferrers boards up to this size
    int engineMaxLen = 8;       // engines: word boards up to this length
    std::uint64_t seed = 20240607;
    RecurrenceBounds recurrences;
    int masterBoards = 50;
};

/// Suite names: oracle, engines, recurrences, closed-forms, binomial, classical, all.
std::vector<CheckResult> runSuite(const std::string& name, const SuiteOptions& opts);
bool isSuiteName(const std::string& name);

}  // namespace normord::cli
