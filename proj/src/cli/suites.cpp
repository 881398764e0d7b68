#include "normord/cli/suites.hpp"

#include "normord/binomial.hpp"
#include "normord/classical.hpp"
#include "normord/closed_forms.hpp"
#include "normord/combinatorial_form.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"
#include "normord/families.hpp"
#include "normord/placements.hpp"
#include "normord/rewriter.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>

namespace normord::cli {

void CheckResult::fail(const std::string& detail) {
    ++cases;
    ++failures;
    if (failureDetails.size() < 5) failureDetails.push_back(detail);
}

void CheckResult::expect(bool ok, const std::string& detail) {
    if (ok) {
        pass();
    } else {
        fail(detail);
    }
}

namespace {

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string caseName(const Word& w, int s) {
    return "word '" + w.render() + "' s=" + std::to_string(s);
}

std::string heightsText(const Board& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.columns(); ++i) out += (i ? "," : "") + std::to_string(b.height(i));
    return out + "]";
}

const std::optional<mpz_class> kOne = mpz_class(1);

/// Value at q = 1 and every alpha = 1.
mpz_class countAtOne(const CoeffPoly& p) {
    std::vector<std::optional<mpz_class>> alpha(static_cast<std::size_t>(p.ringS()) + 1, mpz_class(1));
    CoeffPoly c = p.specialize(kOne, alpha);
    if (c.isZero()) return 0;
    return c.terms().begin()->second;
}

std::vector<std::optional<mpz_class>> alphaValues(std::initializer_list<long> v) {
    std::vector<std::optional<mpz_class>> out;
    for (long x : v) out.emplace_back(mpz_class(x));
    return out;
}

template <typename Map>
void compareMaps(CheckResult& r, const Map& a, const Map& b, const std::string& ctx, const char* what) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            r.fail(ctx + ": only the " + std::string(what) + " left side has an entry");
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            r.fail(ctx + ": only the " + std::string(what) + " right side has an entry");
            ++ib;
        } else {
            r.expect(ia->second == ib->second, ctx + ": " + ia->second.toString() + " vs " + ib->second.toString());
            ++ia;
            ++ib;
        }
    }
}

}  // namespace

std::vector<Word> allWords(std::size_t length) {
    std::vector<Word> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
        std::string s(length, 'Y');
        for (std::size_t i = 0; i < length; ++i) {
            if (mask >> i & 1) s[length - 1 - i] = 'X';
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

std::vector<Board> ferrersBoardsUpTo(int maxCells) {
    std::vector<Board> out{Board()};
    // Partitions as heights right to left: weakly increasing, every part >= 1.
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int minPart, int left) {
        if (!cur.empty()) {
            out.emplace_back(cur);
            std::vector<int> padded{0};
            padded.insert(padded.end(), cur.begin(), cur.end());
            out.emplace_back(std::move(padded));
        }
        for (int p = minPart; p <= left; ++p) {
            cur.push_back(p);
            rec(p, left - p);
            cur.pop_back();
        }
    };
    rec(1, maxCells);
    return out;
}

std::vector<Word> randomWords(int count, int maxLen, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> out;
    for (int i = 0; i < count; ++i) {
        const std::size_t len = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(maxLen));
        std::string s(len, 'Y');
        for (auto& c : s) {
            if (rng() & 1) c = 'X';
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

CheckResult checkYX3Expansion() {
    return timed("(YX)^3 expansion for s=1", [](CheckResult& r) {
        NormalForm expected(1);
        expected.addTerm(3, 3, CoeffPoly::parse("q^3", 1));
        expected.addTerm(3, 2, CoeffPoly::parse("q*alpha1 + 2*q^2*alpha1", 1));
        expected.addTerm(3, 1, CoeffPoly::parse("alpha1^2 + q*alpha1^2", 1));
        expected.addTerm(2, 2, CoeffPoly::parse("2*q*alpha0 + q^2*alpha0", 1));
        expected.addTerm(2, 1, CoeffPoly::parse("2*alpha0*alpha1 + q*alpha0*alpha1", 1));
        expected.addTerm(1, 1, CoeffPoly::parse("alpha0^2", 1));
        const Word w = parseWord("(YX)^3");
        for (Engine e : {Engine::Dp, Engine::Sequential, Engine::Static}) {
            auto cmp = equalNormalForms(combinatorialNormalForm(w, 1, e), expected);
            r.expect(cmp.equal, std::string(engineName(e)) + " engine: " + cmp.describe());
        }
        auto cmp = equalNormalForms(normalOrder(w, 1), expected);
        r.expect(cmp.equal, "rewriting: " + cmp.describe());
    });
}

CheckResult checkOracleAllWords(int minLen, int maxLen, int sMax) {
    return timed("placements = rewriting, every word of length " + std::to_string(minLen) + ".." + std::to_string(maxLen) +
                     ", s=0.." + std::to_string(sMax),
                 [&](CheckResult& r) {
                     for (int len = minLen; len <= maxLen; ++len) {
                         for (const Word& w : allWords(static_cast<std::size_t>(len))) {
                             for (int s = 0; s <= sMax; ++s) {
                                 auto cmp = equalNormalForms(combinatorialNormalForm(w, s), normalOrder(w, s));
                                 r.expect(cmp.equal, caseName(w, s) + ": " + cmp.describe());
                             }
                         }
                     }
                 });
}

CheckResult checkOracleRandomWords(int count, int maxLen, int sMax, std::uint64_t seed) {
    return timed("placements = rewriting, " + std::to_string(count) + " random words of length <= " + std::to_string(maxLen),
                 [&](CheckResult& r) {
                     for (const Word& w : randomWords(count, maxLen, seed)) {
                         for (int s = 0; s <= sMax; ++s) {
                             auto cmp = equalNormalForms(combinatorialNormalForm(w, s), normalOrder(w, s));
                             r.expect(cmp.equal, caseName(w, s) + ": " + cmp.describe());
                         }
                     }
                 });
}

CheckResult checkOreDoubleSum(int maxLen) {
    return timed("rook/file double sum = type sum for s=1, words of length <= " + std::to_string(maxLen), [&](CheckResult& r) {
        for (int len = 0; len <= maxLen; ++len) {
            for (const Word& w : allWords(static_cast<std::size_t>(len))) {
                auto cmp = equalNormalForms(oreDoubleSum(w), combinatorialNormalForm(w, 1));
                r.expect(cmp.equal, caseName(w, 1) + ": " + cmp.describe());
            }
        }
    });
}

CheckResult checkConfluence(int count, int maxLen, int sMax, std::uint64_t seed) {
    return timed("rewriting is independent of redex choice", [&](CheckResult& r) {
        int i = 0;
        for (const Word& w : randomWords(count, maxLen, seed)) {
            const int s = i % (sMax + 1);
            NormalForm base = normalOrder(w, s);
            RewriteOptions random{RedexStrategy::Random, seed + static_cast<std::uint64_t>(i)};
            RewriteOptions leftmost{RedexStrategy::Leftmost, 0};
            auto c1 = equalNormalForms(normalOrder(w, s, random), base);
            r.expect(c1.equal, caseName(w, s) + " random redex: " + c1.describe());
            auto c2 = equalNormalForms(normalOrder(w, s, leftmost), base);
            r.expect(c2.equal, caseName(w, s) + " leftmost redex: " + c2.describe());
            ++i;
        }
    });
}

CheckResult checkLinearity(int count, std::uint64_t seed) {
    return timed("rewriting is linear", [&](CheckResult& r) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            const int s = static_cast<int>(rng() % 3);
            const int terms = 1 + static_cast<int>(rng() % 5);
            MixedExpression e(s);
            NormalForm expected(s);
            for (const Word& w : randomWords(terms, 6, rng())) {
                CoeffPoly c = CoeffPoly::constant(s, static_cast<long>(rng() % 7) - 3).shiftQ(static_cast<unsigned>(rng() % 3));
                e.add(w, c);
                expected += normalOrder(w, s).scaled(c);
            }
            auto cmp = equalNormalForms(normalOrderExpression(e, s), expected);
            r.expect(cmp.equal, "expression " + std::to_string(i) + ": " + cmp.describe());
        }
    });
}

CheckResult checkSpecializationConsistency(int maxLen) {
    return timed("specializations of alpha agree with smaller relations", [&](CheckResult& r) {
        std::vector<std::optional<mpz_class>> keepAlpha0{std::nullopt, mpz_class(0), mpz_class(0), mpz_class(0)};
        std::vector<std::optional<mpz_class>> noNu{std::nullopt, mpz_class(0)};
        std::vector<std::optional<mpz_class>> noMu{mpz_class(0), std::nullopt};
        for (int len = 0; len <= maxLen; ++len) {
            for (const Word& w : allWords(static_cast<std::size_t>(len))) {
                // s = 3 with alpha_1..alpha_3 = 0 is the s = 0 relation.
                NormalForm s3 = normalOrder(w, 3).specialize(std::nullopt, keepAlpha0);
                NormalForm s0 = normalOrder(w, 0);
                NormalForm lifted(3);
                for (const auto& [key, c] : s0.terms()) lifted.addTerm(key.first, key.second, c.withRing(3));
                auto c1 = equalNormalForms(s3, lifted);
                r.expect(c1.equal, caseName(w, 3) + " vs s=0: " + c1.describe());

                // s = 1 with nu = 0 keeps only rook terms; with mu = 0 only file terms.
                const BlockForm bf = blockForm(w);
                const Board b = boardFromWord(w);
                const int n = static_cast<int>(bf.totalN), m = static_cast<int>(bf.totalM);
                NormalForm rooksOnly(1), filesOnly(1);
                for (const auto& [type, poly] : allMixedNumbersDP(b, 1).numbers) {
                    if (type[1] == 0) rooksOnly.addTerm(n - type[0], m - type[0], poly);
                    if (type[0] == 0) filesOnly.addTerm(n, m - type[1], poly);
                }
                NormalForm full = normalOrder(w, 1);
                auto c2 = equalNormalForms(full.specialize(std::nullopt, noNu), rooksOnly);
                r.expect(c2.equal, caseName(w, 1) + " at nu=0: " + c2.describe());
                auto c3 = equalNormalForms(full.specialize(std::nullopt, noMu), filesOnly);
                r.expect(c3.equal, caseName(w, 1) + " at mu=0: " + c3.describe());
            }
        }
    });
}

CheckResult checkExponentBookkeeping(int maxLen, int sMax) {
    return timed("normal-form exponents come from feasible placement types", [&](CheckResult& r) {
        for (int len = 0; len <= maxLen; ++len) {
            for (const Word& w : allWords(static_cast<std::size_t>(len))) {
                const BlockForm bf = blockForm(w);
                for (int s = 0; s <= sMax; ++s) {
                    const NormalForm nf = normalOrder(w, s);
                    for (const auto& [key, coeff] : nf.terms()) {
                        const int rooks = static_cast<int>(bf.totalM) - key.second;
                        const int creation = key.first - static_cast<int>(bf.totalN);
                        bool feasible = rooks >= 0 && rooks <= static_cast<int>(bf.totalM - bf.m1()) &&
                                        !weakCompositions(s + 1, rooks, creation).empty();
                        r.expect(feasible, caseName(w, s) + ": key " + monomialText(key.first, key.second));
                    }
                }
            }
        }
    });
}

CheckResult checkStaticEngines(int maxCells) {
    return timed("static = sequential = recurrence for s=1, Ferrers boards with <= " + std::to_string(maxCells) + " cells",
                 [&](CheckResult& r) {
                     for (const Board& b : ferrersBoardsUpTo(maxCells)) {
                         std::map<PlacementType, CoeffPoly> fromStatic;
                         for (const auto& [kl, poly] : allStaticNumbers(b)) fromStatic.emplace(PlacementType::ore(kl.first, kl.second), poly);
                         const auto sequential = allSequentialNumbers(b, 1);
                         const auto dp = allMixedNumbersDP(b, 1).numbers;
                         std::string ctx = "board " + heightsText(b);
                         compareMaps(r, fromStatic, sequential, ctx, "static/sequential");
                         compareMaps(r, sequential, dp, ctx, "sequential/recurrence");
                     }
                 });
}

CheckResult checkSequentialDp(int maxLen, int sMax) {
    return timed("sequential = recurrence, word boards of length <= " + std::to_string(maxLen) + ", s=0.." + std::to_string(sMax),
                 [&](CheckResult& r) {
                     for (int len = 0; len <= maxLen; ++len) {
                         for (const Word& w : allWords(static_cast<std::size_t>(len))) {
                             const Board b = boardFromWord(w);
                             for (int s = 0; s <= sMax; ++s) {
                                 compareMaps(r, allSequentialNumbers(b, s), allMixedNumbersDP(b, s).numbers, caseName(w, s), "sequential/recurrence");
                             }
                         }
                     }
                 });
}

CheckResult checkReductions(int maxCells) {
    return timed("rook-only and file-only slices are the rook and file numbers", [&](CheckResult& r) {
        for (const Board& b : ferrersBoardsUpTo(maxCells)) {
            const auto rooks = rookNumbers(b, 0);
            const auto files = rookNumbers(b, 1);
            const std::string ctx = "board " + heightsText(b);
            for (std::size_t k = 0; k < rooks.size(); ++k) {
                const int kk = static_cast<int>(k);
                CoeffPoly m0 = mixedNumberStatic(b, kk, 0);
                r.expect(m0 == rooks[k].withRing(1), ctx + " m_{" + std::to_string(k) + ",0}");
                r.expect(mixedNumberStatic(b, 0, kk) == files[k], ctx + " m_{0," + std::to_string(k) + "}");
                r.expect(countAtOne(rooks[k]) == countRooks(b, kk), ctx + " rook count " + std::to_string(k));
                r.expect(countAtOne(files[k]) == countFiles(b, kk), ctx + " file count " + std::to_string(k));
            }
        }
    });
}

CheckResult checkProductFormula(int maxN) {
    return timed("mixed counts on staircases factor into rook and file counts", [&](CheckResult& r) {
        for (int n = 0; n <= maxN; ++n) {
            const Board jn = staircase(n);
            for (int k = 0; k <= n; ++k) {
                for (int ell = 0; k + ell <= n; ++ell) {
                    mpz_class mixed = countAtOne(mixedNumberDP(jn, PlacementType::ore(k, ell)).value);
                    mpz_class product = countRooks(jn, k) * countFiles(staircase(n - k), ell);
                    r.expect(mixed == product, "J_" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(ell) + ": " +
                                                   mixed.get_str() + " vs " + product.get_str());
                }
            }
        }
    });
}

CheckResult checkJ3Count() {
    return timed("13 mixed placements on J_3", [](CheckResult& r) {
        const Board j3 = staircase(3);
        const std::uint64_t count = countStaticPlacements(j3);
        r.expect(count == 13, "static enumeration found " + std::to_string(count));
        mpz_class total = 0;
        for (const auto& [type, poly] : allSequentialNumbers(j3, 1)) total += countAtOne(poly);
        r.expect(total == 13, "sequential walk weight sum at q=1 is " + total.get_str());
        mpz_class coefficientSum = 0;
        const NormalForm yx3 = normalOrder(parseWord("(YX)^3"), 1);
        for (const auto& [key, poly] : yx3.terms()) coefficientSum += countAtOne(poly);
        r.expect(coefficientSum == 13, "rewriting coefficient sum at q=1 is " + coefficientSum.get_str());
    });
}

CheckResult checkFamilyRecurrences(const RecurrenceBounds& b) {
    return timed("number family recurrences", [&](CheckResult& r) {
        auto record = [&](const RecurrenceReport& rep) {
            r.expect(rep.ok() && rep.checked > 0, rep.summary());
            r.info.push_back(rep.summary());
        };
        record(checkOreStirlingRecurrence(b.oreStirlingN));
        record(checkOreStirlingRecurrenceAtQ1(b.oreStirlingN));
        record(checkOreLahRecurrence(b.oreLahN));
        for (int s = 0; s <= b.polyS; ++s) {
            record(checkPolyStirlingRecurrence(s, b.polyN));
            record(checkPolyLahRecurrence(s, b.polyN));
        }
        for (int rr = 1; rr <= b.scherkR; ++rr) {
            record(checkRecurrences(parseFamily("ore-scherk", rr, 1), b.scherkN));
            for (int s = 0; s <= b.polyS; ++s) record(checkPolyScherkRecurrence(rr, s, b.scherkN));
        }
        record(checkQLahSpecializations(b.qLahN));
    });
}

CheckResult checkMasterRecurrence(const MasterRecurrenceOptions& opts) {
    return timed("column-peeling recurrence on " + std::to_string(opts.boards) + " random Ferrers boards", [&](CheckResult& r) {
        RecurrenceReport rep = normord::checkMasterRecurrence(opts);
        r.cases += rep.checked;
        for (const auto& v : rep.violations) r.fail(v.where + ": " + v.lhs.toString() + " vs " + v.rhs.toString());
        r.info.push_back(rep.summary());
    });
}

CheckResult checkClassicalAnchors(int stirlingN, int lahN, int factorizationN) {
    return timed("classical Stirling and Lah numbers at q=1", [&](CheckResult& r) {
        const auto muOnly = alphaValues({1, 0});
        const auto nuOnly = alphaValues({0, 1});
        for (int n = 0; n <= stirlingN; ++n) {
            const Word w = Word("YX").repeated(static_cast<std::size_t>(n));
            for (const NormalForm& nf : {combinatorialNormalForm(w, 1), normalOrder(w, 1)}) {
                NormalForm second = nf.specialize(kOne, muOnly);
                NormalForm first = nf.specialize(kOne, nuOnly);
                NormalForm wantSecond(1), wantFirst(1);
                for (int k = 0; k <= n; ++k) {
                    wantSecond.addTerm(k, k, CoeffPoly::constant(1, stirling2(n, k)));
                    wantFirst.addTerm(n, k, CoeffPoly::constant(1, stirling1(n, k)));
                }
                auto c1 = equalNormalForms(second, wantSecond);
                r.expect(c1.equal, "(YX)^" + std::to_string(n) + " at mu=1, nu=0: " + c1.describe());
                auto c2 = equalNormalForms(first, wantFirst);
                r.expect(c2.equal, "(YX)^" + std::to_string(n) + " at mu=0, nu=1: " + c2.describe());
            }
        }
        for (int n = 0; n <= lahN; ++n) {
            const Word w = Word("YYX").repeated(static_cast<std::size_t>(n));
            for (const NormalForm& nf : {combinatorialNormalForm(w, 1), normalOrder(w, 1)}) {
                NormalForm got = nf.specialize(kOne, muOnly);
                NormalForm want(1);
                for (int k = 0; k <= n; ++k) want.addTerm(n + k, k, CoeffPoly::constant(1, lah(n, k)));
                auto c = equalNormalForms(got, want);
                r.expect(c.equal, "(Y^2X)^" + std::to_string(n) + " at mu=1, nu=0: " + c.describe());
            }
        }
        for (int n = 0; n <= factorizationN; ++n) {
            for (int j = 0; j <= n; ++j) {
                for (int k = 0; k <= j; ++k) {
                    CoeffPoly got = oreStirling(n, j, k).specialize(kOne, {});
                    CoeffPoly want = oreStirlingFactorization(n, j, k);
                    r.expect(got == want, "S(" + std::to_string(n) + ";" + std::to_string(j) + "," + std::to_string(k) + ") at q=1: " +
                                              got.toString() + " vs " + want.toString());
                }
            }
        }
    });
}

CheckResult checkScherkBridge(int maxR, int maxN) {
    return timed("Ore-Scherk numbers at mu=1, nu=0, q=1 are jump-board rook numbers", [&](CheckResult& r) {
        const auto muOnly = alphaValues({1, 0});
        for (int rr = 1; rr <= maxR; ++rr) {
            for (int n = 0; n <= maxN; ++n) {
                for (int k = 0; k <= n; ++k) {
                    CoeffPoly v = oreScherk(rr, n, (rr - 1) * n + k, k).specialize(kOne, muOnly);
                    mpz_class got = v.isZero() ? mpz_class(0) : v.terms().begin()->second;
                    mpz_class want = jumpRookNumber(n, rr, n - k);
                    r.expect(got == want, "r=" + std::to_string(rr) + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                              got.get_str() + " vs " + want.get_str());
                }
            }
        }
    });
}

CheckResult checkFamilyEntriesAgainstTables(int maxN) {
    return timed("family entries agree with tables and with each other", [&](CheckResult& r) {
        std::vector<Family> fams{parseFamily("ore-stirling"), parseFamily("ore-lah"), parseFamily("ore-scherk", 3, 1),
                                 parseFamily("poly-stirling", 1, 2), parseFamily("poly-lah", 1, 2), parseFamily("poly-scherk", 3, 2)};
        for (const Family& f : fams) {
            auto table = familyTable(f, maxN);
            const int span = f.jump() + std::max(f.ringS() - 1, 0);
            for (int n = 0; n <= maxN; ++n) {
                for (int j = 0; j <= span * n + 1; ++j) {
                    for (int k = 0; k <= n + 1; ++k) {
                        r.expect(familyEntry(f, n, j, k) == table->at(n, j, k),
                                 f.name() + " (" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
                    }
                }
            }
        }
        for (int n = 0; n <= maxN; ++n) {
            for (int j = 0; j <= 2 * n + 1; ++j) {
                for (int k = 0; k <= n; ++k) {
                    const std::string at = "(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    r.expect(polyStirling(1, n, j, k) == oreStirling(n, j, k), "poly-stirling s=1 vs ore-stirling " + at);
                    r.expect(oreScherk(1, n, j, k) == oreStirling(n, j, k), "ore-scherk r=1 vs ore-stirling " + at);
                    r.expect(oreScherk(2, n, j, k) == oreLah(n, j, k), "ore-scherk r=2 vs ore-lah " + at);
                    r.expect(polyScherk(2, 1, n, j, k) == polyLah(1, n, j, k), "poly-scherk r=2 vs poly-lah " + at);
                }
            }
        }
    });
}

CheckResult checkRectangles(int maxM, int maxN) {
    return timed("rectangle closed forms against enumeration, m,n <= " + std::to_string(maxM) + "," + std::to_string(maxN),
                 [&](CheckResult& r) {
                     for (int m = 0; m <= maxM; ++m) {
                         for (int n = 0; n <= maxN; ++n) {
                             const Board b = rectangle(m, n);
                             std::map<std::pair<int, int>, mpz_class> counts;
                             for (const auto& [kl, poly] : allStaticNumbers(b)) counts[kl] = countAtOne(poly);
                             const std::string ctx = "R_{" + std::to_string(m) + "," + std::to_string(n) + "}";
                             for (int k = 0; k <= m; ++k) {
                                 RectangleCounts cf = rectangleClosedForms(m, n, k, 0);
                                 r.expect(cf.rooks == countRooks(b, k), ctx + " r_" + std::to_string(k));
                                 r.expect(cf.files == countFiles(b, k), ctx + " f_" + std::to_string(k));
                                 for (int ell = 0; ell <= m; ++ell) {
                                     mpz_class closed = rectangleMixedCount(m, n, k, ell);
                                     auto it = counts.find({k, ell});
                                     mpz_class enumerated = it == counts.end() ? mpz_class(0) : it->second;
                                     r.expect(closed == enumerated, ctx + " |M_{" + std::to_string(k) + "," + std::to_string(ell) + "}| closed " +
                                                                        closed.get_str() + " vs enumerated " + enumerated.get_str());
                                 }
                             }
                         }
                     }
                 });
}

CheckResult checkUnitRectangleRelation() {
    return timed("XY = YX + nu Y + mu from the rectangle counts", [](CheckResult& r) {
        // X^m Y^n = sum_{r,t} mu^t nu^{r-t} |M_{t,r-t}(R_{m,n})| Y^{n-t} X^{m-r} at q = 1.
        const int m = 1, n = 1;
        NormalForm assembled(1);
        for (int rr = 0; rr <= m; ++rr) {
            for (int t = 0; t <= std::min(n, rr); ++t) {
                mpz_class c = rectangleMixedCount(m, n, t, rr - t);
                assembled.addTerm(n - t, m - rr, CoeffPoly::monomial(1, c, 0, {static_cast<unsigned>(t), static_cast<unsigned>(rr - t)}));
            }
        }
        NormalForm expected(1);
        expected.addTerm(1, 1, CoeffPoly::one(1));
        expected.addTerm(1, 0, CoeffPoly::alpha(1, 1));
        expected.addTerm(0, 0, CoeffPoly::alpha(1, 0));
        auto c1 = equalNormalForms(assembled, expected);
        r.expect(c1.equal, "closed-form assembly: " + c1.describe());
        auto c2 = equalNormalForms(normalOrder(parseWord("XY"), 1).specialize(kOne, {}), expected);
        r.expect(c2.equal, "rewriting at q=1: " + c2.describe());
    });
}

CheckResult checkBasicWord(int maxM, int maxN) {
    return timed("X^mY^n from alternating sums, m,n <= " + std::to_string(maxM) + "," + std::to_string(maxN), [&](CheckResult& r) {
        const auto ones = alphaValues({1, 1});
        for (int m = 1; m <= maxM; ++m) {
            for (int n = 1; n <= maxN; ++n) {
                const Word w = Word::power('X', static_cast<std::size_t>(m)) + Word::power('Y', static_cast<std::size_t>(n));
                auto cmp = equalNormalForms(basicWordOreFormula(m, n), normalOrder(w, 1).specialize(kOne, ones));
                r.expect(cmp.equal, "X^" + std::to_string(m) + "Y^" + std::to_string(n) + ": " + cmp.describe());
            }
        }
    });
}

CheckResult eulerianReport(int maxM, int maxN) {
    return timed("Eulerian closed form comparison (informational)", [&](CheckResult& r) {
        std::size_t disagreements = 0;
        for (const auto& e : eulerianComparison(maxM, maxN)) {
            r.pass();
            if (e.agree) continue;
            ++disagreements;
            r.info.push_back("(m,n,r,t)=(" + std::to_string(e.m) + "," + std::to_string(e.n) + "," + std::to_string(e.r) + "," +
                             std::to_string(e.t) + "): alternating sum " + e.alternating.get_str() + ", Eulerian form " + e.closed.get_str());
        }
        r.info.insert(r.info.begin(), std::to_string(disagreements) + " of " + std::to_string(r.cases) + " index tuples disagree");
    });
}

CheckResult checkCompositionIdentity(int maxM, int maxN) {
    return timed("composition double sum times t! equals C(m,r) q_n(r,t)", [&](CheckResult& r) {
        for (int m = 1; m <= maxM; ++m) {
            for (int n = 1; n <= maxN; ++n) {
                for (int rr = 0; rr <= m; ++rr) {
                    for (int t = 0; t <= n; ++t) {
                        mpz_class lhs = factorial(t) * rectangleCompositionSum(m, n, t, rr);
                        mpz_class rhs = binomial(m, rr) * alternatingQ(n, rr, t);
                        r.expect(lhs == rhs, "(m,n,r,t)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(rr) + "," +
                                                 std::to_string(t) + "): " + lhs.get_str() + " vs " + rhs.get_str());
                    }
                }
            }
        }
    });
}

CheckResult checkNamedBoards(int maxN, int maxR) {
    return timed("Abel and Laguerre board identities", [&](CheckResult& r) {
        for (const auto& c : namedBoardSpecializations(maxN, maxR)) {
            r.expect(c.ok(), c.label + ": formula " + c.formula.get_str() + ", rectangle " + c.rectangle.get_str() + ", enumerated " +
                                 c.enumerated.get_str());
        }
    });
}

CheckResult checkBinomial(int maxM, int maxS) {
    return timed("(X+Y)^m from diagrams = rewriting, m <= " + std::to_string(maxM) + ", s <= " + std::to_string(maxS),
                 [&](CheckResult& r) {
                     for (int m = 0; m <= maxM; ++m) {
                         for (int s = 0; s <= maxS; ++s) {
                             auto cmp = equalNormalForms(binomialNormalForm(m, s), normalOrderExpression(binomialExpansion(m, s), s));
                             r.expect(cmp.equal, "m=" + std::to_string(m) + " s=" + std::to_string(s) + ": " + cmp.describe());
                         }
                     }
                 });
}

CheckResult checkOreBinomialIdentity(int maxM) {
    return timed("s=1 binomial coefficients: M(m,k,l,-t) = O(m,k,l,t)", [&](CheckResult& r) {
        for (int m = 0; m <= maxM; ++m) {
            for (int k = 0; k <= m; ++k) {
                for (int ell = k; ell <= m; ++ell) {
                    for (int tau = 0; tau <= ell - k; ++tau) {
                        r.expect(binomialCoefficientM(m, k, ell, -tau, 1) == binomialCoefficientO(m, k, ell, tau),
                                 "(m,k,l,t)=(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(ell) + "," +
                                     std::to_string(tau) + ")");
                    }
                }
            }
            auto cmp = equalNormalForms(oreBinomialNormalForm(m), binomialNormalForm(m, 1));
            r.expect(cmp.equal, "m=" + std::to_string(m) + " assembled forms: " + cmp.describe());
        }
    });
}

CheckResult checkQuantumPlane(int maxM) {
    return timed("quantum plane gives Gaussian binomials, m <= " + std::to_string(maxM), [&](CheckResult& r) {
        const auto zeros = alphaValues({0, 0});
        for (int m = 0; m <= maxM; ++m) {
            NormalForm got = binomialNormalForm(m, 1).specialize(std::nullopt, zeros);
            NormalForm want(1);
            for (int k = 0; k <= m; ++k) want.addTerm(m - k, k, qBinomial(m, k, 1));
            auto cmp = equalNormalForms(got, want);
            r.expect(cmp.equal, "m=" + std::to_string(m) + ": " + cmp.describe());
        }
    });
}

bool isSuiteName(const std::string& name) {
    return name == "oracle" || name == "engines" || name == "recurrences" || name == "closed-forms" || name == "binomial" ||
           name == "classical" || name == "all";
}

std::vector<CheckResult> runSuite(const std::string& name, const SuiteOptions& o) {
    if (!isSuiteName(name)) throw ConfigError("unknown suite '" + name + "'");
    std::vector<std::function<CheckResult()>> jobs;
    const bool all = name == "all";
    if (all || name == "oracle") {
        jobs.push_back([=] { return checkYX3Expansion(); });
        jobs.push_back([=] { return checkOracleAllWords(0, o.maxLen, o.sMax); });
        jobs.push_back([=] { return checkOracleRandomWords(o.randomCount, o.randomMaxLen, o.sMax, o.seed); });
        jobs.push_back([=] { return checkOreDoubleSum(std::min(o.maxLen, 8)); });
        jobs.push_back([=] { return checkConfluence(100, 10, o.sMax, o.seed); });
        jobs.push_back([=] { return checkLinearity(50, o.seed); });
        jobs.push_back([=] { return checkSpecializationConsistency(o.maxLen); });
        jobs.push_back([=] { return checkExponentBookkeeping(o.maxLen, o.sMax); });
    }
    if (all || name == "engines") {
        jobs.push_back([=] { return checkStaticEngines(o.maxCells); });
        jobs.push_back([=] { return checkSequentialDp(o.engineMaxLen, o.sMax); });
        jobs.push_back([=] { return checkReductions(o.maxCells); });
        jobs.push_back([=] { return checkProductFormula(7); });
        jobs.push_back([=] { return checkJ3Count(); });
    }
    if (all || name == "recurrences") {
        jobs.push_back([=] { return checkFamilyRecurrences(o.recurrences); });
        MasterRecurrenceOptions mo;
        mo.boards = o.masterBoards;
        mo.seed = o.seed;
        jobs.push_back([=] { return cli::checkMasterRecurrence(mo); });
    }
    if (all || name == "closed-forms") {
        jobs.push_back([=] { return checkRectangles(5, 5); });
        jobs.push_back([=] { return checkUnitRectangleRelation(); });
        jobs.push_back([=] { return checkBasicWord(6, 6); });
        jobs.push_back([=] { return checkCompositionIdentity(5, 5); });
        jobs.push_back([=] { return checkNamedBoards(6, 2); });
        jobs.push_back([=] { return eulerianReport(6, 6); });
    }
    if (all || name == "binomial") {
        jobs.push_back([=] { return checkBinomial(7, 2); });
        jobs.push_back([=] { return checkOreBinomialIdentity(6); });
        jobs.push_back([=] { return checkQuantumPlane(10); });
    }
    if (all || name == "classical") {
        jobs.push_back([=] { return checkClassicalAnchors(7, 6, 7); });
        jobs.push_back([=] { return checkScherkBridge(3, 6); });
        jobs.push_back([=] { return checkFamilyEntriesAgainstTables(5); });
    }
    // Checks are independent; run them concurrently and report in order.
    std::vector<std::future<CheckResult>> running;
    for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
    std::vector<CheckResult> out;
    for (auto& f : running) out.push_back(f.get());
    return out;
}

}  // namespace normord::cli
