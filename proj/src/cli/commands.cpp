#include "normord/cli/commands.hpp"

#include "normord/board.hpp"
#include "normord/cli/json_io.hpp"
#include "normord/cli/suites.hpp"
#include "normord/combinatorial_form.hpp"
#include "normord/errors.hpp"
#include "normord/families.hpp"
#include "normord/placements.hpp"
#include "normord/rewriter.hpp"
#include "normord/word.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace normord::cli {

namespace {

mpq_class parseRational(const std::string& text) {
    mpq_class v;
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty() || v.set_str(t, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
    if (v.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    v.canonicalize();
    return v;
}

/// Values substituted for q and alpha0..alphaS. Either all variables get a
/// rational value, or the given ones must be integers and the rest stay symbolic.
struct Specialization {
    std::optional<mpq_class> q;
    std::vector<mpq_class> alpha;  // empty or length s+1

    bool any() const { return q || !alpha.empty(); }
    bool full() const { return q && !alpha.empty(); }
};

Specialization parseSpecialization(const std::string& qText, const std::string& alphaText, bool haveQ, bool haveAlpha, int s) {
    Specialization sp;
    if (haveQ) sp.q = parseRational(qText);
    if (haveAlpha) {
        std::stringstream ss(alphaText);
        std::string item;
        while (std::getline(ss, item, ',')) sp.alpha.push_back(parseRational(item));
        if (sp.alpha.size() != static_cast<std::size_t>(s) + 1) {
            throw ConfigError("--alpha needs " + std::to_string(s + 1) + " values (alpha0..alpha" + std::to_string(s) + "), got " +
                              std::to_string(sp.alpha.size()));
        }
    }
    return sp;
}

mpz_class requireInteger(const mpq_class& v, const char* what) {
    if (v.get_den() != 1) {
        throw ConfigError(std::string("partial specialization keeps integer coefficients, so ") + what +
                          " must be an integer; give both --q and --alpha to evaluate at rationals");
    }
    return v.get_num();
}

CoeffPoly specializePartial(const CoeffPoly& p, const Specialization& sp) {
    std::optional<mpz_class> q;
    if (sp.q) q = requireInteger(*sp.q, "--q");
    std::vector<std::optional<mpz_class>> alpha;
    for (const auto& a : sp.alpha) alpha.emplace_back(requireInteger(a, "--alpha"));
    return p.specialize(q, alpha);
}

mpq_class evaluateFull(const CoeffPoly& p, const Specialization& sp) {
    return p.evaluate(*sp.q, sp.alpha);
}

std::string signedJoin(const std::vector<std::pair<mpq_class, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, mono] : terms) {
        const bool neg = sgn(c) < 0;
        mpq_class a = abs(c);
        std::string body = mono == "1" ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
        if (out.empty()) {
            out = neg ? "-" + body : body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

using NumericForm = std::vector<std::pair<NormalForm::Key, mpq_class>>;

NumericForm evaluateForm(const NormalForm& nf, const Specialization& sp) {
    NumericForm out;
    for (const auto& [key, c] : nf.terms()) {
        mpq_class v = evaluateFull(c, sp);
        if (v != 0) out.emplace_back(key, v);
    }
    return out;
}

std::string numericPretty(const NumericForm& f) {
    std::vector<std::pair<mpq_class, std::string>> terms;
    for (const auto& [key, v] : f) terms.emplace_back(v, monomialText(key.first, key.second));
    return signedJoin(terms);
}

json numericJson(const NumericForm& f, const std::string& word, int s, const Specialization& sp) {
    json terms = json::array();
    for (const auto& [key, v] : f) terms.push_back({{"y", key.first}, {"x", key.second}, {"value", v.get_str()}});
    json alpha = json::array();
    for (const auto& a : sp.alpha) alpha.push_back(a.get_str());
    return {{"word", word}, {"s", s}, {"q", sp.q->get_str()}, {"alpha", alpha}, {"terms", terms}};
}

/// One normal form after the requested specialization, ready for any format.
struct RenderedForm {
    std::string pretty;
    json asJson;
    std::vector<std::pair<NormalForm::Key, std::string>> csvRows;
};

RenderedForm renderForm(const NormalForm& nf, const std::string& word, int s, const Specialization& sp) {
    RenderedForm r;
    if (sp.full()) {
        NumericForm f = evaluateForm(nf, sp);
        r.pretty = numericPretty(f);
        r.asJson = numericJson(f, word, s, sp);
        for (const auto& [key, v] : f) r.csvRows.emplace_back(key, v.get_str());
    } else {
        NormalForm shown = sp.any() ? nf.mapCoefficients([&](const CoeffPoly& p) { return specializePartial(p, sp); }) : nf;
        r.pretty = shown.toPretty();
        r.asJson = normalFormToJson(shown, word);
        for (const auto& [key, c] : shown.terms()) r.csvRows.emplace_back(key, c.toString());
    }
    return r;
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct OrderConfig {
    std::string word;
    int s = 1;
    std::string engine = "dp";
    bool check = false;
    std::string q, alpha;
    std::string format = "pretty";
    bool unsafe = false;
};

int cmdOrder(const OrderConfig& c, bool haveQ, bool haveAlpha, std::ostream& out) {
    const std::size_t maxLen = c.unsafe ? std::size_t{1} << 20 : kMaxWordLength;
    const Word w = parseWord(c.word, maxLen);
    const Engine engine = parseEngine(c.engine);
    if (!c.unsafe && engine != Engine::Dp && boardFromWord(w).cellCount() > kMaxBoardCells) {
        throw LimitExceeded("board of '" + w.render() + "' has more than " + std::to_string(kMaxBoardCells) +
                            " cells; the enumeration engines refuse it without --unsafe-limits");
    }
    const Specialization sp = parseSpecialization(c.q, c.alpha, haveQ, haveAlpha, c.s);
    const std::string text = w.render();

    const NormalForm combinatorial = combinatorialNormalForm(w, c.s, engine);
    RenderedForm comb = renderForm(combinatorial, text, c.s, sp);
    if (!c.check) {
        if (c.format == "json") {
            out << comb.asJson.dump(2) << "\n";
        } else if (c.format == "csv") {
            out << "y,x,coefficient\n";
            for (const auto& [key, v] : comb.csvRows) out << key.first << "," << key.second << "," << csvField(v) << "\n";
        } else {
            out << comb.pretty << "\n";
        }
        return kExitOk;
    }

    const NormalForm oracle = normalOrder(w, c.s);
    const NormalFormComparison cmp = equalNormalForms(combinatorial, oracle);
    RenderedForm orc = renderForm(oracle, text, c.s, sp);
    if (c.format == "json") {
        json j = {{"combinatorial", comb.asJson}, {"rewriting", orc.asJson}, {"agree", cmp.equal}};
        if (!cmp.equal) j["difference"] = cmp.describe();
        out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        out << "source,y,x,coefficient\n";
        for (const auto& [key, v] : comb.csvRows) out << "combinatorial," << key.first << "," << key.second << "," << csvField(v) << "\n";
        for (const auto& [key, v] : orc.csvRows) out << "rewriting," << key.first << "," << key.second << "," << csvField(v) << "\n";
    } else {
        out << "combinatorial: " << comb.pretty << "\n";
        out << "rewriting:     " << orc.pretty << "\n";
        out << "agree: " << (cmp.equal ? "yes" : "no, " + cmp.describe()) << "\n";
    }
    return cmp.equal ? kExitOk : kExitFailure;
}

struct TableConfig {
    std::string family;
    int n = 0;
    int r = 1;
    int s = 1;
    std::string q, alpha;
    std::string format = "csv";
    bool unsafe = false;
};

int cmdTable(const TableConfig& c, bool haveQ, bool haveAlpha, std::ostream& out) {
    const Family f = parseFamily(c.family, c.r, c.s);
    if (c.n < 0) throw ConfigError("--n must be nonnegative");
    if (!c.unsafe && c.n > kMaxTableN) {
        throw LimitExceeded("--n " + std::to_string(c.n) + " exceeds " + std::to_string(kMaxTableN) + "; pass --unsafe-limits to go further");
    }
    const Specialization sp = parseSpecialization(c.q, c.alpha, haveQ, haveAlpha, f.ringS());
    auto table = familyTable(f, c.n);

    struct Row {
        int n, j, k;
        std::string canonical, pretty;
        json coeff;
    };
    std::vector<Row> rows;
    for (const auto& [idx, poly] : table->entries()) {
        const auto [n, j, k] = idx;
        if (n > c.n) continue;
        if (sp.full()) {
            mpq_class v = evaluateFull(poly, sp);
            if (v == 0) continue;
            rows.push_back({n, j, k, v.get_str(), v.get_str(), v.get_str()});
        } else {
            CoeffPoly p = sp.any() ? specializePartial(poly, sp) : poly;
            if (p.isZero()) continue;
            rows.push_back({n, j, k, p.toString(), p.toPretty(), coeffToJson(p)});
        }
    }

    if (c.format == "json") {
        json entries = json::array();
        for (const auto& row : rows) {
            entries.push_back({{"n", row.n}, {"j", row.j}, {"k", row.k}, {sp.full() ? "value" : "coeff", row.coeff}});
        }
        out << json{{"family", f.name()}, {"s", f.ringS()}, {"maxN", c.n}, {"entries", entries}}.dump(2) << "\n";
    } else if (c.format == "pretty") {
        for (const auto& row : rows) {
            out << "(" << row.n << "," << row.j << "," << row.k << ")  " << row.pretty << "\n";
        }
    } else {
        out << "n,j,k,coefficient\n";
        for (const auto& row : rows) out << row.n << "," << row.j << "," << row.k << "," << csvField(row.canonical) << "\n";
    }
    return kExitOk;
}

int cmdVerify(const std::string& suite, const SuiteOptions& opts, const std::string& format, std::ostream& out) {
    if (!isSuiteName(suite)) throw ConfigError("unknown suite '" + suite + "'");
    const auto results = runSuite(suite, opts);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok() ? 0 : 1;

    if (format == "json") {
        json checks = json::array();
        for (const auto& r : results) {
            checks.push_back({{"name", r.name}, {"ok", r.ok()}, {"cases", r.cases}, {"failures", r.failures},
                              {"failureDetails", r.failureDetails}, {"info", r.info}});
        }
        out << json{{"suite", suite}, {"seed", opts.seed}, {"checks", checks}, {"failed", failed}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.ok() ? "PASS  " : "FAIL  ") << r.name << "  [" << r.cases << " cases";
            if (!r.ok()) out << ", " << r.failures << " failed";
            out << "]\n";
            for (const auto& d : r.failureDetails) out << "      " << d << "\n";
        }
        bool header = false;
        for (const auto& r : results) {
            if (r.info.empty()) continue;
            if (!header) out << "\ninformational:\n";
            header = true;
            out << "  " << r.name << "\n";
            for (const auto& line : r.info) out << "    " << line << "\n";
        }
        out << "\n" << results.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitFailure;
}

std::vector<Cell> parseCells(const std::string& text) {
    std::vector<Cell> cells;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("cell '" + item + "' is not of the form column:row");
        try {
            cells.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        } catch (const std::logic_error&) {
            throw ConfigError("cell '" + item + "' is not of the form column:row");
        }
    }
    return cells;
}

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
            throw ConfigError("'" + item + "' is not an integer");
        }
    }
    return out;
}

struct BoardConfig {
    std::string word;
    std::string family;
    int n = 0, m = 0, r = 1;
    std::string heights;
    std::string rooks, files;
    std::string format = "pretty";
};

Board boardFor(const BoardConfig& c, bool haveWord) {
    if (haveWord) return boardFromWord(parseWord(c.word));
    if (c.family == "staircase") return staircase(c.n);
    if (c.family == "jump") return jumpBoard(c.n, c.r);
    if (c.family == "lah") return lahBoard(c.n);
    if (c.family == "rectangle") return rectangle(c.m, c.n);
    if (c.family == "abel") return abelBoard(c.n);
    if (c.family == "restricted-abel") return restrictedAbelBoard(c.n, c.r);
    if (c.family == "laguerre") return laguerreBoard(c.n);
    if (c.family == "restricted-laguerre") return restrictedLaguerreBoard(c.n, c.r);
    if (c.family == "partition") {
        std::vector<int> hs = parseIntList(c.heights);
        std::reverse(hs.begin(), hs.end());
        return fromPartition(std::move(hs));
    }
    throw ConfigError("unknown board family '" + c.family + "'");
}

std::string heightsLeftToRight(const Board& b) {
    std::string out;
    for (std::size_t i = b.columns(); i-- > 0;) out += std::to_string(b.height(i)) + (i ? "," : "");
    return out;
}

int cmdBoard(const BoardConfig& c, bool haveWord, bool haveFamily, std::ostream& out) {
    if (haveWord == haveFamily) throw ConfigError("board needs exactly one of --word and --family");
    const Board b = boardFor(c, haveWord);
    const bool overlay = !c.rooks.empty() || !c.files.empty();
    json j = boardToJson(b);
    j["heightsLeftToRight"] = parseIntList(heightsLeftToRight(b));
    j["ferrers"] = b.isFerrers();
    j["cells"] = b.cellCount();

    std::string picture = b.render();
    std::string summary;
    if (overlay) {
        StaticOrePlacement p{parseCells(c.rooks), parseCells(c.files)};
        BoxClassification cls = classifyStatic(b, p);
        picture = renderClassification(b, cls);
        summary = "empty " + std::to_string(cls.emptyCount) + ", cancelled " + std::to_string(cls.cancelledCount) + ", weight " +
                  cls.weight.toPretty();
        auto cellsJson = [](const std::vector<Cell>& cells) {
            json a = json::array();
            for (const auto& cell : cells) a.push_back({cell.column, cell.row});
            return a;
        };
        j["placement"] = {{"rooks", cellsJson(p.rooks)}, {"files", cellsJson(p.files)}, {"empty", cls.emptyCount},
                          {"cancelled", cls.cancelledCount}, {"weight", coeffToJson(cls.weight)}};
    }

    if (c.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "heights (left to right): " << heightsLeftToRight(b) << "\n";
        if (!picture.empty()) out << picture << (picture.back() == '\n' ? "" : "\n");
        if (overlay) out << summary << "\n";
    }
    return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal ordering in q-deformed polynomial Weyl algebras via rook and file placements", "normord"};
    app.require_subcommand(1);

    OrderConfig oc;
    auto* order = app.add_subcommand("order", "Normal-order a word in X and Y");
    order->add_option("--word", oc.word, "Word such as \"(YX)^3\" or \"X^2YXY\"")->required();
    order->add_option("--s", oc.s, "Degree of the relation polynomial")->check(CLI::Range(0, 64));
    order->add_option("--engine", oc.engine, "dp | sequential | static")->check(CLI::IsMember({"dp", "sequential", "static"}));
    order->add_flag("--check", oc.check, "Also normal-order by rewriting and compare");
    auto* oq = order->add_option("--q", oc.q, "Value of q (rational)");
    auto* oa = order->add_option("--alpha", oc.alpha, "Comma-separated values of alpha0..alphaS (rationals)");
    order->add_option("--format", oc.format, "pretty | json | csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
    order->add_flag("--unsafe-limits", oc.unsafe, "Lift the word length and board size guards");

    TableConfig tc;
    auto* table = app.add_subcommand("table", "Print a triangular family of generalized Stirling numbers");
    table->add_option("--family", tc.family, "ore-stirling | ore-lah | ore-scherk | poly-stirling | poly-lah | poly-scherk")->required();
    table->add_option("--n", tc.n, "Largest n")->required();
    table->add_option("--r", tc.r, "Jump of the Scherk families")->check(CLI::Range(1, 64));
    table->add_option("--s", tc.s, "Degree s of the polynomial families")->check(CLI::Range(0, 64));
    auto* tq = table->add_option("--q", tc.q, "Value of q (rational)");
    auto* ta = table->add_option("--alpha", tc.alpha, "Comma-separated values of alpha0..alphaS (rationals)");
    table->add_option("--format", tc.format, "csv | pretty | json")->check(CLI::IsMember({"pretty", "json", "csv"}));
    table->add_flag("--unsafe-limits", tc.unsafe, "Lift the size guard on --n");

    std::string suite;
    SuiteOptions so;
    std::string verifyFormat = "pretty";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "oracle | engines | recurrences | closed-forms | binomial | classical | all")->required();
    verify->add_option("--max-len", so.maxLen, "Oracle: every word up to this length")->check(CLI::Range(0, 14));
    verify->add_option("--s", so.sMax, "Largest s")->check(CLI::Range(0, 8));
    verify->add_option("--max-cells", so.maxCells, "Engines: Ferrers boards up to this many cells")->check(CLI::Range(0, 20));
    verify->add_option("--seed", so.seed, "Random seed");
    verify->add_option("--random-count", so.randomCount, "Oracle: number of random words")->check(CLI::Range(0, 100000));
    verify->add_option("--format", verifyFormat, "pretty | json")->check(CLI::IsMember({"pretty", "json"}));

    BoardConfig bc;
    auto* board = app.add_subcommand("board", "Render a board, optionally with a rook and file placement");
    auto* bw = board->add_option("--word", bc.word, "Word whose board to draw");
    auto* bf = board->add_option("--family", bc.family,
                                 "staircase | jump | lah | rectangle | abel | restricted-abel | laguerre | restricted-laguerre | partition");
    board->add_option("--n", bc.n, "Size parameter")->check(CLI::Range(0, 1000));
    board->add_option("--m", bc.m, "Columns of a rectangle")->check(CLI::Range(0, 1000));
    board->add_option("--r", bc.r, "Jump or restriction parameter")->check(CLI::Range(0, 1000));
    board->add_option("--heights", bc.heights, "Column heights left to right, for --family partition");
    board->add_option("--rooks", bc.rooks, "Rooks as column:row,... (column 0 is rightmost, row 0 is the top row)");
    board->add_option("--files", bc.files, "Files as column:row,...");
    board->add_option("--format", bc.format, "pretty | json")->check(CLI::IsMember({"pretty", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (order->parsed()) return cmdOrder(oc, oq->count() > 0, oa->count() > 0, out);
        if (table->parsed()) return cmdTable(tc, tq->count() > 0, ta->count() > 0, out);
        if (verify->parsed()) return cmdVerify(suite, so, verifyFormat, out);
        if (board->parsed()) return cmdBoard(bc, bw->count() > 0, bf->count() > 0, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstraintViolation& e) {
        err << "invalid placement (" << e.rule() << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // ConfigError and UnsupportedBoard
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfModel& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace normord::cli
