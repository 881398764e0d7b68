#include "normord/word.hpp"
#include "normord/classical.hpp"
#include "normord/errors.hpp"

#include <doctest.h>

using namespace normord;

namespace {

std::vector<Word> wordsOfLength(std::size_t n) {
    std::vector<Word> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s += (mask >> i & 1) ? 'X' : 'Y';
        out.emplace_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("parsing expands powers and groups") {
    CHECK(parseWord("(YX)^3").letters() == "YXYXYX");
    CHECK(parseWord("X^2YXYX^2Y").letters() == "XXYXYXXY");
    CHECK(parseWord(" ( Y^2 X ) ^ 2 ").letters() == "YYXYYX");
    CHECK(parseWord("((XY)^2Y)^2").letters() == "XYXYYXYXYY");
    CHECK(parseWord("").empty());
    CHECK(parseWord("   ").empty());
}

TEST_CASE("parse errors carry the byte offset") {
    auto offsetOf = [](const char* text) -> std::size_t {
        try {
            parseWord(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 9999;
    };
    CHECK(offsetOf("Z") == 0);
    CHECK(offsetOf("XYZ") == 2);
    CHECK(offsetOf("(YX") == 3);
    CHECK(offsetOf("X^") == 2);
    CHECK(offsetOf("X)") == 1);
    CHECK_THROWS_AS(parseWord("X^0"), ParseError);
    CHECK_THROWS_AS(parseWord("(XY)^6", 10), LimitExceeded);
    CHECK_THROWS_AS(parseWord("X^99999999999999999999"), std::exception);
}

TEST_CASE("letter statistics") {
    Word w("XXYXY");
    CHECK(w.countX() == 3);
    CHECK(w.countY() == 2);
    CHECK(w.inversions() == 5);
    CHECK(Word("YYXX").inversions() == 0);
    CHECK(Word::power('Y', 3).letters() == "YYY");
    CHECK(Word("XY").repeated(2).letters() == "XYXY");
    CHECK_THROWS(Word("XQ"));
}

TEST_CASE("rendering is run-length and parses back") {
    CHECK(Word("XXYXYXXY").render() == "X^2YXYX^2Y");
    for (std::size_t n = 0; n <= 9; ++n) {
        for (const Word& w : wordsOfLength(n)) CHECK(parseWord(w.render()) == w);
    }
}

TEST_CASE("block form reconstructs the word") {
    BlockForm bf = blockForm(Word("YYXXYX"));
    CHECK(bf.totalN == 3);
    CHECK(bf.totalM == 3);
    CHECK(bf.m1() == 1);
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const Word& w : wordsOfLength(n)) {
            BlockForm b = blockForm(w);
            CHECK(b.reconstruct() == w);
            CHECK(b.totalN == w.countY());
            CHECK(b.totalM == w.countX());
        }
    }
}

TEST_CASE("diagrams biject with words of fixed letter counts") {
    for (std::size_t m = 0; m <= 8; ++m) {
        for (std::size_t ell = 0; ell <= m; ++ell) {
            auto ds = enumerateDiagrams(m, ell);
            CHECK(ds.size() == binomial(static_cast<long>(m), static_cast<long>(ell)));
            for (const auto& d : ds) {
                Word w = wordFromDiagram(d, m, ell);
                CHECK(w.countX() == ell);
                CHECK(w.size() == m);
                CHECK(diagramFromWord(w).parts == d.parts);
                CHECK(w.inversions() == d.size());
            }
        }
    }
    YoungDiagram d{{2, 1}, 2, 2};
    CHECK(wordFromDiagram(d, 4, 2).letters() == "XYXY");
    CHECK(diagramTail(d).letters() == "XYXY");
    CHECK_THROWS(wordFromDiagram(YoungDiagram{{3}, 1, 1}, 2, 1));
}
