#include "normord/board.hpp"
#include "normord/errors.hpp"

#include <doctest.h>

using namespace normord;

namespace {

/// Heights right to left, counted directly from the letters.
std::vector<int> yCountsAfterEachX(const std::string& w) {
    std::vector<int> hs;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] != 'X') continue;
        int ys = 0;
        for (std::size_t j = i + 1; j < w.size(); ++j) ys += w[j] == 'Y';
        hs.push_back(ys);
    }
    return hs;
}

}  // namespace

TEST_CASE("boards of words") {
    CHECK(boardFromWord(parseWord("(YX)^4")).heights() == std::vector<int>{0, 1, 2, 3});
    CHECK(boardFromWord(parseWord("X^2YXYX^2Y")).heights() == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(boardFromWord(Word()).columns() == 0);
    CHECK(boardFromWord(Word("YYY")).columns() == 0);
    for (std::uint32_t n = 0; n <= 10; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::string s;
            for (std::uint32_t i = 0; i < n; ++i) s += (mask >> i & 1) ? 'X' : 'Y';
            Board b = boardFromWord(Word(s));
            CHECK(b.heights() == yCountsAfterEachX(s));
            CHECK(b.isFerrers());
            CHECK(b.cellCount() == static_cast<long>(Word(s).inversions()));
        }
    }
}

TEST_CASE("named boards") {
    CHECK(staircase(3).heights() == std::vector<int>{0, 1, 2});
    CHECK(lahBoard(3).heights() == std::vector<int>{0, 2, 4});
    CHECK(jumpBoard(3, 3).heights() == std::vector<int>{0, 3, 6});
    CHECK(rectangle(2, 3).heights() == std::vector<int>{3, 3});
    CHECK(abelBoard(3) == rectangle(2, 3));
    CHECK(restrictedAbelBoard(4, 2) == rectangle(2, 4));
    CHECK(laguerreBoard(3) == rectangle(3, 2));
    CHECK(restrictedLaguerreBoard(3, 2) == rectangle(4, 1));
    CHECK(staircase(0).columns() == 0);
}

TEST_CASE("Ferrers shape and column operations") {
    Board b({1, 3, 2});
    CHECK_FALSE(b.isFerrers());
    CHECK(fromPartition({1, 2, 2}).isFerrers());
    CHECK(b.maxHeight() == 3);
    CHECK(b.cellCount() == 6);
    CHECK(b.prefix(2).heights() == std::vector<int>{1, 3});
    CHECK(b.adjoinColumn(5).heights() == std::vector<int>{1, 3, 2, 5});
    CHECK_THROWS_AS(Board({1, -1}), DomainError);
}

TEST_CASE("rendering hangs columns from the top") {
    CHECK(boardFromWord(parseWord("(YX)^4")).render() == ". . .\n. .\n.\n");
    CHECK(lahBoard(3).render() == ". .\n. .\n.\n.\n");
    CHECK(Board().render().empty());
    std::string marked = renderBoard(staircase(3), [](std::size_t c, int r) { return c == 2 && r == 1 ? std::string("R0") : std::string("."); });
    CHECK(marked == ".  .\nR0\n");
}
