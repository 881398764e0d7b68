#pragma once

#include "normord/word.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace normord {

/// Column heights indexed right to left: heights()[0] is the rightmost column.
class Board {
public:
    Board() = default;
    explicit Board(std::vector<int> heightsRightToLeft);

    const std::vector<int>& heights() const { return heights_; }
    std::size_t columns() const { return heights_.size(); }
    int height(std::size_t c) const { return heights_[c]; }
    int maxHeight() const;
    long cellCount() const;
    /// Heights weakly increase right to left (weakly decrease left to right).
    bool isFerrers() const;

    /// The first i columns counted from the right.
    Board prefix(std::size_t i) const;
    /// New board with a column of height h appended on the left.
    Board adjoinColumn(int h) const;

    /// Plain ASCII picture, one "." per cell; see renderBoard.
    std::string render() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::vector<int> heights_;
};

/// Rows printed top-down, columns left to right, tokens padded to a common
/// width and separated by one space; cells outside the board are blank.
/// Columns hang from the top row, so row r of column c exists iff r < height.
std::string renderBoard(const Board& b, const std::function<std::string(std::size_t column, int row)>& token);

/// One column per X; its height is the number of Y letters to its right.
Board boardFromWord(const Word& w);

Board jumpBoard(int n, int m);
Board staircase(int n);
Board lahBoard(int n);
/// m columns of height n.
Board rectangle(int m, int n);
/// Heights given right to left; non-monotone input is kept (isFerrers() is false).
Board fromPartition(std::vector<int> heightsRightToLeft);

/// Abel board A_n = R_{n-1,n}.
Board abelBoard(int n);
/// r-restricted Abel board R_{n-r,n}.
Board restrictedAbelBoard(int n, int r);
/// Laguerre board L_n = R_{n,n-1}.
Board laguerreBoard(int n);
/// r-restricted Laguerre board R_{n+r-1,n-r}.
Board restrictedLaguerreBoard(int n, int r);

}  // namespace normord
