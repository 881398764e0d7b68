#include "normord/board.hpp"

#include "normord/errors.hpp"

#include <algorithm>

namespace normord {

Board::Board(std::vector<int> heightsRightToLeft) : heights_(std::move(heightsRightToLeft)) {
    for (int h : heights_) {
        if (h < 0) throw DomainError("board column heights must be nonnegative");
    }
}

int Board::maxHeight() const {
    return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

long Board::cellCount() const {
    long t = 0;
    for (int h : heights_) t += h;
    return t;
}

bool Board::isFerrers() const {
    return std::is_sorted(heights_.begin(), heights_.end());
}

Board Board::prefix(std::size_t i) const {
    return Board(std::vector<int>(heights_.begin(), heights_.begin() + static_cast<long>(std::min(i, heights_.size()))));
}

Board Board::adjoinColumn(int h) const {
    std::vector<int> hs = heights_;
    hs.push_back(h);
    return Board(std::move(hs));
}

std::string Board::render() const {
    return renderBoard(*this, [](std::size_t, int) { return std::string("."); });
}

std::string renderBoard(const Board& b, const std::function<std::string(std::size_t, int)>& token) {
    const std::size_t n = b.columns();
    const int top = b.maxHeight();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top), std::vector<std::string>(n));
    std::size_t width = 1;
    for (int row = 0; row < top; ++row) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t c = n - 1 - i;
            if (row < b.height(c)) {
                cells[static_cast<std::size_t>(row)][i] = token(c, row);
                width = std::max(width, cells[static_cast<std::size_t>(row)][i].size());
            }
        }
    }
    std::string out;
    for (const auto& line : cells) {
        std::string text;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) text += ' ';
            std::string t = line[i];
            t.resize(width, ' ');
            text += t;
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out += text + "\n";
    }
    return out;
}

Board boardFromWord(const Word& w) {
    std::vector<int> hs;
    int ys = 0;
    const std::string& s = w.letters();
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (*it == 'Y') {
            ++ys;
        } else {
            hs.push_back(ys);
        }
    }
    return Board(std::move(hs));
}

Board jumpBoard(int n, int m) {
    if (n < 0 || m < 0) throw DomainError("jump board needs n, m >= 0");
    std::vector<int> hs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) hs[static_cast<std::size_t>(i)] = m * i;
    return Board(std::move(hs));
}

Board staircase(int n) { return jumpBoard(n, 1); }

Board lahBoard(int n) { return jumpBoard(n, 2); }

Board rectangle(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("rectangle needs m, n >= 0");
    return Board(std::vector<int>(static_cast<std::size_t>(m), n));
}

Board fromPartition(std::vector<int> heightsRightToLeft) {
    return Board(std::move(heightsRightToLeft));
}

Board abelBoard(int n) { return rectangle(n - 1, n); }

Board restrictedAbelBoard(int n, int r) { return rectangle(n - r, n); }

Board laguerreBoard(int n) { return rectangle(n, n - 1); }

Board restrictedLaguerreBoard(int n, int r) { return rectangle(n + r - 1, n - r); }

}  // namespace normord
