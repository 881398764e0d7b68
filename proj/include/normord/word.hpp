#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normord {

/// A word over {X, Y}, read left to right.
class Word {
public:
    Word() = default;
    /// Letters must all be 'X' or 'Y'.
    explicit Word(std::string letters);

    static Word power(char letter, std::size_t n);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    std::size_t countX() const;
    std::size_t countY() const;
    /// Number of pairs (X before Y); zero exactly for normal-ordered words.
    std::size_t inversions() const;

    Word& operator+=(const Word& o) {
        letters_ += o.letters_;
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }
    Word repeated(std::size_t times) const;

    /// Run-length rendering, e.g. XXYY -> "X^2Y^2"; the empty word renders as "".
    std::string render() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// Grammar: word := factor+ ; factor := atom ('^' uint)? ;
/// atom := 'X' | 'Y' | '(' word ')'. Whitespace is ignored, exponents are
/// at least 1. Blank input yields the empty word. Expansions longer than
/// maxLength throw LimitExceeded.
Word parseWord(std::string_view text, std::size_t maxLength = 1u << 20);

/// Blocks Y^{n_j} X^{m_j}, stored left to right, so blocks.front() is j = r
/// and blocks.back() is j = 1.
struct BlockForm {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (n_j, m_j)
    std::size_t totalN = 0;
    std::size_t totalM = 0;

    /// X count of the rightmost block.
    std::size_t m1() const { return blocks.empty() ? 0 : blocks.back().second; }
    Word reconstruct() const;
};

BlockForm blockForm(const Word& w);

/// Partition lambda_1 >= ... >= lambda_ell >= 0 inside the (m - ell) x ell box.
struct YoungDiagram {
    std::vector<std::size_t> parts;
    std::size_t width = 0;   // m - ell
    std::size_t height = 0;  // ell

    std::size_t size() const;
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Y^{m-ell-lambda_1} X Y^{lambda_1-lambda_2} ... X Y^{lambda_ell}.
Word wordFromDiagram(const YoungDiagram& lambda, std::size_t m, std::size_t ell);
/// Inverse: lambda_i is the number of Y letters after the i-th X.
YoungDiagram diagramFromWord(const Word& w);
/// All diagrams in the (m - ell) x ell box, lexicographically ascending.
std::vector<YoungDiagram> enumerateDiagrams(std::size_t m, std::size_t ell);
/// X Y^{lambda_1-lambda_2} ... X Y^{lambda_ell}: the word without its leading Y run.
Word diagramTail(const YoungDiagram& lambda);

}  // namespace normord
