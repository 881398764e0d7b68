#include "normord/word.hpp"

#include "normord/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace normord {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (c != 'X' && c != 'Y') throw DomainError(std::string("word letter must be X or Y, got '") + c + "'");
    }
}

Word Word::power(char letter, std::size_t n) {
    return Word(std::string(n, letter));
}

std::size_t Word::countX() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'X'));
}

std::size_t Word::countY() const {
    return letters_.size() - countX();
}

std::size_t Word::inversions() const {
    std::size_t xs = 0, inv = 0;
    for (char c : letters_) {
        if (c == 'X') {
            ++xs;
        } else {
            inv += xs;
        }
    }
    return inv;
}

Word Word::repeated(std::size_t times) const {
    Word r;
    r.letters_.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i) r.letters_ += letters_;
    return r;
}

std::string Word::render() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        out += letters_[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

class WordParser {
public:
    WordParser(std::string_view text, std::size_t maxLength) : text_(text), max_(maxLength) {}

    Word run() {
        skipSpace();
        if (pos_ == text_.size()) return Word();
        std::string out = parseSequence();
        skipSpace();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')') throw ParseError("unmatched ')'", pos_);
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return Word(std::move(out));
    }

private:
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool atFactorStart() {
        skipSpace();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == 'X' || c == 'Y' || c == '(';
    }

    std::string parseSequence() {
        std::string out;
        if (!atFactorStart()) throw ParseError("expected 'X', 'Y' or '('", pos_);
        while (atFactorStart()) {
            out += parseFactor();
            checkLength(out.size());
        }
        return out;
    }

    std::string parseFactor() {
        std::string atom;
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            atom = parseSequence();
            skipSpace();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("missing ')' for '(' opened at byte " + std::to_string(open), pos_);
            ++pos_;
        } else {
            atom = std::string(1, c);
            ++pos_;
        }
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skipSpace();
            std::size_t start = pos_;
            unsigned long long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
                if (e > max_) throw LimitExceeded("exponent at byte " + std::to_string(start) + " exceeds the word length limit");
                ++pos_;
            }
            if (start == pos_) throw ParseError("expected exponent after '^'", pos_);
            if (e == 0) throw ParseError("exponent 0 is not allowed", start);
            checkLength(atom.size() * e);
            std::string rep;
            rep.reserve(atom.size() * e);
            for (unsigned long long i = 0; i < e; ++i) rep += atom;
            return rep;
        }
        return atom;
    }

    void checkLength(std::size_t n) const {
        if (n > max_) throw LimitExceeded("word expands beyond " + std::to_string(max_) + " letters");
    }

    std::string_view text_;
    std::size_t max_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parseWord(std::string_view text, std::size_t maxLength) {
    return WordParser(text, maxLength).run();
}

Word BlockForm::reconstruct() const {
    std::string s;
    for (auto [n, m] : blocks) {
        s.append(n, 'Y');
        s.append(m, 'X');
    }
    return Word(std::move(s));
}

BlockForm blockForm(const Word& w) {
    BlockForm bf;
    const std::string& s = w.letters();
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t n = 0, m = 0;
        while (i < s.size() && s[i] == 'Y') {
            ++n;
            ++i;
        }
        while (i < s.size() && s[i] == 'X') {
            ++m;
            ++i;
        }
        bf.blocks.emplace_back(n, m);
        bf.totalN += n;
        bf.totalM += m;
    }
    return bf;
}

std::size_t YoungDiagram::size() const {
    std::size_t t = 0;
    for (auto p : parts) t += p;
    return t;
}

Word wordFromDiagram(const YoungDiagram& lambda, std::size_t m, std::size_t ell) {
    if (ell > m) throw DomainError("diagram box needs ell <= m");
    if (lambda.parts.size() != ell) throw DomainError("diagram has " + std::to_string(lambda.parts.size()) + " parts, expected " + std::to_string(ell));
    for (std::size_t i = 0; i < ell; ++i) {
        if (lambda.parts[i] > m - ell) throw DomainError("diagram part exceeds box width " + std::to_string(m - ell));
        if (i > 0 && lambda.parts[i] > lambda.parts[i - 1]) throw DomainError("diagram parts must be weakly decreasing");
    }
    std::string s(ell == 0 ? m : m - ell - lambda.parts[0], 'Y');
    Word tail = diagramTail(lambda);
    return Word(s + tail.letters());
}

Word diagramTail(const YoungDiagram& lambda) {
    std::string s;
    const auto& p = lambda.parts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += 'X';
        std::size_t next = i + 1 < p.size() ? p[i + 1] : 0;
        s.append(p[i] - next, 'Y');
    }
    return Word(std::move(s));
}

YoungDiagram diagramFromWord(const Word& w) {
    YoungDiagram d;
    std::size_t ys = w.countY();
    std::size_t seenY = 0;
    for (char c : w.letters()) {
        if (c == 'Y') {
            ++seenY;
        } else {
            d.parts.push_back(ys - seenY);
        }
    }
    d.height = d.parts.size();
    d.width = ys;
    return d;
}

std::vector<YoungDiagram> enumerateDiagrams(std::size_t m, std::size_t ell) {
    if (ell > m) throw DomainError("enumerateDiagrams needs ell <= m");
    std::vector<YoungDiagram> out;
    YoungDiagram cur;
    cur.width = m - ell;
    cur.height = ell;
    cur.parts.assign(ell, 0);
    // parts[i] ranges over [0, parts[i-1]]; emit in lexicographic order.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t bound) {
        if (i == ell) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= bound; ++v) {
            cur.parts[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, m - ell);
    return out;
}

}  // namespace normord
