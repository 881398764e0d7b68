#include "normord/placements.hpp"

#include "normord/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace normord {

PlacementType::PlacementType(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw ConfigError("placement type needs at least one entry");
    for (int c : counts_) {
        if (c < 0) throw DomainError("placement type entries must be nonnegative");
    }
}

PlacementType PlacementType::zero(int s) {
    return PlacementType(std::vector<int>(static_cast<std::size_t>(s) + 1, 0));
}

int PlacementType::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int PlacementType::creationSum() const {
    int t = 0;
    for (std::size_t j = 0; j < counts_.size(); ++j) t += (static_cast<int>(j) - 1) * counts_[j];
    return t;
}

std::optional<PlacementType> PlacementType::minus(int r) const {
    if (r < 0 || r > s() || counts_[static_cast<std::size_t>(r)] == 0) return std::nullopt;
    PlacementType t = *this;
    --t.counts_[static_cast<std::size_t>(r)];
    return t;
}

PlacementType PlacementType::plus(int r) const {
    PlacementType t = *this;
    ++t.counts_.at(static_cast<std::size_t>(r));
    return t;
}

CoeffPoly PlacementType::alphaMonomial() const {
    std::vector<unsigned> e(counts_.begin(), counts_.end());
    return CoeffPoly::monomial(s(), 1, 0, e);
}

std::string PlacementType::toString() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(counts_[i]);
    }
    return out + ")";
}

std::vector<PlacementType> placementTypesUpTo(int s, int maxTotal) {
    std::vector<PlacementType> out;
    std::vector<int> cur(static_cast<std::size_t>(s) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[j] = v;
            rec(j + 1, left - v);
        }
        cur[j] = 0;
    };
    if (maxTotal >= 0) rec(0, maxTotal);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void requireFerrers(const Board& b, const char* what) {
    if (!b.isFerrers()) throw UnsupportedBoard(std::string(what) + " requires a Ferrers board");
}

/// Geometric classification, assuming the placement is valid.
BoxClassification classifyUnchecked(const Board& b, const StaticOrePlacement& p) {
    BoxClassification cls;
    cls.labels.resize(b.columns());
    for (std::size_t c = 0; c < b.columns(); ++c) cls.labels[c].assign(static_cast<std::size_t>(b.height(c)), BoxLabel::Empty);
    auto mark = [&](int c, int r) {
        auto& lab = cls.labels[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        if (lab == BoxLabel::Empty) lab = BoxLabel::Cancelled;
    };
    for (const Cell& rook : p.rooks) {
        for (int r = 0; r < rook.row; ++r) mark(rook.column, r);
        for (std::size_t c = static_cast<std::size_t>(rook.column) + 1; c < b.columns(); ++c) {
            if (rook.row < b.height(c)) mark(static_cast<int>(c), rook.row);
        }
    }
    for (const Cell& file : p.files) {
        for (int r = 0; r < file.row; ++r) mark(file.column, r);
    }
    for (const Cell& rook : p.rooks) cls.labels[static_cast<std::size_t>(rook.column)][static_cast<std::size_t>(rook.row)] = BoxLabel::Rook;
    for (const Cell& file : p.files) cls.labels[static_cast<std::size_t>(file.column)][static_cast<std::size_t>(file.row)] = BoxLabel::File;
    for (const auto& col : cls.labels) {
        for (BoxLabel l : col) {
            if (l == BoxLabel::Empty) ++cls.emptyCount;
            if (l == BoxLabel::Cancelled) ++cls.cancelledCount;
        }
    }
    cls.weight = CoeffPoly::monomial(1, 1, static_cast<unsigned>(cls.emptyCount),
                                     {static_cast<unsigned>(p.rooks.size()), static_cast<unsigned>(p.files.size())});
    return cls;
}

std::string cellText(const Cell& c) {
    return "(column " + std::to_string(c.column) + ", row " + std::to_string(c.row) + ")";
}

}  // namespace

void validateStatic(const Board& b, const StaticOrePlacement& p) {
    requireFerrers(b, "static placement");
    auto inside = [&](const Cell& c) {
        return c.column >= 0 && static_cast<std::size_t>(c.column) < b.columns() && c.row >= 0 && c.row < b.height(static_cast<std::size_t>(c.column));
    };
    for (const Cell& c : p.rooks) {
        if (!inside(c)) throw ConstraintViolation("cell-outside-board", "rook at " + cellText(c));
    }
    for (const Cell& c : p.files) {
        if (!inside(c)) throw ConstraintViolation("cell-outside-board", "file at " + cellText(c));
    }
    for (std::size_t i = 0; i < p.rooks.size(); ++i) {
        for (std::size_t j = i + 1; j < p.rooks.size(); ++j) {
            if (p.rooks[i].row == p.rooks[j].row) throw ConstraintViolation("rook-row-conflict", "rooks at " + cellText(p.rooks[i]) + " and " + cellText(p.rooks[j]));
            if (p.rooks[i].column == p.rooks[j].column) throw ConstraintViolation("rook-column-conflict", "rooks at " + cellText(p.rooks[i]) + " and " + cellText(p.rooks[j]));
        }
    }
    for (std::size_t i = 0; i < p.files.size(); ++i) {
        for (std::size_t j = i + 1; j < p.files.size(); ++j) {
            if (p.files[i].column == p.files[j].column) throw ConstraintViolation("file-column-conflict", "files at " + cellText(p.files[i]) + " and " + cellText(p.files[j]));
        }
    }
    for (const Cell& f : p.files) {
        for (const Cell& r : p.rooks) {
            if (f.column == r.column) throw ConstraintViolation("file-rook-column-conflict", "file at " + cellText(f) + ", rook at " + cellText(r));
            if (f.row == r.row && f.column > r.column) throw ConstraintViolation("file-left-of-rook", "file at " + cellText(f) + ", rook at " + cellText(r));
        }
    }
}

BoxClassification classifyStatic(const Board& b, const StaticOrePlacement& p) {
    validateStatic(b, p);
    return classifyUnchecked(b, p);
}

std::string renderClassification(const Board& b, const BoxClassification& cls) {
    return renderBoard(b, [&](std::size_t c, int r) -> std::string {
        switch (cls.labels.at(c).at(static_cast<std::size_t>(r))) {
            case BoxLabel::Rook: return "R0";
            case BoxLabel::File: return "R1";
            case BoxLabel::Cancelled: return "x";
            case BoxLabel::Empty: break;
        }
        return ".";
    });
}

void forEachStaticPlacement(const Board& b,
                            const std::function<void(const StaticOrePlacement&, const BoxClassification&)>& visit) {
    requireFerrers(b, "static placement");
    std::vector<char> rookRow(static_cast<std::size_t>(b.maxHeight()), 0);
    StaticOrePlacement cur;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == b.columns()) {
            visit(cur, classifyUnchecked(b, cur));
            return;
        }
        rec(c + 1);
        const int col = static_cast<int>(c);
        for (int row = 0; row < b.height(c); ++row) {
            if (rookRow[static_cast<std::size_t>(row)]) continue;
            rookRow[static_cast<std::size_t>(row)] = 1;
            cur.rooks.push_back({col, row});
            rec(c + 1);
            cur.rooks.pop_back();
            rookRow[static_cast<std::size_t>(row)] = 0;
            cur.files.push_back({col, row});
            rec(c + 1);
            cur.files.pop_back();
        }
    };
    rec(0);
}

CoeffPoly mixedNumberStatic(const Board& b, int k, int ell) {
    CoeffPoly total(1);
    if (k < 0 || ell < 0) return total;
    forEachStaticPlacement(b, [&](const StaticOrePlacement& p, const BoxClassification& cls) {
        if (static_cast<int>(p.rooks.size()) == k && static_cast<int>(p.files.size()) == ell) total += cls.weight;
    });
    return total;
}

std::map<std::pair<int, int>, CoeffPoly> allStaticNumbers(const Board& b) {
    std::map<std::pair<int, int>, CoeffPoly> out;
    forEachStaticPlacement(b, [&](const StaticOrePlacement& p, const BoxClassification& cls) {
        auto key = std::make_pair(static_cast<int>(p.rooks.size()), static_cast<int>(p.files.size()));
        out.try_emplace(key, CoeffPoly(1)).first->second += cls.weight;
    });
    return out;
}

std::uint64_t countStaticPlacements(const Board& b) {
    std::uint64_t n = 0;
    forEachStaticPlacement(b, [&](const StaticOrePlacement&, const BoxClassification&) { ++n; });
    return n;
}

// ---------------------------------------------------------------------------

namespace {

void checkEffectiveHeight(int hEff, std::size_t column) {
    if (hEff < 0) throw std::logic_error("negative effective height at column " + std::to_string(column) + " of a Ferrers board");
}

CoeffPoly polyFromTally(const std::vector<std::uint64_t>& tally, const PlacementType& k) {
    CoeffPoly qpart(k.s());
    Exponents e(static_cast<std::size_t>(k.s()) + 2, 0);
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] == 0) continue;
        e[0] = static_cast<std::uint32_t>(i);
        qpart.addTerm(e, mpz_class(std::to_string(tally[i])));
    }
    return qpart * k.alphaMonomial();
}

/// Re-embeds a polynomial in q alone (ring 0) into ring k.s() times alpha^k.
CoeffPoly attachAlpha(const CoeffPoly& qOnly, const PlacementType& k) {
    CoeffPoly out(k.s());
    Exponents e(static_cast<std::size_t>(k.s()) + 2, 0);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(k.s()); ++j) e[j + 1] = static_cast<std::uint32_t>(k.counts()[j]);
    for (const auto& [ex, c] : qOnly.terms()) {
        e[0] = ex[0];
        out.addTerm(e, c);
    }
    return out;
}

}  // namespace

void forEachSequentialPlacement(const Board& b, int s, int maxTotal,
                                const std::function<void(const SequentialPlacement&)>& visit) {
    requireFerrers(b, "sequential placement");
    if (s < 0) throw ConfigError("s must be nonnegative");
    SequentialPlacement cur;
    cur.decisions.resize(b.columns());
    std::vector<int> counts(static_cast<std::size_t>(s) + 1, 0);
    const int limit = maxTotal < 0 ? static_cast<int>(b.columns()) : maxTotal;
    std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t c, int created, int placed, int empties) {
        if (c == b.columns()) {
            cur.type = PlacementType(counts);
            cur.emptyCount = empties;
            visit(cur);
            return;
        }
        const int hEff = b.height(c) + created;
        checkEffectiveHeight(hEff, c);
        cur.decisions[c] = {-1, 0};
        rec(c + 1, created, placed, empties + hEff);
        if (placed == limit) return;
        for (int r = 0; r <= s; ++r) {
            ++counts[static_cast<std::size_t>(r)];
            for (int p = 1; p <= hEff; ++p) {
                cur.decisions[c] = {r, p};
                rec(c + 1, created + r - 1, placed + 1, empties + hEff - p);
            }
            --counts[static_cast<std::size_t>(r)];
        }
    };
    rec(0, 0, 0, 0);
}

CoeffPoly mixedNumberSequential(const Board& b, const PlacementType& k) {
    requireFerrers(b, "sequential placement");
    const int s = k.s();
    std::vector<int> left = k.counts();
    int leftTotal = k.total();
    std::vector<std::uint64_t> tally;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t c, int created, int empties) {
        const std::size_t remainingCols = b.columns() - c;
        if (static_cast<std::size_t>(leftTotal) > remainingCols) return;
        if (c == b.columns()) {
            if (tally.size() <= static_cast<std::size_t>(empties)) tally.resize(static_cast<std::size_t>(empties) + 1, 0);
            ++tally[static_cast<std::size_t>(empties)];
            return;
        }
        const int hEff = b.height(c) + created;
        checkEffectiveHeight(hEff, c);
        rec(c + 1, created, empties + hEff);
        for (int r = 0; r <= s; ++r) {
            if (left[static_cast<std::size_t>(r)] == 0) continue;
            --left[static_cast<std::size_t>(r)];
            --leftTotal;
            for (int p = 1; p <= hEff; ++p) rec(c + 1, created + r - 1, empties + hEff - p);
            ++leftTotal;
            ++left[static_cast<std::size_t>(r)];
        }
    };
    rec(0, 0, 0);
    return polyFromTally(tally, k);
}

std::map<PlacementType, CoeffPoly> allSequentialNumbers(const Board& b, int s, int maxTotal) {
    std::map<PlacementType, std::vector<std::uint64_t>> tallies;
    forEachSequentialPlacement(b, s, maxTotal, [&](const SequentialPlacement& p) {
        auto& t = tallies[p.type];
        if (t.size() <= static_cast<std::size_t>(p.emptyCount)) t.resize(static_cast<std::size_t>(p.emptyCount) + 1, 0);
        ++t[static_cast<std::size_t>(p.emptyCount)];
    });
    std::map<PlacementType, CoeffPoly> out;
    for (const auto& [type, tally] : tallies) out.emplace(type, polyFromTally(tally, type));
    return out;
}

CoeffPoly mixedNumberSequentialMemo(const Board& b, const PlacementType& k) {
    requireFerrers(b, "sequential placement");
    const int s = k.s();
    std::map<std::pair<std::size_t, std::vector<int>>, CoeffPoly> memo;
    // Weighted count of completions for columns c.. given the rooks placed so far.
    std::function<CoeffPoly(std::size_t, const std::vector<int>&)> walk = [&](std::size_t c, const std::vector<int>& used) -> CoeffPoly {
        int remaining = 0, created = 0;
        for (int j = 0; j <= s; ++j) {
            remaining += k[j] - used[static_cast<std::size_t>(j)];
            created += (j - 1) * used[static_cast<std::size_t>(j)];
        }
        if (static_cast<std::size_t>(remaining) > b.columns() - c) return CoeffPoly(0);
        if (c == b.columns()) return CoeffPoly::one(0);
        auto key = std::make_pair(c, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int hEff = b.height(c) + created;
        checkEffectiveHeight(hEff, c);
        CoeffPoly acc = walk(c + 1, used).shiftQ(static_cast<unsigned>(hEff));
        std::vector<int> next = used;
        for (int r = 0; r <= s; ++r) {
            if (used[static_cast<std::size_t>(r)] == k[r] || hEff == 0) continue;
            ++next[static_cast<std::size_t>(r)];
            CoeffPoly tail = walk(c + 1, next);
            if (!tail.isZero()) {
                for (int p = 1; p <= hEff; ++p) acc += tail.shiftQ(static_cast<unsigned>(hEff - p));
            }
            --next[static_cast<std::size_t>(r)];
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };
    CoeffPoly qOnly = walk(0, std::vector<int>(static_cast<std::size_t>(s) + 1, 0));
    return attachAlpha(qOnly, k);
}

// ---------------------------------------------------------------------------

namespace {

class ColumnPeeling {
public:
    explicit ColumnPeeling(const Board& b) : b_(b), ferrers_(b.isFerrers()) {}

    /// m_k(B_i; q) with alpha factors stripped; ring 0.
    const CoeffPoly& value(std::size_t i, const PlacementType& k) {
        auto key = std::make_pair(i, k.counts());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        CoeffPoly v = compute(i, k);
        return memo_.emplace(std::move(key), std::move(v)).first->second;
    }

private:
    CoeffPoly compute(std::size_t i, const PlacementType& k) {
        if (k.total() > static_cast<int>(i)) return CoeffPoly(0);
        if (i == 0) return CoeffPoly::one(0);
        if (k.total() == 0) return CoeffPoly::qPower(0, static_cast<unsigned>(b_.prefix(i).cellCount()));
        const int lambda = b_.height(i - 1);
        const int base = lambda + k.creationSum();
        CoeffPoly acc(0);
        const CoeffPoly& stay = value(i - 1, k);
        if (!stay.isZero()) {
            requireNonnegative(base, i);
            acc += stay.shiftQ(static_cast<unsigned>(base));
        }
        for (int r = 0; r <= k.s(); ++r) {
            auto smaller = k.minus(r);
            if (!smaller) continue;
            const CoeffPoly& sub = value(i - 1, *smaller);
            if (sub.isZero()) continue;
            const int arg = base - (r - 1);
            requireNonnegative(arg, i);
            acc += qInt(arg, 0) * sub;
        }
        return acc;
    }

    void requireNonnegative(int arg, std::size_t i) const {
        if (arg >= 0) return;
        if (ferrers_) throw std::logic_error("negative q-integer argument at column " + std::to_string(i - 1) + " of a Ferrers board");
        throw OutOfModel("recurrence leaves the placement model at column " + std::to_string(i - 1) + " (negative effective height)");
    }

    const Board& b_;
    bool ferrers_;
    std::map<std::pair<std::size_t, std::vector<int>>, CoeffPoly> memo_;
};

}  // namespace

DpResult mixedNumberDP(const Board& b, const PlacementType& k) {
    ColumnPeeling dp(b);
    DpResult r;
    r.value = attachAlpha(dp.value(b.columns(), k), k);
    r.outOfModel = !b.isFerrers();
    return r;
}

DpTable allMixedNumbersDP(const Board& b, int s, int maxTotal) {
    ColumnPeeling dp(b);
    DpTable t;
    t.outOfModel = !b.isFerrers();
    int limit = static_cast<int>(b.columns());
    if (maxTotal >= 0) limit = std::min(limit, maxTotal);
    for (const PlacementType& k : placementTypesUpTo(s, limit)) {
        const CoeffPoly& v = dp.value(b.columns(), k);
        if (!v.isZero()) t.numbers.emplace(k, attachAlpha(v, k));
    }
    return t;
}

std::vector<CoeffPoly> rookNumbers(const Board& b, int weight) {
    requireFerrers(b, "rook numbers");
    if (weight < 0) throw DomainError("rook weight must be nonnegative");
    ColumnPeeling dp(b);
    std::vector<CoeffPoly> out;
    for (std::size_t k = 0; k <= b.columns(); ++k) {
        std::vector<int> counts(static_cast<std::size_t>(weight) + 1, 0);
        counts.back() = static_cast<int>(k);
        PlacementType t(counts);
        out.push_back(attachAlpha(dp.value(b.columns(), t), t));
    }
    return out;
}

}  // namespace normord
