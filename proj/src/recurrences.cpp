#include "normord/recurrences.hpp"

#include "normord/board.hpp"
#include "normord/placements.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace normord {

std::string RecurrenceReport::summary() const {
    std::string out = name + ": " + std::to_string(checked) + " identities checked, " +
                      std::to_string(violations.size()) + " violations";
    if (!violations.empty()) {
        const auto& v = violations.front();
        out += "; first at " + v.where + ": lhs " + v.lhs.toString() + ", rhs " + v.rhs.toString();
    }
    return out;
}

namespace {

/// q^e * value, where a negative e is only legal if value vanishes.
CoeffPoly qShift(int e, const CoeffPoly& value) {
    if (value.isZero()) return value;
    if (e < 0) throw std::logic_error("negative q power against a nonzero table entry");
    return value.shiftQ(static_cast<unsigned>(e));
}

/// [arg]_q * value, with the same convention.
CoeffPoly qIntTimes(int arg, const CoeffPoly& value) {
    if (value.isZero()) return value;
    if (arg < 0) throw std::logic_error("negative q-integer against a nonzero table entry");
    return qInt(arg, value.ringS()) * value;
}

using Entry = std::function<CoeffPoly(int, int, int)>;

/// Checks lhs(n+1, j, k) == rhs(n, j, k) for n+1 <= maxN over a window of
/// (j, k) that covers the support of row n+1 with a margin.
RecurrenceReport runCheck(std::string name, int maxN, int jSpan, const Entry& lhs, const Entry& rhs) {
    RecurrenceReport rep;
    rep.name = std::move(name);
    for (int n = 0; n + 1 <= maxN; ++n) {
        const int jMax = jSpan * (n + 1) + 1;
        for (int j = 0; j <= jMax; ++j) {
            for (int k = 0; k <= n + 2; ++k) {
                CoeffPoly l = lhs(n + 1, j, k);
                CoeffPoly r = rhs(n, j, k);
                ++rep.checked;
                if (!(l == r)) {
                    rep.violations.push_back({"n=" + std::to_string(n + 1) + " j=" + std::to_string(j) + " k=" + std::to_string(k), l, r});
                }
            }
        }
    }
    return rep;
}

Entry tableEntry(const Family& f, int maxN) {
    auto table = familyTable(f, maxN);
    return [table](int n, int j, int k) { return table->at(n, j, k); };
}

}  // namespace

RecurrenceReport checkOreStirlingRecurrence(int maxN) {
    Entry S = tableEntry(parseFamily("ore-stirling"), maxN);
    const CoeffPoly mu = CoeffPoly::alpha(1, 0), nu = CoeffPoly::alpha(1, 1);
    return runCheck("ore-stirling recurrence", maxN, 1, S, [&](int n, int j, int k) {
        return qShift(j - 1, S(n, j - 1, k - 1)) + mu * qIntTimes(j, S(n, j, k)) + nu * qIntTimes(j - 1, S(n, j - 1, k));
    });
}

RecurrenceReport checkOreStirlingRecurrenceAtQ1(int maxN) {
    Entry raw = tableEntry(parseFamily("ore-stirling"), maxN);
    const std::optional<mpz_class> one = mpz_class(1);
    Entry S = [raw, one](int n, int j, int k) { return raw(n, j, k).specialize(one, {}); };
    const CoeffPoly mu = CoeffPoly::alpha(1, 0), nu = CoeffPoly::alpha(1, 1);
    return runCheck("ore-stirling recurrence at q=1", maxN, 1, S, [&](int n, int j, int k) {
        return S(n, j - 1, k - 1) + (mu * S(n, j, k)).scaled(j) + (nu * S(n, j - 1, k)).scaled(j - 1);
    });
}

RecurrenceReport checkOreLahRecurrence(int maxN) {
    Entry L = tableEntry(parseFamily("ore-lah"), maxN);
    const CoeffPoly mu = CoeffPoly::alpha(1, 0), nu = CoeffPoly::alpha(1, 1);
    return runCheck("ore-lah recurrence", maxN, 2, L, [&](int n, int j, int k) {
        return qShift(j - 2, L(n, j - 2, k - 1)) + mu * qIntTimes(j - 1, L(n, j - 1, k)) + nu * qIntTimes(j - 2, L(n, j - 2, k));
    });
}

namespace {

RecurrenceReport scherkStep(const std::string& name, const Family& f, int maxN) {
    const int r = f.jump();
    const int s = f.ringS();
    Entry S = tableEntry(f, maxN);
    std::vector<CoeffPoly> alpha;
    for (int l = 0; l <= s; ++l) alpha.push_back(CoeffPoly::alpha(s, l));
    return runCheck(name, maxN, r + std::max(s - 1, 0), S, [&](int n, int j, int k) {
        CoeffPoly acc = qShift(j - r, S(n, j - r, k - 1));
        for (int l = 0; l <= s; ++l) {
            const int idx = j - l - (r - 1);
            acc += alpha[static_cast<std::size_t>(l)] * qIntTimes(idx, S(n, idx, k));
        }
        return acc;
    });
}

}  // namespace

RecurrenceReport checkPolyStirlingRecurrence(int s, int maxN) {
    return scherkStep("poly-stirling recurrence (s=" + std::to_string(s) + ")", parseFamily("poly-stirling", 1, s), maxN);
}

RecurrenceReport checkPolyLahRecurrence(int s, int maxN) {
    return scherkStep("poly-lah recurrence (s=" + std::to_string(s) + ")", parseFamily("poly-lah", 1, s), maxN);
}

RecurrenceReport checkPolyScherkRecurrence(int r, int s, int maxN) {
    return scherkStep("poly-scherk recurrence (r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")",
                      parseFamily("poly-scherk", r, s), maxN);
}

RecurrenceReport checkQLahSpecializations(int maxN) {
    Entry L = tableEntry(parseFamily("ore-lah"), maxN);
    auto at = [&](int mu, int nu) {
        std::vector<std::optional<mpz_class>> a{mpz_class(mu), mpz_class(nu)};
        return [L, a](int n, int j, int k) { return L(n, j, k).specialize(std::nullopt, a); };
    };
    Entry withMu = at(1, 0), withNu = at(0, 1);
    RecurrenceReport rep;
    rep.name = "q-Lah specializations";
    auto check = [&](const std::string& where, const CoeffPoly& l, const CoeffPoly& r) {
        ++rep.checked;
        if (!(l == r)) rep.violations.push_back({where, l, r});
    };
    for (int n = 0; n + 1 <= maxN; ++n) {
        for (int k = 0; k <= n + 2; ++k) {
            // L_q(n, k) = L(n; n + k, k) at mu = 1, nu = 0.
            auto Lq = [&](int nn, int kk) { return withMu(nn, nn + kk, kk); };
            check("mu=1 n=" + std::to_string(n + 1) + " k=" + std::to_string(k), Lq(n + 1, k),
                  qShift(n + k - 1, Lq(n, k - 1)) + qIntTimes(n + k, Lq(n, k)));
            // L(n; 2n, k) at mu = 0, nu = 1.
            auto Ls = [&](int nn, int kk) { return withNu(nn, 2 * nn, kk); };
            check("nu=1 n=" + std::to_string(n + 1) + " k=" + std::to_string(k), Ls(n + 1, k),
                  qShift(2 * n, Ls(n, k - 1)) + qIntTimes(2 * n, Ls(n, k)));
        }
    }
    return rep;
}

RecurrenceReport checkMasterRecurrence(const MasterRecurrenceOptions& opts) {
    RecurrenceReport rep;
    rep.name = "column-peeling recurrence on random Ferrers boards";
    std::mt19937_64 rng(opts.seed);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    for (int b = 0; b < opts.boards; ++b) {
        const int cols = draw(1, opts.maxColumns);
        std::vector<int> hs(static_cast<std::size_t>(cols));
        for (int& h : hs) h = draw(0, opts.maxHeight);
        std::sort(hs.begin(), hs.end());
        const int s = draw(0, opts.maxS);
        const Board board(hs);
        const Board rest = board.prefix(board.columns() - 1);
        const int lambda = board.height(board.columns() - 1);
        for (const PlacementType& k : placementTypesUpTo(s, opts.maxTotal)) {
            CoeffPoly lhs = mixedNumberSequentialMemo(board, k);
            CoeffPoly rhs(s);
            const int base = lambda + k.creationSum();
            std::string where = "board " + std::to_string(b) + " type " + k.toString();
            try {
                rhs += qShift(base, mixedNumberSequentialMemo(rest, k));
                for (int r = 0; r <= s; ++r) {
                    auto smaller = k.minus(r);
                    if (!smaller) continue;
                    rhs += CoeffPoly::alpha(s, r) * qIntTimes(base - (r - 1), mixedNumberSequentialMemo(rest, *smaller));
                }
            } catch (const std::logic_error& e) {
                rep.violations.push_back({where + " (" + e.what() + ")", lhs, rhs});
                continue;
            }
            ++rep.checked;
            if (!(lhs == rhs)) rep.violations.push_back({where, lhs, rhs});
        }
    }
    return rep;
}

RecurrenceReport checkRecurrences(const Family& f, int maxN) {
    switch (f.kind) {
        case FamilyKind::OreStirling: return checkOreStirlingRecurrence(maxN);
        case FamilyKind::OreLah: return checkOreLahRecurrence(maxN);
        case FamilyKind::OreScherk: return scherkStep("ore-scherk recurrence (r=" + std::to_string(f.r) + ")", f, maxN);
        case FamilyKind::PolyStirling: return checkPolyStirlingRecurrence(f.s, maxN);
        case FamilyKind::PolyLah: return checkPolyLahRecurrence(f.s, maxN);
        case FamilyKind::PolyScherk: return checkPolyScherkRecurrence(f.r, f.s, maxN);
    }
    return {};
}

}  // namespace normord
