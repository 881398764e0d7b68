#pragma once

#include "normord/board.hpp"
#include "normord/coeff_poly.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normord {

/// Rook counts by weight: counts()[j] rooks of weight j, j = 0..s.
class PlacementType {
public:
    PlacementType() = default;
    explicit PlacementType(std::vector<int> counts);
    static PlacementType zero(int s);
    /// (k, ell) in the s = 1 ring: k weight-0 rooks, ell files.
    static PlacementType ore(int k, int ell) { return PlacementType({k, ell}); }

    int s() const { return static_cast<int>(counts_.size()) - 1; }
    const std::vector<int>& counts() const { return counts_; }
    int operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }
    int total() const;
    /// Sum of (j - 1) k_j: net rows created by the rooks.
    int creationSum() const;

    /// One fewer rook of weight r, or nullopt if there is none.
    std::optional<PlacementType> minus(int r) const;
    PlacementType plus(int r) const;

    /// alpha^k in the ring with parameter s().
    CoeffPoly alphaMonomial() const;
    std::string toString() const;

    friend bool operator==(const PlacementType&, const PlacementType&) = default;
    friend auto operator<=>(const PlacementType&, const PlacementType&) = default;

private:
    std::vector<int> counts_;
};

/// All types of length s + 1 with total at most maxTotal, in ascending order.
std::vector<PlacementType> placementTypesUpTo(int s, int maxTotal);

// ---------------------------------------------------------------------------
// Static rook/file placements (s = 1).

/// Column index right to left (as in Board), row index from the top (0 = top).
struct Cell {
    int column = 0;
    int row = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct StaticOrePlacement {
    std::vector<Cell> rooks;
    std::vector<Cell> files;
};

enum class BoxLabel { Empty, Cancelled, Rook, File };

struct BoxClassification {
    /// labels[column][row], same indexing as Cell.
    std::vector<std::vector<BoxLabel>> labels;
    int emptyCount = 0;
    int cancelledCount = 0;
    /// alpha0^{#rooks} alpha1^{#files} q^{#empty}.
    CoeffPoly weight{1};
};

/// Throws ConstraintViolation naming the broken rule, or UnsupportedBoard.
void validateStatic(const Board& b, const StaticOrePlacement& p);
BoxClassification classifyStatic(const Board& b, const StaticOrePlacement& p);
/// Board picture with "R0" rooks, "R1" files, "x" cancelled and "." empty cells.
std::string renderClassification(const Board& b, const BoxClassification& cls);

/// Visits every valid static placement of b; the weight is derived from the
/// box classification of each placement.
void forEachStaticPlacement(const Board& b,
                            const std::function<void(const StaticOrePlacement&, const BoxClassification&)>& visit);

CoeffPoly mixedNumberStatic(const Board& b, int k, int ell);
/// All nonzero m_{k,ell}(B;q), keyed by (k, ell).
std::map<std::pair<int, int>, CoeffPoly> allStaticNumbers(const Board& b);
/// Number of valid static placements (each has a nonzero weight).
std::uint64_t countStaticPlacements(const Board& b);

// ---------------------------------------------------------------------------
// Sequential placements with row creation.

/// weight < 0 means the column is left empty; position counts from the top
/// of the effective column, starting at 1.
struct SequentialDecision {
    int weight = -1;
    int position = 0;
};

struct SequentialPlacement {
    std::vector<SequentialDecision> decisions;  // right to left
    PlacementType type;
    int emptyCount = 0;
};

/// Walks every decision sequence with at most maxTotal rooks (negative: no limit).
void forEachSequentialPlacement(const Board& b, int s, int maxTotal,
                                const std::function<void(const SequentialPlacement&)>& visit);

CoeffPoly mixedNumberSequential(const Board& b, const PlacementType& k);
std::map<PlacementType, CoeffPoly> allSequentialNumbers(const Board& b, int s, int maxTotal = -1);
/// Same value as mixedNumberSequential, computed by a memoized right-to-left
/// walk over (column, rooks placed so far); polynomial in the board size.
CoeffPoly mixedNumberSequentialMemo(const Board& b, const PlacementType& k);

// ---------------------------------------------------------------------------
// Column-peeling recurrence.

struct DpResult {
    CoeffPoly value;
    /// Set when the board is not Ferrers.
    bool outOfModel = false;
};

struct DpTable {
    std::map<PlacementType, CoeffPoly> numbers;  // nonzero entries only
    bool outOfModel = false;
};

DpResult mixedNumberDP(const Board& b, const PlacementType& k);
DpTable allMixedNumbersDP(const Board& b, int s, int maxTotal = -1);

/// (r^{(weight)}_k(B;q))_{k = 0..columns} in the ring s = weight.
std::vector<CoeffPoly> rookNumbers(const Board& b, int weight);

}  // namespace normord
