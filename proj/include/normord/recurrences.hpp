#pragma once

#include "normord/coeff_poly.hpp"
#include "normord/families.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace normord {

struct RecurrenceViolation {
    std::string where;  // e.g. "n=3 j=2 k=1"
    CoeffPoly lhs;
    CoeffPoly rhs;
};

struct RecurrenceReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<RecurrenceViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// S(n+1;j,k) = q^{j-1} S(n;j-1,k-1) + mu [j] S(n;j,k) + nu [j-1] S(n;j-1,k), n+1 <= maxN.
RecurrenceReport checkOreStirlingRecurrence(int maxN);
/// The same relation at q = 1, where [j] becomes j.
RecurrenceReport checkOreStirlingRecurrenceAtQ1(int maxN);
/// L(n+1;j,k) = q^{j-2} L(n;j-2,k-1) + mu [j-1] L(n;j-1,k) + nu [j-2] L(n;j-2,k).
RecurrenceReport checkOreLahRecurrence(int maxN);
/// S(n+1;j,k) = q^{j-1} S(n;j-1,k-1) + sum_r alpha_r [j-r] S(n;j-r,k).
RecurrenceReport checkPolyStirlingRecurrence(int s, int maxN);
/// L(n+1;j,k) = q^{j-2} L(n;j-2,k-1) + sum_r alpha_r [j-r-1] L(n;j-r-1,k).
RecurrenceReport checkPolyLahRecurrence(int s, int maxN);
/// S(n+1;j,k) = q^{j-r} S(n;j-r,k-1) + sum_l alpha_l [j-l-(r-1)] S(n;j-l-(r-1),k).
RecurrenceReport checkPolyScherkRecurrence(int r, int s, int maxN);
/// q-Lah rows from the Ore-Lah table at (mu, nu) = (1, 0) and (0, 1).
RecurrenceReport checkQLahSpecializations(int maxN);

struct MasterRecurrenceOptions {
    int boards = 50;
    std::uint64_t seed = 1;
    int maxColumns = 10;
    int maxHeight = 8;
    int maxTotal = 4;
    int maxS = 3;
};

/// Column-peeling recurrence m_k(B_n) = q^{h+c(k)} m_k(B_{n-1})
///   + sum_r alpha_r [h + c(k) - (r-1)] m_{k - e_r}(B_{n-1}),
/// with both sides from the memoized sequential walk, on random Ferrers boards.
RecurrenceReport checkMasterRecurrence(const MasterRecurrenceOptions& opts);

/// The family's own recurrence.
RecurrenceReport checkRecurrences(const Family& f, int maxN);

}  // namespace normord
