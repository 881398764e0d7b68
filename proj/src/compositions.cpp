#include "normord/compositions.hpp"

#include "normord/errors.hpp"

#include <functional>

namespace normord {

std::vector<PlacementType> weakCompositions(int parts, int total) {
    std::vector<PlacementType> out;
    if (parts <= 0 || total < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j + 1 == cur.size()) {
            cur[j] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[j] = v;
            rec(j + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

std::vector<PlacementType> weakCompositions(int parts, int total, int creation) {
    std::vector<PlacementType> out;
    for (auto& k : weakCompositions(parts, total)) {
        if (k.creationSum() == creation) out.push_back(std::move(k));
    }
    return out;
}

std::vector<std::vector<int>> columnChoices(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= m - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<int> blockSizes(const std::vector<int>& pi, int m) {
    std::vector<int> sizes;
    int prev = 0;
    for (int p : pi) {
        if (p <= prev || p > m) throw DomainError("column choice must be ascending inside 1..m");
        sizes.push_back(p - prev - 1);
        prev = p;
    }
    sizes.push_back(m - prev);
    return sizes;
}

std::vector<std::vector<int>> boundedCompositions(int ell, const std::vector<int>& bounds) {
    std::vector<std::vector<int>> out;
    if (ell < 0) return out;
    std::vector<int> cur(bounds.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j == bounds.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(left, bounds[j]); ++v) {
            cur[j] = v;
            rec(j + 1, left - v);
        }
    };
    rec(0, ell);
    return out;
}

}  // namespace normord
