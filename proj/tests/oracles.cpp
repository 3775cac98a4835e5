#include "oracles.hpp"

#include <stdexcept>

namespace theta::oracle {

namespace {

void extend(std::vector<std::vector<int>>& out, std::vector<int>& cur, int remaining,
            int max_part) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        extend(out, cur, remaining - part, part);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend(out, cur, n, n == 0 ? 1 : n);
    return out;
}

Partition collapse_brute_force(const Partition& p, const LieType& t) {
    std::vector<Partition> valid;
    for (const auto& rows : partitions_of(p.total())) {
        Partition cand{std::vector<int>(rows)};
        if (is_valid_for_type(cand, t) && dominance_leq(cand, p)) valid.push_back(cand);
    }
    if (valid.empty()) throw std::runtime_error("collapse oracle: no valid partition");
    // pick the dominance maximum and check it dominates every candidate
    Partition best = valid[0];
    for (const auto& c : valid)
        if (dominance_leq(best, c)) best = c;
    for (const auto& c : valid)
        if (!dominance_leq(c, best))
            throw std::runtime_error("collapse oracle: dominance maximum is not unique for " +
                                     p.to_string());
    return best;
}

}  // namespace theta::oracle
