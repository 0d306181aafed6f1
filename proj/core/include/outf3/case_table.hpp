#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

namespace outf3::graphact {

/// One valence-distribution row: counts of vertices of valence 2..10, with
/// the implied edge count and rank.
struct CaseRow {
    int case_number = 0;             // position in the full table, 1-based
    std::array<int, 9> valences{};   // valences[k] counts vertices of valence k+2
    int edges = 0;
    int rank = 0;

    int v(int valence) const { return valences[static_cast<std::size_t>(valence - 2)]; }
    bool operator==(const CaseRow&) const = default;
};

/// Enumerates the valence vectors an edge-transitive quotient can carry:
/// at most two nonzero counts, the Euler-characteristic bound
///   2(rank_bound - 1) >= 2 v_2 + sum_{i>=3} (i-2) v_i,
/// the balance rule i v_i = j v_j when two valences are present, and v_i
/// even when a single odd valence is present. Edges are sum(i v_i)/2 and
/// rank is edges - vertices + 1.
///
/// With reduced set, keeps rows with at least 3 edges, rank at least 2, and
/// an edge count dividing group_order. Case numbers always refer to the full
/// table.
std::vector<CaseRow> enumerate_case_table(int rank_bound, int group_order, bool reduced);

std::string case_table_csv(const std::vector<CaseRow>& rows);
nlohmann::json case_table_json(const std::vector<CaseRow>& rows);

}  // namespace outf3::graphact
