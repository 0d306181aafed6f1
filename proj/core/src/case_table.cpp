#include "outf3/case_table.hpp"

#include <algorithm>
#include <sstream>

#include "outf3/errors.hpp"

namespace outf3::graphact {

namespace {

int lowest_valence(const CaseRow& row) {
    for (int val = 2; val <= 10; ++val)
        if (row.v(val) > 0) return val;
    return 11;
}

int second_valence(const CaseRow& row) {
    bool first_seen = false;
    for (int val = 2; val <= 10; ++val) {
        if (row.v(val) == 0) continue;
        if (first_seen) return val;
        first_seen = true;
    }
    return 0;
}

// Table order: ascending lowest valence; within a block, descending count of
// that valence; a two-valence row precedes the single-valence row it ties
// with.
bool row_less(const CaseRow& a, const CaseRow& b) {
    int la = lowest_valence(a), lb = lowest_valence(b);
    if (la != lb) return la < lb;
    if (a.v(la) != b.v(lb)) return a.v(la) > b.v(lb);
    int sa = second_valence(a), sb = second_valence(b);
    if ((sa != 0) != (sb != 0)) return sa != 0;
    if (sa != sb) return sa < sb;
    if (sa != 0 && a.v(sa) != b.v(sb)) return a.v(sa) > b.v(sb);
    return false;
}

}  // namespace

std::vector<CaseRow> enumerate_case_table(int rank_bound, int group_order, bool reduced) {
    if (rank_bound < 1)
        throw PreconditionError("rank bound must be at least 1");
    const int budget = 2 * (rank_bound - 1);

    auto weight = [](int valence) { return valence == 2 ? 2 : valence - 2; };

    std::vector<CaseRow> rows;
    // Single nonzero valence.
    for (int val = 2; val <= 10; ++val) {
        for (int count = 1; count * weight(val) <= budget; ++count) {
            if (val % 2 == 1 && count % 2 == 1) continue;  // odd valence needs an even count
            CaseRow row;
            row.valences[static_cast<std::size_t>(val - 2)] = count;
            rows.push_back(row);
        }
    }
    // Two nonzero valences with the balance rule i v_i = j v_j.
    for (int lo = 2; lo <= 10; ++lo)
        for (int hi = lo + 1; hi <= 10; ++hi)
            for (int chi = 1;; ++chi) {
                // counts: v_hi = chi implies v_lo = hi*chi/lo when integral
                if ((hi * chi) % lo != 0) continue;
                int clo = hi * chi / lo;
                if (clo * weight(lo) + chi * weight(hi) > budget) break;
                CaseRow row;
                row.valences[static_cast<std::size_t>(lo - 2)] = clo;
                row.valences[static_cast<std::size_t>(hi - 2)] = chi;
                rows.push_back(row);
            }

    for (CaseRow& row : rows) {
        int incidences = 0, vertices = 0;
        for (int val = 2; val <= 10; ++val) {
            incidences += val * row.v(val);
            vertices += row.v(val);
        }
        row.edges = incidences / 2;
        row.rank = row.edges - vertices + 1;
    }

    std::sort(rows.begin(), rows.end(), row_less);
    for (std::size_t k = 0; k < rows.size(); ++k) rows[k].case_number = static_cast<int>(k) + 1;

    if (!reduced) return rows;

    std::vector<CaseRow> kept;
    for (const CaseRow& row : rows) {
        if (row.edges < 3 || row.rank < 2) continue;
        if (group_order % row.edges != 0) continue;
        kept.push_back(row);
    }
    return kept;
}

std::string case_table_csv(const std::vector<CaseRow>& rows) {
    std::ostringstream out;
    out << "case,v2,v3,v4,v5,v6,v7,v8,v9,v10,edges,rank\n";
    for (const CaseRow& row : rows) {
        out << row.case_number;
        for (int val = 2; val <= 10; ++val) out << "," << row.v(val);
        out << "," << row.edges << "," << row.rank << "\n";
    }
    return out.str();
}

nlohmann::json case_table_json(const std::vector<CaseRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CaseRow& row : rows) {
        nlohmann::json entry;
        entry["case"] = row.case_number;
        for (int val = 2; val <= 10; ++val) entry["v" + std::to_string(val)] = row.v(val);
        entry["edges"] = row.edges;
        entry["rank"] = row.rank;
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace outf3::graphact
