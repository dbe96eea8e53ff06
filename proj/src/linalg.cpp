#include "tcfa/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace tcfa {

Rat sparse_entry(const SparseVec& v, int row) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& p, int r) { return p.first < r; });
    if (it != v.end() && it->first == row) return it->second;
    return Rat(0);
}

SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y) {
    if (a == 0) return x;
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            Rat c = x[i].second + a * y[j].second;
            if (c != 0) out.emplace_back(x[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& v, const Rat& a) {
    if (a == 0) return {};
    SparseVec out = v;
    for (auto& [row, c] : out) c *= a;
    return out;
}

Rat EchelonBasis::permutation_trace(const std::vector<int>& perm_inv) const {
    Rat tr = 0;
    for (size_t j = 0; j < cols.size(); ++j)
        tr += sparse_entry(cols[j], perm_inv[pivot_rows[j]]);
    return tr;
}

namespace {

// Incremental reduced column echelon. Vectors may carry an augmented tail in
// rows >= nrows which participates in column operations but never pivots.
// A lazy row -> columns occupancy index keeps back-substitution proportional
// to actual fill instead of the number of columns.
struct Reducer {
    int nrows;
    std::vector<SparseVec> echelon;
    std::map<int, int> pivot_to_col;
    std::map<int, std::vector<int>> occupancy;  // row -> candidate columns (may be stale)

    explicit Reducer(int rows) : nrows(rows) {}

    void note_rows(int col) {
        for (const auto& [row, c] : echelon[col]) {
            (void)c;
            if (row >= nrows) break;
            occupancy[row].push_back(col);
        }
    }

    // Fully reduces v against the echelon; returns the pivot row of the
    // remainder, or -1 when the real part vanished.
    int reduce(SparseVec& v) const {
        std::vector<std::pair<int, Rat>> hits;
        for (const auto& [row, c] : v) {
            if (row >= nrows) break;
            auto it = pivot_to_col.find(row);
            if (it != pivot_to_col.end()) hits.emplace_back(it->second, c);
        }
        for (const auto& [col, c] : hits) v = sparse_axpy(v, -c, echelon[col]);
        for (const auto& [row, c] : v) {
            (void)c;
            if (row >= nrows) break;
            return row;
        }
        return -1;
    }

    // Inserts v if independent; returns the reduced remainder otherwise.
    std::optional<SparseVec> insert(SparseVec v) {
        int pivot = reduce(v);
        if (pivot < 0) return v;
        Rat lead = sparse_entry(v, pivot);
        if (lead != 1) v = sparse_scale(v, Rat(1) / lead);
        int self = static_cast<int>(echelon.size());
        auto occ = occupancy.find(pivot);
        if (occ != occupancy.end()) {
            std::vector<int> candidates;
            candidates.swap(occ->second);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (int j : candidates) {
                Rat c = sparse_entry(echelon[j], pivot);
                if (c == 0) continue;  // stale entry
                echelon[j] = sparse_axpy(echelon[j], -c, v);
                note_rows(j);
            }
        }
        echelon.push_back(std::move(v));
        pivot_to_col[pivot] = self;
        note_rows(self);
        return std::nullopt;
    }

    EchelonBasis basis_without_tail() const {
        EchelonBasis b;
        b.nrows = nrows;
        b.cols.reserve(echelon.size());
        for (const auto& [pivot, idx] : pivot_to_col) {
            b.pivot_rows.push_back(pivot);
            SparseVec head;
            for (const auto& [row, c] : echelon[idx]) {
                if (row >= nrows) break;
                head.emplace_back(row, c);
            }
            b.cols.push_back(std::move(head));
        }
        return b;
    }
};

}  // namespace

ColumnReduction column_reduce(int nrows, const std::vector<SparseVec>& cols, bool want_kernel) {
    ColumnReduction out;
    Reducer red(nrows);
    std::vector<SparseVec> kernel_raw;
    for (size_t j = 0; j < cols.size(); ++j) {
        SparseVec v = cols[j];
        if (want_kernel) v.emplace_back(nrows + static_cast<int>(j), Rat(1));
        auto leftover = red.insert(std::move(v));
        if (leftover && want_kernel) {
            SparseVec kv;
            for (const auto& [row, c] : *leftover)
                if (row >= nrows) kv.emplace_back(row - nrows, c);
            kernel_raw.push_back(std::move(kv));
        }
    }
    out.image = red.basis_without_tail();
    out.rank = out.image.dim();
    if (want_kernel) {
        Reducer kred(static_cast<int>(cols.size()));
        for (auto& kv : kernel_raw) kred.insert(std::move(kv));
        out.kernel = kred.basis_without_tail();
    }
    return out;
}

}  // namespace tcfa
