#include "tcfa/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcfa/charring.hpp"

namespace tcfa {

namespace {

bool is_prime_power(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q itself prime
}

Int int_pow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Int falling_factorial(const Int& x, int terms) {
    Int r = 1;
    for (int i = 0; i < terms; ++i) r *= x - i;
    return r;
}

Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// number of set partitions of [k] whose block sizes form lambda:
// k! / (prod lambda_i! * prod m_j!)
Int set_partitions_of_type(const Partition& lambda) {
    Int count = factorial(lambda.size());
    for (int part : lambda.parts) count /= factorial(part);
    int run = 1;
    for (size_t i = 1; i <= lambda.parts.size(); ++i) {
        if (i < lambda.parts.size() && lambda.parts[i] == lambda.parts[i - 1]) {
            ++run;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    return count;
}

// point count with the prime-power restriction relaxed (used for interpolation)
Int point_count_at(const Int& qd, int k, int n) {
    Int total = 0;
    for (const auto& lambda : partitions_of_bounded(k, n - 1))
        total += set_partitions_of_type(lambda) * falling_factorial(qd, lambda.length());
    return total;
}

}  // namespace

void CountQuery::validate() const {
    if (q < 2 || q > 64 || !is_prime_power(q))
        throw std::invalid_argument("point count: q must be a prime power in [2, 64]");
    if (d < 1) throw std::invalid_argument("point count: d must be >= 1");
    if (k < 0 || k > 10) throw std::invalid_argument("point count: k must be in [0, 10]");
    if (n < 2) throw std::invalid_argument("point count: n must be >= 2");
}

Int point_count(const CountQuery& query) {
    query.validate();
    if (query.k == 0) return 1;
    return point_count_at(int_pow(query.q, query.d), query.k, query.n);
}

Int point_count_bruteforce(const CountQuery& query) {
    query.validate();
    if (query.k == 0) return 1;
    Int space = int_pow(int_pow(query.q, query.d), query.k);
    if (space > 10'000'000)
        throw std::invalid_argument("point count brute force: q^{dk} exceeds the guard");
    long long values = int_pow(query.q, query.d).get_si();
    std::vector<long long> assignment(query.k, 0);
    std::vector<int> fiber(static_cast<size_t>(values), 0);
    Int good = 0;
    while (true) {
        bool ok = true;
        for (long long v : assignment)
            if (++fiber[static_cast<size_t>(v)] >= query.n) ok = false;
        for (long long v : assignment) fiber[static_cast<size_t>(v)] = 0;
        if (ok) ++good;
        int pos = 0;
        while (pos < query.k) {
            if (++assignment[pos] < values) break;
            assignment[pos++] = 0;
        }
        if (pos == query.k) break;
    }
    return good;
}

std::map<int, Int> point_count_polynomial(int d, int k, int n) {
    if (d < 1 || k < 0 || n < 2) throw std::invalid_argument("point count polynomial: bad query");
    const int degree = d * k;
    // sample at the first degree+1 prime powers
    std::vector<int> sample;
    for (int q = 2; static_cast<int>(sample.size()) < degree + 1; ++q)
        if (is_prime_power(q)) sample.push_back(q);
    std::vector<Rat> xs, ys;
    for (int q : sample) {
        xs.emplace_back(q);
        ys.emplace_back(point_count_at(int_pow(q, d), k, n));
    }
    // Lagrange -> Newton divided differences, then expand
    const int npts = static_cast<int>(xs.size());
    std::vector<Rat> dd = ys;
    for (int level = 1; level < npts; ++level)
        for (int j = npts - 1; j >= level; --j)
            dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - level]);
    std::vector<Rat> poly{dd[npts - 1]};  // coefficients, poly[i] * q^i
    for (int j = npts - 2; j >= 0; --j) {
        poly.insert(poly.begin(), Rat(0));
        for (size_t i = 0; i + 1 < poly.size(); ++i) poly[i] -= xs[j] * poly[i + 1];
        poly[0] += dd[j];
    }
    std::map<int, Int> out;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        if (!is_integer(poly[i]))
            throw std::logic_error("point count polynomial: non-integer coefficient");
        out[static_cast<int>(i)] = poly[i].get_num();
    }
    return out;
}

Int stirling_unsigned(int k, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("stirling: need 0 <= j <= k");
    std::vector<std::vector<Int>> c(k + 1);
    for (int a = 0; a <= k; ++a) {
        c[a].assign(a + 1, 0);
        c[a][a] = 1;
        if (a == 0) continue;
        for (int b = 1; b < a; ++b)
            c[a][b] = c[a - 1][b - 1] + Int(a - 1) * c[a - 1][b];
        c[a][0] = 0;
    }
    if (k == 0) return j == 0 ? Int(1) : Int(0);
    return c[k][j];
}

// --- partition lattice homology --------------------------------------------

namespace {

using SetPartition = std::vector<std::vector<int>>;  // blocks sorted, ordered by minimum

SetPartition canonical(SetPartition p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

// all set partitions of {0..k-1} via restricted growth strings
std::vector<SetPartition> all_set_partitions(int k) {
    std::vector<SetPartition> out;
    std::vector<int> rgs(k, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        SetPartition p(blocks);
        for (int e = 0; e < k; ++e) p[rgs[e]].push_back(e);
        out.push_back(canonical(p));
        // next restricted growth string
        int pos = k - 1;
        for (; pos > 0; --pos) {
            int maxv = 0;
            for (int e = 0; e < pos; ++e) maxv = std::max(maxv, rgs[e]);
            if (rgs[pos] <= maxv) break;
        }
        if (pos == 0) break;
        ++rgs[pos];
        for (int e = pos + 1; e < k; ++e) rgs[e] = 0;
    }
    return out;
}

bool refines(const SetPartition& fine, const SetPartition& coarse) {
    for (const auto& fb : fine) {
        bool inside = false;
        for (const auto& cb : coarse) {
            if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

SetPartition relabel_partition(const SetPartition& p, const std::vector<int>& perm) {
    SetPartition out;
    out.reserve(p.size());
    for (const auto& b : p) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int e : b) nb.push_back(perm[e]);
        out.push_back(std::move(nb));
    }
    return canonical(out);
}

// dense reduced row-echelon style kernel + pivot-trace machinery, local to
// the oracle so it stays independent of the bar pipeline's linear algebra
struct DenseKernel {
    std::vector<std::vector<Rat>> basis;  // reduced: basis[j][pivot[i]] = delta_ij
    std::vector<int> pivots;
};

DenseKernel dense_kernel(const std::vector<std::vector<Rat>>& columns, int nrows) {
    int ncols = static_cast<int>(columns.size());
    // eliminate columns carrying an identity tail
    std::vector<std::vector<Rat>> work(ncols, std::vector<Rat>(nrows + ncols, 0));
    for (int j = 0; j < ncols; ++j) {
        for (int i = 0; i < nrows; ++i) work[j][i] = columns[j][i];
        work[j][nrows + j] = 1;
    }
    std::vector<int> pivot_of_col(ncols, -1);
    std::vector<bool> row_used(nrows, false);
    for (int j = 0; j < ncols; ++j) {
        for (int jj = 0; jj < j; ++jj) {
            if (pivot_of_col[jj] < 0) continue;
            Rat c = work[j][pivot_of_col[jj]];
            if (c == 0) continue;
            for (int i = 0; i < nrows + ncols; ++i) work[j][i] -= c * work[jj][i];
        }
        int pivot = -1;
        for (int i = 0; i < nrows; ++i)
            if (work[j][i] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        Rat lead = work[j][pivot];
        for (int i = 0; i < nrows + ncols; ++i) work[j][i] /= lead;
        pivot_of_col[j] = pivot;
        row_used[pivot] = true;
    }
    // kernel vectors: tails of the vanished columns; then reduce them
    std::vector<std::vector<Rat>> kernel;
    for (int j = 0; j < ncols; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        kernel.emplace_back(work[j].begin() + nrows, work[j].end());
    }
    DenseKernel out;
    for (auto& v : kernel) {
        for (size_t b = 0; b < out.basis.size(); ++b) {
            Rat c = v[out.pivots[b]];
            if (c == 0) continue;
            for (int i = 0; i < ncols; ++i) v[i] -= c * out.basis[b][i];
        }
        int pivot = -1;
        for (int i = 0; i < ncols; ++i)
            if (v[i] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        Rat lead = v[pivot];
        for (int i = 0; i < ncols; ++i) v[i] /= lead;
        for (size_t b = 0; b < out.basis.size(); ++b) {
            Rat c = out.basis[b][pivot];
            if (c == 0) continue;
            for (int i = 0; i < ncols; ++i) out.basis[b][i] -= c * v[i];
        }
        out.basis.push_back(std::move(v));
        out.pivots.push_back(pivot);
    }
    return out;
}

}  // namespace

SymFunc partition_lattice_character(int k) {
    if (k < 2 || k > 5)
        throw std::invalid_argument("partition lattice character: need 2 <= k <= 5");
    if (k == 2) return SymFunc::h(2);  // proper part empty; degenerate base case, dim 1

    // proper part: partitions with 2..k-1 blocks, grouped by block count
    std::vector<SetPartition> proper;
    for (const auto& p : all_set_partitions(k)) {
        int blocks = static_cast<int>(p.size());
        if (blocks >= 2 && blocks <= k - 1) proper.push_back(p);
    }
    std::sort(proper.begin(), proper.end());
    auto index_of = [&](const SetPartition& p) {
        auto it = std::lower_bound(proper.begin(), proper.end(), p);
        return static_cast<int>(it - proper.begin());
    };

    // chains by length; a chain is a strictly increasing (refinement) tuple
    // of vertex indices with strictly decreasing block counts
    const int top_len = k - 2;  // vertices per maximal chain
    std::vector<std::vector<std::vector<int>>> chains(top_len + 1);
    for (size_t v = 0; v < proper.size(); ++v) chains[1].push_back({static_cast<int>(v)});
    for (int len = 2; len <= top_len; ++len) {
        for (const auto& ch : chains[len - 1]) {
            const SetPartition& last = proper[ch.back()];
            for (size_t v = 0; v < proper.size(); ++v) {
                const SetPartition& cand = proper[v];
                if (cand.size() >= last.size()) continue;
                if (!refines(last, cand)) continue;
                auto next = ch;
                next.push_back(static_cast<int>(v));
                chains[len].push_back(std::move(next));
            }
        }
        std::sort(chains[len].begin(), chains[len].end());
    }

    const auto& tops = chains[top_len];
    const auto& faces = chains[top_len - 1];
    auto face_index = [&](const std::vector<int>& f) {
        auto it = std::lower_bound(faces.begin(), faces.end(), f);
        return static_cast<int>(it - faces.begin());
    };

    // boundary of the top chains; for k=3 the "faces" level is the empty
    // simplex of the reduced complex (augmentation)
    int nrows = (top_len == 1) ? 1 : static_cast<int>(faces.size());
    std::vector<std::vector<Rat>> boundary(tops.size(), std::vector<Rat>(nrows, 0));
    for (size_t j = 0; j < tops.size(); ++j) {
        if (top_len == 1) {
            boundary[j][0] = 1;  // augmentation
            continue;
        }
        for (int drop = 0; drop < top_len; ++drop) {
            std::vector<int> f;
            for (int t = 0; t < top_len; ++t)
                if (t != drop) f.push_back(tops[j][t]);
            boundary[j][face_index(f)] += (drop % 2 == 0) ? 1 : -1;
        }
    }

    DenseKernel ker = dense_kernel(boundary, nrows);

    // traces of conjugacy class representatives via pivot lookups
    const auto& mus = partitions_of(k);
    std::vector<Rat> traces;
    for (const auto& mu : mus) {
        std::vector<int> perm(k);
        int start = 0;
        for (int len : mu.parts) {
            for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
            start += len;
        }
        // top-chain permutation under relabeling (rank order is preserved)
        std::vector<int> chain_perm(tops.size());
        for (size_t j = 0; j < tops.size(); ++j) {
            std::vector<int> image;
            image.reserve(tops[j].size());
            for (int v : tops[j]) image.push_back(index_of(relabel_partition(proper[v], perm)));
            auto it = std::lower_bound(tops.begin(), tops.end(), image);
            chain_perm[j] = static_cast<int>(it - tops.begin());
        }
        std::vector<int> inv(chain_perm.size());
        for (size_t j = 0; j < chain_perm.size(); ++j) inv[chain_perm[j]] = static_cast<int>(j);
        Rat tr = 0;
        for (size_t b = 0; b < ker.basis.size(); ++b) tr += ker.basis[b][inv[ker.pivots[b]]];
        traces.push_back(tr);
    }
    SymFunc chi = frobenius_from_traces(k, traces);
    Int expected = factorial(k - 1);
    if (chi.dimension() != Rat(expected))
        throw std::logic_error("partition lattice character: dimension is not (k-1)!");
    return chi;
}

}  // namespace tcfa
