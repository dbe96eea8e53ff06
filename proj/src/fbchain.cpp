#include "tcfa/fbchain.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tcfa {

int BarWord::k() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

BarWord relabel(const BarWord& w, const std::vector<int>& perm) {
    BarWord out;
    out.blocks.reserve(w.blocks.size());
    for (const auto& b : w.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int e : b) nb.push_back(perm[e]);
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

int BarStratum::index_of(const BarWord& w) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it != basis.end() && *it == w) return static_cast<int>(it - basis.begin());
    return -1;
}

namespace {

// All ordered set partitions of the set encoded by `remaining` (bitmask over
// 0..k-1) into blocks of size <= max_block, appended to prefix.
void gen_words(unsigned remaining, int max_block, std::vector<std::vector<int>>& prefix,
               std::vector<BarWord>& out) {
    if (remaining == 0) {
        out.push_back(BarWord{prefix});
        return;
    }
    // enumerate nonempty submasks of `remaining` with popcount <= max_block
    for (unsigned sub = remaining; sub; sub = (sub - 1) & remaining) {
        if (std::popcount(sub) > max_block) continue;
        std::vector<int> block;
        for (int e = 0; e < 32; ++e)
            if (sub & (1u << e)) block.push_back(e);
        prefix.push_back(std::move(block));
        gen_words(remaining & ~sub, max_block, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

FBComplex FBComplex::bar_complex(int n, int d, int K) {
    if (n < 2) throw InvalidInput("bar_complex: n must be >= 2");
    if (d < 1) throw InvalidInput("bar_complex: d must be >= 1");
    if (K < 1) throw InvalidInput("bar_complex: K must be >= 1");
    if (K > degree_cap())
        throw InvalidInput("bar_complex: K exceeds the guardrail " +
                           std::to_string(degree_cap()) +
                           " (set TCFA_MAX_DEGREE_CAP to raise it)");
    FBComplex cx;
    cx.n_ = n;
    cx.d_ = d;
    cx.K_ = K;
    cx.degrees_.resize(K + 1);
    for (int k = 1; k <= K; ++k) {
        std::vector<BarWord> words;
        std::vector<std::vector<int>> prefix;
        gen_words((1u << k) - 1, n - 1, prefix, words);
        auto& strata = cx.degrees_[k];
        for (auto& w : words) strata[w.length()].basis.push_back(std::move(w));
        for (auto& [s, st] : strata) {
            st.s = s;
            st.c = 2 * d * k - s;
            st.w = d * k;
            std::sort(st.basis.begin(), st.basis.end());
        }
        // differentials: adjacent merges into the (s-1)-stratum
        for (auto& [s, st] : strata) {
            auto below = strata.find(s - 1);
            st.diff.assign(st.basis.size(), {});
            if (below == strata.end()) continue;
            for (size_t j = 0; j < st.basis.size(); ++j) {
                const BarWord& w = st.basis[j];
                std::map<int, Rat> col;
                for (int i = 1; i < s; ++i) {  // merge blocks i and i+1 (1-indexed)
                    const auto& a = w.blocks[i - 1];
                    const auto& b = w.blocks[i];
                    if (static_cast<int>(a.size() + b.size()) > n - 1) continue;
                    BarWord merged;
                    merged.blocks.reserve(s - 1);
                    for (int t = 0; t < i - 1; ++t) merged.blocks.push_back(w.blocks[t]);
                    std::vector<int> uni;
                    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
                    merged.blocks.push_back(std::move(uni));
                    for (int t = i + 1; t < s; ++t) merged.blocks.push_back(w.blocks[t]);
                    int idx = below->second.index_of(merged);
                    if (idx < 0) throw std::logic_error("bar_complex: merged word missing");
                    col[idx] += (i % 2 == 0) ? Rat(1) : Rat(-1);
                }
                SparseVec sv;
                for (const auto& [row, cval] : col)
                    if (cval != 0) sv.emplace_back(row, cval);
                st.diff[j] = std::move(sv);
            }
        }
    }
    return cx;
}

const std::map<int, BarStratum>& FBComplex::degree(int k) const {
    if (k < 1 || k > K_) throw InvalidInput("degree out of range");
    return degrees_[k];
}

std::vector<int> FBComplex::basis_permutation(int k, int s, const std::vector<int>& perm) const {
    const auto& strata = degree(k);
    auto it = strata.find(s);
    if (it == strata.end()) throw InvalidInput("no such stratum");
    const BarStratum& st = it->second;
    std::vector<int> out(st.basis.size());
    for (size_t j = 0; j < st.basis.size(); ++j) {
        int idx = st.index_of(relabel(st.basis[j], perm));
        if (idx < 0) throw std::logic_error("basis_permutation: relabeled word missing");
        out[j] = idx;
    }
    return out;
}

SymFunc FBComplex::stratum_character(int k, int s) const {
    const auto& mus = partitions_of(k);
    std::vector<Rat> traces;
    traces.reserve(mus.size());
    for (const auto& mu : mus) {
        auto perm = class_representative(mu, k);
        auto action = basis_permutation(k, s, perm);
        long long fixed = 0;
        for (size_t j = 0; j < action.size(); ++j)
            if (action[j] == static_cast<int>(j)) ++fixed;
        traces.emplace_back(static_cast<long>(fixed));
    }
    return frobenius_from_traces(k, traces);
}

FBCharacter FBComplex::chain_character() const {
    FBCharacter out(K_);
    for (int k = 1; k <= K_; ++k)
        for (const auto& [s, st] : degree(k)) out.add(k, st.c, st.w, stratum_character(k, s));
    return out;
}

void FBComplex::check_differential_squares_to_zero() const {
    for (int k = 1; k <= K_; ++k) {
        const auto& strata = degree(k);
        for (const auto& [s, st] : strata) {
            auto below = strata.find(s - 1);
            if (below == strata.end()) continue;
            for (const auto& col : st.diff) {
                std::map<int, Rat> acc;
                for (const auto& [row, cval] : col)
                    for (const auto& [row2, cval2] : below->second.diff[row]) acc[row2] += cval * cval2;
                for (const auto& [row2, cval2] : acc)
                    if (cval2 != 0) throw std::logic_error("differential does not square to zero");
            }
        }
    }
}

std::vector<int> class_representative(const Partition& mu, int k) {
    if (mu.size() != k) throw InvalidInput("class_representative: cycle type has wrong size");
    std::vector<int> perm(k);
    int start = 0;
    for (int len : mu.parts) {
        for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

const HomologyPiece* HomologyResult::piece(int k, int c, int w) const {
    auto it = pieces.find({k, c, w});
    return it == pieces.end() ? nullptr : &it->second;
}

std::map<CW, SymFunc> HomologyResult::character(int k) const {
    std::map<CW, SymFunc> out;
    for (const auto& [key, p] : pieces) {
        if (std::get<0>(key) != k || p.character.is_zero()) continue;
        out[{std::get<1>(key), std::get<2>(key)}] = p.character;
    }
    return out;
}

FBCharacter HomologyResult::total_character(bool with_unit) const {
    FBCharacter out = with_unit ? FBCharacter::unit(K) : FBCharacter(K);
    for (const auto& [key, p] : pieces)
        out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), p.character);
    return out;
}

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

// Representatives of ker modulo im: kernel echelon columns reduced against
// the image echelon, then re-echelonized.
std::vector<SparseVec> quotient_representatives(const EchelonBasis& ker, const EchelonBasis& im) {
    std::vector<SparseVec> reduced;
    for (const auto& v : ker.cols) {
        SparseVec u = v;
        for (size_t j = 0; j < im.cols.size(); ++j) {
            Rat c = sparse_entry(u, im.pivot_rows[j]);
            if (c != 0) u = sparse_axpy(u, -c, im.cols[j]);
        }
        if (!u.empty()) reduced.push_back(std::move(u));
    }
    ColumnReduction r = column_reduce(ker.nrows, reduced, false);
    return r.image.cols;
}

}  // namespace

HomologyResult homology(const FBComplex& cx) {
    HomologyResult out;
    out.n = cx.n();
    out.d = cx.d();
    out.K = cx.K();
    for (int k = 1; k <= cx.K(); ++k) {
        const auto& strata = cx.degree(k);
        // reduce the outgoing differential of every stratum
        std::map<int, ColumnReduction> red;  // keyed by s
        for (const auto& [s, st] : strata) {
            int target_dim = 0;
            auto below = strata.find(s - 1);
            if (below != strata.end()) target_dim = below->second.dim();
            red[s] = column_reduce(target_dim, st.diff, true);
        }
        const auto& mus = partitions_of(k);
        for (const auto& [s, st] : strata) {
            const ColumnReduction& own = red.at(s);
            auto above = red.find(s + 1);  // differential landing here
            const EchelonBasis* im = (above != red.end()) ? &above->second.image : nullptr;
            int rank = own.kernel.dim() - (im ? im->dim() : 0);
            std::vector<Rat> traces;
            traces.reserve(mus.size());
            for (const auto& mu : mus) {
                auto perm = class_representative(mu, k);
                auto action = cx.basis_permutation(k, s, perm);
                auto inv = inverse_permutation(action);
                Rat tr = own.kernel.permutation_trace(inv);
                if (im) tr -= im->permutation_trace(inv);
                traces.push_back(tr);
            }
            HomologyPiece piece;
            piece.rank = rank;
            piece.character = frobenius_from_traces(k, traces);
            if (im)
                piece.representatives = quotient_representatives(own.kernel, *im);
            else
                piece.representatives = own.kernel.cols;
            if (static_cast<int>(piece.representatives.size()) != rank)
                throw std::logic_error("homology: representative count disagrees with rank");
            Rat dim_check = piece.character.dimension();
            if (dim_check != rank)
                throw std::logic_error("homology: character dimension disagrees with rank");
            if (rank == 0 && !piece.character.is_zero())
                throw std::logic_error("homology: nonzero character on zero homology");
            if (rank > 0) out.pieces[{k, st.c, st.w}] = std::move(piece);
        }
    }
    return out;
}

std::map<CW, SymFunc> homology_character(const HomologyResult& h, int k) { return h.character(k); }

}  // namespace tcfa
