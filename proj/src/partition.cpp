#include "tcfa/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcfa {

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::length() const { return static_cast<int>(parts.size()); }

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ']';
    return out.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must look like [3,1]");
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // reverse-lexicographic: larger leading parts come first
    return a.parts > b.parts;
}

static void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

const std::vector<Partition>& partitions_of(int k) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        if (k >= 0) gen_partitions(k, k == 0 ? 1 : k, cur, out);
        it = cache.emplace(k, std::move(out)).first;
    }
    return it->second;
}

std::vector<Partition> partitions_of_bounded(int k, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (k == 0) {
        out.push_back(Partition{});
        return out;
    }
    if (max_part >= 1) gen_partitions(k, std::min(k, max_part), cur, out);
    return out;
}

Int z_order(const Partition& mu) {
    Int z = 1;
    int run = 0;
    for (size_t i = 0; i < mu.parts.size(); ++i) {
        ++run;
        z *= mu.parts[i];
        if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
            for (int j = 2; j <= run; ++j) z *= j;
            run = 0;
        }
    }
    return z;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    if (!lambda.parts.empty()) {
        parts.resize(lambda.parts[0], 0);
        for (int p : lambda.parts)
            for (int i = 0; i < p; ++i) parts[i]++;
    }
    return Partition(std::move(parts));
}

Partition stretch(const Partition& mu, int r) {
    std::vector<int> parts = mu.parts;
    for (int& p : parts) p *= r;
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

// --- Murnaghan-Nakayama on beta-sets ---------------------------------------
//
// A partition lambda padded to length L is encoded by the beta-set
// { lambda_i + (L-1-i) }, a set of L distinct non-negative integers. Removing
// a border strip of length t corresponds to replacing some x in the set by
// x - t (requires x >= t and x - t not present); the sign of the removal is
// (-1)^{#elements strictly between x-t and x}.

namespace {

using Beta = std::vector<int>;  // sorted ascending

Beta beta_of(const Partition& lambda, int length) {
    Beta b(length);
    for (int i = 0; i < length; ++i) {
        int part = i < lambda.length() ? lambda.parts[i] : 0;
        b[length - 1 - i] = part + (length - 1 - i);
    }
    std::sort(b.begin(), b.end());
    return b;
}

long long mn(const Beta& beta, const std::vector<int>& mu, size_t mi,
             std::map<std::pair<Beta, size_t>, long long>& memo) {
    if (mi == mu.size()) return 1;
    auto key = std::make_pair(beta, mi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t = mu[mi];
    long long total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        int x = beta[j];
        if (x < t) continue;
        int y = x - t;
        if (std::binary_search(beta.begin(), beta.end(), y)) continue;
        int between = 0;
        for (int v : beta)
            if (v > y && v < x) ++between;
        Beta nb = beta;
        nb[j] = y;
        std::sort(nb.begin(), nb.end());
        long long sub = mn(nb, mu, mi + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

struct CharTable {
    // chi[l][m] = chi^{lambda_l}(mu_m), both indexed by partitions_of(k).
    std::vector<std::vector<long long>> chi;
};

const CharTable& character_table(int k) {
    static std::map<int, CharTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const auto& ps = partitions_of(k);
    CharTable tab;
    tab.chi.assign(ps.size(), std::vector<long long>(ps.size(), 0));
    for (size_t l = 0; l < ps.size(); ++l) {
        Beta b = beta_of(ps[l], std::max(1, k));
        for (size_t m = 0; m < ps.size(); ++m) {
            std::map<std::pair<Beta, size_t>, long long> memo;  // valid per (lambda, mu)
            tab.chi[l][m] = mn(b, ps[m].parts, 0, memo);
        }
    }
    return cache.emplace(k, std::move(tab)).first->second;
}

size_t partition_index(const Partition& p) {
    const auto& ps = partitions_of(p.size());
    auto it = std::lower_bound(ps.begin(), ps.end(), p, PartitionLess{});
    if (it == ps.end() || !(*it == p)) throw std::logic_error("partition_index: not found");
    return static_cast<size_t>(it - ps.begin());
}

}  // namespace

long long sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("sym_character: sizes differ");
    const CharTable& tab = character_table(lambda.size());
    return tab.chi[partition_index(lambda)][partition_index(mu)];
}

}  // namespace tcfa
