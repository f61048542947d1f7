#include "hypercox/canon.hpp"

#include "hypercox/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hypercox {

std::string entry_identity(const GramMatrix& g, std::size_t i, std::size_t j) {
    const int s = g.entry_sign(i, j);
    if (s == 0) return "0";
    return (s > 0 ? "+" : "-") + value_key(g.entry_square(i, j));
}

CanonicalForm canonical_form(const GramMatrix& g, std::size_t limit) {
    const std::size_t n = g.size();
    if (n > limit) throw SizeLimit("canonical_key: matrix size " + std::to_string(n) + " exceeds limit " +
                                   std::to_string(limit));
    // entry codes: rank of the identity string among the distinct ones
    std::vector<std::string> ids(n * n);
    std::map<std::string, int> rank;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            ids[i * n + j] = entry_identity(g, i, j);
            ids[j * n + i] = ids[i * n + j];
            rank.emplace(ids[i * n + j], 0);
        }
    }
    int r = 0;
    for (auto& kv : rank) kv.second = r++;
    std::vector<int> code(n * n);
    for (std::size_t k = 0; k < n * n; ++k) code[k] = rank[ids[k]];

    // vertex invariant: own diagonal code, then sorted row codes
    std::vector<std::vector<int>> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv[i].push_back(code[i * n + i]);
        std::vector<int> row;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) row.push_back(code[i * n + j]);
        }
        std::sort(row.begin(), row.end());
        inv[i].insert(inv[i].end(), row.begin(), row.end());
    }
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)];
    });
    // position k may only hold a vertex whose invariant is the k-th smallest
    std::vector<std::vector<int>> slot_inv(n);
    for (std::size_t k = 0; k < n; ++k) slot_inv[k] = inv[static_cast<std::size_t>(order[k])];

    // swapping twins (equal rows off the pair) is an automorphism, so only
    // one member of a twin pair needs to be tried at each position
    std::vector<bool> twin(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bool same = inv[a] == inv[b];
            for (std::size_t u = 0; u < n && same; ++u) {
                if (u != a && u != b) same = code[a * n + u] == code[b * n + u];
            }
            twin[a * n + b] = twin[b * n + a] = same;
        }
    }

    // branch and bound on the lower triangle read row by row
    std::vector<int> best_seq, cur_seq, best_perm, perm;
    std::vector<bool> used(n, false);
    // compares cur_seq with the same-length prefix of best_seq
    auto compare_prefix = [&]() {
        for (std::size_t t = 0; t < cur_seq.size(); ++t) {
            if (cur_seq[t] != best_seq[t]) return cur_seq[t] < best_seq[t] ? -1 : 1;
        }
        return 0;
    };
    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (k == n) {
            if (best_seq.empty() || compare_prefix() < 0) {
                best_seq = cur_seq;
                best_perm = perm;
            }
            return;
        }
        std::vector<std::size_t> tried;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || inv[v] != slot_inv[k]) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t w) { return twin[v * n + w]; })) continue;
            tried.push_back(v);
            const std::size_t base = cur_seq.size();
            for (std::size_t j = 0; j < k; ++j) cur_seq.push_back(code[v * n + static_cast<std::size_t>(perm[j])]);
            if (best_seq.empty() || compare_prefix() <= 0) {
                used[v] = true;
                perm.push_back(static_cast<int>(v));
                search(k + 1);
                perm.pop_back();
                used[v] = false;
            }
            cur_seq.resize(base);
        }
    };
    search(0);

    std::string key = "n=" + std::to_string(n) + ";ids=";
    for (const auto& kv : rank) key += kv.first + "|";
    key += ";inv=";
    for (std::size_t k = 0; k < n; ++k) {
        for (int c : slot_inv[k]) key += std::to_string(c) + ",";
        key += "/";
    }
    key += ";seq=";
    for (int c : best_seq) key += std::to_string(c) + ",";
    return CanonicalForm{key, best_perm};
}

std::string canonical_key(const GramMatrix& g, std::size_t limit) { return canonical_form(g, limit).key; }

}  // namespace hypercox
