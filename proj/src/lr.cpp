#include "qsp/lr.hpp"

#include <algorithm>
#include <functional>

#include "qsp/crystal.hpp"
#include "qsp/jcrystal.hpp"

namespace qsp {

long long lr_skew_count(const Partition& outer, const Partition& inner,
                        const Partition& content, int n) {
    if (!outer.contains(inner)) throw ShapeError("inner shape not contained in outer");
    if (content.size() != outer.size() - inner.size()) return 0;
    if (content.length() > n) {
        for (int i = n; i < content.length(); ++i)
            if (content.parts[i] > 0) return 0;
    }
    // Cells in Middle-Eastern order: rows top to bottom, right to left.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = outer.row(i) - 1; j >= inner.row(i); --j) cells.push_back({i, j});

    std::vector<int> remaining(n + 1, 0);
    for (int i = 0; i < std::min(n, content.length()); ++i)
        remaining[i + 1] = content.parts[i];
    std::vector<int> placed(n + 1, 0);
    std::vector<std::vector<int>> fill(outer.length());
    for (int i = 0; i < outer.length(); ++i) fill[i].assign(outer.row(i), 0);

    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        for (int letter = 1; letter <= n; ++letter) {
            if (remaining[letter] == 0) continue;
            // Yamanouchi prefix condition in the ME order.
            if (letter > 1 && placed[letter] + 1 > placed[letter - 1]) continue;
            // Row weakly increases: the right neighbour is already filled.
            if (j + 1 < outer.row(i) && letter > fill[i][j + 1]) continue;
            // Column strictly increases when the cell above is in the skew part.
            if (i > 0 && j < outer.row(i - 1) && j >= inner.row(i - 1) &&
                letter <= fill[i - 1][j])
                continue;
            // When the cell above is inside the inner shape there is no
            // constraint from it.
            fill[i][j] = letter;
            --remaining[letter];
            ++placed[letter];
            rec(k + 1);
            ++remaining[letter];
            --placed[letter];
            fill[i][j] = 0;
        }
    };
    rec(0);
    return count;
}

long long lr_crystal_count(const Partition& eta, const Partition& xi,
                           const Partition& mu, int n, std::size_t guard) {
    Alphabet pos = positive_alphabet(n);
    auto ta = enumerate_sst(eta, pos);
    auto tb = enumerate_sst(xi, pos);
    if (ta.size() * tb.size() > guard) throw SizeLimit("crystal LR count exceeds guard");
    std::vector<int> target(n + 1, 0);
    if (mu.length() > n) {
        for (int i = n; i < mu.length(); ++i)
            if (mu.parts[i] > 0) return 0;
    }
    for (int i = 0; i < std::min(n, mu.length()); ++i) target[i + 1] = mu.parts[i];
    long long count = 0;
    for (const auto& t1 : ta) {
        Word w1 = read_me(t1);
        for (const auto& t2 : tb) {
            Word w = w1;
            Word w2 = read_me(t2);
            w.insert(w.end(), w2.begin(), w2.end());
            std::vector<int> counts(n + 1, 0);
            for (int x : w) counts[x]++;
            if (counts != target) continue;
            bool highest = true;
            for (int a = 1; a < n && highest; ++a)
                if (pair_stats(w, a, a + 1).eps != 0) highest = false;
            if (highest) ++count;
        }
    }
    return count;
}

long long lr_type_a(const Partition& eta, const Partition& xi, const Partition& mu,
                    int n) {
    if (!mu.contains(eta)) throw ShapeError("eta not contained in mu");
    long long skew = lr_skew_count(mu, eta, xi, n);
    long long crystal = lr_crystal_count(eta, xi, mu, n);
    if (skew != crystal)
        throw InternalError("LR routes disagree: skew=" + std::to_string(skew) +
                            " crystal=" + std::to_string(crystal));
    return skew;
}

Bipartition lr_normalize_bipartition(const Bipartition& shape) {
    return pi_normalize(shape);
}

Partition lr_normalize_partition(const Partition& mu) {
    int last = mu.length() ? mu.parts.back() : 0;
    std::vector<int> p = mu.parts;
    for (auto& x : p) x -= last;
    return Partition(std::move(p));
}

namespace {

// Declared length 2r+1, last row stripped off (the module only depends on
// this representative).
Partition canonical_mu(const Partition& mu, int r) {
    Partition s = mu.stripped();
    if (s.length() > 2 * r + 1)
        throw ShapeError("partition too long for rank " + std::to_string(r));
    return lr_normalize_partition(s.padded(2 * r + 1));
}

} // namespace

namespace {

// Shift nu inside its pi-class to total size `target`; nullopt if impossible.
std::optional<Bipartition> shift_to_size(const Bipartition& nu, int target, int r) {
    int diff = target - nu.size();
    if (diff % (2 * r + 1) != 0) return std::nullopt;
    int n = diff / (2 * r + 1);
    std::vector<int> minus = nu.minus.parts, plus = nu.plus.parts;
    for (auto& x : minus) {
        x += n;
        if (x < 0) return std::nullopt;
    }
    for (auto& x : plus) {
        x += n;
        if (x < 0) return std::nullopt;
    }
    return Bipartition(Partition(std::move(minus)), Partition(std::move(plus)));
}

// All partitions of the given length contained in a bound shape.
void contained_partitions(const Partition& bound, int length, int row,
                          std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == length) {
        out.push_back(Partition(cur));
        return;
    }
    int hi = std::min(bound.row(row), row > 0 ? cur[row - 1] : bound.row(0));
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        contained_partitions(bound, length, row + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

long long lr_j(const LRQuery& q) {
    int r = q.r;
    Bipartition lambda = pi_normalize(q.lambda);
    Partition mu = canonical_mu(q.mu, r);
    int target = lambda.size() + mu.size();
    auto nu_opt = shift_to_size(q.nu, target, r);
    if (!nu_opt) return 0;
    const Bipartition& nu = *nu_opt;

    long long total = 0;
    std::vector<Partition> etas;
    std::vector<int> cur;
    contained_partitions(mu, r + 1, 0, cur, etas);
    for (const auto& eta : etas) {
        if (!nu.minus.contains(eta)) continue;
        long long c_minus = lr_skew_count(nu.minus, eta, lambda.minus, r + 1);
        if (c_minus == 0) continue;
        int rest = mu.size() - eta.size();
        for (const auto& xi : partitions_of(rest, r)) {
            long long c_mid = lr_skew_count(mu, eta, xi, 2 * r + 1);
            if (c_mid == 0) continue;
            if (!nu.plus.contains(lambda.plus)) continue;
            long long c_plus = lr_skew_count(nu.plus, lambda.plus, xi, r);
            total += c_minus * c_mid * c_plus;
        }
    }
    return total;
}

long long lr_j_oracle(const LRQuery& q, std::size_t guard) {
    int r = q.r;
    Bipartition lambda = pi_normalize(q.lambda);
    Partition mu = canonical_mu(q.mu, r);
    int target = lambda.size() + mu.size();
    auto nu_opt = shift_to_size(q.nu, target, r);
    if (!nu_opt) return 0;
    auto all = lr_j_oracle_all(lambda, mu, r, guard);
    auto it = all.find(*nu_opt);
    return it == all.end() ? 0 : it->second;
}

std::map<Bipartition, long long> lr_j_all(const Bipartition& lambda,
                                          const Partition& mu, int r) {
    Bipartition l0 = pi_normalize(lambda);
    Partition m0 = canonical_mu(mu, r);
    int target = l0.size() + m0.size();
    std::map<Bipartition, long long> out;
    for (const auto& nu : bipartitions_of(target, r)) {
        LRQuery q{l0, m0, nu, r};
        long long c = lr_j(q);
        if (c) out[nu] = c;
    }
    return out;
}

std::map<Bipartition, long long> lr_j_oracle_all(const Bipartition& lambda,
                                                 const Partition& mu, int r,
                                                 std::size_t guard) {
    Bipartition l0 = pi_normalize(lambda);
    Partition m0 = canonical_mu(mu, r);
    auto tl = enumerate_sst(l0, r);
    auto tm = enumerate_sst(m0, full_alphabet(r));
    if (tl.size() * tm.size() > guard) throw SizeLimit("oracle enumeration exceeds guard");
    std::map<Bipartition, long long> out;
    for (const auto& t1 : tl) {
        Word w1 = read_r(t1);
        for (const auto& t2 : tm) {
            Word w = w1;
            Word w2 = read_me(t2);
            w.insert(w.end(), w2.begin(), w2.end());
            if (!is_yamanouchi_biword(w, r)) continue;
            out[shape_of_source(w, r)]++;
        }
    }
    return out;
}

} // namespace qsp
