#include "qsp/jcrystal.hpp"

#include <algorithm>
#include <deque>

namespace qsp {

std::optional<Word> jop(const Word& s, int i, Dir dir) {
    if (i < 1) throw RankError("jop: index must be >= 1");
    Reduced sig = reduce_int(s, i);
    if (i == 1) {
        if (dir == Dir::Raise) {
            // Rightmost -1 in s_1.
            int pos = -1;
            for (const auto& e : sig)
                if (e.second == -1) pos = e.first;
            if (pos < 0) return std::nullopt;
            Word out = s;
            out[pos] = 0;
            return out;
        }
        // Leftmost 0 in s_1.
        for (const auto& e : sig)
            if (e.second == 0) {
                Word out = s;
                out[e.first] = -1;
                return out;
            }
        return std::nullopt;
    }
    if (dir == Dir::Raise) {
        // Rightmost i -> i-1 if present, else rightmost -i -> -(i-1).
        for (int target : {i, -i}) {
            int pos = -1;
            for (const auto& e : sig)
                if (e.second == target) pos = e.first;
            if (pos >= 0) {
                Word out = s;
                out[pos] = target > 0 ? i - 1 : -(i - 1);
                return out;
            }
        }
        return std::nullopt;
    }
    // Leftmost -(i-1) -> -i if present, else leftmost i-1 -> i.
    for (int target : {-(i - 1), i - 1}) {
        for (const auto& e : sig)
            if (e.second == target) {
                Word out = s;
                out[e.first] = target < 0 ? -i : i;
                return out;
            }
    }
    return std::nullopt;
}

namespace {

bool primed_gate(const Word& s, int i) {
    for (int j = 1; j < i; ++j)
        if (jop(s, j, Dir::Raise)) return false;
    for (int j = 2; j < i; ++j)
        if (crystal_op(s, HalfInt::of_lower(j - 1), Dir::Raise)) return false;
    return true;
}

} // namespace

std::optional<Word> jop_primed(const Word& s, int i, Dir dir) {
    if (i < 2) throw RankError("jop_primed: index must be >= 2");
    if (dir == Dir::Raise) {
        if (!primed_gate(s, i)) return std::nullopt;
        return crystal_op(s, HalfInt::of_lower(i - 1), Dir::Raise);
    }
    auto cand = crystal_op(s, HalfInt::of_lower(i - 1), Dir::Lower);
    if (!cand) return std::nullopt;
    auto back = jop_primed(*cand, i, Dir::Raise);
    if (back && *back == s) return cand;
    return std::nullopt;
}

int jstring_eps(const Word& s, int i) {
    int k = 0;
    Word cur = s;
    while (auto nxt = jop(cur, i, Dir::Raise)) {
        cur = *nxt;
        ++k;
    }
    return k;
}

int jstring_phi(const Word& s, int i) {
    int k = 0;
    Word cur = s;
    while (auto nxt = jop(cur, i, Dir::Lower)) {
        cur = *nxt;
        ++k;
    }
    return k;
}

int beta_eps_pairing(int j, int m) {
    int v = 0;
    if (m == j - 1) ++v;
    if (m == j) --v;
    if (m == -j) --v;
    if (m == -(j - 1)) ++v;
    return v;
}

int beta_gamma_pairing(int j, int i) {
    return beta_eps_pairing(j, i - 1) - beta_eps_pairing(j, i);
}

std::vector<int> jweight(const Word& s, int r) {
    std::vector<int> out(r, 0);
    for (int j = 1; j <= r; ++j)
        for (int m : s) out[j - 1] += beta_eps_pairing(j, m);
    return out;
}

LeftStats left_factor_stats(const Word& s, int r) {
    LeftStats st;
    st.eps.resize(r);
    st.phi.resize(r);
    for (int i = 1; i <= r; ++i) {
        st.eps[i - 1] = jstring_eps(s, i);
        st.phi[i - 1] = jstring_phi(s, i);
    }
    return st;
}

RightStats right_factor_stats(const Word& s, int r) {
    RightStats st;
    for (HalfInt i : crystal_indices(r)) st.by_index[i.twice] = crystal_stats(s, i);
    return st;
}

TensorDecision tensor_rule_eval(const LeftStats& bl, const RightStats& br, int i,
                                Dir dir) {
    auto a_eps = [&](HalfInt idx) { return br.by_index.at(idx.twice).eps; };
    TensorDecision td{};
    if (i == 1) {
        HalfInt mh = HalfInt::of_lower(-1); // index -1/2
        int e1 = bl.eps[0], em = a_eps(mh);
        if (dir == Dir::Lower) {
            if (e1 < em) {
                td.left = false;
                td.right_index = mh;
                td.right_dir = Dir::Raise;
            } else {
                td.left = true;
            }
        } else {
            if (e1 <= em) {
                td.left = false;
                td.right_index = mh;
                td.right_dir = Dir::Lower;
            } else {
                td.left = true;
            }
        }
        return td;
    }
    HalfInt up = HalfInt::of_lower(i - 1);  // index i-1/2
    HalfInt dn = HalfInt::of_lower(-i);     // index -(i-1/2)
    int A = a_eps(up), B = bl.phi[i - 1], C = bl.eps[i - 1], D = a_eps(dn);
    if (dir == Dir::Lower) {
        if ((A < B && C < D) || (A >= B && C + A - B < D)) {
            td.left = false;
            td.right_index = dn;
            td.right_dir = Dir::Raise;
        } else if (A < B && C >= D) {
            td.left = true;
        } else {
            td.left = false;
            td.right_index = up;
            td.right_dir = Dir::Lower;
        }
    } else {
        if ((A <= B && C <= D) || (A > B && C + A - B <= D)) {
            td.left = false;
            td.right_index = dn;
            td.right_dir = Dir::Lower;
        } else if (A <= B && C > D) {
            td.left = true;
        } else {
            td.left = false;
            td.right_index = up;
            td.right_dir = Dir::Raise;
        }
    }
    return td;
}

std::optional<Word> apply_tensor_decision(const Word& s, int split, int i, Dir dir,
                                          const TensorDecision& td) {
    Word left(s.begin(), s.begin() + split);
    Word right(s.begin() + split, s.end());
    if (td.left) {
        auto l2 = jop(left, i, dir);
        if (!l2) return std::nullopt;
        l2->insert(l2->end(), right.begin(), right.end());
        return l2;
    }
    auto r2 = crystal_op(right, td.right_index, td.right_dir);
    if (!r2) return std::nullopt;
    Word out = left;
    out.insert(out.end(), r2->begin(), r2->end());
    return out;
}

bool is_yamanouchi_biword(const Word& s, int r) {
    const int d = static_cast<int>(s.size());
    auto count_suffix = [&](int letter, int from) {
        int c = 0;
        for (int m = from; m < d; ++m) c += s[m] == letter;
        return c;
    };
    auto count_prefix = [&](int letter, int upto) {
        int c = 0;
        for (int m = 0; m <= upto; ++m) c += s[m] == letter;
        return c;
    };
    for (int n = 0; n < d; ++n) {
        if (count_suffix(0, n) < count_suffix(-1, n)) return false;
        for (int j = 2; j <= r; ++j) {
            if (count_suffix(-(j - 1), n) < count_suffix(-j, n)) return false;
            if (count_prefix(j - 1, n) < count_prefix(j, n)) return false;
        }
    }
    return true;
}

Bipartition shape_of_source(const Word& s, int r) {
    std::vector<int> counts(2 * r + 1, 0);
    for (int x : s) counts[x + r]++;
    std::vector<int> minus(r + 1), plus(r);
    for (int i = 0; i <= r; ++i) minus[i] = counts[r - i];
    for (int i = 1; i <= r; ++i) plus[i - 1] = counts[r + i];
    return Bipartition(Partition(std::move(minus)), Partition(std::move(plus)));
}

JDecomposition decompose_tensor_power(int r, int d, std::size_t guard) {
    JDecomposition out;
    out.r = r;
    out.d = d;
    auto words = all_words(r, d, guard);
    std::map<Word, int> index;
    for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = static_cast<int>(k);

    auto neighbors = [&](const Word& w) {
        std::vector<Word> ns;
        for (int i = 1; i <= r; ++i)
            for (Dir dir : {Dir::Raise, Dir::Lower})
                if (auto n = jop(w, i, dir)) ns.push_back(*n);
        for (int i = 2; i <= r; ++i)
            for (Dir dir : {Dir::Raise, Dir::Lower})
                if (auto n = jop_primed(w, i, dir)) ns.push_back(*n);
        return ns;
    };

    std::vector<int> comp(words.size(), -1);
    int ncomp = 0;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (comp[k] >= 0) continue;
        int id = ncomp++;
        std::deque<int> queue{static_cast<int>(k)};
        comp[k] = id;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const auto& n : neighbors(words[cur])) {
                int kn = index.at(n);
                if (comp[kn] < 0) {
                    comp[kn] = id;
                    queue.push_back(kn);
                }
            }
        }
    }

    std::vector<JComponent> comps(ncomp);
    for (std::size_t k = 0; k < words.size(); ++k)
        comps[comp[k]].nodes.push_back(words[k]);

    for (auto& c : comps) {
        std::sort(c.nodes.begin(), c.nodes.end());
        std::vector<Word> sources;
        for (const auto& w : c.nodes) {
            bool source = true;
            for (int i = 1; i <= r && source; ++i)
                if (jop(w, i, Dir::Raise)) source = false;
            for (int i = 2; i <= r && source; ++i)
                if (jop_primed(w, i, Dir::Raise)) source = false;
            if (source) sources.push_back(w);
        }
        if (sources.size() != 1)
            throw InternalError("component with " + std::to_string(sources.size()) +
                                " sources");
        c.source = sources[0];
        if (!is_yamanouchi_biword(c.source, r))
            throw InternalError("source is not a Yamanouchi biword: " +
                                word_str(c.source));
        c.shape = shape_of_source(c.source, r);
    }

    std::sort(comps.begin(), comps.end(), [](const JComponent& a, const JComponent& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        return a.source < b.source;
    });
    for (const auto& c : comps) out.multiplicity[c.shape]++;
    out.components = std::move(comps);
    return out;
}

} // namespace qsp
