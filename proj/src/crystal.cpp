#include "qsp/crystal.hpp"

#include <algorithm>

namespace qsp {

std::string HalfInt::str() const {
    return std::to_string(twice) + "/2";
}

std::vector<HalfInt> crystal_indices(int r) {
    std::vector<HalfInt> v;
    for (int t = -(2 * r - 1); t <= 2 * r - 1; t += 2) v.push_back(HalfInt{t});
    return v;
}

Reduced reduce_pair(const Word& s, int lower, int upper) {
    Reduced st;
    for (int pos = 0; pos < static_cast<int>(s.size()); ++pos) {
        int letter = s[pos];
        if (letter != lower && letter != upper) continue;
        if (letter == upper && !st.empty() && st.back().second == lower)
            st.pop_back();
        else
            st.emplace_back(pos, letter);
    }
    return st;
}

Reduced reduce_half(const Word& s, HalfInt i) {
    return reduce_pair(s, i.lower(), i.upper());
}

namespace {

// Cancel adjacent (first, second) pairs in an already-extracted sequence.
Reduced cancel_pairs(const Reduced& in, int first, int second) {
    Reduced st;
    for (const auto& e : in) {
        if (e.second == second && !st.empty() && st.back().second == first)
            st.pop_back();
        else
            st.push_back(e);
    }
    return st;
}

} // namespace

Reduced reduce_int(const Word& s, int i) {
    if (i < 1) throw RankError("reduce_int: index must be >= 1");
    if (i == 1) {
        Reduced r = reduce_pair(s, -1, 0);
        std::reverse(r.begin(), r.end());
        return r;
    }
    Reduced a = reduce_pair(s, -i, -(i - 1));
    std::reverse(a.begin(), a.end());
    Reduced b = reduce_pair(s, i - 1, i);
    a.insert(a.end(), b.begin(), b.end());
    return cancel_pairs(a, -(i - 1), i);
}

Word reduced_letters(const Reduced& r) {
    Word w;
    w.reserve(r.size());
    for (const auto& e : r) w.push_back(e.second);
    return w;
}

std::optional<Word> pair_op(const Word& s, int lower, int upper, Dir dir) {
    Reduced r = reduce_pair(s, lower, upper);
    if (dir == Dir::Raise) {
        // Rightmost upper; the signature is uppers-then-lowers.
        int found = -1;
        for (const auto& e : r)
            if (e.second == upper) found = e.first;
        if (found < 0) return std::nullopt;
        Word out = s;
        out[found] = lower;
        return out;
    }
    for (const auto& e : r)
        if (e.second == lower) {
            Word out = s;
            out[e.first] = upper;
            return out;
        }
    return std::nullopt;
}

Stats pair_stats(const Word& s, int lower, int upper) {
    Reduced r = reduce_pair(s, lower, upper);
    Stats st{0, 0};
    for (const auto& e : r)
        (e.second == upper ? st.eps : st.phi)++;
    return st;
}

std::optional<Word> crystal_op(const Word& s, HalfInt i, Dir dir) {
    return pair_op(s, i.lower(), i.upper(), dir);
}

Stats crystal_stats(const Word& s, HalfInt i) {
    return pair_stats(s, i.lower(), i.upper());
}

std::vector<int> word_weight(const Word& s, int r) {
    std::vector<int> w(2 * r + 1, 0);
    for (int x : s) {
        if (x < -r || x > r) throw ShapeError("letter out of range");
        w[x + r]++;
    }
    return w;
}

int weight_alpha_pairing(const Word& s, HalfInt i) {
    int c = 0;
    for (int x : s) {
        if (x == i.lower()) ++c;
        if (x == i.upper()) --c;
    }
    return c;
}

std::optional<Tableau> crystal_on_sst(const Tableau& t, int r, HalfInt i, Dir dir) {
    auto w = crystal_op(read_me(t), i, dir);
    if (!w) return std::nullopt;
    Tableau out = tableau_from_me(t.shape(), *w);
    if (!is_semistandard(out, full_alphabet(r)))
        throw InternalError("crystal_on_sst: transported word is not semistandard");
    return out;
}

bool is_typea_highest(const Word& s, int r) {
    for (HalfInt i : crystal_indices(r))
        if (crystal_stats(s, i).eps != 0) return false;
    return true;
}

std::vector<Word> all_words(int r, int d, std::size_t guard) {
    double total = 1;
    for (int k = 0; k < d; ++k) total *= (2 * r + 1);
    if (total > static_cast<double>(guard))
        throw SizeLimit("word enumeration exceeds guard");
    std::vector<Word> out{{}};
    for (int k = 0; k < d; ++k) {
        std::vector<Word> next;
        next.reserve(out.size() * (2 * r + 1));
        for (const auto& w : out)
            for (int a = -r; a <= r; ++a) {
                Word v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

RsCheckReport crystal_rs_check(int r, int d, std::size_t guard) {
    RsCheckReport rep;
    Alphabet full = full_alphabet(r);
    auto words = all_words(r, d, guard);
    for (const auto& w : words) {
        ++rep.words;
        RSPair pq = rs(w, full);
        if (pq.p.shape() != pq.q.shape()) {
            rep.ok = false;
            rep.detail = "shape mismatch at " + word_str(w);
            return rep;
        }
        for (HalfInt i : crystal_indices(r)) {
            for (Dir dir : {Dir::Raise, Dir::Lower}) {
                auto w2 = crystal_op(w, i, dir);
                auto p2 = crystal_on_sst(pq.p, r, i, dir);
                ++rep.edges_checked;
                if (w2.has_value() != p2.has_value()) {
                    rep.ok = false;
                    rep.detail = "definedness mismatch at " + word_str(w) + " i=" + i.str();
                    return rep;
                }
                if (!w2) continue;
                RSPair pq2 = rs(*w2, full);
                if (pq2.p != *p2) {
                    rep.ok = false;
                    rep.detail = "P does not intertwine at " + word_str(w) + " i=" + i.str();
                    return rep;
                }
                if (pq2.q != pq.q) {
                    rep.ok = false;
                    rep.detail = "Q not constant along edge at " + word_str(w) + " i=" + i.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace qsp
