#include "qsp/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qsp {

SignedPerm::SignedPerm(std::vector<int> window) : win_(std::move(window)) {
    std::vector<bool> seen(win_.size() + 1, false);
    for (int v : win_) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(win_.size()) || seen[a])
            throw ShapeError("invalid window");
        seen[a] = true;
    }
}

SignedPerm SignedPerm::identity(int d) {
    std::vector<int> w(d);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::generator(int d, int gen) {
    SignedPerm e = identity(d);
    if (gen == 0) {
        if (d < 1) throw RankError("generator 0 needs d >= 1");
        e.win_[0] = -1;
    } else {
        if (gen < 0 || gen >= d) throw RankError("generator out of range");
        std::swap(e.win_[gen - 1], e.win_[gen]);
    }
    return e;
}

int SignedPerm::apply(int k) const {
    if (k > 0) return win_[k - 1];
    return -win_[-k - 1];
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (win_[i] != i + 1) return false;
    return true;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    std::vector<int> w(rank());
    for (int i = 0; i < rank(); ++i) w[i] = apply(o.win_[i]);
    SignedPerm r;
    r.win_ = std::move(w);
    return r;
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> w(rank());
    for (int i = 0; i < rank(); ++i) {
        int v = win_[i];
        if (v > 0) w[v - 1] = i + 1;
        else w[-v - 1] = -(i + 1);
    }
    SignedPerm r;
    r.win_ = std::move(w);
    return r;
}

int SignedPerm::length() const {
    int inv = 0, neg = 0, nsp = 0;
    int d = rank();
    for (int i = 0; i < d; ++i) {
        if (win_[i] < 0) ++neg;
        for (int j = i + 1; j < d; ++j) {
            if (win_[i] > win_[j]) ++inv;
            if (win_[i] + win_[j] < 0) ++nsp;
        }
    }
    return inv + neg + nsp;
}

std::vector<int> SignedPerm::reduced_word() const {
    std::vector<int> peel;
    SignedPerm w = *this;
    for (;;) {
        int g = -1;
        if (w.rank() > 0 && w.win_[0] < 0) g = 0;
        for (int j = 1; g < 0 && j < w.rank(); ++j)
            if (w.win_[j - 1] > w.win_[j]) g = j;
        if (g < 0) break;
        if (g == 0) w.win_[0] = -w.win_[0];
        else std::swap(w.win_[g - 1], w.win_[g]);
        peel.push_back(g);
    }
    if (!w.is_identity()) throw InternalError("descent peeling did not reach e");
    std::reverse(peel.begin(), peel.end());
    return peel;
}

std::string SignedPerm::str() const {
    std::string s = "[";
    for (int i = 0; i < rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(win_[i]);
    }
    return s + "]";
}

SignedPerm SignedPerm::parse(const std::string& text) {
    std::vector<int> w;
    int v = 0, sign = 1;
    bool have = false;
    for (char c : text) {
        if (c == '-') sign = -1;
        else if (c >= '0' && c <= '9') {
            v = v * 10 + (c - '0');
            have = true;
        } else if (c == ',' || c == ']' || c == ')') {
            if (have) w.push_back(sign * v);
            v = 0;
            sign = 1;
            have = false;
        }
    }
    if (have) w.push_back(sign * v);
    return SignedPerm(std::move(w));
}

// ---------------------------------------------------------------------------

WeylGroupB::WeylGroupB(int d, std::size_t guard) : d_(d) {
    double order = 1;
    for (int i = 1; i <= d; ++i) order *= 2 * i;
    if (order > static_cast<double>(guard))
        throw SizeLimit("Weyl group of rank " + std::to_string(d) + " exceeds guard");

    std::deque<SignedPerm> queue{SignedPerm::identity(d)};
    index_[queue.front()] = 0;
    elements_.push_back(queue.front());
    while (!queue.empty()) {
        SignedPerm w = queue.front();
        queue.pop_front();
        for (int g = 0; g < d; ++g) {
            SignedPerm n = w * SignedPerm::generator(d, g);
            if (index_.emplace(n, static_cast<int>(elements_.size())).second) {
                elements_.push_back(n);
                queue.push_back(n);
            }
        }
    }

    int n = size();
    left_.assign(std::max(1, d), std::vector<int>(n));
    right_.assign(std::max(1, d), std::vector<int>(n));
    inv_.resize(n);
    len_.resize(n);
    words_.resize(n);
    for (int k = 0; k < n; ++k) {
        const SignedPerm& w = elements_[k];
        for (int g = 0; g < d; ++g) {
            left_[g][k] = index_.at(SignedPerm::generator(d, g) * w);
            right_[g][k] = index_.at(w * SignedPerm::generator(d, g));
        }
        inv_[k] = index_.at(w.inverse());
        len_[k] = w.length();
        words_[k] = w.reduced_word();
        if (static_cast<int>(words_[k].size()) != len_[k])
            throw InternalError("length mismatch between formula and peeling");
    }
    id_ = index_.at(SignedPerm::identity(d));
    bruhat_.assign(n, {});
}

int WeylGroupB::index(const SignedPerm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw ShapeError("element not in group: " + w.str());
    return it->second;
}

int WeylGroupB::mul(int a, int b) const {
    int cur = a;
    for (int g : words_[b]) cur = right_[g][cur];
    return cur;
}

bool WeylGroupB::bruhat_leq(int y, int w) const {
    if (bruhat_[w].empty()) {
        // Evaluations of all subwords of a fixed reduced word of w.
        std::set<int> reach{id_};
        for (int g : words_[w]) {
            std::set<int> next = reach;
            for (int x : reach) next.insert(right_[g][x]);
            reach = std::move(next);
        }
        bruhat_[w].assign(size(), 0);
        for (int x : reach) bruhat_[w][x] = 1;
    }
    return bruhat_[w][y] != 0;
}

std::vector<int> WeylGroupB::parabolic_elements(const std::vector<int>& J) const {
    std::set<int> seen{id_};
    std::deque<int> queue{id_};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int g : J) {
            int n = right_[g][x];
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    return {seen.begin(), seen.end()};
}

int WeylGroupB::longest_element(const std::vector<int>& J) const {
    int best = id_;
    for (int x : parabolic_elements(J))
        if (len_[x] > len_[best]) best = x;
    return best;
}

bool WeylGroupB::is_min_coset_rep(int idx, const std::vector<int>& J) const {
    for (int g : J)
        if (len_[left_[g][idx]] < len_[idx]) return false;
    return true;
}

std::pair<int, int> WeylGroupB::coset_decompose(int idx, const std::vector<int>& J) const {
    int u = id_, y = idx;
    for (;;) {
        bool moved = false;
        for (int g : J) {
            if (len_[left_[g][y]] < len_[y]) {
                y = left_[g][y];
                u = right_[g][u];
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return {u, y};
}

} // namespace qsp
