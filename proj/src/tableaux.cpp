#include "qsp/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace qsp {

// ---------------------------------------------------------------------------
// Partition / Bipartition

void Partition::check() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw ShapeError("negative part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ShapeError("parts not weakly decreasing: " + str());
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int j = 0; j < row(0); ++j) {
        int h = 0;
        while (h < length() && parts[h] > j) ++h;
        t.push_back(h);
    }
    return Partition(std::move(t));
}

Partition Partition::padded(int len) const {
    if (len < length()) throw ShapeError("padded: length too small");
    std::vector<int> p = parts;
    p.resize(len, 0);
    return Partition(std::move(p));
}

Partition Partition::stripped() const {
    std::vector<int> p = parts;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

bool Partition::contains(const Partition& inner) const {
    int n = std::max(length(), inner.length());
    for (int i = 0; i < n; ++i)
        if (inner.row(i) > row(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    for (;;) {
        skip();
        if (i >= text.size()) break;
        bool neg = text[i] == '-';
        if (neg) ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected integer in list: " + text);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        out.push_back(neg ? -v : v);
        skip();
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("expected ',' in list: " + text);
            ++i;
        }
    }
    return out;
}

std::string strip_parens(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    std::string s = text.substr(b, e - b + 1);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        return s.substr(1, s.size() - 2);
    return s;
}

} // namespace

Partition Partition::parse(const std::string& text) {
    return Partition(parse_int_list(strip_parens(text)));
}

std::string Bipartition::str() const {
    std::string m = minus.str(), p = plus.str();
    return "(" + m.substr(1, m.size() - 2) + ";" + p.substr(1, p.size() - 2) + ")";
}

Bipartition Bipartition::parse(const std::string& text, int r) {
    std::string s = strip_parens(text);
    std::size_t semi = s.find(';');
    if (semi == std::string::npos)
        throw ParseError("bipartition needs ';': " + text);
    Bipartition b(Partition(parse_int_list(s.substr(0, semi))),
                  Partition(parse_int_list(s.substr(semi + 1))));
    if (r >= 0) {
        // Pad declared lengths up to (r+1; r) when shorter.
        if (b.minus.length() > r + 1 || b.plus.length() > r)
            throw ShapeError("bipartition too long for rank " + std::to_string(r));
        b.minus = b.minus.padded(r + 1);
        b.plus = b.plus.padded(r);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Classification data and the pi parametrization

bool ClassificationData::valid() const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] < 0) return false;
        if (i >= 1 && (a[i] < 0 || b[i] > a[i])) return false;
    }
    return true;
}

std::string ClassificationData::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    s += ";";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

ClassificationData pi_map(const Bipartition& shape) {
    int r = shape.rank();
    ClassificationData d;
    d.a.resize(r);
    d.b.resize(r);
    d.a[0] = 2 * shape.row(0) - shape.row(-1) - shape.row(1);
    d.b[0] = shape.row(0) - shape.row(-1);
    for (int i = 2; i <= r; ++i) {
        d.a[i - 1] = shape.row(-(i - 1)) - shape.row(-i) + shape.row(i - 1) - shape.row(i);
        d.b[i - 1] = shape.row(-(i - 1)) - shape.row(-i);
    }
    return d;
}

Bipartition pi_inverse(const ClassificationData& data) {
    if (!data.valid()) throw ShapeError("invalid classification data " + data.str());
    int r = data.rank();
    int sum_b = std::accumulate(data.b.begin(), data.b.end(), 0);
    int sum_a_tail = 0;
    for (int i = 1; i < r; ++i) sum_a_tail += data.a[i];
    int x = data.a[0] - (2 * sum_b - sum_a_tail);
    int a1m = std::max(x, 0), a1p = std::min(x, 0);

    std::vector<int> minus(r + 1), plus(r);
    for (int i = 0; i <= r; ++i) {
        int s = 0;
        for (int j = i; j < r; ++j) s += data.b[j];
        minus[i] = s + a1m;
    }
    for (int i = 0; i < r; ++i) {
        int s = 0;
        for (int j = i + 1; j < r; ++j) s += data.a[j] - data.b[j];
        plus[i] = s - a1p;
    }
    return Bipartition(Partition(std::move(minus)), Partition(std::move(plus)));
}

bool pi_equiv(const Bipartition& a, const Bipartition& b) {
    if (a.rank() != b.rank()) return false;
    int r = a.rank();
    int n = b.row(0) - a.row(0);
    for (int i = -r; i <= r; ++i)
        if (b.row(i) - a.row(i) != n) return false;
    return true;
}

Bipartition pi_normalize(const Bipartition& shape) {
    int r = shape.rank();
    int m = shape.row(-r);
    for (int i = -r; i <= r; ++i) m = std::min(m, shape.row(i));
    std::vector<int> minus(r + 1), plus(r);
    for (int i = 0; i <= r; ++i) minus[i] = shape.row(-i) - m;
    for (int i = 1; i <= r; ++i) plus[i - 1] = shape.row(i) - m;
    return Bipartition(Partition(std::move(minus)), Partition(std::move(plus)));
}

// ---------------------------------------------------------------------------
// Alphabets

int Alphabet::key(int letter) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == letter) return static_cast<int>(i);
    throw ShapeError("letter " + std::to_string(letter) + " not in alphabet");
}

Alphabet full_alphabet(int r) {
    Alphabet a;
    for (int i = -r; i <= r; ++i) a.letters.push_back(i);
    return a;
}

Alphabet minus_alphabet(int r) {
    Alphabet a;
    for (int i = 0; i >= -r; --i) a.letters.push_back(i);
    return a;
}

Alphabet plus_alphabet(int r) {
    Alphabet a;
    for (int i = 1; i <= r; ++i) a.letters.push_back(i);
    return a;
}

Alphabet positive_alphabet(int n) { return plus_alphabet(n); }

// ---------------------------------------------------------------------------
// Tableaux

Partition Tableau::shape() const {
    std::vector<int> p;
    p.reserve(rows.size());
    for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
    return Partition(std::move(p));
}

int Tableau::cell_count() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

std::string Tableau::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "/";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(rows[i][j]);
        }
    }
    return s + "]";
}

std::string Bitableau::str() const { return minus.str() + "|" + plus.str(); }

bool is_semistandard(const Tableau& t, const Alphabet& order) {
    for (const auto& row : t.rows)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (!order.leq(row[j - 1], row[j])) return false;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        if (t.rows[i].size() > t.rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (!order.less(t.rows[i - 1][j], t.rows[i][j])) return false;
    }
    return true;
}

bool is_standard(const Tableau& t) {
    // Entries distinct and strictly increasing along rows and columns;
    // the letter set may be any subset of positive integers (bitableau
    // components share {1..n} between the two sides).
    std::set<int> seen;
    for (const auto& row : t.rows)
        for (int x : row) {
            if (x < 1 || !seen.insert(x).second) return false;
        }
    for (const auto& row : t.rows)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] >= row[j]) return false;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        if (t.rows[i].size() > t.rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i - 1][j] >= t.rows[i][j]) return false;
    }
    return true;
}

bool is_standard(const Bitableau& t) {
    if (!is_standard(t.minus) || !is_standard(t.plus)) return false;
    std::set<int> all;
    for (const auto& row : t.minus.rows) all.insert(row.begin(), row.end());
    for (const auto& row : t.plus.rows) all.insert(row.begin(), row.end());
    int n = t.cell_count();
    if (static_cast<int>(all.size()) != n) return false;
    return all.empty() || (*all.begin() == 1 && *all.rbegin() == n);
}

namespace {

// Column reading word (columns left to right, top to bottom), as alphabet keys.
std::vector<int> column_key_word(const Tableau& t, const Alphabet& order) {
    std::vector<int> w;
    int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    for (int j = 0; j < width; ++j)
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (j < static_cast<int>(t.rows[i].size()))
                w.push_back(order.key(t.rows[i][j]));
    return w;
}

} // namespace

std::vector<Tableau> enumerate_sst(const Partition& shape, const Alphabet& order) {
    std::vector<Tableau> out;
    Tableau t;
    t.rows.assign(shape.length(), {});
    for (int i = 0; i < shape.length(); ++i) t.rows[i].assign(shape.parts[i], 0);

    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j) cells.emplace_back(i, j);

    int m = static_cast<int>(order.letters.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[k];
        int lo = 0;
        if (j > 0) lo = std::max(lo, order.key(t.rows[i][j - 1]));
        if (i > 0) lo = std::max(lo, order.key(t.rows[i - 1][j]) + 1);
        for (int key = lo; key < m; ++key) {
            t.rows[i][j] = order.letters[key];
            rec(k + 1);
        }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [&](const Tableau& x, const Tableau& y) {
        return column_key_word(x, order) < column_key_word(y, order);
    });
    return out;
}

std::vector<Bitableau> enumerate_sst(const Bipartition& shape, int r) {
    if (!shape.valid_for_rank(r)) throw ShapeError("shape/rank mismatch: " + shape.str());
    auto ms = enumerate_sst(shape.minus, minus_alphabet(r));
    auto ps = enumerate_sst(shape.plus, plus_alphabet(r));
    std::vector<Bitableau> out;
    out.reserve(ms.size() * ps.size());
    for (const auto& m : ms)
        for (const auto& p : ps) out.push_back(Bitableau{m, p});
    return out;
}

long long sst_count(const Partition& shape, const Alphabet& order) {
    return static_cast<long long>(enumerate_sst(shape, order).size());
}

long long sst_count(const Bipartition& shape, int r) {
    return sst_count(shape.minus, minus_alphabet(r)) *
           sst_count(shape.plus, plus_alphabet(r));
}

namespace {

// Appends k to every addable corner of the partial tableau with target shape.
void st_rec(const Partition& shape_m, const Partition& shape_p, Bitableau& t, int k,
            int n, std::vector<Bitableau>& out) {
    if (k > n) {
        out.push_back(t);
        return;
    }
    auto try_component = [&](Tableau& comp, const Partition& target) {
        for (int i = 0; i < target.length(); ++i) {
            int len = static_cast<int>(comp.rows[i].size());
            if (len >= target.parts[i]) continue;
            if (i > 0 && static_cast<int>(comp.rows[i - 1].size()) <= len) continue;
            comp.rows[i].push_back(k);
            st_rec(shape_m, shape_p, t, k + 1, n, out);
            comp.rows[i].pop_back();
        }
    };
    try_component(t.minus, shape_m);
    try_component(t.plus, shape_p);
}

} // namespace

std::vector<Tableau> enumerate_st(const Partition& shape) {
    auto bis = enumerate_st(Bipartition(shape, Partition(std::vector<int>{})));
    std::vector<Tableau> out;
    out.reserve(bis.size());
    for (auto& b : bis) out.push_back(std::move(b.minus));
    return out;
}

std::vector<Bitableau> enumerate_st(const Bipartition& shape) {
    Bitableau t;
    t.minus.rows.assign(shape.minus.length(), {});
    t.plus.rows.assign(shape.plus.length(), {});
    std::vector<Bitableau> out;
    st_rec(shape.minus, shape.plus, t, 1, shape.size(), out);
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long st_count(const Partition& shape) {
    int n = shape.size();
    if (n == 0) return 1;
    Partition tr = shape.transpose();
    __int128 num = 1, den = 1;
    for (int i = 1; i <= n; ++i) num *= i;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j)
            den *= (shape.parts[i] - j) + (tr.parts[j] - i) - 1;
    return static_cast<long long>(num / den);
}

long long st_count(const Bipartition& shape) {
    return st_count(shape.minus) * st_count(shape.plus) *
           binomial(shape.size(), shape.plus.size());
}

// ---------------------------------------------------------------------------
// Readings

Word read_me(const Tableau& t) {
    Word w;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

Word read_em(const Tableau& t) {
    Word w = read_me(t);
    std::reverse(w.begin(), w.end());
    return w;
}

Word read_r(const Bitableau& t) {
    Word w = read_em(t.minus);
    Word p = read_me(t.plus);
    w.insert(w.end(), p.begin(), p.end());
    return w;
}

Tableau tableau_from_me(const Partition& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size())
        throw ShapeError("word length does not match shape size");
    Tableau t;
    t.rows.assign(shape.length(), {});
    std::size_t k = 0;
    for (int i = 0; i < shape.length(); ++i) {
        t.rows[i].assign(shape.parts[i], 0);
        for (int j = shape.parts[i] - 1; j >= 0; --j) t.rows[i][j] = w[k++];
    }
    return t;
}

Bitableau bitableau_from_r(const Bipartition& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size())
        throw ShapeError("word length does not match shape size");
    Word me_minus(w.begin(), w.begin() + shape.minus.size());
    std::reverse(me_minus.begin(), me_minus.end());
    Word me_plus(w.begin() + shape.minus.size(), w.end());
    return Bitableau{tableau_from_me(shape.minus, me_minus),
                     tableau_from_me(shape.plus, me_plus)};
}

Bitableau highest_weight_bitableau(const Bipartition& shape) {
    Bitableau t;
    t.minus.rows.resize(shape.minus.length());
    for (int i = 0; i < shape.minus.length(); ++i)
        t.minus.rows[i].assign(shape.minus.parts[i], -i);
    t.plus.rows.resize(shape.plus.length());
    for (int i = 0; i < shape.plus.length(); ++i)
        t.plus.rows[i].assign(shape.plus.parts[i], i + 1);
    return t;
}

// ---------------------------------------------------------------------------
// Insertion

Tableau bump_insert(const Tableau& t, int letter, const Alphabet& order,
                    std::pair<int, int>* new_box) {
    Tableau out = t;
    int x = letter;
    std::size_t col = 0;
    for (;;) {
        // Find the topmost entry >= x in this column.
        int found = -1;
        for (std::size_t i = 0; i < out.rows.size(); ++i) {
            if (col >= out.rows[i].size()) break;
            if (order.leq(x, out.rows[i][col])) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) {
            // Append at the bottom of this column.
            std::size_t i = 0;
            while (i < out.rows.size() && out.rows[i].size() > col) ++i;
            if (i == out.rows.size()) out.rows.emplace_back();
            out.rows[i].push_back(x);
            if (new_box) *new_box = {static_cast<int>(i), static_cast<int>(col)};
            return out;
        }
        std::swap(x, out.rows[found][col]);
        ++col;
    }
}

RSPair rs(const Word& w, const Alphabet& order, const std::vector<int>& letters) {
    std::vector<int> rec = letters;
    if (rec.empty())
        for (std::size_t i = 0; i < w.size(); ++i) rec.push_back(static_cast<int>(i) + 1);
    if (rec.size() != w.size())
        throw ShapeError("recording letters/word length mismatch");
    RSPair out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::pair<int, int> box;
        out.p = bump_insert(out.p, w[k], order, &box);
        while (static_cast<int>(out.q.rows.size()) <= box.first) out.q.rows.emplace_back();
        out.q.rows[box.first].push_back(rec[k]);
        if (static_cast<int>(out.q.rows[box.first].size()) != box.second + 1)
            throw InternalError("recording tableau out of sync");
    }
    return out;
}

SignedRS pq_signed(const std::vector<int>& window) {
    Word neg, pos;
    std::vector<int> neg_pos_letters, pos_pos_letters;
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (window[i] < 0) {
            neg.push_back(-window[i]);
            neg_pos_letters.push_back(static_cast<int>(i) + 1);
        } else {
            pos.push_back(window[i]);
            pos_pos_letters.push_back(static_cast<int>(i) + 1);
        }
    }
    int d = static_cast<int>(window.size());
    Alphabet nat = positive_alphabet(std::max(1, d));
    SignedRS out;
    RSPair m = rs(neg, nat, neg_pos_letters);
    RSPair p = rs(pos, nat, pos_pos_letters);
    out.p_minus = m.p;
    out.q_minus = m.q;
    out.p_plus = p.p;
    out.q_plus = p.q;
    return out;
}

// ---------------------------------------------------------------------------
// Shape enumeration

namespace {

void partitions_rec(int n, int len, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (len == 0) {
        if (n == 0) out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 0; --k) {
        if (k * len < n) break;
        cur.push_back(k);
        partitions_rec(n - k, len - 1, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, length, n, cur, out);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n, int r) {
    std::vector<Bipartition> out;
    for (int a = 0; a <= n; ++a)
        for (const auto& m : partitions_of(a, r + 1))
            for (const auto& p : partitions_of(n - a, r))
                out.emplace_back(m, p);
    return out;
}

std::string word_str(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

} // namespace qsp
