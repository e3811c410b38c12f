#ifndef QSP_TABLEAUX_HPP
#define QSP_TABLEAUX_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

using Word = std::vector<int>;

// Weakly decreasing nonnegative parts; trailing zeros are significant
// (the declared length is part of the data).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { check(); }

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    int row(int i) const { return i < length() ? parts[i] : 0; } // 0-based
    bool empty() const { return size() == 0; }

    Partition transpose() const; // natural length (no trailing zeros)
    Partition padded(int len) const;
    Partition stripped() const; // drop trailing zeros
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;
    static Partition parse(const std::string& text);

private:
    void check() const;
};

// Ordered pair (minus; plus) of lengths (r+1; r).
struct Bipartition {
    Partition minus, plus;

    Bipartition() = default;
    Bipartition(Partition m, Partition p) : minus(std::move(m)), plus(std::move(p)) {}

    int rank() const { return plus.length(); }
    int size() const { return minus.size() + plus.size(); }
    bool valid_for_rank(int r) const {
        return minus.length() == r + 1 && plus.length() == r;
    }
    // Row accessor indexed by i in [-r, r]: row 0,-1,...,-r live in `minus`,
    // rows 1..r in `plus`.
    int row(int i) const { return i <= 0 ? minus.row(-i) : plus.row(i - 1); }

    auto operator<=>(const Bipartition&) const = default;

    std::string str() const;
    static Bipartition parse(const std::string& text, int r = -1);
};

// Highest-weight data (a; b): a[0] in Z, a[i] >= 0 for i >= 1,
// b[i] >= 0 with b[i] <= a[i] for i >= 1 (0-based storage, index i-1).
struct ClassificationData {
    std::vector<int> a, b;

    int rank() const { return static_cast<int>(a.size()); }
    bool valid() const;
    auto operator<=>(const ClassificationData&) const = default;
    std::string str() const;
};

ClassificationData pi_map(const Bipartition& shape);
Bipartition pi_inverse(const ClassificationData& data); // representative with a zero row
bool pi_equiv(const Bipartition& a, const Bipartition& b);
// Representative of the pi-class with at least one zero row.
Bipartition pi_normalize(const Bipartition& shape);

// A totally ordered letter set; `letters` lists them in increasing order.
struct Alphabet {
    std::vector<int> letters;
    int key(int letter) const; // position in the order; throws if absent
    bool less(int x, int y) const { return key(x) < key(y); }
    bool leq(int x, int y) const { return key(x) <= key(y); }
};

Alphabet full_alphabet(int r);     // -r < ... < 0 < ... < r
Alphabet minus_alphabet(int r);    // 0 < -1 < ... < -r
Alphabet plus_alphabet(int r);     // 1 < ... < r
Alphabet positive_alphabet(int n); // 1 < ... < n

// Row-major filling; trailing empty rows keep declared shape length.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    Partition shape() const;
    int cell_count() const;
    bool empty() const { return cell_count() == 0; }
    int at(int i, int j) const { return rows[i][j]; } // 0-based

    auto operator<=>(const Tableau&) const = default;
    std::string str() const;
};

struct Bitableau {
    Tableau minus, plus;
    Bipartition shape() const { return {minus.shape(), plus.shape()}; }
    int cell_count() const { return minus.cell_count() + plus.cell_count(); }
    auto operator<=>(const Bitableau&) const = default;
    std::string str() const;
};

bool is_semistandard(const Tableau& t, const Alphabet& order);
bool is_standard(const Tableau& t); // distinct entries, strict rows and columns
bool is_standard(const Bitableau& t); // components standard, letters split {1..n}

// All semistandard fillings, in column-reading lexicographic order.
std::vector<Tableau> enumerate_sst(const Partition& shape, const Alphabet& order);
std::vector<Bitableau> enumerate_sst(const Bipartition& shape, int r);
long long sst_count(const Partition& shape, const Alphabet& order);
long long sst_count(const Bipartition& shape, int r);

// Standard (bi)tableaux on {1..n}.
std::vector<Tableau> enumerate_st(const Partition& shape);
std::vector<Bitableau> enumerate_st(const Bipartition& shape);
long long st_count(const Partition& shape);     // hook length formula
long long st_count(const Bipartition& shape);   // product formula
long long binomial(int n, int k);

// Middle-Eastern reading: right-to-left along rows, top row first.
Word read_me(const Tableau& t);
// Reverse of the ME reading.
Word read_em(const Tableau& t);
// Reading of a bitableau: EM(minus) followed by ME(plus).
Word read_r(const Bitableau& t);
// Inverses, given the shape.
Tableau tableau_from_me(const Partition& shape, const Word& w);
Bitableau bitableau_from_r(const Bipartition& shape, const Word& w);

// Highest-weight fillings: minus row i holds -(i-1), plus row i holds i.
Bitableau highest_weight_bitableau(const Bipartition& shape);

// Column insertion: bump the topmost entry >= letter from column 1 onward;
// returns the new tableau, reporting the added box position if requested.
Tableau bump_insert(const Tableau& t, int letter, const Alphabet& order,
                    std::pair<int, int>* new_box = nullptr);

struct RSPair {
    Tableau p; // semistandard insertion tableau
    Tableau q; // standard recording tableau
};
// Insert w left to right; record in `letters` (default 1..n, must be increasing).
RSPair rs(const Word& w, const Alphabet& order, const std::vector<int>& letters = {});

// Insertion/recording data of a signed permutation window.
struct SignedRS {
    Tableau p_minus, q_minus, p_plus, q_plus;
};
SignedRS pq_signed(const std::vector<int>& window);

std::vector<Partition> partitions_of(int n, int length);
std::vector<Bipartition> bipartitions_of(int n, int r);

std::string word_str(const Word& w);

} // namespace qsp

#endif
