#ifndef QSP_CRYSTAL_HPP
#define QSP_CRYSTAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsp/tableaux.hpp"

namespace qsp {

// Index of a type-A_{2r} crystal operator: a half-integer, stored doubled.
// The two letters it touches are lower() = i - 1/2 and upper() = i + 1/2.
struct HalfInt {
    int twice;

    static HalfInt of_lower(int lower) { return {2 * lower + 1}; }
    int lower() const { return (twice - 1) / 2; }
    int upper() const { return (twice + 1) / 2; }
    bool operator==(const HalfInt&) const = default;
    std::string str() const;
};

// All operator indices for rank r: -(r-1/2), ..., -1/2, 1/2, ..., r-1/2.
std::vector<HalfInt> crystal_indices(int r);

enum class Dir { Raise, Lower };

// An extracted subsequence: (position in the original word, letter).
using Reduced = std::vector<std::pair<int, int>>;

// Keep only `lower`/`upper` letters, then cancel adjacent (lower, upper)
// pairs with a single stack pass. Result: uppers then lowers.
Reduced reduce_pair(const Word& s, int lower, int upper);

// Signature word for a half-integer index.
Reduced reduce_half(const Word& s, HalfInt i);
// Signature word for an integer index i in {1..r}: for i >= 2 the
// concatenation (reverse of the -(i-1/2) signature, the i-1/2 signature)
// with (-(i-1), i) cancellations; for i = 1 the reverse of the -1/2 one.
Reduced reduce_int(const Word& s, int i);

Word reduced_letters(const Reduced& r);

struct Stats {
    int eps; // number of upper letters in the signature
    int phi; // number of lower letters
};

// Raise: rightmost upper becomes lower. Lower: leftmost lower becomes upper.
std::optional<Word> pair_op(const Word& s, int lower, int upper, Dir dir);
Stats pair_stats(const Word& s, int lower, int upper);

std::optional<Word> crystal_op(const Word& s, HalfInt i, Dir dir);
Stats crystal_stats(const Word& s, HalfInt i);

// Weight of a word: occurrence counts of each letter -r..r (2r+1 entries).
std::vector<int> word_weight(const Word& s, int r);
// Pairing of the weight with the simple root at index i.
int weight_alpha_pairing(const Word& s, HalfInt i);

// Operator on semistandard tableaux over the full alphabet, through the
// Middle-Eastern reading. Throws InternalError if the transported word is
// not the reading of a semistandard tableau.
std::optional<Tableau> crystal_on_sst(const Tableau& t, int r, HalfInt i, Dir dir);

// True if every raising operator kills the word.
bool is_typea_highest(const Word& s, int r);

// All words over {-r..r} of length d, lexicographic. Guarded.
std::vector<Word> all_words(int r, int d, std::size_t guard = 200000);

struct RsCheckReport {
    long long words = 0;
    long long edges_checked = 0;
    bool ok = true;
    std::string detail;
};

// Exhaustively verifies that w -> (P(w), Q(w)) intertwines all crystal
// operators (Q constant along edges) on I^d.
RsCheckReport crystal_rs_check(int r, int d, std::size_t guard = 200000);

} // namespace qsp

#endif
