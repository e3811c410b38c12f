#ifndef QSP_JCRYSTAL_HPP
#define QSP_JCRYSTAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "qsp/crystal.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

// Plain word operators, indices i in {1..r}.
//   i = 1:  Raise: rightmost -1 in the signature s_1 becomes 0;
//           Lower: leftmost 0 becomes -1.
//   i >= 2: Raise: rightmost i becomes i-1 if present, else rightmost -i
//           becomes -(i-1); Lower: leftmost -(i-1) becomes -i if present,
//           else leftmost i-1 becomes i.
std::optional<Word> jop(const Word& s, int i, Dir dir);

// Primed operators, i in {2..r}. Raising applies the ordinary crystal raise
// at index i-1/2, gated on: jop raise null for all j < i, and ordinary
// raises at j-1/2 null for 2 <= j < i. Lowering is the unique preimage.
std::optional<Word> jop_primed(const Word& s, int i, Dir dir);

// String lengths of the plain operators.
int jstring_eps(const Word& s, int i);
int jstring_phi(const Word& s, int i);

// (beta_j, eps_m) pairing value.
int beta_eps_pairing(int j, int m);
// (beta_j, gamma_i): 3 if i=j=1, 2 if i=j!=1, -1 if |i-j|=1, 0 otherwise.
int beta_gamma_pairing(int j, int i);
// The tuple ((beta_j, wt(s)))_{j=1..r}.
std::vector<int> jweight(const Word& s, int r);

// Stats of a tensor factor as needed by the tensor product rule.
struct LeftStats {
    std::vector<int> eps, phi; // index i-1 holds the plain-op string lengths
};
struct RightStats {
    std::map<int, Stats> by_index; // keyed by HalfInt.twice
};
LeftStats left_factor_stats(const Word& s, int r);
RightStats right_factor_stats(const Word& s, int r);

// Which factor the operator (i, dir) acts on, and by what.
struct TensorDecision {
    bool left;           // act with the same (i, dir) plain operator on the left
    HalfInt right_index; // meaningful when !left
    Dir right_dir;
};
TensorDecision tensor_rule_eval(const LeftStats& bl, const RightStats& br, int i,
                                Dir dir);

// Applies the decision to a concatenated word split at `split`.
std::optional<Word> apply_tensor_decision(const Word& s, int split, int i, Dir dir,
                                          const TensorDecision& td);

// Prefix/suffix letter-count characterization of the sources.
bool is_yamanouchi_biword(const Word& s, int r);

// Shape read off a Yamanouchi biword: row i = multiplicity of letter i.
Bipartition shape_of_source(const Word& s, int r);

struct JComponent {
    Bipartition shape;
    Word source;
    std::vector<Word> nodes; // sorted
};

struct JDecomposition {
    int r = 0, d = 0;
    std::vector<JComponent> components;             // sorted by (shape, source)
    std::map<Bipartition, long long> multiplicity;  // per shape
};

// Connected components of I^d under the plain and primed operators.
JDecomposition decompose_tensor_power(int r, int d, std::size_t guard = 20000);

} // namespace qsp

#endif
