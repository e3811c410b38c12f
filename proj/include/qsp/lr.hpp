#ifndef QSP_LR_HPP
#define QSP_LR_HPP

#include <map>

#include "qsp/tableaux.hpp"

namespace qsp {

struct LRQuery {
    Bipartition lambda;
    Partition mu;
    Bipartition nu;
    int r = 1;
};

// Number of semistandard skew fillings of outer/inner with the given content
// in letters {1..n} whose Middle-Eastern reading is a Yamanouchi word.
long long lr_skew_count(const Partition& outer, const Partition& inner,
                        const Partition& content, int n);

// The same coefficient from crystal combinatorics: highest-weight words of
// the given weight among concatenated readings of SST(eta) x SST(xi).
long long lr_crystal_count(const Partition& eta, const Partition& xi,
                           const Partition& mu, int n, std::size_t guard = 500000);

// Multiplicity of L(mu) in L(eta) (x) L(xi) for type A with n letters.
// Computes both routes and asserts they agree. Throws ShapeError when
// eta is not contained in mu.
long long lr_type_a(const Partition& eta, const Partition& xi, const Partition& mu,
                    int n);

// The two-parameter branching/tensor coefficient: multiplicity of L(nu) in
// L(lambda) (x) L(mu). Representatives are normalized internally; queries
// whose sizes cannot match return 0.
long long lr_j(const LRQuery& q);
// Direct count of Yamanouchi biwords of shape nu among the concatenated
// readings of SST(lambda) x SST(mu).
long long lr_j_oracle(const LRQuery& q, std::size_t guard = 500000);

// All nonzero coefficients for a fixed (lambda, mu), keyed by nu.
std::map<Bipartition, long long> lr_j_all(const Bipartition& lambda,
                                          const Partition& mu, int r);
std::map<Bipartition, long long> lr_j_oracle_all(const Bipartition& lambda,
                                                 const Partition& mu, int r,
                                                 std::size_t guard = 500000);

// Normalizations used by the queries (exposed for tests and the CLI).
Bipartition lr_normalize_bipartition(const Bipartition& shape);
Partition lr_normalize_partition(const Partition& mu);

} // namespace qsp

#endif
