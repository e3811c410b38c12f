#ifndef QSP_UJMOD_HPP
#define QSP_UJMOD_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qsp/crystal.hpp"
#include "qsp/hecke.hpp"
#include "qsp/ratfunc.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

// Vector in the d-th tensor power of the vector representation, over Q(p,q).
struct ModVec {
    int r = 0, d = 0;
    std::map<Word, RatFunc> coeffs;

    ModVec() = default;
    ModVec(int rank, int degree) : r(rank), d(degree) {}
    static ModVec basis_vec(int rank, const Word& w);

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Word& w, const RatFunc& c);
    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec scaled(const RatFunc& c) const;
    bool operator==(const ModVec& o) const;
    RatFunc coeff(const Word& w) const;
    std::string str() const;
};

// Tensor product (word concatenation).
ModVec tensor(const ModVec& a, const ModVec& b);
ModVec tensor_letter(const ModVec& a, int letter);

enum class UGen { E, F, K, Kinv };
enum class UjGen { e, f, k, kinv };

// Ambient generators acting through the iterated coproduct.
ModVec act_u(UGen g, HalfInt i, const ModVec& v);
// Embedded generators (one source of truth: the ambient coproduct).
ModVec act_uj(UjGen g, int i, const ModVec& v);
// Independent route: the coideal coproduct, recursive over tensor factors.
ModVec act_uj_coideal(UjGen g, int i, const ModVec& v);

// k_i-eigenvalue exponent of a basis word.
int k_exponent(int i, const Word& w);

// Right Hecke action on basis vectors.
ModVec act_hecke_gen(const ModVec& v, int gen);
ModVec act_hecke(const ModVec& v, const HeckeElt& x, const HeckeAlgebra& h);

enum class BraidKind { Prime, DoublePrime };
// Locally finite braid operator at index i >= 2 with sign e in {1,-1}.
ModVec braid_op(int i, BraidKind kind, int e, const ModVec& v);

// Composable operator expressions.
class ModOp {
public:
    ModOp(); // identity
    static ModOp scalar(const RatFunc& c);
    static ModOp u_gen(UGen g, HalfInt i);
    static ModOp uj_gen(UjGen g, int i);
    static ModOp braid(int i, BraidKind kind, int e);

    ModOp operator*(const ModOp& o) const; // composition: (x*y)(v) = x(y(v))
    ModOp operator+(const ModOp& o) const;
    ModOp operator-(const ModOp& o) const;
    ModOp scaled(const RatFunc& c) const;
    // [x, y]_a = x y - q^a y x.
    static ModOp bracket(const ModOp& x, const ModOp& y, int a);

    // Scalar-conjugating automorphism: p -> p^-1, q -> q^-1 on coefficients,
    // k_i -> k_i^-1, e_i and f_i fixed. Only defined on expressions built
    // from the embedded generators.
    ModOp bar() const;

    ModVec apply(const ModVec& v) const;

    struct Node;

private:
    explicit ModOp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

ModOp op_e(int i);
ModOp op_f(int i);
ModOp op_k(int i);
ModOp op_kinv(int i);
// h'_1 = [e_1, f_1]_1; h'_{i+1} = [[e_{i+1}, h'_i]_1, f_{i+1}]_1.
ModOp op_hprime(int i);
// h_1 = h'_1; h_i = tau_i ... tau_2 h_1 tau_2^{-1} ... tau_i^{-1}.
ModOp op_h(int i);
ModOp op_z1();
ModOp op_f2prime();       // needs rank >= 2
ModOp op_h1dbl();         // h''_1
// The three h''_1-eigencomponent combinations of f_2 at string position
// (a, b, n); which in {1,2,3}.
ModOp op_f2prime_component(int which, int a, int b, int n);

// Scalar eigenvalue bookkeeping.
RatFunc h_eigenvalue(int a, int b);            // [b]{a-b-1}
RatFunc h1dbl_scalar(int a, int b, int n);     // h''_1(a,b,n)
RatFunc z1_scalar(int a, int b, int n);

// x^(n) v = x^n v / [n]!.
ModVec divided_power(const ModOp& x, int n, const ModVec& v);

// All length-d words (shared enumeration with the crystal module).
std::vector<Word> basis_words(int r, int d, std::size_t guard = 20000);

struct CheckResult {
    std::string group;
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyReport {
    int r = 0, d = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Symbolic verification of the displayed operator identities on V^{tensor d}.
// Groups: relations, h1-brackets, ef-strings, z1, coproduct, duality, braid,
// f1n-eigen, h1-matrix, f2-brackets, spectra.
VerifyReport verify_suite(int r, int d, const std::vector<std::string>& only = {},
                          std::size_t guard = 20000);

struct BimoduleReport {
    Partition lambda, mu;
    ClassificationData expected;
    std::vector<int> k_exponents;     // located highest-weight data
    bool pass = false;
    std::string detail;
};

// Builds the two-sided generator of the (lambda, mu) component, raises it to
// a vector killed by every e_i, and checks the k_i/h_i eigenvalues against
// the pi-parametrization. Also verifies the crystal-lattice memberships of
// the generators and the f_1-string.
BimoduleReport dipper_james_component(const Partition& lambda, const Partition& mu,
                                      int r, int d);

// The leading words of the one-sided generators.
Word row_word_positive(const Partition& mu);     // columns ascending 1..mu'_j
Word column_word_negative(const Partition& lam); // columns -lam'_k..-1
// One-sided generators in V^{tensor |shape|}.
ModVec m_plus(const Partition& mu, int r);
ModVec m_minus(const Partition& lam, int r);

} // namespace qsp

#endif
