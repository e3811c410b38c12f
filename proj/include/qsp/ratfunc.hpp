#ifndef QSP_RATFUNC_HPP
#define QSP_RATFUNC_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "qsp/errors.hpp"

namespace qsp {

// Exponent pair: (a, b) stands for the monomial p^a q^b.
using ExpPair = std::pair<int, int>;

// Laurent polynomial in two independent variables p, q over Q.
// Invariant: no stored coefficient is zero.
class LaurentPoly {
public:
    using TermMap = std::map<ExpPair, mpq_class>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[{0, 0}] = c; }
    LaurentPoly(const mpq_class& c) { if (c != 0) terms_[{0, 0}] = c; }

    static LaurentPoly monomial(const mpq_class& c, int a, int b);
    static LaurentPoly p(int a = 1) { return monomial(1, a, 0); }
    static LaurentPoly q(int b = 1) { return monomial(1, 0, b); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    mpq_class coeff(int a, int b) const;

    int min_exp_p() const; // pre: nonzero
    int max_exp_p() const;
    int min_exp_q() const;
    int max_exp_q() const;

    // Largest (a, b) in lexicographic order together with its coefficient.
    std::pair<ExpPair, mpq_class> lex_leading() const; // pre: nonzero

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const mpq_class& c) const;
    LaurentPoly shifted(int da, int db) const; // multiply by p^da q^db

    // p -> p^-1, q -> q^-1 (exponent negation).
    LaurentPoly bar() const;

    // Substitute p = 0 (keeps the p^0 layer). Throws PoleError if a term
    // with negative p-exponent is present.
    LaurentPoly at_p0() const;

    // All coefficients integral?
    bool is_integral() const;

    std::string str() const;

private:
    void insert(int a, int b, const mpq_class& c);
    TermMap terms_;
    friend class RatFunc;
};

// Element of Q(p,q) kept in a canonical num/den form:
//   * num, den have integer coefficients and gcd(content(num), content(den)) = 1;
//   * den is an ordinary polynomial (min exponents 0 in both p and q);
//   * num and den are coprime as polynomials;
//   * den's lexicographically leading coefficient is positive.
// Two equal field elements have identical representations.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const mpq_class& c);
    RatFunc(const LaurentPoly& num);
    RatFunc(LaurentPoly num, LaurentPoly den); // throws on den == 0

    static RatFunc p(int a = 1) { return RatFunc(LaurentPoly::p(a)); }
    static RatFunc q(int b = 1) { return RatFunc(LaurentPoly::q(b)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // throws on division by zero
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const;
    // p -> p^-1, q -> q^-1.
    RatFunc bar() const;

    // Iterated limit p->0 then q->0; throws PoleError if it does not exist.
    mpq_class specialize_p0_q0() const;
    bool is_regular_p0_q0() const;

    std::string str() const;
    static RatFunc parse(const std::string& text); // throws ParseError

private:
    void normalize();
    LaurentPoly num_;        // zero by default
    LaurentPoly den_{1};
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1), a Laurent polynomial in q.
RatFunc qint(int n);
// [n]! = [1][2]...[n]; [0]! = 1.
RatFunc qfact(int n); // pre: n >= 0
// {n} = p q^n + p^-1 q^-n.
RatFunc brace(int n);

// gcd in Z[p,q] of two integral ordinary polynomials (used by the canonical
// form; exposed for tests).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Membership in pZ[p,q,q^-1] (+) qZ[q]: every monomial p^a q^b has a >= 1,
// or a == 0 and b >= 1. Requires a Laurent-polynomial value.
bool in_positive_lattice(const RatFunc& f);
// Projection of a Laurent polynomial onto the positive lattice.
RatFunc positive_lattice_part(const RatFunc& f);
// Constant (p^0 q^0) coefficient of a Laurent-polynomial value.
mpq_class constant_part(const RatFunc& f);

} // namespace qsp

#endif
