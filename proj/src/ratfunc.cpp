#include "qsp/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace qsp {

// ---------------------------------------------------------------------------
// LaurentPoly

void LaurentPoly::insert(int a, int b, const mpq_class& c) {
    if (c == 0) return;
    auto key = ExpPair{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int a, int b) {
    LaurentPoly r;
    r.insert(a, b, c);
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second == 1;
}

mpq_class LaurentPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int LaurentPoly::min_exp_p() const {
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::min(m, e.first);
    return m;
}
int LaurentPoly::max_exp_p() const {
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::max(m, e.first);
    return m;
}
int LaurentPoly::min_exp_q() const {
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
}
int LaurentPoly::max_exp_q() const {
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return m;
}

std::pair<ExpPair, mpq_class> LaurentPoly::lex_leading() const {
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e.first, e.second, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e.first, e.second, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.insert(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int da, int db) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(ExpPair{e.first + da, e.second + db}, v);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(ExpPair{-e.first, -e.second}, v);
    return r;
}

LaurentPoly LaurentPoly::at_p0() const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) {
        if (e.first < 0) throw PoleError("pole at p = 0");
        if (e.first == 0) r.terms_.emplace(e, v);
    }
    return r;
}

bool LaurentPoly::is_integral() const {
    for (const auto& [e, v] : terms_)
        if (v.get_den() != 1) return false;
    return true;
}

namespace {

std::string coeff_str(const mpq_class& c) {
    return c.get_str();
}

std::string term_str(const ExpPair& e, const mpq_class& mag) {
    std::vector<std::string> parts;
    if (mag != 1 || (e.first == 0 && e.second == 0)) parts.push_back(coeff_str(mag));
    if (e.first != 0)
        parts.push_back(e.first == 1 ? "p" : "p^" + std::to_string(e.first));
    if (e.second != 0)
        parts.push_back(e.second == 1 ? "q" : "q^" + std::to_string(e.second));
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "*";
        s += parts[i];
    }
    return s;
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        s += term_str(e, mag);
    }
    return s;
}

// ---------------------------------------------------------------------------
// gcd in Z[p,q], one variable at a time: polynomials in q over Z, then in p
// over Z[q]. Both levels share a subresultant PRS (keeps coefficient growth
// polynomial, unlike the naive primitive PRS).

namespace {

// Coefficient-ring operations for the generic PRS.
struct ZOps {
    using C = mpz_class;
    static bool is_zero(const C& a) { return a == 0; }
    static C one() { return C(1); }
    static C mul(const C& a, const C& b) { return a * b; }
    static C neg(const C& a) { return -a; }
    static C divexact(const C& a, const C& b) {
        C r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static C gcd(const C& a, const C& b) {
        C r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static int sign(const C& a) { return sgn(a); }
};

template <class Ops>
struct PolyRing {
    using C = typename Ops::C;
    using Poly = std::vector<C>;

    static void trim(Poly& a) {
        while (!a.empty() && Ops::is_zero(a.back())) a.pop_back();
    }
    static bool is_zero(const Poly& a) { return a.empty(); }
    static int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
    static const C& lc(const Poly& a) { return a.back(); }

    static Poly mul(const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, C());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = add(r[i + j], Ops::mul(a[i], b[j]));
        trim(r);
        return r;
    }

    static C add(const C& a, const C& b); // specialized below

    static Poly scale(const Poly& a, const C& c) {
        if (Ops::is_zero(c)) return {};
        Poly r;
        r.reserve(a.size());
        for (const auto& x : a) r.push_back(Ops::mul(x, c));
        trim(r);
        return r;
    }

    static Poly sub(const Poly& a, const Poly& b) {
        Poly r = a;
        if (b.size() > r.size()) r.resize(b.size(), C());
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], Ops::neg(b[i]));
        trim(r);
        return r;
    }

    static Poly shift(const Poly& a, int k) {
        if (a.empty()) return {};
        Poly r(a.size() + k, C());
        for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
        return r;
    }

    static C content(const Poly& a) {
        C g{};
        for (const auto& x : a) g = Ops::gcd(g, x);
        return g;
    }

    static Poly divexact_c(const Poly& a, const C& c) {
        Poly r;
        r.reserve(a.size());
        for (const auto& x : a)
            r.push_back(Ops::is_zero(x) ? x : Ops::divexact(x, c));
        return r;
    }

    static Poly pp(const Poly& a) {
        if (a.empty()) return a;
        C c = content(a);
        Poly r = divexact_c(a, c);
        if (Ops::sign(lc(r)) < 0)
            for (auto& x : r) x = Ops::neg(x);
        return r;
    }

    // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    static Poly prem(Poly a, const Poly& b) {
        const int db = deg(b);
        const C& lb = lc(b);
        int needed = deg(a) - db + 1;
        int used = 0;
        while (!is_zero(a) && deg(a) >= db) {
            int sh = deg(a) - db;
            C la = lc(a);
            a = sub(scale(a, lb), scale(shift(b, sh), la));
            ++used;
        }
        for (; used < needed; ++used) a = scale(a, lb);
        return a;
    }

    static C cpow(C base, int e) {
        C r = Ops::one();
        for (int k = 0; k < e; ++k) r = Ops::mul(r, base);
        return r;
    }

    // Subresultant PRS gcd; result primitive-times-content, sign-normalized.
    static Poly gcd(Poly a, Poly b) {
        trim(a);
        trim(b);
        if (is_zero(a)) return is_zero(b) || Ops::sign(lc(b)) > 0 ? b : scale(b, Ops::neg(Ops::one()));
        if (is_zero(b)) return Ops::sign(lc(a)) > 0 ? a : scale(a, Ops::neg(Ops::one()));
        C c = Ops::gcd(content(a), content(b));
        a = pp(a);
        b = pp(b);
        if (deg(a) < deg(b)) std::swap(a, b);
        C g = Ops::one(), h = Ops::one();
        for (;;) {
            int delta = deg(a) - deg(b);
            Poly r = prem(a, b);
            if (is_zero(r)) break;
            if (deg(b) == 0) { b = {Ops::one()}; break; }
            a = std::move(b);
            b = divexact_c(r, Ops::mul(g, cpow(h, delta)));
            g = lc(a);
            h = delta == 0 ? h : Ops::divexact(cpow(g, delta), cpow(h, delta - 1));
        }
        return scale(pp(b), c);
    }
};

template <>
mpz_class PolyRing<ZOps>::add(const mpz_class& a, const mpz_class& b) {
    return a + b;
}

using P1 = std::vector<mpz_class>; // polynomial in q over Z
using R1 = PolyRing<ZOps>;

struct P1Ops {
    using C = P1;
    static bool is_zero(const C& a) { return a.empty(); }
    static C one() { return C{mpz_class(1)}; }
    static C mul(const C& a, const C& b) { return R1::mul(a, b); }
    static C neg(const C& a) { return R1::scale(a, mpz_class(-1)); }
    static C gcd(const C& a, const C& b) { return R1::gcd(a, b); }
    static int sign(const C& a) { return a.empty() ? 0 : sgn(a.back()); }
    // Exact division a / b in Z[q]; pre: b | a.
    static C divexact(const C& a, const C& b) {
        if (a.empty()) return {};
        C r = a, qout(a.size() - b.size() + 1, mpz_class(0));
        const mpz_class& lb = b.back();
        while (!r.empty()) {
            int sh = R1::deg(r) - R1::deg(b);
            if (sh < 0) throw InternalError("divexact: not divisible");
            mpz_class t;
            mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
            qout[sh] = t;
            r = R1::sub(r, R1::shift(R1::scale(b, t), sh));
        }
        R1::trim(qout);
        return qout;
    }
};

using P2 = std::vector<P1>; // polynomial in p over Z[q]
using R2 = PolyRing<P1Ops>;

template <>
P1 PolyRing<P1Ops>::add(const P1& a, const P1& b) {
    P1 r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    R1::trim(r);
    return r;
}

P1 p1_gcd(const P1& a, const P1& b) { return R1::gcd(a, b); }
P2 p2_gcd(const P2& a, const P2& b) { return R2::gcd(a, b); }

P2 to_p2(const LaurentPoly& f) {
    P2 r;
    for (const auto& [e, c] : f.terms()) {
        if (e.first < 0 || e.second < 0)
            throw InternalError("to_p2: negative exponent");
        if (c.get_den() != 1) throw InternalError("to_p2: non-integral coefficient");
        if (static_cast<int>(r.size()) <= e.first) r.resize(e.first + 1);
        P1& row = r[e.first];
        if (static_cast<int>(row.size()) <= e.second) row.resize(e.second + 1, mpz_class(0));
        row[e.second] = c.get_num();
    }
    for (auto& row : r) R1::trim(row);
    R2::trim(r);
    return r;
}

LaurentPoly from_p2(const P2& f) {
    LaurentPoly r;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f[i].size(); ++j)
            if (f[i][j] != 0)
                r += LaurentPoly::monomial(mpq_class(f[i][j]), static_cast<int>(i),
                                           static_cast<int>(j));
    return r;
}

// Exact division of Laurent polynomials over Q (pre: b | a).
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return {};
    LaurentPoly r = a, quot;
    auto [eb, cb] = b.lex_leading();
    // Exact quotients have at most as many terms as fit in a's exponent box.
    std::size_t box = static_cast<std::size_t>(a.max_exp_p() - a.min_exp_p() + 1) *
                      static_cast<std::size_t>(a.max_exp_q() - a.min_exp_q() + 1);
    std::size_t steps = 0, cap = 2 * box + 16;
    while (!r.is_zero()) {
        if (++steps > cap) throw InternalError("laurent_divexact: not divisible");
        auto [ea, ca] = r.lex_leading();
        LaurentPoly mono =
            LaurentPoly::monomial(ca / cb, ea.first - eb.first, ea.second - eb.second);
        quot += mono;
        r -= mono * b;
    }
    return quot;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero()) r = b;
    else if (b.is_zero()) r = a;
    else r = from_p2(p2_gcd(to_p2(a), to_p2(b)));
    if (!r.is_zero() && r.lex_leading().second < 0) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const mpq_class& c) : num_(c), den_(1) {}

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(1) {
    if (!num_.is_zero() && !num_.is_integral()) normalize();
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one() && num_.is_integral()) return;

    // Clear rational coefficients.
    mpz_class m = 1;
    for (const auto& [e, c] : num_.terms())
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : den_.terms())
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den().get_mpz_t());
    if (m != 1) {
        num_ = num_.scaled(mpq_class(m));
        den_ = den_.scaled(mpq_class(m));
    }

    // Make the denominator an ordinary polynomial with min exponents zero.
    int dp = den_.min_exp_p(), dq = den_.min_exp_q();
    if (dp != 0 || dq != 0) {
        den_ = den_.shifted(-dp, -dq);
        num_ = num_.shifted(-dp, -dq);
    }

    // Shift the numerator into ordinary position for the gcd.
    int sp = std::max(0, -num_.min_exp_p()), sq = std::max(0, -num_.min_exp_q());
    LaurentPoly n = num_.shifted(sp, sq);

    LaurentPoly g = poly_gcd(n, den_);
    if (!g.is_one()) {
        n = laurent_divexact(n, g);
        den_ = laurent_divexact(den_, g);
    }

    // Joint content 1.
    mpz_class cn = 0, cd = 0;
    for (const auto& [e, c] : n.terms()) {
        mpz_class a = abs(c.get_num());
        mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), a.get_mpz_t());
    }
    for (const auto& [e, c] : den_.terms()) {
        mpz_class a = abs(c.get_num());
        mpz_gcd(cd.get_mpz_t(), cd.get_mpz_t(), a.get_mpz_t());
    }
    mpz_class cc;
    mpz_gcd(cc.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cc != 1) {
        mpq_class inv(mpz_class(1), cc);
        n = n.scaled(inv);
        den_ = den_.scaled(inv);
    }

    if (den_.lex_leading().second < 0) {
        n = -n;
        den_ = -den_;
    }
    num_ = n.shifted(-sp, -sq);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    RatFunc r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (den_.is_one()) {
            if (r.num_.is_zero()) r.den_ = LaurentPoly(1);
            return r;
        }
        r.normalize();
        return r;
    }
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc r;
    r.num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) {
        r.den_ = LaurentPoly(1);
        return r;
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

RatFunc RatFunc::bar() const {
    RatFunc r;
    r.num_ = num_.bar();
    r.den_ = den_.bar();
    r.normalize();
    return r;
}

mpq_class RatFunc::specialize_p0_q0() const {
    if (num_.is_zero()) return 0;
    if (num_.min_exp_p() < 0) throw PoleError("pole in the iterated limit (p)");
    LaurentPoly n0 = num_.at_p0();
    LaurentPoly d0 = den_.at_p0();
    if (d0.is_zero())
        throw InternalError("canonical denominator vanished at p = 0");
    if (n0.is_zero()) return 0;
    int w = n0.min_exp_q() - d0.min_exp_q();
    if (w < 0) throw PoleError("pole in the iterated limit (q)");
    if (w > 0) return 0;
    return n0.coeff(0, n0.min_exp_q()) / d0.coeff(0, d0.min_exp_q());
}

bool RatFunc::is_regular_p0_q0() const {
    try {
        specialize_p0_q0();
        return true;
    } catch (const PoleError&) {
        return false;
    }
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Parsing: integers, p, q, + - * / ^ and parentheses.

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    RatFunc parse_expr() {
        RatFunc r = parse_term();
        for (;;) {
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else return r;
        }
    }

    RatFunc parse_term() {
        RatFunc r = parse_factor();
        for (;;) {
            if (eat('*')) r *= parse_factor();
            else if (eat('/')) {
                RatFunc d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero in expression");
                r /= d;
            } else return r;
        }
    }

    int parse_int() {
        skip();
        bool neg = eat('-');
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer at position " + std::to_string(i));
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw ParseError("exponent too large");
            ++i;
        }
        return static_cast<int>(neg ? -v : v);
    }

    RatFunc parse_factor() {
        if (eat('-')) return -parse_factor();
        RatFunc base = parse_atom();
        if (eat('^')) {
            int e = parse_int();
            RatFunc r(1);
            RatFunc b = e < 0 ? base.inv() : base;
            for (int k = 0; k < std::abs(e); ++k) r *= b;
            return r;
        }
        return base;
    }

    RatFunc parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = parse_expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return r;
        }
        if (c == 'p') {
            ++i;
            return RatFunc::p();
        }
        if (c == 'q') {
            ++i;
            return RatFunc::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                ++i;
            }
            return RatFunc(mpq_class(v));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFunc RatFunc::parse(const std::string& text) {
    Parser p(text);
    RatFunc r = p.parse_expr();
    p.skip();
    if (p.i != text.size())
        throw ParseError("trailing input at position " + std::to_string(p.i));
    return r;
}

// ---------------------------------------------------------------------------
// Quantum quantities.

RatFunc qint(int n) {
    if (n < 0) return -qint(-n);
    LaurentPoly r;
    for (int k = 0; k < n; ++k) r += LaurentPoly::q(n - 1 - 2 * k);
    return RatFunc(r);
}

RatFunc qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    RatFunc r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

RatFunc brace(int n) {
    LaurentPoly r = LaurentPoly::monomial(1, 1, n) + LaurentPoly::monomial(1, -1, -n);
    return RatFunc(r);
}

bool in_positive_lattice(const RatFunc& f) {
    if (!f.is_laurent()) return false;
    for (const auto& [e, c] : f.num().terms())
        if (!(e.first >= 1 || (e.first == 0 && e.second >= 1))) return false;
    return true;
}

RatFunc positive_lattice_part(const RatFunc& f) {
    if (!f.is_laurent()) throw InternalError("positive_lattice_part: not a Laurent polynomial");
    LaurentPoly r;
    for (const auto& [e, c] : f.num().terms())
        if (e.first >= 1 || (e.first == 0 && e.second >= 1))
            r += LaurentPoly::monomial(c, e.first, e.second);
    return RatFunc(r);
}

mpq_class constant_part(const RatFunc& f) {
    if (!f.is_laurent()) throw InternalError("constant_part: not a Laurent polynomial");
    return f.num().coeff(0, 0);
}

} // namespace qsp
