#include "qsp/hecke.hpp"

#include <algorithm>
#include <functional>

namespace qsp {

void HeckeElt::add_term(int w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt r = *this;
    for (const auto& [w, c] : o.coeffs) r.add_term(w, c);
    return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
    HeckeElt r = *this;
    for (const auto& [w, c] : o.coeffs) r.add_term(w, -c);
    return r;
}

HeckeElt HeckeElt::scaled(const RatFunc& c) const {
    HeckeElt r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : coeffs) r.coeffs.emplace(w, v * c);
    return r;
}

RatFunc HeckeElt::coeff(int w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? RatFunc(0) : it->second;
}

// ---------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(int d, std::size_t guard) : group_(d, guard) {
    bar_cache_.resize(group_.size());
    bar_ready_.assign(group_.size(), 0);
    kl_cache_.resize(group_.size());
    kl_ready_.assign(group_.size(), 0);
}

RatFunc HeckeAlgebra::gen_param(int gen) const {
    return gen == 0 ? RatFunc::p() : RatFunc::q();
}

RatFunc HeckeAlgebra::q_w(int idx) const {
    RatFunc r(1);
    for (int g : group_.reduced_word(idx)) r *= gen_param(g);
    return r;
}

HeckeElt HeckeAlgebra::unit() const { return basis(group_.id_index()); }

HeckeElt HeckeAlgebra::basis(int idx) const {
    HeckeElt r;
    r.add_term(idx, RatFunc(1));
    return r;
}

HeckeElt HeckeAlgebra::gen_mul_left(int gen, const HeckeElt& x) const {
    HeckeElt r;
    RatFunc qg = gen_param(gen);
    RatFunc corr = qg - qg.inv();
    for (const auto& [w, c] : x.coeffs) {
        int sw = group_.mul_gen_left(gen, w);
        if (group_.length(sw) > group_.length(w)) {
            r.add_term(sw, c);
        } else {
            r.add_term(sw, c);
            r.add_term(w, -(corr * c));
        }
    }
    return r;
}

HeckeElt HeckeAlgebra::gen_mul_right(const HeckeElt& x, int gen) const {
    HeckeElt r;
    RatFunc qg = gen_param(gen);
    RatFunc corr = qg - qg.inv();
    for (const auto& [w, c] : x.coeffs) {
        int ws = group_.mul_gen_right(w, gen);
        if (group_.length(ws) > group_.length(w)) {
            r.add_term(ws, c);
        } else {
            r.add_term(ws, c);
            r.add_term(w, -(corr * c));
        }
    }
    return r;
}

HeckeElt HeckeAlgebra::gen_inv_mul_right(const HeckeElt& x, int gen) const {
    // H_g^{-1} = H_g + (q_g - q_g^{-1}).
    RatFunc qg = gen_param(gen);
    HeckeElt r = gen_mul_right(x, gen);
    for (const auto& [w, c] : x.coeffs) r.add_term(w, (qg - qg.inv()) * c);
    return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& x, const HeckeElt& y) const {
    HeckeElt out;
    for (const auto& [w, c] : x.coeffs) {
        HeckeElt cur = y;
        const auto& word = group_.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = gen_mul_left(*it, cur);
        for (const auto& [v, cv] : cur.coeffs) out.add_term(v, c * cv);
    }
    return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& x) const {
    HeckeElt out;
    for (const auto& [w, c] : x.coeffs) {
        if (!bar_ready_[w]) {
            // bar(H_w) = H_{i1}^{-1} ... H_{il}^{-1} for w = s_{i1} ... s_{il}.
            HeckeElt acc = unit();
            for (int g : group_.reduced_word(w)) acc = gen_inv_mul_right(acc, g);
            bar_cache_[w] = acc;
            bar_ready_[w] = 1;
        }
        RatFunc cb = c.bar();
        for (const auto& [v, cv] : bar_cache_[w].coeffs) out.add_term(v, cb * cv);
    }
    return out;
}

const HeckeElt& HeckeAlgebra::kl_basis(int w) const {
    if (kl_ready_[w]) return kl_cache_[w];
    HeckeElt c = basis(w);
    for (;;) {
        HeckeElt defect = bar(c) - c;
        if (defect.is_zero()) break;
        int top = -1;
        for (const auto& [y, cy] : defect.coeffs)
            if (top < 0 || group_.length(y) > group_.length(top)) top = y;
        int toplen = group_.length(top);
        for (const auto& [y, cy] : defect.coeffs) {
            if (group_.length(y) != toplen) continue;
            if (!cy.is_laurent() || constant_part(cy) != 0 || !(cy.bar() == -cy))
                throw InternalError("KL defect is not anti-invariant at level " +
                                    std::to_string(toplen));
            RatFunc t = positive_lattice_part(cy);
            if (!(t - t.bar() == cy))
                throw InternalError("positive-lattice projection failed");
            c.add_term(y, t);
        }
    }
    // Structural guarantees: unitriangular with positive-lattice coefficients
    // supported on the Bruhat interval.
    for (const auto& [y, cy] : c.coeffs) {
        if (y == w) {
            if (!(cy == RatFunc(1))) throw InternalError("KL leading coefficient != 1");
            continue;
        }
        if (!group_.bruhat_leq(y, w) || !in_positive_lattice(cy))
            throw InternalError("KL coefficient outside the expected lattice");
    }
    kl_cache_[w] = std::move(c);
    kl_ready_[w] = 1;
    return kl_cache_[w];
}

std::map<int, RatFunc> HeckeAlgebra::kl_expand(const HeckeElt& x) const {
    std::map<int, RatFunc> out;
    HeckeElt rest = x;
    while (!rest.is_zero()) {
        int top = -1;
        for (const auto& [y, cy] : rest.coeffs)
            if (top < 0 || group_.length(y) > group_.length(top)) top = y;
        RatFunc c = rest.coeff(top);
        out[top] = c;
        rest = rest - kl_basis(top).scaled(c);
    }
    return out;
}

HeckeElt HeckeAlgebra::x_J(const std::vector<int>& J) const {
    for (int g : J)
        if (g < 0 || g >= group_.rank()) throw RankError("x_J: bad generator index");
    HeckeElt r;
    int wj = group_.longest_element(J);
    RatFunc qwj = q_w(wj);
    for (int w : group_.parabolic_elements(J)) r.add_term(w, qwj * q_w(w).inv());
    return r;
}

std::map<int, RatFunc> HeckeAlgebra::module_coords(const std::vector<int>& J,
                                                   const HeckeElt& x) const {
    int wj = group_.longest_element(J);
    RatFunc qwj = q_w(wj);
    std::map<int, RatFunc> out;
    for (const auto& [v, c] : x.coeffs) {
        auto [u, y] = group_.coset_decompose(v, J);
        RatFunc expected_unit = qwj * q_w(u).inv();
        RatFunc coord = c / expected_unit;
        auto it = out.find(y);
        if (it == out.end()) out.emplace(y, coord);
        else if (!(it->second == coord))
            throw InternalError("element is not in x_J * H");
    }
    return out;
}

HeckeElt HeckeAlgebra::parabolic_kl(const std::vector<int>& J, int w) const {
    if (!group_.is_min_coset_rep(w, J))
        throw NotMinimalCoset("not a minimal coset representative: " +
                              group_.element(w).str());
    HeckeElt xj = x_J(J);
    auto basis_elt = [&](int y) {
        HeckeElt cur = xj;
        for (int g : group_.reduced_word(y)) cur = gen_mul_right(cur, g);
        return cur;
    };
    HeckeElt c = basis_elt(w);
    for (;;) {
        HeckeElt defect = bar(c) - c;
        if (defect.is_zero()) break;
        auto coords = module_coords(J, defect);
        int top = -1;
        for (const auto& [y, cy] : coords)
            if (!cy.is_zero() && (top < 0 || group_.length(y) > group_.length(top)))
                top = y;
        if (top < 0) throw InternalError("parabolic defect with empty coordinates");
        int toplen = group_.length(top);
        for (const auto& [y, cy] : coords) {
            if (cy.is_zero() || group_.length(y) != toplen) continue;
            if (!cy.is_laurent() || !(constant_part(cy) == 0) || !(cy.bar() == -cy))
                throw InternalError("parabolic defect not anti-invariant");
            RatFunc t = positive_lattice_part(cy);
            c = c + basis_elt(y).scaled(t);
        }
    }
    return c;
}

std::map<int, RatFunc> HeckeAlgebra::parabolic_kl_expand(const std::vector<int>& J,
                                                         const HeckeElt& x) const {
    std::map<int, RatFunc> rest = module_coords(J, x);
    std::map<int, RatFunc> out;
    auto nonzero_top = [&]() {
        int top = -1;
        for (const auto& [y, c] : rest)
            if (!c.is_zero() && (top < 0 || group_.length(y) > group_.length(top)))
                top = y;
        return top;
    };
    for (;;) {
        int top = nonzero_top();
        if (top < 0) break;
        RatFunc c = rest.at(top);
        out[top] = c;
        auto sub = module_coords(J, parabolic_kl(J, top));
        for (const auto& [y, cy] : sub) {
            auto it = rest.find(y);
            RatFunc cur = it == rest.end() ? RatFunc(0) : it->second;
            rest[y] = cur - c * cy;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Left cells

const HeckeAlgebra::CellData& HeckeAlgebra::left_cells() const {
    if (cells_) return *cells_;
    int n = group_.size();
    // Arcs w -> y whenever C_y appears in H_s C_w for some generator s.
    std::vector<std::vector<int>> arcs(n);
    for (int w = 0; w < n; ++w) {
        for (int g = 0; g < group_.rank(); ++g) {
            HeckeElt prod = gen_mul_left(g, kl_basis(w));
            for (const auto& [y, c] : kl_expand(prod)) {
                if (c.is_zero()) continue;
                arcs[w].push_back(y);
            }
        }
        std::sort(arcs[w].begin(), arcs[w].end());
        arcs[w].erase(std::unique(arcs[w].begin(), arcs[w].end()), arcs[w].end());
    }
    // Reachability closure: leq[y][w] <=> y <=_L w <=> path w ->* y.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int w = 0; w < n; ++w) {
        std::vector<int> stack{w};
        reach[w][w] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int y : arcs[cur])
                if (!reach[w][y]) {
                    reach[w][y] = 1;
                    stack.push_back(y);
                }
        }
    }
    auto cells = std::make_unique<CellData>();
    cells->leq.assign(n, std::vector<char>(n, 0));
    for (int w = 0; w < n; ++w)
        for (int y = 0; y < n; ++y) cells->leq[y][w] = reach[w][y];

    cells->cell_of.assign(n, -1);
    int ncell = 0;
    for (int w = 0; w < n; ++w) {
        if (cells->cell_of[w] >= 0) continue;
        int id = ncell++;
        for (int y = 0; y < n; ++y)
            if (reach[w][y] && reach[y][w]) cells->cell_of[y] = id;
    }
    cells->cells.assign(ncell, {});
    for (int w = 0; w < n; ++w) cells->cells[cells->cell_of[w]].push_back(w);
    for (auto& c : cells->cells) std::sort(c.begin(), c.end());
    std::sort(cells->cells.begin(), cells->cells.end());
    // Re-map ids after sorting.
    for (int id = 0; id < ncell; ++id)
        for (int w : cells->cells[id]) cells->cell_of[w] = id;

    // The recording-bitableau partition must coincide.
    std::map<std::pair<Tableau, Tableau>, std::vector<int>> by_q;
    for (int w = 0; w < n; ++w) by_q[recording_pair(w)].push_back(w);
    if (by_q.size() != static_cast<std::size_t>(ncell))
        throw InternalError("cell count differs from recording-pair count");
    for (auto& [qpair, members] : by_q) {
        std::sort(members.begin(), members.end());
        int id = cells->cell_of[members[0]];
        if (cells->cells[id] != members)
            throw InternalError("KL cells differ from recording-pair classes");
    }

    cells_ = std::move(cells);
    return *cells_;
}

std::pair<Tableau, Tableau> HeckeAlgebra::recording_pair(int idx) const {
    SignedRS t = pq_signed(group_.element(idx).window());
    return {t.q_minus, t.q_plus};
}

// ---------------------------------------------------------------------------
// Row/column quasi-idempotents and the two-block element

namespace {

// Consecutive blocks covering {offset+1 .. offset+n}: block sizes `sizes`.
// Returns the generator indices i (acting on letters i, i+1) internal to the
// blocks.
std::vector<int> internal_generators(const std::vector<int>& sizes, int offset) {
    std::vector<int> gens;
    int pos = offset;
    for (int s : sizes) {
        for (int i = pos + 1; i < pos + s; ++i) gens.push_back(i);
        pos += s;
    }
    return gens;
}

} // namespace

HeckeElt HeckeAlgebra::gyoja_e(const Partition& lambda, int sign, int offset) const {
    Partition shape = lambda.stripped();
    std::vector<int> sizes =
        sign > 0 ? shape.parts : shape.transpose().parts;
    std::vector<int> gens = internal_generators(sizes, offset);
    for (int g : gens)
        if (g < 1 || g >= group_.rank()) throw RankError("gyoja_e: letters out of range");
    HeckeElt r;
    for (int w : group_.parabolic_elements(gens)) {
        int l = group_.length(w);
        RatFunc c = sign > 0 ? RatFunc::q(-l) : RatFunc::q(l);
        if (sign < 0 && l % 2 == 1) c = -c;
        r.add_term(w, c);
    }
    return r;
}

SignedPerm HeckeAlgebra::gyoja_shuffle(const Partition& lambda, int offset) const {
    Partition shape = lambda.stripped();
    Partition tr = shape.transpose();
    int d = group_.rank();
    std::vector<int> window(d);
    for (int i = 0; i < d; ++i) window[i] = i + 1;
    // T_plus: row-major numbering; T_minus: column-major. The shuffle maps
    // T_minus labels to T_plus labels.
    int n = shape.size();
    std::vector<std::pair<int, int>> cell_of_minus(n + 1);
    for (int j = 0, v = 1; j < tr.length(); ++j)
        for (int i = 0; i < tr.parts[j]; ++i) cell_of_minus[v++] = {i, j};
    auto t_plus = [&](int i, int j) {
        int v = 0;
        for (int k = 0; k < i; ++k) v += shape.parts[k];
        return v + j + 1;
    };
    for (int v = 1; v <= n; ++v) {
        auto [i, j] = cell_of_minus[v];
        window[offset + v - 1] = offset + t_plus(i, j);
    }
    return SignedPerm(std::move(window));
}

HeckeElt HeckeAlgebra::dipper_james_v(int a, int b) const {
    int d = group_.rank();
    if (a + b != d) throw ShapeError("dipper_james_v: a + b must equal the rank");
    auto s_down = [&](int i) {
        // s_{i,1} = s_{i-1} ... s_1 (identity for i = 1).
        SignedPerm w = SignedPerm::identity(d);
        for (int k = i - 1; k >= 1; --k) w = w * SignedPerm::generator(d, k);
        return w;
    };
    auto factor = [&](int i, bool plus_form) {
        // p + H_{s_{i,1}} H_0 H_{s_{1,i}}   or   1 - p H_{s_{i,1}} H_0 H_{s_{1,i}}
        SignedPerm si1 = s_down(i);
        HeckeElt m = mul(mul(basis(si1), basis(SignedPerm::generator(d, 0))),
                         basis(si1.inverse()));
        HeckeElt r;
        if (plus_form) {
            r = m;
            r.add_term(group_.id_index(), RatFunc::p());
        } else {
            r = m.scaled(-RatFunc::p());
            r.add_term(group_.id_index(), RatFunc(1));
        }
        return r;
    };
    HeckeElt acc = unit();
    for (int i = 1; i <= a; ++i) acc = mul(acc, factor(i, true));
    // w_{a,b} = (s_{d,1})^b with s_{d,1} = s_{d-1} ... s_1.
    SignedPerm w = SignedPerm::identity(d), sd1 = s_down(d);
    for (int k = 0; k < b; ++k) w = w * sd1;
    acc = mul(acc, basis(w));
    for (int j = 1; j <= b; ++j) acc = mul(acc, factor(j, false));
    return acc;
}

} // namespace qsp
