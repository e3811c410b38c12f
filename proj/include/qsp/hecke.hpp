#ifndef QSP_HECKE_HPP
#define QSP_HECKE_HPP

#include <map>
#include <memory>
#include <vector>

#include "qsp/ratfunc.hpp"
#include "qsp/tableaux.hpp"
#include "qsp/weyl.hpp"

namespace qsp {

// Finitely supported combination of basis elements H_w, indexed through a
// WeylGroupB context. No zero coefficients are stored.
struct HeckeElt {
    std::map<int, RatFunc> coeffs;

    void add_term(int w, const RatFunc& c);
    bool is_zero() const { return coeffs.empty(); }
    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    HeckeElt scaled(const RatFunc& c) const;
    bool operator==(const HeckeElt& o) const { return coeffs == o.coeffs; }
    RatFunc coeff(int w) const;
};

// Unequal-parameter Hecke algebra of type B_d: generator 0 carries p, the
// others carry q; quadratic relation (H_i - q_i^{-1})(H_i + q_i) = 0.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(int d, std::size_t guard = 4000);

    const WeylGroupB& group() const { return group_; }
    int rank() const { return group_.rank(); }
    RatFunc gen_param(int gen) const;
    RatFunc q_w(int idx) const; // product of parameters along a reduced word

    HeckeElt unit() const;
    HeckeElt basis(int idx) const;
    HeckeElt basis(const SignedPerm& w) const { return basis(group_.index(w)); }

    HeckeElt gen_mul_left(int gen, const HeckeElt& x) const;
    HeckeElt gen_mul_right(const HeckeElt& x, int gen) const;
    HeckeElt gen_inv_mul_right(const HeckeElt& x, int gen) const;
    HeckeElt mul(const HeckeElt& x, const HeckeElt& y) const;

    // Ring automorphism: H_w -> H_{w^-1}^{-1}, p -> p^-1, q -> q^-1.
    HeckeElt bar(const HeckeElt& x) const;

    // Kazhdan-Lusztig basis element C_w (cached; ascending-length solve of
    // the bar fixed-point equation with positive-lattice projections).
    const HeckeElt& kl_basis(int w) const;
    // Coordinates of x in the C-basis.
    std::map<int, RatFunc> kl_expand(const HeckeElt& x) const;

    HeckeElt x_J(const std::vector<int>& J) const;

    // Parabolic KL element for w a minimal coset representative; computed by
    // an independent triangular solve inside x_J * H.
    HeckeElt parabolic_kl(const std::vector<int>& J, int w) const;
    // Coordinates of an element of x_J * H in the basis {x_J H_y}; validates
    // membership.
    std::map<int, RatFunc> module_coords(const std::vector<int>& J,
                                         const HeckeElt& x) const;
    // Coordinates in the parabolic KL basis.
    std::map<int, RatFunc> parabolic_kl_expand(const std::vector<int>& J,
                                               const HeckeElt& x) const;

    struct CellData {
        std::vector<std::vector<int>> cells;  // each sorted; cells sorted by min
        std::vector<int> cell_of;             // element index -> cell id
        std::vector<std::vector<char>> leq;   // leq[y][w]: y <=_L w
    };
    // Left cells, computed both from KL-expansion reachability closure and
    // from the recording-bitableau data; the two partitions are asserted
    // equal.
    const CellData& left_cells() const;

    // Recording pair (Q^-, Q^+) of an element.
    std::pair<Tableau, Tableau> recording_pair(int idx) const;

    // Row/column (anti)symmetrizers on letters {offset+1..offset+|lambda|}.
    HeckeElt gyoja_e(const Partition& lambda, int sign, int offset = 0) const;
    SignedPerm gyoja_shuffle(const Partition& lambda, int offset = 0) const;
    HeckeElt dipper_james_v(int a, int b) const;

private:
    WeylGroupB group_;
    mutable std::vector<HeckeElt> bar_cache_;
    mutable std::vector<char> bar_ready_;
    mutable std::vector<HeckeElt> kl_cache_;
    mutable std::vector<char> kl_ready_;
    mutable std::unique_ptr<CellData> cells_;
};

} // namespace qsp

#endif
