#ifndef QSP_WEYL_HPP
#define QSP_WEYL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

// Element of the Weyl group of type B_d in window notation: the images
// (w(1),...,w(d)), where absolute values form a permutation of {1..d} and
// w(-k) = -w(k). Generator 0 negates the first entry, generator j swaps
// positions j, j+1.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> window);
    static SignedPerm identity(int d);
    static SignedPerm generator(int d, int gen);

    int rank() const { return static_cast<int>(win_.size()); }
    const std::vector<int>& window() const { return win_; }
    int apply(int k) const; // k in {-d..-1, 1..d}
    bool is_identity() const;

    // (xy)(k) = x(y(k)); right multiplication by a generator edits the window.
    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;

    // Coxeter length via the inversion formula.
    int length() const;
    // Reduced word from greedy right-descent peeling; its size equals length().
    std::vector<int> reduced_word() const;

    auto operator<=>(const SignedPerm&) const = default;
    std::string str() const;
    static SignedPerm parse(const std::string& text);

private:
    std::vector<int> win_;
};

// Fully enumerated W_d with index tables, lengths, reduced words, Bruhat
// order and parabolic helpers.
class WeylGroupB {
public:
    explicit WeylGroupB(int d, std::size_t guard = 4000);

    int rank() const { return d_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const SignedPerm& element(int idx) const { return elements_[idx]; }
    int index(const SignedPerm& w) const;
    int id_index() const { return id_; }

    int mul_gen_left(int gen, int idx) const { return left_[gen][idx]; }
    int mul_gen_right(int idx, int gen) const { return right_[gen][idx]; }
    int mul(int a, int b) const; // index of element(a)*element(b)
    int inverse(int idx) const { return inv_[idx]; }
    int length(int idx) const { return len_[idx]; }
    const std::vector<int>& reduced_word(int idx) const { return words_[idx]; }

    bool bruhat_leq(int y, int w) const;

    std::vector<int> parabolic_elements(const std::vector<int>& J) const;
    int longest_element(const std::vector<int>& J) const;
    bool is_min_coset_rep(int idx, const std::vector<int>& J) const;
    // w = u * y with u in W_J and y the minimal-length coset representative.
    std::pair<int, int> coset_decompose(int idx, const std::vector<int>& J) const;

private:
    int d_ = 0;
    int id_ = 0;
    std::vector<SignedPerm> elements_;
    std::map<SignedPerm, int> index_;
    std::vector<std::vector<int>> left_, right_; // per generator
    std::vector<int> inv_, len_;
    std::vector<std::vector<int>> words_;
    mutable std::vector<std::vector<char>> bruhat_; // lazily filled rows
};

} // namespace qsp

#endif
