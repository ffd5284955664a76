#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "m0n/polynomial.hpp"

namespace m0n {

/// Image of a polynomial in the Chow ring, written over standard monomials.
struct NormalForm {
    int n = 0;
    /// Degree of the input; -1 for zero input or when inputs of several degrees were mixed.
    int degree = -1;
    Polynomial value;
};

/// Normal forms by rewriting.
///
/// Pass one applies the monomial and binomial relations a_i^2, incompatible
/// D_I D_J and the kernel relations: a monomial either dies or becomes its
/// canonical representative, whose a-part is square-free and supported in S.
/// Pass two finds a forest vertex I whose exponent exceeds the cap and
/// replaces D_I^{|W|} prod D_{children} by the remaining terms of the Chern
/// relation for I split along its children.  Each replacement lowers the
/// D-part in the order scanning small subsets first, so the process stops.
/// Results are memoised; the object is safe to share between threads.
class Reducer {
public:
    explicit Reducer(int n);

    int markings() const { return n_; }

    /// Pass one on a single monomial: nullopt when it is zero.
    std::optional<Monomial> kernel_reduce(const Monomial& m) const;
    Polynomial kernel_reduce(const Polynomial& p) const;

    Polynomial normal_form(const Monomial& m) const;
    Polynomial normal_form(const Polynomial& p) const;
    NormalForm reduce(const Polynomial& p) const;

    /// a_1 a_2 ... a_{n-3}, the point class.
    Monomial top_monomial() const;
    /// Coefficient of the point class.  Throws std::invalid_argument unless
    /// every term of p has degree n-3.
    Coeff integral(const Polynomial& p) const;

    /// The replacement for D_I^{|W|} prod D_J used when rewriting at vertex I
    /// with children J: that monomial is congruent to the returned polynomial.
    Polynomial rewrite_rule(IndexSet set, const std::vector<IndexSet>& children) const;

    /// Memoised normal forms of kernel-reduced monomials, in key order.
    std::vector<std::pair<Monomial, Polynomial>> memo_snapshot() const;
    /// Preloads a normal form (from a cache); the key must be kernel-reduced.
    void seed(const Monomial& m, Polynomial value);
    std::size_t memo_size() const;

private:
    Polynomial reduced_normal_form(const Monomial& k) const;

    int n_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Monomial, Polynomial, MonomialHash> memo_;
    mutable std::map<std::vector<IndexSet>, Polynomial> rules_;
};

}  // namespace m0n
