#pragma once

#include <optional>
#include <vector>

#include "m0n/forest.hpp"
#include "m0n/monomial.hpp"

namespace m0n {

/// A monomial certified standard, together with the data the certificate
/// produced: the forest of its D-part (vertices in D-factor order, largest set
/// first), the support set S and the a-support A_v ⊆ S.
class StandardMonomial {
public:
    /// nullopt unless m is standard for n markings.
    static std::optional<StandardMonomial> make(const Monomial& m, int n);
    /// Throws std::invalid_argument unless m is standard.
    static StandardMonomial from(const Monomial& m, int n);

    const Monomial& monomial() const { return mono_; }
    const Forest& forest() const { return forest_; }
    IndexSet support() const { return support_; }
    IndexSet a_support() const { return a_support_; }
    int markings() const { return forest_.markings(); }
    int degree() const { return mono_.degree(); }
    /// Exponent of D at forest vertex v.
    int exponent(std::size_t v) const { return mono_.d_factors()[v].second; }

    bool operator==(const StandardMonomial& o) const { return mono_ == o.mono_; }

private:
    StandardMonomial(Monomial m, Forest f, IndexSet support);

    Monomial mono_;
    Forest forest_;
    IndexSet support_;
    IndexSet a_support_;
};

/// Compatible D-part, square-free a-part supported in S, and every
/// D-exponent at most the forest's exponent cap.
bool is_standard(const Monomial& m, int n);

/// All standard monomials of degree d, ascending in the monomial order.
std::vector<StandardMonomial> enumerate_standard(int n, int d,
                                                 OrderConvention c = kDefaultConvention);

/// Number of standard monomials of degree d.
std::size_t count_standard(int n, int d);

/// The dual exponents j_r = cap_r + 1 - i_r, in forest vertex order.
std::vector<int> dual_exponents(const StandardMonomial& v);

/// v* = prod_{i in S - A_v} a_i * prod D_{I_r}^{j_r}.
StandardMonomial dual(const StandardMonomial& v);

/// p(v) = deg a(v) + sum over all roots J of (|J| - 1).
int filtration_p(const StandardMonomial& v);

}  // namespace m0n
