#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "m0n/polynomial.hpp"

namespace m0n {

/// Class of the subvariety X_I of (P^1)^{n-3}, written in the a_i.
struct AmbientClass {
    IndexSet set;
    Polynomial poly;
};

/// Non-special I = {i_1 < ... < i_k}: e_{k-1}(a_{i_1}, ..., a_{i_k}).
/// Special I with special element s: prod_{i in I - s} a_i.
AmbientClass ambient_class(IndexSet set, int n);

/// Ideal generators for the kernel of multiplication by [X_I] on Z[a]/(a_i^2).
/// Non-special I: a_i - a_j and a_i a_j for i < j in I.  Special I: a_i for i in I - s.
std::vector<Polynomial> kernel_generators(IndexSet set, int n);

/// A divisor in a transversal decomposition of X_I: its class and the pair of
/// markings it identifies.  X_J lies in the divisor exactly when pair ⊆ J.
struct DefiningDivisor {
    Polynomial cls;
    IndexSet pair;
};

/// Canonical transversal decomposition of X_I into divisors.
std::vector<DefiningDivisor> defining_divisors(IndexSet set, int n);

/// Divisors W with X_I = X_{J_1} ∩ ... ∩ X_{J_k} ∩ W transversally, for pairwise
/// disjoint admissible parts J_t strictly inside I.  |W| = |I| - |∪J_t| + k - 1.
std::vector<DefiningDivisor> complement_divisors(IndexSet set, std::span<const IndexSet> parts, int n);

/// D_I + sum of D_J over admissible J strictly containing I: the class subtracted
/// from every divisor of a decomposition of X_I on passing to proper transforms.
Polynomial transform_correction(IndexSet set, int n);

/// R5: prod_{c in defining_divisors(I)} (cls(c) - transform_correction(I)).
Polynomial chern_relation_full(IndexSet set, int n);

/// R4 with one part: D_J * prod_{c in W(I,J)} (cls(c) - transform_correction(I)).
/// Throws std::invalid_argument unless J is strictly inside I.
Polynomial chern_relation_mixed(IndexSet set, IndexSet part, int n);

/// R4 with k >= 0 pairwise disjoint parts (k = 0 gives R5).
Polynomial chern_relation_split(IndexSet set, std::span<const IndexSet> parts, int n);

enum class RelationFamily { Square = 1, Incompatible = 2, Kernel = 3, MixedChern = 4, FullChern = 5 };

/// "R1".."R5".
std::string_view family_tag(RelationFamily f);

struct Relation {
    RelationFamily family;
    Polynomial poly;
    /// Provenance.  R1: index.  R2: the two sets.  R3: {I} and the kernel
    /// generator.  R4: {I, J_1, ..., J_k}.  R5: {I}.
    int index = 0;
    std::vector<IndexSet> sets;
    std::optional<Polynomial> kernel_generator;
};

struct RelationOptions {
    /// Also emit R4 for splittings into two or more disjoint parts.
    bool multi_split = false;
};

struct RelationSet {
    int n = 0;
    int max_degree = 0;
    RelationOptions options;
    std::vector<Relation> relations;

    std::size_t count(RelationFamily f) const;
};

/// Every relation of the five families of degree at most max_degree,
/// ordered by family and then by the order of the admissible sets.
RelationSet generate_relations(int n, int max_degree, RelationOptions options = {});

/// Linear combination of boundary divisors D_T of the Keel presentation.
using KeelLinearForm = std::map<IndexSet, Coeff>;

/// Dictionary between the a_i, D_I presentation and Keel's boundary-divisor
/// presentation.  Keel divisors are the sets T with 2 <= |T| <= n-2 and at
/// most one special marking.
struct KeelDictionary {
    int n = 0;
    /// Ascending in the subset order.
    std::vector<IndexSet> divisors;
    /// a_i as the boundary sums over T containing i and n-2, n-1, n respectively.
    std::map<int, std::array<KeelLinearForm, 3>> a_expansions;
    /// a_i + a_j as the boundary sum over T containing i and j.
    std::map<std::pair<int, int>, KeelLinearForm> pair_expansions;
    /// Every Keel divisor as a polynomial in a_i, D_I.
    std::map<IndexSet, Polynomial> backward;
    /// Four-point relations, each a linear form equal to zero.
    std::vector<KeelLinearForm> four_point;
    /// Keel pairs (T, T') with D_T D_T' = 0.
    std::vector<std::pair<IndexSet, IndexSet>> incompatible;
};

KeelDictionary keel_dictionary(int n);

/// Image of a Keel linear form under the backward map.
Polynomial translate(const KeelLinearForm& form, const KeelDictionary& dict);

/// Admissible sets strictly containing `set`, ascending in the subset order.
std::vector<IndexSet> admissible_supersets(IndexSet set, int n);

}  // namespace m0n
