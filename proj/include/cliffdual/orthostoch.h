// Copyright 2026 The cliffdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFDUAL_ORTHOSTOCH_H
#define CLIFFDUAL_ORTHOSTOCH_H

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliffdual/cyc.h"
#include "cliffdual/isotropic.h"

namespace cliffdual {

/// Finite group of t x t matrices over Z_d stored as a sorted element list.
class FiniteMatrixGroup {
   public:
    FiniteMatrixGroup() = default;
    /// Sorts and indexes the elements; throws if the identity is missing.
    FiniteMatrixGroup(int d, size_t t, std::vector<GFMatrix> elements);

    int d() const {
        return d_;
    }
    size_t t() const {
        return t_;
    }
    size_t size() const {
        return elements_.size();
    }
    const std::vector<GFMatrix> &elements() const {
        return elements_;
    }
    const GFMatrix &operator[](size_t i) const {
        return elements_[i];
    }
    size_t identity() const {
        return identity_;
    }
    std::optional<size_t> find(const GFMatrix &g) const;
    size_t index_of(const GFMatrix &g) const;
    size_t mul(size_t a, size_t b) const;
    size_t inv(size_t a) const;
    size_t order_of(size_t a) const;
    /// Checks closure under products of random pairs and inverses.
    bool spot_check_closure(size_t samples, uint64_t seed) const;
    /// Small generating set, chosen greedily in element order.
    std::vector<size_t> generators() const;

    nlohmann::json to_json() const;
    static FiniteMatrixGroup from_json(const nlohmann::json &j);

   private:
    static std::string key(const GFMatrix &g);

    int d_ = 2;
    size_t t_ = 0;
    std::vector<GFMatrix> elements_;
    std::unordered_map<std::string, size_t> index_;
    size_t identity_ = 0;
    mutable std::vector<size_t> inverse_;
};

/// Whether enumerate_O1 accepts (t, d).
bool within_group_guard(size_t t, int d);

/// O_1(T) for q_{r,s}.
FiniteMatrixGroup enumerate_O1(size_t r, size_t s, int d, const CacheDir &cache = {});
/// Isometries of q fixing the vector (zero for no constraint).
FiniteMatrixGroup isometry_group(const GenQuadForm &q, const Vec &fixed);

/// {O in g : O N = N}.
FiniteMatrixGroup stabilizer(const FiniteMatrixGroup &g, const Subspace &n);

/// Permutation of the points induced by each element; throws if an image leaves the list.
std::vector<std::vector<size_t>> permutation_action(const FiniteMatrixGroup &g, const std::vector<Subspace> &points);

struct QuotientAction {
    /// Restricted form q_N and the class of 1_t in T_N coordinates.
    GenQuadForm q_n;
    Vec ones_class;
    /// Image of each stabilizer element (same order as the stabilizer).
    std::vector<GFMatrix> images;
    /// Indices of stabilizer elements acting trivially on T_N.
    std::vector<size_t> kernel;
    /// Distinct images as a group, and O_1(T_N) computed independently.
    FiniteMatrixGroup image_group;
    FiniteMatrixGroup target_group;
    bool surjective = false;
};

/// Induced action of the stabilizer on T_N = N-perp / N in section coordinates.
QuotientAction quotient_action(const FiniteMatrixGroup &stab, const IsoSubspace &n);
/// Matrix of [f]_N -> [O f]_N.
GFMatrix induced_matrix(const GFMatrix &o, const QuotientSection &section);

struct SubgroupGN {
    FiniteMatrixGroup group;
    /// Complement K_N of N-perp used for the trivial block.
    Subspace k;
    /// Restriction of each element to T_N in section coordinates (same order as group).
    std::vector<GFMatrix> restricted;
    /// |O_1(T_N)|, the largest possible order.
    size_t target_order = 0;
};

/// Elements of O_1(T) acting trivially on K_N + N and preserving T_N, for the complement K_N maximizing the order.
SubgroupGN subgroup_G_N(const IsoSubspace &n);

struct ConjugacyClass {
    size_t representative;
    size_t size;
    size_t order;
    std::vector<size_t> members;
};

/// Conjugacy classes, the identity class first, then in order of smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup &g);

struct CharacterTable {
    std::vector<ConjugacyClass> classes;
    /// class_of[i] for every group element.
    std::vector<size_t> class_of;
    /// values[chi][class].
    std::vector<std::vector<CycScalar>> values;
    std::vector<int64_t> degrees;
    /// Partition labels when the symmetric-group path was used.
    std::vector<std::vector<int>> partitions;
    std::string method;
    size_t group_order = 0;

    int64_t degree(size_t chi) const {
        return degrees[chi];
    }
    CycScalar value(size_t chi, size_t element) const {
        return values[chi][class_of[element]];
    }
    nlohmann::json to_json() const;
};

enum class CharacterMethod { automatic, dixon, symmetric };

/// Exact character table; rows sorted by degree then by values. Requires |G| <= 10^4.
CharacterTable character_table(const FiniteMatrixGroup &g, CharacterMethod method = CharacterMethod::automatic);

/// chi_lambda(mu) by the Murnaghan-Nakayama rule.
int64_t symmetric_character(const std::vector<int> &lambda, const std::vector<int> &mu);
std::vector<std::vector<int>> partitions_of(int k);

/// Counts of orthonormal bases of (Z_2^t, dot) by k = #{i : q_{t,0}(b_i) = 3}.
std::map<size_t, uint64_t> orthonormal_basis_strata(size_t t);

}  // namespace cliffdual

#endif
