#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/covers.hpp"

namespace coxwalls {

// A partition of {1..r}: a total map into {1,2,3,4} (not necessarily onto).
struct Partition {
    std::vector<std::uint8_t> value;  // value[i-1] = p(i), in 1..4

    int r() const { return static_cast<int>(value.size()); }
    int operator()(int i) const { return value[i - 1]; }
};

struct PartitionFamily {
    int r = 0;
    std::vector<Partition> partitions;
};

// true iff p takes four distinct values on the quadruple
bool separates(const Partition& p, const std::array<int, 4>& quad);

// Smallest k with (32/29)^k >= C(r,4), never less than 1. Computed by exact
// rational power comparison, which decides the ceiling of
// log C(r,4) / log(32/29) without any rounding hazard.
int k_required(int r);

// all quadruples some member fails to separate (exhaustive over C(r,4))
std::vector<std::array<int, 4>> verify_family(const PartitionFamily& f);

struct FamilySearchResult {
    bool found = false;
    PartitionFamily family;  // the separating family, or the best attempt
    long attempts = 0;
    std::size_t best_unseparated = 0;  // for exhaustion reports
};

// samples k uniform partitions per attempt until the family separates every
// quadruple; deterministic in the seed
FamilySearchResult random_family(int r, int k, std::uint64_t seed, long max_attempts);

// Derandomized construction: repeatedly add the candidate partition
// separating the most still-unseparated quadruples, with hill climbing over
// single value changes. Candidates are all 4^r partitions when r <= 8, else
// a seeded random pool. Always returns a verified family.
PartitionFamily greedy_family(int r, std::uint64_t seed = 0, int pool_size = 4096);

// Generator map induced by a partition on a uniform presentation:
// a_i -> a_{p(i)}. Well defined because all relators have the same exponent.
struct GeneratorMap {
    int from_rank = 0;
    int to_rank = 0;
    std::vector<int> image;  // image[i-1] = target generator index
};

GeneratorMap phi_p(const CoxeterPresentation& p_high, const Partition& part);

// The product homomorphism: a_i maps to the tuple of q4-images of a_{p_t(i)}
// over the family, acting coordinatewise. Order computations are done
// coordinatewise (the order of a tuple is the lcm of its coordinates), so
// the torsion-free-kernel criterion never materializes the product action.
class ProductQuotient {
public:
    ProductQuotient(int rank, int m, PartitionFamily family, PermutationQuotient q4);

    int rank() const { return rank_; }
    int m() const { return m_; }
    int k() const { return static_cast<int>(family_.partitions.size()); }
    const PartitionFamily& family() const { return family_; }
    const PermutationQuotient& coordinate_quotient() const { return q4_; }

    long generator_order(int i) const;
    long pair_product_order(int i, int j) const;
    KernelCheck torsion_check() const;

    // Permutation action on the orbit of the basepoint (1,...,1) inside the
    // product of k copies of the point set. Throws when the orbit exceeds
    // the cap.
    PermutationQuotient materialize(std::size_t cap = 1'000'000) const;

private:
    int rank_;
    int m_;
    PartitionFamily family_;
    PermutationQuotient q4_;

    const Permutation& coordinate_image(int i, int t) const;  // generator i, coordinate t
};

// Validates q4 against uniform(4, m) and the family against the quadruple
// criterion, then forms the product homomorphism. Aborts with the offending
// pair if some pairwise product has the wrong order.
ProductQuotient product_homomorphism(int r, int m, const PartitionFamily& f,
                                     const PermutationQuotient& q4);

}  // namespace coxwalls
