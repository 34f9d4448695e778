#include "coxwalls/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coxwalls/bitstream.hpp"
#include "coxwalls/rational.hpp"

namespace coxwalls {

bool separates(const Partition& p, const std::array<int, 4>& quad) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (quad[a] == quad[b])
                throw std::invalid_argument("separates: quadruple indices must be distinct");
            if (p(quad[a]) == p(quad[b])) return false;
        }
    return true;
}

int k_required(int r) {
    if (r < 4) throw std::invalid_argument("k_required: r must be >= 4");
    const Rational quads(binomial(static_cast<unsigned long>(r), 4));
    const Rational ratio(32, 29);
    Rational power = 1;
    int k = 0;
    while (power < quads) {
        power *= ratio;
        ++k;
    }
    return std::max(1, k);
}

namespace {

std::vector<std::array<int, 4>> all_quadruples(int r) {
    std::vector<std::array<int, 4>> quads;
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b)
            for (int c = b + 1; c <= r; ++c)
                for (int d = c + 1; d <= r; ++d) quads.push_back({a, b, c, d});
    return quads;
}

Partition random_partition(int r, BitSource& bits) {
    Partition p;
    p.value.resize(r);
    for (int i = 0; i < r; ++i)
        p.value[i] = static_cast<std::uint8_t>(1 + bits.bits(2));
    return p;
}

}  // namespace

std::vector<std::array<int, 4>> verify_family(const PartitionFamily& f) {
    std::vector<std::array<int, 4>> unseparated;
    for (const auto& quad : all_quadruples(f.r)) {
        bool ok = false;
        for (const Partition& p : f.partitions)
            if (separates(p, quad)) {
                ok = true;
                break;
            }
        if (!ok) unseparated.push_back(quad);
    }
    return unseparated;
}

FamilySearchResult random_family(int r, int k, std::uint64_t seed, long max_attempts) {
    if (k < 1) throw std::invalid_argument("random_family: k must be >= 1");
    if (r < 4) throw std::invalid_argument("random_family: r must be >= 4");
    BitSource bits(seed);
    FamilySearchResult result;
    result.best_unseparated = all_quadruples(r).size() + 1;
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        PartitionFamily family{r, {}};
        for (int t = 0; t < k; ++t) family.partitions.push_back(random_partition(r, bits));
        ++result.attempts;
        auto missing = verify_family(family);
        if (missing.empty()) {
            result.found = true;
            result.family = std::move(family);
            result.best_unseparated = 0;
            return result;
        }
        if (missing.size() < result.best_unseparated) {
            result.best_unseparated = missing.size();
            result.family = std::move(family);
        }
    }
    return result;
}

namespace {

long coverage(const Partition& p, const std::vector<std::array<int, 4>>& quads,
              const std::vector<char>& open) {
    long score = 0;
    for (std::size_t q = 0; q < quads.size(); ++q)
        if (open[q] && separates(p, quads[q])) ++score;
    return score;
}

}  // namespace

PartitionFamily greedy_family(int r, std::uint64_t seed, int pool_size) {
    if (r < 4) throw std::invalid_argument("greedy_family: r must be >= 4");
    const auto quads = all_quadruples(r);
    std::vector<char> open(quads.size(), 1);
    std::size_t open_count = quads.size();
    BitSource bits(seed);

    const bool exhaustive = r <= 8;
    PartitionFamily family{r, {}};
    while (open_count > 0) {
        Partition best;
        long best_score = -1;
        if (exhaustive) {
            // 4^r candidates, encoded in base 4
            const long total = 1L << (2 * r);
            Partition cand;
            cand.value.resize(r);
            for (long code = 0; code < total; ++code) {
                long c = code;
                for (int i = 0; i < r; ++i) {
                    cand.value[i] = static_cast<std::uint8_t>(1 + (c & 3));
                    c >>= 2;
                }
                long score = coverage(cand, quads, open);
                if (score > best_score) {
                    best_score = score;
                    best = cand;
                }
            }
        } else {
            for (int n = 0; n < pool_size; ++n) {
                Partition cand = random_partition(r, bits);
                long score = coverage(cand, quads, open);
                if (score > best_score) {
                    best_score = score;
                    best = cand;
                }
            }
            // hill climbing over single value changes
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < r; ++i) {
                    std::uint8_t original = best.value[i];
                    for (std::uint8_t v = 1; v <= 4; ++v) {
                        if (v == original) continue;
                        best.value[i] = v;
                        long score = coverage(best, quads, open);
                        if (score > best_score) {
                            best_score = score;
                            improved = true;
                            original = v;
                        } else {
                            best.value[i] = original;
                        }
                    }
                }
            }
        }
        // every quadruple admits a separating partition, so progress is sure
        if (best_score <= 0)
            throw std::logic_error("greedy_family: no progress");
        for (std::size_t q = 0; q < quads.size(); ++q)
            if (open[q] && separates(best, quads[q])) {
                open[q] = 0;
                --open_count;
            }
        family.partitions.push_back(std::move(best));
    }
    if (!verify_family(family).empty())
        throw std::logic_error("greedy_family: produced family fails verification");
    return family;
}

GeneratorMap phi_p(const CoxeterPresentation& p_high, const Partition& part) {
    if (!p_high.is_uniform())
        throw std::invalid_argument(
            "phi_p: presentation must have uniform exponent (relator images are not "
            "guaranteed otherwise)");
    if (part.r() != p_high.rank())
        throw std::invalid_argument("phi_p: partition ground set does not match rank");
    GeneratorMap map;
    map.from_rank = p_high.rank();
    map.to_rank = 4;
    for (int i = 1; i <= p_high.rank(); ++i) map.image.push_back(part(i));
    return map;
}

ProductQuotient::ProductQuotient(int rank, int m, PartitionFamily family,
                                 PermutationQuotient q4)
    : rank_(rank), m_(m), family_(std::move(family)), q4_(std::move(q4)) {}

const Permutation& ProductQuotient::coordinate_image(int i, int t) const {
    return q4_.generator_images[family_.partitions[t](i) - 1];
}

long ProductQuotient::generator_order(int i) const {
    long order = 1;
    for (int t = 0; t < k(); ++t)
        order = std::lcm(order, permutation_order(coordinate_image(i, t)));
    return order;
}

long ProductQuotient::pair_product_order(int i, int j) const {
    long order = 1;
    for (int t = 0; t < k(); ++t)
        order = std::lcm(order,
                         permutation_order(compose(coordinate_image(i, t),
                                                   coordinate_image(j, t))));
    return order;
}

KernelCheck ProductQuotient::torsion_check() const {
    KernelCheck check;
    for (int i = 1; i <= rank_; ++i) {
        long ord = generator_order(i);
        if (ord != 1 && ord != 2) {
            check.diagnostic = "not a homomorphism: generator " + std::to_string(i) +
                               " image has order " + std::to_string(ord);
            return check;
        }
    }
    for (int i = 1; i <= rank_; ++i)
        for (int j = i + 1; j <= rank_; ++j) {
            long ord = pair_product_order(i, j);
            if (m_ % ord != 0) {
                check.diagnostic = "not a homomorphism: pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") product has order " +
                                   std::to_string(ord);
                return check;
            }
        }
    check.homomorphism = true;
    for (int i = 1; i <= rank_; ++i)
        if (generator_order(i) != 2) {
            check.diagnostic = "torsion: generator " + std::to_string(i) + " has order 1";
            return check;
        }
    for (int i = 1; i <= rank_; ++i)
        for (int j = i + 1; j <= rank_; ++j) {
            long ord = pair_product_order(i, j);
            if (ord != m_) {
                check.diagnostic = "torsion: pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") product has order " +
                                   std::to_string(ord) + ", expected " + std::to_string(m_);
                return check;
            }
        }
    check.torsion_free = true;
    return check;
}

PermutationQuotient ProductQuotient::materialize(std::size_t cap) const {
    const int kk = k();
    using Point = std::vector<int>;  // one coordinate per family member
    Point base(kk, 0);
    std::map<Point, int> index{{base, 0}};
    std::vector<Point> points{base};
    for (std::size_t head = 0; head < points.size(); ++head) {
        for (int i = 1; i <= rank_; ++i) {
            Point next(kk);
            for (int t = 0; t < kk; ++t)
                next[t] = coordinate_image(i, t)[points[head][t]];
            if (index.emplace(next, points.size()).second) {
                points.push_back(std::move(next));
                if (points.size() > cap)
                    throw std::runtime_error(
                        "ProductQuotient::materialize: orbit exceeds size cap");
            }
        }
    }
    PermutationQuotient q;
    q.degree = static_cast<int>(points.size());
    for (int i = 1; i <= rank_; ++i) {
        Permutation img(q.degree);
        for (int x = 0; x < q.degree; ++x) {
            Point next(kk);
            for (int t = 0; t < kk; ++t)
                next[t] = coordinate_image(i, t)[points[x][t]];
            img[x] = index.at(next);
        }
        q.generator_images.push_back(std::move(img));
    }
    return q;
}

ProductQuotient product_homomorphism(int r, int m, const PartitionFamily& f,
                                     const PermutationQuotient& q4) {
    if (f.r != r)
        throw std::invalid_argument("product_homomorphism: family ground set mismatch");
    for (const Partition& p : f.partitions)
        if (p.r() != r)
            throw std::invalid_argument("product_homomorphism: partition of wrong rank");
    KernelCheck q4_check = check_torsion_free_kernel(uniform(4, m), q4);
    if (!q4_check.ok())
        throw std::invalid_argument("product_homomorphism: q4 fails the torsion-free-kernel "
                                    "criterion: " + q4_check.diagnostic);
    if (!verify_family(f).empty())
        throw std::invalid_argument("product_homomorphism: family does not separate all "
                                    "quadruples");

    ProductQuotient beta(r, m, f, q4);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            long ord = beta.pair_product_order(i, j);
            if (ord != m)
                throw std::invalid_argument(
                    "product_homomorphism: pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ") has product order " + std::to_string(ord) +
                    ", expected " + std::to_string(m));
        }
    return beta;
}

}  // namespace coxwalls
