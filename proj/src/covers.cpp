#include "coxwalls/covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxwalls {

PermutationQuotient star_transposition_quotient(int rank) {
    if (rank < 1)
        throw std::invalid_argument("star_transposition_quotient: rank must be >= 1");
    PermutationQuotient q;
    q.degree = rank + 1;
    for (int i = 1; i <= rank; ++i)
        q.generator_images.push_back(transposition(rank + 1, 0, i));
    return q;
}

PermutationQuotient uniform_dihedral_quotient(int rank, int m) {
    if (rank < 2 || m < 2)
        throw std::invalid_argument("uniform_dihedral_quotient: needs rank >= 2, m >= 2");
    CoxeterPresentation p = uniform(rank, m);
    auto pairs = p.finite_pairs();
    PermutationQuotient q;
    // Point 2a + f of a block is the dihedral element rot^a refl^f; right
    // multiplication by refl swaps f, by rot*refl steps the rotation.
    q.degree = 2 * m * static_cast<int>(pairs.size());
    for (int g = 1; g <= rank; ++g) {
        Permutation img(q.degree);
        int base = 0;
        for (auto [i, j] : pairs) {
            for (int a = 0; a < m; ++a)
                for (int f = 0; f < 2; ++f) {
                    int y;
                    if (g == j)
                        y = f == 0 ? 2 * ((a + 1) % m) + 1 : 2 * ((a + m - 1) % m);
                    else
                        y = 2 * a + (1 - f);
                    img[base + 2 * a + f] = base + y;
                }
            base += 2 * m;
        }
        q.generator_images.push_back(std::move(img));
    }
    return q;
}

KernelCheck check_torsion_free_kernel(const CoxeterPresentation& p,
                                      const PermutationQuotient& q) {
    if (static_cast<int>(q.generator_images.size()) != p.rank())
        throw std::invalid_argument("quotient has wrong number of generator images");
    for (const auto& g : q.generator_images)
        if (static_cast<int>(g.size()) != q.degree || !is_permutation(g))
            throw std::invalid_argument("quotient image is not a permutation of the stated degree");

    KernelCheck result;

    // relator check: the map must be a homomorphism at all
    for (int i = 1; i <= p.rank(); ++i) {
        long ord = permutation_order(q.generator_images[i - 1]);
        if (ord != 1 && ord != 2) {
            result.diagnostic = "not a homomorphism: image of generator " +
                                std::to_string(i) + " has order " + std::to_string(ord);
            return result;
        }
    }
    for (auto [i, j] : p.finite_pairs()) {
        long ord = permutation_order(
            compose(q.generator_images[i - 1], q.generator_images[j - 1]));
        if (*p.exponent(i, j) % ord != 0) {
            result.diagnostic = "not a homomorphism: product of images of generators " +
                                std::to_string(i) + "," + std::to_string(j) +
                                " has order " + std::to_string(ord) +
                                " which does not divide " + std::to_string(*p.exponent(i, j));
            return result;
        }
    }
    result.homomorphism = true;

    // exact orders: injectivity on every finite standard parabolic
    for (int i = 1; i <= p.rank(); ++i) {
        if (permutation_order(q.generator_images[i - 1]) != 2) {
            result.diagnostic = "torsion: image of generator " + std::to_string(i) +
                                " has order 1, expected 2";
            return result;
        }
    }
    for (auto [i, j] : p.finite_pairs()) {
        long ord = permutation_order(
            compose(q.generator_images[i - 1], q.generator_images[j - 1]));
        if (ord != *p.exponent(i, j)) {
            result.diagnostic = "torsion: product for pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has order " + std::to_string(ord) +
                                ", expected " + std::to_string(*p.exponent(i, j));
            return result;
        }
    }
    result.torsion_free = true;
    return result;
}

RegularCover regular_cover(const CoxeterPresentation& p, const PermutationQuotient& q,
                           std::size_t cap) {
    KernelCheck check = check_torsion_free_kernel(p, q);
    if (!check.ok())
        throw std::invalid_argument("regular_cover: torsion-free-kernel check failed: " +
                                    check.diagnostic);

    RegularCover cover;
    cover.group_elements = generated_subgroup(q.generator_images, cap);
    const int d = static_cast<int>(cover.group_elements.size());
    cover.degree = d;

    std::map<Permutation, int> index;
    for (int g = 0; g < d; ++g) index[cover.group_elements[g]] = g;
    auto right_mult = [&](int g, int i) {
        return index.at(compose(cover.group_elements[g], q.generator_images[i - 1]));
    };

    TwoComplex& x = cover.complex;
    x = TwoComplex(d);

    // one lift of the loop a_i at every element: edge id g*r + (i-1), from g
    const int r = p.rank();
    for (int g = 0; g < d; ++g)
        for (int i = 1; i <= r; ++i)
            x.add_one_cell(g, right_mult(g, i), i);
    auto lift = [&](int g, int i) { return g * r + (i - 1); };

    // a_i^2 digons: the two lifts of a_i between g and g.s_i bound a bigon
    for (int i = 1; i <= r; ++i)
        for (int g = 0; g < d; ++g) {
            int h = right_mult(g, i);
            x.add_two_cell({{lift(g, i), true}, {lift(h, i), true}}, std::make_pair(i, i));
        }

    // (a_i a_j)^m polygons lifted at every element
    for (auto [i, j] : p.finite_pairs())
        for (int g = 0; g < d; ++g) {
            std::vector<BoundaryStep> word;
            int h = g;
            for (int t = 0; t < *p.exponent(i, j); ++t) {
                word.push_back({lift(h, i), true});
                h = right_mult(h, i);
                word.push_back({lift(h, j), true});
                h = right_mult(h, j);
            }
            x.add_two_cell(std::move(word), std::make_pair(i, j));
        }

    return cover;
}

namespace {

// union-find over 1-cells carrying a relative-orientation bit
struct SignedDsu {
    std::vector<int> parent;
    std::vector<char> flip;  // orientation relative to parent

    explicit SignedDsu(int n) : parent(n), flip(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [root, f] = find(parent[x]);
        parent[x] = root;
        flip[x] = static_cast<char>(flip[x] ^ f);
        return {root, flip[x]};
    }

    // impose flip(a) ^ flip(b) == rel; false on contradiction
    bool unite(int a, int b, int rel) {
        auto [ra, fa] = find(a);
        auto [rb, fb] = find(b);
        if (ra == rb) return (fa ^ fb) == rel;
        parent[ra] = rb;
        flip[ra] = static_cast<char>(fa ^ fb ^ rel);
        return true;
    }
};

}  // namespace

TwoComplex compress(const TwoComplex& cover, const CoxeterPresentation& p) {
    // split the cover's 2-cells into digons and polygons by relator tag
    std::vector<int> digons, polygons;
    for (int f = 0; f < cover.two_cell_count(); ++f) {
        const TwoCell& cell = cover.two_cell(f);
        if (!cell.relator)
            throw std::invalid_argument("compress: 2-cell without a relator tag");
        auto [i, j] = *cell.relator;
        if (i == j) {
            if (cell.boundary.size() != 2)
                throw std::invalid_argument("compress: digon with boundary length != 2");
            digons.push_back(f);
        } else {
            if (!p.exponent(i, j) ||
                cell.boundary.size() != 2 * static_cast<std::size_t>(*p.exponent(i, j)))
                throw std::invalid_argument("compress: polygon length does not match exponent");
            polygons.push_back(f);
        }
    }

    // collapse digons: merge each doubled edge, tracking relative orientation
    SignedDsu dsu(cover.one_cell_count());
    for (int f : digons) {
        const auto& b = cover.two_cell(f).boundary;
        int d0 = b[0].forward ? 0 : 1;
        int d1 = b[1].forward ? 0 : 1;
        if (b[0].edge == b[1].edge)
            throw std::invalid_argument("compress: digon bounds a single edge");
        if (!dsu.unite(b[0].edge, b[1].edge, d0 ^ d1 ^ 1))
            throw std::invalid_argument("compress: inconsistent digon identification");
    }

    // representatives become the compressed 1-cells, in old-id order
    std::vector<int> new_id(cover.one_cell_count(), -1);
    std::vector<int> class_size(cover.one_cell_count(), 0);
    TwoComplex out(cover.zero_cell_count());
    for (int e = 0; e < cover.one_cell_count(); ++e) {
        auto [root, f] = dsu.find(e);
        ++class_size[root];
        if (root == e) {
            const OneCell& c = cover.one_cell(e);
            new_id[e] = out.add_one_cell(c.v0, c.v1, c.label);
        }
    }
    for (int e = 0; e < cover.one_cell_count(); ++e) {
        auto [root, f] = dsu.find(e);
        if (class_size[root] != 2)
            throw std::invalid_argument("compress: doubled-edge class of size != 2");
        new_id[e] = new_id[root];
    }

    auto rewrite = [&](const BoundaryStep& s) {
        auto [root, f] = dsu.find(s.edge);
        return BoundaryStep{new_id[root], f ? !s.forward : s.forward};
    };

    // identify the 2m polygon lifts sharing one boundary cycle; canonical form
    // is the lexicographic minimum over rotations and the reversed traversal
    auto canonical_cycle = [](std::vector<BoundaryStep> seq) {
        const std::size_t n = seq.size();
        std::vector<BoundaryStep> reversed(n);
        for (std::size_t t = 0; t < n; ++t) {
            reversed[t] = seq[n - 1 - t];
            reversed[t].forward = !reversed[t].forward;
        }
        std::vector<BoundaryStep> best;
        for (const auto& base : {seq, reversed})
            for (std::size_t shift = 0; shift < n; ++shift) {
                std::vector<BoundaryStep> rot(base.begin() + shift, base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + shift);
                if (best.empty() || rot < best) best = std::move(rot);
            }
        return best;
    };

    std::map<std::pair<std::pair<int, int>, std::vector<BoundaryStep>>, int> classes;
    for (int f : polygons) {
        const TwoCell& cell = cover.two_cell(f);
        std::vector<BoundaryStep> rewritten;
        rewritten.reserve(cell.boundary.size());
        for (const BoundaryStep& s : cell.boundary) rewritten.push_back(rewrite(s));
        classes[{*cell.relator, canonical_cycle(std::move(rewritten))}] += 1;
    }
    for (const auto& [key, count] : classes) {
        auto [pair, cycle] = key;
        int m = *p.exponent(pair.first, pair.second);
        if (count != 2 * m)
            throw std::invalid_argument(
                "compress: polygon class of size " + std::to_string(count) + ", expected " +
                std::to_string(2 * m) + " - torsion-check escape");
        out.add_two_cell(cycle, pair);
    }

    out.validate();
    return out;
}

}  // namespace coxwalls
