#include "coxwalls/permutation.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace coxwalls {

Permutation identity_permutation(int degree) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
    return c;
}

Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
    return q;
}

long permutation_order(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    long order = 1;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        long len = 0;
        for (int y = static_cast<int>(x); !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

bool is_identity(const Permutation& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != static_cast<int>(x)) return false;
    return true;
}

Permutation transposition(int degree, int a, int b) {
    Permutation p = identity_permutation(degree);
    p[a] = b;
    p[b] = a;
    return p;
}

std::vector<Permutation> generated_subgroup(const std::vector<Permutation>& generators,
                                            std::size_t cap) {
    if (generators.empty())
        throw std::invalid_argument("generated_subgroup: no generators");
    const std::size_t degree = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != degree || !is_permutation(g))
            throw std::invalid_argument("generated_subgroup: bad generator");

    std::vector<Permutation> elements{identity_permutation(static_cast<int>(degree))};
    std::map<Permutation, std::size_t> index{{elements[0], 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            Permutation next = compose(elements[head], g);
            if (index.emplace(next, elements.size()).second) {
                elements.push_back(std::move(next));
                if (elements.size() > cap)
                    throw std::runtime_error("generated_subgroup: size cap exceeded");
            }
        }
    }
    return elements;
}

}  // namespace coxwalls
