#include "coxwalls/coxeter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace coxwalls {

CoxeterPresentation::CoxeterPresentation(int rank) : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("presentation rank must be >= 1");
    exponents_.assign(static_cast<std::size_t>(rank) * rank, infinite_exponent);
}

CoxeterPresentation::CoxeterPresentation(
    int rank, const std::vector<std::tuple<int, int, int>>& entries)
    : CoxeterPresentation(rank) {
    for (auto [i, j, m] : entries)
        set_exponent(i, j, m);
}

std::size_t CoxeterPresentation::at(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_ || i == j)
        throw std::out_of_range("generator pair out of range");
    return static_cast<std::size_t>(i - 1) * rank_ + (j - 1);
}

Exponent CoxeterPresentation::exponent(int i, int j) const {
    return exponents_[at(i, j)];
}

void CoxeterPresentation::set_exponent(int i, int j, Exponent m) {
    if (m && *m < 2)
        throw std::invalid_argument("exponents must be >= 2 or infinite");
    exponents_[at(i, j)] = m;
    exponents_[at(j, i)] = m;
}

bool CoxeterPresentation::is_uniform() const {
    if (rank_ < 2) return true;
    Exponent first = exponent(1, 2);
    for (int i = 1; i <= rank_; ++i)
        for (int j = i + 1; j <= rank_; ++j)
            if (exponent(i, j) != first) return false;
    return true;
}

std::optional<int> CoxeterPresentation::uniform_exponent() const {
    if (rank_ < 2 || !is_uniform()) return std::nullopt;
    return exponent(1, 2);
}

std::vector<std::pair<int, int>> CoxeterPresentation::finite_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= rank_; ++i)
        for (int j = i + 1; j <= rank_; ++j)
            if (exponent(i, j)) pairs.emplace_back(i, j);
    return pairs;
}

CoxeterPresentation uniform(int rank, int m) {
    if (m < 2)
        throw std::invalid_argument("uniform exponent must be >= 2");
    CoxeterPresentation p(rank);
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            p.set_exponent(i, j, m);
    return p;
}

Rational euler_characteristic(const CoxeterPresentation& p) {
    Rational chi = 1 - frac(p.rank(), 2);
    for (auto [i, j] : p.finite_pairs())
        chi += frac(1, 2L * *p.exponent(i, j));
    return chi;
}

CoxeterPresentation coxeter_subgroup(const CoxeterPresentation& p,
                                     const std::vector<int>& subset) {
    if (subset.empty())
        throw std::invalid_argument("coxeter_subgroup: empty generator subset");
    std::set<int> chosen(subset.begin(), subset.end());
    if (chosen.size() != subset.size())
        throw std::invalid_argument("coxeter_subgroup: repeated generator index");
    for (int g : chosen)
        if (g < 1 || g > p.rank())
            throw std::invalid_argument("coxeter_subgroup: generator index out of range");

    std::vector<int> order(chosen.begin(), chosen.end());  // ascending, relabel 1..k
    CoxeterPresentation sub(static_cast<int>(order.size()));
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            sub.set_exponent(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                             p.exponent(order[a], order[b]));
    return sub;
}

bool has_dimension_at_most_2(const CoxeterPresentation& p) {
    for (int i = 1; i <= p.rank(); ++i)
        for (int j = i + 1; j <= p.rank(); ++j)
            for (int k = j + 1; k <= p.rank(); ++k) {
                Rational s = 0;
                if (auto m = p.exponent(i, j)) s += Rational(1, *m);
                if (auto m = p.exponent(j, k)) s += Rational(1, *m);
                if (auto m = p.exponent(k, i)) s += Rational(1, *m);
                if (s > 1) return false;
            }
    return true;
}

CoxeterDiagram::CoxeterDiagram(const CoxeterPresentation& p)
    : rank_(p.rank()), adjacency_(static_cast<std::size_t>(p.rank()) + 1) {
    for (auto [i, j] : p.finite_pairs()) {
        edges_.emplace_back(i, j, *p.exponent(i, j));
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
    }
}

bool CoxeterDiagram::connected() const {
    if (rank_ == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(rank_) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return visited == rank_;
}

bool CoxeterDiagram::is_tree() const {
    return connected() && edges_.size() == static_cast<std::size_t>(rank_) - 1;
}

}  // namespace coxwalls
