#pragma once

#include <cstdint>
#include <vector>

#include "coxwalls/bitstream.hpp"
#include "coxwalls/rational.hpp"

namespace coxwalls {

// The per-vertex link model of a compressed uniform cover with good walls:
// the link is complete on r vertices; each vertex wall points away with
// probability 1/2; each edge carries m-2 further walls, so an edge with
// ascending endpoints ascends with probability 1/2^(m-2). m >= 3 (at m = 2
// the edge probability degenerates to 1).
struct LinkModel {
    int r = 0;
    int m = 0;

    LinkModel(int r_, int m_);

    int edge_count() const { return r * (r - 1) / 2; }
    int bit_count() const { return r + (m - 2) * edge_count(); }
    int pair_index(int i, int j) const;  // lex index of 1 <= i < j <= r
};

// One fair bit per wall at the vertex: r vertex walls, m-2 interior walls
// per edge. A bit is "up" when the wall points away. The ascending and
// descending subgraphs share these bits, exactly as the geometry couples
// them.
struct WallBits {
    std::vector<char> vertex_up;                // size r
    std::vector<char> edge_up;                  // (m-2) per pair, lex order
};

struct GammaVerdict {
    bool nonempty = false;
    bool connected = false;

    bool fails() const { return !(nonempty && connected); }
};

struct LinkSample {
    WallBits bits;
    GammaVerdict ascending;
    GammaVerdict descending;
    bool no_ascending_vertex = false;
    bool no_descending_vertex = false;
    // the two sufficient conditions: an ascending vertex exists, and every
    // pair of ascending vertices has a common ascending neighbor
    bool cond1_ascending = false;
    bool cond2_ascending = false;
    bool cond1_descending = false;
    bool cond2_descending = false;
};

// deterministic core shared by the sampler and the exact enumerator
LinkSample evaluate_bits(const LinkModel& model, WallBits bits);

// draws r + (m-2) C(r,2) fair bits (vertices first, then edges in lex order)
LinkSample sample_link_model(const LinkModel& model, BitSource& bits);

struct ExactFailure {
    Rational asc_fails;
    Rational desc_fails;
    Rational either_fails;
    Rational no_ascending_vertex;
    Rational no_descending_vertex;
};

// brute force over all bit assignments; requires bit_count() <= 24
ExactFailure exact_failure_small(const LinkModel& model);

struct MonteCarloResult {
    long trials = 0;
    long asc_fail_count = 0;
    long desc_fail_count = 0;
    long either_fail_count = 0;
    long no_asc_vertex_count = 0;
    long no_desc_vertex_count = 0;

    double estimate(long count) const;
    double standard_error(long count) const;
};

MonteCarloResult monte_carlo_failure(const LinkModel& model, long trials,
                                     std::uint64_t seed);

// P(no ascending vertex) = 2^-r, exactly
Rational p1(int r);

// C(r,2) * 1/4 * (1 - 2^(3-2m))^(r-2), exactly; may exceed 1 at small r
Rational p2_bound(int r, int m);

// 2^(1-r) + C(r,2) * 1/2 * (1 - 2^(3-2m))^(r-2) = 2 (P1 + P2 bound): the
// union bound on P(ascending or descending link fails)
Rational total_failure_bound(int r, int m);

// true iff total_failure_bound(r, m) < 1 / (q_size * r^E) with
// E = 4 ln(q_size)/ln(32/29), decided soundly
bool threshold_inequality_holds(int m, long q_size, long r);

// Smallest r >= 4 at which the failure bound beats the reciprocal of the
// polynomial cover-degree bound q * r^E. A double prefilter skips the bulk
// of the scan; every candidate near the crossover, and the returned r and
// its predecessor, are decided with sound interval arithmetic.
int threshold_rank(int m, long q_size);

// Recursive multicolor Ramsey upper bound: one color gives R(n) = n, any
// order-2 color drops out, otherwise
// R(n_1..n_c) <= 2 - c + sum_i R(n_1..n_i - 1..n_c), memoized.
BigInt ramsey_upper_bound(std::vector<long> orders);

}  // namespace coxwalls
