#include "coxwalls/probability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "coxwalls/realbound.hpp"

namespace coxwalls {

LinkModel::LinkModel(int r_, int m_) : r(r_), m(m_) {
    if (r < 1) throw std::invalid_argument("link model needs r >= 1");
    if (m < 3) throw std::invalid_argument("link model needs m >= 3");
}

int LinkModel::pair_index(int i, int j) const {
    // lex rank of (i, j) with 1 <= i < j <= r
    return (i - 1) * r - (i - 1) * i / 2 + (j - i - 1);
}

namespace {

struct Flags {
    GammaVerdict asc, desc;
    bool no_asc = false, no_desc = false;
    bool c1a = false, c2a = false, c1d = false, c2d = false;
};

void evaluate(const LinkModel& model, const WallBits& bits, Flags& out) {
    const int r = model.r;
    const int interior = model.m - 2;

    // an edge ascends when both endpoint walls and all its interior walls
    // point up; descends when they all point down
    auto edge_state = [&](int i, int j, bool up) {
        if ((bits.vertex_up[i - 1] != 0) != up) return false;
        if ((bits.vertex_up[j - 1] != 0) != up) return false;
        const int base = model.pair_index(i, j) * interior;
        for (int t = 0; t < interior; ++t)
            if ((bits.edge_up[base + t] != 0) != up) return false;
        return true;
    };

    for (int side = 0; side < 2; ++side) {
        const bool up = side == 0;
        GammaVerdict& verdict = up ? out.asc : out.desc;
        std::vector<char> in(r, 0);
        int count = 0;
        for (int i = 1; i <= r; ++i)
            if ((bits.vertex_up[i - 1] != 0) == up) {
                in[i - 1] = 1;
                ++count;
            }
        verdict.nonempty = count > 0;
        (up ? out.no_asc : out.no_desc) = count == 0;

        // connectivity on the subgraph spanned by the in-vertices
        if (count > 0) {
            std::vector<int> stack;
            std::vector<char> seen(r, 0);
            int start = 0;
            while (!in[start]) ++start;
            seen[start] = 1;
            stack.push_back(start);
            int reached = 0;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++reached;
                for (int v = 0; v < r; ++v) {
                    if (v == u || !in[v] || seen[v]) continue;
                    int i = std::min(u, v) + 1, j = std::max(u, v) + 1;
                    if (edge_state(i, j, up)) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
            verdict.connected = reached == count;
        } else {
            verdict.connected = false;
        }

        bool c1 = count > 0;
        bool c2 = true;
        for (int u = 0; u < r && c2; ++u)
            for (int v = u + 1; v < r && c2; ++v) {
                if (!in[u] || !in[v]) continue;
                bool linked = false;
                for (int w = 0; w < r && !linked; ++w) {
                    if (w == u || w == v || !in[w]) continue;
                    int a = std::min(u, w) + 1, b = std::max(u, w) + 1;
                    int c = std::min(v, w) + 1, d = std::max(v, w) + 1;
                    linked = edge_state(a, b, up) && edge_state(c, d, up);
                }
                if (!linked) c2 = false;
            }
        (up ? out.c1a : out.c1d) = c1;
        (up ? out.c2a : out.c2d) = c2;
    }
}

}  // namespace

LinkSample evaluate_bits(const LinkModel& model, WallBits bits) {
    if (static_cast<int>(bits.vertex_up.size()) != model.r ||
        static_cast<int>(bits.edge_up.size()) != (model.m - 2) * model.edge_count())
        throw std::invalid_argument("evaluate_bits: wrong bit counts");
    Flags flags;
    evaluate(model, bits, flags);
    LinkSample s;
    s.bits = std::move(bits);
    s.ascending = flags.asc;
    s.descending = flags.desc;
    s.no_ascending_vertex = flags.no_asc;
    s.no_descending_vertex = flags.no_desc;
    s.cond1_ascending = flags.c1a;
    s.cond2_ascending = flags.c2a;
    s.cond1_descending = flags.c1d;
    s.cond2_descending = flags.c2d;
    return s;
}

LinkSample sample_link_model(const LinkModel& model, BitSource& source) {
    WallBits bits;
    bits.vertex_up.resize(model.r);
    bits.edge_up.resize(static_cast<std::size_t>(model.m - 2) * model.edge_count());
    for (int i = 0; i < model.r; ++i) bits.vertex_up[i] = source.bit() ? 1 : 0;
    for (std::size_t t = 0; t < bits.edge_up.size(); ++t)
        bits.edge_up[t] = source.bit() ? 1 : 0;
    return evaluate_bits(model, std::move(bits));
}

ExactFailure exact_failure_small(const LinkModel& model) {
    const int b = model.bit_count();
    if (b > 24)
        throw std::invalid_argument("exact_failure_small: bit budget exceeded");
    const long total = 1L << b;
    long asc = 0, desc = 0, either = 0, no_asc = 0, no_desc = 0;
    WallBits bits;
    bits.vertex_up.resize(model.r);
    bits.edge_up.resize(static_cast<std::size_t>(model.m - 2) * model.edge_count());
    Flags flags;
    for (long mask = 0; mask < total; ++mask) {
        for (int i = 0; i < model.r; ++i) bits.vertex_up[i] = (mask >> i) & 1;
        for (std::size_t t = 0; t < bits.edge_up.size(); ++t)
            bits.edge_up[t] = (mask >> (model.r + t)) & 1;
        evaluate(model, bits, flags);
        if (flags.asc.fails()) ++asc;
        if (flags.desc.fails()) ++desc;
        if (flags.asc.fails() || flags.desc.fails()) ++either;
        if (flags.no_asc) ++no_asc;
        if (flags.no_desc) ++no_desc;
    }
    auto ratio = [total](long count) { return frac(count, total); };
    return {ratio(asc), ratio(desc), ratio(either), ratio(no_asc), ratio(no_desc)};
}

double MonteCarloResult::estimate(long count) const {
    return static_cast<double>(count) / static_cast<double>(trials);
}

double MonteCarloResult::standard_error(long count) const {
    double p = estimate(count);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

MonteCarloResult monte_carlo_failure(const LinkModel& model, long trials,
                                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_failure: trials must be >= 1");
    MonteCarloResult result;
    result.trials = trials;
    BitSource source(seed);
    WallBits bits;
    bits.vertex_up.resize(model.r);
    bits.edge_up.resize(static_cast<std::size_t>(model.m - 2) * model.edge_count());
    Flags flags;
    for (long t = 0; t < trials; ++t) {
        for (int i = 0; i < model.r; ++i) bits.vertex_up[i] = source.bit() ? 1 : 0;
        for (std::size_t e = 0; e < bits.edge_up.size(); ++e)
            bits.edge_up[e] = source.bit() ? 1 : 0;
        evaluate(model, bits, flags);
        if (flags.asc.fails()) ++result.asc_fail_count;
        if (flags.desc.fails()) ++result.desc_fail_count;
        if (flags.asc.fails() || flags.desc.fails()) ++result.either_fail_count;
        if (flags.no_asc) ++result.no_asc_vertex_count;
        if (flags.no_desc) ++result.no_desc_vertex_count;
    }
    return result;
}

Rational p1(int r) {
    if (r < 1) throw std::invalid_argument("p1: r must be >= 1");
    return Rational(1, int_pow(2, static_cast<unsigned long>(r)));
}

Rational p2_bound(int r, int m) {
    if (r < 2 || m < 3) throw std::invalid_argument("p2_bound: needs r >= 2, m >= 3");
    BigInt den = int_pow(2, static_cast<unsigned long>(2 * m - 3));
    Rational base = frac(den - 1, den);
    Rational result = frac(binomial(static_cast<unsigned long>(r), 2), 4) *
                      rational_pow(base, static_cast<unsigned long>(r - 2));
    result.canonicalize();
    return result;
}

Rational total_failure_bound(int r, int m) {
    Rational result = 2 * (p1(r) + p2_bound(r, m));
    result.canonicalize();
    return result;
}

bool threshold_inequality_holds(int m, long q_size, long r) {
    // bound * q * r^E < 1, i.e. ln(bound * q) + 4 ln(q) ln(r) / ln(32/29) < 0
    Rational a = total_failure_bound(static_cast<int>(r), m) * Rational(q_size);
    a.canonicalize();
    return sound_sign_log_expr(a, Rational(q_size), Rational(r), Rational(32, 29), 4) < 0;
}

namespace {

double approx_crossover_gap(int m, long q_size, long r) {
    // double-precision estimate of ln(bound) + ln q + E ln r; the bound's two
    // terms are combined in log space to dodge underflow
    const double ln2 = std::log(2.0);
    double t1 = (1.0 - static_cast<double>(r)) * ln2;
    double base = 1.0 - std::ldexp(1.0, 3 - 2 * m);
    double t2 = std::log(static_cast<double>(r) * (r - 1) / 2.0) - ln2 +
                (r - 2) * std::log(base);
    double hi = std::max(t1, t2), lo = std::min(t1, t2);
    double ln_bound = hi + std::log1p(std::exp(lo - hi));
    double e = 4.0 * std::log(static_cast<double>(q_size)) / std::log(32.0 / 29.0);
    return ln_bound + std::log(static_cast<double>(q_size)) +
           e * std::log(static_cast<double>(r));
}

}  // namespace

int threshold_rank(int m, long q_size) {
    if (m < 3) throw std::invalid_argument("threshold_rank: m must be >= 3");
    if (q_size < 2) throw std::invalid_argument("threshold_rank: q_size must be >= 2");
    constexpr long scan_limit = 2'000'000;
    for (long r = 4; r < scan_limit; ++r) {
        // Prefilter: every term of the gap is below 1e6 in magnitude, so the
        // double evaluation is within 1e-9 of the truth; a gap above +0.01 is
        // a sure failure. Candidates inside the band go to interval arithmetic.
        if (approx_crossover_gap(m, q_size, r) > 0.01) continue;
        if (!threshold_inequality_holds(m, q_size, r)) continue;
        // the inequality must hold at r and fail at r - 1
        if (r > 4 && threshold_inequality_holds(m, q_size, r - 1))
            throw std::logic_error("threshold_rank: crossover not sharp at r = " +
                                   std::to_string(r));
        return static_cast<int>(r);
    }
    throw std::runtime_error("threshold_rank: no crossover below the scan limit");
}

namespace {

BigInt ramsey_recurse(std::vector<long> orders, std::map<std::vector<long>, BigInt>& memo) {
    // an order-2 color drops out: a single edge of that color already spans K_2
    orders.erase(std::remove(orders.begin(), orders.end(), 2L), orders.end());
    if (orders.empty()) return 2;
    std::sort(orders.begin(), orders.end());
    if (orders.size() == 1) return orders[0];
    auto it = memo.find(orders);
    if (it != memo.end()) return it->second;

    BigInt total = 2 - static_cast<long>(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<long> next = orders;
        next[i] -= 1;
        total += ramsey_recurse(std::move(next), memo);
    }
    memo.emplace(std::move(orders), total);
    return total;
}

}  // namespace

BigInt ramsey_upper_bound(std::vector<long> orders) {
    if (orders.empty())
        throw std::invalid_argument("ramsey_upper_bound: need at least one order");
    double states = 1;
    for (long n : orders) {
        if (n < 2) throw std::invalid_argument("ramsey_upper_bound: orders must be >= 2");
        states *= static_cast<double>(n - 1);
    }
    if (states > 2e6)
        throw std::invalid_argument("ramsey_upper_bound: orders too large for the exact "
                                    "recursion");
    std::map<std::vector<long>, BigInt> memo;
    return ramsey_recurse(std::move(orders), memo);
}

}  // namespace coxwalls
