#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/covers.hpp"
#include "coxwalls/rational.hpp"
#include "coxwalls/two_complex.hpp"
#include "coxwalls/walls.hpp"

namespace coxwalls {

// One of the two consistent orientations per two-sided wall: +1 keeps the
// witness orientation from two_sidedness, -1 flips it.
struct WallOrientation {
    std::vector<std::int8_t> sign;
};

// A direction per 1-cell: forward[e] != 0 means e points v0 -> v1. Induced
// from a wall orientation, every 2-cell boundary has opposite directions on
// opposite 1-cells, so its signed direction sum is zero and the complex maps
// to the circle.
struct DirectedSkeleton {
    std::vector<char> forward;
};

// aborts when some wall is one-sided
DirectedSkeleton induce_directions(const TwoComplex& k, const WallSet& ws,
                                   const TwoSidedResult& sided, const WallOrientation& o);

DirectedSkeleton induce_directions(const TwoComplex& k, const PathologyReport& pathology,
                                   const WallOrientation& o);

struct LinkVerdict {
    bool nonempty = false;
    bool connected = false;  // empty graph counts as disconnected, a single vertex as connected
    int vertices = 0;
    int edges = 0;

    bool ok() const { return nonempty && connected; }
};

struct VertexLinkReport {
    LinkVerdict ascending;
    LinkVerdict descending;

    bool ok() const { return ascending.ok() && descending.ok(); }
};

struct AscDescReport {
    std::vector<VertexLinkReport> per_vertex;
    bool all_ok = false;
};

// Ascending/descending links of every 0-cell. A link vertex ascends when its
// 1-cell points away from the 0-cell; a link edge (corner) ascends when every
// wall through its 2-cell points away, i.e. the boundary walk from the corner
// reads n positive steps then n negative ones.
AscDescReport asc_desc_links(const TwoComplex& k, const DirectedSkeleton& ds);

// Subcomplex keeping the 2-cells whose cyclic direction sequence has exactly
// two sign changes (one positive run, one negative run); the circle map
// restricted to it lifts to a Morse function.
TwoComplex lawful_subcomplex(const TwoComplex& k, const DirectedSkeleton& ds);

// whether the directed 1-skeleton has a directed cycle (so the induced map
// on the fundamental group to Z is nontrivial)
bool has_positive_closed_path(const TwoComplex& k, const DirectedSkeleton& ds);

struct SearchStats {
    long attempts = 0;
    // vertex failures summed over all attempts, split by condition
    long ascending_empty = 0;
    long ascending_disconnected = 0;
    long descending_empty = 0;
    long descending_disconnected = 0;
};

struct OrientationSearchResult {
    enum class Status { found, exhausted, refused };
    Status status = Status::refused;
    std::string refusal_reason;

    std::optional<WallOrientation> orientation;  // set when found
    SearchStats stats;

    // best attempt (fewest failing vertices) for exhaustion reports
    long best_attempt = -1;
    int best_failing_vertices = -1;
    std::optional<WallOrientation> best_orientation;
    std::vector<int> best_failing_list;
};

// Samples uniform orientations (one fair bit per wall, attempts are
// consecutive blocks of the seeded bit stream) until every 0-cell has
// nonempty connected ascending and descending links. Refuses to run unless
// the pathology verdict is "good walls".
OrientationSearchResult random_orientation_search(const TwoComplex& k,
                                                  const PathologyReport& pathology,
                                                  std::uint64_t seed, long max_attempts);

struct Certificate {
    bool full = false;  // every hypothesis verified
    std::vector<std::string> missing;

    Rational chi;
    int degree = 0;           // of the cover
    int quotient_degree = 0;  // of the permutation representation
    bool dimension_at_most_2 = false;
    bool good_walls = false;
    bool orientation_found = false;
    bool positive_closed_path = false;

    std::optional<WallOrientation> orientation;
    std::vector<VertexLinkReport> per_vertex;  // for the found (or best) orientation
    int lawful_two_cells = -1;
    int total_two_cells = 0;

    std::vector<std::string> conclusions;
};

// Structured conclusion of the pipeline on a compressed cover: hypotheses
// verified here, group-theoretic implications cited (Bestvina-Brady for the
// finitely generated kernel, Bieri for the incoherence step when chi > 0).
Certificate incoherence_certificate(const CoxeterPresentation& p,
                                    const PermutationQuotient& q,
                                    const TwoComplex& compressed,
                                    const PathologyReport& pathology,
                                    const OrientationSearchResult& search);

}  // namespace coxwalls
