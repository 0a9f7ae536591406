#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlc/group.hpp"
#include "hlc/reduce.hpp"
#include "hlc/sums.hpp"

namespace hlc {

struct PoolEntry {
    std::string name;
    Diagram d;
};

// Invariant tuple used to separate handlebody links.
struct InvariantTuple {
    int c = 0, n = 0;
    uint64_t ks_a4 = 0;
    std::optional<uint64_t> ks_a5;
    std::vector<std::vector<long>> linking;  // divisors per component pair, sorted as a multiset
    bool linking_connected = false;          // nonzero pairs connect all components
    std::vector<uint64_t> deletion_a4;       // ks_A4 after deleting each circle, sorted
    int rank_bound = 0;

    bool same_class(const InvariantTuple& o) const;  // ignores c and rank
    std::string describe() const;
};
InvariantTuple invariant_tuple(const Diagram& d, const GroupTable& a4, const GroupTable* a5);


enum class CompositeFate { Kept, Decomposed, Split, NotALink };

struct CompositeCandidate {
    Diagram d;
    std::string trace;
    CompositeFate fate = CompositeFate::Kept;
    std::string certificate;
    InvariantTuple inv;
    bool irreducible_certified = false;
    std::string nonsplit;  // certificate, empty if none
};

struct CompositeClass {
    int representative = -1;  // index into candidates (fewest crossings first)
    std::vector<int> members;
    InvariantTuple inv;
    std::string irreducibility;  // certifying route, or "open"
    std::string nonsplit;        // certifying route, or "open"
};

struct CompositeReport {
    std::vector<CompositeCandidate> candidates;
    std::vector<CompositeClass> classes;
};

struct CompositeOptions {
    int max_crossings = 6;
    int max_link_summands = 3;
    Budget budget{};
    Budget meet_budget{-1, 400'000};
    int workers = 1;
};

// all seven configurations G # L1 # ... with at most three link summands.
// Candidates that move search does not settle are compared with the
// reducible models (order-1 sums) sharing their invariant tuple.
CompositeReport enumerate_composites(const std::vector<PoolEntry>& graphs, const std::vector<PoolEntry>& links,
                                     const GroupTable& a4, const GroupTable& a5,
                                     const std::vector<PoolEntry>& reducible_models = {}, CompositeOptions opt = {});

// ---------------------------------------------------------------- order-1 sums

struct LinkPoolEntry {
    std::string name;
    std::string family;                     // row label; several links may share one
    std::optional<Diagram> d;               // absent for annotation-only entries
    int crossings = 0;
    int components = 1;
    std::vector<std::vector<int>> orbits;   // component symmetry orbits, from fixtures
    bool chiral = false;
};

struct Order1Row {
    std::string left, right;  // families, fewer components (then fewer crossings) first
    int crossings = 0;
    int count = 0;
    bool annotated = true;    // every factor carried orbit data
    int pairs_built = 0;      // orbit pairs with diagrams on both sides
    int pairs_separated = 0;  // distinct invariant tuples among them
    bool orbits_consistent = true;
    std::string label() const { return left + " o " + right; }
};

struct Order1Census {
    std::vector<Order1Row> rows;
    std::map<int, int> totals;       // crossings -> sum of row counts
    std::vector<PoolEntry> models;   // every component pairing, also with the right factor mirrored
};

// all pairs L1 o L2 from the pool with at least two components and at most
// max_crossings; a4 (optional) separates the orbit pairs by invariants
Order1Census enumerate_order1_census(const std::vector<LinkPoolEntry>& pool, int max_crossings,
                                     const GroupTable* a4 = nullptr);

}  // namespace hlc
