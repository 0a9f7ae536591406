#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlc/composites.hpp"

namespace hlc {

// ---------------------------------------------------------------- expected tables

struct RankCell {
    int value = 0;
    bool at_most = false;  // printed as "<= value"
};

struct KsRow {
    std::string label;
    std::string components;  // "trivial + 2 unknots", "HK4_1 + unknot", ...
    int n = 0;
    uint64_t a4 = 0;
    std::optional<uint64_t> a5;
    std::optional<RankCell> rank;
    bool listed = true;  // a census table entry (false for split and fake rows)
    // ks_A4 after deleting each circle; only set where the other columns tie
    std::vector<uint64_t> deletion_a4;
};

struct EnumerationCount {
    int q = 0;
    std::map<int, int> by_n;
    int total = 0;
};

struct ReducibleRow {
    int crossings = 0;
    std::string left, right;
    int count = 0;
    std::string label() const { return left + " o " + right; }
};

// a reference row or count we reproduce differently, with the exact value we get
struct KnownDeviation {
    std::string key;
    std::string expected;
    std::string observed;
    std::string reason;
};

struct ExpectedTables {
    std::vector<KsRow> ks;
    std::vector<EnumerationCount> enumeration;
    std::vector<ReducibleRow> reducible;
    std::map<int, int> reducible_totals;
    std::vector<std::string> survivors;       // 6-crossing entries found by move search
    std::vector<std::string> composite_list;  // as printed
    std::map<std::string, std::string> composite_list_aliases;
    std::vector<std::string> chiral;
    // expected (N, rN) in A5 for the circle of a two-component entry; fixes
    // which of the entry and its mirror image is stored
    std::map<std::string, std::pair<uint64_t, uint64_t>> peripheral_a5;
    std::vector<KnownDeviation> deviations;

    const KsRow* row(const std::string& label) const;
    const KnownDeviation* deviation(const std::string& key) const;
};
const ExpectedTables& expected_tables();

// ---------------------------------------------------------------- report

struct CensusEntry {
    std::string label;  // empty when no row matches
    std::string code;
    int c = 0, n = 0, e = 0;
    uint64_t ks_a4 = 0;
    std::optional<uint64_t> ks_a5;
    int rank_bound = 0;
    std::string components;
    std::vector<std::vector<long>> linking;
    std::vector<uint64_t> deletion_a4;
    std::string nonsplit;     // certifying route or "open"
    std::string irreducible;  // certifying route or "open"
    std::string chirality;    // "chiral", "achiral-witnessed" or "chirality-open"
    std::string chirality_route;
    std::string provenance;   // "enumerated(...)" or "composite(...)"
};

struct SurvivorStage {
    int q = 0;
    int seeds = 0, reduced = 0, survivors = 0, inconclusive = 0, classes = 0;
};

struct CompositeCounts {
    int candidates = 0, kept = 0, decomposed = 0, split = 0, not_a_link = 0, classes = 0;
};

struct CensusReport {
    bool has_a5 = false;
    std::vector<EnumerationCount> enumeration;
    std::vector<SurvivorStage> survivors;
    CompositeCounts composites;
    std::vector<CensusEntry> entries;
    std::vector<Order1Row> order1;
    std::map<int, int> order1_totals;
};

struct CensusConfig {
    int max_quad = 6;
    int workers = 1;
    std::string fixture_dir = "fixtures";
    std::string group_a4 = "a4";
    std::string group_a5 = "a5";  // empty: skip the A5 column
    std::size_t reduce_states = 5'000'000;
    std::size_t meet_states = 400'000;
    std::size_t achiral_states = 300'000;
    int composite_max_crossings = 6;
    int max_link_summands = 3;
    int order1_max_crossings = 6;
};

// "trivial + 2 unknots" style description from component deletions
std::string components_type(const Diagram& d, const GroupTable& a4);

// chirality by peripheral counts (A4, then A5 when given), else a move-search
// witness that the diagram meets its mirror image, else open
struct ChiralityCall {
    std::string verdict;
    std::string route;
};
ChiralityCall classify_chirality(const Diagram& d, const GroupTable& a4, const GroupTable* a5, Budget witness);

// label by invariant matching against the census table rows
std::string match_label(const CensusEntry& e, const ExpectedTables& t);

CensusEntry make_entry(const Diagram& d, const std::string& provenance, const GroupTable& a4, const GroupTable* a5);

CensusReport run_pipeline(const CensusConfig& cfg, std::ostream* log = nullptr);

void write_report(std::ostream& out, const CensusReport& r);
CensusReport read_report(std::istream& in);
CensusReport read_report_file(const std::string& path);

struct VerifyResult {
    bool pass = false;
    bool partial = false;  // A5 values missing; the rest agreed
    std::vector<std::string> diffs;
    std::vector<std::string> notes;  // known deviations that were observed as recorded
};
VerifyResult verify(const CensusReport& r, const ExpectedTables& t = expected_tables());

void summary_table(std::ostream& out, const CensusReport& r);

// census table diagrams from a report plus the split and fake comparison rows
std::vector<NamedDiagram> comparison_fixtures(const CensusReport& r, const std::vector<PoolEntry>& graphs,
                                              const GroupTable& a4, const GroupTable& a5, std::ostream* log = nullptr);

}  // namespace hlc
