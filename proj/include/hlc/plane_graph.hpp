#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hlc {

// Slot s = 4*v + k is the k-th dart (ccw) at vertex v. Trivalent vertices
// leave slot 3 unused (link = -1).
inline int vert_of(int s) { return s >> 2; }
inline int pos_of(int s) { return s & 3; }
inline int slot(int v, int k) { return (v << 2) | k; }

struct PlaneGraph {
    std::vector<uint8_t> deg;
    std::vector<int16_t> link;

    int vertex_count() const { return static_cast<int>(deg.size()); }
    int slot_count() const { return static_cast<int>(link.size()); }
    int next(int s) const {
        int v = vert_of(s), k = pos_of(s) + 1;
        return slot(v, k == deg[v] ? 0 : k);
    }
    int prev(int s) const {
        int v = vert_of(s), k = pos_of(s);
        return slot(v, k == 0 ? deg[v] - 1 : k - 1);
    }
    // face successor; faces are traversed with the face on the left
    int phi(int s) const { return prev(link[s]); }
    bool used(int s) const { return pos_of(s) < deg[vert_of(s)]; }

    int add_vertex(int d);
    void join(int a, int b) {
        link[a] = static_cast<int16_t>(b);
        link[b] = static_cast<int16_t>(a);
    }

    int count(int d) const;
    int edge_count() const;
    int face_count() const;
    // face id per slot (-1 on unused slots); returns number of faces
    int faces(std::vector<int>& face_of) const;
    int connected_parts() const;
    bool is_valid(std::string* why = nullptr) const;
    bool is_spherical() const;  // every connected part has genus 0

    bool operator==(const PlaneGraph& o) const { return deg == o.deg && link == o.link; }
};

struct CodeOptions {
    bool crossings = false;  // distinguish the under pair (even positions) at degree-4 vertices
    bool reflect = true;     // identify a map with its reflection
};

using CanonicalCode = std::vector<int16_t>;

CanonicalCode canonical_code(const PlaneGraph& g, CodeOptions opt = {}, int extra = 0);
PlaneGraph reflect(const PlaneGraph& g);
// cyclic relabelling of the rotation at v (start moves by `shift`)
PlaneGraph rotate_vertex(const PlaneGraph& g, int v, int shift);
PlaneGraph permute_vertices(const PlaneGraph& g, const std::vector<int>& perm);

struct Hash128 {
    uint64_t hi = 0, lo = 0;
    bool operator==(const Hash128& o) const { return hi == o.hi && lo == o.lo; }
    bool operator<(const Hash128& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};
struct Hash128Hasher {
    size_t operator()(const Hash128& h) const { return static_cast<size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ULL)); }
};
Hash128 hash_code(const CanonicalCode& c);

// abstract multigraph view: min number of edges whose removal disconnects
int edge_connectivity(const PlaneGraph& g);
int edge_connectivity(int n, const std::vector<std::pair<int, int>>& edges);

enum class DoubleArcVerdict { BigonQuadri, Forbidden };
struct DoubleArc {
    int u, v;  // vertices
    int a, b;  // one slot of each parallel edge, at u
    DoubleArcVerdict verdict;
};
std::vector<DoubleArc> classify_double_arcs(const PlaneGraph& g);

struct EnumOptions {
    bool mirror_dedup = true;
};
std::vector<PlaneGraph> enumerate_plane_graphs(int q, EnumOptions opt = {});
// dart-pairing oracle (slow); identical filters, independent generation
std::vector<PlaneGraph> enumerate_plane_graphs_bruteforce(int q, EnumOptions opt = {});

PlaneGraph theta_graph();

std::string to_text(const PlaneGraph& g);
PlaneGraph plane_graph_from_text(const std::string& line);
nlohmann::json to_json(const PlaneGraph& g);
PlaneGraph plane_graph_from_json(const nlohmann::json& j);

}  // namespace hlc
