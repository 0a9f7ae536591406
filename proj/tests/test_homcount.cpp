#include <doctest.h>

#include "hlc/homcount.hpp"
#include "hlc/invariants.hpp"
#include "hlc/sums.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

Presentation two_gen(std::vector<int> rel) { return Presentation{2, {rel}, {}}; }

}  // namespace

TEST_CASE("torus links against hand-written presentations") {
    auto a4 = alternating_group(4), a5 = alternating_group(5);
    // Hopf link: Z^2
    auto hopf = braid_closure(2, {1, 1});
    auto z2 = two_gen({1, 2, -1, -2});
    CHECK(ks(hopf, a4).count == oracle::hom_classes(z2, a4));
    CHECK(ks(hopf, a5).count == oracle::hom_classes(z2, a5));
    // trefoil: aba = bab
    auto tref = braid_closure(2, {1, 1, 1});
    auto braid = two_gen({1, 2, 1, -2, -1, -2});
    CHECK(ks(tref, a4).count == oracle::hom_classes(braid, a4));
    CHECK(ks(tref, a5).count == oracle::hom_classes(braid, a5));
    // T(2,4): (ab)^2 = (ba)^2
    auto l4 = braid_closure(2, {1, 1, 1, 1});
    auto t24 = two_gen({1, 2, 1, 2, -1, -2, -1, -2});
    CHECK(ks(l4, a4).count == oracle::hom_classes(t24, a4));
    CHECK(ks(l4, a5).count == oracle::hom_classes(t24, a5));
    // figure-eight: y x y^-1 x y = x y x^-1 y x
    auto fig8 = braid_closure(3, {1, -2, 1, -2});
    auto f8 = two_gen({2, 1, -2, 1, 2, -1, -2, 1, -2, -1});
    CHECK(ks(fig8, a4).count == oracle::hom_classes(f8, a4));
    CHECK(ks(fig8, a5).count == oracle::hom_classes(f8, a5));
}

TEST_CASE("theta curve and the split link have free groups") {
    auto a4 = alternating_group(4), a5 = alternating_group(5);
    Diagram theta{theta_graph(), 0};
    CHECK(ks(theta, a4).count == burnside_free_hom_classes(a4, 2));
    Diagram split{theta_graph(), 1};
    CHECK(ks(split, a4).count == 178);
    CHECK(ks(split, a5).count == 3675);
    Diagram unknot;
    unknot.free_loops = 1;
    CHECK(ks(unknot, a4).count == static_cast<uint64_t>(a4.class_count()));
}

TEST_CASE("three counting routes agree") {
    auto a4 = alternating_group(4);
    auto s3 = symmetric_group(3);
    std::vector<Diagram> ds{braid_closure(2, {1, 1}), braid_closure(2, {1, 1, 1}), braid_closure(3, {1, -2, 1, -2}),
                            braid_closure(3, {1, -2, 1, -2, -2}), Diagram{theta_graph(), 1}};
    for (auto& g : enumerate_plane_graphs(3))
        for (auto& d : assign_crossings(g)) ds.push_back(d);
    for (auto& d : ds) {
        auto p = presentation_from_diagram(d);
        CAPTURE(to_code(d));
        uint64_t k = count_hom_classes(p, a4);
        CHECK(k == count_hom_classes_burnside(p, a4));
        CHECK(k == count_hom_classes_direct(p, a4));
        CHECK(count_hom_classes(p, s3) == count_hom_classes_direct(p, s3));
    }
}

TEST_CASE("raw homomorphism counts") {
    auto a4 = alternating_group(4);
    // free group of rank r: |G|^r homomorphisms
    Presentation free2{2, {}, {}};
    CHECK(count_homs(free2, a4) == 144);
    auto p = presentation_from_diagram(braid_closure(2, {1, 1}));
    uint64_t commuting = 0;
    for (int x = 0; x < 12; ++x)
        for (int y = 0; y < 12; ++y) commuting += a4.m(x, y) == a4.m(y, x);
    CHECK(count_homs(p, a4) == commuting);
}

TEST_CASE("Tietze simplification keeps the counts") {
    auto a4 = alternating_group(4);
    for (auto& g : enumerate_plane_graphs(4))
        for (auto& d : assign_crossings(g)) {
            auto p = presentation_from_diagram(d);
            auto t = tietze_simplify(p);
            CHECK(t.is_valid());
            CHECK(t.gens <= p.gens);
            CHECK(t.gens >= abelianization_rank(p));
            CHECK(count_hom_classes(t, a4) == count_hom_classes(p, a4));
            CHECK(abelianization_rank(p) == component_count(d) + 1);
        }
}

TEST_CASE("words") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(cyclic_reduce({-2, 1, 3, 2}) == Word{1, 3});
    CHECK(inverse({1, -2}) == Word{2, -1});
    CHECK(parse_word("1 -2 3") == Word{1, -2, 3});
    CHECK(word_to_string({1, -2}) == "1.-2");
}
