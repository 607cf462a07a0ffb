#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "covermonoid/lattice.hpp"

using namespace covermonoid;

namespace {

GroupHomomorphism cyclic_map(const FiniteAbelianGroup& M, long l, const std::vector<long>& images) {
    return GroupHomomorphism{M, FiniteAbelianGroup({l}), images};
}

bool proportional(const std::vector<Int>& u, const std::vector<Int>& v) {
    REQUIRE(u.size() == v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("cover lattice construction") {
    SUBCASE("Z/2") {
        CoverLattice L(FiniteAbelianGroup({2}));
        CHECK(L.ambient_rank() == 1);
        REQUIRE(L.pairs().size() == 1);
        CHECK(L.pairs()[0] == PairIndex{1, 1});
        CHECK(L.generator(0) == std::vector<Int>({Int(2)}));
        CHECK(L.k_basis().at(0, 0) == 2);
    }
    SUBCASE("Z/3 relation v_{1,2} = v_{1,1} + v_{2,2}") {
        CoverLattice L(FiniteAbelianGroup({3}));
        auto v11 = L.generator(L.pair_index(1, 1));
        auto v22 = L.generator(L.pair_index(2, 2));
        auto v12 = L.generator(L.pair_index(1, 2));
        for (long j = 0; j < 2; ++j) CHECK(v12[j] == v11[j] + v22[j]);
    }
    SUBCASE("generators lie in K and round trip through k-coordinates") {
        for (const char* spec : {"4", "5", "2,2", "2,4"}) {
            CoverLattice L(FiniteAbelianGroup::parse(spec));
            for (std::size_t p = 0; p < L.pairs().size(); ++p) {
                const auto& kc = L.generator_k_coords()[p];
                std::vector<Int> back(L.ambient_rank(), Int(0));
                for (long i = 0; i < L.k_basis().rows; ++i)
                    for (long j = 0; j < L.k_basis().cols; ++j)
                        back[j] += kc[i] * L.k_basis().at(i, j);
                CHECK(back == L.generator(p));
            }
        }
    }
    SUBCASE("(Z/2)^2: the three mixed generators form a basis of K") {
        FiniteAbelianGroup M({2, 2});
        CoverLattice L(M);
        long e1 = M.index({1, 0}), e2 = M.index({0, 1}), e3 = M.index({1, 1});
        IntMatrix G(3, 3);
        long rows[3] = {L.pair_index(e1, e2), L.pair_index(e1, e3), L.pair_index(e2, e3)};
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j) G.at(i, j) = L.generator(rows[i])[j];
        CHECK(sublattice_equal(G, L.k_basis()));
    }
    CHECK_THROWS(CoverLattice(FiniteAbelianGroup(std::vector<long>{})));
}

TEST_CASE("reduced presentation") {
    SUBCASE("Z/4 has a single relation") {
        CoverLattice L(FiniteAbelianGroup({4}));
        auto P = reduced_presentation(L);
        REQUIRE(P.variables.size() == 4);
        CHECK(P.variables[0] == PairIndex{1, 1});
        CHECK(P.variables[1] == PairIndex{1, 2});
        CHECK(P.variables[2] == PairIndex{2, 3});
        CHECK(P.variables[3] == PairIndex{3, 3});
        REQUIRE(P.relations.size() == 1);
        CHECK(P.relations[0].lhs == std::array<long, 2>{0, 2});  // x11 x23
        CHECK(P.relations[0].rhs == std::array<long, 2>{1, 3});  // x12 x33
    }
    SUBCASE("Z/3 and (Z/2)^2 are free") {
        CoverLattice L3(FiniteAbelianGroup({3}));
        auto P3 = reduced_presentation(L3);
        CHECK(P3.variables.size() == 2);
        CHECK(P3.relations.empty());
        CoverLattice L22(FiniteAbelianGroup({2, 2}));
        auto P22 = reduced_presentation(L22);
        CHECK(P22.variables.size() == 3);
        CHECK(P22.relations.empty());
    }
    SUBCASE("relation sides agree in K") {
        for (const char* spec : {"4", "5", "6", "2,4"}) {
            CoverLattice L(FiniteAbelianGroup::parse(spec));
            auto P = reduced_presentation(L);
            for (const auto& rel : P.relations) {
                std::vector<Int> lhs(L.ambient_rank(), Int(0)), rhs(L.ambient_rank(), Int(0));
                for (long v : rel.lhs) {
                    const auto& p = P.variables[v];
                    const auto& g = L.generator(L.pair_index(p.m, p.n));
                    for (long j = 0; j < L.ambient_rank(); ++j) lhs[j] += g[j];
                }
                for (long v : rel.rhs) {
                    const auto& p = P.variables[v];
                    const auto& g = L.generator(L.pair_index(p.m, p.n));
                    for (long j = 0; j < L.ambient_rank(); ++j) rhs[j] += g[j];
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("pardini rays") {
    SUBCASE("Z/2 identity") {
        CoverLattice L(FiniteAbelianGroup({2}));
        Ray E = pardini_ray(L, cyclic_map(L.group(), 2, {1}));
        CHECK(E.value_on_pair(1, 1) == 1);
        CHECK(E.e_values()[0] == Rat(1, 2));
    }
    SUBCASE("Z/4 identity values") {
        CoverLattice L(FiniteAbelianGroup({4}));
        Ray E = pardini_ray(L, cyclic_map(L.group(), 4, {1}));
        CHECK(E.value_on_pair(1, 1) == 0);
        CHECK(E.value_on_pair(1, 2) == 0);
        CHECK(E.value_on_pair(1, 3) == 1);
        CHECK(E.value_on_pair(2, 2) == 1);
        CHECK(E.value_on_pair(2, 3) == 1);
        CHECK(E.value_on_pair(3, 3) == 1);
        CHECK(E.denominator() == 4);
    }
    SUBCASE("pardini rays are smooth, extremal, and have h = 1") {
        for (const char* spec : {"4", "6", "2,2", "2,4"}) {
            CoverLattice L(FiniteAbelianGroup::parse(spec));
            auto ext = extremal_rays(L);
            for (const auto& eta : cyclic_surjections(L.group())) {
                Ray E = pardini_ray(L, eta);
                CHECK(is_smooth_ray(E));
                CHECK(std::find(ext.begin(), ext.end(), E) != ext.end());
                CHECK(h_of_ray(E) == 1);
            }
        }
    }
    SUBCASE("rejects non-surjective maps") {
        CoverLattice L(FiniteAbelianGroup({4}));
        CHECK_THROWS(pardini_ray(L, cyclic_map(L.group(), 4, {2})));
    }
}

TEST_CASE("extremal rays") {
    SUBCASE("Z/2") {
        CoverLattice L(FiniteAbelianGroup({2}));
        auto ext = extremal_rays(L);
        REQUIRE(ext.size() == 1);
        CHECK(ext[0].value_on_pair(1, 1) == 1);
    }
    SUBCASE("Z/3: exactly the two pardini rays") {
        CoverLattice L(FiniteAbelianGroup({3}));
        auto ext = extremal_rays(L);
        REQUIRE(ext.size() == 2);
        Ray id = pardini_ray(L, cyclic_map(L.group(), 3, {1}));
        Ray nid = pardini_ray(L, cyclic_map(L.group(), 3, {2}));
        CHECK(std::find(ext.begin(), ext.end(), id) != ext.end());
        CHECK(std::find(ext.begin(), ext.end(), nid) != ext.end());
    }
    SUBCASE("Z/4: four rays, all smooth, distinct supports, indecomposable") {
        CoverLattice L(FiniteAbelianGroup({4}));
        auto ext = extremal_rays(L);
        REQUIRE(ext.size() == 4);
        std::set<std::vector<long>> supports;
        for (const auto& E : ext) {
            CHECK(is_smooth_ray(E));
            CHECK(is_indecomposable_ray(E));
            supports.insert(E.support());
        }
        CHECK(supports.size() == 4);
    }
    SUBCASE("double description agrees with subset enumeration on K cones") {
        for (const char* spec : {"2", "3", "4", "5", "6", "2,2", "2,3"}) {
            CoverLattice L(FiniteAbelianGroup::parse(spec));
            RationalCone C{L.ambient_rank(), L.generator_k_coords()};
            auto dd = dual_cone_extreme_rays(C);
            CHECK(dd == dual_cone_extreme_rays_enumerated(C, false));
            CHECK(dd == dual_cone_extreme_rays_enumerated(C, true));
        }
    }
    SUBCASE("distinct supports and indecomposability on Z/5, Z/6") {
        for (const char* spec : {"5", "6"}) {
            CoverLattice L(FiniteAbelianGroup::parse(spec));
            auto ext = extremal_rays(L);
            std::set<std::vector<long>> supports;
            for (const auto& E : ext) {
                CHECK(is_indecomposable_ray(E));
                supports.insert(E.support());
            }
            CHECK(supports.size() == ext.size());
        }
    }
    SUBCASE("k-functional round trip") {
        CoverLattice L(FiniteAbelianGroup({5}));
        for (const auto& E : extremal_rays(L))
            CHECK(Ray::from_k_functional(L, E.k_functional()) == E);
    }
}

TEST_CASE("ray validation") {
    CoverLattice L(FiniteAbelianGroup({2}));
    CHECK_THROWS(Ray(L, {Rat(1, 3)}));   // value 2/3 on the generator
    CHECK_THROWS(Ray(L, {Rat(-1, 2)}));  // value -1 on the generator
    Ray dbl(L, {Rat(1)});                // twice the pardini ray: valid but not smooth
    CHECK(dbl.value_on_pair(1, 1) == 2);
    CHECK_FALSE(is_smooth_ray(dbl));
}

TEST_CASE("H and h invariants of rays") {
    CoverLattice L(FiniteAbelianGroup({4}));
    Ray zero(L, std::vector<Rat>(3, Rat(0)));
    CHECK(H_of_ray(zero) == std::vector<long>({0, 1, 2, 3}));
    CHECK(h_of_ray(zero) == 0);
    CHECK_THROWS(is_smooth_ray(zero));

    Ray id = pardini_ray(L, cyclic_map(L.group(), 4, {1}));
    CHECK(H_of_ray(id) == std::vector<long>({0}));
    Ray mod2 = pardini_ray(L, cyclic_map(L.group(), 2, {1}));
    CHECK(H_of_ray(mod2) == std::vector<long>({0, 2}));
    CHECK(h_of_ray(mod2) == 1);
}

TEST_CASE("support realizability") {
    CoverLattice L(FiniteAbelianGroup({4}));
    SUBCASE("empty support is the zero ray") {
        auto E = support_realizable(L, {});
        REQUIRE(E.has_value());
        CHECK(E->is_zero());
    }
    SUBCASE("full support gives an interior ray with h = |M|-1") {
        std::vector<long> all;
        for (long p = 0; p < static_cast<long>(L.pairs().size()); ++p) all.push_back(p);
        auto E = support_realizable(L, all);
        REQUIRE(E.has_value());
        CHECK(E->support() == all);
        CHECK(H_of_ray(*E) == std::vector<long>({0}));
        CHECK(h_of_ray(*E) == 3);
    }
    SUBCASE("the pardini support recovers a multiple of the pardini ray") {
        std::vector<long> Z = {L.pair_index(1, 3), L.pair_index(2, 2), L.pair_index(2, 3),
                               L.pair_index(3, 3)};
        std::sort(Z.begin(), Z.end());
        auto E = support_realizable(L, Z);
        REQUIRE(E.has_value());
        CHECK(E->support() == Z);
        Ray id = pardini_ray(L, cyclic_map(L.group(), 4, {1}));
        CHECK(proportional(E->k_functional(), id.k_functional()));
    }
    SUBCASE("impossible support") {
        CHECK_FALSE(support_realizable(L, {L.pair_index(1, 1)}).has_value());
    }
    SUBCASE("realized rays lie in the cone of extremal rays") {
        for (const char* spec : {"4", "5", "6", "2,2"}) {
            CoverLattice L2(FiniteAbelianGroup::parse(spec));
            auto ext = extremal_rays(L2);
            std::vector<std::vector<Int>> extf;
            for (const auto& E : ext) extf.push_back(E.k_functional());
            std::vector<long> all;
            for (long p = 0; p < static_cast<long>(L2.pairs().size()); ++p) all.push_back(p);
            // Try the full support and each extremal support.
            auto full = support_realizable(L2, all);
            REQUIRE(full.has_value());
            CHECK(cone_membership(extf, full->k_functional()));
            for (const auto& E : ext) {
                auto re = support_realizable(L2, E.support());
                REQUIRE(re.has_value());
                CHECK(cone_membership(extf, re->k_functional()));
            }
        }
    }
}

TEST_CASE("smooth sequences") {
    CoverLattice L(FiniteAbelianGroup({3}));
    CHECK(is_smooth_sequence(L, {}).smooth);
    Ray id = pardini_ray(L, cyclic_map(L.group(), 3, {1}));
    CHECK(is_smooth_ray(id));
    auto single = is_smooth_sequence(L, {id});
    REQUIRE(single.smooth);
    REQUIRE(single.witness.size() == 1);
    CHECK(id.generator_values()[single.witness[0]] == 1);
}
