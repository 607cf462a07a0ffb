#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covermonoid/algebra.hpp"

using namespace covermonoid;

namespace {

MultiplicationTable all_ones(const FiniteAbelianGroup& M, const Field& F) {
    MultiplicationTable psi(M, F);
    for (long m = 1; m < M.size(); ++m)
        for (long n = m; n < M.size(); ++n) psi.set(m, n, FieldScalar::one(F));
    return psi;
}

GroupHomomorphism identity_hom(const FiniteAbelianGroup& M) {
    std::vector<long> im;
    for (std::size_t i = 0; i < M.rank(); ++i) {
        std::vector<long> c(M.rank(), 0);
        c[i] = 1;
        im.push_back(M.index(c));
    }
    return GroupHomomorphism{M, M, im};
}

UnitCharacter random_character(const FiniteAbelianGroup& M, const Field& F,
                               std::mt19937& rng) {
    UnitCharacter u{M, {}};
    std::uniform_int_distribution<long> pick(1, F.p - 1);
    u.u.push_back(FieldScalar::one(F));
    for (long m = 1; m < M.size(); ++m)
        u.u.push_back(FieldScalar::from_integer(F, pick(rng)));
    return u;
}

}  // namespace

TEST_CASE("field scalars") {
    Field Q = Field::rationals();
    Field F7 = Field::prime(7);
    CHECK_THROWS(Field::prime(6));

    FieldScalar a = FieldScalar::from_rational(Rat(3, 4));
    FieldScalar b = FieldScalar::from_rational(Rat(1, 4));
    CHECK((a + b) == FieldScalar::one(Q));
    CHECK((a * b).rational() == Rat(3, 16));
    CHECK((a / b).rational() == Rat(3));
    CHECK(a.pow(3).rational() == Rat(27, 64));
    CHECK(FieldScalar::zero(Q).pow(0) == FieldScalar::one(Q));
    CHECK(a.str() == "3/4");

    FieldScalar x = FieldScalar::from_integer(F7, 10);
    CHECK(x.residue() == 3);
    CHECK((x * x).residue() == 2);
    CHECK(x.inverse().residue() == 5);  // 3*5 = 15 = 1 mod 7
    CHECK((x / x) == FieldScalar::one(F7));
    CHECK(x.pow(6) == FieldScalar::one(F7));
    CHECK(FieldScalar::from_integer(F7, -1).residue() == 6);
    CHECK_THROWS(FieldScalar::zero(F7).inverse());
    CHECK_THROWS(x + a);
}

TEST_CASE("validation of structure tables") {
    FiniteAbelianGroup M({6});
    Field Q = Field::rationals();

    // The split torsor: every value 1.
    MultiplicationTable torsor = all_ones(M, Q);
    CHECK(validate(torsor).ok);

    // Zero multiplication in all nonzero degrees is also consistent.
    MultiplicationTable zero_mult(M, Q);
    CHECK(validate(zero_mult).ok);

    // Breaking a unit value is reported.
    MultiplicationTable bad_unit = torsor;
    bad_unit.set(2, 0, FieldScalar::zero(Q));
    auto rep = validate(bad_unit);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("unit") != std::string::npos);

    // An isolated zero breaks the two-cocycle identity.
    FiniteAbelianGroup M4({4});
    MultiplicationTable bad = all_ones(M4, Q);
    bad.set(1, 1, FieldScalar::zero(Q));
    auto rep2 = validate(bad);
    CHECK_FALSE(rep2.ok);
    CHECK(rep2.message.find("associativity") != std::string::npos);
}

TEST_CASE("tables from rays") {
    Field Q = Field::rationals();

    // The zero functional gives the split torsor.
    FiniteAbelianGroup M6({6});
    CoverLattice L6(M6);
    Ray zero(L6, std::vector<Rat>(M6.size() - 1, Rat(0)));
    CHECK(from_ray(zero, Q) == all_ones(M6, Q));

    // Carries of the identity surjection on Z/4: zero exactly when the lifts
    // do not overflow.
    FiniteAbelianGroup M4({4});
    CoverLattice L4(M4);
    Ray E = pardini_ray(L4, identity_hom(M4));
    MultiplicationTable psi = from_ray(E, Q);
    CHECK(validate(psi).ok);
    CHECK(psi.at(1, 1) == FieldScalar::one(Q));
    CHECK(psi.at(1, 2) == FieldScalar::one(Q));
    CHECK(psi.at(1, 3).is_zero());
    CHECK(psi.at(2, 2).is_zero());
    CHECK(psi.at(2, 3).is_zero());
    CHECK(psi.at(3, 3).is_zero());

    // Scaling the functional does not change the zero pattern.
    std::vector<Rat> doubled;
    for (const auto& e : E.e_values()) doubled.push_back(e * 2);
    CHECK(from_ray(Ray(L4, doubled), Q) == psi);

    // Twisting by units keeps validity and the zero pattern.
    UnitCharacter u{M4,
                    {FieldScalar::one(Q), FieldScalar::from_rational(Rat(2)),
                     FieldScalar::from_rational(Rat(3)), FieldScalar::from_rational(Rat(5))}};
    MultiplicationTable tw = from_ray(E, Q, u);
    CHECK(validate(tw).ok);
    CHECK(tw.at(1, 1).rational() == Rat(4, 3));
    CHECK(tw.at(1, 2).rational() == Rat(6, 5));
    CHECK(tw.at(1, 3).is_zero());
    CHECK(tw == twist_table(psi, u));

    // Twisted tables from every extreme ray stay valid over GF(7).
    std::mt19937 rng(2024);
    Field F7 = Field::prime(7);
    for (const auto& factors : {std::vector<long>{6}, std::vector<long>{2, 4}}) {
        FiniteAbelianGroup M(factors);
        CoverLattice L(M);
        for (const auto& R : extremal_rays(L)) {
            UnitCharacter c = random_character(M, F7, rng);
            MultiplicationTable t = from_ray(R, F7, c);
            CHECK(validate(t).ok);
            CHECK(H_of_table(t) == H_of_ray(R));
            CHECK(h_of_table(t) == h_of_ray(R));
        }
    }
}

TEST_CASE("H and h of a table") {
    Field Q = Field::rationals();
    FiniteAbelianGroup M6({6});

    // Split torsor: everything is invertible, nothing is needed to generate.
    MultiplicationTable torsor = all_ones(M6, Q);
    CHECK(H_of_table(torsor).size() == 6);
    CHECK(h_of_table(torsor) == 0);

    // Zero multiplication: every nonzero degree is a fresh generator.
    MultiplicationTable zero_mult(M6, Q);
    CHECK(H_of_table(zero_mult) == std::vector<long>{0});
    CHECK(h_of_table(zero_mult) == 5);
    CHECK(minimum_generating_degrees(zero_mult) == std::vector<long>{1, 2, 3, 4, 5});

    // Carries of the identity on Z/4: the algebra is generated in degree 1.
    FiniteAbelianGroup M4({4});
    CoverLattice L4(M4);
    MultiplicationTable psi = from_ray(pardini_ray(L4, identity_hom(M4)), Q);
    CHECK(H_of_table(psi) == std::vector<long>{0});
    CHECK(h_of_table(psi) == 1);
    CHECK(minimum_generating_degrees(psi) == std::vector<long>{1});
    CHECK(h_component_table(psi, 1) == 1);
    CHECK(h_component_table(psi, 2) == 0);

    // Two independent projections on (Z/2)^2 need two generators.
    FiniteAbelianGroup V({2, 2});
    CoverLattice LV(V);
    GroupHomomorphism pr1{V, FiniteAbelianGroup({2}), {1, 0}};
    GroupHomomorphism pr2{V, FiniteAbelianGroup({2}), {0, 1}};
    std::vector<Rat> sum;
    for (long i = 0; i + 1 < V.size(); ++i)
        sum.push_back(pardini_ray(LV, pr1).e_values()[i] + pardini_ray(LV, pr2).e_values()[i]);
    MultiplicationTable two_gen = from_ray(Ray(LV, sum), Q);
    CHECK(h_of_table(two_gen) == 2);
    CHECK(minimum_generating_degrees(two_gen) == std::vector<long>{1, 2});

    // Minimum generating degrees require trivial H.
    CHECK_THROWS(minimum_generating_degrees(torsor));
}

TEST_CASE("reduction modulo a split subgroup") {
    Field Q = Field::rationals();

    // Reducing by the trivial subgroup reproduces the table.
    FiniteAbelianGroup M4({4});
    CoverLattice L4(M4);
    MultiplicationTable psi = from_ray(pardini_ray(L4, identity_hom(M4)), Q);
    QuotientData triv = quotient_by(M4, {0});
    MultiplicationTable same = reduce_mod_H(psi, triv);
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b)
            CHECK(same.at(a, b) == psi.at(triv.section[a], triv.section[b]));

    // The split torsor on M reduces to the split torsor on M/H.
    MultiplicationTable torsor = all_ones(M4, Q);
    QuotientData full = quotient_by(M4, {0, 1, 2, 3});
    MultiplicationTable point = reduce_mod_H(torsor, full);
    CHECK(point.group().size() == 1);
    CHECK(validate(point).ok);

    // Pulling back the degree map of Z/2 along Z/4 -> Z/2 and reducing by the
    // kernel recovers the table on Z/2.
    GroupHomomorphism eta{M4, FiniteAbelianGroup({2}), {1}};
    MultiplicationTable pulled = from_ray(pardini_ray(L4, eta), Q);
    CHECK(H_of_table(pulled) == std::vector<long>{0, 2});
    QuotientData q = quotient_by(M4, {0, 2});
    MultiplicationTable reduced = reduce_mod_H(pulled, q);
    CoverLattice L2(q.quotient);
    CHECK(reduced == from_ray(pardini_ray(L2, identity_hom(q.quotient)), Q));
    CHECK(h_of_table(reduced) == h_of_table(pulled));
    CHECK(H_of_table(reduced) == std::vector<long>{0});

    // Tables that are not split on H are rejected.
    CHECK_THROWS(reduce_mod_H(psi, q));
}

TEST_CASE("structure constants of two-variable quotient rings") {
    FiniteAbelianGroup M2({2});
    Field F7 = Field::prime(7);

    // k[s]/(s^2 - a) on Z/2, encoded with a trivial second variable.
    for (long lam : {0L, 1L, 5L}) {
        QuotientRingSpec spec;
        spec.M = M2;
        spec.m = 1;
        spec.n = 1;
        spec.z = 2;
        spec.y = 0;
        spec.x = 1;
        spec.w = 0;
        spec.sr = 0;
        spec.dq = 2;
        spec.gamma = 0;
        spec.a = FieldScalar::from_integer(F7, lam);
        spec.b = FieldScalar::one(F7);
        spec.basis = {{0, 0}, {1, 0}};
        MultiplicationTable psi = quotient_ring_structure_constants(spec);
        CHECK(psi.at(1, 1) == FieldScalar::from_integer(F7, lam));
        CHECK(validate(psi).ok);
    }

    // k[s,t]/(s^2 - a t^2, t^3 - b s, s t - a b) graded by Z/4 with
    // deg t = n of order 4 and deg s = 3n.
    TwoDegreeGroup G = make_two_degree_group(1, 3, 4);
    long m = G.e1, n = G.e2, n2 = G.group.mul(2, G.e2);
    QuotientRingSpec spec;
    spec.M = G.group;
    spec.m = m;
    spec.n = n;
    spec.z = 2;
    spec.y = 2;
    spec.x = 3;
    spec.w = 1;
    spec.sr = 1;
    spec.dq = 1;
    spec.gamma = 1;
    spec.a = FieldScalar::from_integer(F7, 3);
    spec.b = FieldScalar::from_integer(F7, 2);
    spec.basis.assign(4, {0, 0});
    spec.basis[n] = {0, 1};
    spec.basis[n2] = {0, 2};
    spec.basis[m] = {1, 0};
    MultiplicationTable psi = quotient_ring_structure_constants(spec);
    CHECK(validate(psi).ok);
    CHECK(psi.at(n, n) == FieldScalar::one(F7));
    CHECK(psi.at(n, n2) == spec.b);                     // t^3 = b s
    CHECK(psi.at(n2, n2) == spec.a * spec.b * spec.b);  // t^4 = a b^2
    CHECK(psi.at(m, m) == spec.a);                      // s^2 = a t^2
    CHECK(psi.at(m, n) == spec.a * spec.b);             // s t = a b

    // A basis monomial of the wrong degree is rejected.
    QuotientRingSpec broken = spec;
    std::swap(broken.basis[n], broken.basis[m]);
    CHECK_THROWS(quotient_ring_structure_constants(broken));
}

TEST_CASE("membership in the main component") {
    Field Q = Field::rationals();

    // The split torsor is a cover with empty branch locus.
    FiniteAbelianGroup M6({6});
    CoverLattice L6(M6);
    auto res = in_main_component(L6, all_ones(M6, Q));
    CHECK(res.member);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->is_zero());

    // Tables built from functionals are always degenerations of torsors.
    for (const auto& factors : {std::vector<long>{4}, std::vector<long>{6}}) {
        FiniteAbelianGroup M(factors);
        CoverLattice L(M);
        for (const auto& R : extremal_rays(L)) {
            MultiplicationTable psi = from_ray(R, Q);
            auto r = in_main_component(L, psi);
            CHECK(r.member);
            REQUIRE(r.witness.has_value());
            CHECK(r.witness->support() == R.support());
        }
    }

    // On Z/8 some consistent tables lie outside the main component: zeroing a
    // single entry of a degeneration can produce a zero pattern that no
    // nonnegative functional realizes.
    FiniteAbelianGroup M8({8});
    CoverLattice L8(M8);
    long valid_flips8 = 0, outside8 = 0;
    for (const auto& R : extremal_rays(L8)) {
        MultiplicationTable psi = from_ray(R, Q);
        for (const auto& pr : L8.pairs()) {
            bool zero = psi.at(pr.m, pr.n).is_zero();
            MultiplicationTable flip = psi;
            flip.set(pr.m, pr.n, zero ? FieldScalar::one(Q) : FieldScalar::zero(Q));
            if (!validate(flip).ok) continue;
            ++valid_flips8;
            if (!in_main_component(L8, flip).member) ++outside8;
        }
    }
    CHECK(valid_flips8 == 88);
    CHECK(outside8 == 8);

    // For Z/4 every flip of this kind stays in the main component.
    FiniteAbelianGroup M4({4});
    CoverLattice L4(M4);
    for (const auto& R : extremal_rays(L4)) {
        MultiplicationTable psi = from_ray(R, Q);
        for (const auto& pr : L4.pairs()) {
            bool zero = psi.at(pr.m, pr.n).is_zero();
            MultiplicationTable flip = psi;
            flip.set(pr.m, pr.n, zero ? FieldScalar::one(Q) : FieldScalar::zero(Q));
            if (!validate(flip).ok) continue;
            CHECK(in_main_component(L4, flip).member);
        }
    }
}
