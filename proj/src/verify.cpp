#include "covermonoid/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>

#include "covermonoid/algebra.hpp"
#include "covermonoid/cone.hpp"
#include "covermonoid/lattice.hpp"
#include "covermonoid/linalg.hpp"
#include "covermonoid/numeric.hpp"
#include "covermonoid/stack.hpp"
#include "covermonoid/two_degree.hpp"

namespace covermonoid {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Partitions of e with non-increasing parts, largest part first.
void partitions_of(long e, long max_part, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(e - part, part, cur, out);
        cur.pop_back();
    }
}

// Shared lattice/ray caches; lattices are pinned so rays can point into them.
CoverLattice& lattice_of(const FiniteAbelianGroup& M) {
    static std::map<std::vector<long>, std::unique_ptr<CoverLattice>> cache;
    auto& slot = cache[M.factors()];
    if (!slot) slot = std::make_unique<CoverLattice>(M);
    return *slot;
}

const std::vector<Ray>& extremal_of(const FiniteAbelianGroup& M) {
    static std::map<std::vector<long>, std::vector<Ray>> cache;
    auto it = cache.find(M.factors());
    if (it == cache.end()) it = cache.emplace(M.factors(), extremal_rays(lattice_of(M))).first;
    return it->second;
}

// All (r, alpha, N, qbar) with r*N <= bound and qbar a record index.
std::vector<std::array<long, 4>> all_data(long bound) {
    std::vector<std::array<long, 4>> out;
    for (long N = 2; N <= bound; ++N)
        for (long r = 1; r * N <= bound; ++r)
            for (long alpha = (r == 1 ? 2 : 0); alpha < N; ++alpha)
                for (long q : omega_set((N - alpha) % N, N))
                    out.push_back({r, alpha, N, q});
    return out;
}

QuotientRingSpec oracle_spec(const TwoDegreeInvariants& I, const FieldScalar& a,
                             const FieldScalar& b) {
    QuotientRingSpec spec;
    spec.M = I.presentation.group;
    spec.m = I.presentation.e1;
    spec.n = I.presentation.e2;
    spec.z = I.z;
    spec.y = I.y;
    spec.x = I.x;
    spec.w = I.w;
    spec.sr = I.qhat * I.r;
    spec.dq = I.dqhat;
    spec.gamma = I.gamma;
    spec.a = a;
    spec.b = b;
    spec.basis = I.good;
    return spec;
}

UnitCharacter random_character(const FiniteAbelianGroup& M, const Field& F, std::mt19937& rng) {
    std::uniform_int_distribution<long> unit(1, F.p - 1);
    std::vector<FieldScalar> u;
    u.push_back(FieldScalar::one(F));
    for (long i = 1; i < M.size(); ++i) u.push_back(FieldScalar::from_integer(F, unit(rng)));
    return UnitCharacter{M, u};
}

// Zero set of a table in the pair-index convention used by Ray::support.
std::vector<long> zero_pairs(const CoverLattice& L, const MultiplicationTable& psi) {
    std::vector<long> out;
    const auto& ps = L.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (psi.at(ps[i].m, ps[i].n).is_zero()) out.push_back(static_cast<long>(i));
    return out;
}

// Independent restatement of the three certificate conditions.
bool certificate_ok(const FiniteAbelianGroup& M, const std::array<long, 4>& c) {
    auto [m, n, t, a] = c;
    if (m == 0 || n == 0 || t == 0) return false;
    if (m == n || m == t || n == t) return false;
    long mnt = M.add(M.add(m, n), M.neg(t));
    std::array<long, 13> banned = {0L,
                                   m,
                                   n,
                                   t,
                                   M.add(m, M.neg(n)),
                                   M.add(n, M.neg(m)),
                                   M.add(n, M.neg(t)),
                                   M.add(t, M.neg(n)),
                                   M.add(m, M.neg(t)),
                                   M.add(M.mul(2, m), M.neg(t)),
                                   M.add(M.mul(2, n), M.neg(t)),
                                   mnt,
                                   M.add(mnt, M.neg(t))};
    for (long b : banned)
        if (a == b) return false;
    return M.mul(2, a) != mnt;
}

Ray pull_back_delta(const CoverLattice& L, const SigmaDatum& chi) {
    CoverLattice& LP = lattice_of(chi.phi.target);
    Ray del = lambda_delta(LP, chi.r, chi.alpha, chi.N, chi.qbar).second;
    const FiniteAbelianGroup& M = L.group();
    std::vector<Rat> ed(M.size() - 1);
    for (long u = 1; u < M.size(); ++u) {
        long t = chi.phi.apply(u);
        ed[u - 1] = t == 0 ? Rat(0) : del.e_values()[t - 1];
    }
    return Ray(L, ed);
}

void check_smith(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A);
    require(mat_mul(mat_mul(f.U, A), f.V) == f.D, "smith factorization mismatch");
    require(abs(det_integer(f.U)) == 1 && abs(det_integer(f.V)) == 1,
            "smith transforms must be unimodular");
    for (long i = 0; i < std::min(f.D.rows, f.D.cols); ++i)
        for (long j = 0; j < std::min(f.D.rows, f.D.cols); ++j)
            if (i != j) require(f.D.at(i, j) == 0, "smith form must be diagonal");
    for (long i = 0; i + 1 < f.rank; ++i) {
        require(f.D.at(i, i) > 0, "smith diagonal must be positive");
        require(f.D.at(i + 1, i + 1) % f.D.at(i, i) == 0, "smith divisibility broken");
    }
    require(f.rank == rank_rational(A), "smith rank mismatch");
}

void check_hermite(const IntMatrix& A) {
    HermiteForm f = row_hermite_form(A);
    require(mat_mul(f.U, A) == f.H, "hermite factorization mismatch");
    require(abs(det_integer(f.U)) == 1, "hermite transform must be unimodular");
    long prev_col = -1;
    for (long i = 0; i < f.rank; ++i) {
        long j = 0;
        while (j < f.H.cols && f.H.at(i, j) == 0) ++j;
        require(j < f.H.cols && j > prev_col, "hermite pivots must move right");
        require(f.H.at(i, j) > 0, "hermite pivot must be positive");
        for (long k = 0; k < i; ++k)
            require(f.H.at(k, j) >= 0 && f.H.at(k, j) < f.H.at(i, j),
                    "hermite entries above a pivot must be reduced");
        prev_col = j;
    }
    for (long i = f.rank; i < f.H.rows; ++i)
        for (long j = 0; j < f.H.cols; ++j)
            require(f.H.at(i, j) == 0, "hermite tail rows must vanish");
}

}  // namespace

long admissible_prime(long start, long size) {
    long p = std::max(start, 2L);
    while (!is_prime_long(p) || size % p == 0) ++p;
    return p;
}

std::vector<std::vector<long>> abelian_factor_lists(long n) {
    require(n >= 1, "order must be positive");
    if (n == 1) return {{}};
    std::vector<std::pair<long, long>> pe;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            pe.emplace_back(p, e);
        }
    if (m > 1) pe.emplace_back(m, 1);

    std::vector<std::vector<std::vector<long>>> per_prime;
    for (auto [p, e] : pe) {
        std::vector<std::vector<long>> parts;
        std::vector<long> cur;
        partitions_of(e, e, cur, parts);
        std::vector<std::vector<long>> lists;
        for (const auto& part : parts) {
            std::vector<long> l;
            for (long x : part) {
                long v = 1;
                for (long i = 0; i < x; ++i) v *= p;
                l.push_back(v);
            }
            lists.push_back(l);
        }
        per_prime.push_back(std::move(lists));
    }

    std::vector<std::vector<long>> out;
    std::vector<std::size_t> idx(per_prime.size(), 0);
    while (true) {
        std::vector<long> factors;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            for (long f : per_prime[i][idx[i]]) factors.push_back(f);
        out.push_back(invariant_factors(FiniteAbelianGroup(factors)));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == per_prime[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(long bound) {
    std::vector<FiniteAbelianGroup> out;
    for (long n = 2; n <= bound; ++n)
        for (const auto& factors : abelian_factor_lists(n)) out.emplace_back(factors);
    return out;
}

std::vector<PropertyResult> run_property_suite(const VerifyBounds& bounds) {
    std::vector<PropertyResult> out;
    auto run = [&out](const std::string& name, const std::function<long()>& body) {
        PropertyResult r;
        r.name = name;
        try {
            long n = body();
            r.pass = true;
            r.detail = std::to_string(n) + " instances";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    };
    const long B = bounds.max_order;

    run("group.surjections_generate", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(B))
            for (const auto& eta : cyclic_surjections(M)) {
                require(eta.surjective(), "enumerated map must be surjective");
                require(subgroup_generated(eta.target, eta.images).size() ==
                            static_cast<std::size_t>(eta.target.size()),
                        "images must generate the target");
                ++count;
            }
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L)))
            for (const auto& T : abelian_groups_up_to(4))
                for (const auto& eta : enumerate_surjections(M, T)) {
                    require(eta.surjective(), "enumerated map must be surjective");
                    require(subgroup_generated(T, eta.images).size() ==
                                static_cast<std::size_t>(T.size()),
                            "images must generate the target");
                    ++count;
                }
        return count;
    });

    run("group.two_generator_data", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(B))
            for (long m = 1; m < M.size(); ++m)
                for (long n = 1; n < M.size(); ++n) {
                    if (m == n) continue;
                    if (subgroup_generated(M, {m, n}).size() !=
                        static_cast<std::size_t>(M.size()))
                        continue;
                    auto p = recognize_two_generator_presentation(M, m, n);
                    require(p.N == M.order_of(n), "N must be the order of n");
                    require(p.r > 0 && p.alpha >= 0 && p.alpha < p.N,
                            "parameters must be normalized");
                    require(p.r * p.N == M.size(), "index identity r*N = |M| failed");
                    require(M.mul(p.r, m) == M.mul(p.alpha, n), "r*m = alpha*n failed");
                    ++count;
                }
        return count;
    });

    run("group.presentation_round_trip", [&]() -> long {
        long count = 0;
        for (long N = 2; N <= B; ++N)
            for (long r = 1; r * N <= B; ++r)
                for (long alpha = (r == 1 ? 2 : 0); alpha < N; ++alpha) {
                    TwoDegreeGroup tg = make_two_degree_group(r, alpha, N);
                    auto p = recognize_two_generator_presentation(tg.group, tg.e1, tg.e2);
                    require(p.r == r && p.alpha == alpha && p.N == N,
                            "presentation round trip failed");
                    ++count;
                }
        return count;
    });

    run("linalg.dual_cone_cross_check", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 6L))) {
            CoverLattice& L = lattice_of(M);
            RationalCone C{L.ambient_rank(), L.generator_k_coords()};
            require(dual_cone_extreme_rays(C) == dual_cone_extreme_rays_enumerated(C, true),
                    "double description disagrees with brute-force enumeration");
            ++count;
        }
        return count;
    });

    run("linalg.dual_ray_facets", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            CoverLattice& L = lattice_of(M);
            for (const Ray& E : extremal_of(M)) {
                std::vector<std::vector<Int>> zero_gens;
                const auto& vals = E.generator_values();
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    require(vals[i] >= 0, "dual ray must be nonnegative on generators");
                    if (vals[i] == 0) zero_gens.push_back(L.generator_k_coords()[i]);
                }
                IntMatrix Z(static_cast<long>(zero_gens.size()), L.ambient_rank());
                for (long i = 0; i < Z.rows; ++i)
                    for (long j = 0; j < Z.cols; ++j) Z.at(i, j) = zero_gens[i][j];
                require(rank_rational(Z) == L.ambient_rank() - 1,
                        "zero set of a dual ray must span a hyperplane");
                ++count;
            }
        }
        return count;
    });

    run("linalg.normal_forms", [&]() -> long {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<long> dim(1, 5), val(-9, 9);
        long count = 0;
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix A(dim(rng), dim(rng));
            for (long i = 0; i < A.rows; ++i)
                for (long j = 0; j < A.cols; ++j) A.at(i, j) = val(rng);
            check_smith(A);
            check_hermite(A);
            ++count;
        }
        return count;
    });

    run("monoid.extremal_indecomposable", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 6L)))
            for (const Ray& E : extremal_of(M)) {
                require(is_indecomposable_ray(E), "extremal ray must be indecomposable");
                ++count;
            }
        return count;
    });

    run("monoid.support_determines_ray", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 6L))) {
            const auto& rays = extremal_of(M);
            for (std::size_t i = 0; i < rays.size(); ++i)
                for (std::size_t j = i + 1; j < rays.size(); ++j) {
                    require(rays[i].support() != rays[j].support(),
                            "distinct primitive extremal rays must have distinct supports");
                    ++count;
                }
        }
        return count;
    });

    run("monoid.realizable_in_cone", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 6L))) {
            CoverLattice& L = lattice_of(M);
            const auto& rays = extremal_of(M);
            std::vector<std::vector<Int>> cone;
            for (const Ray& E : rays) cone.push_back(E.k_functional());
            std::vector<std::vector<long>> inputs;
            for (const Ray& E : rays) inputs.push_back(E.support());
            for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
                std::vector<long> merged;
                std::set_union(inputs[i].begin(), inputs[i].end(), inputs[i + 1].begin(),
                               inputs[i + 1].end(), std::back_inserter(merged));
                inputs.push_back(std::move(merged));
            }
            for (const auto& Z : inputs) {
                auto R = support_realizable(L, Z);
                require(R.has_value(), "realizable support must yield a ray");
                require(R->support() == Z, "realized ray must have the requested support");
                require(cone_membership(cone, R->k_functional()),
                        "realized ray must lie in the cone of extremal rays");
                ++count;
            }
        }
        return count;
    });

    run("monoid.relations_balance", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            CoverLattice& L = lattice_of(M);
            MonoidPresentation P = reduced_presentation(L);
            for (const auto& rel : P.relations) {
                std::vector<Int> lhs(M.size() - 1, Int(0)), rhs(M.size() - 1, Int(0));
                for (int s = 0; s < 2; ++s) {
                    long li = L.pair_index(P.variables[rel.lhs[s]].m, P.variables[rel.lhs[s]].n);
                    long ri = L.pair_index(P.variables[rel.rhs[s]].m, P.variables[rel.rhs[s]].n);
                    const auto& gl = L.generator(li);
                    const auto& gr = L.generator(ri);
                    for (long j = 0; j < M.size() - 1; ++j) {
                        lhs[j] += gl[j];
                        rhs[j] += gr[j];
                    }
                }
                require(lhs == rhs, "relation sides must give the same lattice vector");
                ++count;
            }
        }
        return count;
    });

    run("monoid.carry_rays_extremal", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            CoverLattice& L = lattice_of(M);
            const auto& rays = extremal_of(M);
            for (const auto& eta : cyclic_surjections(M)) {
                Ray P = pardini_ray(L, eta);
                require(std::find(rays.begin(), rays.end(), P) != rays.end(),
                        "carry ray must be extremal");
                ++count;
            }
        }
        return count;
    });

    run("algebra.twisted_ray_tables_valid", [&]() -> long {
        std::mt19937 rng(424243);
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            Field F = Field::prime(admissible_prime(bounds.prime, M.size()));
            for (const Ray& E : extremal_of(M)) {
                UnitCharacter u = random_character(M, F, rng);
                MultiplicationTable psi = from_ray(E, F, u);
                require(validate(psi).ok, "twisted ray table must validate");
                ++count;
            }
        }
        return count;
    });

    run("algebra.h_twist_invariant", [&]() -> long {
        std::mt19937 rng(515151);
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            Field F = Field::prime(admissible_prime(bounds.prime, M.size()));
            for (const Ray& E : extremal_of(M)) {
                UnitCharacter u = random_character(M, F, rng);
                MultiplicationTable plain = from_ray(E, F);
                MultiplicationTable twisted = twist_table(plain, u);
                require(H_of_table(twisted) == H_of_table(plain), "H must be twist-invariant");
                require(h_of_table(twisted) == h_of_table(plain), "h must be twist-invariant");
                ++count;
            }
        }
        return count;
    });

    run("algebra.h_leq_one_supports", [&]() -> long {
        Field Q = Field::rationals();
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 6L))) {
            CoverLattice& L = lattice_of(M);
            std::set<std::vector<long>> carry_supports;
            for (const auto& eta : cyclic_surjections(M))
                carry_supports.insert(pardini_ray(L, eta).support());
            std::vector<MultiplicationTable> tables;
            for (const Ray& E : extremal_of(M)) tables.push_back(from_ray(E, Q));
            MultiplicationTable ones(M, Q);
            for (long m = 0; m < M.size(); ++m)
                for (long n = m; n < M.size(); ++n) ones.set(m, n, FieldScalar::one(Q));
            tables.push_back(ones);
            tables.push_back(MultiplicationTable(M, Q));  // zero multiplication
            for (const auto& psi : tables) {
                std::vector<long> Z = zero_pairs(L, psi);
                bool law = Z.empty() || carry_supports.count(Z) > 0;
                require((h_of_table(psi) <= 1) == law,
                        "h <= 1 must match carry-support zero patterns");
                ++count;
            }
        }
        return count;
    });

    run("algebra.quotient_reduction", [&]() -> long {
        Field Q = Field::rationals();
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            for (const Ray& E : extremal_of(M)) {
                MultiplicationTable psi = from_ray(E, Q);
                std::vector<long> H = H_of_table(psi);
                if (H.size() <= 1) continue;
                std::vector<std::vector<long>> subgroups = {H};
                for (long x : H)
                    if (x != 0) subgroups.push_back(subgroup_generated(M, {x}));
                for (const auto& sub : subgroups) {
                    QuotientData qd = quotient_by(M, sub);
                    MultiplicationTable reduced = reduce_mod_H(psi, qd);
                    require(h_of_table(reduced) == h_of_table(psi),
                            "reduction must preserve h");
                    std::vector<long> img;
                    for (long x : H) img.push_back(qd.projection.apply(x));
                    std::sort(img.begin(), img.end());
                    img.erase(std::unique(img.begin(), img.end()), img.end());
                    require(H_of_table(reduced) == img, "reduction must map H onto H/H'");
                    ++count;
                }
            }
        }
        return count;
    });

    run("two_degree.record_recursion", [&]() -> long {
        long count = 0;
        for (long N = 2; N <= 50; ++N)
            for (long beta = 0; beta < N; ++beta) {
                std::vector<long> omega = omega_set(beta, N);
                require(!omega.empty() && omega.front() == 1, "record set must start at 1");
                for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
                    long qn = omega[i + 1];
                    long dmin = d_value(beta, N, 0);
                    long qhat = 0;
                    for (long q = 1; q < qn; ++q) {
                        long d = d_value(beta, N, q);
                        if (d < dmin) {
                            dmin = d;
                            qhat = q;
                        }
                    }
                    require(qn == omega[i] + qhat, "record index recursion failed");
                    require(d_value(beta, N, qn) == d_value(beta, N, omega[i]) + dmin,
                            "record step recursion failed");
                    require(qhat * N + qn * dmin - qhat * d_value(beta, N, qn) == N,
                            "record bilinear identity failed");
                    ++count;
                }
            }
        return count;
    });

    run("two_degree.size_identities", [&]() -> long {
        long count = 0;
        for (auto [r, alpha, N, q] : all_data(std::min(B, 24L))) {
            TwoDegreeInvariants I = invariants_for(r, alpha, N, q);
            require(I.z * I.x - I.y * I.w == r * N, "determinant identity failed");
            require(std::accumulate(I.f.begin(), I.f.end(), 0L) == r * N,
                    "profile must sum to the group order");
            ++count;
        }
        return count;
    });

    run("two_degree.good_pair_bijection", [&]() -> long {
        long count = 0;
        for (auto [r, alpha, N, q] : all_data(std::min(B, 24L))) {
            TwoDegreeInvariants I = invariants_for(r, alpha, N, q);
            const auto& M = I.presentation.group;
            std::set<std::pair<long, long>> seen;
            for (long e = 0; e < M.size(); ++e) {
                auto [A, Bc] = I.good[e];
                require(A >= 0 && A < I.z && Bc >= 0 && Bc < I.f[A],
                        "good pair must lie in the staircase rectangle");
                require(M.add(M.mul(A, I.presentation.e1), M.mul(Bc, I.presentation.e2)) == e,
                        "good pair must reconstruct its element");
                seen.insert({A, Bc});
            }
            require(seen.size() == static_cast<std::size_t>(M.size()),
                    "good pairs must be distinct");
            ++count;
        }
        return count;
    });

    run("two_degree.universal_vs_quotient_ring", [&]() -> long {
        long count = 0;
        for (auto [r, alpha, N, q] : all_data(std::min(B, 12L))) {
            Field F = Field::prime(admissible_prime(bounds.prime, r * N));
            TwoDegreeInvariants I = invariants_for(r, alpha, N, q);
            for (auto [av, bv] : std::vector<std::pair<long, long>>{
                     {0, 0}, {1, 0}, {0, 1}, {1, 1}, {3, 5}}) {
                FieldScalar a = FieldScalar::from_integer(F, av);
                FieldScalar b = FieldScalar::from_integer(F, bv);
                require(universal_multiplication(r, alpha, N, q, a, b) ==
                            quotient_ring_structure_constants(oracle_spec(I, a, b)),
                        "universal table must match the quotient-ring model");
                ++count;
            }
        }
        return count;
    });

    run("two_degree.boundary_values", [&]() -> long {
        long count = 0;
        for (auto [r, alpha, N, q] : all_data(std::min(B, 24L))) {
            if (q * r == 1 || q == N) continue;
            TwoDegreeInvariants I = invariants_for(r, alpha, N, q);
            const auto& M = I.presentation.group;
            CoverLattice& L = lattice_of(M);
            auto [lam, del] = lambda_delta(L, r, alpha, N, q);
            long m = I.presentation.e1, n = I.presentation.e2;
            require(lam.value_on_pair(m, M.neg(m)) == 1, "lambda boundary at m failed");
            require(del.value_on_pair(n, M.neg(n)) == 1, "delta boundary at n failed");
            require(lam.value_on_pair(n, M.neg(n)) == (q != 1 ? 1 : 0),
                    "lambda boundary at n failed");
            long g = std::gcd(alpha, N);
            require(del.value_on_pair(m, M.neg(m)) == (q != N / g ? 1 : 0),
                    "delta boundary at m failed");
            ++count;
        }
        return count;
    });

    run("two_degree.dual_orbit_collapse", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 16L))) {
            CoverLattice& L = lattice_of(M);
            std::vector<SigmaDatum> sigma = enumerate_sigma(M);
            std::vector<Ray> pulled;
            std::vector<SigmaDatum> duals;
            for (const auto& chi : sigma) {
                pulled.push_back(pull_back_delta(L, chi));
                duals.push_back(dual_datum(chi));
            }
            for (std::size_t i = 0; i < sigma.size(); ++i)
                for (std::size_t j = i + 1; j < sigma.size(); ++j) {
                    bool same_ray = pulled[i] == pulled[j];
                    bool same_orbit = sigma[j] == sigma[i] || sigma[j] == duals[i];
                    require(same_ray == same_orbit,
                            "delta rays must collapse exactly the duality orbits");
                    ++count;
                }
        }
        return count;
    });

    run("stack.reducibility_certificates", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 16L))) {
            if (M.size() < 8) continue;
            if (invariant_factors(M) == std::vector<long>{2, 2, 2}) continue;
            auto cert = reducibility_certificate(M);
            require(cert.has_value(), "certificate must exist");
            require(certificate_ok(M, *cert), "certificate conditions must hold");
            ++count;
        }
        return count;
    });

    run("stack.smoothness_classification", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 16L))) {
            SmoothnessVerdict v = smoothness_verdict(M);
            std::vector<long> inv = invariant_factors(M);
            bool closed = inv == std::vector<long>{2} || inv == std::vector<long>{3} ||
                          inv == std::vector<long>{2, 2};
            require(v.smooth == closed, "verdict must match the closed classification");
            if (!v.smooth)
                require(v.triple.has_value() && v.relation.has_value(),
                        "singular verdict must carry a witness");
            ++count;
        }
        return count;
    });

    run("stack.fan_unimodularity", [&]() -> long {
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            CoverLattice& L = lattice_of(M);
            Fan fan = smooth_locus_fan(L, enumerate_theta2(L));
            for (const auto& cone : fan.max_cones) {
                IntMatrix A(static_cast<long>(cone.size()), fan.lattice_rank);
                for (std::size_t i = 0; i < cone.size(); ++i)
                    for (long j = 0; j < fan.lattice_rank; ++j)
                        A.at(static_cast<long>(i), j) = fan.rays[cone[i]][j];
                SmithForm f = smith_normal_form(A);
                require(f.rank == static_cast<long>(cone.size()),
                        "cone rays must be independent");
                for (long i = 0; i < f.rank; ++i)
                    require(f.D.at(i, i) == 1, "cone rays must extend to a lattice basis");
                ++count;
            }
        }
        return count;
    });

    run("stack.h_locus_paths", [&]() -> long {
        Field Q = Field::rationals();
        long count = 0;
        for (const auto& M : abelian_groups_up_to(std::min(B, 8L))) {
            CoverLattice& L = lattice_of(M);
            for (const Ray& E : extremal_of(M)) {
                MultiplicationTable psi = from_ray(E, Q);
                for (int level = 1; level <= 2; ++level) {
                    bool via_ray = h_locus_membership(E, level);
                    bool via_table = h_locus_membership(L, psi, level);
                    require(via_ray == via_table, "membership paths must agree");
                    require(via_ray == (h_of_ray(E) <= level),
                            "membership must match the direct invariant");
                    ++count;
                }
            }
        }
        return count;
    });

    return out;
}

}  // namespace covermonoid
