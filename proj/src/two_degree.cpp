#include "covermonoid/two_degree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace covermonoid {

namespace {

void check_presentation(long r, long alpha, long N) {
    require(N > 1, "N must exceed 1");
    require(r > 0, "r must be positive");
    require(alpha >= 0 && alpha < N, "alpha must lie in [0, N)");
    require(r > 1 || alpha > 1, "presentation must not be redundant");
}

// Discrete logarithm base g in a cyclic group generated by g.
std::vector<long> log_base(const FiniteAbelianGroup& M, long g) {
    std::vector<long> log(M.size(), -1);
    long cur = 0;
    for (long j = 0; j < M.size(); ++j) {
        require(log[cur] == -1, "element does not generate the group");
        log[cur] = j;
        cur = M.add(cur, g);
    }
    require(cur == 0, "element does not generate the group");
    return log;
}

std::vector<Rat> lambda_evalues(const TwoDegreeInvariants& I) {
    const long size = I.r * I.N;
    std::vector<Rat> e(size - 1);
    for (long l = 1; l < size; ++l) {
        e[l - 1] = Rat(I.x * I.good[l].first + I.w * I.good[l].second, size);
        e[l - 1].canonicalize();
    }
    return e;
}

std::vector<Rat> delta_evalues(const TwoDegreeInvariants& I) {
    const long size = I.r * I.N;
    std::vector<Rat> e(size - 1);
    for (long l = 1; l < size; ++l) {
        e[l - 1] = Rat(I.y * I.good[l].first + I.z * I.good[l].second, size);
        e[l - 1].canonicalize();
    }
    return e;
}

// e-values on the source of a surjection, copied from the target ray.
std::vector<Rat> pull_back_evalues(const FiniteAbelianGroup& M, const GroupHomomorphism& phi,
                                   const std::vector<Rat>& target_e) {
    std::vector<Rat> e(M.size() - 1);
    for (long u = 1; u < M.size(); ++u) {
        long t = phi.apply(u);
        e[u - 1] = t == 0 ? Rat(0) : target_e[t - 1];
    }
    return e;
}

// A surjection onto a cyclic group exists iff it exists onto every invariant
// factor, which reduces to a divisibility test between the aligned largest
// invariant factors.
bool has_surjection(const FiniteAbelianGroup& M, const FiniteAbelianGroup& Q) {
    std::vector<long> dm = invariant_factors(M);
    std::vector<long> dq = invariant_factors(Q);
    if (dq.size() > dm.size()) return false;
    for (std::size_t j = 0; j < dq.size(); ++j)
        if (dm[dm.size() - 1 - j] % dq[dq.size() - 1 - j] != 0) return false;
    return true;
}

// Express a ray whose e-values all lie in [0, 1) as the carry ray of a
// surjection onto Z/denominator.
Ray ray_as_pardini(const CoverLattice& L, const Ray& R) {
    const auto& M = L.group();
    Int den = R.denominator();
    require(den > 1 && den.fits_slong_p(), "ray is not a carry ray");
    long l = den.get_si();
    FiniteAbelianGroup C({l});
    std::vector<long> images;
    for (std::size_t i = 0; i < M.rank(); ++i) {
        std::vector<long> coords(M.rank(), 0);
        coords[i] = 1;
        Rat v = R.e_values()[M.index(coords) - 1] * l;
        require(v.get_den() == 1 && v >= 0 && v < l, "ray is not a carry ray");
        images.push_back(v.get_num().get_si());
    }
    GroupHomomorphism eta{M, C, images};
    require(eta.well_defined() && eta.surjective(), "ray is not a carry ray");
    Ray P = pardini_ray(L, eta);
    require(P == R, "ray is not a carry ray");
    return P;
}

}  // namespace

long d_value(long beta, long N, long q) {
    require(N > 1, "N must exceed 1");
    require(beta >= 0 && beta < N, "beta must lie in [0, N)");
    require(q >= 0, "q must be nonnegative");
    long d = mod_long(q * beta, N);
    return d == 0 ? N : d;
}

std::vector<long> omega_set(long beta, long N) {
    const long bound = N / gcd_long(beta, N);
    std::vector<long> omega;
    long best = 0;
    for (long q = 1; q <= bound; ++q) {
        long d = d_value(beta, N, q);
        if (d > best) {
            best = d;
            omega.push_back(q);
        }
    }
    return omega;
}

TwoDegreeInvariants invariants_for(long r, long alpha, long N, long qbar) {
    check_presentation(r, alpha, N);
    const long beta = mod_long(N - alpha, N);
    std::vector<long> omega = omega_set(beta, N);
    require(std::find(omega.begin(), omega.end(), qbar) != omega.end(),
            "qbar is not a record index");

    TwoDegreeInvariants I{r, alpha, N, qbar, 0, 0, 0, 0, 0, 0, 0, 0,
                          {}, {}, make_two_degree_group(r, alpha, N)};
    // The minimizing index below qbar is unique.
    I.qhat = 0;
    I.dqhat = d_value(beta, N, 0);
    for (long q = 1; q < qbar; ++q) {
        long d = d_value(beta, N, q);
        require(d != I.dqhat, "minimizing step must be unique");
        if (d < I.dqhat) {
            I.dqhat = d;
            I.qhat = q;
        }
    }
    I.qprime = qbar - I.qhat;
    I.z = qbar * r;
    I.y = N - d_value(beta, N, qbar);
    I.gamma = qbar > 1 ? 1 : 0;
    I.x = qbar > 1 ? N - d_value(beta, N, I.qprime) : N;
    I.w = qbar > 1 ? I.qprime * r : 0;

    const long size = r * N;
    require(I.z * I.x - I.y * I.w == size, "determinant identity failed");
    if (qbar > 1) {
        require(I.qhat * r == I.z - I.w, "step identity failed");
        require(I.dqhat == I.x - I.y, "step identity failed");
    }

    I.f.resize(I.z);
    long total = 0;
    for (long c = 0; c < I.z; ++c) {
        I.f[c] = c < I.qhat * r ? I.x : I.dqhat;
        if (c > 0) require(I.f[c] <= I.f[c - 1], "profile must be decreasing");
        total += I.f[c];
    }
    require(total == size, "profile must sum to the group order");

    const auto& M = I.presentation.group;
    const long m = I.presentation.e1, n = I.presentation.e2;
    require(M.mul(I.z, m) == M.mul(I.y, n), "z*m = y*n failed");
    require(M.mul(I.w, m) == M.mul(I.x, n), "w*m = x*n failed");

    I.good.assign(size, {-1, -1});
    for (long A = 0; A < I.z; ++A)
        for (long B = 0; B < I.f[A]; ++B) {
            long l = M.add(M.mul(A, m), M.mul(B, n));
            require(I.good[l].first == -1, "good pairs must be unique");
            I.good[l] = {A, B};
        }
    return I;
}

std::pair<Ray, Ray> lambda_delta(const CoverLattice& L, long r, long alpha, long N, long qbar) {
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    require(qbar * r != 1 && qbar != N, "degenerate record index");
    const auto& M = I.presentation.group;
    require(L.group() == M, "lattice group mismatch");
    Ray lam(L, lambda_evalues(I));
    Ray del(L, delta_evalues(I));

    // Dual-basis property on the distinguished generators.
    const long m = I.presentation.e1, n = I.presentation.e2;
    long zm = M.mul(I.z - 1, m), xn = M.mul(I.x - 1, n);
    require(zm != 0 && xn != 0, "distinguished generators degenerate");
    require(lam.value_on_pair(m, zm) == 1 && lam.value_on_pair(n, xn) == 0,
            "dual basis property failed");
    require(del.value_on_pair(m, zm) == 0 && del.value_on_pair(n, xn) == 1,
            "dual basis property failed");

    // Boundary values.
    require(lam.value_on_pair(m, M.neg(m)) == 1, "boundary value failed");
    require(del.value_on_pair(n, M.neg(n)) == 1, "boundary value failed");
    require(lam.value_on_pair(n, M.neg(n)) == (qbar != 1 ? 1 : 0), "boundary value failed");
    require(del.value_on_pair(m, M.neg(m)) == (qbar != N / gcd_long(alpha, N) ? 1 : 0),
            "boundary value failed");
    return {lam, del};
}

Ray degenerate_ray(const CoverLattice& L, long r, long alpha, long N, long qbar, RaySide which) {
    auto [lam, del] = lambda_delta(L, r, alpha, N, qbar);
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    if (which == RaySide::delta) {
        require(qbar == N / gcd_long(alpha, N) || mod_long(qbar * alpha, N) == 1,
                "no degeneracy applies");
        return ray_as_pardini(L, del);
    }
    if (qbar == 1 || I.w == 1) return ray_as_pardini(L, lam);
    // qbar > 1 and w != 1: the lambda ray is the delta ray one record back.
    Ray smaller = lambda_delta(L, r, alpha, N, qbar - I.qhat).second;
    require(smaller == lam, "lambda must match the smaller delta");
    return smaller;
}

MultiplicationTable universal_multiplication(long r, long alpha, long N, long qbar,
                                             const FieldScalar& a, const FieldScalar& b) {
    TwoDegreeInvariants I = invariants_for(r, alpha, N, qbar);
    const Field F = a.field();
    require(b.field() == F, "relation scalars must share a field");
    const auto& M = I.presentation.group;
    MultiplicationTable psi(M, F);

    if (qbar == N || qbar * r == 1) {
        // Single-variable cases: carries of the generator's discrete logarithm.
        long g = qbar == N ? I.presentation.e1 : I.presentation.e2;
        const FieldScalar& c = qbar == N ? a : b;
        std::vector<long> log = log_base(M, g);
        for (long u = 1; u < M.size(); ++u)
            for (long v = u; v < M.size(); ++v)
                psi.set(u, v, log[u] + log[v] >= M.size() ? c : FieldScalar::one(F));
    } else {
        std::vector<Rat> le = lambda_evalues(I), de = delta_evalues(I);
        auto value = [&M](const std::vector<Rat>& e, long u, long v) {
            Rat s = e[u - 1] + e[v - 1];
            long uv = M.add(u, v);
            if (uv != 0) s -= e[uv - 1];
            require(s.get_den() == 1 && s >= 0, "internal: exponent must be a natural number");
            return Int(s.get_num());
        };
        for (long u = 1; u < M.size(); ++u)
            for (long v = u; v < M.size(); ++v)
                psi.set(u, v, a.pow(value(le, u, v)) * b.pow(value(de, u, v)));
    }
    require(validate(psi).ok, "internal: universal table must be valid");
    return psi;
}

TwoDegreeClass classify_two_degree_algebra(const MultiplicationTable& psi, long m, long n) {
    const auto& M = psi.group();
    const Field& F = psi.field();
    TwoGeneratorPresentation P = recognize_two_generator_presentation(M, m, n);
    require(H_of_table(psi) == std::vector<long>{0}, "table must have trivial H");
    for (long g : minimum_generating_degrees(psi))
        require(g == m || g == n, "table must be generated in the two degrees");

    // Scalars of the pure powers: v_m^h = c_h v_{h m} and v_n^i = e_i v_{i n}.
    const long om = M.order_of(m);
    std::vector<FieldScalar> c(om + 1, FieldScalar::one(F));
    for (long h = 2; h <= om; ++h) c[h] = c[h - 1] * psi.at(m, M.mul(h - 1, m));
    std::vector<FieldScalar> e(P.N, FieldScalar::one(F));
    for (long i = 2; i < P.N; ++i) e[i] = e[i - 1] * psi.at(n, M.mul(i - 1, n));
    std::vector<long> rep_of(M.size(), -1);
    for (long i = 0; i < P.N; ++i) rep_of[M.mul(i, n)] = i;

    // First multiple of r whose power of v_m is a multiple of a power of v_n.
    long zA = 0, yA = 0;
    for (long h = P.r; h <= om; h += P.r) {
        long i = rep_of[M.mul(h, m)];
        require(i >= 0, "internal: power of m must land in <n>");
        if (!e[i].is_zero() || c[h].is_zero()) {
            zA = h;
            yA = i;
            break;
        }
    }
    require(zA > 0, "internal: no admissible power found");
    long qbar = zA / P.r;
    FieldScalar lambda = e[yA].is_zero() ? FieldScalar::zero(F) : c[zA] / e[yA];

    TwoDegreeInvariants I = invariants_for(P.r, P.alpha, P.N, qbar);
    require(I.y == yA, "internal: relation degree mismatch");

    // Rescale onto the staircase basis and compare with the universal table.
    UnitCharacter u{M, std::vector<FieldScalar>(M.size(), FieldScalar::one(F))};
    for (long A = 0; A < I.z; ++A)
        for (long B = 0; B < I.f[A]; ++B) {
            long l = M.add(M.mul(A, m), M.mul(B, n));
            FieldScalar scl = A == 0 ? e[B] : u.u[M.add(M.mul(A - 1, m), M.mul(B, n))] *
                                                  psi.at(m, M.add(M.mul(A - 1, m), M.mul(B, n)));
            require(A == 0 || B < I.f[A - 1], "internal: staircase order broken");
            require(!scl.is_zero(), "table is not free on the staircase basis");
            u.u[l] = scl;
        }
    MultiplicationTable target =
        universal_multiplication(P.r, P.alpha, P.N, qbar, lambda, FieldScalar::zero(F));
    require(twist_table(psi, u) == target, "table does not match its universal model");
    return {qbar, lambda};
}

SigmaDatum dual_datum(const SigmaDatum& chi) {
    TwoDegreeInvariants I = invariants_for(chi.r, chi.alpha, chi.N, chi.qbar);
    const long g = gcd_long(chi.alpha, chi.N);
    const long rD = g;
    const long ND = chi.r * chi.N / g;

    long qt = -1;
    for (long q = 0; q < chi.N / g; ++q)
        if (mod_long(q * chi.alpha, chi.N) == mod_long(g, chi.N)) {
            require(qt == -1, "dual twist index must be unique");
            qt = q;
        }
    require(qt >= 0, "dual twist index must exist");
    const long alphaD = qt * chi.r;
    require(I.y % g == 0, "dual record index must be integral");
    const long qbarD = I.y / g;

    TwoDegreeInvariants ID = invariants_for(rD, alphaD, ND, qbarD);

    // The identification swaps the two distinguished generators.
    const auto& M = I.presentation.group;
    const auto& MD = ID.presentation.group;
    std::vector<long> images;
    for (std::size_t i = 0; i < M.rank(); ++i) {
        std::vector<long> coords(M.rank(), 0);
        coords[i] = 1;
        auto [A, B] = I.good[M.index(coords)];
        images.push_back(MD.add(MD.mul(A, ID.presentation.e2), MD.mul(B, ID.presentation.e1)));
    }
    GroupHomomorphism iota{M, MD, images};
    require(iota.well_defined() && iota.surjective(), "duality map must be an isomorphism");

    std::vector<long> dual_images;
    for (long im : chi.phi.images) dual_images.push_back(iota.apply(im));
    SigmaDatum dual{rD, alphaD, ND, qbarD, GroupHomomorphism{chi.phi.source, MD, dual_images}};
    require(dual.qbar * dual.r != 1, "dual must satisfy the strict exclusions");
    require(mod_long(dual.qbar * dual.alpha, dual.N) != 1,
            "dual must satisfy the strict exclusions");
    require(dual.qbar != dual.N / gcd_long(dual.alpha, dual.N),
            "dual must satisfy the strict exclusions");
    return dual;
}

std::vector<SigmaDatum> enumerate_sigma(const FiniteAbelianGroup& M, bool bar) {
    std::vector<SigmaDatum> out;
    for (long N = 2; N <= M.size(); ++N)
        for (long r = 1; r * N <= M.size(); ++r)
            for (long alpha = 0; alpha < N; ++alpha) {
                if (r == 1 && alpha <= 1) continue;
                TwoDegreeGroup G = make_two_degree_group(r, alpha, N);
                if (!has_surjection(M, G.group)) continue;
                std::vector<long> valid_q;
                for (long q : omega_set(mod_long(N - alpha, N), N)) {
                    if (q * r == 1) continue;
                    if (bar ? q == N
                            : (mod_long(q * alpha, N) == 1 || q == N / gcd_long(alpha, N)))
                        continue;
                    valid_q.push_back(q);
                }
                if (valid_q.empty()) continue;
                for (const auto& phi : enumerate_surjections(M, G.group))
                    for (long q : valid_q) out.push_back({r, alpha, N, q, phi});
            }
    return out;
}

std::vector<std::vector<Ray>> enumerate_theta2(const CoverLattice& L) {
    const auto& M = L.group();
    std::vector<std::vector<Ray>> out;
    std::set<std::vector<std::vector<Int>>> seen;
    auto push = [&](std::vector<Ray> seq) {
        std::vector<std::vector<Int>> key;
        for (const auto& R : seq) key.push_back(R.generator_values());
        if (seen.insert(key).second) out.push_back(std::move(seq));
    };
    for (const auto& phi : cyclic_surjections(M)) push({pardini_ray(L, phi)});
    std::map<std::tuple<long, long, long, long>, std::pair<std::vector<Rat>, std::vector<Rat>>>
        cache;
    for (const auto& chi : enumerate_sigma(M, true)) {
        auto key = std::make_tuple(chi.r, chi.alpha, chi.N, chi.qbar);
        auto it = cache.find(key);
        if (it == cache.end()) {
            TwoDegreeInvariants I = invariants_for(chi.r, chi.alpha, chi.N, chi.qbar);
            it = cache.emplace(key, std::make_pair(lambda_evalues(I), delta_evalues(I))).first;
        }
        push({Ray(L, pull_back_evalues(M, chi.phi, it->second.first)),
              Ray(L, pull_back_evalues(M, chi.phi, it->second.second))});
    }
    return out;
}

std::vector<NCRow> nc_ray_table(const CoverLattice& L) {
    const auto& M = L.group();
    std::vector<NCRow> out;
    std::set<std::vector<Int>> seen;
    auto push = [&](NCRow row) {
        if (seen.insert(row.ray.generator_values()).second) out.push_back(std::move(row));
    };

    // Doubled carry ray on Z/2.
    FiniteAbelianGroup C2({2});
    if (has_surjection(M, C2))
        for (const auto& phi : enumerate_surjections(M, C2))
            push({"Z/2", 1, 1, 1, 2, 1, phi, Ray(L, pull_back_evalues(M, phi, {Rat(1)}))});

    // Sum of the two projection carry rays on (Z/2)^2.
    FiniteAbelianGroup V({2, 2});
    if (has_surjection(M, V))
        for (const auto& phi : enumerate_surjections(M, V))
            push({"(Z/2)^2", 1, 2, 0, 2, 1, phi,
                  Ray(L, pull_back_evalues(M, phi, {Rat(1, 2), Rat(1, 2), Rat(1)}))});

    // Delta rays of the three parametric families.
    auto emit_delta = [&](const std::string& name, long l, long r, long alpha, long N,
                          long qbar) {
        TwoDegreeGroup G = make_two_degree_group(r, alpha, N);
        if (!has_surjection(M, G.group)) return;
        std::vector<Rat> de = delta_evalues(invariants_for(r, alpha, N, qbar));
        for (const auto& phi : enumerate_surjections(M, G.group))
            push({name, l, r, alpha, N, qbar, phi, Ray(L, pull_back_evalues(M, phi, de))});
    };
    for (long l = 2; 4 * l <= M.size(); ++l) emit_delta("Z/2l x Z/2", l, 2, 2, 2 * l, 1);
    for (long l = 1; 4 * l <= M.size(); ++l) emit_delta("Z/4l", l, 1, 2 * l + 1, 4 * l, 2);
    for (long l = 3; 2 * l <= M.size(); l += 2) emit_delta("Z/2l", l, 2, 2, l, 1);
    return out;
}

}  // namespace covermonoid
