#include "covermonoid/stack.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "covermonoid/cone.hpp"
#include "covermonoid/linalg.hpp"
#include "covermonoid/two_degree.hpp"

namespace covermonoid {

namespace {

PairIndex canonical_pair(long m, long n) {
    return m <= n ? PairIndex{m, n} : PairIndex{n, m};
}

std::array<PairIndex, 2> sorted_side(PairIndex a, PairIndex b) {
    if (std::tie(b.m, b.n) < std::tie(a.m, a.n)) std::swap(a, b);
    return {a, b};
}

bool in_closed_smooth_list(const FiniteAbelianGroup& M) {
    const std::vector<long> inv = invariant_factors(M);
    return inv == std::vector<long>{2} || inv == std::vector<long>{3} ||
           inv == std::vector<long>{2, 2};
}

}  // namespace

SmoothnessVerdict smoothness_verdict(const FiniteAbelianGroup& M) {
    require(M.size() >= 2, "group must be nontrivial");
    const long o = M.size();
    SmoothnessVerdict v;
    for (long m = 1; m < o && !v.triple; ++m)
        for (long n = 1; n < o && !v.triple; ++n) {
            if (M.add(m, n) == 0) continue;
            for (long t = 1; t < o; ++t) {
                if (t == m || M.add(n, t) == 0 || M.add(M.add(m, n), t) == 0) continue;
                v.triple = {m, n, t};
                WitnessRelation rel;
                rel.lhs = sorted_side(canonical_pair(m, n), canonical_pair(M.add(m, n), t));
                rel.rhs = sorted_side(canonical_pair(n, t), canonical_pair(M.add(n, t), m));
                // The assumptions force the two monomials to differ.
                require(rel.lhs != rel.rhs, "witness relation must be nontrivial");
                v.relation = rel;
                break;
            }
        }
    v.smooth = !v.triple.has_value();
    require(v.smooth == in_closed_smooth_list(M),
            "smoothness search disagrees with the classification");
    return v;
}

std::optional<std::array<long, 4>> reducibility_certificate(const FiniteAbelianGroup& M) {
    const long o = M.size();
    for (long m = 1; m < o; ++m)
        for (long n = 1; n < o; ++n) {
            if (n == m) continue;
            for (long t = 1; t < o; ++t) {
                if (t == m || t == n) continue;
                const long mnt = M.add(M.add(m, n), M.neg(t));
                const std::array<long, 13> banned = {
                    0,
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
                for (long a = 1; a < o; ++a) {
                    bool ok = M.mul(2, a) != mnt;
                    for (long b : banned)
                        if (a == b) ok = false;
                    if (ok) return std::array<long, 4>{m, n, t, a};
                }
            }
        }
    return std::nullopt;
}

IrreducibilityReport irreducibility_report(const FiniteAbelianGroup& M) {
    IrreducibilityReport rep;
    if (auto cert = reducibility_certificate(M)) {
        rep.verdict = Verdict::reducible;
        rep.certificate = cert;
        rep.reason = "quadruple certifying a non-nilpotent binomial annihilating the main component";
        return rep;
    }
    const std::vector<long> inv = invariant_factors(M);
    auto is = [&](std::vector<long> f) { return inv == f; };
    if (M.size() == 1) {
        rep.verdict = Verdict::irreducible;
        rep.reason = "trivial group";
        return rep;
    }
    if (is({2}) || is({3}) || is({2, 2})) {
        rep.verdict = Verdict::irreducible;
        rep.reason = "cover monoid is free, the moduli scheme is an affine space";
        return rep;
    }
    if (is({4})) {
        rep.verdict = Verdict::irreducible;
        rep.reason = "known integral and normal case";
        return rep;
    }
    if (is({5}) || is({6}) || is({7}) || is({2, 2, 2})) {
        rep.verdict = Verdict::unknown;
        rep.reason = "no certificate exists and no irreducibility proof is known";
        return rep;
    }
    require(false, "certificate search must succeed for groups of order above seven");
    return rep;
}

namespace {

// Pair indices where the table vanishes, over the canonical pair list of L.
std::vector<long> zero_pairs(const CoverLattice& L, const MultiplicationTable& psi) {
    const FieldScalar z = FieldScalar::zero(psi.field());
    std::vector<long> Z;
    for (std::size_t p = 0; p < L.pairs().size(); ++p)
        if (psi.at(L.pairs()[p].m, L.pairs()[p].n) == z) Z.push_back(static_cast<long>(p));
    return Z;
}

// Realizability of the zero set by the carry-ray sequences: a single carry
// ray's support at level 1, a union over a subset of one sequence at level 2.
bool support_level_membership(const CoverLattice& L, const std::vector<long>& Z, int level) {
    require(level == 1 || level == 2, "level must be 1 or 2");
    if (Z.empty()) return true;
    for (const std::vector<Ray>& seq : enumerate_theta2(L)) {
        if (level == 1) {
            if (seq.size() == 1 && seq[0].support() == Z) return true;
            continue;
        }
        const std::size_t subsets = std::size_t(1) << seq.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::set<long> u;
            for (std::size_t i = 0; i < seq.size(); ++i)
                if (mask & (std::size_t(1) << i)) {
                    const std::vector<long> s = seq[i].support();
                    u.insert(s.begin(), s.end());
                }
            if (std::vector<long>(u.begin(), u.end()) == Z) return true;
        }
    }
    return false;
}

bool h_locus_common(const CoverLattice& L, long h, const std::vector<long>& Z, int level) {
    const bool direct = h <= level;
    const bool realizable = support_level_membership(L, Z, level);
    require(direct == realizable, "h-locus membership paths disagree");
    return direct;
}

}  // namespace

bool h_locus_membership(const Ray& E, int level) {
    return h_locus_common(E.lattice(), h_of_ray(E), E.support(), level);
}

bool h_locus_membership(const CoverLattice& L, const MultiplicationTable& psi, int level) {
    require(psi.group() == L.group(), "table and lattice must share the group");
    const ValidationReport rep = validate(psi);
    require(rep.ok, "table must satisfy the multiplication axioms");
    return h_locus_common(L, h_of_table(psi), zero_pairs(L, psi), level);
}

namespace {

// Generators of cone(A) \cap cone(B) must all lie in the cone on the shared
// rays: solve R_A^T lambda = R_B^T mu with lambda, mu >= 0 by listing the
// extreme rays of the solution cone and projecting them down.
void check_common_face(const std::vector<std::vector<Int>>& rays, const std::vector<long>& A,
                       const std::vector<long>& B) {
    std::vector<long> C;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(C));
    const long n = static_cast<long>(rays.front().size());
    const long p = static_cast<long>(A.size()), q = static_cast<long>(B.size());
    IntMatrix Mx(n, p + q);
    for (long j = 0; j < p; ++j)
        for (long i = 0; i < n; ++i) Mx.at(i, j) = rays[A[j]][i];
    for (long j = 0; j < q; ++j)
        for (long i = 0; i < n; ++i) Mx.at(i, p + j) = -rays[B[j]][i];
    const IntMatrix W = kernel_lattice_basis(Mx);
    if (W.rows == 0) {
        require(C.empty(), "disjoint cones cannot share rays");
        return;
    }
    RationalCone G;
    G.ambient_rank = W.rows;
    for (long j = 0; j < p + q; ++j) {
        std::vector<Int> col(W.rows);
        bool nonzero = false;
        for (long i = 0; i < W.rows; ++i) {
            col[i] = W.at(i, j);
            if (col[i] != 0) nonzero = true;
        }
        // A coordinate that vanishes on the whole kernel imposes no sign
        // constraint; dropping it keeps the generators nonzero.
        if (nonzero) G.generators.push_back(col);
    }
    std::vector<std::vector<Int>> common;
    for (long c : C) common.push_back(rays[c]);
    for (const std::vector<Int>& y : dual_cone_extreme_rays(G)) {
        const std::vector<Int> z = mat_apply(transpose(W), y);
        std::vector<Int> x(n, Int(0));
        for (long j = 0; j < p; ++j)
            for (long i = 0; i < n; ++i) x[i] += z[j] * rays[A[j]][i];
        require(!C.empty() && cone_membership(common, x),
                "fan cones must intersect in a common face");
    }
}

}  // namespace

Fan smooth_locus_fan(const CoverLattice& L, const std::vector<std::vector<Ray>>& theta) {
    Fan fan;
    fan.lattice_rank = L.ambient_rank();
    std::vector<std::vector<long>> cones;
    for (const std::vector<Ray>& seq : theta) {
        require(is_smooth_sequence(L, seq).smooth, "every sequence must be smooth");
        std::vector<long> cone;
        for (const Ray& E : seq) {
            std::vector<Int> f = E.k_functional();
            std::vector<Int> g = f;
            make_primitive(g);
            require(g == f, "smooth rays must be primitive");
            const auto it = std::find(fan.rays.begin(), fan.rays.end(), f);
            if (it == fan.rays.end()) {
                cone.push_back(static_cast<long>(fan.rays.size()));
                fan.rays.push_back(f);
            } else {
                cone.push_back(static_cast<long>(it - fan.rays.begin()));
            }
        }
        std::sort(cone.begin(), cone.end());
        cones.push_back(cone);
    }
    // Keep inclusion-maximal cones only, dropping duplicates.
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    for (const std::vector<long>& c : cones) {
        bool maximal = true;
        for (const std::vector<long>& d : cones)
            if (c != d && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        if (maximal) fan.max_cones.push_back(c);
    }
    // Each cone's rays extend to a basis of the dual lattice.
    for (const std::vector<long>& c : fan.max_cones) {
        IntMatrix A(static_cast<long>(c.size()), fan.lattice_rank);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (long j = 0; j < fan.lattice_rank; ++j) A.at(static_cast<long>(i), j) = fan.rays[c[i]][j];
        const SmithForm s = smith_normal_form(A);
        bool unimodular = s.rank == static_cast<long>(c.size());
        for (long i = 0; i < s.rank; ++i)
            if (s.D.at(i, i) != 1) unimodular = false;
        require(unimodular, "cone rays must extend to a lattice basis");
    }
    for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j)
            check_common_face(fan.rays, fan.max_cones[i], fan.max_cones[j]);
    return fan;
}

std::vector<std::vector<Ray>> smooth_sequences_from_extremal_rays(const CoverLattice& L) {
    const std::vector<Ray> rays = extremal_rays(L);
    const long cap = L.ambient_rank();
    std::vector<std::vector<Ray>> out;
    std::vector<Ray> seq;
    const std::function<void(std::size_t)> grow = [&](std::size_t start) {
        for (std::size_t j = start; j < rays.size(); ++j) {
            seq.push_back(rays[j]);
            if (is_smooth_sequence(L, seq).smooth) {
                out.push_back(seq);
                if (static_cast<long>(seq.size()) < cap) grow(j + 1);
            }
            seq.pop_back();
        }
    };
    grow(0);
    return out;
}

}  // namespace covermonoid
