#include "covermonoid/cone.hpp"

#include <algorithm>

#include "covermonoid/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covermonoid {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    require(a.size() == b.size(), "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

IntMatrix rows_matrix(const std::vector<std::vector<Int>>& rows, long cols) {
    IntMatrix A(static_cast<long>(rows.size()), cols);
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < cols; ++j) A.at(i, j) = rows[i][j];
    return A;
}

long rank_of_rows(const std::vector<std::vector<Int>>& rows, long cols) {
    if (rows.empty()) return 0;
    return rank_rational(rows_matrix(rows, cols));
}

std::vector<std::vector<Int>> sorted_constraints(const RationalCone& C) {
    for (const auto& g : C.generators) {
        require(static_cast<long>(g.size()) == C.ambient_rank, "generator length mismatch");
        bool nz = false;
        for (const Int& x : g) nz = nz || x != 0;
        require(nz, "cone generators must be nonzero");
    }
    auto cs = C.generators;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    require(rank_of_rows(cs, C.ambient_rank) == C.ambient_rank,
            "cone generators must span the ambient space");
    return cs;
}

struct DDRay {
    std::vector<Int> v;
    std::vector<bool> tight;  // per processed constraint
};

}  // namespace

std::vector<std::vector<Int>> dual_cone_extreme_rays(const RationalCone& C) {
    require(C.ambient_rank >= 1, "ambient rank must be positive");
    const long r = C.ambient_rank;
    const auto cs = sorted_constraints(C);

    // Start from the whole space: empty ray list, identity lineality basis.
    std::vector<std::vector<Int>> lineality;
    for (long i = 0; i < r; ++i) {
        std::vector<Int> e(r, Int(0));
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<DDRay> rays;

    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto& g = cs[k];
        long split = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(g, lineality[i]) != 0) {
                split = static_cast<long>(i);
                break;
            }
        if (split >= 0) {
            std::vector<Int> l0 = lineality[split];
            lineality.erase(lineality.begin() + split);
            Int gl0 = dot(g, l0);
            if (gl0 < 0) {
                for (Int& x : l0) x = -x;
                gl0 = -gl0;
            }
            // Push the remaining lineality and all rays into the hyperplane g = 0;
            // earlier constraints vanish on l0, so their values only rescale.
            for (auto& l : lineality) {
                Int c = dot(g, l);
                for (long j = 0; j < r; ++j) l[j] = gl0 * l[j] - c * l0[j];
                make_primitive(l);
            }
            for (auto& ray : rays) {
                Int c = dot(g, ray.v);
                for (long j = 0; j < r; ++j) ray.v[j] = gl0 * ray.v[j] - c * l0[j];
                make_primitive(ray.v);
                ray.tight.push_back(true);
            }
            DDRay r0{l0, std::vector<bool>(k, true)};
            r0.tight.push_back(false);
            rays.push_back(std::move(r0));
            continue;
        }

        std::vector<DDRay> pos, zero, neg;
        for (auto& ray : rays) {
            Int c = dot(g, ray.v);
            if (c > 0) {
                ray.tight.push_back(false);
                pos.push_back(std::move(ray));
            } else if (c == 0) {
                ray.tight.push_back(true);
                zero.push_back(std::move(ray));
            } else {
                neg.push_back(std::move(ray));
            }
        }
        const long want = r - static_cast<long>(lineality.size()) - 2;
        std::vector<DDRay> fresh;
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // Algebraic adjacency: common tight constraints span a ridge.
                std::vector<std::vector<Int>> common;
                for (std::size_t i = 0; i < k; ++i)
                    if (p.tight[i] && q.tight[i]) common.push_back(cs[i]);
                if (rank_of_rows(common, r) != want) continue;
                Int gp = dot(g, p.v), gq = dot(g, q.v);
                std::vector<Int> w(r);
                for (long j = 0; j < r; ++j) w[j] = gp * q.v[j] - gq * p.v[j];
                make_primitive(w);
                DDRay nr;
                nr.v = std::move(w);
                nr.tight.resize(k + 1);
                for (std::size_t i = 0; i <= k; ++i) nr.tight[i] = dot(cs[i], nr.v) == 0;
                fresh.push_back(std::move(nr));
            }
        std::vector<DDRay> next;
        for (auto& ray : pos) next.push_back(std::move(ray));
        for (auto& ray : zero) next.push_back(std::move(ray));
        for (auto& ray : fresh) next.push_back(std::move(ray));
        rays = std::move(next);
    }
    require(lineality.empty(), "internal: dual cone must be pointed");

    std::vector<std::vector<Int>> out;
    for (const auto& ray : rays) out.push_back(ray.v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& f : out) {
        std::vector<std::vector<Int>> tightset;
        for (const auto& g : cs)
            if (dot(g, f) == 0) tightset.push_back(g);
        require(rank_of_rows(tightset, r) == r - 1, "internal: non-extreme dual ray");
    }
    return out;
}

namespace {

// Append the sign-filtered kernel ray of one (rank-1)-subset, if any.
void consider_subset(const std::vector<std::vector<Int>>& cs, long r,
                     const std::vector<long>& idx, std::vector<std::vector<Int>>& out) {
    IntMatrix A(static_cast<long>(idx.size()), r);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (long j = 0; j < r; ++j) A.at(static_cast<long>(i), j) = cs[idx[i]][j];
    IntMatrix K = kernel_lattice_basis(A);
    if (K.rows != 1) return;
    std::vector<Int> f(r);
    for (long j = 0; j < r; ++j) f[j] = K.at(0, j);
    bool has_pos = false, has_neg = false;
    for (const auto& g : cs) {
        Int c = dot(g, f);
        if (c > 0) has_pos = true;
        if (c < 0) has_neg = true;
        if (has_pos && has_neg) return;
    }
    if (has_neg)
        for (Int& x : f) x = -x;
    out.push_back(std::move(f));
}

void enumerate_tail(const std::vector<std::vector<Int>>& cs, long r, std::vector<long>& idx,
                    long depth, long take, std::vector<std::vector<Int>>& out) {
    if (depth == take) {
        consider_subset(cs, r, idx, out);
        return;
    }
    long n = static_cast<long>(cs.size());
    long start = depth == 0 ? 0 : idx[depth - 1] + 1;
    for (long i = start; i + (take - depth - 1) < n; ++i) {
        idx[depth] = i;
        enumerate_tail(cs, r, idx, depth + 1, take, out);
    }
}

}  // namespace

std::vector<std::vector<Int>> dual_cone_extreme_rays_enumerated(const RationalCone& C,
                                                                bool parallel) {
    require(C.ambient_rank >= 1, "ambient rank must be positive");
    const long r = C.ambient_rank;
    const auto cs = sorted_constraints(C);
    const long n = static_cast<long>(cs.size());
    const long take = r - 1;

    std::vector<std::vector<Int>> found;
    if (take == 0) {
        // Rank-1 ambient: the dual cone of a spanning set is a single ray.
        std::vector<long> idx;
        consider_subset(cs, r, idx, found);
    } else if (!parallel) {
        std::vector<long> idx(take);
        enumerate_tail(cs, r, idx, 0, take, found);
    } else {
        // Split on the first subset element; each task enumerates its tail.
        std::vector<std::vector<std::vector<Int>>> parts(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
#endif
        for (long first = 0; first <= n - take; ++first) {
            std::vector<long> idx(take);
            idx[0] = first;
            enumerate_tail(cs, r, idx, 1, take, parts[first]);
        }
        for (auto& part : parts)
            for (auto& f : part) found.push_back(std::move(f));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

bool cone_membership(const std::vector<std::vector<Int>>& rays, const std::vector<Int>& v) {
    bool vzero = true;
    for (const Int& x : v) vzero = vzero && x == 0;
    if (vzero) return true;
    if (rays.empty()) return false;
    const long n = static_cast<long>(v.size());
    // Work inside the linear span of the rays.
    IntMatrix span = lattice_basis(rows_matrix(rays, n));
    const long d = span.rows;
    IntMatrix spant = transpose(span);
    auto coords = [&](const std::vector<Int>& x) -> std::optional<std::vector<Rat>> {
        std::vector<Rat> b(n);
        for (long j = 0; j < n; ++j) b[j] = Rat(x[j]);
        return solve_rational(spant, b);
    };
    auto vc = coords(v);
    if (!vc) return false;
    RationalCone inner;
    inner.ambient_rank = d;
    for (const auto& ray : rays) {
        auto rc = coords(ray);
        require(rc.has_value(), "internal: ray outside its own span");
        std::vector<Int> ri(d);
        Int lcm = 1;
        for (long j = 0; j < d; ++j) lcm = int_lcm(lcm, Int((*rc)[j].get_den()));
        for (long j = 0; j < d; ++j) {
            Rat scaled = (*rc)[j] * Rat(lcm);
            ri[j] = Int(scaled.get_num());
        }
        make_primitive(ri);
        inner.generators.push_back(std::move(ri));
    }
    // The cone is full dimensional inside its span, so its facet normals are
    // the extreme rays of the dual cone there.
    auto facets = dual_cone_extreme_rays(inner);
    for (const auto& f : facets) {
        Rat s(0);
        for (long j = 0; j < d; ++j) s += Rat(f[j]) * (*vc)[j];
        if (s < 0) return false;
    }
    return true;
}

}  // namespace covermonoid
