#include "covermonoid/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace covermonoid {

CoverLattice::CoverLattice(FiniteAbelianGroup M) : M_(std::move(M)) {
    require(M_.size() >= 2, "cover lattice needs a nontrivial group");
    const long sz = M_.size(), n = sz - 1;
    pair_lookup_.assign(sz * sz, -1);
    for (long m = 1; m < sz; ++m)
        for (long nn = m; nn < sz; ++nn) {
            pair_lookup_[m * sz + nn] = static_cast<long>(pairs_.size());
            pair_lookup_[nn * sz + m] = static_cast<long>(pairs_.size());
            pairs_.push_back({m, nn});
            std::vector<Int> v(n, Int(0));
            v[m - 1] += 1;
            v[nn - 1] += 1;
            long s = M_.add(m, nn);
            if (s != 0) v[s - 1] -= 1;
            gens_.push_back(std::move(v));
        }

    // K = Ker(Z^(M\0) -> M): project the kernel of [C | diag(orders)].
    const long k = static_cast<long>(M_.rank());
    IntMatrix A(k, n + k);
    for (long m = 1; m < sz; ++m) {
        std::vector<long> c = M_.coords(m);
        for (long i = 0; i < k; ++i) A.at(i, m - 1) = c[i];
    }
    for (long i = 0; i < k; ++i) A.at(i, n + i) = M_.factors()[i];
    IntMatrix full = kernel_lattice_basis(A);
    IntMatrix proj(full.rows, n);
    for (long i = 0; i < full.rows; ++i)
        for (long j = 0; j < n; ++j) proj.at(i, j) = full.at(i, j);
    kbasis_ = lattice_basis(proj);
    require(kbasis_.rows == n, "internal: kernel lattice must have full rank");
    require(lattice_index(IntMatrix::identity(n), kbasis_) == sz,
            "internal: kernel index must equal the group order");
    kbasis_t_ = transpose(kbasis_);
    for (const auto& g : gens_) gens_k_.push_back(k_coords(g));
}

long CoverLattice::pair_index(long m, long n) const {
    require(m > 0 && n > 0 && m < M_.size() && n < M_.size(), "pair elements must be nonzero");
    return pair_lookup_[m * M_.size() + n];
}

std::vector<Int> CoverLattice::k_coords(const std::vector<Int>& v) const {
    auto y = solve_integer(kbasis_t_, v);
    require(y.has_value(), "vector does not lie in the kernel lattice");
    return *y;
}

Ray::Ray(const CoverLattice& L, std::vector<Rat> e_values) : L_(&L), e_(std::move(e_values)) {
    require(static_cast<long>(e_.size()) == L.ambient_rank(), "e-value count mismatch");
    for (Rat& x : e_) x.canonicalize();
    const auto& M = L.group();
    gv_.reserve(L.pairs().size());
    for (const auto& p : L.pairs()) {
        Rat v = e_[p.m - 1] + e_[p.n - 1];
        long s = M.add(p.m, p.n);
        if (s != 0) v -= e_[s - 1];
        require(v.get_den() == 1, "generator value must be an integer");
        require(v >= 0, "generator value must be nonnegative");
        gv_.emplace_back(v.get_num());
    }
    // Integrality on K, checked on the stored basis.
    const IntMatrix& B = L.k_basis();
    for (long i = 0; i < B.rows; ++i) {
        Rat s(0);
        for (long j = 0; j < B.cols; ++j) s += Rat(B.at(i, j)) * e_[j];
        require(s.get_den() == 1, "ray must be integral on the kernel lattice");
    }
}

Ray Ray::from_k_functional(const CoverLattice& L, const std::vector<Int>& f) {
    std::vector<Rat> b(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) b[i] = Rat(f[i]);
    auto e = solve_rational(L.k_basis(), b);
    require(e.has_value(), "internal: k-basis must be invertible");
    return Ray(L, *e);
}

Int Ray::denominator() const {
    Int d = 1;
    for (const Rat& x : e_) d = int_lcm(d, Int(x.get_den()));
    return d;
}

const Int& Ray::value_on_pair(long m, long n) const {
    return gv_[L_->pair_index(m, n)];
}

std::vector<Int> Ray::k_functional() const {
    const IntMatrix& B = L_->k_basis();
    std::vector<Int> f(B.rows);
    for (long i = 0; i < B.rows; ++i) {
        Rat s(0);
        for (long j = 0; j < B.cols; ++j) s += Rat(B.at(i, j)) * e_[j];
        f[i] = Int(s.get_num());
    }
    return f;
}

std::vector<long> Ray::support() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < gv_.size(); ++i)
        if (gv_[i] > 0) out.push_back(static_cast<long>(i));
    return out;
}

bool Ray::is_zero() const {
    for (const Int& v : gv_)
        if (v != 0) return false;
    return true;
}

MonoidPresentation reduced_presentation(const CoverLattice& L) {
    const auto& M = L.group();
    MonoidPresentation P;
    std::vector<long> var_of(L.pairs().size(), -1);
    for (std::size_t i = 0; i < L.pairs().size(); ++i) {
        const auto& p = L.pairs()[i];
        if (M.add(p.m, p.n) != 0) {
            var_of[i] = static_cast<long>(P.variables.size());
            P.variables.push_back(p);
        }
    }
    auto var = [&](long m, long n) {
        long v = var_of[L.pair_index(m, n)];
        require(v >= 0, "internal: variable excluded from J");
        return v;
    };
    std::set<MonoidPresentation::Relation> rels;
    auto add_rel = [&](std::array<long, 2> lhs, std::array<long, 2> rhs) {
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs == rhs) return;
        if (rhs < lhs) std::swap(lhs, rhs);
        rels.insert({lhs, rhs});
    };
    const long sz = M.size();
    // First family: x_{m,n} x_{m+n,t} - x_{n,t} x_{n+t,m}.
    for (long m = 1; m < sz; ++m)
        for (long n = 1; n < sz; ++n)
            for (long t = 1; t < sz; ++t) {
                if (m == t) continue;
                long mn = M.add(m, n), nt = M.add(n, t);
                if (mn == 0 || nt == 0 || M.add(mn, t) == 0) continue;
                add_rel({var(m, n), var(mn, t)}, {var(n, t), var(nt, m)});
            }
    // Second family: x_{-m,t} x_{-m+t,m} - x_{-m,s} x_{-m+s,m}.
    for (long m = 1; m < sz; ++m)
        for (long s = 1; s < sz; ++s)
            for (long t = 1; t < sz; ++t) {
                if (m == s || m == t || s == t) continue;
                long nm = M.neg(m);
                add_rel({var(nm, t), var(M.add(nm, t), m)}, {var(nm, s), var(M.add(nm, s), m)});
            }
    P.relations.assign(rels.begin(), rels.end());
    return P;
}

std::vector<Ray> extremal_rays(const CoverLattice& L) {
    RationalCone C;
    C.ambient_rank = L.ambient_rank();
    C.generators = L.generator_k_coords();
    std::vector<Ray> out;
    for (const auto& f : dual_cone_extreme_rays(C)) out.push_back(Ray::from_k_functional(L, f));
    std::sort(out.begin(), out.end());
    return out;
}

Ray pardini_ray(const CoverLattice& L, const GroupHomomorphism& eta) {
    require(eta.source == L.group(), "surjection source mismatch");
    require(eta.well_defined(), "homomorphism must be well defined");
    require(eta.target.rank() == 1, "target must be cyclic");
    const long l = eta.target.size();
    require(l > 1, "target must be nontrivial");
    require(eta.surjective(), "homomorphism must be surjective");
    std::vector<Rat> e(L.ambient_rank());
    for (long m = 1; m < L.group().size(); ++m) e[m - 1] = Rat(eta.apply(m), l);
    return Ray(L, e);
}

std::vector<long> H_of_ray(const Ray& E) {
    const auto& L = E.lattice();
    const auto& M = L.group();
    std::vector<long> H{0};
    for (long m = 1; m < M.size(); ++m)
        if (E.value_on_pair(m, M.neg(m)) == 0) H.push_back(m);
    // Sanity: must be a subgroup.
    std::set<long> hs(H.begin(), H.end());
    for (long a : H)
        for (long b : H)
            require(hs.count(M.add(a, b)) == 1, "internal: H of a ray must be a subgroup");
    return H;
}

long h_component(const Ray& E, long t) {
    const auto& L = E.lattice();
    const auto& M = L.group();
    std::vector<long> H = H_of_ray(E);
    std::set<long> hs(H.begin(), H.end());
    if (hs.count(t)) return 0;
    for (long u = 1; u < M.size(); ++u) {
        if (hs.count(u)) continue;
        for (long v = u; v < M.size(); ++v) {
            if (hs.count(v)) continue;
            if (!hs.count(M.add(M.add(u, v), M.neg(t)))) continue;
            if (E.value_on_pair(u, v) == 0) return 0;
        }
    }
    return 1;
}

long h_of_ray(const Ray& E) {
    const auto& M = E.lattice().group();
    long sum = 0;
    for (long t = 0; t < M.size(); ++t) sum += h_component(E, t);
    long h = static_cast<long>(H_of_ray(E).size());
    require(sum % h == 0, "internal: h must divide the component sum");
    return sum / h;
}

SmoothSequenceResult is_smooth_sequence(const CoverLattice& L, const std::vector<Ray>& rays) {
    const long s = static_cast<long>(rays.size());
    const long n = L.ambient_rank();
    SmoothSequenceResult res;
    res.witness.assign(s, -1);
    // Witness generators with E^i(v_j) = delta_ij, each coordinate independent.
    for (long i = 0; i < s; ++i) {
        for (std::size_t p = 0; p < L.pairs().size(); ++p) {
            bool ok = rays[i].generator_values()[p] == 1;
            for (long k2 = 0; k2 < s && ok; ++k2)
                if (k2 != i) ok = rays[k2].generator_values()[p] == 0;
            if (ok) {
                res.witness[i] = static_cast<long>(p);
                break;
            }
        }
        if (res.witness[i] < 0) return res;
    }
    // Generators annihilated by the whole sequence must span the joint kernel.
    IntMatrix F(s, n);
    for (long i = 0; i < s; ++i) {
        std::vector<Int> f = rays[i].k_functional();
        for (long j = 0; j < n; ++j) F.at(i, j) = f[j];
    }
    IntMatrix ker = kernel_lattice_basis(F);
    std::vector<long> zero_gens;
    for (std::size_t p = 0; p < L.pairs().size(); ++p) {
        bool allzero = true;
        for (long i = 0; i < s && allzero; ++i) allzero = rays[i].generator_values()[p] == 0;
        if (allzero) zero_gens.push_back(static_cast<long>(p));
    }
    IntMatrix Z(static_cast<long>(zero_gens.size()), n);
    for (std::size_t r = 0; r < zero_gens.size(); ++r) {
        const auto& kc = L.generator_k_coords()[zero_gens[r]];
        for (long j = 0; j < n; ++j) Z.at(static_cast<long>(r), j) = kc[j];
    }
    res.smooth = sublattice_equal(Z, ker);
    if (!res.smooth) res.witness.assign(s, -1);
    return res;
}

bool is_smooth_ray(const Ray& E) {
    require(!E.is_zero(), "smoothness of the zero ray is undefined");
    return is_smooth_sequence(E.lattice(), {E}).smooth;
}

namespace {

struct FMRow {
    std::vector<Rat> a;
    Rat b;
};

std::vector<Int> row_key(const FMRow& r) {
    Int lcm = Int(r.b.get_den());
    for (const Rat& x : r.a) lcm = int_lcm(lcm, Int(x.get_den()));
    std::vector<Int> key;
    key.reserve(r.a.size() + 1);
    Int g = 0;
    for (const Rat& x : r.a) {
        Rat s = x * Rat(lcm);
        key.emplace_back(s.get_num());
        g = int_gcd(g, key.back());
    }
    Rat sb = r.b * Rat(lcm);
    key.emplace_back(sb.get_num());
    g = int_gcd(g, key.back());
    if (g > 1)
        for (Int& x : key) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return key;
}

// Feasibility of a*c >= b over the rationals; returns a witness when feasible.
std::optional<std::vector<Rat>> fourier_motzkin(std::vector<FMRow> rows, long d) {
    std::vector<std::vector<FMRow>> levels(d);
    for (long var = d - 1; var >= 0; --var) {
        levels[var] = rows;
        std::vector<FMRow> keep, pos, neg;
        for (auto& r : rows) {
            if (r.a[var] > 0)
                pos.push_back(std::move(r));
            else if (r.a[var] < 0)
                neg.push_back(std::move(r));
            else
                keep.push_back(std::move(r));
        }
        std::set<std::vector<Int>> seen;
        for (auto& r : keep) seen.insert(row_key(r));
        for (const auto& p : pos)
            for (const auto& q : neg) {
                FMRow r;
                r.a.assign(d, Rat(0));
                Rat cp = -q.a[var], cq = p.a[var];  // both positive multipliers
                for (long j = 0; j < var; ++j) r.a[j] = cp * p.a[j] + cq * q.a[j];
                r.b = cp * p.b + cq * q.b;
                bool tautology = r.b <= 0;
                for (long j = 0; j < var && tautology; ++j) tautology = r.a[j] == 0;
                if (tautology) continue;
                if (seen.insert(row_key(r)).second) keep.push_back(std::move(r));
            }
        rows = std::move(keep);
    }
    for (const auto& r : rows)
        if (r.b > 0) return std::nullopt;  // 0 >= b fails
    std::vector<Rat> c(d, Rat(0));
    for (long var = 0; var < d; ++var) {
        bool has_lo = false, has_hi = false;
        Rat lo(0), hi(0);
        for (const auto& r : levels[var]) {
            if (r.a[var] == 0) continue;
            Rat rest = r.b;
            for (long j = 0; j < var; ++j) rest -= r.a[j] * c[j];
            Rat bound = rest / r.a[var];
            if (r.a[var] > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo)
            c[var] = lo;
        else if (has_hi)
            c[var] = hi;
        require(!(has_lo && has_hi) || lo <= hi, "internal: inconsistent bounds after elimination");
    }
    return c;
}

}  // namespace

std::optional<Ray> support_realizable(const CoverLattice& L, const std::vector<long>& Z) {
    const long n = L.ambient_rank();
    std::set<long> zs(Z.begin(), Z.end());
    for (long z : Z)
        require(z >= 0 && z < static_cast<long>(L.pairs().size()), "bad pair index");
    std::vector<long> eq;
    for (long p = 0; p < static_cast<long>(L.pairs().size()); ++p)
        if (!zs.count(p)) eq.push_back(p);
    IntMatrix Aeq(static_cast<long>(eq.size()), n);
    for (std::size_t i = 0; i < eq.size(); ++i) {
        const auto& g = L.generator(eq[i]);
        for (long j = 0; j < n; ++j) Aeq.at(static_cast<long>(i), j) = g[j];
    }
    IntMatrix W = kernel_lattice_basis(Aeq);
    const long d = W.rows;
    std::vector<FMRow> rows;
    for (long z : zs) {
        FMRow r;
        r.a.assign(d, Rat(0));
        const auto& g = L.generator(z);
        for (long j = 0; j < d; ++j) {
            Int s = 0;
            for (long k2 = 0; k2 < n; ++k2) s += W.at(j, k2) * g[k2];
            r.a[j] = Rat(s);
        }
        r.b = 1;
        rows.push_back(std::move(r));
    }
    auto c = fourier_motzkin(std::move(rows), d);
    if (!c) return std::nullopt;
    std::vector<Rat> e(n, Rat(0));
    for (long j = 0; j < d; ++j)
        for (long k2 = 0; k2 < n; ++k2) e[k2] += (*c)[j] * Rat(W.at(j, k2));
    // Clear denominators of the generator values (the e-values may stay rational).
    Int lam = 1;
    for (long z : zs) {
        const auto& p = L.pairs()[z];
        Rat v = e[p.m - 1] + e[p.n - 1];
        long s = L.group().add(p.m, p.n);
        if (s != 0) v -= e[s - 1];
        lam = int_lcm(lam, Int(v.get_den()));
    }
    for (Rat& x : e) x *= Rat(lam);
    Ray out(L, e);
    require(out.support() == std::vector<long>(zs.begin(), zs.end()),
            "internal: realized support mismatch");
    return out;
}

bool is_indecomposable_ray(const Ray& E) {
    const auto& L = E.lattice();
    const long n = L.ambient_rank();
    if (E.is_zero()) return false;
    // Pick n generators forming a rational basis of K, greedily.
    std::vector<long> chosen;
    IntMatrix G(0, n);
    for (std::size_t p = 0; p < L.pairs().size() && static_cast<long>(chosen.size()) < n; ++p) {
        IntMatrix trial(static_cast<long>(chosen.size()) + 1, n);
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (long j = 0; j < n; ++j) trial.at(static_cast<long>(i), j) = G.at(static_cast<long>(i), j);
        const auto& kc = L.generator_k_coords()[p];
        for (long j = 0; j < n; ++j) trial.at(static_cast<long>(chosen.size()), j) = kc[j];
        if (rank_rational(trial) == static_cast<long>(chosen.size()) + 1) {
            chosen.push_back(static_cast<long>(p));
            G = trial;
        }
    }
    require(static_cast<long>(chosen.size()) == n, "internal: generators must span K");
    auto Ginv = inverse_rational(G);
    require(Ginv.has_value(), "internal: basis inversion failed");
    // Enumerate candidate splittings over the value box of the chosen generators.
    std::vector<long> box(n), t(n, 0);
    double volume = 1;
    for (long i = 0; i < n; ++i) {
        box[i] = E.generator_values()[chosen[i]].get_si();
        volume *= box[i] + 1;
        require(volume <= 4e6, "value box too large for the decomposition search");
    }
    for (;;) {
        bool all_zero = true, all_full = true;
        for (long i = 0; i < n; ++i) {
            all_zero = all_zero && t[i] == 0;
            all_full = all_full && t[i] == box[i];
        }
        if (!all_zero && !all_full) {
            // Solve G f = t: the functional with the prescribed generator values.
            std::vector<Rat> f(n, Rat(0));
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) f[i] += Ginv->at(i, j) * Rat(t[j]);
            bool ok = true;
            for (long i = 0; i < n && ok; ++i) ok = f[i].get_den() == 1;
            if (ok) {
                for (std::size_t p = 0; p < L.pairs().size() && ok; ++p) {
                    Rat v(0);
                    const auto& kc = L.generator_k_coords()[p];
                    for (long i = 0; i < n; ++i) v += f[i] * Rat(kc[i]);
                    ok = v.get_den() == 1 && v >= 0 && Rat(E.generator_values()[p]) >= v;
                }
            }
            if (ok) return false;  // found a proper splitting
        }
        long i = n;
        bool done = true;
        while (i-- > 0) {
            if (++t[i] <= box[i]) {
                done = false;
                break;
            }
            t[i] = 0;
        }
        if (done) return true;
    }
}

}  // namespace covermonoid
