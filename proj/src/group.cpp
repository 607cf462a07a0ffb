#include "covermonoid/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "covermonoid/linalg.hpp"

namespace covermonoid {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> factor_orders)
    : factors_(std::move(factor_orders)) {
    size_ = 1;
    for (long o : factors_) {
        require(o >= 2, "group factor orders must be at least 2");
        size_ *= o;
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
    std::vector<long> orders;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        long o = 0;
        try {
            o = std::stol(part, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid group spec: " + spec);
        }
        require(pos == part.size() && o >= 2, "invalid group spec: " + spec);
        orders.push_back(o);
    }
    require(!orders.empty(), "invalid group spec: " + spec);
    return FiniteAbelianGroup(orders);
}

std::string FiniteAbelianGroup::spec() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

std::vector<long> FiniteAbelianGroup::coords(long idx) const {
    require(idx >= 0 && idx < size_, "element index out of range");
    std::vector<long> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        c[i] = idx % factors_[i];
        idx /= factors_[i];
    }
    return c;
}

long FiniteAbelianGroup::index(const std::vector<long>& coords) const {
    require(coords.size() == factors_.size(), "coordinate count mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx = idx * factors_[i] + mod_long(coords[i], factors_[i]);
    return idx;
}

long FiniteAbelianGroup::add(long a, long b) const {
    std::vector<long> ca = coords(a), cb = coords(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return index(ca);
}

long FiniteAbelianGroup::neg(long a) const {
    std::vector<long> c = coords(a);
    for (long& x : c) x = -x;
    return index(c);
}

long FiniteAbelianGroup::mul(long k, long a) const {
    std::vector<long> c = coords(a);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod_long(mod_long(k, factors_[i]) * c[i], factors_[i]);
    return index(c);
}

long FiniteAbelianGroup::order_of(long a) const {
    std::vector<long> c = coords(a);
    long o = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long fi = factors_[i] / gcd_long(c[i], factors_[i]);
        o = o / gcd_long(o, fi) * fi;
    }
    return o;
}

long FiniteAbelianGroup::exponent() const {
    long e = 1;
    for (long o : factors_) e = e / gcd_long(e, o) * o;
    return e;
}

long GroupHomomorphism::apply(long src) const {
    std::vector<long> c = source.coords(src);
    long out = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        out = target.add(out, target.mul(c[i], images[i]));
    return out;
}

bool GroupHomomorphism::well_defined() const {
    if (images.size() != source.rank()) return false;
    for (std::size_t i = 0; i < images.size(); ++i)
        if (target.mul(source.factors()[i], images[i]) != 0) return false;
    return true;
}

bool GroupHomomorphism::surjective() const {
    return static_cast<long>(subgroup_generated(target, images).size()) == target.size();
}

std::vector<long> subgroup_generated(const FiniteAbelianGroup& M, const std::vector<long>& gens) {
    std::set<long> seen{0};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier)
            for (long g : gens) {
                long y = M.add(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<long>(seen.begin(), seen.end());
}

TwoGeneratorPresentation recognize_two_generator_presentation(const FiniteAbelianGroup& M,
                                                              long m, long n) {
    require(m != 0 && n != 0, "generators must be nonzero");
    require(m != n, "generators must be distinct");
    require(static_cast<long>(subgroup_generated(M, {m, n}).size()) == M.size(),
            "elements do not generate the group");
    const long N = M.order_of(n);
    // <n> as a lookup: multiple of n -> coefficient in [0, N)
    std::vector<long> coeff_of(M.size(), -1);
    long cur = 0;
    for (long a = 0; a < N; ++a) {
        coeff_of[cur] = a;
        cur = M.add(cur, n);
    }
    long r = 0, alpha = -1;
    long sm = 0;
    for (long s = 1; s <= M.size(); ++s) {
        sm = M.add(sm, m);
        if (coeff_of[sm] >= 0) {
            r = s;
            alpha = coeff_of[sm];
            break;
        }
    }
    require(r > 0, "internal: no multiple of m lies in <n>");
    require(r * N == M.size(), "internal: index of <n> mismatch");
    require(N > 1 && (r > 1 || alpha > 1), "degenerate presentation");
    return {r, alpha, N};
}

TwoDegreeGroup make_two_degree_group(long r, long alpha, long N) {
    require(r > 0 && N > 1 && alpha >= 0 && alpha < N, "invalid presentation parameters");
    require(r > 1 || alpha > 1, "degenerate presentation parameters");
    // Z^2 modulo the columns of [[r, 0], [-alpha, N]].
    IntMatrix A(2, 2);
    A.at(0, 0) = r;
    A.at(1, 0) = -alpha;
    A.at(1, 1) = N;
    SmithForm f = smith_normal_form(A);
    require(f.rank == 2, "internal: relation matrix must have full rank");
    std::vector<long> mods = {f.D.at(0, 0).get_si(), f.D.at(1, 1).get_si()};
    std::vector<long> orders;
    for (long d : mods)
        if (d > 1) orders.push_back(d);
    require(!orders.empty(), "internal: quotient is trivial");
    FiniteAbelianGroup Q(orders);
    auto project = [&](long x0, long x1) {
        std::vector<long> full(2);
        full[0] = mod_long(f.U.at(0, 0).get_si() * x0 + f.U.at(0, 1).get_si() * x1, mods[0]);
        full[1] = mod_long(f.U.at(1, 0).get_si() * x0 + f.U.at(1, 1).get_si() * x1, mods[1]);
        std::vector<long> c;
        for (std::size_t i = 0; i < mods.size(); ++i)
            if (mods[i] > 1) c.push_back(full[i]);
        return Q.index(c);
    };
    TwoDegreeGroup out{Q, project(1, 0), project(0, 1)};
    require(out.group.size() == r * N, "internal: quotient order mismatch");
    return out;
}

std::vector<GroupHomomorphism> enumerate_homomorphisms(const FiniteAbelianGroup& M,
                                                       const FiniteAbelianGroup& target) {
    // Per-generator candidates: elements of the target killed by the factor order.
    std::vector<std::vector<long>> cand(M.rank());
    for (std::size_t i = 0; i < M.rank(); ++i)
        for (long t = 0; t < target.size(); ++t)
            if (target.mul(M.factors()[i], t) == 0) cand[i].push_back(t);
    std::vector<GroupHomomorphism> out;
    std::vector<std::size_t> pos(M.rank(), 0);
    for (;;) {
        std::vector<long> images(M.rank());
        for (std::size_t i = 0; i < M.rank(); ++i) images[i] = cand[i][pos[i]];
        out.push_back(GroupHomomorphism{M, target, images});
        std::size_t i = M.rank();
        while (i-- > 0) {
            if (++pos[i] < cand[i].size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<GroupHomomorphism> enumerate_surjections(const FiniteAbelianGroup& M,
                                                     const FiniteAbelianGroup& target) {
    std::vector<GroupHomomorphism> out;
    for (GroupHomomorphism& h : enumerate_homomorphisms(M, target))
        if (h.surjective()) out.push_back(std::move(h));
    return out;
}

std::vector<GroupHomomorphism> cyclic_surjections(const FiniteAbelianGroup& M) {
    std::vector<GroupHomomorphism> out;
    const long e = M.exponent();
    for (long l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        for (GroupHomomorphism& h : enumerate_surjections(M, FiniteAbelianGroup({l})))
            out.push_back(std::move(h));
    }
    return out;
}

std::vector<long> invariant_factors(const FiniteAbelianGroup& M) {
    IntMatrix A(M.rank(), M.rank());
    for (std::size_t i = 0; i < M.rank(); ++i) A.at(i, i) = M.factors()[i];
    SmithForm f = smith_normal_form(A);
    std::vector<long> out;
    for (std::size_t i = 0; i < M.rank(); ++i) {
        long d = f.D.at(i, i).get_si();
        if (d > 1) out.push_back(d);
    }
    return out;
}

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

bool is_elementary_power(const FiniteAbelianGroup& M, ElementaryPower* out) {
    std::vector<long> inv = invariant_factors(M);
    if (inv.empty()) return false;
    for (long d : inv)
        if (d != inv[0]) return false;
    if (!is_prime_long(inv[0])) return false;
    if (out) *out = {inv[0], static_cast<long>(inv.size())};
    return true;
}

QuotientData quotient_by(const FiniteAbelianGroup& M, const std::vector<long>& subgroup_elements) {
    const long k = static_cast<long>(M.rank());
    // Relations of M/H: the factor orders plus coordinate lifts of H.
    IntMatrix A(k, k + static_cast<long>(subgroup_elements.size()));
    for (long i = 0; i < k; ++i) A.at(i, i) = M.factors()[i];
    for (std::size_t s = 0; s < subgroup_elements.size(); ++s) {
        std::vector<long> c = M.coords(subgroup_elements[s]);
        for (long i = 0; i < k; ++i) A.at(i, k + static_cast<long>(s)) = c[i];
    }
    SmithForm f = smith_normal_form(A);
    require(f.rank == k, "internal: quotient relations must have full rank");
    std::vector<long> mods(k), orders;
    for (long i = 0; i < k; ++i) {
        mods[i] = f.D.at(i, i).get_si();
        if (mods[i] > 1) orders.push_back(mods[i]);
    }
    FiniteAbelianGroup Q(orders);  // rank 0 (trivial group) when H = M
    auto project = [&](long x) {
        std::vector<long> cm = M.coords(x);
        std::vector<long> c;
        for (long i = 0; i < k; ++i) {
            long v = 0;
            for (long j = 0; j < k; ++j) v += f.U.at(i, j).get_si() * cm[j];
            if (mods[i] > 1) c.push_back(mod_long(v, mods[i]));
        }
        return Q.index(c);
    };
    GroupHomomorphism pi{M, Q, {}};
    pi.images.resize(k);
    for (long i = 0; i < k; ++i) {
        std::vector<long> c(k, 0);
        c[i] = 1;
        pi.images[i] = project(M.index(c));
    }
    long hsize = static_cast<long>(subgroup_generated(M, subgroup_elements).size());
    require(Q.size() * hsize == M.size(), "internal: quotient size mismatch");
    std::vector<long> section(Q.size(), -1);
    for (long x = 0; x < M.size(); ++x) {
        long q = project(x);
        if (section[q] < 0) section[q] = x;  // first hit is lex-least
    }
    return QuotientData{Q, pi, section};
}

}  // namespace covermonoid
