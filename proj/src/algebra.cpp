#include "covermonoid/algebra.hpp"

#include <algorithm>
#include <set>

namespace covermonoid {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    require(nr != 0, "inverse of zero");
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    require(r == 1, "element not invertible");
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(long p) {
    require(is_prime_long(p), "field order must be prime");
    return Field{p};
}

FieldScalar FieldScalar::zero(const Field& F) {
    FieldScalar s;
    s.f_ = F;
    return s;
}

FieldScalar FieldScalar::one(const Field& F) {
    FieldScalar s;
    s.f_ = F;
    if (F.is_rational())
        s.q_ = 1;
    else
        s.r_ = 1 % F.p;
    return s;
}

FieldScalar FieldScalar::from_rational(const Rat& v) {
    FieldScalar s;
    s.q_ = v;
    s.q_.canonicalize();
    return s;
}

FieldScalar FieldScalar::from_integer(const Field& F, const Int& v) {
    FieldScalar s;
    s.f_ = F;
    if (F.is_rational())
        s.q_ = Rat(v);
    else
        s.r_ = int_fmod(v, Int(F.p)).get_si();
    return s;
}

bool FieldScalar::is_zero() const {
    return f_.is_rational() ? q_ == 0 : r_ == 0;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    require(f_ == o.f_, "field mismatch");
    FieldScalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % f_.p;
    return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    require(f_ == o.f_, "field mismatch");
    FieldScalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = ((r_ - o.r_) % f_.p + f_.p) % f_.p;
    return s;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    require(f_ == o.f_, "field mismatch");
    FieldScalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = (r_ * o.r_) % f_.p;
    return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inverse();
}

FieldScalar FieldScalar::inverse() const {
    require(!is_zero(), "division by zero");
    FieldScalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.q_ = Rat(1) / q_;
    else
        s.r_ = inv_mod(r_, f_.p);
    return s;
}

FieldScalar FieldScalar::pow(const Int& e) const {
    require(e >= 0, "negative exponent");
    FieldScalar acc = one(f_), base = *this;
    Int k = e;
    while (k > 0) {
        if (int_fmod(k, 2) == 1) acc = acc * base;
        base = base * base;
        k = int_fdiv(k, 2);
    }
    return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    return f_ == o.f_ && (f_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

std::string FieldScalar::str() const {
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

MultiplicationTable::MultiplicationTable(FiniteAbelianGroup M, Field F)
    : M_(std::move(M)), F_(F), t_(M_.size() * M_.size(), FieldScalar::zero(F)) {
    for (long m = 0; m < M_.size(); ++m) {
        t_[m * M_.size()] = FieldScalar::one(F_);
        t_[m] = FieldScalar::one(F_);
    }
}

void MultiplicationTable::set(long m, long n, const FieldScalar& v) {
    require(v.field() == F_, "field mismatch");
    t_[m * M_.size() + n] = v;
    t_[n * M_.size() + m] = v;
}

bool MultiplicationTable::operator==(const MultiplicationTable& o) const {
    if (!(M_ == o.M_) || !(F_ == o.F_)) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i] == o.t_[i])) return false;
    return true;
}

ValidationReport validate(const MultiplicationTable& psi) {
    const auto& M = psi.group();
    const long sz = M.size();
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    FieldScalar one = FieldScalar::one(psi.field());
    for (long m = 0; m < sz; ++m) {
        if (!(psi.at(m, 0) == one))
            return fail("unit row violated at (" + std::to_string(m) + ",0)");
        for (long n = 0; n < sz; ++n)
            if (!(psi.at(m, n) == psi.at(n, m)))
                return fail("symmetry violated at (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
    }
    for (long m = 0; m < sz; ++m)
        for (long n = 0; n < sz; ++n)
            for (long t = 0; t < sz; ++t) {
                FieldScalar lhs = psi.at(m, n) * psi.at(M.add(m, n), t);
                FieldScalar rhs = psi.at(n, t) * psi.at(M.add(n, t), m);
                if (!(lhs == rhs))
                    return fail("associativity violated at (" + std::to_string(m) + "," +
                                std::to_string(n) + "," + std::to_string(t) + ")");
            }
    return {};
}

namespace {

void check_character(const UnitCharacter& u, const FiniteAbelianGroup& M, const Field& F) {
    require(u.M == M, "character group mismatch");
    require(static_cast<long>(u.u.size()) == M.size(), "character size mismatch");
    require(u.u[0] == FieldScalar::one(F), "character must send 0 to 1");
    for (const auto& v : u.u) {
        require(v.field() == F, "character field mismatch");
        require(!v.is_zero(), "character values must be units");
    }
}

}  // namespace

MultiplicationTable from_ray(const Ray& E, const Field& F,
                             const std::optional<UnitCharacter>& twist) {
    const auto& M = E.lattice().group();
    if (twist) check_character(*twist, M, F);
    MultiplicationTable psi(M, F);
    for (long m = 1; m < M.size(); ++m)
        for (long n = m; n < M.size(); ++n) {
            FieldScalar v = E.value_on_pair(m, n) == 0 ? FieldScalar::one(F)
                                                       : FieldScalar::zero(F);
            if (twist) v = v * twist->u[m] * twist->u[n] / twist->u[M.add(m, n)];
            psi.set(m, n, v);
        }
    return psi;
}

MultiplicationTable twist_table(const MultiplicationTable& psi, const UnitCharacter& u) {
    const auto& M = psi.group();
    check_character(u, M, psi.field());
    MultiplicationTable out(M, psi.field());
    for (long m = 1; m < M.size(); ++m)
        for (long n = m; n < M.size(); ++n)
            out.set(m, n, psi.at(m, n) * u.u[m] * u.u[n] / u.u[M.add(m, n)]);
    return out;
}

std::vector<long> H_of_table(const MultiplicationTable& psi) {
    const auto& M = psi.group();
    std::vector<long> H;
    for (long m = 0; m < M.size(); ++m)
        if (!psi.at(m, M.neg(m)).is_zero()) H.push_back(m);
    std::set<long> hs(H.begin(), H.end());
    for (long a : H)
        for (long b : H)
            require(hs.count(M.add(a, b)) == 1, "internal: H of a table must be a subgroup");
    return H;
}

long h_component_table(const MultiplicationTable& psi, long t) {
    const auto& M = psi.group();
    std::vector<long> H = H_of_table(psi);
    std::set<long> hs(H.begin(), H.end());
    if (hs.count(t)) return 0;
    for (long u = 1; u < M.size(); ++u) {
        if (hs.count(u)) continue;
        for (long v = u; v < M.size(); ++v) {
            if (hs.count(v)) continue;
            if (!hs.count(M.add(M.add(u, v), M.neg(t)))) continue;
            if (!psi.at(u, v).is_zero()) return 0;
        }
    }
    return 1;
}

long h_of_table(const MultiplicationTable& psi) {
    const auto& M = psi.group();
    long sum = 0;
    for (long t = 0; t < M.size(); ++t) sum += h_component_table(psi, t);
    long h = static_cast<long>(H_of_table(psi).size());
    require(sum % h == 0, "internal: h must divide the component sum");
    return sum / h;
}

MultiplicationTable reduce_mod_H(const MultiplicationTable& psi, const QuotientData& q) {
    const auto& M = psi.group();
    require(q.projection.source == M, "quotient data group mismatch");
    std::vector<long> kernel;
    for (long x = 0; x < M.size(); ++x)
        if (q.projection.apply(x) == 0) kernel.push_back(x);
    FieldScalar one = FieldScalar::one(psi.field());
    for (long x : kernel) {
        require(!psi.at(x, M.neg(x)).is_zero(), "H must be contained in H_psi");
        for (long y : kernel) require(psi.at(x, y) == one, "table must split on H x H");
    }
    const auto& Q = q.quotient;
    MultiplicationTable out(Q, psi.field());
    for (long a = 0; a < Q.size(); ++a)
        for (long b = a; b < Q.size(); ++b) {
            long sa = q.section[a], sb = q.section[b];
            long sab = q.section[Q.add(a, b)];
            long h = M.add(sab, M.neg(M.add(sa, sb)));
            out.set(a, b, psi.at(sa, sb) * psi.at(h, M.add(sa, sb)));
        }
    require(validate(out).ok, "internal: reduced table must be valid");
    return out;
}

std::vector<long> minimum_generating_degrees(const MultiplicationTable& psi) {
    require(H_of_table(psi).size() == 1, "table must have trivial H");
    std::vector<long> out;
    for (long m = 0; m < psi.group().size(); ++m)
        if (h_component_table(psi, m) == 1) out.push_back(m);
    require(static_cast<long>(out.size()) == h_of_table(psi),
            "internal: generating degrees must count h");
    return out;
}

MultiplicationTable quotient_ring_structure_constants(const QuotientRingSpec& spec) {
    const auto& M = spec.M;
    const Field F = spec.a.field();
    require(spec.b.field() == F, "relation scalars must share a field");
    require(static_cast<long>(spec.basis.size()) == M.size(), "basis must index the group");
    require(spec.z >= 1 && spec.x >= 1 && spec.y >= 0 && spec.w >= 0, "invalid exponents");
    require(spec.sr >= 0 && spec.dq >= 1, "invalid mixed relation");
    require(spec.gamma == 0 || spec.gamma == 1, "gamma must be 0 or 1");
    require(spec.z * spec.x - spec.y * spec.w > 0, "staircase must be bounded");

    // Normal form under s^z -> a t^y, t^x -> b s^w, s^sr t^dq -> a^gamma b.
    // Rules are tried in this fixed order. Termination: with weights
    // wt(s) = x + y and wt(t) = z + w, the first two rules drop the weight of
    // the monomial by exactly zx - yw > 0 and the third by sr(x+y) + dq(z+w) > 0,
    // so every rewrite strictly decreases a nonnegative integer.
    auto normal_form = [&](long A, long B) {
        FieldScalar c = FieldScalar::one(F);
        for (;;) {
            if (A >= spec.z) {
                A -= spec.z;
                B += spec.y;
                c = c * spec.a;
            } else if (B >= spec.x) {
                B -= spec.x;
                A += spec.w;
                c = c * spec.b;
            } else if (A >= spec.sr && B >= spec.dq) {
                A -= spec.sr;
                B -= spec.dq;
                c = c * spec.a.pow(spec.gamma) * spec.b;
            } else {
                break;
            }
        }
        return std::tuple<long, long, FieldScalar>(A, B, c);
    };

    for (long l = 0; l < M.size(); ++l) {
        long lm = M.add(M.mul(spec.basis[l].first, spec.m), M.mul(spec.basis[l].second, spec.n));
        require(lm == l, "basis monomial has the wrong degree");
        auto [A, B, c] = normal_form(spec.basis[l].first, spec.basis[l].second);
        require(A == spec.basis[l].first && B == spec.basis[l].second,
                "basis monomial is reducible");
        (void)c;
    }
    MultiplicationTable psi(M, F);
    for (long u = 0; u < M.size(); ++u)
        for (long v = u; v < M.size(); ++v) {
            auto [A, B, c] =
                normal_form(spec.basis[u].first + spec.basis[v].first,
                            spec.basis[u].second + spec.basis[v].second);
            long uv = M.add(u, v);
            require(A == spec.basis[uv].first && B == spec.basis[uv].second,
                    "product does not land on the prescribed basis");
            psi.set(u, v, c);
        }
    require(validate(psi).ok, "internal: quotient ring table must be valid");
    return psi;
}

MainComponentResult in_main_component(const CoverLattice& L, const MultiplicationTable& psi) {
    require(L.group() == psi.group(), "lattice group mismatch");
    require(validate(psi).ok, "table must satisfy the structure identities");
    std::vector<long> Z;
    for (std::size_t p = 0; p < L.pairs().size(); ++p) {
        const auto& pr = L.pairs()[p];
        if (psi.at(pr.m, pr.n).is_zero()) Z.push_back(static_cast<long>(p));
    }
    MainComponentResult res;
    auto E = support_realizable(L, Z);
    res.member = E.has_value();
    if (E) res.witness = std::move(*E);
    return res;
}

}  // namespace covermonoid
