#pragma once

#include <string>

#include "covermonoid/numeric.hpp"

namespace covermonoid {

// Coefficient field: exact rationals (p == 0) or the prime field GF(p).
struct Field {
    long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    static Field rationals() { return Field{0}; }
    static Field prime(long p);
};

// A scalar in a fixed field; arithmetic requires matching fields.
class FieldScalar {
public:
    FieldScalar() = default;

    static FieldScalar zero(const Field& F);
    static FieldScalar one(const Field& F);
    static FieldScalar from_rational(const Rat& v);
    static FieldScalar from_integer(const Field& F, const Int& v);

    const Field& field() const { return f_; }
    bool is_zero() const;
    const Rat& rational() const { return q_; }
    long residue() const { return r_; }

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar inverse() const;
    FieldScalar pow(const Int& e) const;  // e >= 0, with 0^0 = 1

    bool operator==(const FieldScalar& o) const;
    std::string str() const;

private:
    Field f_;
    Rat q_;      // rational payload
    long r_ = 0; // GF(p) payload
};

}  // namespace covermonoid
