#pragma once

#include <memory>
#include <vector>

#include "blockset/common.hpp"

namespace blockset {

// GF(p^k) with elements encoded as integers in [0, q): the code of the
// polynomial (c0, ..., c_{k-1}) is sum c_i p^i. The encoding gives a total
// order used for canonical forms; it has no algebraic meaning.
class Field {
public:
    Field(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int primitive() const { return primitive_; }
    // Monic modulus, constant term first, length k+1. For k = 1 this is the
    // placeholder x (coefficients [0, 1]) and arithmetic is plain mod p.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;           // throws input_error on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long e) const;
    int dlog(int a) const;          // throws input_error on 0
    int exp(int e) const;           // primitive^e, e reduced mod q-1
    int frobenius(int a) const { return pow(a, p_); }

    bool operator==(const Field& o) const
    {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    int primitive_ = 0;
    std::vector<int> exp_;   // q-1 entries
    std::vector<int> log_;   // q entries, log_[0] = -1
    std::vector<int> neg_;   // q entries

    int mul_nocache(int a, int b) const;
};

using FieldPtr = std::shared_ptr<const Field>;

// Deterministic field: modulus is the lexicographically least monic
// irreducible of degree k (coefficients compared constant term first),
// primitive is the least element code generating GF(q)*.
FieldPtr make_field(int p, int k);

struct FieldElement {
    const Field* field = nullptr;
    int code = 0;

    bool operator==(const FieldElement& o) const
    {
        return code == o.code && *field == *o.field;
    }
};

FieldElement add(FieldElement x, FieldElement y);
FieldElement mul(FieldElement x, FieldElement y);
FieldElement neg(FieldElement x);
FieldElement inv(FieldElement x);
int dlog(FieldElement x);

bool is_prime(int n);

}  // namespace blockset
