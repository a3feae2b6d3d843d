#pragma once

#include <vector>

namespace ebw::designs {

// small finite field; elements are 0..q-1, encoded as base-p digit strings of
// polynomial coefficients (plain residues when q is prime).  Prime powers are
// supported for q in {4, 8, 9, 16, 25, 27} via fixed irreducible polynomials.
class GaloisField {
public:
    explicit GaloisField(int q);   // AdmissibilityError if unsupported

    int q() const { return q_; }
    int p() const { return p_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;          // AdmissibilityError on 0

private:
    int q_, p_, deg_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

} // namespace ebw::designs
