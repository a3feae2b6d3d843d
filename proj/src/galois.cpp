#include "ebw/galois.hpp"

#include <map>
#include <string>

#include "ebw/errors.hpp"

namespace ebw::designs {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// reduction polynomials, coefficients low to high degree, monic
// GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+x+2, GF(16): x^4+x+1,
// GF(25): x^2+x+2, GF(27): x^3+2x+1
const std::map<int, std::pair<int, std::vector<int>>>& prime_power_table() {
    static const std::map<int, std::pair<int, std::vector<int>>> table = {
        {4, {2, {1, 1, 1}}},
        {8, {2, {1, 1, 0, 1}}},
        {9, {3, {2, 1, 1}}},
        {16, {2, {1, 1, 0, 0, 1}}},
        {25, {5, {2, 1, 1}}},
        {27, {3, {1, 2, 0, 1}}},
    };
    return table;
}

std::vector<int> digits(int a, int p, int deg) {
    std::vector<int> d(deg, 0);
    for (int i = 0; i < deg; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

} // namespace

GaloisField::GaloisField(int q) : q_(q) {
    if (is_prime(q)) {
        p_ = q;
        deg_ = 1;
        mul_.resize(q * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) mul_[a * q + b] = (a * b) % q;
    } else {
        auto it = prime_power_table().find(q);
        if (it == prime_power_table().end())
            throw AdmissibilityError("unsupported field order " + std::to_string(q));
        p_ = it->second.first;
        const std::vector<int>& poly = it->second.second;
        deg_ = static_cast<int>(poly.size()) - 1;

        mul_.resize(q * q);
        for (int a = 0; a < q; ++a) {
            std::vector<int> da = digits(a, p_, deg_);
            for (int b = 0; b < q; ++b) {
                std::vector<int> db = digits(b, p_, deg_);
                std::vector<int> prod(2 * deg_ - 1, 0);
                for (int i = 0; i < deg_; ++i)
                    for (int j = 0; j < deg_; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                // reduce modulo the monic polynomial
                for (int i = static_cast<int>(prod.size()) - 1; i >= deg_; --i) {
                    int coeff = prod[i];
                    if (coeff == 0) continue;
                    prod[i] = 0;
                    for (int j = 0; j < deg_; ++j) {
                        int k = i - deg_ + j;
                        prod[k] = ((prod[k] - coeff * poly[j]) % p_ + p_) % p_;
                    }
                }
                prod.resize(deg_);
                mul_[a * q + b] = undigits(prod, p_);
            }
        }
    }
    inv_.assign(q, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = b;
                break;
            }
}

int GaloisField::add(int a, int b) const {
    if (deg_ == 1) return (a + b) % p_;
    int r = 0, mul = 1;
    while (a > 0 || b > 0) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

int GaloisField::sub(int a, int b) const {
    if (deg_ == 1) return ((a - b) % p_ + p_) % p_;
    int r = 0, mul = 1;
    while (a > 0 || b > 0) {
        r += (((a % p_ - b % p_) % p_ + p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

int GaloisField::inv(int a) const {
    if (a == 0) throw AdmissibilityError("inverse of zero");
    return inv_[a];
}

} // namespace ebw::designs
