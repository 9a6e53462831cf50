#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbk/rational.hpp"

namespace gbk {

// Maximum cyclotomic order the library will work in. Operations whose result
// would need a larger field throw InputError instead of losing exactness.
// Default 360, overridable via the environment variable
// GBK_MAX_CYCLOTOMIC_ORDER or set_max_cyclotomic_order().
long max_cyclotomic_order();
void set_max_cyclotomic_order(long n);

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree. Integer,
// monic, degree phi(n). Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// An element of Q(zeta_N) stored on the power basis 1, z, ..., z^{phi(N)-1}
// of Q[x]/Phi_N(x). Values of different orders compare and combine by lifting
// to the lcm order. Immutable in spirit: all operations return new values.
class Cyclotomic {
public:
    Cyclotomic();                                   // zero (order 1)
    explicit Cyclotomic(long v);
    explicit Cyclotomic(const Rational& r);

    // zeta_N^k, k reduced mod N.
    static Cyclotomic root_of_unity(long n, long k);

    // Validates coeffs.size() == phi(order).
    static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when the value lies in Q; the power basis makes this a coordinate
    // check. Writes the rational part through out when non-null.
    bool is_rational(Rational* out = nullptr) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    Cyclotomic inv() const;                         // throws on zero
    Cyclotomic pow(long e) const;                   // e >= 0

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Human-readable form, e.g. "0", "-1/2", "1 + 2*z12^3".
    std::string str() const;

    // Re-expresses the value at a multiple of its current order.
    Cyclotomic lifted_to(long order) const;

private:
    long order_;
    std::vector<Rational> c_;
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b);

} // namespace gbk
