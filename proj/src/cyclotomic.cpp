#include "gbk/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gbk/errors.hpp"

namespace gbk {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string t = s;
    if (t[0] == '+') t = t.substr(1);
    auto ok_int = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '-') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = (slash == std::string::npos) ? t : t.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : t.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den))
        throw InputError("bad rational literal: " + s);
    Rational q;
    q.get_num() = mpz_class(num);
    q.get_den() = mpz_class(den);
    if (q.get_den() == 0) throw InputError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

long g_max_order = 0; // 0 = not initialized

long read_env_max_order() {
    const char* e = std::getenv("GBK_MAX_CYCLOTOMIC_ORDER");
    if (!e) return 360;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (!end || *end != '\0' || v < 1) return 360;
    return v;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<mpz_class>> g_phi_cache;

// Exact division of integer polynomials, divisor monic. Ascending coeffs.
std::vector<mpz_class> div_exact(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r = a;
    long db = (long)b.size() - 1;
    long dr = (long)r.size() - 1;
    std::vector<mpz_class> q(dr - db + 1, mpz_class(0));
    for (long d = dr; d >= db; --d) {
        if (r[d] == 0) continue;
        mpz_class lead = r[d];
        q[d - db] = lead;
        for (long i = 0; i <= db; ++i) r[d - db + i] -= lead * b[i];
    }
    for (const auto& c : r)
        if (c != 0) throw VerificationError("inexact polynomial division");
    return q;
}

// In-place reduction of an ascending-coefficient rational polynomial modulo
// the (monic) order-n cyclotomic polynomial; truncates to length phi(n).
void reduce_mod_phi(std::vector<Rational>& poly, long n) {
    const std::vector<mpz_class>& phi = cyclotomic_polynomial(n);
    long deg_phi = (long)phi.size() - 1;
    for (long d = (long)poly.size() - 1; d >= deg_phi; --d) {
        if (poly[d] == 0) continue;
        Rational lead = poly[d];
        for (long i = 0; i <= deg_phi; ++i)
            poly[d - deg_phi + i] -= lead * Rational(phi[i]);
    }
    poly.resize(deg_phi);
    poly.shrink_to_fit();
}

long poly_degree(const std::vector<Rational>& p) {
    for (long d = (long)p.size() - 1; d >= 0; --d)
        if (p[d] != 0) return d;
    return -1;
}

// (quotient, remainder) of rational polynomials, divisor nonzero.
void poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b,
                 std::vector<Rational>& q_out, std::vector<Rational>& r_out) {
    long db = poly_degree(b);
    long da = poly_degree(a);
    std::vector<Rational> q(std::max<long>(da - db + 1, 1), Rational(0));
    while (da >= db && da >= 0) {
        Rational f = a[da] / b[db];
        q[da - db] = f;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        da = poly_degree(a);
    }
    q_out = std::move(q);
    r_out = std::move(a);
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    long da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return {Rational(0)};
    std::vector<Rational> r(da + db + 1, Rational(0));
    for (long i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j <= db; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::vector<Rational> poly_sub(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

} // namespace

long max_cyclotomic_order() {
    if (g_max_order == 0) g_max_order = read_env_max_order();
    return g_max_order;
}

void set_max_cyclotomic_order(long n) {
    if (n < 1) throw InputError("max cyclotomic order must be positive");
    g_max_order = n;
}

long euler_phi(long n) {
    if (n < 1) throw InputError("euler_phi needs a positive argument");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n < 1) throw InputError("cyclotomic polynomial order must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d. The helper recurses through
    // divisors under the lock already held above.
    struct Helper {
        static const std::vector<mpz_class>& get(long m) {
            auto found = g_phi_cache.find(m);
            if (found != g_phi_cache.end()) return found->second;
            std::vector<mpz_class> p(m + 1, mpz_class(0));
            p[0] = -1;
            p[m] = 1;
            for (long d = 1; d < m; ++d) {
                if (m % d != 0) continue;
                p = div_exact(p, get(d));
            }
            return g_phi_cache.emplace(m, std::move(p)).first->second;
        }
    };
    return Helper::get(n);
}

Cyclotomic::Cyclotomic() : order_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long v) : order_(1), c_(1, Rational(v)) {}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), c_(1, r) {}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw InputError("root_of_unity order must be positive");
    if (n > max_cyclotomic_order())
        throw InputError("root_of_unity order " + std::to_string(n) +
                         " exceeds the cyclotomic order cap " +
                         std::to_string(max_cyclotomic_order()));
    long e = ((k % n) + n) % n;
    std::vector<Rational> poly(e + 1, Rational(0));
    poly[e] = Rational(1);
    reduce_mod_phi(poly, n);
    Cyclotomic z;
    z.order_ = n;
    z.c_ = std::move(poly);
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    if (order > max_cyclotomic_order())
        throw InputError("cyclotomic order " + std::to_string(order) +
                         " exceeds the cyclotomic order cap " +
                         std::to_string(max_cyclotomic_order()));
    if ((long)coeffs.size() != euler_phi(order))
        throw InputError("cyclotomic coefficient vector has length " +
                         std::to_string(coeffs.size()) + ", expected phi(" +
                         std::to_string(order) + ") = " +
                         std::to_string(euler_phi(order)));
    Cyclotomic z;
    z.order_ = order;
    z.c_ = std::move(coeffs);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational(Rational* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

Cyclotomic Cyclotomic::lifted_to(long order) const {
    if (order == order_) return *this;
    if (order % order_ != 0)
        throw InputError("cyclotomic lift target must be a multiple of the current order");
    if (order > max_cyclotomic_order())
        throw InputError("cyclotomic order " + std::to_string(order) +
                         " exceeds the cyclotomic order cap " +
                         std::to_string(max_cyclotomic_order()));
    long step = order / order_;
    std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    reduce_mod_phi(poly, order);
    Cyclotomic z;
    z.order_ = order;
    z.c_ = std::move(poly);
    return z;
}

namespace {
long common_order(long a, long b) {
    long l = std::lcm(a, b);
    if (l > max_cyclotomic_order())
        throw InputError("cyclotomic order overflow: lcm(" + std::to_string(a) +
                         ", " + std::to_string(b) + ") = " + std::to_string(l) +
                         " exceeds the cap " + std::to_string(max_cyclotomic_order()));
    return l;
}
} // namespace

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto& c : z.c_) c = -c;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ == o.order_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    long l = common_order(order_, o.order_);
    *this = lifted_to(l);
    Cyclotomic t = o.lifted_to(l);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += t.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order_ == o.order_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    long l = common_order(order_, o.order_);
    *this = lifted_to(l);
    Cyclotomic t = o.lifted_to(l);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= t.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (order_ == 1 && o.order_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    long l = common_order(order_, o.order_);
    Cyclotomic a = lifted_to(l);
    Cyclotomic b = o.lifted_to(l);
    std::vector<Rational> conv(2 * a.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    reduce_mod_phi(conv, l);
    order_ = l;
    c_ = std::move(conv);
    return *this;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw InputError("division by zero cyclotomic value");
    Rational r;
    if (is_rational(&r)) {
        Cyclotomic z = *this;
        z.c_.assign(z.c_.size(), Rational(0));
        z.c_[0] = 1 / r;
        return z;
    }
    // Extended Euclid in Q[x] against Phi_N: s*a + t*Phi = gcd. Phi_N is
    // irreducible over Q, so the gcd of a nonzero a with it is a constant.
    const std::vector<mpz_class>& phi_z = cyclotomic_polynomial(order_);
    std::vector<Rational> r0(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
    std::vector<Rational> r1 = c_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    while (poly_degree(r1) > 0) {
        std::vector<Rational> q, rem;
        poly_divmod(r0, r1, q, rem);
        std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_degree(r1) != 0)
        throw VerificationError("cyclotomic inverse: gcd with the minimal polynomial is not constant");
    Rational g = r1[poly_degree(r1)];
    std::vector<Rational> s = std::move(s1);
    for (auto& c : s) c /= g;
    reduce_mod_phi(s, order_);
    Cyclotomic z;
    z.order_ = order_;
    z.c_ = std::move(s);
    return z;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    *this *= o.inv();
    return *this;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) throw InputError("pow exponent must be nonnegative");
    Cyclotomic acc(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    long l = common_order(order_, o.order_);
    return lifted_to(l).c_ == o.lifted_to(l).c_;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { a *= b; return a; }
Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { a /= b; return a; }

} // namespace gbk
