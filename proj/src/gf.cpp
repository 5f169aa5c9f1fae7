#include "blockset/gf.hpp"

#include <algorithm>

namespace blockset {

bool is_prime(int n)
{
    if (n < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<int> code_to_poly(int code, int p, int k)
{
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return c;
}

int poly_to_code(const std::vector<int>& c, int p)
{
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        code = code * p + c[static_cast<std::size_t>(i)];
    return code;
}

// Product of two polynomials (coefficients mod p), reduced mod the monic
// modulus f (constant first, degree k).
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& f, int p)
{
    int k = static_cast<int>(f.size()) - 1;
    std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        if (!a[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < k; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[static_cast<std::size_t>(d)];
        if (!c) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        // x^d = x^(d-k) * (x^k) and x^k = -sum_{i<k} f_i x^i
        for (int i = 0; i < k; ++i) {
            int& t = prod[static_cast<std::size_t>(d - k + i)];
            t = (t + (p - f[static_cast<std::size_t>(i)] % p) * c) % p;
        }
    }
    prod.resize(static_cast<std::size_t>(k));
    return prod;
}

std::vector<int> poly_powmod(std::vector<int> base, long e, const std::vector<int>& f, int p)
{
    int k = static_cast<int>(f.size()) - 1;
    std::vector<int> r(static_cast<std::size_t>(k), 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p)
{
    auto deg = [](const std::vector<int>& x) {
        for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i)
            if (x[static_cast<std::size_t>(i)]) return i;
        return -1;
    };
    auto inv_mod_p = [p](int a) {
        int r = 1;
        for (int e = p - 2; e > 0; e >>= 1) {
            // tiny p, plain square-and-multiply
            if (e & 1) r = r * a % p;
            a = a * a % p;
        }
        return r;
    };
    while (deg(b) >= 0) {
        int db = deg(b);
        int lead_inv = inv_mod_p(b[static_cast<std::size_t>(db)]);
        // a mod b
        for (int da = deg(a); da >= db; da = deg(a)) {
            int c = a[static_cast<std::size_t>(da)] * lead_inv % p;
            if (c)
                for (int i = 0; i <= db; ++i) {
                    int& t = a[static_cast<std::size_t>(da - db + i)];
                    t = (t + (p - c * b[static_cast<std::size_t>(i)] % p)) % p;
                }
            else
                a[static_cast<std::size_t>(da)] = 0;
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_is_irreducible(const std::vector<int>& f, int p)
{
    int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) == 1 for primes r | k.
    std::vector<int> x(static_cast<std::size_t>(k), 0);
    x[1] = 1;
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    auto xpk = poly_powmod(x, pk, f, p);
    if (xpk != x) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime(r)) continue;
        long e = 1;
        for (int i = 0; i < k / r; ++i) e *= p;
        auto g = poly_powmod(x, e, f, p);
        // g - x
        g[1] = (g[1] + p - 1) % p;
        auto d = poly_gcd(f, g, p);
        int dd = -1;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
            if (d[static_cast<std::size_t>(i)]) { dd = i; break; }
        if (dd != 0) return false;
    }
    return true;
}

std::vector<int> prime_factors(int n)
{
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k)
{
    require(is_prime(p), "make_field: p = " + std::to_string(p) + " is not prime");
    require(k >= 1, "make_field: k must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        require(q <= 65536, "make_field: p^k exceeds 2^16");
    }
    q_ = static_cast<int>(q);

    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        // Least monic irreducible, coefficients compared constant term first:
        // enumerate (c0,...,c_{k-1}) with c_{k-1} as the fastest digit.
        std::vector<int> c(static_cast<std::size_t>(k), 0);
        bool found = false;
        while (!found) {
            std::vector<int> f = c;
            f.push_back(1);
            if (poly_is_irreducible(f, p)) {
                modulus_ = f;
                found = true;
                break;
            }
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1)
                c[static_cast<std::size_t>(i--)] = 0;
            check_internal(i >= 0, "no irreducible polynomial found");
            ++c[static_cast<std::size_t>(i)];
        }
    }

    neg_.resize(static_cast<std::size_t>(q_));
    for (int a = 0; a < q_; ++a) {
        auto ca = code_to_poly(a, p_, k_);
        for (auto& x : ca) x = (p_ - x) % p_;
        neg_[static_cast<std::size_t>(a)] = poly_to_code(ca, p_);
    }

    // Least generator of GF(q)*.
    auto rs = prime_factors(q_ - 1);
    for (int g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
        bool gen = true;
        for (int r : rs) {
            int t = 1, base = g;
            long e = (q_ - 1) / r;
            while (e > 0) {
                if (e & 1) t = mul_nocache(t, base);
                base = mul_nocache(base, base);
                e >>= 1;
            }
            if (t == 1) { gen = false; break; }
        }
        if (gen) { primitive_ = g; break; }
    }
    check_internal(primitive_ != 0 || q_ == 2, "no primitive element found");
    if (q_ == 2) primitive_ = 1;

    exp_.resize(static_cast<std::size_t>(q_ - 1));
    log_.assign(static_cast<std::size_t>(q_), -1);
    int x = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        exp_[static_cast<std::size_t>(e)] = x;
        log_[static_cast<std::size_t>(x)] = e;
        x = mul_nocache(x, primitive_);
    }
}

int Field::mul_nocache(int a, int b) const
{
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return a * b % p_;
    auto r = poly_mulmod(code_to_poly(a, p_, k_), code_to_poly(b, p_, k_), modulus_, p_);
    return poly_to_code(r, p_);
}

int Field::add(int a, int b) const
{
    if (k_ == 1) return (a + b) % p_;
    int code = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        code += (a % p_ + b % p_) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return code;
}

int Field::neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const
{
    if (a == 0 || b == 0) return 0;
    int e = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[static_cast<std::size_t>(e)];
}

int Field::inv(int a) const
{
    require(a != 0, "inv(0) is undefined");
    int e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<std::size_t>(e)];
}

int Field::pow(int a, long e) const
{
    if (a == 0) {
        require(e > 0, "0^e needs e > 0");
        return 0;
    }
    long le = log_[static_cast<std::size_t>(a)] % (q_ - 1);
    long r = (le * (e % (q_ - 1))) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[static_cast<std::size_t>(r)];
}

int Field::dlog(int a) const
{
    require(a != 0, "dlog(0) is undefined");
    return log_[static_cast<std::size_t>(a)];
}

int Field::exp(int e) const
{
    int m = e % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[static_cast<std::size_t>(m)];
}

FieldPtr make_field(int p, int k) { return std::make_shared<Field>(p, k); }

namespace {
void same_field(FieldElement x, FieldElement y)
{
    require(*x.field == *y.field, "operands belong to different fields");
}
}  // namespace

FieldElement add(FieldElement x, FieldElement y)
{
    same_field(x, y);
    return {x.field, x.field->add(x.code, y.code)};
}

FieldElement mul(FieldElement x, FieldElement y)
{
    same_field(x, y);
    return {x.field, x.field->mul(x.code, y.code)};
}

FieldElement neg(FieldElement x) { return {x.field, x.field->neg(x.code)}; }
FieldElement inv(FieldElement x) { return {x.field, x.field->inv(x.code)}; }
int dlog(FieldElement x) { return x.field->dlog(x.code); }

}  // namespace blockset
