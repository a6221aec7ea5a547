#include "pairsec/intpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pairsec {

double log2_abs(const Integer& n) {
    if (n == 0) return -1e300;
    long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log2(std::fabs(d)) + static_cast<double>(exp2);
}

UniPoly::UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UniPoly UniPoly::from_desc(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long v : coeffs) c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& UniPoly::coeff(int i) const {
    static const Integer zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Integer& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Integer UniPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Integer& k) const {
    std::vector<Integer> r = c_;
    for (auto& v : r) v *= k;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    if (d.is_zero()) throw std::logic_error("division by zero polynomial");
    if (is_zero()) return UniPoly();
    if (degree() < d.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Integer> rem = c_;
    std::vector<Integer> q(degree() - d.degree() + 1, Integer(0));
    for (int i = degree(); i >= d.degree(); --i) {
        Integer& top = rem[i];
        if (top == 0) continue;
        Integer qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (r != 0) throw std::logic_error("inexact polynomial division");
        q[i - d.degree()] = qc;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= qc * d.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::logic_error("inexact polynomial division");
    return UniPoly(std::move(q));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& v = c_[i];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Integer a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void BiPoly::set(int dx, int dt, const Integer& v) {
    if (v == 0)
        c_.erase({dx, dt});
    else
        c_[{dx, dt}] = v;
}

void BiPoly::add(int dx, int dt, const Integer& v) {
    auto key = std::make_pair(dx, dt);
    auto it = c_.find(key);
    if (it == c_.end()) {
        if (v != 0) c_[key] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
}

UniPoly BiPoly::coeff_x(int j) const {
    std::vector<Integer> c;
    for (const auto& [k, v] : c_) {
        if (k.first != j) continue;
        if (static_cast<int>(c.size()) <= k.second) c.resize(k.second + 1, Integer(0));
        c[k.second] = v;
    }
    return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::coeffs_x() const {
    int d = deg_x();
    std::vector<UniPoly> r;
    for (int j = 0; j <= d; ++j) r.push_back(coeff_x(j));
    return r;
}

Integer BiPoly::eval(const Integer& x, const Integer& t) const {
    Integer acc = 0;
    for (const auto& [k, v] : c_) {
        Integer term = v;
        Integer xp, tp;
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), k.first);
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), k.second);
        acc += term * xp * tp;
    }
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.c_) r.add(k.first, k.second, v);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_)
            r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BiPoly BiPoly::operator*(const Integer& k) const {
    BiPoly r;
    if (k == 0) return r;
    for (const auto& [key, v] : c_) r.c_[key] = v * k;
    return r;
}

BiPoly BiPoly::from_x(const UniPoly& f) {
    BiPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.set(i, 0, f.coeff(i));
    return r;
}

BiPoly BiPoly::from_t(const UniPoly& f) {
    BiPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.set(0, i, f.coeff(i));
    return r;
}

BiPoly BiPoly::var_x() {
    BiPoly r;
    r.set(1, 0, 1);
    return r;
}

BiPoly BiPoly::var_t() {
    BiPoly r;
    r.set(0, 1, 1);
    return r;
}

BiPoly BiPoly::constant(const Integer& v) {
    BiPoly r;
    r.set(0, 0, v);
    return r;
}

BiPoly BiPoly::compose(const UniPoly& p, const BiPoly& g) {
    BiPoly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * g;
        acc.add(0, 0, p.coeff(i));
    }
    return acc;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [k, v] = *it;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Integer a = abs(v);
        bool need_star = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) {
            os << a.get_str();
            need_star = true;
        }
        if (k.first > 0) {
            if (need_star) os << "*";
            os << "x";
            if (k.first > 1) os << "^" << k.first;
            need_star = true;
        }
        if (k.second > 0) {
            if (need_star) os << "*";
            os << "t";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bareiss fraction-free elimination, generic over an integral domain.

namespace {

template <typename T>
struct DomainOps;

template <>
struct DomainOps<Integer> {
    static bool is_zero(const Integer& v) { return v == 0; }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }
    static Integer sub(const Integer& a, const Integer& b) { return a - b; }
    static Integer divexact(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer one() { return Integer(1); }
};

template <>
struct DomainOps<UniPoly> {
    static bool is_zero(const UniPoly& v) { return v.is_zero(); }
    static UniPoly mul(const UniPoly& a, const UniPoly& b) { return a * b; }
    static UniPoly sub(const UniPoly& a, const UniPoly& b) { return a - b; }
    static UniPoly divexact(const UniPoly& a, const UniPoly& b) { return a.divexact(b); }
    static UniPoly one() { return UniPoly{1}; }
};

// Determinant of a square matrix by Bareiss. Rows are swapped as needed; the
// division at each step is exact in the domain.
template <typename T>
T bareiss_det(std::vector<std::vector<T>> m) {
    using D = DomainOps<T>;
    const int n = static_cast<int>(m.size());
    if (n == 0) return D::one();
    int sign = 1;
    T prev = D::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (D::is_zero(m[k][k])) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!D::is_zero(m[i][k])) {
                    piv = i;
                    break;
                }
            if (piv < 0) return T{};  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T num = D::sub(D::mul(m[i][j], m[k][k]), D::mul(m[i][k], m[k][j]));
                m[i][j] = D::divexact(num, prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = D::sub(T{}, det);
    return det;
}

template <typename T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f, const std::vector<T>& g) {
    // f, g ascending coefficient vectors, degrees = size-1 >= 0
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    const int n = df + dg;
    std::vector<std::vector<T>> m(n, std::vector<T>(n));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) m[i][i + j] = f[df - j];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = g[dg - j];
    return m;
}

Integer power(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

Integer resultant_uni(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant_uni: zero polynomial");
    const int df = f.degree(), dg = g.degree();
    if (df == 0) return power(f.coeff(0), dg);
    if (dg == 0) return power(g.coeff(0), df);
    return bareiss_det(sylvester(f.coeffs(), g.coeffs()));
}

UniPoly resultant_x(const BiPoly& phi, const BiPoly& f) {
    const int dp = phi.deg_x(), df = f.deg_x();
    if (phi.is_zero() || f.is_zero())
        throw std::invalid_argument("resultant_x: zero polynomial");
    if (dp <= 0 && df <= 0)
        throw std::invalid_argument("resultant_x: both inputs constant in x");
    auto pc = phi.coeffs_x();
    auto fc = f.coeffs_x();
    if (dp <= 0) {
        // Res(c(t), f) = c(t)^deg_x(f)
        UniPoly r{1};
        for (int i = 0; i < df; ++i) r = r * pc[0];
        return r;
    }
    if (df <= 0) {
        UniPoly r{1};
        for (int i = 0; i < dp; ++i) r = r * fc[0];
        return r;
    }
    return bareiss_det(sylvester(pc, fc));
}

// ---------------------------------------------------------------------------
// Irreducibility over F_p via gcd(x^(p^i) - x, f) for i <= deg(f)/2.

namespace {

using ModPoly = std::vector<Integer>;  // ascending, coeffs in [0,p)

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_reduce(const UniPoly& f, const Integer& p) {
    ModPoly r;
    for (int i = 0; i <= f.degree(); ++i) {
        Integer c = f.coeff(i) % p;
        if (c < 0) c += p;
        r.push_back(c);
    }
    mp_trim(r);
    return r;
}

// a * b mod (m, p); m monic of degree d
ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    const int d = static_cast<int>(m.size()) - 1;
    ModPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& v : r) v %= p;
    for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        Integer c = r[i] % p;
        if (c == 0) continue;
        for (int j = 0; j < d; ++j) {
            r[i - d + j] = (r[i - d + j] - c * m[j]) % p;
            if (r[i - d + j] < 0) r[i - d + j] += p;
        }
        r[i] = 0;
    }
    r.resize(std::min<size_t>(r.size(), d));
    for (auto& v : r) {
        v %= p;
        if (v < 0) v += p;
    }
    mp_trim(r);
    return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, const Integer& p) {
    while (!b.empty()) {
        // a mod b
        Integer inv;
        if (!mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t()))
            throw std::invalid_argument("is_irreducible_mod_p: p is composite");
        const int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
            Integer c = a.back() * inv % p;
            const int da = static_cast<int>(a.size()) - 1;
            if (c != 0)
                for (int j = 0; j <= db; ++j) {
                    a[da - db + j] = (a[da - db + j] - c * b[j]) % p;
                    if (a[da - db + j] < 0) a[da - db + j] += p;
                }
            a.pop_back();
            mp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const UniPoly& f, const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw std::invalid_argument("is_irreducible_mod_p: p is composite");
    ModPoly fm = mp_reduce(f, p);
    if (fm.empty()) throw std::invalid_argument("is_irreducible_mod_p: f vanishes mod p");
    const int d = static_cast<int>(fm.size()) - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    // make monic
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), fm.back().get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("is_irreducible_mod_p: p is composite");
    for (auto& v : fm) v = v * inv % p;

    // Frobenius iteration: xp_i = (xp_{i-1})^p mod (f, p)
    ModPoly frob{Integer(0), Integer(1)};
    for (int i = 1; i <= d / 2; ++i) {
        // raise to p-th power by exponentiation of the current element
        ModPoly cur = frob;
        ModPoly acc{Integer(1)};
        const size_t nbits = mpz_sizeinbase(p.get_mpz_t(), 2);
        for (size_t b = nbits; b-- > 0;) {
            acc = mp_mulmod(acc, acc, fm, p);
            if (mpz_tstbit(p.get_mpz_t(), b)) acc = mp_mulmod(acc, cur, fm, p);
        }
        frob = acc;
        // gcd(x^(p^i) - x, f)
        ModPoly diff = frob;
        if (diff.size() < 2) diff.resize(2, Integer(0));
        diff[1] = (diff[1] - 1) % p;
        if (diff[1] < 0) diff[1] += p;
        mp_trim(diff);
        ModPoly g = mp_gcd(fm, diff, p);
        if (static_cast<int>(g.size()) - 1 > 0) return false;
    }
    return true;
}

Integer eval(const UniPoly& f, const Integer& x) { return f.eval(x); }

Integer eval_bi(const BiPoly& f, const Integer& x, const Integer& t) { return f.eval(x, t); }

}  // namespace pairsec
