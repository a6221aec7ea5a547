#ifndef PAIRSEC_INTPOLY_HPP
#define PAIRSEC_INTPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pairsec {

using Integer = mpz_class;

inline int bit_length(const Integer& n) {
    return n == 0 ? 0 : static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

// log2 of |n| as a double; -inf for zero is not needed by callers, returns a
// large negative sentinel instead.
double log2_abs(const Integer& n);

// Univariate polynomial with Integer coefficients, ascending order, trimmed.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    // coeffs given descending (degree first), the way polynomials read on paper
    static UniPoly from_desc(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
    bool is_zero() const { return c_.empty(); }
    const Integer& coeff(int i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Integer& k) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // exact division; throws std::logic_error if not divisible
    UniPoly divexact(const UniPoly& d) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Integer> c_;
};

// Sparse bivariate polynomial in (x, t).
class BiPoly {
  public:
    BiPoly() = default;

    void set(int deg_x, int deg_t, const Integer& v);
    void add(int deg_x, int deg_t, const Integer& v);
    const std::map<std::pair<int, int>, Integer>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg_x() const;
    int deg_t() const;

    // coefficient of x^j as a polynomial in t
    UniPoly coeff_x(int j) const;
    // all x-coefficients, index = x-degree, size deg_x()+1
    std::vector<UniPoly> coeffs_x() const;

    Integer eval(const Integer& x, const Integer& t) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Integer& k) const;

    static BiPoly from_x(const UniPoly& f);  // f(x), no t
    static BiPoly from_t(const UniPoly& f);  // f(t), no x
    static BiPoly var_x();
    static BiPoly var_t();
    static BiPoly constant(const Integer& v);

    // P(g) for univariate P and bivariate g, by Horner
    static BiPoly compose(const UniPoly& p, const BiPoly& g);

    std::string str() const;

  private:
    std::map<std::pair<int, int>, Integer> c_;  // (deg_x, deg_t) -> coeff
};

// Resultant via fraction-free (Bareiss) elimination on the Sylvester matrix.
// Throws std::invalid_argument on zero input.
Integer resultant_uni(const UniPoly& f, const UniPoly& g);

// Resultant with respect to x of two bivariate polynomials; result in t.
// Bareiss elimination with UniPoly entries. Throws std::invalid_argument if
// both inputs are constant in x (no elimination variable).
UniPoly resultant_x(const BiPoly& phi, const BiPoly& f);

// Irreducibility of f over F_p (p prime) by the distinct-degree gcd test.
// Throws std::invalid_argument if p is found composite or f vanishes mod p.
bool is_irreducible_mod_p(const UniPoly& f, const Integer& p);

Integer eval(const UniPoly& f, const Integer& x);
Integer eval_bi(const BiPoly& f, const Integer& x, const Integer& t);

}  // namespace pairsec

#endif
