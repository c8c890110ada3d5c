#pragma once

#include <map>
#include <string>
#include <vector>

#include "cluster/int_scalar.hpp"
#include "cluster/var_registry.hpp"

namespace cluster {

// Exact multivariate Laurent polynomial with integer coefficients.
// Terms map a dense exponent vector to a nonzero coefficient.  The poly
// itself does not know which slots are invertible; registry-aware checks
// (Laurent exponents only on invertible slots, substitution images of
// invertible vars must be unit monomials) live in the calling layers.
class MultiPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Int>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Int& c);
    static MultiPoly variable(std::size_t nvars, std::size_t k, int e = 1);
    static MultiPoly monomial(std::size_t nvars, const Exps& e, const Int& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Single term with coefficient +1 or -1; what a variable image must be
    // for Laurent substitution to stay exact.
    bool is_unit_monomial() const;

    Int constant_term() const;
    bool has_negative_exponent(std::size_t var) const;
    bool involves(std::size_t var) const;
    int degree_in(std::size_t var) const; // max exponent, 0 if absent

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(long long e) const; // e < 0 only for unit monomials
    MultiPoly inverse_monomial() const;

    // d/dx_k with the signed Laurent rule: d(x^e)/dx = e x^{e-1} for any e.
    MultiPoly derivative(std::size_t k) const;

    // images[i] is the image of slot i, all over a common target slot count.
    // Slots carrying a negative exponent anywhere must map to unit monomials.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Substitute a single slot, identity elsewhere (same slot count).
    MultiPoly substitute_var(std::size_t var, const MultiPoly& image) const;

    // Evaluate mod p; slots with negative exponents need invertible values.
    long long evaluate_mod(const std::vector<long long>& point, long long p) const;

    // Canonical text form: terms in descending lex order of exponent vectors,
    // e.g. "z1*z2 - c1^-1 + 2".
    std::string to_string(const VarRegistry& reg) const;

private:
    void add_term(const Exps& e, const Int& c);

    std::size_t nvars_;
    TermMap terms_;
};

} // namespace cluster
