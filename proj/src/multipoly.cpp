#include "cluster/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cluster {

MultiPoly MultiPoly::constant(std::size_t nvars, const Int& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exps(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k, int e) {
    if (k >= nvars) throw std::invalid_argument("MultiPoly::variable: slot out of range");
    MultiPoly p(nvars);
    if (e != 0) {
        Exps ex(nvars, 0);
        ex[k] = e;
        p.terms_.emplace(std::move(ex), Int(1));
    } else {
        p.terms_.emplace(Exps(nvars, 0), Int(1));
    }
    return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Exps& e, const Int& c) {
    if (e.size() != nvars) throw std::invalid_argument("MultiPoly::monomial: exponent size mismatch");
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

Int MultiPoly::constant_term() const {
    auto it = terms_.find(Exps(nvars_, 0));
    return it == terms_.end() ? Int(0) : it->second;
}

bool MultiPoly::has_negative_exponent(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] < 0) return true;
    return false;
}

bool MultiPoly::involves(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: slot count mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: slot count mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: slot count mismatch in *");
    MultiPoly r(nvars_);
    Exps e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::inverse_monomial() const {
    if (!is_unit_monomial())
        throw std::invalid_argument("MultiPoly: inverse of a non-unit-monomial");
    const auto& [e, c] = *terms_.begin();
    Exps inv(e);
    for (auto& x : inv) x = -x;
    return monomial(nvars_, inv, c); // c is +-1, self inverse
}

MultiPoly MultiPoly::pow(long long e) const {
    if (e < 0) return inverse_monomial().pow(-e);
    MultiPoly r = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t k) const {
    if (k >= nvars_) throw std::invalid_argument("MultiPoly::derivative: slot out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exps d(e);
        d[k] -= 1;
        r.add_term(d, c * e[k]);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("MultiPoly::substitute: image count mismatch");
    std::size_t target = nvars_;
    if (!images.empty()) target = images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target)
            throw std::invalid_argument("MultiPoly::substitute: images over different slot counts");
    for (std::size_t v = 0; v < nvars_; ++v)
        if (has_negative_exponent(v) && !images[v].is_unit_monomial())
            throw std::invalid_argument(
                "MultiPoly::substitute: negative power of a variable whose image is not a unit monomial");
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(target, c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (e[v] != 0) t *= images[v].pow(e[v]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute_var(std::size_t var, const MultiPoly& image) const {
    if (var >= nvars_) throw std::invalid_argument("MultiPoly::substitute_var: slot out of range");
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v)
        images.push_back(v == var ? image : variable(nvars_, v));
    return substitute(images);
}

namespace {

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("MultiPoly::evaluate_mod: zero raised to a negative power");
    return mod_pow(a, p - 2, p); // p prime
}

} // namespace

long long MultiPoly::evaluate_mod(const std::vector<long long>& point, long long p) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("MultiPoly::evaluate_mod: point size mismatch");
    if (p < 2) throw std::invalid_argument("MultiPoly::evaluate_mod: modulus must be a prime >= 2");
    long long acc = 0;
    for (const auto& [e, c] : terms_) {
        long long t = static_cast<long long>(c % p);
        if (t < 0) t += p;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            long long base = e[v] > 0 ? point[v] % p : mod_inv(point[v], p);
            t = t * mod_pow(base, e[v] > 0 ? e[v] : -static_cast<long long>(e[v]), p) % p;
        }
        acc = (acc + t) % p;
    }
    return acc;
}

std::string MultiPoly::to_string(const VarRegistry& reg) const {
    if (reg.size() != nvars_)
        throw std::invalid_argument("MultiPoly::to_string: registry size mismatch");
    if (terms_.empty()) return "0";

    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return a->first > b->first; // descending lex
    });

    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (any_var) vars << "*";
            vars << reg.name(v);
            if (e[v] != 1) vars << "^" << e[v];
            any_var = true;
        }
        if (!any_var) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << vars.str();
        }
    }
    return out.str();
}

} // namespace cluster
