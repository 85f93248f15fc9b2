#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "ring.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace levicore {

// Dense exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline Exponents expo_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool expo_divides(const Exponents& a, const Exponents& b) {
    // a | b as monomials
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents expo_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents expo_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Exact multivariate polynomial over the rationals. Terms live in a map from
// exponent vectors to nonzero coefficients, so equal polynomials have
// identical representations. Immutable in spirit: all operations return new
// values.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }

    static Polynomial constant(const Ring& ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(ring.arity()), 0)] = c;
        return p;
    }

    static Polynomial variable(const Ring& ring, int index) {
        if (index < 0 || index >= ring.arity()) throw InputError("variable index out of range");
        Exponents e(static_cast<std::size_t>(ring.arity()), 0);
        e[static_cast<std::size_t>(index)] = 1;
        return monomial(ring, e, 1);
    }

    static Polynomial variable(const Ring& ring, const std::string& name) {
        return variable(ring, ring.index_of(name));
    }

    static Polynomial monomial(const Ring& ring, Exponents e, const Rational& c) {
        if (static_cast<int>(e.size()) != ring.arity())
            throw InputError("exponent vector arity mismatch");
        for (int x : e)
            if (x < 0) throw InputError("negative exponent");
        Polynomial p(ring);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }

    // Constant value; zero polynomial evaluates to 0.
    Rational constant_value() const {
        if (!is_constant()) throw InputError("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;  // -1 for the zero polynomial
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[static_cast<std::size_t>(var)] > 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial r(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(expo_add(ea, eb), ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        Polynomial r(a.ring_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    Polynomial pow(int n) const {
        if (n < 0) throw InputError("negative power");
        Polynomial acc = constant(ring_, 1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Arbitrary but canonical total order, used for deduplication.
    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

    Polynomial differentiate(int var) const {
        if (var < 0 || var >= ring_.arity()) throw InputError("unknown variable index");
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exponents d = e;
            d[static_cast<std::size_t>(var)] = k - 1;
            r.add_term(d, c * k);
        }
        return r;
    }
    Polynomial differentiate(const std::string& var) const {
        return differentiate(ring_.index_of(var));
    }

    // The conjugation involution of a complexified ring: swaps each variable
    // with its partner, fixes rational coefficients.
    Polynomial bar() const {
        if (!ring_.has_involution()) throw InputError("ring has no involution");
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) {
            Exponents s(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                int p = ring_.partner(static_cast<int>(i));
                s[i] = p >= 0 ? e[static_cast<std::size_t>(p)] : e[i];
            }
            r.add_term(s, c);
        }
        return r;
    }

    bool is_hermitian() const { return bar() == *this; }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != ring_.arity())
            throw InputError("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= rational_pow(point[i], static_cast<unsigned>(e[i]));
            acc += t;
        }
        return acc;
    }

    // p composed with the linear change of variables x_i -> sum_j M[i][j] x_j.
    // The matrix must be square of the ring arity and invertible.
    Polynomial substitute_linear(const std::vector<std::vector<Rational>>& m) const;

    // Image of this polynomial in another ring; var_map[i] is the index in
    // `target` of our variable i.
    Polynomial lift(const Ring& target, const std::vector<int>& var_map) const {
        Polynomial r(target);
        for (const auto& [e, c] : terms_) {
            Exponents t(static_cast<std::size_t>(target.arity()), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                t[static_cast<std::size_t>(var_map[i])] = e[i];
            }
            r.add_term(t, c);
        }
        return r;
    }

    // Positive rational c such that p/c has coprime integer coefficients.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Integer g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(c)));
            l = boost::multiprecision::lcm(l, denominator(c));
        }
        return Rational(g, l);
    }

    // p divided by its content, sign fixed so the highest stored term is
    // positive. Canonical representative of {c*p : c in Q, c != 0}.
    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        if (terms_.rbegin()->second < 0) c = -c;
        Polynomial r(ring_);
        for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
        return r;
    }

    std::string str() const;

  private:
    void require_same_ring(const Polynomial& o) const {
        if (!(ring_ == o.ring_)) throw InputError("polynomial ring mismatch");
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Ring ring_;
    TermMap terms_;
};

inline Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Rational>>& m) const {
    int n = ring_.arity();
    if (static_cast<int>(m.size()) != n) throw InputError("substitution matrix arity mismatch");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw InputError("substitution matrix not square");

    // Exact singularity check by Gaussian elimination.
    {
        auto a = m;
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int pivot = -1;
            for (int r = rank; r < n; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
            for (int r = 0; r < n; ++r) {
                if (r == rank) continue;
                const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                   a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
                if (f == 0) continue;
                for (int c2 = 0; c2 < n; ++c2)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                        f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
            }
            ++rank;
        }
        if (rank < n) throw InputError("substitution matrix is singular");
    }

    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial img(ring_);
        for (int j = 0; j < n; ++j) {
            const Rational& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != 0) img += Polynomial::variable(ring_, j) * c;
        }
        images.push_back(img);
    }
    Polynomial result(ring_);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(ring_, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        result += t;
    }
    return result;
}

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent vector first: a stable, human-friendly ordering.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = ring_.variable(static_cast<int>(i));
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(f);
        }
        if (factors.empty()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace levicore
