#pragma once

#include "errors.hpp"
#include "parse.hpp"
#include "polynomial.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace levicore {

// Differential forms with polynomial coefficients over the coordinate frame
// of a ring. The frame covector of variable i is d(var_i); for complexified
// rings the interleaved variable order (z1, zbar1, ...) is the pinned volume
// ordering. Components are keyed by strictly increasing index tuples; zero
// components are never stored.
class KForm;
namespace detail {
KForm partial_derivative_form(const KForm& a, bool holomorphic);
}

class KForm {
  public:
    using IndexTuple = std::vector<int>;
    using Components = std::map<IndexTuple, Polynomial>;

    KForm() = default;
    KForm(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {
        if (degree_ < 0) throw InputError("negative form degree");
    }

    static KForm zero(const Ring& ring, int degree) { return KForm(ring, degree); }

    static KForm from_polynomial(const Polynomial& p) {
        KForm f(p.ring(), 0);
        if (!p.is_zero()) f.comps_[{}] = p;
        return f;
    }

    // d(var_i) as a 1-form.
    static KForm covector(const Ring& ring, int i) {
        if (i < 0 || i >= ring.arity()) throw InputError("covector index out of range");
        KForm f(ring, 1);
        f.comps_[{i}] = Polynomial::constant(ring, 1);
        return f;
    }

    static KForm one_form(const Ring& ring, const std::map<int, Polynomial>& coeffs) {
        KForm f(ring, 1);
        for (const auto& [i, p] : coeffs) {
            if (p.is_zero()) continue;
            if (!(p.ring() == ring)) throw InputError("form coefficient ring mismatch");
            f.comps_[{i}] = p;
        }
        return f;
    }

    const Ring& ring() const { return ring_; }
    int degree() const { return degree_; }
    const Components& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Polynomial coefficient(const IndexTuple& idx) const {
        auto it = comps_.find(idx);
        return it == comps_.end() ? Polynomial::zero(ring_) : it->second;
    }

    KForm operator-() const {
        KForm r(ring_, degree_);
        for (const auto& [i, p] : comps_) r.comps_[i] = -p;
        return r;
    }

    KForm& operator+=(const KForm& o) {
        require_compatible(o);
        for (const auto& [i, p] : o.comps_) add_component(i, p);
        return *this;
    }
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a += -b; }

    friend KForm operator*(const KForm& a, const Polynomial& s) {
        KForm r(a.ring_, a.degree_);
        for (const auto& [i, p] : a.comps_) {
            Polynomial q = p * s;
            if (!q.is_zero()) r.comps_[i] = q;
        }
        return r;
    }
    friend KForm operator*(const Polynomial& s, const KForm& a) { return a * s; }
    friend KForm operator*(const KForm& a, const Rational& s) {
        return a * Polynomial::constant(a.ring_, s);
    }

    friend bool operator==(const KForm& a, const KForm& b) {
        return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }
    friend bool operator<(const KForm& a, const KForm& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.comps_ < b.comps_;
    }

    std::string str() const;

  private:
    friend KForm wedge(const KForm&, const KForm&);
    friend KForm exterior_derivative(const KForm&);
    friend KForm detail::partial_derivative_form(const KForm&, bool);

    void require_compatible(const KForm& o) const {
        if (!(ring_ == o.ring_)) throw InputError("form ring mismatch");
        if (degree_ != o.degree_) throw InputError("form degree mismatch");
    }

    void add_component(const IndexTuple& idx, const Polynomial& p) {
        if (p.is_zero()) return;
        auto it = comps_.find(idx);
        if (it == comps_.end()) {
            comps_.emplace(idx, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    // Inserts index j into the strictly increasing tuple and returns its
    // position, or -1 when j already occurs. The caller owes the sign: a
    // covector appended at the back crosses (size - pos) slots, one prepended
    // at the front crosses pos slots.
    static int insert_index(IndexTuple& idx, int j) {
        int pos = 0;
        while (pos < static_cast<int>(idx.size()) && idx[static_cast<std::size_t>(pos)] < j) ++pos;
        if (pos < static_cast<int>(idx.size()) && idx[static_cast<std::size_t>(pos)] == j) return -1;
        idx.insert(idx.begin() + pos, j);
        return pos;
    }

    Ring ring_;
    int degree_ = 0;
    Components comps_;
};

// Graded-antisymmetric product. A result of degree beyond the frame size is
// identically zero and comes back as the zero form of clamped degree.
inline KForm wedge(const KForm& a, const KForm& b) {
    if (!(a.ring() == b.ring())) throw InputError("form ring mismatch");
    int n = a.ring().arity();
    int deg = a.degree() + b.degree();
    if (deg > n) return KForm::zero(a.ring(), n + 1);
    KForm r(a.ring(), deg);
    for (const auto& [ia, pa] : a.components()) {
        for (const auto& [ib, pb] : b.components()) {
            KForm::IndexTuple merged = ia;
            int sign = 1;
            for (int j : ib) {
                int before = static_cast<int>(merged.size());
                int pos = KForm::insert_index(merged, j);
                if (pos < 0) {
                    sign = 0;
                    break;
                }
                if ((before - pos) % 2 != 0) sign = -sign;
            }
            if (sign == 0) continue;
            Polynomial coeff = pa * pb;
            if (sign < 0) coeff = -coeff;
            r.add_component(merged, coeff);
        }
    }
    return r;
}

inline KForm wedge_power(const KForm& a, int k) {
    if (k < 0) throw InputError("negative wedge power");
    KForm acc = KForm::from_polynomial(Polynomial::constant(a.ring(), 1));
    for (int i = 0; i < k; ++i) acc = wedge(acc, a);
    return acc;
}

inline KForm exterior_derivative(const KForm& a) {
    int n = a.ring().arity();
    if (a.degree() + 1 > n) return KForm::zero(a.ring(), std::min(a.degree() + 1, n + 1));
    KForm r(a.ring(), a.degree() + 1);
    for (const auto& [idx, p] : a.components()) {
        for (int i = 0; i < n; ++i) {
            Polynomial d = p.differentiate(i);
            if (d.is_zero()) continue;
            KForm::IndexTuple merged = idx;
            int pos = KForm::insert_index(merged, i);
            if (pos < 0) continue;
            r.add_component(merged, pos % 2 != 0 ? -d : d);
        }
    }
    return r;
}

inline KForm exterior_derivative(const Polynomial& p) {
    return exterior_derivative(KForm::from_polynomial(p));
}

namespace detail {
inline KForm partial_derivative_form(const KForm& a, bool holomorphic) {

    const Ring& ring = a.ring();
    if (!ring.has_involution()) throw InputError("ring has no involution");
    KForm r(ring, a.degree() + 1);
    for (const auto& [idx, p] : a.components()) {
        for (int i = 0; i < ring.arity(); ++i) {
            if (ring.partner(i) < 0) continue;
            if (ring.is_holomorphic(i) != holomorphic) continue;
            Polynomial d = p.differentiate(i);
            if (d.is_zero()) continue;
            KForm::IndexTuple merged = idx;
            int pos = KForm::insert_index(merged, i);
            if (pos < 0) continue;
            r.add_component(merged, pos % 2 != 0 ? -d : d);
        }
    }
    return r;
}
}  // namespace detail

// Dolbeault pieces: del takes partials along the holomorphic variables,
// delbar along their partners; del + delbar = d on complexified rings.
inline KForm del(const KForm& a) { return detail::partial_derivative_form(a, true); }
inline KForm delbar(const KForm& a) { return detail::partial_derivative_form(a, false); }
inline KForm del(const Polynomial& p) { return del(KForm::from_polynomial(p)); }
inline KForm delbar(const Polynomial& p) { return delbar(KForm::from_polynomial(p)); }

inline std::pair<KForm, KForm> del_delbar(const Polynomial& p) {
    return {del(p), delbar(p)};
}

// The coefficient of the pinned volume ordering dx_0 ^ ... ^ dx_{n-1} (ring
// variable order). Requires a form of top degree.
inline Polynomial top_coefficient(const KForm& a) {
    int n = a.ring().arity();
    if (a.degree() != n) throw InputError("top_coefficient: form degree is not top");
    KForm::IndexTuple full(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
    return a.coefficient(full);
}

inline std::string KForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, p] : comps_) {
        // Single-term negative coefficients print with a leading minus so the
        // output stays inside the grammar.
        Polynomial coeff = p;
        bool neg = false;
        if (coeff.term_count() == 1 && coeff.terms().begin()->second < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (idx.empty()) {
            os << coeff.str();
            continue;
        }
        if (coeff == Polynomial::constant(ring_, 1)) {
            // bare covector
        } else if (coeff.term_count() > 1) {
            os << "(" << coeff.str() << ")*";
        } else {
            os << coeff.str() << "*";
        }
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k) os << "*";
            os << "d" << ring_.variable(idx[k]);
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const KForm& f) { return os << f.str(); }

// Finite presentation of a module of 1-forms. Zero generators are dropped at
// construction; the generator list otherwise stays as given.
struct FormModule {
    Ring ring;
    std::vector<KForm> generators;

    FormModule() = default;
    FormModule(Ring r, std::vector<KForm> gens) : ring(std::move(r)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!(g.ring() == ring)) throw InputError("module generator ring mismatch");
            if (g.degree() != 1) throw InputError("module generators must be 1-forms");
            generators.push_back(std::move(g));
        }
    }

    static FormModule zero(const Ring& ring) { return FormModule(ring, {}); }

    // Full frame <dx_1, ..., dx_n>.
    static FormModule full(const Ring& ring) {
        std::vector<KForm> gens;
        for (int i = 0; i < ring.arity(); ++i) gens.push_back(KForm::covector(ring, i));
        return FormModule(ring, std::move(gens));
    }

    bool contains_generator(const KForm& g) const {
        for (const auto& h : generators)
            if (h == g) return true;
        return false;
    }

    // Coefficient matrix: one row per generator, one column per frame covector.
    std::vector<std::vector<Polynomial>> coefficient_matrix() const {
        std::vector<std::vector<Polynomial>> m;
        m.reserve(generators.size());
        for (const auto& g : generators) {
            std::vector<Polynomial> row(static_cast<std::size_t>(ring.arity()),
                                        Polynomial::zero(ring));
            for (const auto& [idx, p] : g.components()) row[static_cast<std::size_t>(idx[0])] = p;
            m.push_back(std::move(row));
        }
        return m;
    }
};

inline KForm parse_one_form(const std::string& text, const Ring& ring) {
    ParsedValue v = parse_one_form_value(text, ring);
    return KForm::one_form(ring, v.covector);
}

}  // namespace levicore
