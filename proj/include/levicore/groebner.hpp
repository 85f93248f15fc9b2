#pragma once

#include "errors.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace levicore {

// Resource caps for the symbolic kernels. Exceeding one raises
// BudgetExceeded; results are never silently truncated.
struct Budget {
    std::size_t max_pairs = 50000;   // S-pairs processed per basis computation
    int max_degree = 60;             // total degree of any intermediate polynomial
    std::size_t max_minors = 200000; // determinants expanded per support computation
    std::size_t max_tuples = 20000;  // multiplier tuples per Kohn step
};

namespace detail {

// Working representation inside the Buchberger loop: terms sorted descending
// by the active order, leading term first.
struct OrderDesc {
    const TermOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const { return order->less(b, a); }
};

using OTerms = std::map<Exponents, Rational, OrderDesc>;

inline OTerms to_ordered(const Polynomial& p, const TermOrder& order) {
    OTerms t(OrderDesc{&order});
    for (const auto& [e, c] : p.terms()) t.emplace(e, c);
    return t;
}

inline Polynomial from_ordered(const Ring& ring, const OTerms& t) {
    Polynomial p = Polynomial::zero(ring);
    for (const auto& [e, c] : t) p += Polynomial::monomial(ring, e, c);
    return p;
}

inline void add_scaled(OTerms& dst, const OTerms& src, const Exponents& shift, const Rational& c) {
    for (const auto& [e, k] : src) {
        Exponents m = expo_add(e, shift);
        auto it = dst.find(m);
        if (it == dst.end()) {
            Rational v = k * c;
            if (v != 0) dst.emplace(std::move(m), std::move(v));
        } else {
            it->second += k * c;
            if (it->second == 0) dst.erase(it);
        }
    }
}

// Fully reduces f modulo the basis: the result has no term divisible by any
// basis leading term. Basis elements are monic.
inline OTerms reduce_full(OTerms f, const std::vector<OTerms>& basis, const Budget& budget) {
    OTerms out(f.key_comp());
    while (!f.empty()) {
        const Exponents lead = f.begin()->first;
        if (total_degree(lead) > budget.max_degree)
            throw BudgetExceeded("polynomial degree exceeds budget (" +
                                 std::to_string(budget.max_degree) + ")");
        bool reduced = false;
        for (const auto& g : basis) {
            const Exponents& glt = g.begin()->first;
            if (expo_divides(glt, lead)) {
                add_scaled(f, g, expo_sub(lead, glt), -f.begin()->second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.emplace(f.begin()->first, f.begin()->second);
            f.erase(f.begin());
        }
    }
    return out;
}

inline void make_monic(OTerms& f) {
    if (f.empty()) return;
    Rational lc = f.begin()->second;
    if (lc == 1) return;
    for (auto& [e, c] : f) c /= lc;
}

}  // namespace detail

// Reduced Groebner basis via Buchberger's algorithm with the product and
// chain criteria. The reduced basis is unique for (ideal, order): every
// element is monic, no term of any element is divisible by the leading term
// of another. A nonzero constant collapses the result to {1}.
inline std::vector<Polynomial> buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                                          const TermOrder& order, const Budget& budget = {}) {
    using detail::OTerms;

    std::vector<OTerms> basis;
    {
        std::set<Polynomial> seen;
        std::vector<Polynomial> inputs;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial p = g.primitive();
            if (seen.insert(p).second) inputs.push_back(p);
        }
        // Deterministic start: smaller polynomials first.
        std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a < b;
        });
        for (const auto& p : inputs) {
            OTerms t = detail::to_ordered(p, order);
            detail::make_monic(t);
            basis.push_back(std::move(t));
        }
    }

    auto unit_basis = [&]() {
        return std::vector<Polynomial>{Polynomial::constant(ring, 1)};
    };
    for (const auto& b : basis)
        if (total_degree(b.begin()->first) == 0) return unit_basis();
    if (basis.empty()) return {};

    struct Pair {
        int i, j;
        Exponents lcm;
        int deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return a.lcm < b.lcm;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> queue;
    std::set<std::pair<int, int>> done;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Pair p{i, j, expo_lcm(basis[static_cast<std::size_t>(i)].begin()->first,
                                  basis[static_cast<std::size_t>(j)].begin()->first),
                   0};
            p.deg = total_degree(p.lcm);
            queue.push_back(std::move(p));
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        done.insert({pr.i, pr.j});
        if (++processed > budget.max_pairs)
            throw BudgetExceeded("S-pair budget exceeded (" + std::to_string(budget.max_pairs) +
                                 ")");

        const Exponents& lti = basis[static_cast<std::size_t>(pr.i)].begin()->first;
        const Exponents& ltj = basis[static_cast<std::size_t>(pr.j)].begin()->first;

        // Product criterion: coprime leading terms reduce to zero.
        if (pr.lcm == expo_add(lti, ltj)) continue;

        // Chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k)
        // already treated.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!expo_divides(basis[static_cast<std::size_t>(k)].begin()->first, pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        // S-polynomial, fully reduced.
        OTerms s(detail::OrderDesc{&order});
        detail::add_scaled(s, basis[static_cast<std::size_t>(pr.i)], expo_sub(pr.lcm, lti), 1);
        detail::add_scaled(s, basis[static_cast<std::size_t>(pr.j)], expo_sub(pr.lcm, ltj), -1);
        OTerms r = detail::reduce_full(std::move(s), basis, budget);
        if (r.empty()) continue;
        detail::make_monic(r);
        if (total_degree(r.begin()->first) == 0) return unit_basis();
        basis.push_back(std::move(r));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop elements whose leading term another leading term divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (expo_divides(basis[j].begin()->first, basis[i].begin()->first) &&
                !(basis[i].begin()->first == basis[j].begin()->first && j > i))
                keep[i] = false;
        }
    }
    std::vector<OTerms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Tail-reduce each element against the others for the unique reduced basis.
    std::vector<std::pair<Exponents, Polynomial>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OTerms> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OTerms r = others.empty() ? minimal[i]
                                  : detail::reduce_full(minimal[i], others, budget);
        detail::make_monic(r);
        reduced.emplace_back(r.begin()->first, detail::from_ordered(ring, r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return order.less(a.first, b.first);
        return a.second < b.second;
    });
    std::vector<Polynomial> result;
    result.reserve(reduced.size());
    for (auto& [lt, p] : reduced) result.push_back(std::move(p));
    return result;
}

// Finite generator list in a declared ring, with a write-once cache of
// reduced Groebner bases keyed by term order. Value semantics; copies share
// the cache.
class Ideal {
  public:
    Ideal() = default;

    Ideal(Ring ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (!(g.ring() == ring_)) throw InputError("ideal generator ring mismatch");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
    static Ideal unit(const Ring& ring) {
        return Ideal(ring, {Polynomial::constant(ring, 1)});
    }
    static Ideal principal(const Polynomial& p) { return Ideal(p.ring(), {p}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<Polynomial>& groebner_basis(const TermOrder& order,
                                                  const Budget& budget = {}) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->bases.find(order);
            if (it != cache_->bases.end()) return it->second;
        }
        std::vector<Polynomial> basis = buchberger(ring_, gens_, order, budget);
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, inserted] = cache_->bases.emplace(order, std::move(basis));
        return it->second;
    }

    const std::vector<Polynomial>& groebner_basis(const Budget& budget = {}) const {
        return groebner_basis(TermOrder::degrevlex(ring_), budget);
    }

    bool contains_unit(const Budget& budget = {}) const {
        const auto& gb = groebner_basis(budget);
        return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
    }

    Ideal plus(const std::vector<Polynomial>& extra) const {
        std::vector<Polynomial> g = gens_;
        for (const auto& e : extra) g.push_back(e);
        return Ideal(ring_, std::move(g));
    }

  private:
    struct Cache {
        std::mutex mu;
        std::map<TermOrder, std::vector<Polynomial>> bases;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Unique remainder of p modulo the reduced basis; zero iff p lies in I.
inline Polynomial normal_form(const Polynomial& p, const Ideal& I, const TermOrder& order,
                              const Budget& budget = {}) {
    const auto& gb = I.groebner_basis(order, budget);
    if (gb.empty()) return p;
    std::vector<detail::OTerms> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) basis.push_back(detail::to_ordered(g, order));
    return detail::from_ordered(p.ring(), detail::reduce_full(detail::to_ordered(p, order), basis, budget));
}

inline Polynomial normal_form(const Polynomial& p, const Ideal& I, const Budget& budget = {}) {
    return normal_form(p, I, TermOrder::degrevlex(I.ring()), budget);
}

inline bool ideal_membership(const Polynomial& p, const Ideal& I, const Budget& budget = {}) {
    if (p.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    return normal_form(p, I, budget).is_zero();
}

// Rabinowitsch trick: p lies in the radical of I iff 1 lies in
// I + (1 - t*p) in the ring extended by a fresh variable t.
inline bool radical_membership(const Polynomial& p, const Ideal& I, const Budget& budget = {}) {
    if (p.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    if (p.is_constant()) return I.contains_unit(budget);

    const Ring& ring = I.ring();
    const std::string tname = ring.fresh_name("_t");
    Ring ext = ring.extended({tname});
    std::vector<int> var_map(static_cast<std::size_t>(ring.arity()));
    for (int i = 0; i < ring.arity(); ++i) var_map[static_cast<std::size_t>(i)] = i;

    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + 1);
    for (const auto& g : I.generators()) gens.push_back(g.lift(ext, var_map));
    Polynomial t = Polynomial::variable(ext, ext.index_of(tname));
    gens.push_back(Polynomial::constant(ext, 1) - t * p.lift(ext, var_map));
    return Ideal(ext, std::move(gens)).contains_unit(budget);
}

// Zero sets agree over the complex numbers: mutual radical membership of
// generators.
inline bool variety_equal(const Ideal& I, const Ideal& J, const Budget& budget = {}) {
    if (!(I.ring() == J.ring())) throw InputError("variety_equal: ring mismatch");
    const auto& gi = I.groebner_basis(budget);
    const auto& gj = J.groebner_basis(budget);
    if (gi == gj) return true;
    for (const auto& g : gj)
        if (!radical_membership(g, I, budget)) return false;
    for (const auto& g : gi)
        if (!radical_membership(g, J, budget)) return false;
    return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {}) {
    return I.groebner_basis(budget) == J.groebner_basis(budget);
}

// Generators of I intersected with the subring omitting `drop`, computed with
// a block order eliminating those variables. The result lives in the
// restricted ring.
inline Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Budget& budget = {}) {
    const Ring& ring = I.ring();
    if (drop.empty()) return I;
    std::vector<bool> dropped(static_cast<std::size_t>(ring.arity()), false);
    for (int i : drop) {
        if (i < 0 || i >= ring.arity()) throw InputError("eliminate: variable index out of range");
        dropped[static_cast<std::size_t>(i)] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < ring.arity(); ++i)
        if (!dropped[static_cast<std::size_t>(i)]) keep.push_back(i);

    Ring sub = ring.restricted(keep);
    std::vector<int> to_sub(static_cast<std::size_t>(ring.arity()), -1);
    for (std::size_t k = 0; k < keep.size(); ++k)
        to_sub[static_cast<std::size_t>(keep[k])] = static_cast<int>(k);

    const auto& gb = I.groebner_basis(TermOrder::block(ring, drop), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool free = true;
        for (int i : drop)
            if (g.depends_on(i)) {
                free = false;
                break;
            }
        if (!free) continue;
        Polynomial proj(sub);
        for (const auto& [e, c] : g.terms()) {
            Exponents pe(keep.size(), 0);
            for (std::size_t k = 0; k < keep.size(); ++k)
                pe[k] = e[static_cast<std::size_t>(keep[k])];
            proj += Polynomial::monomial(sub, pe, c);
        }
        kept.push_back(proj);
    }
    return Ideal(sub, std::move(kept));
}

// Lifts an ideal of a subring into a superring containing all its variables.
inline Ideal lift_ideal(const Ideal& I, const Ring& target) {
    std::vector<int> var_map;
    var_map.reserve(static_cast<std::size_t>(I.ring().arity()));
    for (const auto& v : I.ring().variables()) var_map.push_back(target.index_of(v));
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.lift(target, var_map));
    return Ideal(target, std::move(gens));
}

// I cap J via the tag-variable trick: eliminate t from t*I + (1-t)*J.
inline Ideal intersection(const Ideal& I, const Ideal& J, const Budget& budget = {}) {
    const Ring& ring = I.ring();
    if (!(ring == J.ring())) throw InputError("intersection: ring mismatch");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
    const std::string tname = ring.fresh_name("_t");
    Ring ext = ring.extended({tname});
    std::vector<int> var_map(static_cast<std::size_t>(ring.arity()));
    for (int i = 0; i < ring.arity(); ++i) var_map[static_cast<std::size_t>(i)] = i;
    Polynomial t = Polynomial::variable(ext, ext.index_of(tname));
    Polynomial omt = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * g.lift(ext, var_map));
    for (const auto& g : J.generators()) gens.push_back(omt * g.lift(ext, var_map));
    Ideal mixed(ext, std::move(gens));
    Ideal inter_sub = eliminate(mixed, {ext.index_of(tname)}, budget);
    return lift_ideal(inter_sub, ring);
}

// Exact division q = p / f; requires f to divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
    if (f.is_zero()) throw InputError("division by zero polynomial");
    if (p.is_zero()) return p;
    TermOrder order = TermOrder::degrevlex(p.ring());
    detail::OTerms rem = detail::to_ordered(p, order);
    detail::OTerms divisor = detail::to_ordered(f, order);
    const Exponents& flt = divisor.begin()->first;
    const Rational& flc = divisor.begin()->second;
    Polynomial q = Polynomial::zero(p.ring());
    while (!rem.empty()) {
        const Exponents& lead = rem.begin()->first;
        if (!expo_divides(flt, lead)) throw InputError("divide_exact: not an exact multiple");
        Rational c = rem.begin()->second / flc;
        Exponents shift = expo_sub(lead, flt);
        q += Polynomial::monomial(p.ring(), shift, c);
        detail::add_scaled(rem, divisor, shift, -c);
    }
    return q;
}

// Ideal quotient I : (f) = (I cap (f)) / f.
inline Ideal quotient_by_element(const Ideal& I, const Polynomial& f, const Budget& budget = {}) {
    if (f.is_zero()) return Ideal::unit(I.ring());
    Ideal inter = intersection(I, Ideal::principal(f), budget);
    std::vector<Polynomial> gens;
    for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal quotient(const Ideal& I, const Ideal& J, const Budget& budget = {}) {
    if (J.is_zero_ideal()) return Ideal::unit(I.ring());
    std::optional<Ideal> acc;
    for (const auto& f : J.generators()) {
        Ideal qi = quotient_by_element(I, f, budget);
        acc = acc ? intersection(*acc, qi, budget) : qi;
    }
    return *acc;
}

// Saturation I : J^infinity, as the stable limit of iterated quotients.
inline Ideal saturate(const Ideal& I, const Ideal& J, const Budget& budget = {}) {
    Ideal cur = I;
    for (;;) {
        Ideal next = quotient(cur, J, budget);
        if (ideal_equal(next, cur, budget)) return cur;
        cur = next;
    }
}

// Krull dimension over the complex numbers, combinatorially: the largest
// subset S of variables such that no leading term of the degrevlex basis is
// supported inside S. Empty optional encodes the empty variety (1 in I).
inline std::optional<int> ideal_dimension(const Ideal& I, const Budget& budget = {}) {
    const Ring& ring = I.ring();
    int n = ring.arity();
    if (I.is_zero_ideal()) return n;
    const auto& gb = I.groebner_basis(TermOrder::degrevlex(ring), budget);
    if (I.contains_unit(budget)) return std::nullopt;

    std::vector<unsigned> lead_masks;
    TermOrder ord = TermOrder::degrevlex(ring);
    for (const auto& g : gb) {
        const Exponents* lt = nullptr;
        for (const auto& [e, c] : g.terms())
            if (!lt || ord.less(*lt, e)) lt = &e;
        unsigned mask = 0;
        for (int i = 0; i < n; ++i)
            if ((*lt)[static_cast<std::size_t>(i)] > 0) mask |= (1u << i);
        lead_masks.push_back(mask);
    }

    if (n > 20) throw BudgetExceeded("dimension: too many variables for subset enumeration");
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (unsigned m : lead_masks)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

// --- gcd / squarefree machinery -------------------------------------------

// Multivariate gcd over Q, via lcm as the generator of the intersection of
// principal ideals.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, const Budget& budget = {}) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
    Ideal inter = intersection(Ideal::principal(a), Ideal::principal(b), budget);
    const auto& gb = inter.groebner_basis(budget);
    if (gb.size() != 1)
        throw InputError("internal: intersection of principal ideals not principal");
    const Polynomial& lcm = gb.front();
    return divide_exact(a * b, lcm).primitive();
}

// Product of the distinct irreducible factors of p: p divided by the gcd of
// p with all its partials, iterated until that gcd is constant.
inline Polynomial squarefree_part(const Polynomial& p, const Budget& budget = {}) {
    if (p.is_zero() || p.is_constant()) return p;
    Polynomial cur = p.primitive();
    for (;;) {
        Polynomial acc = cur;
        for (int i = 0; i < cur.ring().arity() && !acc.is_constant(); ++i)
            acc = poly_gcd(acc, cur.differentiate(i), budget);
        if (acc.is_constant()) return cur;
        cur = divide_exact(cur, acc).primitive();
    }
}

enum class RadicalStatus { exact, hinted, hermitian, fallback };

inline const char* to_string(RadicalStatus s) {
    switch (s) {
        case RadicalStatus::exact: return "exact";
        case RadicalStatus::hinted: return "hinted";
        case RadicalStatus::hermitian: return "hermitian";
        case RadicalStatus::fallback: return "fallback";
    }
    return "?";
}

namespace detail {

// Exact radical branches: principal ideals via squarefree parts,
// zero-dimensional ideals via squarefree univariate eliminants (Seidenberg).
// Returns nothing when neither branch applies.
inline std::optional<Ideal> exact_radical(const Ideal& I, const Budget& budget) {
    if (I.is_zero_ideal()) return I;
    const auto& gb = I.groebner_basis(budget);
    if (gb.size() == 1) return Ideal::principal(squarefree_part(gb.front(), budget));

    auto dim = ideal_dimension(I, budget);
    if (!dim) return Ideal::unit(I.ring());
    if (*dim == 0) {
        const Ring& ring = I.ring();
        std::vector<Polynomial> extra;
        for (int i = 0; i < ring.arity(); ++i) {
            std::vector<int> drop;
            for (int j = 0; j < ring.arity(); ++j)
                if (j != i) drop.push_back(j);
            Ideal uni = eliminate(I, drop, budget);
            if (uni.generators().empty()) continue;  // should not happen at dimension zero
            const auto& ugb = uni.groebner_basis(budget);
            if (ugb.size() != 1) continue;
            Polynomial sf = squarefree_part(ugb.front(), budget);
            extra.push_back(lift_ideal(Ideal::principal(sf), ring).generators().front());
        }
        return I.plus(extra);
    }
    return std::nullopt;
}

}  // namespace detail

// Partial radical computation. Exact for principal and zero-dimensional
// ideals; hints verified via radical membership extend the reach; otherwise
// the ideal is returned unchanged with a fallback flag. Downstream consumers
// treat fallback steps as possibly undershooting the true radical.
inline std::pair<Ideal, RadicalStatus> radical(const Ideal& I,
                                               const std::vector<Polynomial>& hints = {},
                                               const Budget& budget = {}) {
    // Hints are validated whenever supplied; a failing hint is an error even
    // when an exact branch would have answered without it.
    if (!hints.empty()) {
        for (const auto& h : hints)
            if (!radical_membership(h, I, budget)) throw HintRejected(h.str());
        Ideal J = I.plus(hints);
        if (auto exact = detail::exact_radical(J, budget)) return {*exact, RadicalStatus::hinted};
        return {J, RadicalStatus::hinted};
    }
    if (auto exact = detail::exact_radical(I, budget)) return {*exact, RadicalStatus::exact};
    return {I, RadicalStatus::fallback};
}

}  // namespace levicore
