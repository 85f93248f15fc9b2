#pragma once

#include "forms.hpp"
#include "groebner.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace levicore {

namespace detail {

// Determinant by Laplace expansion along the structurally sparsest column.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];

    std::size_t best_col = 0, best_count = n + 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t count = 0;
        for (std::size_t r = 0; r < n; ++r)
            if (!m[r][c].is_zero()) ++count;
        if (count < best_count) {
            best_count = count;
            best_col = c;
        }
    }
    if (best_count == 0) return Polynomial::zero(ring);

    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][best_col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != best_col) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[r][best_col] * poly_det(sub, ring);
        if ((r + best_col) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

// Module-preserving compaction of a coefficient matrix: drops zero rows and
// scalar-multiple duplicates, then sweeps pivot columns of rational-constant
// rows out of all other rows (subtracting polynomial multiples of rows keeps
// the generated module, hence the minors ideal, unchanged).
struct SweptMatrix {
    std::vector<std::vector<Polynomial>> rows;  // non-constant part, zero on pivot columns
    std::vector<int> columns;                   // surviving column indices
    int pivot_count = 0;                        // rank of the constant part
};

inline SweptMatrix sweep_constant_rows(std::vector<std::vector<Polynomial>> rows, const Ring& ring) {
    int n = ring.arity();

    auto prune = [&]() {
        // Drop zero rows and rows that are scalar multiples of an earlier row.
        std::vector<std::vector<Polynomial>> kept;
        for (auto& r : rows) {
            bool zero = true;
            for (const auto& p : r)
                if (!p.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            bool dup = false;
            for (const auto& k : kept) {
                std::optional<Rational> ratio;
                bool multiple = true;
                for (int c = 0; c < n && multiple; ++c) {
                    const Polynomial& a = r[static_cast<std::size_t>(c)];
                    const Polynomial& b = k[static_cast<std::size_t>(c)];
                    if (a.is_zero() != b.is_zero()) multiple = false;
                    else if (!a.is_zero()) {
                        if (a.terms().size() != b.terms().size()) { multiple = false; break; }
                        auto ia = a.terms().begin();
                        auto ib = b.terms().begin();
                        Rational rr = ia->second / ib->second;
                        if (ratio && *ratio != rr) { multiple = false; break; }
                        for (; ia != a.terms().end(); ++ia, ++ib) {
                            if (ia->first != ib->first || ia->second != rr * ib->second) {
                                multiple = false;
                                break;
                            }
                        }
                        if (multiple) ratio = rr;
                    }
                }
                if (multiple && ratio) { dup = true; break; }
            }
            if (!dup) kept.push_back(std::move(r));
        }
        rows = std::move(kept);
    };

    prune();

    std::vector<bool> is_pivot_col(static_cast<std::size_t>(n), false);
    std::vector<std::vector<Rational>> const_rref;  // rows in echelon form
    std::vector<int> pivot_of;                      // pivot column per rref row

    for (;;) {
        // Collect constant rows not yet absorbed.
        bool progressed = false;
        std::vector<std::vector<Polynomial>> remaining;
        for (auto& r : rows) {
            bool constant = true;
            for (const auto& p : r)
                if (!p.is_constant()) {
                    constant = false;
                    break;
                }
            if (!constant) {
                remaining.push_back(std::move(r));
                continue;
            }
            std::vector<Rational> v(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] =
                r[static_cast<std::size_t>(c)].is_zero() ? Rational(0)
                                                         : r[static_cast<std::size_t>(c)].constant_value();
            // Reduce against the existing echelon rows.
            for (std::size_t i = 0; i < const_rref.size(); ++i) {
                const Rational& coef = v[static_cast<std::size_t>(pivot_of[i])];
                if (coef == 0) continue;
                for (int c = 0; c < n; ++c)
                    v[static_cast<std::size_t>(c)] -= coef * const_rref[i][static_cast<std::size_t>(c)];
            }
            int piv = -1;
            for (int c = 0; c < n; ++c)
                if (v[static_cast<std::size_t>(c)] != 0) {
                    piv = c;
                    break;
                }
            if (piv < 0) continue;  // dependent constant row
            Rational lead = v[static_cast<std::size_t>(piv)];
            for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] /= lead;
            // Back-substitute into earlier rows.
            for (std::size_t i = 0; i < const_rref.size(); ++i) {
                const Rational coef = const_rref[i][static_cast<std::size_t>(piv)];
                if (coef == 0) continue;
                for (int c = 0; c < n; ++c)
                    const_rref[i][static_cast<std::size_t>(c)] -= coef * v[static_cast<std::size_t>(c)];
            }
            const_rref.push_back(std::move(v));
            pivot_of.push_back(piv);
            is_pivot_col[static_cast<std::size_t>(piv)] = true;
            progressed = true;
        }
        rows = std::move(remaining);

        if (!progressed && !rows.empty()) break;
        if (rows.empty()) break;

        // Sweep pivot columns out of the polynomial rows.
        for (auto& r : rows) {
            for (std::size_t i = 0; i < const_rref.size(); ++i) {
                Polynomial coef = r[static_cast<std::size_t>(pivot_of[i])];
                if (coef.is_zero()) continue;
                for (int c = 0; c < n; ++c) {
                    const Rational& k = const_rref[i][static_cast<std::size_t>(c)];
                    if (k != 0) r[static_cast<std::size_t>(c)] -= coef * Polynomial::constant(coef.ring(), k);
                }
            }
        }
        prune();
        if (rows.empty()) break;
    }

    SweptMatrix out;
    out.pivot_count = static_cast<int>(const_rref.size());
    for (int c = 0; c < n; ++c)
        if (!is_pivot_col[static_cast<std::size_t>(c)]) out.columns.push_back(c);
    for (auto& r : rows) {
        std::vector<Polynomial> proj;
        proj.reserve(out.columns.size());
        for (int c : out.columns) proj.push_back(std::move(r[static_cast<std::size_t>(c)]));
        out.rows.push_back(std::move(proj));
    }
    return out;
}

}  // namespace detail

enum class SupportProvenance { minors, saturation };

struct SupportIdeal {
    Ideal ideal;
    SupportProvenance provenance = SupportProvenance::minors;
};

// The vanishing locus of all n x n wedges of module elements: the ideal of
// n x n minors of the generator coefficient matrix (multilinearity of
// determinants reduces the quantifier over the whole module to generator
// rows). Fewer generators than frame covectors force the zero ideal.
inline SupportIdeal support_ideal(const FormModule& R, const Budget& budget = {}) {
    const Ring& ring = R.ring;
    int n = ring.arity();

    detail::SweptMatrix sw = detail::sweep_constant_rows(R.coefficient_matrix(), ring);
    int need = n - sw.pivot_count;
    if (need <= 0) return {Ideal::unit(ring), SupportProvenance::minors};
    if (static_cast<int>(sw.rows.size()) < need)
        return {Ideal::zero(ring), SupportProvenance::minors};

    int cols = static_cast<int>(sw.columns.size());
    // Row masks over the reduced columns, for skipping structurally zero minors.
    std::vector<unsigned> masks;
    masks.reserve(sw.rows.size());
    for (const auto& r : sw.rows) {
        unsigned m = 0;
        for (int c = 0; c < cols; ++c)
            if (!r[static_cast<std::size_t>(c)].is_zero()) m |= (1u << c);
        masks.push_back(m);
    }
    const unsigned full_mask = cols >= 32 ? ~0u : ((1u << cols) - 1u);

    std::set<Polynomial> minors;
    std::size_t expanded = 0;
    std::vector<int> pick;
    bool unit_found = false;

    // Suffix OR of masks: quick upper bound on what the remaining rows cover.
    std::vector<unsigned> suffix_or(masks.size() + 1, 0);
    for (int i = static_cast<int>(masks.size()) - 1; i >= 0; --i)
        suffix_or[static_cast<std::size_t>(i)] = suffix_or[static_cast<std::size_t>(i) + 1] |
                                                 masks[static_cast<std::size_t>(i)];

    std::function<void(int, unsigned)> rec = [&](int start, unsigned covered) {
        if (unit_found) return;
        if (static_cast<int>(pick.size()) == need) {
            if (covered != full_mask) return;
            if (++expanded > budget.max_minors)
                throw BudgetExceeded("minor expansion budget exceeded (" +
                                     std::to_string(budget.max_minors) + ")");
            std::vector<std::vector<Polynomial>> sub;
            sub.reserve(pick.size());
            for (int r : pick) sub.push_back(sw.rows[static_cast<std::size_t>(r)]);
            Polynomial det = detail::poly_det(sub, ring);
            if (det.is_zero()) return;
            if (det.is_constant()) {
                unit_found = true;
                return;
            }
            minors.insert(det.primitive());
            return;
        }
        int remaining = need - static_cast<int>(pick.size());
        for (int r = start; r + remaining <= static_cast<int>(sw.rows.size()); ++r) {
            unsigned cov = covered | masks[static_cast<std::size_t>(r)];
            if ((cov | suffix_or[static_cast<std::size_t>(r) + 1]) != full_mask) continue;
            pick.push_back(r);
            rec(r + 1, cov);
            pick.pop_back();
            if (unit_found) return;
        }
    };
    rec(0, 0);

    if (unit_found) return {Ideal::unit(ring), SupportProvenance::minors};
    std::vector<Polynomial> gens(minors.begin(), minors.end());
    return {Ideal(ring, std::move(gens)), SupportProvenance::minors};
}

// The module generated by {df : f in I}, presented from the given generators:
// {df_i} together with {f_i dx_j} (Leibniz closes the rest).
inline FormModule tangent_module(const Ideal& I) {
    const Ring& ring = I.ring();
    std::vector<KForm> gens;
    for (const auto& f : I.generators()) {
        KForm df = exterior_derivative(f);
        if (!df.is_zero()) gens.push_back(df);
    }
    for (const auto& f : I.generators())
        for (int j = 0; j < ring.arity(); ++j) {
            KForm g = KForm::covector(ring, j) * f;
            if (!g.is_zero()) gens.push_back(g);
        }
    return FormModule(ring, std::move(gens));
}

// Rows of the Jacobian of a polynomial map: the module <dF_1, ..., dF_m>
// whose kernel is ker Jac F as a distribution.
inline FormModule jacobian_module(const Ring& ring, const std::vector<Polynomial>& components) {
    std::vector<KForm> gens;
    for (const auto& f : components) {
        if (!(f.ring() == ring)) throw InputError("jacobian component ring mismatch");
        KForm df = exterior_derivative(f);
        if (!df.is_zero()) gens.push_back(df);
    }
    return FormModule(ring, std::move(gens));
}

// ---- partial radical with the hermitian-square rule ------------------------

// Detects c * m * bar(m): a single term whose paired exponents agree (and
// whose unpaired exponents are even). Returns the monomial m.
inline std::optional<Polynomial> hermitian_square_root(const Polynomial& p) {
    const Ring& ring = p.ring();
    if (!ring.has_involution()) return std::nullopt;
    if (p.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    if (total_degree(e) == 0) return std::nullopt;
    Exponents root(e.size(), 0);
    for (int i = 0; i < ring.arity(); ++i) {
        int part = ring.partner(i);
        int ei = e[static_cast<std::size_t>(i)];
        if (part < 0) {
            if (ei % 2 != 0) return std::nullopt;
            root[static_cast<std::size_t>(i)] = ei / 2;
        } else if (ring.is_holomorphic(i)) {
            if (ei != e[static_cast<std::size_t>(part)]) return std::nullopt;
            root[static_cast<std::size_t>(i)] = ei;
        }
    }
    return Polynomial::monomial(ring, root, 1);
}

struct RadicalOptions {
    std::vector<Polynomial> hints;
    // Adjoin real and imaginary parts of detected hermitian squares before
    // taking the radical (the real-radical flavored closure the CR chain
    // needs). The imaginary part is stored without its unit factor i, which
    // generates the same ideal.
    bool hermitian_rule = false;
    // Registered hermitian sums: a generator exactly equal to sum_i F_i*bar(F_i)
    // contributes the parts of every F_i.
    std::vector<std::pair<Polynomial, std::vector<Polynomial>>> hermitian_sums;
};

// Hermitian additions for one generator, or empty.
inline std::vector<Polynomial> hermitian_parts(const Polynomial& g, const RadicalOptions& opts) {
    std::vector<Polynomial> parts;
    auto push_parts = [&](const Polynomial& m) {
        Polynomial re = m + m.bar();
        Polynomial im = m - m.bar();
        if (!re.is_zero()) parts.push_back(re.primitive());
        if (!im.is_zero()) parts.push_back(im.primitive());
    };
    for (const auto& [sum, roots] : opts.hermitian_sums) {
        if (g == sum || g == sum.primitive()) {
            for (const auto& f : roots) push_parts(f);
            return parts;
        }
    }
    if (auto m = hermitian_square_root(g)) push_parts(*m);
    return parts;
}

// Radical closure used by the derivation and Kohn chains: hermitian-square
// additions to a fixed point (when enabled), then the exact branches or hint
// path of radical(). The status records the weakest rule that fired.
inline std::pair<Ideal, RadicalStatus> closure_radical(const Ideal& I, const RadicalOptions& opts,
                                                       const Budget& budget = {}) {
    Ideal cur = I;
    bool herm_applied = false;
    if (opts.hermitian_rule && I.ring().has_involution()) {
        std::set<Polynomial> have;
        for (const auto& g : cur.generators()) have.insert(g);
        for (;;) {
            std::vector<Polynomial> fresh;
            for (const auto& g : cur.generators()) {
                for (const auto& part : hermitian_parts(g, opts))
                    if (!have.count(part)) {
                        have.insert(part);
                        fresh.push_back(part);
                    }
            }
            if (fresh.empty()) break;
            herm_applied = true;
            cur = cur.plus(fresh);
        }
    }
    auto [result, status] = radical(cur, opts.hints, budget);
    if (herm_applied) status = RadicalStatus::hermitian;
    return {result, status};
}

// ---- kernel variety and the saturation-route support -----------------------

// The module's kernel as a subvariety of the tangent bundle: the ideal
// generated by the fiber-linear polynomials sum_i a_ji(x) v_i in the ring
// extended by one fiber variable per frame covector.
struct KernelVariety {
    Ring extended_ring;
    std::vector<int> fiber_indices;
    Ideal ideal;
};

inline KernelVariety kernel_variety(const FormModule& R) {
    const Ring& base = R.ring;
    int n = base.arity();
    std::vector<std::string> fiber_names;
    for (int i = 0; i < n; ++i) {
        std::string name = "v" + std::to_string(i + 1);
        if (base.has_variable(name)) name = base.fresh_name("_" + name);
        fiber_names.push_back(name);
    }
    Ring ext = base.extended(fiber_names);
    std::vector<int> fiber_idx;
    for (const auto& nm : fiber_names) fiber_idx.push_back(ext.index_of(nm));
    std::vector<int> base_map(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base_map[static_cast<std::size_t>(i)] = i;

    std::vector<Polynomial> gens;
    for (const auto& row : R.coefficient_matrix()) {
        Polynomial g = Polynomial::zero(ext);
        for (int i = 0; i < n; ++i) {
            if (row[static_cast<std::size_t>(i)].is_zero()) continue;
            g += row[static_cast<std::size_t>(i)].lift(ext, base_map) *
                 Polynomial::variable(ext, fiber_idx[static_cast<std::size_t>(i)]);
        }
        if (!g.is_zero()) gens.push_back(g);
    }
    return {std::move(ext), std::move(fiber_idx), Ideal(ext, std::move(gens))};
}

// Support through the tangent-bundle picture: saturate the kernel ideal by
// the fiber variables (removing the zero-section component) and eliminate the
// fibers down to the base.
inline SupportIdeal saturated_support(const FormModule& R, const Budget& budget = {}) {
    KernelVariety kv = kernel_variety(R);
    std::vector<Polynomial> fiber_gens;
    for (int idx : kv.fiber_indices)
        fiber_gens.push_back(Polynomial::variable(kv.extended_ring, idx));
    Ideal fibers(kv.extended_ring, fiber_gens);
    Ideal sat = saturate(kv.ideal, fibers, budget);
    Ideal base_sub = eliminate(sat, kv.fiber_indices, budget);
    return {lift_ideal(base_sub, R.ring), SupportProvenance::saturation};
}

// Exact fiber dimension at a rational point: n minus the rank of the numeric
// coefficient matrix.
inline int fiber_dimension(const FormModule& R, const std::vector<Rational>& point) {
    const Ring& ring = R.ring;
    int n = ring.arity();
    if (static_cast<int>(point.size()) != n) throw InputError("fiber point arity mismatch");
    std::vector<std::vector<Rational>> m;
    for (const auto& row : R.coefficient_matrix()) {
        std::vector<Rational> num;
        num.reserve(static_cast<std::size_t>(n));
        for (const auto& p : row) num.push_back(p.evaluate(point));
        m.push_back(std::move(num));
    }
    int rank = 0;
    int rows = static_cast<int>(m.size());
    for (int col = 0; col < n && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                         m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return n - rank;
}

// ---- the derivation chain ---------------------------------------------------

struct DerivationStep {
    FormModule module;
    SupportIdeal support;
    Ideal radical_ideal;         // closure radical of the support ideal
    RadicalStatus radical_status = RadicalStatus::exact;
    Ideal kernel_ideal;          // in the shared extended ring
    std::vector<KForm> added;    // generators new in this step
};

struct DerivationTrace {
    Ring ring;
    Ring extended_ring;
    std::vector<DerivationStep> steps;
    std::optional<int> stabilized_at;
    bool cap_hit = false;
    std::optional<std::string> budget_error;

    const DerivationStep& final_step() const { return steps.back(); }
};

// One derivation: R union the tangent module of the radical of its support.
// Returns the new module, the support data, and which generators are new.
inline DerivationStep derive_step_data(const FormModule& R, const RadicalOptions& opts,
                                       const Budget& budget) {
    DerivationStep step;
    step.module = R;
    step.support = support_ideal(R, budget);
    auto [rad, status] = closure_radical(step.support.ideal, opts, budget);
    step.radical_ideal = rad;
    step.radical_status = status;
    step.kernel_ideal = kernel_variety(R).ideal;
    return step;
}

inline std::vector<KForm> tangent_candidates(const DerivationStep& step, const Budget& budget) {
    // Present the radical through its reduced basis: canonical and compact.
    Ideal canonical(step.radical_ideal.ring(), step.radical_ideal.groebner_basis(budget));
    FormModule tang = tangent_module(canonical);
    std::vector<KForm> fresh;
    for (const auto& g : tang.generators) {
        if (step.module.contains_generator(g)) continue;
        bool dup = false;
        for (const auto& f : fresh)
            if (f == g) {
                dup = true;
                break;
            }
        if (!dup) fresh.push_back(g);
    }
    return fresh;
}

struct CoreOptions {
    int max_steps = 32;
    RadicalOptions radical;
    Budget budget;
};

// Derived module of the spec: the module together with the tangent module of
// (the radical of) its support. Status propagates from the radical.
inline std::pair<FormModule, RadicalStatus> derived_module(const FormModule& R,
                                                           const RadicalOptions& opts = {},
                                                           const Budget& budget = {}) {
    DerivationStep step = derive_step_data(R, opts, budget);
    std::vector<KForm> gens = R.generators;
    for (auto& g : tangent_candidates(step, budget)) gens.push_back(std::move(g));
    return {FormModule(R.ring, std::move(gens)), step.radical_status};
}

// Iterated derivation with stabilization detection on kernel varieties.
//
// Convention for the stabilization index: a module whose first derivation
// adds no new generator is perfect as presented and stabilizes at step 0;
// otherwise iteration emits each derived step (even a syntactically repeated
// one, as the witness) and stabilizes at the first step whose kernel variety
// equals its predecessor's.
inline DerivationTrace core_iterate(const FormModule& R, const CoreOptions& opts = {}) {
    DerivationTrace trace;
    trace.ring = R.ring;
    trace.extended_ring = kernel_variety(R).extended_ring;

    try {
        trace.steps.push_back(derive_step_data(R, opts.radical, opts.budget));
        for (int k = 0; k < opts.max_steps; ++k) {
            DerivationStep& prev = trace.steps.back();
            std::vector<KForm> fresh = tangent_candidates(prev, opts.budget);
            if (fresh.empty() && k == 0) {
                trace.stabilized_at = 0;
                prev.added.clear();
                return trace;
            }
            std::vector<KForm> gens = prev.module.generators;
            for (const auto& g : fresh) gens.push_back(g);
            FormModule next(R.ring, std::move(gens));
            DerivationStep step = derive_step_data(next, opts.radical, opts.budget);
            step.added = fresh;
            trace.steps.push_back(std::move(step));
            const DerivationStep& cur = trace.steps.back();
            const DerivationStep& before = trace.steps[trace.steps.size() - 2];
            bool stable = fresh.empty() ||
                          variety_equal(cur.kernel_ideal, before.kernel_ideal, opts.budget);
            if (stable) {
                trace.stabilized_at = k + 1;
                return trace;
            }
        }
        trace.cap_hit = true;
    } catch (const BudgetExceeded& e) {
        trace.budget_error = e.what();
    }
    return trace;
}

enum class CoreVerdict { trivial, nontrivial, unknown };

inline const char* to_string(CoreVerdict v) {
    switch (v) {
        case CoreVerdict::trivial: return "trivial";
        case CoreVerdict::nontrivial: return "nontrivial";
        case CoreVerdict::unknown: return "unknown";
    }
    return "?";
}

// Trivial core means the stabilized chain's support is empty as a complex
// variety. That verdict is sound even past fallback radicals: a partial
// radical can only shrink the derived module, so the computed supports
// contain the true ones, and an empty computed support certifies emptiness.
// A nontrivial verdict needs every radical that drove the chain to have been
// exact; otherwise the answer is unknown. Capped or budget-stopped traces are
// unknown.
inline CoreVerdict is_core_trivial(const DerivationTrace& trace, const Budget& budget = {}) {
    if (trace.stabilized_at && trace.final_step().support.ideal.contains_unit(budget))
        return CoreVerdict::trivial;
    if (trace.cap_hit || trace.budget_error) return CoreVerdict::unknown;
    if (!trace.stabilized_at) return CoreVerdict::unknown;
    std::size_t used = trace.steps.size() > 1 ? trace.steps.size() - 1 : 1;
    for (std::size_t i = 0; i < used; ++i) {
        RadicalStatus s = trace.steps[i].radical_status;
        if (s == RadicalStatus::fallback || s == RadicalStatus::hermitian)
            return CoreVerdict::unknown;
    }
    return CoreVerdict::nontrivial;
}

// Pullback of every generator under the linear change x = A x'. For
// complexified rings A must commute with the involution.
inline FormModule change_coordinates(const FormModule& R,
                                     const std::vector<std::vector<Rational>>& a) {
    const Ring& ring = R.ring;
    int n = ring.arity();
    if (static_cast<int>(a.size()) != n) throw InputError("coordinate matrix arity mismatch");
    if (ring.has_involution()) {
        auto image = [&](int i) { return ring.partner(i) >= 0 ? ring.partner(i) : i; };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    a[static_cast<std::size_t>(image(i))][static_cast<std::size_t>(image(j))])
                    throw InputError("coordinate change must commute with the involution");
    }
    std::vector<KForm> gens;
    for (const auto& g : R.generators) {
        KForm img(ring, 1);
        for (const auto& [idx, p] : g.components()) {
            Polynomial coeff = p.substitute_linear(a);  // also validates invertibility
            int i = idx[0];
            for (int j = 0; j < n; ++j) {
                const Rational& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (aij != 0) img += KForm::covector(ring, j) * (coeff * aij);
            }
        }
        gens.push_back(img);
    }
    return FormModule(ring, std::move(gens));
}

}  // namespace levicore
