#pragma once

#include "polynomial.hpp"

#include <numeric>
#include <tuple>
#include <vector>

namespace levicore {

// Monomial order on dense exponent vectors. Supports degrevlex, lex, and a
// two-block elimination order (degrevlex within each block, first block
// dominant, so the first block is eliminated).
//
// `positions` is a permutation of the variable indices giving the order's
// significance: positions[0] is the most significant variable.
class TermOrder {
  public:
    enum class Kind { degrevlex, lex, block };

    static TermOrder degrevlex(const Ring& ring) {
        return TermOrder(Kind::degrevlex, identity(ring.arity()), 0);
    }

    static TermOrder lex(const Ring& ring) {
        return TermOrder(Kind::lex, identity(ring.arity()), 0);
    }

    // Elimination order for the given variable indices, which form the
    // dominant first block.
    static TermOrder block(const Ring& ring, const std::vector<int>& eliminate) {
        std::vector<int> pos = eliminate;
        std::vector<bool> in(static_cast<std::size_t>(ring.arity()), false);
        for (int i : eliminate) in[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < ring.arity(); ++i)
            if (!in[static_cast<std::size_t>(i)]) pos.push_back(i);
        return TermOrder(Kind::block, std::move(pos), static_cast<int>(eliminate.size()));
    }

    Kind kind() const { return kind_; }
    int block_split() const { return split_; }
    const std::vector<int>& positions() const { return positions_; }

    // a < b in this order
    bool less(const Exponents& a, const Exponents& b) const {
        switch (kind_) {
            case Kind::lex: {
                for (int p : positions_) {
                    int ai = a[static_cast<std::size_t>(p)], bi = b[static_cast<std::size_t>(p)];
                    if (ai != bi) return ai < bi;
                }
                return false;
            }
            case Kind::degrevlex:
                return drl_less(a, b, 0, static_cast<int>(positions_.size()));
            case Kind::block: {
                int c = drl_cmp(a, b, 0, split_);
                if (c != 0) return c < 0;
                return drl_less(a, b, split_, static_cast<int>(positions_.size()));
            }
        }
        return false;
    }

    bool equal_expts(const Exponents& a, const Exponents& b) const { return a == b; }

    friend bool operator==(const TermOrder& x, const TermOrder& y) {
        return x.kind_ == y.kind_ && x.split_ == y.split_ && x.positions_ == y.positions_;
    }
    friend bool operator<(const TermOrder& x, const TermOrder& y) {
        return std::tie(x.kind_, x.split_, x.positions_) < std::tie(y.kind_, y.split_, y.positions_);
    }

  private:
    TermOrder(Kind k, std::vector<int> pos, int split)
        : kind_(k), positions_(std::move(pos)), split_(split) {}

    static std::vector<int> identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    // Degrevlex comparison restricted to positions [from, to).
    int drl_cmp(const Exponents& a, const Exponents& b, int from, int to) const {
        long da = 0, db = 0;
        for (int i = from; i < to; ++i) {
            da += a[static_cast<std::size_t>(positions_[static_cast<std::size_t>(i)])];
            db += b[static_cast<std::size_t>(positions_[static_cast<std::size_t>(i)])];
        }
        if (da != db) return da < db ? -1 : 1;
        // Reverse lex tie-break: the last position with a differing exponent
        // decides; the larger exponent there makes the monomial smaller.
        for (int i = to - 1; i >= from; --i) {
            int p = positions_[static_cast<std::size_t>(i)];
            int ai = a[static_cast<std::size_t>(p)], bi = b[static_cast<std::size_t>(p)];
            if (ai != bi) return ai > bi ? -1 : 1;
        }
        return 0;
    }

    bool drl_less(const Exponents& a, const Exponents& b, int from, int to) const {
        return drl_cmp(a, b, from, to) < 0;
    }

    Kind kind_;
    std::vector<int> positions_;
    int split_;
};

}  // namespace levicore
