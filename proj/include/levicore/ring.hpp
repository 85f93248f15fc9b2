#pragma once

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace levicore {

// A polynomial ring over the rationals: an ordered list of variable names,
// plus an optional involution pairing variables (z_i <-> zbar_i) that marks
// the ring as complexified. Immutable and cheaply copyable.
class Ring {
  public:
    Ring() = default;

    static Ring real(std::vector<std::string> vars) {
        return Ring(std::move(vars), {});
    }

    // General constructor with explicit involution pairs (hol, antihol).
    static Ring with_involution(std::vector<std::string> vars,
                                std::vector<std::pair<std::string, std::string>> pairs) {
        return Ring(std::move(vars), std::move(pairs));
    }

    // Complexified ring of complex dimension base.size(): variables are
    // interleaved z1, zbar1, z2, zbar2, ... and the involution pairs them.
    // The interleaving is the pinned volume ordering used by top-degree forms.
    static Ring complexified(const std::vector<std::string>& base) {
        std::vector<std::string> vars;
        std::vector<std::pair<std::string, std::string>> pairs;
        vars.reserve(2 * base.size());
        for (const auto& b : base) {
            std::string bar = conjugate_name(b);
            vars.push_back(b);
            vars.push_back(bar);
            pairs.emplace_back(b, bar);
        }
        return Ring(std::move(vars), std::move(pairs));
    }

    static std::string conjugate_name(const std::string& name) {
        if (!name.empty() && name[0] == 'z') return "zbar" + name.substr(1);
        return name + "bar";
    }

    int arity() const { return static_cast<int>(d_->vars.size()); }
    const std::vector<std::string>& variables() const { return d_->vars; }
    const std::string& variable(int i) const { return d_->vars.at(static_cast<std::size_t>(i)); }

    int index_of(const std::string& name) const {
        auto it = d_->index.find(name);
        if (it == d_->index.end()) throw InputError("unknown variable '" + name + "'");
        return it->second;
    }
    bool has_variable(const std::string& name) const { return d_->index.count(name) != 0; }

    bool has_involution() const { return d_->complexified; }
    // Involution partner index, or -1 when the variable is unpaired.
    int partner(int i) const { return d_->partner.at(static_cast<std::size_t>(i)); }
    // True for the first member of each declared pair (the z_i side).
    bool is_holomorphic(int i) const { return d_->is_hol.at(static_cast<std::size_t>(i)); }
    bool is_antiholomorphic(int i) const { return partner(i) >= 0 && !is_holomorphic(i); }

    const std::vector<std::pair<std::string, std::string>>& involution_pairs() const {
        return d_->pairs;
    }

    // Number of involution pairs (the complex dimension of a complexified ring).
    int pair_count() const { return static_cast<int>(d_->pairs.size()); }

    // Same ring with extra unpaired variables appended.
    Ring extended(const std::vector<std::string>& extra) const {
        std::vector<std::string> vars = d_->vars;
        for (const auto& e : extra) vars.push_back(e);
        return Ring(std::move(vars), d_->pairs);
    }

    // Subring keeping the listed variable indices (ascending). Involution
    // pairs survive only when both partners are kept.
    Ring restricted(const std::vector<int>& keep) const {
        std::vector<std::string> vars;
        vars.reserve(keep.size());
        for (int i : keep) vars.push_back(variable(i));
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& pr : d_->pairs) {
            bool a = std::find(vars.begin(), vars.end(), pr.first) != vars.end();
            bool b = std::find(vars.begin(), vars.end(), pr.second) != vars.end();
            if (a && b) pairs.push_back(pr);
        }
        return Ring(std::move(vars), std::move(pairs));
    }

    // Picks a variable name of the given stem not colliding with existing ones.
    std::string fresh_name(const std::string& stem) const {
        if (!has_variable(stem)) return stem;
        for (int k = 2;; ++k) {
            std::string cand = stem + std::to_string(k);
            if (!has_variable(cand)) return cand;
        }
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.d_ == b.d_) return true;
        return a.d_->vars == b.d_->vars && a.d_->pairs == b.d_->pairs;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  private:
    struct Data {
        std::vector<std::string> vars;
        std::vector<std::pair<std::string, std::string>> pairs;
        std::vector<int> partner;
        std::vector<bool> is_hol;
        std::map<std::string, int> index;
        bool complexified = false;
    };

    Ring(std::vector<std::string> vars, std::vector<std::pair<std::string, std::string>> pairs) {
        auto data = std::make_shared<Data>();
        data->vars = std::move(vars);
        data->pairs = std::move(pairs);
        for (std::size_t i = 0; i < data->vars.size(); ++i) {
            if (data->vars[i].empty()) throw InputError("empty variable name");
            if (!data->index.emplace(data->vars[i], static_cast<int>(i)).second)
                throw InputError("duplicate variable name '" + data->vars[i] + "'");
        }
        data->partner.assign(data->vars.size(), -1);
        data->is_hol.assign(data->vars.size(), false);
        for (const auto& pr : data->pairs) {
            auto ia = data->index.find(pr.first);
            auto ib = data->index.find(pr.second);
            if (ia == data->index.end() || ib == data->index.end())
                throw InputError("involution pair references unknown variable");
            int a = ia->second, b = ib->second;
            if (a == b) throw InputError("involution cannot pair a variable with itself");
            if (data->partner[a] != -1 || data->partner[b] != -1)
                throw InputError("involution pairs must be disjoint");
            data->partner[a] = b;
            data->partner[b] = a;
            data->is_hol[a] = true;
        }
        data->complexified = !data->pairs.empty();
        d_ = std::move(data);
    }

    std::shared_ptr<const Data> d_ = empty_data();

    static std::shared_ptr<const Data> empty_data() {
        static std::shared_ptr<const Data> e = std::make_shared<Data>();
        return e;
    }
};

}  // namespace levicore
