#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdual/fields.hpp"
#include "pdual/monomial.hpp"

namespace pdual {

template <class F>
struct PolyRing {
    F field;
    std::vector<std::string> vars;

    int arity() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    MonomialOrder grevlex() const { return MonomialOrder::grevlex(arity()); }
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
    if (vars.empty() || vars.size() > kMaxVars)
        throw std::invalid_argument("ring arity out of range");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable " + vars[i]);
    auto r = std::make_shared<PolyRing<F>>();
    r->field = field;
    r->vars = std::move(vars);
    return r;
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a->vars == b->vars && a->field == b->field);
}

// Fresh variable names that cannot collide with existing ones.
inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken,
                                            const std::string& stem, int count) {
    std::vector<std::string> out;
    int suffix = 0;
    auto used = [&](const std::string& n) {
        for (const auto& t : taken) if (t == n) return true;
        for (const auto& t : out) if (t == n) return true;
        return false;
    };
    while (static_cast<int>(out.size()) < count) {
        std::string cand = stem + std::to_string(suffix++);
        if (!used(cand)) out.push_back(cand);
    }
    return out;
}

// New ring with `extra` prepended (elimination block position) or appended.
template <class F>
RingPtr<F> extend_ring_front(const RingPtr<F>& r, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = extra;
    vars.insert(vars.end(), r->vars.begin(), r->vars.end());
    return make_ring(r->field, std::move(vars));
}

template <class F>
RingPtr<F> extend_ring_back(const RingPtr<F>& r, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = r->vars;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_ring(r->field, std::move(vars));
}

// Ring on the tail variables [k, arity).
template <class F>
RingPtr<F> tail_ring(const RingPtr<F>& r, int k) {
    if (k <= 0 || k >= r->arity()) throw std::invalid_argument("bad tail split");
    std::vector<std::string> vars(r->vars.begin() + k, r->vars.end());
    return make_ring(r->field, std::move(vars));
}

} // namespace pdual
