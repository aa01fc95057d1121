#include <jetsym/variables.hpp>

#include <algorithm>
#include <stdexcept>

namespace jetsym {

namespace {

constexpr std::array<BaseVar, 4> kWaveDomain{BaseVar::x0, BaseVar::x1, BaseVar::x2, BaseVar::x3};
constexpr std::array<BaseVar, 3> kReducedDomain{BaseVar::tau, BaseVar::x1, BaseVar::x2};

} // namespace

FunctionId conjugate(FunctionId f)
{
    const auto i = static_cast<std::uint8_t>(f);
    return static_cast<FunctionId>(i ^ 1U);
}

bool is_conjugated(FunctionId f) { return (static_cast<std::uint8_t>(f) & 1U) != 0; }

std::span<const BaseVar> domain(FunctionId f)
{
    switch (f) {
    case FunctionId::u:
    case FunctionId::u_conj:
        return kWaveDomain;
    default:
        return kReducedDomain;
    }
}

bool in_domain(FunctionId f, BaseVar v)
{
    const auto d = domain(f);
    return std::find(d.begin(), d.end(), v) != d.end();
}

std::string name(BaseVar v)
{
    switch (v) {
    case BaseVar::x0: return "x0";
    case BaseVar::x1: return "x1";
    case BaseVar::x2: return "x2";
    case BaseVar::x3: return "x3";
    case BaseVar::tau: return "tau";
    }
    return "?";
}

std::string name(FunctionId f)
{
    switch (f) {
    case FunctionId::u: return "u";
    case FunctionId::u_conj: return "u*";
    case FunctionId::Phi: return "Phi";
    case FunctionId::Phi_conj: return "Phi*";
    case FunctionId::phi: return "phi";
    case FunctionId::phi_conj: return "phi*";
    }
    return "?";
}

std::string name(Param p)
{
    switch (p) {
    case Param::m: return "m";
    case Param::lambda: return "lambda";
    case Param::n: return "n";
    }
    return "?";
}

int MultiIndex::order() const
{
    int s = 0;
    for (auto c : counts_) {
        s += c;
    }
    return s;
}

MultiIndex MultiIndex::plus(BaseVar v) const
{
    MultiIndex r = *this;
    auto& c = r.counts_[static_cast<std::size_t>(v)];
    if (c == 255) {
        throw std::overflow_error("derivative order overflow");
    }
    ++c;
    return r;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const
{
    MultiIndex r = *this;
    for (std::size_t i = 0; i < kBaseVarCount; ++i) {
        r.counts_[i] = static_cast<std::uint8_t>(r.counts_[i] + o.counts_[i]);
    }
    return r;
}

bool MultiIndex::contains(const MultiIndex& o) const
{
    for (std::size_t i = 0; i < kBaseVarCount; ++i) {
        if (counts_[i] < o.counts_[i]) {
            return false;
        }
    }
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const
{
    if (!contains(o)) {
        throw std::invalid_argument("multi-index difference would be negative");
    }
    MultiIndex r = *this;
    for (std::size_t i = 0; i < kBaseVarCount; ++i) {
        r.counts_[i] = static_cast<std::uint8_t>(r.counts_[i] - o.counts_[i]);
    }
    return r;
}

MultiIndex make_index(std::initializer_list<BaseVar> vars)
{
    MultiIndex m;
    for (auto v : vars) {
        m = m.plus(v);
    }
    return m;
}

JetVar jet(FunctionId f, std::initializer_list<BaseVar> vars)
{
    for (auto v : vars) {
        if (!in_domain(f, v)) {
            throw std::invalid_argument(name(f) + " does not depend on " + name(v));
        }
    }
    return JetVar{f, make_index(vars)};
}

std::string index_label(BaseVar v)
{
    switch (v) {
    case BaseVar::x0: return "0";
    case BaseVar::x1: return "1";
    case BaseVar::x2: return "2";
    case BaseVar::x3: return "3";
    case BaseVar::tau: return "t";
    }
    return "?";
}

std::string to_string(const JetVar& j)
{
    std::string s = name(j.function);
    if (j.order() == 0) {
        return s;
    }
    s += '[';
    bool first = true;
    for (auto v : domain(j.function)) {
        for (int k = 0; k < j.index.count(v); ++k) {
            if (!first) {
                s += ',';
            }
            s += index_label(v);
            first = false;
        }
    }
    s += ']';
    return s;
}

} // namespace jetsym
