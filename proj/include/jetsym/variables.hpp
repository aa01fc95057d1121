#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace jetsym {

/// Independent variables. x0..x3 span the wave setting; tau, x1, x2 span
/// the reduced (Schrodinger) setting, sharing x1 and x2 with the wave one.
enum class BaseVar : std::uint8_t { x0, x1, x2, x3, tau };
inline constexpr std::size_t kBaseVarCount = 5;

/// Dependent functions. Each has a conjugate partner.
enum class FunctionId : std::uint8_t { u, u_conj, Phi, Phi_conj, phi, phi_conj };
inline constexpr std::size_t kFunctionCount = 6;

/// Real symbolic constants.
enum class Param : std::uint8_t { m, lambda, n };

FunctionId conjugate(FunctionId f);
bool is_conjugated(FunctionId f);

/// Variables a function depends on: u over x0..x3, Phi and phi over tau, x1, x2.
std::span<const BaseVar> domain(FunctionId f);
bool in_domain(FunctionId f, BaseVar v);

std::string name(BaseVar v);
std::string name(FunctionId f);
std::string name(Param p);

/// Derivative multi-index as per-variable counts; partials commute by construction.
class MultiIndex {
public:
    constexpr MultiIndex() = default;

    int count(BaseVar v) const { return counts_[static_cast<std::size_t>(v)]; }
    int order() const;

    MultiIndex plus(BaseVar v) const;
    MultiIndex plus(const MultiIndex& o) const;
    /// Componentwise >=.
    bool contains(const MultiIndex& o) const;
    /// Componentwise difference; requires contains(o).
    MultiIndex minus(const MultiIndex& o) const;

    const std::array<std::uint8_t, kBaseVarCount>& counts() const { return counts_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::array<std::uint8_t, kBaseVarCount> counts_{};
};

MultiIndex make_index(std::initializer_list<BaseVar> vars);

struct JetVar {
    FunctionId function = FunctionId::u;
    MultiIndex index;

    int order() const { return index.order(); }

    friend bool operator==(const JetVar&, const JetVar&) = default;
    friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

JetVar jet(FunctionId f, std::initializer_list<BaseVar> vars = {});

/// Spelling used in derivative brackets: "0".."3" for x0..x3, "t" for tau.
std::string index_label(BaseVar v);
std::string to_string(const JetVar& j);

} // namespace jetsym
