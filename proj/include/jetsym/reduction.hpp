#pragma once

#include <jetsym/catalog.hpp>

#include <string>
#include <vector>

namespace jetsym {

/// exp(-(im/2)(x0+x3) + phi) with phi over (tau, x1, x2), tau = x0 - x3.
Expr ansatz_expression();

/// Image of a u or u* jet: total derivatives of the ansatz, with
/// d/dx0 = d/dx0 + D_tau and d/dx3 = d/dx3 - D_tau on phi-jets. Memoized.
Expr ansatz_image(const JetVar& j);

/// Replaces every u and u* jet by its ansatz image; phi-jets pass through.
Expr ansatz_substitute(const Expr& e);

/// lhs = rhs after ansatz substitution. Either side may mix u and phi jets.
struct Identity {
    std::string name;
    Expr lhs;
    Expr rhs;
    bool expected = true;
    std::string note;
};

struct IdentityResult {
    std::string name;
    bool holds = false;
    bool expected = true;
    Expr residual;

    bool ok() const { return holds == expected; }
};

/// The eleven dictionary identities followed by printed-form controls.
std::vector<Identity> dictionary(const Settings& s = {});
IdentityResult check_identity(const Identity& id);
std::vector<IdentityResult> verify_dictionary(const Settings& s = {});

/// u-form of each conditional invariant against its phi-form.
std::vector<IdentityResult> conditional_invariant_pullback(const Settings& s = {});

} // namespace jetsym
