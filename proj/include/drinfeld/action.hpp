#pragma once

#include <optional>
#include <string>

#include "drinfeld/orders.hpp"

namespace drinfeld {

struct IdealAction {
    SkewPoly isogeny;      // u_I, monic right gcd of phi_x for x in I
    DrinfeldModule module; // I * phi, with u_I phi_T = (I*phi)_T u_I
};

/// Skew generator of the left ideal generated by I (I integral, inside End).
SkewPoly idealIsogeny(EndRing const & E, FracIdeal const & I);
IdealAction act(EndRing const & E, FracIdeal const & I);

/// {x in O : u_I right-divides x}, O the order of I.
FracIdeal annihilatorIdeal(EndRing const & E, FracIdeal const & I);

struct KernelReport {
    bool kernel = false;
    /// An element of the annihilator not in I.
    std::optional<FVec> witness;
    /// Set when the witness lies in A.
    std::optional<APoly> witnessInA;
};
KernelReport isKernelIdeal(EndRing const & E, FracIdeal const & I);

struct EndComparison {
    ALattice multiplicator; // O_I in pi-coordinates
    ALattice actedEnd;      // End(I*phi) in pi-coordinates
    bool contained = false;
    bool equal = false;
};
EndComparison endOfActedModule(EndRing const & E, FracIdeal const & I);

} // namespace drinfeld
