#pragma once

#include "sw/grbasis.hpp"
#include "sw/lattice.hpp"

namespace sw {

struct WalkerCaps {
  int max_N = 8;
  int max_rows = 6;
};

/// Raw cylinder partition function Z_{la,mu}(x|t): weighted sum over lattice
/// configurations with top word eps(mu), bottom word eps(la), q per seam
/// crossing.  Vicious runs n rows, osculating k rows; xs supplies one
/// spectral parameter per row (row 1 first).
Poly walker_Z(VarSpace vs, Kind kind, BoxShape shape, const BoxPartition& la,
              const BoxPartition& mu, const std::vector<Poly>& xs,
              const WalkerCaps& caps = WalkerCaps{});

/// Reversed normalization Z~_{la,mu}(x|t) = prod_i x_i^bound Z(x^{-1}|t)
/// with bound = k (vicious) or n (osculating).
Poly walker_Ztilde(VarSpace vs, Kind kind, BoxShape shape, const BoxPartition& la,
                   const BoxPartition& mu, const std::vector<Poly>& xs,
                   const WalkerCaps& caps = WalkerCaps{});

/// Toric-tableau closed form of Z~ for the vicious model (loop sequences,
/// factors over the per-strip column gaps).
Poly walker_Ztilde_toric(VarSpace vs, BoxShape shape, const BoxPartition& la,
                         const BoxPartition& mu);

/// Z~_{la,mu}(T_nu|t): substitute x_i = T_{nu_i + n + 1 - i}.
Poly specialize_at_T(VarSpace vs, BoxShape shape, const BoxPartition& la,
                     const BoxPartition& mu, const BoxPartition& nu);

}  // namespace sw
