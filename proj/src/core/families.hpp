#ifndef YTAB_CORE_FAMILIES_HPP
#define YTAB_CORE_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "grammar.hpp"
#include "normalorder.hpp"
#include "poly.hpp"

namespace ytab {

struct UnknownFamily : PolyError {
  using PolyError::PolyError;
};
struct BadParams : PolyError {
  using PolyError::PolyError;
};

/// Catalog names:
///   eulerianA, eulerianA_biv, eulerianB, kInvEulerian (param k),
///   secondOrder, secondOrderTri, kOrder (param k), flagAP,
///   interiorPeak, leftPeak, narayanaA, narayanaB, ramanujan, andre,
///   hermite, lsDescent, multisetDescent2.
/// Families over one variable use x; bivariate ones x,y; the
/// trivariate one x,y,z.
Poly family(const std::string& name, int n,
            std::optional<int> param = std::nullopt);

std::vector<std::string> family_names();

/// Number triangles: stirling1 (signless first kind), stirling2,
/// eulerianNum, lah, legendreStirling, ramanujanImproper.
Int number_table(const std::string& kind, int n, int k);

}  // namespace ytab

#endif
