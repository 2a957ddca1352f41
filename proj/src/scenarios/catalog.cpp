#include "galilei/scenarios.hpp"

namespace galilei::scenarios {

const std::vector<CatalogEntry>& catalog()
{
  static const std::vector<CatalogEntry> entries = {
    {"group-axioms", "fuzzed associativity, identity and inverse laws of both groups; Lie brackets from the group law",
     "group-product-and-inverse", false, false},
    {"bargmann-loop", "translate, boost, translate back, boost back: central element and per-mass state phase",
     "bargmann-loop-phase", true, false},
    {"boost-covariance", "evolve-then-boost against boost-then-evolve with the transformed potential",
     "schrodinger-boost-covariance", true, false},
    {"mass-interference", "extended group acts as a true representation; plain group leaves the cocycle phase",
     "projective-vs-true-representation", true, false},
    {"unstable-boost", "density ratio under a boost of a complex-mass channel and split-step decay",
     "unstable-particle-boost-factor", true, false},
    {"accelerated-frame", "free packet mapped to a uniformly accelerated frame against linear-potential evolution",
     "equivalence-principle-phase", true, false},
    {"kg-vs-schrodinger", "rest-stripped Klein-Gordon field against Schrodinger evolution as c grows",
     "klein-gordon-nonrelativistic-limit", true, false},
    {"remnant-phase", "exact Lorentz time shift times m c^2 against the Galilean boost phase",
     "relativistic-remnant-phase", false, true},
    {"lorentz-loop", "exact affine Lorentz loop against its order 1/c^2 translation",
     "lorentz-loop-translation", false, true},
    {"canonical-maps", "canonical boost maps on the mass shell, boundary term and decay mass ratio",
     "canonical-boost-and-decay-mass", false, false},
    {"sch5-residual", "five dimensional action axiom, invariant pairing and mass-channel Schrodinger residual",
     "five-dimensional-schrodinger", true, false},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
  for (const auto& e : catalog())
    if (e.name == name)
      return e;
  throw ConfigError("scenario", "unknown scenario '" + name + "'");
}

} // namespace galilei::scenarios
