#pragma once

#include <iosfwd>
#include <string>

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"
#include "diraclab/prw.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/witness.hpp"

namespace diraclab {

/** Round-trip exact decimal form, up to 17 significant digits ("%.17g"). */
std::string format_g17(double v);

/** CSV "component,x1[,x2[,x3]],value"; components outermost (1-based in the
 *  file), sites in lexicographic coordinate order.  Deterministic bytes. */
void write_density_csv(std::ostream& os, const DensityField& field);
void write_density_csv(const std::string& path, const DensityField& field);

/** Same schema for a 1d lattice pair: components 1 (plus) and 2 (minus). */
void write_lattice_csv(std::ostream& os, const LatticeField& field);
void write_lattice_csv(const std::string& path, const LatticeField& field);

/** CSV "state,position", one row per walker, states +-1. */
void write_ensemble_csv(std::ostream& os, const WalkerEnsemble& ensemble);
void write_ensemble_csv(const std::string& path, const WalkerEnsemble& ensemble);

/** CSV "state,bin_center,mass" for a binned ensemble. */
void write_histogram_csv(std::ostream& os, const LatticeField& histogram);
void write_histogram_csv(const std::string& path, const LatticeField& histogram);

/** JSON records with fixed key order; matrix indices are emitted 1-based. */
std::string witness_json(const Witness& w, const GridSpec& grid);
std::string verdict_json(const TheoremVerdict& v);
std::string positivity_json(const PositivityReport& report, const GridSpec& grid);

}  // namespace diraclab
