#pragma once

#include <string>

#include "framesteps/gt_pattern.hpp"
#include "framesteps/spectral.hpp"
#include "framesteps/tableau.hpp"

namespace framesteps {

// Plain-text renderings mirror the French-notation figures: tableaux print
// top row first so the bottom row lands on the last line, skew cells show as
// dots. GT patterns print top row first with diagonal offsets.
std::string render_tableau_ascii(const Tableau& t);
std::string render_gt_ascii(const GtPattern& p);
std::string render_eigensteps_ascii(const EigenstepTable& table);

// LaTeX sources: ytableau environment for tableaux, matrix environment with
// staggered columns for GT patterns.
std::string render_tableau_latex(const Tableau& t);
std::string render_gt_latex(const GtPattern& p);

}  // namespace framesteps
