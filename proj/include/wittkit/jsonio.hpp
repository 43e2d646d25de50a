#pragma once

// JSON round-tripping for the two data schemas the command line speaks:
// principal q-series tails and graded module term lists.  Reads are strict —
// anything off-schema raises ParseError — and emits are canonical, so
// emit then ingest is the identity on normalized data.

#include <string>

#include "wittkit/gradedlog.hpp"
#include "wittkit/qseries.hpp"
#include "wittkit/ring.hpp"

namespace wittkit {

// {"f": ["196884", "-3/2", ...]}; exact integers may also appear bare.
QSeries read_qseries(const std::string& text);
std::string write_qseries(const QSeries& f);

// [{"alpha": [1, 0], "parity": 0, "coeff": "3/2"}, ...].  Terms repeating an
// index accumulate; terms above the height cap are dropped like any other
// truncation.  Coefficients land in `ring` (integrality enforced there).
GradedSeries read_graded_series(const std::string& text, const RingPtr& ring,
                                unsigned rank, unsigned cap);
// Numeric coefficients only; a symbolic series has no schema to land in.
std::string write_graded_series(const GradedSeries& s);

}  // namespace wittkit
