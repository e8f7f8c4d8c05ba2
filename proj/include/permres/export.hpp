#pragma once

// Text and JSON export of boundary matrices and basis listings.

#include <ostream>
#include <string>

#include "json.hpp"

#include "permres/complex.hpp"

namespace permres {

/// `degree n rows R cols C`, then `row col {exp:coef,...}` per nonzero entry
/// (column-major, rows ascending).
void write_matrix_text(std::ostream& os, int degree, const LaurentMatrix& m);

/// Reads the text form back; throws std::invalid_argument on malformed input.
LaurentMatrix read_matrix_text(std::istream& is, int* degree = nullptr);

nlohmann::json matrix_json(int degree, const LaurentMatrix& m);

/// One line per basis symbol of degree n: `index chain | tableaux | tail`.
void write_basis_listing(std::ostream& os, const ComplexIndex& index, int n);

/// One line per standard tableau (the row basis of d_0).
void write_standard_listing(std::ostream& os, const Composition& lambda);

}  // namespace permres
