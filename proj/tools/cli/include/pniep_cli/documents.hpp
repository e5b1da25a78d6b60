#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pniep/matrix.hpp"
#include "pniep/spectrum.hpp"
#include "pniep_cli/config.hpp"

namespace pniep::cli {

/// {"spectrum": [[re, im], ...], "name"?: string, "notes"?: string}
struct SpectrumDocument {
  std::string name;
  std::vector<Complex> values;
  std::string notes;

  Spectrum spectrum(const Tolerances& tol) const { return Spectrum(values, tol); }
};

/// Parses JSON, or with Format::Text also the plain list form
/// "4, 1, -3, -1+3i, -1-3i" (JSON is still accepted when the input starts
/// with '{'). Errors are ParseError naming the offending element.
SpectrumDocument parse_spectrum_document(std::string_view text, Format format);

/// One complex literal: "2", "-1.5e3", "3i", "-i", "-1+3i", "2-0.5j".
Complex parse_complex(std::string_view token);

/// A JSON array of documents, or one document per line (JSON lines, or text
/// lists in text mode).
std::vector<SpectrumDocument> parse_batch(std::string_view text, Format format);

/// {"n": int, "rows": [[...]]}, a bare array of rows, or any object with a
/// "matrix" member of either form (e.g. realize output).
Matrix parse_matrix_document(std::string_view text);

/// The "spectrum" member carried next to a matrix, if present.
std::optional<SpectrumDocument> embedded_spectrum(std::string_view text);

}  // namespace pniep::cli
