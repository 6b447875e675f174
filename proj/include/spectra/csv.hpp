#pragma once

#include <string>
#include <vector>
#include <ostream>

namespace spectra::csv {

/// Shortest decimal representation that round-trips to the same double.
std::string fmt(double v);

/// Fixed 17-significant-digit form, used by the matrix triplet dumps.
std::string fmt17(double v);

void write_header(std::ostream& os, const std::vector<std::string>& cols);
void write_row(std::ostream& os, const std::vector<double>& vals);

}  // namespace spectra::csv
