#include "spectra/csv.hpp"

#include <charconv>
#include <cstdio>

namespace spectra::csv {

std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

void write_header(std::ostream& os, const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ',';
        os << cols[i];
    }
    os << '\n';
}

void write_row(std::ostream& os, const std::vector<double>& vals) {
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ',';
        os << fmt(vals[i]);
    }
    os << '\n';
}

}  // namespace spectra::csv
