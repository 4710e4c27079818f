#ifndef COVERREG_REPORT_IO_HPP
#define COVERREG_REPORT_IO_HPP

#include <string>

#include "coverreg/verify.hpp"

namespace coverreg {

// Versioned report serializations ("schema_version": 1). JSON and CSV are
// the stable machine-readable surfaces with identical columns; the text
// format is human-oriented and may change.
std::string report_json(const SweepResult& result);
std::string report_csv(const SweepResult& result);
std::string report_text(const SweepResult& result);

}  // namespace coverreg

#endif
