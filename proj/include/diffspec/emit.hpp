// emit.hpp
//
// Deterministic serialization of result documents: JSON with sorted keys,
// CSV with a header row, fixed-width tables. Integers are always rendered
// as plain decimal tokens, never in scientific notation; big integers are
// emitted as raw decimal JSON numbers.

#ifndef DIFFSPEC_EMIT_HPP
#define DIFFSPEC_EMIT_HPP

#include <string>
#include <vector>

#include "diffspec/formulas.hpp"
#include "diffspec/linmaps.hpp"
#include "diffspec/spectra.hpp"
#include "diffspec/verify.hpp"

namespace diffspec {

enum class Format { json, csv, table };

Format parse_format(const std::string& s); // "json" | "csv" | "table"

std::string emit(const DifferentialSpectrum& sp, Format fmt);
std::string emit(const KernelProfile& prof, Format fmt);
std::string emit(const KloostermanValue& kv, KloostermanMethod method, Format fmt);
std::string emit(const CodeWeightCounts& cw, Format fmt);
std::string emit(const std::vector<ScanFinding>& findings, Format fmt);
std::string emit(const VerificationReport& report, Format fmt);

} // namespace diffspec

#endif
