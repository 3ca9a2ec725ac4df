#pragma once

// JSON encodings of every result type. Integers are written as decimal strings so
// that no numeric width is part of the format; object keys come out sorted.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "zcoarse/gadic_limits.hpp"
#include "zcoarse/oracle.hpp"
#include "zcoarse/profinite.hpp"
#include "zcoarse/rectify.hpp"
#include "zcoarse/spectra.hpp"

namespace zcoarse::report {

using nlohmann::json;

json integer(const BigInt& v);
json integer(std::int64_t v);
json integer(std::uint64_t v);
json integers(const std::vector<std::int64_t>& vs);
json integers(const std::vector<BigInt>& vs);

json to_json(const SpecialRep& r);
json to_json(const OracleResult& r);
json to_json(const FormulaReport& r);
json to_json(const DefectResult& r);
json to_json(const GadicApprox& x);
json to_json(const WitnessSequence& w);
json to_json(const StabilizationReport& r);
json to_json(const PairSampling& s);
json to_json(const ContractionCertificate& c);
json to_json(const ContinuityCertificate& c);
json to_json(const NonproperReport& r);
json to_json(const Evidence& e);
json to_json(const PrimeVerdict& v);
/// The report without evidence payloads; see evidence_of.
json to_json(const SpectrumReport& r);
json evidence_of(const SpectrumReport& r);
json to_json(const ComparisonReport& c);
json to_json(const QadicApprox& x);
json to_json(const QStarModulus& m);
json to_json(const FloorCongruence& c);
json to_json(const PartitionCover& c);
json to_json(const Table& t);
json to_json(const CsbResult& r);
json to_json(const AuditResult& a);
json to_json(const RectifyReport& r);

/// {"command", "config", "results", "evidence", "version", "duration_ms"}
json envelope(const std::string& command, json config, json results, json evidence, std::int64_t duration_ms);

const char* version();

}  // namespace zcoarse::report
