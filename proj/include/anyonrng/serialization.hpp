// Copyright 2026 The anyonrng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anyonrng/bound_solver.hpp"
#include "anyonrng/certifier.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/protocol.hpp"
#include "json.hpp"

namespace anyonrng {

using Json = nlohmann::ordered_json;

/// Embedded in every output file.
inline constexpr const char* kFormatVersion = "anyonrng/1";

/// Shortest decimal that round-trips the double.
std::string format_double(double v);

/// Writes each line of `config.dump(2)` prefixed with "# ".
void write_comment_header(std::ostream& out, const Json& config);

/// Comment lines ("# ...") are skipped by every CSV reader.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       const Json& config);
/// Throws DataIntegrityError on malformed rows, out-of-range bits or a
/// non-contiguous trial column.
std::vector<TrialRecord> read_records_csv(std::istream& in);

Json to_json(const ViolationEstimate& e);
ViolationEstimate estimate_from_json(const Json& j);

Json to_json(const SettingsDistribution& d);
SettingsDistribution distribution_from_json(const Json& j);

Json to_json(const FCurveTable& t);
FCurveTable fcurve_from_json(const Json& j);
void write_fcurve_csv(std::ostream& out, const FCurveTable& t, const Json& config);
FCurveTable read_fcurve_csv(std::istream& in);

Json to_json(const CertificationParams& p);
CertificationParams params_from_json(const Json& j);
Json to_json(const EntropyCertificate& c);
EntropyCertificate certificate_from_json(const Json& j);

void write_expansion_csv(std::ostream& out, const ExpansionCurve& curve,
                         const Json& config);
Json to_json(const ExpansionCurve& curve);

Json to_json(const NoSignallingResult& r);
Json to_json(const AzumaCheck& c);

}  // namespace anyonrng
