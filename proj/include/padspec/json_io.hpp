#pragma once

#include "padspec/spectrum.hpp"

#include <nlohmann/json.hpp>

namespace padspec {

using json = nlohmann::ordered_json;

// -- parsing ---------------------------------------------------------------

Rational parse_rational(const json& j);
Scalar parse_scalar(const json& j, const Int& p);
LaurentPoly parse_laurent(const json& j, const Int& p);
Gauge parse_gauge(const json& j);
DiffOp parse_operator(const json& j, const Int& p);
PointDescriptor parse_point(const json& j, const Int& p);
Val parse_val(const json& j, const Int& p);

// -- serialization (canonical: fixed key order, exponents in lowest terms) --

json val_to_json(const Val& v);
json scalar_to_json(const Scalar& s);
json laurent_to_json(const LaurentPoly& f);
json gauge_to_json(const Gauge& g);
json operator_to_json(const DiffOp& P);
json point_to_json(const PointDescriptor& x);
json radii_report_to_json(const RadiiReport& rep);
json spectrum_report_to_json(const SpectrumReport& rep);

/// Executes one JobSpec document and returns the result document.
/// Throws Error with kind "ParseError" on malformed input and the domain
/// error kinds otherwise. Identical jobs produce byte-identical output.
json run_job(const json& job);

/// String-level front end: never throws; errors come back as
/// {"error": {"kind", "detail"}} and exit_code is set to 0, 2, 3 or 4.
std::string run_job_string(const std::string& input, bool pretty, int& exit_code);

} // namespace padspec
