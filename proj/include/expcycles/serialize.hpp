#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expcycles/expansion.hpp"
#include "expcycles/spectrum.hpp"
#include "expcycles/stage_check.hpp"
#include "expcycles/thm1.hpp"
#include "expcycles/thm2.hpp"
#include "expcycles/thm3.hpp"

namespace expcycles {

// Ordered so that identical inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Path& p);
Json to_json(const CycleCertificate& c);  // {"length", "vertices"}
Json to_json(const RootedTree& t);        // {"root", "size", "parent": [[v, p], ...]} in BFS order
Json to_json(const ExpansionCertificate& c);
Json to_json(const BetaCheck& c, double beta);
Json to_json(const HaxellCheck& c);
Json to_json(const Spectrum& s, bool witnesses = false);
Json to_json(const CheckLog& log);
Json to_json(const PipelineConstants& c);

/// Traces carry every intermediate set, so two runs compare by dump().
Json to_json(const Thm2Trace& t);
Json to_json(const Thm1Trace& t);
Json to_json(const Thm1Run& r);
Json to_json(const Thm3Result& r);

/// {"error": kind, "message", ...} with the stage or witnesses the subclass carries.
Json error_json(const Error& e);

std::string_view to_string(CertificateKind kind);
std::string_view to_string(BroomVariant v);

/// Every object of the form {"length": L, "vertices": [...]} anywhere inside j,
/// in document order. The input of `validate`.
std::vector<std::vector<Vertex>> collect_cycles(const nlohmann::json& j);

}  // namespace expcycles
