#pragma once

// Text and JSON renderings shared by the CLI and tests.
//
// Arbitrary-precision integers become JSON numbers when they fit in 64 bits
// and decimal strings otherwise.

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "rothkit/bundle_maps.hpp"
#include "rothkit/chow_ring.hpp"
#include "rothkit/cohomology.hpp"
#include "rothkit/roth.hpp"
#include "rothkit/scrolls.hpp"

namespace rothkit {

nlohmann::json json_int(const mpz_class& v);

nlohmann::json to_json(const ScrollSpec& s);
nlohmann::json to_json(const ChowClass& c);
nlohmann::json to_json(const RothReport& r);
nlohmann::json to_json(const Verification& v);
nlohmann::json to_json(const CastelnuovoParams& p);
nlohmann::json to_json(const CohomologyTable& t);
nlohmann::json to_json(const WitnessMatrix& t);

/// `key=value` lines in a fixed order.
std::string to_text(const ScrollSpec& s);
std::string to_text(const RothReport& r);
std::string to_text(const Verification& v);
std::string to_text(const CastelnuovoParams& p);

}  // namespace rothkit
