// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/classalg.hpp"
#include "hn/partition.hpp"
#include "hn/symfun.hpp"
#include "hn/tuple_oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hn {

// Wire formats: partitions are JSON integer arrays, rationals are strings
// "num/den", coefficient maps are objects keyed by partition strings.

nlohmann::json partition_json(const Partition& p);
std::vector<Partition> parse_profiles(const std::string& text); // "[3],[2,1]" or JSON array

nlohmann::json central_element_json(const CentralElement& x);
CentralElement parse_central_element(const nlohmann::json& j);

nlohmann::json powersum_json(const PowerSumPoly& f);
PowerSumPoly parse_powersum(const nlohmann::json& j);

// complete grid over the tower tuples, zero entries written explicitly
nlohmann::json tally_json(const ProfileTally& t);

std::string tuple_key_str(const std::vector<Partition>& key);

} // namespace hn
