#pragma once

#include "shiftgcd/crt_instance.hpp"

#include <json.hpp>

namespace shiftgcd {

/// Wire format for HardInstance. Primes and vector entries travel as decimal
/// strings: even small instances overflow native JSON numbers.
inline nlohmann::ordered_json instance_to_json(const HardInstance& inst) {
  nlohmann::ordered_json doc;
  doc["kind"] = "crt-hard-instance";
  doc["n"] = inst.n;
  doc["H"] = inst.H;
  nlohmann::ordered_json assignments = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < inst.tuples.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["tuple"] = inst.tuples[i];
    entry["prime"] = std::to_string(inst.primes[i]);
    assignments.push_back(std::move(entry));
  }
  doc["assignments"] = std::move(assignments);
  doc["a"] = inst.a.to_strings();
  doc["certified_lower_bound"] = inst.certified_lower_bound;
  return doc;
}

inline HardInstance instance_from_json(const nlohmann::ordered_json& doc) {
  try {
    if (doc.at("kind").get<std::string>() != "crt-hard-instance")
      throw DomainError("instance_from_json: unexpected document kind");
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<std::uint64_t> primes;
    for (const auto& entry : doc.at("assignments")) {
      tuples.push_back(entry.at("tuple").get<std::vector<std::int64_t>>());
      const Integer p = detail::parse_integer(entry.at("prime").get<std::string>());
      if (p < 2 || p > std::numeric_limits<std::uint64_t>::max())
        throw DomainError("instance_from_json: prime out of range");
      primes.push_back(p.convert_to<std::uint64_t>());
    }
    std::vector<Integer> entries;
    for (const auto& s : doc.at("a"))
      entries.push_back(detail::parse_integer(s.get<std::string>()));
    return HardInstance{doc.at("n").get<int>(),
                        doc.at("H").get<std::int64_t>(),
                        std::move(tuples),
                        std::move(primes),
                        IntVector(std::move(entries)),
                        doc.at("certified_lower_bound").get<std::int64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("instance_from_json: malformed document: ") +
                      e.what());
  }
}

}  // namespace shiftgcd
