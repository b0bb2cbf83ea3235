#pragma once

// JSON and TSV renderings. All output is deterministic for identical input.

#include "steinext/extengine.hpp"
#include "steinext/verify.hpp"

#include <json.hpp>

#include <string>

namespace steinext {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv };

struct TableQuery {
  const RootSystem* rs = nullptr;
  SubsetMask I;
  SubsetMask J;
  RingSpec ring;
  int center_rank = 0;
};

Json to_json(const BigInt& x);
Json to_json(const HomologyGroup& g);
Json to_json(const ExtTable& table, const TableQuery& query, const std::string& method);
Json to_json(const RootSystem& rs);
Json to_json(const ChainComplex& c);
Json to_json(const ConditionReport& report, const RootSystem& rs, const RingSpec& spec);
Json to_json(const DoubleCosetRep& rep, const RootSystem& rs);
Json to_json(const VanishingCertificate& cert);
Json to_json(const VerifyReport& report);

// "degree\trank\ttorsion" header, then one row per degree ascending.
std::string table_tsv(const ExtTable& table);
std::string emit_table(const ExtTable& table, const TableQuery& query, const std::string& method, Format format);

}  // namespace steinext
