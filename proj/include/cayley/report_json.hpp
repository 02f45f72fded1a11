#pragma once

#include <string>

#include <json.hpp>

#include "cayley/census.hpp"
#include "cayley/classify.hpp"
#include "cayley/unlabeled.hpp"

namespace cayley {

// Key order is part of the frozen schema; reports are diffed byte-for-byte.
using ojson = nlohmann::ordered_json;

ojson to_json(const BigInt& v);  // number when exact in a double, else decimal string

ojson classification_json(const GroupContext& ctx, const Bitset& s, Mode mode,
                          const Classification& c);
std::string classification_text(const GroupContext& ctx, const Bitset& s, Mode mode,
                                const Classification& c);

ojson census_json(const CensusReport& rep);
std::string census_csv(const CensusReport& rep, bool header = true);
std::string census_text(const CensusReport& rep);

ojson sample_json(const SampleReport& rep);
std::string sample_csv(const SampleReport& rep, bool header = true);

ojson unlabeled_json(const UnlabeledReport& rep);

ojson bounds_json(unsigned n, unsigned m);

std::string dump_json(const ojson& j);

}  // namespace cayley
