#pragma once

#include "hedgelab/market.hpp"
#include "hedgelab/topology.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hedgelab {

using Json = nlohmann::ordered_json;

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

struct SequenceDocument {
  std::string name;
  SequenceSpec spec;
  /// Limit proposed for closed-price and is-limit; canonical inf_n X_n when absent.
  std::optional<RandomVariable> limit;
};

struct MenuDocument {
  std::string anchor;  ///< time label
  Named<RandomVariable> entries;
};

/// In-memory form of a model file. Values are keyed by outcome index in the
/// order of `space.outcomes`.
struct ModelDocument {
  SpaceSpec space;
  std::size_t assets = 0;
  std::vector<std::vector<Point>> prices;  ///< [time][outcome]
  std::optional<RandomVariable> payoff;
  Named<RandomVariable> claims;
  std::optional<MenuDocument> menu;
  std::vector<SequenceDocument> sequences;
  Named<RandomVariable> variables;
  Named<ScalarProcess> processes;
};

/// Structural parse. Throws InputError naming the offending field.
ModelDocument parse_document(const Json& json);
Json serialize_document(const ModelDocument& doc);

/// Every violated invariant: structure, space, prices, menu, sequences and
/// processes. Empty when the document is valid.
std::vector<std::string> check_document(const Json& json);

/// Reads and parses JSON from a file. Throws InputError when unreadable.
Json read_json_file(const std::string& path);

FilteredSpace build_space(const ModelDocument& doc);
/// Throws InputError when the document has no prices.
MarketModel build_model(const ModelDocument& doc);
PortfolioMenu build_menu(const FilteredSpace& space, const ModelDocument& doc);

/// Looks up a named entry in claims, variables or menu entries, in that order;
/// "payoff" names the payoff.
const RandomVariable& find_variable(const ModelDocument& doc, const std::string& name);
const SequenceDocument& find_sequence(const ModelDocument& doc, const std::string& name);
const ScalarProcess& find_process(const ModelDocument& doc, const std::string& name);

/// Outcome-keyed object {"w1": "1/2", ...}.
Json variable_json(const FilteredSpace& space, const RandomVariable& x);
Json extended_json(const FilteredSpace& space, const std::vector<ExtendedRational>& x);
Json point_json(const Point& p);

}  // namespace hedgelab
