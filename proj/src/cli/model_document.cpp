#include "hedgelab/cli/model_document.hpp"

#include <fstream>
#include <sstream>

namespace hedgelab {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

const Json& array_of(const Json& j, const std::string& where, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (size && j.size() != *size) {
    throw InputError(where + ": expected " + std::to_string(*size) + " entries, got " +
                     std::to_string(j.size()));
  }
  return j;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational \"num/den\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

ExtendedRational extended_of(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_extended(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return rational_of(j, where);
}

RandomVariable variable_of(const Json& j, std::size_t n, const std::string& where) {
  array_of(j, where, n);
  RandomVariable x(n);
  for (std::size_t w = 0; w < n; ++w) x[w] = rational_of(j[w], at(where, w));
  return x;
}

std::size_t outcome_of(const std::vector<std::string>& outcomes, const Json& j, const std::string& where) {
  const auto label = string_of(j, where);
  for (std::size_t w = 0; w < outcomes.size(); ++w) {
    if (outcomes[w] == label) return w;
  }
  throw InputError(where + ": unknown outcome \"" + label + "\"");
}

SequenceTail tail_of(const Json& j, std::size_t n, const std::string& where) {
  SequenceTail tail;
  if (j.is_string() && j.get<std::string>() == "constant") return tail;
  if (j.is_object() && j.contains("periodic")) {
    const auto& p = j.at("periodic");
    if (!p.is_number_unsigned() || p.get<std::size_t>() == 0) {
      throw InputError(at(where, "periodic") + ": expected a positive period");
    }
    tail.kind = SequenceTail::Kind::Periodic;
    tail.period = p.get<std::size_t>();
    return tail;
  }
  if (j.is_object() && j.contains("monotone")) {
    const auto& lim = array_of(j.at("monotone"), at(where, "monotone"), n);
    tail.kind = SequenceTail::Kind::Monotone;
    for (std::size_t w = 0; w < n; ++w) tail.limit.push_back(extended_of(lim[w], at(at(where, "monotone"), w)));
    return tail;
  }
  throw InputError(where + ": expected \"constant\", {\"periodic\": p} or {\"monotone\": [...]}");
}

Json rational_json(const Rational& r) { return format_rational(r); }

Json values_json(const RandomVariable& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(rational_json(v));
  return out;
}

Json tail_json(const SequenceTail& tail) {
  switch (tail.kind) {
    case SequenceTail::Kind::Constant: return "constant";
    case SequenceTail::Kind::Periodic: return Json{{"periodic", tail.period}};
    case SequenceTail::Kind::Monotone: {
      Json lim = Json::array();
      for (const auto& v : tail.limit) lim.push_back(format_extended(v));
      return Json{{"monotone", lim}};
    }
  }
  return nullptr;
}

template <class T>
const T& find_named(const Named<T>& list, const std::string& name) {
  for (const auto& [key, value] : list) {
    if (key == name) return value;
  }
  static const T none{};
  return none;
}

template <class T>
bool has_named(const Named<T>& list, const std::string& name) {
  for (const auto& entry : list) {
    if (entry.first == name) return true;
  }
  return false;
}

}  // namespace

ModelDocument parse_document(const Json& json) {
  if (!json.is_object()) throw InputError("document: expected an object");
  ModelDocument doc;
  auto& space = doc.space;

  const auto& outcomes = array_of(field(json, "outcomes", "document"), "outcomes");
  for (std::size_t w = 0; w < outcomes.size(); ++w) space.outcomes.push_back(string_of(outcomes[w], at("outcomes", w)));
  const std::size_t n = space.outcomes.size();

  const auto& probs = array_of(field(json, "probabilities", "document"), "probabilities", n);
  for (std::size_t w = 0; w < n; ++w) space.probabilities.push_back(rational_of(probs[w], at("probabilities", w)));

  const auto& times = array_of(field(json, "times", "document"), "times");
  for (std::size_t t = 0; t < times.size(); ++t) space.times.push_back(string_of(times[t], at("times", t)));

  const auto& parts = array_of(field(json, "partitions", "document"), "partitions", times.size());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto where = at("partitions", t);
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t c = 0; c < array_of(parts[t], where).size(); ++c) {
      const auto cw = at(where, c);
      std::vector<std::size_t> cell;
      for (std::size_t i = 0; i < array_of(parts[t][c], cw).size(); ++i) {
        cell.push_back(outcome_of(space.outcomes, parts[t][c][i], at(cw, i)));
      }
      cells.push_back(std::move(cell));
    }
    space.partitions.push_back(std::move(cells));
  }
  if (json.contains("relaxed_terminal")) {
    if (!json.at("relaxed_terminal").is_boolean()) throw InputError("relaxed_terminal: expected a boolean");
    space.relaxed_terminal = json.at("relaxed_terminal").get<bool>();
  }

  if (json.contains("assets")) {
    if (!json.at("assets").is_number_unsigned()) throw InputError("assets: expected a nonnegative integer");
    doc.assets = json.at("assets").get<std::size_t>();
  }
  if (json.contains("prices")) {
    const auto& prices = array_of(json.at("prices"), "prices", times.size());
    for (std::size_t t = 0; t < prices.size(); ++t) {
      const auto where = at("prices", t);
      std::vector<Point> slice;
      for (std::size_t w = 0; w < array_of(prices[t], where, n).size(); ++w) {
        const auto pw = where + "[" + space.outcomes[w] + "]";
        const auto& coords = array_of(prices[t][w], pw, doc.assets);
        Point p;
        for (std::size_t j = 0; j < coords.size(); ++j) p.push_back(rational_of(coords[j], at(pw, j)));
        slice.push_back(std::move(p));
      }
      doc.prices.push_back(std::move(slice));
    }
  }

  if (json.contains("payoff")) doc.payoff = variable_of(json.at("payoff"), n, "payoff");

  auto named_variables = [&](const char* key, Named<RandomVariable>& into) {
    if (!json.contains(key)) return;
    const auto& obj = json.at(key);
    if (!obj.is_object()) throw InputError(std::string(key) + ": expected an object");
    for (const auto& [name, values] : obj.items()) {
      into.emplace_back(name, variable_of(values, n, at(key, name)));
    }
  };
  named_variables("claims", doc.claims);
  named_variables("variables", doc.variables);

  if (json.contains("menu")) {
    const auto& menu = json.at("menu");
    if (!menu.is_object()) throw InputError("menu: expected an object");
    MenuDocument m;
    m.anchor = string_of(field(menu, "anchor", "menu"), "menu.anchor");
    const auto& entries = field(menu, "entries", "menu");
    if (!entries.is_object()) throw InputError("menu.entries: expected an object");
    for (const auto& [name, values] : entries.items()) {
      m.entries.emplace_back(name, variable_of(values, n, "menu.entries." + name));
    }
    doc.menu = std::move(m);
  }

  if (json.contains("sequences")) {
    const auto& seqs = array_of(json.at("sequences"), "sequences");
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const auto where = at("sequences", i);
      if (!seqs[i].is_object()) throw InputError(where + ": expected an object");
      SequenceDocument s;
      s.name = string_of(field(seqs[i], "name", where), at(where, "name"));
      const auto& prefix = array_of(field(seqs[i], "prefix", where), at(where, "prefix"));
      for (std::size_t k = 0; k < prefix.size(); ++k) {
        s.spec.prefix.push_back(variable_of(prefix[k], n, at(at(where, "prefix"), k)));
      }
      s.spec.tail = seqs[i].contains("tail") ? tail_of(seqs[i].at("tail"), n, at(where, "tail")) : SequenceTail{};
      if (seqs[i].contains("limit")) s.limit = variable_of(seqs[i].at("limit"), n, at(where, "limit"));
      doc.sequences.push_back(std::move(s));
    }
  }

  if (json.contains("processes")) {
    const auto& obj = json.at("processes");
    if (!obj.is_object()) throw InputError("processes: expected an object");
    for (const auto& [name, slices] : obj.items()) {
      const auto where = at("processes", name);
      ScalarProcess m;
      for (std::size_t t = 0; t < array_of(slices, where, times.size()).size(); ++t) {
        m.push_back(variable_of(slices[t], n, at(where, t)));
      }
      doc.processes.emplace_back(name, std::move(m));
    }
  }
  return doc;
}

Json serialize_document(const ModelDocument& doc) {
  const auto& space = doc.space;
  Json out;
  out["outcomes"] = space.outcomes;
  out["probabilities"] = Json::array();
  for (const auto& p : space.probabilities) out["probabilities"].push_back(rational_json(p));
  out["times"] = space.times;
  out["partitions"] = Json::array();
  for (const auto& cells : space.partitions) {
    Json part = Json::array();
    for (const auto& cell : cells) {
      Json labels = Json::array();
      for (auto w : cell) labels.push_back(space.outcomes[w]);
      part.push_back(std::move(labels));
    }
    out["partitions"].push_back(std::move(part));
  }
  if (space.relaxed_terminal) out["relaxed_terminal"] = true;
  out["assets"] = doc.assets;
  if (!doc.prices.empty()) {
    out["prices"] = Json::array();
    for (const auto& slice : doc.prices) {
      Json s = Json::array();
      for (const auto& p : slice) s.push_back(point_json(p));
      out["prices"].push_back(std::move(s));
    }
  }
  if (doc.payoff) out["payoff"] = values_json(*doc.payoff);
  if (!doc.claims.empty()) {
    out["claims"] = Json::object();
    for (const auto& [name, x] : doc.claims) out["claims"][name] = values_json(x);
  }
  if (doc.menu) {
    Json entries = Json::object();
    for (const auto& [name, x] : doc.menu->entries) entries[name] = values_json(x);
    out["menu"] = Json{{"anchor", doc.menu->anchor}, {"entries", std::move(entries)}};
  }
  if (!doc.sequences.empty()) {
    out["sequences"] = Json::array();
    for (const auto& s : doc.sequences) {
      Json prefix = Json::array();
      for (const auto& x : s.spec.prefix) prefix.push_back(values_json(x));
      Json entry{{"name", s.name}, {"prefix", std::move(prefix)}, {"tail", tail_json(s.spec.tail)}};
      if (s.limit) entry["limit"] = values_json(*s.limit);
      out["sequences"].push_back(std::move(entry));
    }
  }
  if (!doc.variables.empty()) {
    out["variables"] = Json::object();
    for (const auto& [name, x] : doc.variables) out["variables"][name] = values_json(x);
  }
  if (!doc.processes.empty()) {
    out["processes"] = Json::object();
    for (const auto& [name, m] : doc.processes) {
      Json slices = Json::array();
      for (const auto& x : m) slices.push_back(values_json(x));
      out["processes"][name] = std::move(slices);
    }
  }
  return out;
}

std::vector<std::string> check_document(const Json& json) {
  ModelDocument doc;
  try {
    doc = parse_document(json);
  } catch (const InputError& e) {
    return {e.what()};
  }
  auto problems = check_space(doc.space);
  if (!problems.empty()) return problems;
  const FilteredSpace space(doc.space);
  const std::size_t n = space.outcome_count();

  for (std::size_t t = 0; t < doc.prices.size(); ++t) {
    const auto& part = space.partition(t);
    for (const auto& cell : part.cells()) {
      for (auto w : cell) {
        if (doc.prices[t][w] != doc.prices[t][cell.front()]) {
          problems.push_back("prices at time " + space.time_label(t) + " are not measurable: outcomes " +
                             space.outcome_label(cell.front()) + " and " + space.outcome_label(w) +
                             " share an atom but differ");
          break;
        }
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      for (const auto& v : doc.prices[t][w]) {
        if (v.sign() < 0) {
          problems.push_back("negative price at time " + space.time_label(t) + ", outcome " +
                             space.outcome_label(w));
          break;
        }
      }
    }
  }
  if (doc.menu) {
    try {
      space.time_index(doc.menu->anchor);
    } catch (const InputError& e) {
      problems.push_back(std::string("menu.anchor: ") + e.what());
    }
  }
  for (const auto& s : doc.sequences) {
    try {
      s.spec.validate();
    } catch (const InputError& e) {
      problems.push_back("sequence " + s.name + ": " + e.what());
    }
  }
  for (const auto& [name, m] : doc.processes) {
    try {
      require_adapted(space, m);
    } catch (const InputError& e) {
      problems.push_back("process " + name + ": " + e.what());
    }
  }
  return problems;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

FilteredSpace build_space(const ModelDocument& doc) { return FilteredSpace(doc.space); }

MarketModel build_model(const ModelDocument& doc) {
  if (doc.prices.empty()) throw InputError("document has no prices");
  FilteredSpace space(doc.space);
  std::vector<RandomVector> slices;
  for (const auto& slice : doc.prices) slices.emplace_back(slice, doc.assets);
  AdaptedProcess prices(space, std::move(slices));
  return MarketModel(std::move(space), std::move(prices));
}

PortfolioMenu build_menu(const FilteredSpace& space, const ModelDocument& doc) {
  if (!doc.menu) throw InputError("document has no menu");
  PortfolioMenu menu;
  menu.anchor = space.time_index(doc.menu->anchor);
  for (const auto& [name, x] : doc.menu->entries) {
    menu.names.push_back(name);
    menu.entries.push_back(x);
  }
  return menu;
}

const RandomVariable& find_variable(const ModelDocument& doc, const std::string& name) {
  if (name == "payoff") {
    if (!doc.payoff) throw InputError("document has no payoff");
    return *doc.payoff;
  }
  if (has_named(doc.claims, name)) return find_named(doc.claims, name);
  if (has_named(doc.variables, name)) return find_named(doc.variables, name);
  if (doc.menu && has_named(doc.menu->entries, name)) return find_named(doc.menu->entries, name);
  throw InputError("unknown variable \"" + name + "\"");
}

const SequenceDocument& find_sequence(const ModelDocument& doc, const std::string& name) {
  for (const auto& s : doc.sequences) {
    if (s.name == name) return s;
  }
  throw InputError("unknown sequence \"" + name + "\"");
}

const ScalarProcess& find_process(const ModelDocument& doc, const std::string& name) {
  if (!has_named(doc.processes, name)) throw InputError("unknown process \"" + name + "\"");
  return find_named(doc.processes, name);
}

Json variable_json(const FilteredSpace& space, const RandomVariable& x) {
  Json out = Json::object();
  for (std::size_t w = 0; w < x.size(); ++w) out[space.outcome_label(w)] = format_rational(x[w]);
  return out;
}

Json extended_json(const FilteredSpace& space, const std::vector<ExtendedRational>& x) {
  Json out = Json::object();
  for (std::size_t w = 0; w < x.size(); ++w) out[space.outcome_label(w)] = format_extended(x[w]);
  return out;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(format_rational(v));
  return out;
}

}  // namespace hedgelab
