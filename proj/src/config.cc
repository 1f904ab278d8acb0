// Copyright 2026 The Coinvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coinvest/config.h"

#include <cerrno>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace coinvest {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Reads the members of one JSON object and rejects any key not consumed.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw ConfigError(Where() + "expected an object");
  }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  std::string KeyPath(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void Number(const std::string& key, double& out) {
    if (const json* v = Find(key)) out = AsNumber(*v, KeyPath(key));
  }

  void Integer(const std::string& key, int& out) {
    if (const json* v = Find(key)) out = AsInteger(*v, KeyPath(key));
  }

  void Unsigned(const std::string& key, std::uint64_t& out) {
    if (const json* v = Find(key)) {
      if (!v->is_number_unsigned()) {
        throw ConfigError(KeyPath(key) + ": expected a nonnegative integer");
      }
      out = v->get<std::uint64_t>();
    }
  }

  void String(const std::string& key, std::string& out) {
    if (const json* v = Find(key)) {
      if (!v->is_string()) throw ConfigError(KeyPath(key) + ": expected a string");
      out = v->get<std::string>();
    }
  }

  void NumberList(const std::string& key, std::vector<double>& out) {
    if (const json* v = Find(key)) {
      const std::string path = KeyPath(key);
      if (!v->is_array()) throw ConfigError(path + ": expected an array");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(AsNumber((*v)[i], path + "[" + std::to_string(i) + "]"));
      }
    }
  }

  void IntegerList(const std::string& key, std::vector<int>& out) {
    if (const json* v = Find(key)) {
      const std::string path = KeyPath(key);
      if (!v->is_array()) throw ConfigError(path + ": expected an array");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(AsInteger((*v)[i], path + "[" + std::to_string(i) + "]"));
      }
    }
  }

  const json* Array(const std::string& key) {
    const json* v = Find(key);
    if (v && !v->is_array()) throw ConfigError(KeyPath(key) + ": expected an array");
    return v;
  }

  void Finish() const {
    for (auto it = object_.begin(); it != object_.end(); ++it) {
      if (!seen_.contains(it.key())) {
        throw ConfigError("unknown key '" + KeyPath(it.key()) + "'");
      }
    }
  }

  static double AsNumber(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path + ": must be finite");
    return x;
  }

  static int AsInteger(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
    return v.get<int>();
  }

 private:
  std::string Where() const { return path_.empty() ? "" : path_ + ": "; }

  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

ScenarioKind ParseScenarioKind(const std::string& name) {
  if (name == "same-type") return ScenarioKind::kSameType;
  if (name == "omega") return ScenarioKind::kOmega;
  if (name == "price-sweep") return ScenarioKind::kPriceSweep;
  if (name == "custom") return ScenarioKind::kCustom;
  throw ConfigError("scenario: unknown kind '" + name +
                    "' (same-type | omega | price-sweep | custom)");
}

void ParseMarket(ObjectReader& top, RunConfig& config) {
  const json* market = top.Find("market");
  if (!market) return;
  ObjectReader r(*market, "market");
  r.Number("d", config.market.price_per_millicore);
  r.Integer("years", config.market.years);
  r.Integer("slots_per_day", config.market.slots_per_day);
  r.Number("xi", config.market.xi);
  r.Finish();
}

void ParseLoadShape(ObjectReader& top, RunConfig& config) {
  config.load_shape = DefaultResidentialShape(config.market.slots_per_day);
  const json* shape = top.Find("load_shape");
  if (!shape) return;
  ObjectReader r(*shape, "load_shape");
  r.Number("a0", config.load_shape.base);
  if (const json* components = r.Array("components")) {
    config.load_shape.components.clear();
    for (std::size_t k = 0; k < components->size(); ++k) {
      ObjectReader c((*components)[k],
                     "load_shape.components[" + std::to_string(k) + "]");
      SinusoidalComponent component;
      c.Number("amplitude", component.amplitude);
      c.Number("offset", component.offset);
      c.Finish();
      config.load_shape.components.push_back(component);
    }
  }
  r.Finish();
}

void ParseCustom(ObjectReader& top, RunConfig& config) {
  const json* custom = top.Find("custom");
  if (!custom) return;
  ObjectReader r(*custom, "custom");
  if (const json* sps = r.Array("sps")) {
    for (std::size_t i = 0; i < sps->size(); ++i) {
      ObjectReader s((*sps)[i], "custom.sps[" + std::to_string(i) + "]");
      CustomSp sp;
      sp.id = "SP" + std::to_string(i + 1);
      s.String("id", sp.id);
      s.Number("beta", sp.beta);
      double daily = 0.0;
      if (s.Find("daily_load")) {
        s.Number("daily_load", daily);
        sp.daily_load = daily;
      }
      s.NumberList("loads", sp.loads);
      s.Finish();
      config.custom_sps.push_back(std::move(sp));
    }
  }
  r.Finish();
}

void ParseFixtures(ObjectReader& top, RunConfig& config) {
  const json* fixtures = top.Array("fixtures");
  if (!fixtures) return;
  for (std::size_t i = 0; i < fixtures->size(); ++i) {
    ObjectReader f((*fixtures)[i], "fixtures[" + std::to_string(i) + "]");
    FixtureGame fixture;
    fixture.name = "fixture" + std::to_string(i);
    f.String("name", fixture.name);
    f.Integer("players", fixture.players);
    f.NumberList("values", fixture.values);
    f.Finish();
    config.fixtures.push_back(std::move(fixture));
  }
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::string_view ScenarioKindName(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSameType: return "same-type";
    case ScenarioKind::kOmega: return "omega";
    case ScenarioKind::kPriceSweep: return "price-sweep";
    case ScenarioKind::kCustom: return "custom";
  }
  return "unknown";
}

ShapleyMethod ParseShapleyMethod(std::string_view name) {
  if (name == "closed") return ShapleyMethod::kClosedForm;
  if (name == "enum") return ShapleyMethod::kSubsetEnumeration;
  if (name == "sample") return ShapleyMethod::kPermutationSampling;
  throw ConfigError("shapley.method: unknown method '" + std::string(name) +
                    "' (enum | closed | sample)");
}

std::vector<double> DefaultLoadGrid() {
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(k * 1e6);
  return grid;
}

std::vector<double> DefaultOmegaGrid() {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(0.5 + 0.05 * k);
  grid.back() = 1.0;
  return grid;
}

std::vector<double> DefaultPriceGrid() {
  std::vector<double> grid;
  const double lo = std::log(0.005);
  const double hi = std::log(0.5);
  for (int k = 0; k < 20; ++k) grid.push_back(std::exp(lo + (hi - lo) * k / 19));
  grid.front() = 0.005;
  grid.back() = 0.5;
  return grid;
}

RunConfig::RunConfig()
    : same_type_l_total(DefaultLoadGrid()),
      omega_values(DefaultOmegaGrid()),
      price_values(DefaultPriceGrid()) {}

void RunConfig::Validate() const {
  try {
    market.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("market.") + e.what());
  }
  try {
    load_shape.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  Require(load_shape.slots == market.slots_per_day,
          "load_shape: slot count differs from market.slots_per_day");
  Require(samples >= 1, "shapley.samples: must be >= 1");

  switch (scenario) {
    case ScenarioKind::kSameType:
      Require(!same_type_l_total.empty(), "same_type.l_total: empty grid");
      for (double l : same_type_l_total) {
        Require(l >= 0.0, "same_type.l_total: entries must be >= 0");
      }
      break;
    case ScenarioKind::kOmega:
      Require(!omega_values.empty(), "omega.values: empty grid");
      for (double w : omega_values) {
        Require(w >= 0.5 && w <= 1.0, "omega.values: entries must be in [0.5, 1]");
      }
      Require(omega_l_total >= 0.0, "omega.l_total: must be >= 0");
      break;
    case ScenarioKind::kPriceSweep:
      Require(!price_values.empty(), "price_sweep.d: empty grid");
      for (double d : price_values) Require(d > 0.0, "price_sweep.d: entries must be > 0");
      Require(!price_num_sps.empty(), "price_sweep.num_sps: empty list");
      for (int n : price_num_sps) {
        Require(n >= 1 && n < 64, "price_sweep.num_sps: entries must be in [1, 63]");
      }
      Require(price_per_sp_load >= 0.0, "price_sweep.per_sp_load: must be >= 0");
      break;
    case ScenarioKind::kCustom:
      Require(!custom_sps.empty(), "custom.sps: need at least one SP");
      break;
  }
  for (std::size_t i = 0; i < custom_sps.size(); ++i) {
    const CustomSp& sp = custom_sps[i];
    const std::string path = "custom.sps[" + std::to_string(i) + "]";
    Require(sp.beta >= 0.0, path + ".beta: must be >= 0");
    Require(sp.daily_load.has_value() != !sp.loads.empty(),
            path + ": give exactly one of daily_load or loads");
    if (sp.daily_load) Require(*sp.daily_load >= 0.0, path + ".daily_load: must be >= 0");
    if (!sp.loads.empty()) {
      Require(static_cast<int>(sp.loads.size()) == market.slots_per_day,
              path + ".loads: length must equal market.slots_per_day");
      for (double l : sp.loads) Require(l >= 0.0, path + ".loads: entries must be >= 0");
    }
  }
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const FixtureGame& f = fixtures[i];
    const std::string path = "fixtures[" + std::to_string(i) + "]";
    Require(f.players >= 1 && f.players <= 12, path + ".players: must be in [1, 12]");
    Require(f.values.size() == (std::size_t{1} << f.players),
            path + ".values: need 2^players entries");
  }
}

RunConfig ParseConfig(std::string_view text) {
  RunConfig config;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    config.name = ScenarioKindName(config.scenario);
    config.Validate();
    return config;
  }
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }

  ObjectReader top(root, "");
  std::string scenario(ScenarioKindName(config.scenario));
  top.String("scenario", scenario);
  config.scenario = ParseScenarioKind(scenario);
  top.String("name", config.name);
  if (config.name.empty()) config.name = scenario;
  ParseMarket(top, config);
  ParseLoadShape(top, config);

  if (const json* v = top.Find("same_type")) {
    ObjectReader r(*v, "same_type");
    r.NumberList("l_total", config.same_type_l_total);
    r.Finish();
  }
  if (const json* v = top.Find("omega")) {
    ObjectReader r(*v, "omega");
    r.NumberList("values", config.omega_values);
    r.Number("l_total", config.omega_l_total);
    r.Finish();
  }
  if (const json* v = top.Find("price_sweep")) {
    ObjectReader r(*v, "price_sweep");
    r.NumberList("d", config.price_values);
    r.IntegerList("num_sps", config.price_num_sps);
    r.Number("per_sp_load", config.price_per_sp_load);
    r.Finish();
  }
  ParseCustom(top, config);
  ParseFixtures(top, config);

  std::string output_dir = config.output_dir.string();
  top.String("output_dir", output_dir);
  config.output_dir = output_dir;
  top.Unsigned("seed", config.seed);
  if (const json* v = top.Find("shapley")) {
    ObjectReader r(*v, "shapley");
    std::string method(ShapleyMethodName(config.method));
    r.String("method", method);
    config.method = ParseShapleyMethod(method);
    if (const json* s = r.Find("samples")) {
      if (!s->is_number_integer()) throw ConfigError("shapley.samples: expected an integer");
      config.samples = s->get<std::int64_t>();
    }
    r.Finish();
  }
  top.Finish();
  config.Validate();
  return config;
}

RunConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    const std::error_code ec(errno ? errno : EIO, std::generic_category());
    throw std::filesystem::filesystem_error("cannot open config", path, ec);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

ordered_json ConfigToJson(const RunConfig& config) {
  ordered_json out;
  out["name"] = config.name;
  out["scenario"] = std::string(ScenarioKindName(config.scenario));
  out["market"] = {{"d", config.market.price_per_millicore},
                   {"years", config.market.years},
                   {"slots_per_day", config.market.slots_per_day},
                   {"xi", config.market.xi}};
  ordered_json components = ordered_json::array();
  for (const SinusoidalComponent& c : config.load_shape.components) {
    components.push_back({{"amplitude", c.amplitude}, {"offset", c.offset}});
  }
  out["load_shape"] = {{"a0", config.load_shape.base}, {"components", components}};
  out["same_type"] = {{"l_total", config.same_type_l_total}};
  out["omega"] = {{"values", config.omega_values}, {"l_total", config.omega_l_total}};
  out["price_sweep"] = {{"d", config.price_values},
                        {"num_sps", config.price_num_sps},
                        {"per_sp_load", config.price_per_sp_load}};
  ordered_json sps = ordered_json::array();
  for (const CustomSp& sp : config.custom_sps) {
    ordered_json s = {{"id", sp.id}, {"beta", sp.beta}};
    if (sp.daily_load) s["daily_load"] = *sp.daily_load;
    if (!sp.loads.empty()) s["loads"] = sp.loads;
    sps.push_back(std::move(s));
  }
  out["custom"] = {{"sps", sps}};
  ordered_json fixtures = ordered_json::array();
  for (const FixtureGame& f : config.fixtures) {
    fixtures.push_back({{"name", f.name}, {"players", f.players}, {"values", f.values}});
  }
  out["fixtures"] = fixtures;
  out["output_dir"] = config.output_dir.string();
  out["seed"] = config.seed;
  out["shapley"] = {{"method", std::string(ShapleyMethodName(config.method))},
                    {"samples", config.samples}};
  return out;
}

}  // namespace coinvest
