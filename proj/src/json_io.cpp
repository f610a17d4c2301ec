// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "laminar_match/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace laminar_match {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("document is not valid JSON");
  return doc;
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

std::vector<std::string> parse_name_array(const json& arr, const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const json& v : arr) {
    if (!v.is_string()) {
      throw ParseError(std::string(what) + " must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) {
        throw ParseError("duplicate agent '" + out[i] + "' in " + what);
      }
    }
  }
  return out;
}

int parse_quota(const json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError("quota must be a non-negative integer");
  }
  return v.get<int>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document root must be an object");

  Instance inst;
  const std::string mode = field(doc, "mode").get<std::string>();
  if (mode == "smti-lc") {
    inst.mode = Mode::kTwoSided;
  } else if (mode == "smti-olc") {
    inst.mode = Mode::kOneSidedOlc;
  } else {
    throw ParseError("mode must be \"smti-lc\" or \"smti-olc\"");
  }

  inst.workers = parse_name_array(field(doc, "workers"), "workers");
  inst.firms = parse_name_array(field(doc, "firms"), "firms");

  std::map<std::string, int> worker_index, firm_index;
  for (std::size_t i = 0; i < inst.workers.size(); ++i) {
    worker_index[inst.workers[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < inst.firms.size(); ++i) {
    if (worker_index.count(inst.firms[i])) {
      throw ParseError("agent '" + inst.firms[i] +
                       "' appears as both worker and firm");
    }
    firm_index[inst.firms[i]] = static_cast<int>(i);
  }

  std::map<std::string, ContractId> contract_index;
  const json& contracts = field(doc, "contracts");
  if (!contracts.is_array()) throw ParseError("contracts must be an array");
  for (const json& c : contracts) {
    Contract contract;
    contract.name = field(c, "id").get<std::string>();
    const std::string w = field(c, "worker").get<std::string>();
    const std::string f = field(c, "firm").get<std::string>();
    auto wi = worker_index.find(w);
    auto fi = firm_index.find(f);
    if (wi == worker_index.end()) {
      throw ParseError("unknown agent '" + w + "' in contract '" +
                       contract.name + "'");
    }
    if (fi == firm_index.end()) {
      throw ParseError("unknown agent '" + f + "' in contract '" +
                       contract.name + "'");
    }
    if (contract_index.count(contract.name)) {
      throw ParseError("duplicate contract id '" + contract.name + "'");
    }
    contract.worker = wi->second;
    contract.firm = fi->second;
    contract_index[contract.name] = static_cast<ContractId>(
        inst.contracts.size());
    inst.contracts.push_back(std::move(contract));
  }

  auto contract_id = [&](const json& v) {
    if (!v.is_string()) throw ParseError("contract reference must be a string");
    auto it = contract_index.find(v.get<std::string>());
    if (it == contract_index.end()) {
      throw ParseError("unknown contract '" + v.get<std::string>() + "'");
    }
    return it->second;
  };

  inst.worker_constraints.assign(inst.workers.size(), {});
  inst.firm_constraints.assign(inst.firms.size(), {});
  if (doc.contains("constraints")) {
    const json& cons = doc["constraints"];
    if (!cons.is_object()) throw ParseError("constraints must be an object");
    for (auto it = cons.begin(); it != cons.end(); ++it) {
      std::vector<ConstraintSet>* family = nullptr;
      if (auto wi = worker_index.find(it.key()); wi != worker_index.end()) {
        family = &inst.worker_constraints[wi->second];
      } else if (auto fi = firm_index.find(it.key()); fi != firm_index.end()) {
        family = &inst.firm_constraints[fi->second];
      } else {
        throw ParseError("unknown agent '" + it.key() + "' in constraints");
      }
      if (!it.value().is_array()) {
        throw ParseError("constraints of '" + it.key() + "' must be an array");
      }
      for (const json& entry : it.value()) {
        ConstraintSet cs;
        cs.quota = parse_quota(field(entry, "quota"));
        for (const json& m : field(entry, "set")) {
          cs.members.push_back(contract_id(m));
        }
        std::sort(cs.members.begin(), cs.members.end());
        cs.members.erase(std::unique(cs.members.begin(), cs.members.end()),
                         cs.members.end());
        family->push_back(std::move(cs));
      }
    }
  }

  inst.worker_prefs.assign(inst.workers.size(), {});
  inst.firm_prefs.assign(inst.firms.size(), {});
  if (doc.contains("preferences")) {
    const json& prefs = doc["preferences"];
    if (!prefs.is_object()) throw ParseError("preferences must be an object");
    for (auto it = prefs.begin(); it != prefs.end(); ++it) {
      PreferenceList* list = nullptr;
      if (auto wi = worker_index.find(it.key()); wi != worker_index.end()) {
        list = &inst.worker_prefs[wi->second];
      } else if (auto fi = firm_index.find(it.key()); fi != firm_index.end()) {
        list = &inst.firm_prefs[fi->second];
      } else {
        throw ParseError("unknown agent '" + it.key() + "' in preferences");
      }
      if (!it.value().is_array()) {
        throw ParseError("preferences of '" + it.key() +
                         "' must be an array of tie groups");
      }
      for (const json& group : it.value()) {
        if (!group.is_array() || group.empty()) {
          throw ParseError("tie groups of '" + it.key() +
                           "' must be nonempty arrays");
        }
        std::vector<ContractId> g;
        for (const json& m : group) g.push_back(contract_id(m));
        list->push_back(std::move(g));
      }
    }
  }

  inst.rebuild_index();
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["mode"] = inst.mode == Mode::kTwoSided ? "smti-lc" : "smti-olc";

  std::vector<std::string> workers = inst.workers;
  std::vector<std::string> firms = inst.firms;
  std::sort(workers.begin(), workers.end());
  std::sort(firms.begin(), firms.end());
  doc["workers"] = workers;
  doc["firms"] = firms;

  json contracts = json::array();
  for (const Contract& c : inst.contracts) {
    contracts.push_back({{"id", c.name},
                         {"worker", inst.workers[c.worker]},
                         {"firm", inst.firms[c.firm]}});
  }
  doc["contracts"] = contracts;

  json cons = json::object();
  json prefs = json::object();
  auto emit_agent = [&](Side side, int agent) {
    const std::string& name = inst.agent_name(side, agent);
    const auto& family = inst.constraints_of(side, agent);
    if (!family.empty()) {
      json list = json::array();
      for (const ConstraintSet& cs : family) {
        json names = json::array();
        for (ContractId e : cs.members) names.push_back(inst.contracts[e].name);
        list.push_back({{"set", names}, {"quota", cs.quota}});
      }
      cons[name] = list;
    }
    const PreferenceList& pl = inst.preferences_of(side, agent);
    if (!pl.empty()) {
      json groups = json::array();
      for (const auto& group : pl) {
        json names = json::array();
        for (ContractId e : group) names.push_back(inst.contracts[e].name);
        groups.push_back(names);
      }
      prefs[name] = groups;
    }
  };
  for (int w = 0; w < inst.agent_count(Side::kWorker); ++w) {
    emit_agent(Side::kWorker, w);
  }
  for (int f = 0; f < inst.agent_count(Side::kFirm); ++f) {
    emit_agent(Side::kFirm, f);
  }
  doc["constraints"] = cons;
  doc["preferences"] = prefs;

  return doc.dump(2) + "\n";
}

json matching_json(const Instance& inst, const Matching& m) {
  json names = json::array();
  for (ContractId e : m) names.push_back(inst.contracts[e].name);
  return names;
}

Matching matching_from_json(const Instance& inst, const json& names) {
  if (!names.is_array()) {
    throw ParseError("matching must be an array of contract ids");
  }
  std::map<std::string, ContractId> index;
  for (ContractId e = 0; e < inst.num_contracts(); ++e) {
    index[inst.contracts[e].name] = e;
  }
  std::vector<ContractId> ids;
  for (const json& v : names) {
    if (!v.is_string()) throw ParseError("matching entries must be strings");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) {
      throw ParseError("unknown contract '" + v.get<std::string>() + "'");
    }
    ids.push_back(it->second);
  }
  return normalized(std::move(ids));
}

json validation_report_json(const Instance& inst,
                            const std::vector<Violation>& report) {
  (void)inst;
  json out = json::array();
  for (const Violation& v : report) {
    out.push_back({{"kind", violation_kind_name(v.kind)},
                   {"side", v.side == Side::kWorker ? "worker" : "firm"},
                   {"agent", v.agent},
                   {"detail", v.detail}});
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InstanceError("cannot write file: " + path.string());
  out << text;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace laminar_match
