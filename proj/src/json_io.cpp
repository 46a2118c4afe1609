// Copyright 2026 The gqt Authors
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

#include "gqt/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gqt::json_io {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::kSingle: return "single";
    case GateKind::kControlled: return "controlled";
    case GateKind::kSwap: return "swap";
  }
  return "";
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const PhaseMatrix& pm) {
  Json rows = Json::array();
  for (int i = 0; i < pm.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < pm.n(); ++j) row.push_back(pm(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"n", pm.n()}, {"phi", std::move(rows)}};
}

PhaseMatrix phase_matrix_from_json(const Json& j) {
  const auto rows = get<std::vector<std::vector<double>>>(j, "phi");
  PhaseMatrix pm = PhaseMatrix::from_rows(rows);
  if (j.contains("n") && get<int>(j, "n") != pm.n()) {
    throw InvalidInput("'n' disagrees with the size of 'phi'");
  }
  return pm;
}

Json to_json(const GqftSpec& spec) {
  Json j = to_json(spec.pm);
  j["regime"] = regime_name(spec.regime);
  if (!spec.cell_fns.empty()) {
    Json arr = Json::array();
    for (const CellFunction& cf : spec.cell_fns) {
      arr.push_back({{"i", cf.i}, {"j", cf.j}, {"f0", cf.f0}, {"f1", cf.f1}});
    }
    j["cell_fns"] = std::move(arr);
  }
  if (!spec.row_fns.empty()) {
    Json arr = Json::array();
    for (const RowFunction& rf : spec.row_fns) {
      Json table = Json::array();
      for (const auto& [p, v] : rf.table) {
        table.push_back({{"pattern", p}, {"value", v}});
      }
      arr.push_back({{"i", rf.i}, {"table", std::move(table)}});
    }
    j["row_fns"] = std::move(arr);
  }
  if (spec.row_support_cap >= 0) j["row_support_cap"] = spec.row_support_cap;
  return j;
}

GqftSpec gqft_spec_from_json(const Json& j) {
  PhaseMatrix pm = phase_matrix_from_json(j);
  Regime regime = check_triangular(pm).valid ? Regime::kTriangular
                                             : Regime::kGeneral;
  if (j.contains("regime")) {
    const auto r = get<std::string>(j, "regime");
    if (r == "triangular") {
      regime = Regime::kTriangular;
    } else if (r == "general") {
      regime = Regime::kGeneral;
    } else {
      throw InvalidInput("regime must be 'triangular' or 'general'");
    }
  }
  GqftSpec spec(std::move(pm), regime);
  if (j.contains("cell_fns")) {
    for (const Json& c : j.at("cell_fns")) {
      spec.cell_fns.push_back({get<int>(c, "i"), get<int>(c, "j"),
                               get_or<double>(c, "f0", 0.0),
                               get<double>(c, "f1")});
    }
  }
  if (j.contains("row_fns")) {
    for (const Json& r : j.at("row_fns")) {
      RowFunction rf{get<int>(r, "i"), {}};
      for (const Json& e : r.at("table")) {
        rf.table.emplace_back(get<std::uint64_t>(e, "pattern"),
                              get<double>(e, "value"));
      }
      spec.row_fns.push_back(std::move(rf));
    }
  }
  spec.row_support_cap = get_or<int>(j, "row_support_cap", -1);
  return spec;
}

Json to_json(const RotSpec& spec) {
  Json thetas = Json::array();
  for (const ThetaEntry& t : spec.thetas()) {
    thetas.push_back({{"i", t.i}, {"j", t.j}, {"t0", t.t0}, {"t1", t.t1}});
  }
  Json j{{"n", spec.n()},
         {"variant", variant_name(spec.variant())},
         {"theta", std::move(thetas)}};
  if (spec.variant() == RotVariant::kRotationFirst) j["alpha0"] = spec.alpha0();
  return j;
}

RotSpec rot_spec_from_json(const Json& j) {
  const auto v = get<std::string>(j, "variant");
  RotVariant variant;
  if (v == "hadamard_first" || v == "rot1") {
    variant = RotVariant::kHadamardFirst;
  } else if (v == "rotation_first" || v == "rot2") {
    variant = RotVariant::kRotationFirst;
  } else {
    throw InvalidInput("variant must be 'hadamard_first' or 'rotation_first'");
  }
  std::vector<ThetaEntry> thetas;
  if (j.contains("theta")) {
    for (const Json& t : j.at("theta")) {
      thetas.push_back({get<int>(t, "i"), get<int>(t, "j"),
                        get<double>(t, "t0"), get<double>(t, "t1")});
    }
  }
  return RotSpec(get<int>(j, "n"), variant, std::move(thetas),
                 get_or<std::vector<double>>(j, "alpha0", {}));
}

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates()) {
    Json rec{{"kind", kind_name(g.kind)}, {"target", g.target}};
    if (g.kind == GateKind::kSwap) {
      rec["other"] = g.other;
    } else {
      Json ctrls = Json::array();
      for (const Control& ct : g.controls) ctrls.push_back({ct.qubit, ct.value});
      rec["controls"] = std::move(ctrls);
      Json u = Json::array();
      for (const Complex& v : g.u) u.push_back(complex_to_json(v));
      rec["u"] = std::move(u);
    }
    if (!g.label.empty()) rec["label"] = g.label;
    gates.push_back(std::move(rec));
  }
  return Json{{"n", c.n()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(get<int>(j, "n"));
  if (!j.contains("gates") || !j.at("gates").is_array()) {
    throw InvalidInput("circuit needs a 'gates' array");
  }
  for (const Json& rec : j.at("gates")) {
    const auto kind = get<std::string>(rec, "kind");
    const auto label = get_or<std::string>(rec, "label", "");
    if (kind == "swap") {
      Gate g = Gate::swap(get<int>(rec, "target"), get<int>(rec, "other"));
      g.label = label;
      c.add(std::move(g));
      continue;
    }
    if (!rec.contains("u") || !rec.at("u").is_array() || rec.at("u").size() != 4) {
      throw InvalidInput("gate 'u' must hold four complex entries");
    }
    Mat2 u;
    for (int k = 0; k < 4; ++k) u[k] = complex_from_json(rec.at("u")[k]);
    const int target = get<int>(rec, "target");
    if (kind == "single") {
      c.add(Gate::single(target, u, label));
    } else if (kind == "controlled") {
      std::vector<Control> ctrls;
      for (const Json& ct : rec.at("controls")) {
        if (!ct.is_array() || ct.size() != 2) {
          throw InvalidInput("control must be [qubit, value]");
        }
        ctrls.push_back({ct[0].get<int>(), ct[1].get<int>()});
      }
      c.add(Gate::controlled(std::move(ctrls), target, u, label));
    } else {
      throw InvalidInput("unknown gate kind '" + kind + "'");
    }
  }
  return c;
}

Json to_json(const DenseUnitary& m) {
  Json rows = Json::array();
  for (std::uint64_t y = 0; y < m.dim(); ++y) {
    Json row = Json::array();
    for (std::uint64_t x = 0; x < m.dim(); ++x) row.push_back(complex_to_json(m(y, x)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"convention", kConvention}, {"entries", std::move(rows)}};
}

DenseUnitary dense_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  if (n < 1 || n > dense_cap()) {
    throw CapExceeded("matrix n = " + std::to_string(n) + " outside dense cap");
  }
  const Json& rows = j.at("entries");
  const std::uint64_t dim = dim_of(n);
  if (!rows.is_array() || rows.size() != dim) {
    throw InvalidInput("'entries' must hold 2^n rows");
  }
  ComplexMatrix m(dim);
  for (std::uint64_t y = 0; y < dim; ++y) {
    if (!rows[y].is_array() || rows[y].size() != dim) {
      throw InvalidInput("'entries' row has the wrong length");
    }
    for (std::uint64_t x = 0; x < dim; ++x) m(y, x) = complex_from_json(rows[y][x]);
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

Json to_json(const ValidityReport& rep) {
  Json j{{"regime", regime_name(rep.regime)}, {"valid", rep.valid}};
  if (rep.cell) j["witness_cell"] = {rep.cell->first, rep.cell->second};
  if (rep.combination) j["witness_combination"] = *rep.combination;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

Json to_json(const Histogram& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

Json amplitudes_to_json(const QState& s) {
  Json arr = Json::array();
  for (const Complex& a : s.amplitudes()) arr.push_back(complex_to_json(a));
  return arr;
}

std::string dense_to_csv(const DenseUnitary& m, const std::string& kind) {
  std::string out = "# kind=" + kind + " n=" + std::to_string(m.n()) + " " +
                    kConvention + "\nrow,col,re,im\n";
  char buf[96];
  for (std::uint64_t y = 0; y < m.dim(); ++y) {
    for (std::uint64_t x = 0; x < m.dim(); ++x) {
      std::snprintf(buf, sizeof buf, "%llu,%llu,%.12g,%.12g\n",
                    static_cast<unsigned long long>(y),
                    static_cast<unsigned long long>(x), m(y, x).real(),
                    m(y, x).imag());
      out += buf;
    }
  }
  return out;
}

}  // namespace gqt::json_io
