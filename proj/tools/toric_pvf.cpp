/* Copyright 2026 The toric-pvf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// toric-pvf: holomorphic polyvector fields on smooth complete toric
// varieties. Subcommands: validate, dims, decompose, crosscheck, gen.
// Exit codes: 0 ok, 1 malformed input, 2 fan fails validation,
// 3 crosscheck mismatch. stdout carries data, stderr diagnostics.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/generators.hpp"
#include "toric/json_io.hpp"

namespace {

using namespace toric;

constexpr int kExitMalformed = 1;
constexpr int kExitInvalidFan = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

std::vector<int> parse_k_selector(const std::string& sel, int n) {
  if (sel == "all") {
    std::vector<int> ks(n + 1);
    for (int k = 0; k <= n; ++k) ks[k] = k;
    return ks;
  }
  size_t pos = 0;
  int k = 0;
  try {
    k = std::stoi(sel, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != sel.size()) throw std::invalid_argument("--k must be an integer or 'all'");
  if (k < 0 || k > n)
    throw std::invalid_argument("--k out of range 0.." + std::to_string(n));
  return {k};
}

Fan load_fan(const std::string& path, bool normalize) {
  return parse_fan(read_file(path), normalize);
}

// prints the report in the requested format; returns the exit code
int run_validate(const Fan& fan, const std::string& format, const std::string& out) {
  ValidationReport report = validate(fan);
  if (format == "json") {
    emit(dump(to_json(report)), out);
  } else if (format == "tsv") {
    std::ostringstream os;
    os << "smooth\t" << (report.smooth ? 1 : 0) << "\n"
       << "complete\t" << (report.complete ? 1 : 0) << "\n";
    for (const auto& d : report.diagnostics)
      os << "diagnostic\t" << d.cone << "\t" << d.reason << "\n";
    emit(os.str(), out);
  } else {
    std::ostringstream os;
    os << "smooth:   " << (report.smooth ? "yes" : "NO") << "\n"
       << "complete: " << (report.complete ? "yes" : "NO") << "\n";
    for (const auto& d : report.diagnostics) os << "  - " << d.reason << "\n";
    emit(os.str(), out);
  }
  return report.ok() ? 0 : kExitInvalidFan;
}

std::string render_dims_pretty(const Stratification& strat, const DimensionTable& table) {
  std::ostringstream os;
  os << "fan dimension n = " << table.dim << ", lattice points of the polytope: "
     << strat.total() << "\n";
  os << "dim H^0(X, wedge^k TX) by the face formula:\n";
  for (int k = 0; k <= table.dim; ++k) {
    os << "  k=" << k << ": " << table.dims[k] << " =";
    bool first = true;
    for (const auto& t : table.breakdown[k]) {
      os << (first ? " " : " + ") << "C(" << table.dim - t.stratum << ","
         << (k - t.stratum) << ")*" << t.points;
      first = false;
    }
    os << "\n";
  }
  os << "faces with interior lattice points (active rays -> rank, count):\n";
  std::map<std::vector<int>, int> face_rank;
  for (int i = 0; i <= strat.dim; ++i)
    for (const auto& pc : strat.by_rank[i]) face_rank[pc.active] = i;
  for (const auto& [active, points] : strat.face_groups) {
    os << "  [";
    for (size_t i = 0; i < active.size(); ++i) os << (i ? "," : "") << active[i];
    os << "] -> rank " << face_rank.at(active) << ", " << points.size() << "\n";
  }
  return os.str();
}

int run_dims(const Fan& fan, const std::vector<int>& ks, const std::string& format,
             const std::string& out) {
  Stratification strat = stratify_fan(fan);
  DimensionTable table = dims_by_face_formula(strat);
  const bool all = static_cast<int>(ks.size()) == fan.dim + 1;
  if (format == "json") {
    ojson doc = dims_document(strat, table);
    if (!all) {
      ojson picked;
      picked["fan_dim"] = fan.dim;
      picked["k"] = ks.front();
      picked["dim"] = table.dims[ks.front()];
      picked["breakdown"] = doc["breakdown"][ks.front()];
      emit(dump(picked), out);
    } else {
      emit(dump(doc), out);
    }
  } else if (format == "tsv") {
    std::ostringstream os;
    os << "k\tdim\n";
    for (int k : ks) os << k << "\t" << table.dims[k] << "\n";
    emit(os.str(), out);
  } else {
    emit(render_dims_pretty(strat, table), out);
  }
  return 0;
}

int run_decompose(const Fan& fan, int k, const std::string& format, const std::string& out) {
  Stratification strat = stratify_fan(fan);
  if (format == "json") {
    emit(dump(decompose_document(fan, strat, k)), out);
    return 0;
  }
  auto spaces = decomposition(fan, strat, k);
  std::ostringstream os;
  if (format == "tsv") {
    os << "I\trank\tdim\n";
    for (const auto& ws : spaces) {
      for (size_t i = 0; i < ws.weight.size(); ++i)
        os << (i ? "," : "") << ws.weight[i].get_str();
      os << "\t" << ws.rank << "\t" << ws.dim << "\n";
    }
  } else {
    os << "weight spaces for k = " << k
       << " (weights listed as I; the acting torus character is -I)\n";
    long long total = 0;
    for (const auto& ws : spaces) {
      os << "  I=(";
      for (size_t i = 0; i < ws.weight.size(); ++i)
        os << (i ? "," : "") << ws.weight[i].get_str();
      os << ")  rank " << ws.rank << "  dim " << ws.dim << "  generators:";
      for (const auto& g : ws.generators) os << "  " << g.to_string();
      os << "\n";
      total += ws.dim;
    }
    os << "total dimension: " << total << "\n";
  }
  emit(os.str(), out);
  return 0;
}

int run_crosscheck(const Fan& fan, const std::vector<int>& ks, const Int& margin,
                   const std::string& fan_id, const std::string& format,
                   const std::string& out) {
  std::vector<CrosscheckReport> reports;
  bool ok = true;
  for (int k : ks) {
    reports.push_back(crosscheck(fan, k, margin, fan_id));
    ok = ok && reports.back().pass();
  }
  if (format == "json") {
    if (reports.size() == 1) {
      emit(dump(to_json(reports.front())), out);
    } else {
      ojson doc;
      doc["fan_id"] = fan_id;
      doc["margin"] = to_int64(margin);
      doc["reports"] = ojson::array();
      for (const auto& r : reports) doc["reports"].push_back(to_json(r));
      doc["pass"] = ok;
      emit(dump(doc), out);
    }
  } else if (format == "tsv") {
    std::ostringstream os;
    os << "k\tformula\tkernel\tcharts\tfailures\tpass\n";
    for (const auto& r : reports)
      os << r.k << "\t" << r.total_formula << "\t" << r.total_kernel << "\t"
         << r.total_charts << "\t" << r.failures.size() << "\t" << (r.pass() ? 1 : 0)
         << "\n";
    emit(os.str(), out);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << fan_id << " k=" << r.k << " margin=" << r.margin << ": formula "
         << r.total_formula << ", kernel " << r.total_kernel << ", charts "
         << r.total_charts << " -> " << (r.pass() ? "PASS" : "FAIL") << "\n";
      for (const auto& f : r.failures) os << "    " << f.kind << ": " << f.detail << "\n";
    }
    emit(os.str(), out);
  }
  return ok ? 0 : kExitMismatch;
}

Fan make_family(const std::string& family, const std::vector<long long>& params) {
  if (family == "projective") {
    if (params.size() != 1)
      throw std::invalid_argument("gen projective takes one parameter: n");
    return projective_space(static_cast<int>(params[0]));
  }
  if (family == "product") {
    if (params.empty())
      throw std::invalid_argument("gen product takes the factor dimensions");
    std::vector<int> dims;
    for (long long p : params) dims.push_back(static_cast<int>(p));
    return product_projective(dims);
  }
  if (family == "hirzebruch") {
    if (params.size() != 1)
      throw std::invalid_argument("gen hirzebruch takes one parameter: a");
    return hirzebruch(static_cast<long>(params[0]));
  }
  throw std::invalid_argument("unknown family '" + family +
                              "' (expected projective, product or hirzebruch)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holomorphic polyvector fields on smooth complete toric varieties"};
  app.require_subcommand(1);

  std::string input, out_path, format = "json", k_sel = "all", family;
  long long margin = 2;
  bool normalize = false;
  std::vector<long long> params;

  auto add_common = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("fan", input, "fan file (JSON)")->required();
    cmd->add_flag("--normalize", normalize, "divide non-primitive rays by their gcd");
    cmd->add_option("--format", format, "json|tsv|pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    if (with_k) cmd->add_option("--k", k_sel, "grade k or 'all'");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check smoothness and completeness");
  add_common(validate_cmd, false);

  CLI::App* dims_cmd = app.add_subcommand("dims", "dimension table of H^0(X, wedge^k TX)");
  add_common(dims_cmd, true);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "weight-space bases for one grade k");
  add_common(decompose_cmd, false);
  std::string decompose_k;
  decompose_cmd->add_option("--k", decompose_k, "grade k")->required();

  CLI::App* crosscheck_cmd =
      app.add_subcommand("crosscheck", "sweep the formula against both oracles");
  add_common(crosscheck_cmd, true);
  crosscheck_cmd->add_option("--margin", margin, "bounding-box inflation (>= 1)");

  CLI::App* gen_cmd = app.add_subcommand("gen", "write a built-in fan");
  gen_cmd->add_option("family", family, "projective|product|hirzebruch")->required();
  gen_cmd->add_option("params", params, "integer parameters");
  gen_cmd->add_option("--out", out_path, "write output to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitMalformed : 0;
  }

  try {
    if (gen_cmd->parsed()) {
      emit(serialize_fan(make_family(family, params)), out_path);
      return 0;
    }

    Fan fan = load_fan(input, normalize);
    if (validate_cmd->parsed()) return run_validate(fan, format, out_path);

    // remaining subcommands require a smooth complete fan
    ValidationReport report = validate(fan);
    if (!report.ok()) {
      for (const auto& d : report.diagnostics) std::cerr << "invalid fan: " << d.reason << "\n";
      return kExitInvalidFan;
    }

    if (dims_cmd->parsed())
      return run_dims(fan, parse_k_selector(k_sel, fan.dim), format, out_path);
    if (decompose_cmd->parsed()) {
      auto ks = parse_k_selector(decompose_k, fan.dim);
      if (ks.size() != 1)
        throw std::invalid_argument("decompose needs a single k, not 'all'");
      return run_decompose(fan, ks.front(), format, out_path);
    }
    if (crosscheck_cmd->parsed()) {
      if (margin < 1) throw std::invalid_argument("--margin must be at least 1");
      return run_crosscheck(fan, parse_k_selector(k_sel, fan.dim),
                            Int(static_cast<long>(margin)), input, format, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
