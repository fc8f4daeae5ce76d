#include "su2branch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "su2branch/binarygroups.hpp"
#include "su2branch/branching.hpp"
#include "su2branch/kernels.hpp"
#include "su2branch/mckay.hpp"
#include "su2branch/verify.hpp"

namespace su2b::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiagramType parse_type(const std::string& s) {
  try {
    return DiagramType::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json header(const DiagramType& t) {
  Json j;
  j["type"] = t.to_string();
  j["convention"] = kNodeConvention;
  return j;
}

std::string label(const BranchingModel& m, int e) {
  return "{" + std::to_string(m.ext_mark(e)) + "}@" + std::to_string(m.ext_distance(e));
}

// Accepts an extended index ("3") or a mark,distance pair ("4,3").
int resolve_node(const BranchingModel& m, const std::string& spec) {
  const auto comma = spec.find(',');
  try {
    if (comma == std::string::npos) {
      std::size_t used = 0;
      const int e = std::stoi(spec, &used);
      if (used != spec.size() || e < 0 || e >= m.num_ext_nodes()) throw UsageError("node index out of range: " + spec);
      return e;
    }
    std::size_t u1 = 0, u2 = 0;
    const std::string ms = spec.substr(0, comma), ds = spec.substr(comma + 1);
    const int mark = std::stoi(ms, &u1);
    const int dist = std::stoi(ds, &u2);
    if (u1 != ms.size() || u2 != ds.size()) throw UsageError("bad node spec: " + spec);
    for (int e = 0; e < m.num_ext_nodes(); ++e)
      if (m.ext_mark(e) == mark && m.ext_distance(e) == dist) return e;
  } catch (const std::logic_error&) {
    throw UsageError("bad node spec: " + spec);
  }
  throw UsageError("no node with mark,distance = " + spec);
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int cmd_table(bool json, std::ostream& out) {
  bool ok = true;
  Json rows = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "F" << std::setw(6) << "type" << std::right << std::setw(5) << "a" << std::setw(5)
       << "b" << std::setw(5) << "h" << std::setw(5) << "g" << std::setw(8) << "|F*|" << "  status\n";
  for (const auto& t : table_types()) {
    const RootSystem rs(t);
    const BranchParams p = branch_params(rs);
    const TableRow want = table_closed_form(t);
    const FiniteGroup group = build_group(t);
    const bool match = p.a == want.a && p.b == want.b && p.h == want.h && p.g == want.g &&
                       p.a * p.b == 2 * static_cast<int>(group.order());
    ok = ok && match;
    Json row = header(t);
    row["F"] = want.group;
    row["a"] = p.a;
    row["b"] = p.b;
    row["h"] = p.h;
    row["g"] = p.g;
    row["order_Fstar"] = group.order();
    row["match"] = match;
    rows.push_back(row);
    text << std::left << std::setw(10) << want.group << std::setw(6) << t.to_string() << std::right << std::setw(5)
         << p.a << std::setw(5) << p.b << std::setw(5) << p.h << std::setw(5) << p.g << std::setw(8) << group.order()
         << "  " << (match ? "ok" : "MISMATCH") << '\n';
  }
  if (json)
    emit(rows, out);
  else
    out << text.str();
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const std::vector<DiagramType>& types, const VerifyOptions& opts, bool json, std::ostream& out) {
  const auto reports = verify_types(types, opts);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (json) {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json j = header(DiagramType::parse(r.type));
      j["passed"] = r.passed();
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["checks"] = checks;
      arr.push_back(j);
    }
    emit(arr, out);
  } else {
    out << render_report(reports);
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_branch(const DiagramType& t, int n, const std::string& oracle, bool json, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  const BranchingModel model(t);
  std::vector<Coeff> v;
  if (oracle == "coxeter") {
    for (int e = 0; e < model.num_ext_nodes(); ++e) v.push_back(model.multiplicity(n, e));
  } else if (oracle == "recursion") {
    v = recursion_oracle(extended_graph(model.roots()), n).back().entries;
  } else {
    const FiniteGroup group = build_group(t);
    const CharacterTable table = character_table(group, extended_graph(model.roots()));
    for (int e = 0; e < model.num_ext_nodes(); ++e) v.push_back(oracle_multiplicity(group, table, n, e));
  }
  if (json) {
    Json j = header(t);
    j["n"] = n;
    j["oracle"] = oracle;
    j["multiplicities"] = v;
    Json marks = Json::array(), dists = Json::array();
    for (int e = 0; e < model.num_ext_nodes(); ++e) {
      marks.push_back(model.ext_mark(e));
      dists.push_back(model.ext_distance(e));
    }
    j["marks"] = marks;
    j["distances"] = dists;
    emit(j, out);
  } else {
    out << t.to_string() << "  pi_" << n << " restricted to F*  (oracle: " << oracle << ")\n";
    for (int e = 0; e < model.num_ext_nodes(); ++e)
      out << "  node " << std::setw(2) << e << "  " << std::left << std::setw(8) << label(model, e) << std::right
          << std::setw(8) << v[static_cast<std::size_t>(e)] << '\n';
  }
  return kOk;
}

Json coeff_record(const BranchingModel& m, const DiagramType& t, int e, const std::vector<Coeff>& coeffs) {
  Json j = header(t);
  j["node"] = e;
  j["mark"] = m.ext_mark(e);
  j["distance"] = m.ext_distance(e);
  j["coeffs"] = coeffs;
  return j;
}

int cmd_zpoly(const DiagramType& t, const std::optional<std::string>& node, bool json, std::ostream& out) {
  const BranchingModel model(t);
  std::vector<int> nodes;
  if (node)
    nodes.push_back(resolve_node(model, *node));
  else
    for (int e = 0; e < model.num_ext_nodes(); ++e) nodes.push_back(e);
  Json arr = Json::array();
  for (int e : nodes) {
    const IntPolynomial& z = model.z(e);
    if (json) {
      arr.push_back(coeff_record(model, t, e, z.coeffs()));
    } else {
      out << "node " << std::setw(2) << e << "  " << std::left << std::setw(8) << label(model, e) << std::right
          << "z = " << z.to_string() << "\n" << std::string(14, ' ') << "[" << z.to_sparse_string() << "]\n";
    }
  }
  if (json) emit(node ? arr.front() : arr, out);
  return kOk;
}

int cmd_series(const DiagramType& t, const std::string& node, int order, bool json, std::ostream& out) {
  if (order < 0) throw UsageError("--order must be nonnegative");
  const BranchingModel model(t);
  const int e = resolve_node(model, node);
  const TruncatedSeries s = model.series(e, order);
  if (json) {
    emit(coeff_record(model, t, e, s.coeffs()), out);
  } else {
    out << t.to_string() << " node " << e << " " << label(model, e) << "  m(t) = (" << model.z(e).to_string()
        << ") / ((1 - t^" << model.params().a << ")(1 - t^" << model.params().b << "))\n";
    for (int n = 0; n <= order; ++n) out << std::setw(6) << n << std::setw(12) << s[n] << '\n';
  }
  return kOk;
}

int cmd_orbits(const DiagramType& t, bool json, std::ostream& out) {
  const BranchingModel model(t);
  const auto& rs = model.roots();
  Json arr = Json::array();
  if (!json) out << std::left << std::setw(3 * rs.rank() + 4) << "root" << std::right << std::setw(7) << "orbit" << std::setw(4) << "k" << std::setw(5) << "n" << '\n';
  for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
    const auto& e = model.orbits().entry(idx);
    if (json) {
      Json j;
      j["root"] = rs.roots()[idx].coeffs;
      j["orbit"] = e.orbit + 1;
      j["k"] = e.k;
      j["n"] = e.n;
      arr.push_back(j);
    } else {
      out << std::left << std::setw(3 * rs.rank() + 4) << rs.roots()[idx].to_string() << std::right << std::setw(7)
          << e.orbit + 1 << std::setw(4) << e.k << std::setw(5) << e.n << '\n';
    }
  }
  if (json) {
    Json j = header(t);
    j["records"] = arr;
    emit(j, out);
  }
  return kOk;
}

int cmd_mckay(const DiagramType& t, bool json, std::ostream& out) {
  const BranchingModel model(t);
  const McKayGraph graph = extended_graph(model.roots());
  if (json) {
    Json j = header(t);
    Json rows = Json::array();
    for (int i = 0; i < graph.size(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < graph.size(); ++k) row.push_back(graph.adjacency(i, k));
      rows.push_back(row);
    }
    j["adjacency"] = rows;
    j["marks"] = graph.marks();
    Json dists = Json::array();
    for (int e = 0; e < graph.size(); ++e) dists.push_back(model.ext_distance(e));
    j["distances"] = dists;
    emit(j, out);
    return kOk;
  }
  out << t.to_string() << " extended diagram (node 0 = alpha_0)\n      ";
  for (int k = 0; k < graph.size(); ++k) out << std::setw(3) << k;
  out << "   mark  dist\n";
  for (int i = 0; i < graph.size(); ++i) {
    out << "  " << std::setw(2) << i << "  ";
    for (int k = 0; k < graph.size(); ++k) out << std::setw(3) << graph.adjacency(i, k);
    out << std::setw(7) << graph.marks()[static_cast<std::size_t>(i)] << std::setw(6) << model.ext_distance(i) << '\n';
  }
  return kOk;
}

int cmd_group(const DiagramType& t, bool json, std::ostream& out) {
  const RootSystem rs(t);
  const FiniteGroup group = build_group(t);
  const CharacterTable table = character_table(group, extended_graph(rs));
  std::vector<std::size_t> sizes;
  for (const auto& c : group.classes()) sizes.push_back(c.size());
  if (json) {
    Json j = header(t);
    j["order"] = group.order();
    j["class_sizes"] = sizes;
    j["dims"] = table.dims;
    emit(j, out);
    return kOk;
  }
  out << t.to_string() << "  |F*| = " << group.order() << ", " << group.num_classes() << " classes\n  class sizes:";
  for (auto s : sizes) out << ' ' << s;
  out << "\n  character dims by node:";
  for (int d : table.dims) out << ' ' << d;
  out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching of SU(2) irreducibles over binary polyhedral groups"};
  app.require_subcommand(1);

  std::string type_str, node, oracle = "coxeter", out_path;
  int n = 0, order = 200;
  bool json = false, all = false, stats = false, all_nodes = false;

  auto with_common = [&](CLI::App* sub, bool needs_type) {
    auto* opt = sub->add_option("--type", type_str, "Diagram type, e.g. E8, D5, A7");
    if (needs_type) opt->required();
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--out", out_path, "Write output to a file instead of stdout");
    return opt;
  };

  auto* table = app.add_subcommand("table", "Computed (a, b, h, g) for every supported type");
  table->add_flag("--json", json, "Emit JSON");
  table->add_option("--out", out_path, "Write output to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the full cross-validation suite");
  auto* vtype = with_common(verify, false);
  auto* vall = verify->add_flag("--all", all, "All table types");
  vtype->excludes(vall);
  verify->add_option("--order", order, "Series order for the recursion comparison")->check(CLI::NonNegativeNumber);

  auto* branch = app.add_subcommand("branch", "Multiplicities of pi_n restricted to F*");
  with_common(branch, true);
  branch->add_option("--n", n, "SU(2) level n")->required();
  branch->add_option("--oracle", oracle, "coxeter, recursion or characters")
      ->check(CLI::IsMember({"coxeter", "recursion", "characters"}));

  auto* zpoly = app.add_subcommand("zpoly", "Numerator polynomials z(t)_i");
  with_common(zpoly, true);
  auto* znode = zpoly->add_option("--node", node, "Extended index or mark,distance");
  auto* zall = zpoly->add_flag("--all", all_nodes, "All nodes (default)");
  znode->excludes(zall);

  auto* series = app.add_subcommand("series", "Coefficients of m(t)_i");
  with_common(series, true);
  series->add_option("--node", node, "Extended index or mark,distance")->required();
  series->add_option("--order", order, "Truncation order");

  auto* orbits = app.add_subcommand("orbits", "Orbit label, parity and exponent of each positive root");
  with_common(orbits, true);

  auto* mckay = app.add_subcommand("mckay", "Extended diagram adjacency and marks");
  with_common(mckay, true);

  auto* group = app.add_subcommand("group", "Binary polyhedral group statistics");
  with_common(group, true);
  group->add_flag("--stats", stats, "Print order, class sizes and dims (default)");

  std::vector<std::string> argv_store{"su2branch"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*table) {
      code = cmd_table(json, buffer);
    } else if (*verify) {
      std::vector<DiagramType> types;
      if (all)
        types = table_types();
      else if (!type_str.empty())
        types.push_back(parse_type(type_str));
      else
        throw UsageError("verify needs --type or --all");
      VerifyOptions opts;
      opts.series_order = order;
      code = cmd_verify(types, opts, json, buffer);
    } else if (*branch) {
      code = cmd_branch(parse_type(type_str), n, oracle, json, buffer);
    } else if (*zpoly) {
      code = cmd_zpoly(parse_type(type_str), znode->count() ? std::optional<std::string>(node) : std::nullopt, json,
                       buffer);
    } else if (*series) {
      code = cmd_series(parse_type(type_str), node, order, json, buffer);
    } else if (*orbits) {
      code = cmd_orbits(parse_type(type_str), json, buffer);
    } else if (*mckay) {
      code = cmd_mckay(parse_type(type_str), json, buffer);
    } else if (*group) {
      code = cmd_group(parse_type(type_str), json, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    out << buffer.str();
    return kCheckFailed;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace su2b::cli
