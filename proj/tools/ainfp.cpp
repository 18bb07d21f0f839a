// command line front end: rips construction, barcodes, minimal-structure
// transfer, enriched barcode distances, and self-checks
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ainfp/an_distance.hpp"
#include "ainfp/fixtures.hpp"

using nlohmann::json;
using namespace ainfp;

namespace {

struct Options {
  std::string field = "F2";
  long p = 0;
  int N = 2;
  int max_dim = 2;
  double cap = kPlusInf;
  uint64_t seed = 0;
  bool dist_matrix = false;
  bool relative = false;
  bool classical = false;
  bool exact_only = false;
  std::string json_out, svg_out;
};

Field field_of(const Options& o) {
  if (o.p > 0) return make_field("F" + std::to_string(o.p));
  return make_field(o.field);
}

struct Input {
  bool is_dga = false;
  FilteredSimplicialComplex X;
  FilteredDgAlgebra A;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text, const std::string& path) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": not a number: '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<double>> to_distance_matrix(std::vector<std::vector<double>> rows,
                                                    const std::string& path) {
  size_t n = rows.size();
  bool lower = true, square = true;
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != i + 1) lower = false;
    if (rows[i].size() != n) square = false;
  }
  if (lower) {
    std::vector<std::vector<double>> full(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j <= i; ++j) full[i][j] = full[j][i] = rows[i][j];
    return full;
  }
  if (square) {
    for (size_t i = 0; i < n; ++i) {
      if (rows[i][i] != 0.0)
        throw std::runtime_error(path + ": distance matrix diagonal must be zero (row " +
                                 std::to_string(i + 1) + ")");
      for (size_t j = 0; j < i; ++j)
        if (rows[i][j] != rows[j][i])
          throw std::runtime_error(path + ": distance matrix is not symmetric at row " +
                                   std::to_string(i + 1) + ", column " + std::to_string(j + 1));
    }
    return rows;
  }
  throw std::runtime_error(path + ": distance matrix must be square or lower triangular");
}

FilteredSimplicialComplex complex_from_json(const json& j) {
  FilteredSimplicialComplex X;
  if (!j.contains("simplices") || !j["simplices"].is_array())
    throw std::runtime_error("complex JSON needs a \"simplices\" array");
  for (auto& s : j["simplices"]) {
    if (!s.contains("vertices") || !s.contains("value"))
      throw std::runtime_error("each simplex needs \"vertices\" and \"value\"");
    X.insert(s["vertices"].get<std::vector<int>>(), s["value"].get<double>());
  }
  if (!X.monotone()) throw std::runtime_error("simplex values are not monotone under faces");
  return X;
}

Input load_input(const std::string& path, const Options& o) {
  Input in;
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw std::runtime_error(path + ": bad JSON: " + e.what());
    }
    if (j.contains("basis")) {
      in.is_dga = true;
      in.A = load_dg_algebra(text);
    } else {
      in.X = complex_from_json(j);
    }
    return in;
  }
  auto rows = parse_csv(text, path);
  if (rows.empty()) return in;  // empty complex
  if (o.dist_matrix) {
    in.X = rips(to_distance_matrix(rows, path), o.max_dim, o.cap);
  } else {
    in.X = rips_points(rows, o.max_dim, o.cap);
  }
  return in;
}

FilteredDgAlgebra algebra_of(const Input& in, const Field& F) {
  return in.is_dga ? in.A : cochain_algebra(F, in.X);
}

json value_json(double v) {
  if (v == kPlusInf) return "+inf";
  if (v == kMinusInf) return "-inf";
  return v;
}

json barcode_json(const Barcode& B) {
  json bars = json::array();
  for (auto& [key, mult] : B.entries)
    bars.push_back({{"degree", key.first},
                    {"lower", value_json(key.second.lower)},
                    {"upper", value_json(key.second.upper)},
                    {"multiplicity", mult}});
  return bars;
}

void emit(const json& j, const Options& o) {
  std::string text = j.dump(2) + "\n";
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    out << text;
  } else {
    std::cout << text;
  }
}

void write_svg(const Barcode& B, const std::string& path) {
  double lo = 0.0, hi = 1.0;
  bool any = false;
  for (auto& [key, mult] : B.entries) {
    auto& iv = key.second;
    if (iv.lower != kMinusInf) { lo = any ? std::min(lo, iv.lower) : iv.lower; any = true; }
    if (iv.upper != kPlusInf) { hi = any ? std::max(hi, iv.upper) : iv.upper; any = true; }
  }
  if (hi <= lo) hi = lo + 1.0;
  double pad = 0.05 * (hi - lo);
  double xmin = lo - pad, xmax = hi + pad;
  long rows = 0;
  for (auto& [key, mult] : B.entries) rows += mult;
  int W = 640, rowh = 14, H = (int)(30 + rows * rowh);
  auto xpix = [&](double v) {
    if (v == kMinusInf) v = xmin;
    if (v == kPlusInf) v = xmax;
    return 40.0 + (W - 60.0) * (v - xmin) / (xmax - xmin);
  };
  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
  int y = 20;
  for (auto& [key, mult] : B.entries)
    for (long m = 0; m < mult; ++m) {
      const char* col = colors[((key.first % 5) + 5) % 5];
      out << "<line x1='" << xpix(key.second.lower) << "' y1='" << y
          << "' x2='" << xpix(key.second.upper) << "' y2='" << y
          << "' stroke='" << col << "' stroke-width='6'/>\n";
      out << "<text x='4' y='" << y + 4 << "' font-size='10'>H" << key.first << "</text>\n";
      y += rowh;
    }
  out << "</svg>\n";
}

json report_json(const DistanceReport& r, const Options& o) {
  return {{"value", value_json(r.value)},
          {"exact", r.exact},
          {"lower_bound", value_json(r.lower_bound)},
          {"note", r.note},
          {"seed", o.seed}};
}

int cmd_rips(const std::string& path, const Options& o) {
  Input in = load_input(path, o);
  if (in.is_dga) throw std::runtime_error("rips expects a point cloud or distance matrix");
  json simp = json::array();
  for (auto& [s, v] : in.X.simplices)
    simp.push_back({{"vertices", s}, {"value", v}});
  emit({{"simplices", simp}}, o);
  return 0;
}

int cmd_barcode(const std::string& path, const Options& o) {
  Input in = load_input(path, o);
  Field F = field_of(o);
  Barcode B;
  std::string kind;
  if (in.is_dga || o.relative) {
    B = compute_persistence(algebra_of(in, F), o.seed).barcode_all();
    kind = "relative cohomology";
  } else {
    B = homology_barcode(F, in.X);
    kind = "homology";
  }
  if (!o.svg_out.empty()) write_svg(B, o.svg_out);
  emit({{"field", F.rational() ? std::string("Q") : "F" + std::to_string(F.p)},
        {"kind", kind},
        {"bars", barcode_json(B)}},
       o);
  return 0;
}

int cmd_transfer(const std::string& path, const Options& o) {
  Input in = load_input(path, o);
  Field F = field_of(o);
  auto T = transfer(algebra_of(in, F), o.N, o.seed);
  json basis = json::array();
  for (int k = 0; k < T.minimal.dim(); ++k) {
    auto& bar = T.pers.bars[T.classes[k].first];
    basis.push_back({{"name", T.minimal.basis[k].name},
                     {"degree", T.minimal.basis[k].degree},
                     {"adams", T.minimal.basis[k].adams},
                     {"bar", {{"degree", bar.degree},
                              {"lower", value_json(bar.p2)},
                              {"upper", value_json(bar.p1)}}}});
  }
  json ops;
  for (int i = 2; i <= o.N; ++i) {
    json entries = json::array();
    for (auto& [tup, v] : T.minimal.ops[i]) {
      json out = json::array();
      for (auto& [k, c] : v) out.push_back({k, F.str(c)});
      entries.push_back({{"inputs", tup}, {"output", out}});
    }
    ops[std::to_string(i)] = entries;
  }
  emit({{"N", o.N}, {"basis", basis}, {"m", ops}}, o);
  return 0;
}

int cmd_distance(const std::string& pa, const std::string& pb, const Options& o) {
  Input a = load_input(pa, o), b = load_input(pb, o);
  Field F = field_of(o);
  int N = o.classical ? 1 : o.N;
  auto Ta = transfer(algebra_of(a, F), N, o.seed);
  auto Tb = transfer(algebra_of(b, F), N, o.seed == 0 ? 0 : o.seed + 1);
  DistanceReport r = an_bottleneck(Ta, Tb, N);
  emit(report_json(r, o), o);
  if (o.exact_only && !r.exact) return 3;
  return 0;
}

int cmd_verify(const std::string& path, const Options& o) {
  Input in = load_input(path, o);
  Field F = field_of(o);
  FilteredDgAlgebra A = algebra_of(in, F);
  bool all = true;
  auto line = [&](const std::string& name, bool ok, const std::string& extra = "") {
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !extra.empty()) std::cout << " (" << extra << ")";
    std::cout << "\n";
  };
  if (auto issue = validate(A)) {
    line("algebra identities", false, issue->identity + ": " + issue->witness);
    return 2;
  }
  line("algebra identities", true);
  auto P = compute_persistence(A, o.seed);
  bool mu = true;
  std::vector<int> degs;
  for (auto& e : A.basis) degs.push_back(e.degree);
  int topdeg = degs.empty() ? 0 : *std::max_element(degs.begin(), degs.end());
  for (int n = 0; n <= topdeg && mu; ++n) {
    if (!(P.barcode(n) == P.barcode_from_ranks(n))) mu = false;
    std::vector<double> pts = {kMinusInf};
    for (double c : P.scale) pts.push_back(c);
    pts.push_back(kPlusInf);
    for (double p : pts)
      for (double pp : pts)
        if (p >= pp && P.beta(n, p, pp) != P.beta_from_bars(n, p, pp)) mu = false;
  }
  line("rank-formula barcode roundtrip", mu);
  if (!in.is_dga) {
    auto rep = check_duality(F, in.X);
    line("homology/cohomology duality", rep.pass, rep.counterexample);
  }
  bool couple = true;
  std::string couple_note;
  std::vector<double> pts = {kMinusInf};
  for (double c : A.critical_scale()) pts.push_back(c);
  for (size_t s = 0; s + 1 < pts.size(); ++s) {
    auto S = exact_couple_slice(A, pts[s], pts[s + 1]);
    if (!S.exact) { couple = false; couple_note = S.note; }
  }
  line("exact couple exactness", couple, couple_note);
  auto T = transfer(A, o.N, o.seed);
  for (int n = 2; n <= o.N; ++n) {
    auto w = check_stasheff(T.minimal, n);
    line("associativity identity " + std::to_string(n), !w, w ? *w : "");
  }
  for (int n = 1; n <= o.N; ++n) {
    auto w = check_morphism(T.minimal, T.ambient, T.inclusion, n);
    line("morphism identity " + std::to_string(n), !w, w ? *w : "");
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent cohomology barcodes with transferred A_N structure"};
  app.require_subcommand(1);
  Options o;
  if (const char* th = std::getenv("AINFP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(th, &end, 10);
    if (!end || *end || v < 1) {
      std::cerr << "AINFP_THREADS must be a positive integer\n";
      return 1;
    }
  }
  app.add_option("--field", o.field, "coefficient field: F2, F5, Q, Fp")->capture_default_str();
  app.add_option("--p", o.p, "prime for --field Fp");
  app.add_option("-N,--order", o.N, "number of transferred operations")->capture_default_str();
  app.add_option("--max-dim", o.max_dim, "largest simplex dimension kept")->capture_default_str();
  app.add_option("--cap", o.cap, "largest filtration value kept");
  app.add_option("--seed", o.seed, "seed for tie shuffling in the reduction");
  app.add_flag("--dist", o.dist_matrix, "treat CSV input as a distance matrix");
  app.add_option("--json", o.json_out, "write JSON output to this file");
  app.add_option("--svg", o.svg_out, "write a static barcode plot");

  std::string in_a, in_b;
  auto* rips_cmd = app.add_subcommand("rips", "build a filtered complex from points/distances");
  rips_cmd->add_option("input", in_a, "CSV file")->required();
  auto* bar_cmd = app.add_subcommand("barcode", "compute a barcode");
  bar_cmd->add_option("input", in_a, "CSV, complex JSON, or dg algebra JSON")->required();
  bar_cmd->add_flag("--relative", o.relative, "relative cohomology bars instead of homology");
  auto* tr_cmd = app.add_subcommand("transfer", "transferred minimal structure as JSON");
  tr_cmd->add_option("input", in_a, "input file")->required();
  auto* dist_cmd = app.add_subcommand("distance", "distance between two inputs");
  dist_cmd->add_option("input_a", in_a, "first input")->required();
  dist_cmd->add_option("input_b", in_b, "second input")->required();
  dist_cmd->add_flag("--classical", o.classical, "classical bottleneck (N = 1)");
  dist_cmd->add_flag("--exact-only", o.exact_only, "exit 3 unless the value is certified exact");
  auto* ver_cmd = app.add_subcommand("verify", "run the self checks on one input");
  ver_cmd->add_option("input", in_a, "input file")->required();
  for (auto* sub : {rips_cmd, bar_cmd, tr_cmd, dist_cmd, ver_cmd}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (rips_cmd->parsed()) return cmd_rips(in_a, o);
    if (bar_cmd->parsed()) return cmd_barcode(in_a, o);
    if (tr_cmd->parsed()) return cmd_transfer(in_a, o);
    if (dist_cmd->parsed()) return cmd_distance(in_a, in_b, o);
    if (ver_cmd->parsed()) return cmd_verify(in_a, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
