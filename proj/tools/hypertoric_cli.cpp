#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "hypertoric/envelopes.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/localization.hpp"
#include "hypertoric/loops.hpp"
#include "hypertoric/xi.hpp"

using namespace hypertoric;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  int q_order = 4;
  std::string slope_text;
  std::string slope_dual_text;
  std::string zeta_text;
  std::string format = "human";
  std::uint64_t seed = 1;
};

Slope parse_slope(const std::string& text, int n) {
  Slope s;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) s.coeff.push_back(parse_rational(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (static_cast<int>(s.coeff.size()) != n)
    throw std::invalid_argument("slope needs exactly one coefficient per index");
  return s;
}

IntVec parse_intvec(const std::string& text, int len) {
  std::vector<Int> vals;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) vals.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (static_cast<int>(vals.size()) != len)
    throw std::invalid_argument("cocharacter has the wrong length");
  IntVec v(len);
  for (int i = 0; i < len; ++i) v(i) = vals[static_cast<size_t>(i)];
  return v;
}

Slope random_slope(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<Int> num(-6, 6);
  std::uniform_int_distribution<Int> den(2, 7);
  Slope s;
  for (int e = 0; e < n; ++e) s.coeff.push_back(rat(num(rng), den(rng)));
  return s;
}

// Draw slopes until the construction accepts one as generic.
Slope generic_slope(std::mt19937_64& rng, const HypertoricData& data,
                    const PolarizationSpec& pol, bool opposite) {
  for (int tries = 0; tries < 200; ++tries) {
    Slope s = random_slope(rng, data.n());
    try {
      build_stab(data, pol, s, opposite);
      return s;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  throw std::runtime_error("no generic slope found in 200 draws");
}

std::string slope_text(const Slope& s) {
  std::string out;
  for (size_t i = 0; i < s.coeff.size(); ++i) {
    if (i) out += ",";
    out += s.coeff[i].get_str();
  }
  return out;
}

struct Reporter {
  json doc;
  bool all_pass = true;
  std::string format;

  Reporter(const std::string& command, const std::string& input_hash, std::string fmt)
      : format(std::move(fmt)) {
    doc["command"] = command;
    doc["input_hash"] = input_hash;
    doc["checks"] = json::array();
  }
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    doc["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
  }
  int finish() {
    doc["pass"] = all_pass;
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "command: " << doc["command"].get<std::string>() << "\n";
      for (const auto& c : doc["checks"]) {
        std::cout << "  " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                  << c["name"].get<std::string>();
        std::string d = c["detail"].get<std::string>();
        if (!d.empty()) std::cout << "  (" << d << ")";
        std::cout << "\n";
      }
      if (doc.contains("extra"))
        std::cout << doc["extra"].dump(2) << "\n";
      std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
  }
};

int run_validate(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  ValidationReport rep = validate(data);
  Reporter out("validate", file_hash(opt.input), opt.format);
  for (const auto& c : rep.checks) out.add(c.name, c.pass, c.detail);
  out.doc["extra"]["notes"] = rep.notes;
  return out.finish();
}

int run_fixed_points(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  RestrictionContext ctx = make_restriction_context(data);
  Reporter out("fixed-points", file_hash(opt.input), opt.format);
  json pts = json::array();
  for (int i = 0; i < ctx.point_count(); ++i) {
    const FixedPoint& p = ctx.point(i);
    json jp;
    jp["base"] = p.name;
    json alpha;
    for (const auto& [e, a] : p.alpha)
      alpha[data.labels[static_cast<size_t>(e)]] = std::vector<Int>(a.data(), a.data() + a.size());
    jp["alpha"] = alpha;
    json betap;
    for (const auto& [e, b] : p.beta_p)
      betap[data.labels[static_cast<size_t>(e)]] = std::vector<Int>(b.data(), b.data() + b.size());
    jp["beta_p"] = betap;
    json eps;
    for (int e = 0; e < data.n(); ++e)
      eps[data.labels[static_cast<size_t>(e)]] = epsilon(ctx, i, e);
    jp["epsilon"] = eps;
    pts.push_back(jp);
  }
  out.doc["extra"]["fixed_points"] = pts;
  out.add("enumeration", true, std::to_string(ctx.point_count()) + " fixed points");
  return out.finish();
}

int run_dual(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  Reporter out("dual", file_hash(opt.input), opt.format);
  out.doc["extra"]["dual"] = data_to_json(gale_dual(data));
  out.add("gale_dual", true);
  return out.finish();
}

int run_xi_matrix(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  JointContext jc = make_joint_context(data);
  XiMatrix m = xi_matrix(jc);
  Reporter out("xi-matrix", file_hash(opt.input), opt.format);
  json entries = json::array();
  for (int p = 0; p < jc.points(); ++p)
    for (int q = 0; q < jc.points(); ++q) {
      json row;
      row["p"] = jc.side_x.point(p).name;
      row["q_dual"] = jc.side_x.point(q).name;
      row["value"] = to_string(m.entry[static_cast<size_t>(p)][static_cast<size_t>(q)]);
      entries.push_back(row);
    }
  out.doc["extra"]["entries"] = entries;
  XiReport vanish = check_vanishing(jc, m);
  out.add("vanishing_pattern", vanish.ok());
  XiReport degree = check_degree_bound(jc, m);
  out.add("degree_bound", degree.ok());
  for (const auto& r : vanish.rows)
    if (!r.pass)
      out.add("vanishing[" + std::to_string(r.p) + "," + std::to_string(r.q) + "]", false,
              r.detail);
  for (const auto& r : degree.rows)
    if (!r.pass)
      out.add("degree[" + std::to_string(r.p) + "," + std::to_string(r.q) + "]", false, r.detail);
  return out.finish();
}

int run_stab(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  if (!opt.zeta_text.empty()) data.zeta = parse_intvec(opt.zeta_text, data.a_rank());
  std::mt19937_64 rng(opt.seed);
  PolarizationSpec pol = PolarizationSpec::standard(data.n());
  Slope slope = opt.slope_text.empty() ? generic_slope(rng, data, pol, false)
                                       : parse_slope(opt.slope_text, data.n());
  StabMatrix S = build_stab(data, pol, slope, false);

  HypertoricData opp = data;
  opp.zeta = -data.zeta;
  StabMatrix S_op = build_stab(opp, pol, slope.negated(), true, S.entry[0][0].lattice().scale());

  Reporter out("stab", file_hash(opt.input), opt.format);
  out.doc["extra"]["slope"] = slope_text(slope);
  out.doc["extra"]["seed"] = opt.seed;
  json entries = json::array();
  for (size_t p = 0; p < S.entry.size(); ++p)
    for (size_t q = 0; q < S.entry[p].size(); ++q) {
      json row;
      row["source"] = S.data.labels.empty() ? std::to_string(p) : std::to_string(p);
      row["p"] = static_cast<int>(p);
      row["q"] = static_cast<int>(q);
      row["value"] = S.entry[p][q].str();
      entries.push_back(row);
    }
  out.doc["extra"]["entries"] = entries;

  AxiomReport ax = check_axioms(S);
  for (const auto& c : ax.checks) out.add("axiom_" + c.name, c.pass, c.detail);
  AxiomReport ax_op = check_axioms(S_op);
  for (const auto& c : ax_op.checks) out.add("opposite_axiom_" + c.name, c.pass, c.detail);
  PairingReport pairing = duality_pairing(S, S_op);
  out.add("duality_pairing_identity", pairing.is_identity);
  return out.finish();
}

int run_intertwiner(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  std::mt19937_64 rng(opt.seed);
  PolarizationSpec pol = PolarizationSpec::standard(data.n());
  Slope sx = opt.slope_text.empty() ? generic_slope(rng, data, pol, true)
                                    : parse_slope(opt.slope_text, data.n());
  HypertoricData dual = gale_dual(data);
  dual.zeta = data.eta;
  Slope sd = opt.slope_dual_text.empty() ? generic_slope(rng, dual, pol, true)
                                         : parse_slope(opt.slope_dual_text, data.n());
  IntertwinerReport rep = intertwiner_check(data, sx, sd);
  Reporter out("intertwiner-check", file_hash(opt.input), opt.format);
  out.doc["extra"]["slope"] = slope_text(sx);
  out.doc["extra"]["slope_dual"] = slope_text(sd);
  out.doc["extra"]["seed"] = opt.seed;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"p", r.p},
                    {"q", r.q},
                    {"limit", r.computed},
                    {"expected", r.expected},
                    {"pass", r.pass && r.bounded}});
    out.add("pair[" + std::to_string(r.p) + "," + std::to_string(r.q) + "]",
            r.pass && r.bounded, r.pass ? "" : "limit " + r.computed + " expected " + r.expected);
  }
  out.doc["extra"]["pairs"] = rows;
  return out.finish();
}

int run_interface_check(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  MainTheoremReport rep = main_theorem_check(data, rat(opt.q_order));
  Reporter out("interface-check", file_hash(opt.input), opt.format);
  for (const auto& r : rep.rows)
    out.add("pair[" + std::to_string(r.p) + "," + std::to_string(r.q) + "]", r.pass,
            r.trivially_zero ? "both sides vanish" : "unit " + r.unit);
  out.add("unit_consistent", rep.unit_consistent, rep.global_unit);
  out.doc["extra"]["global_unit"] = rep.global_unit;
  out.doc["extra"]["q_order"] = opt.q_order;
  return out.finish();
}

int run_loop_xi(const Options& opt) {
  HypertoricData data = load_data(opt.input);
  LoopData ld{data, opt.q_order};
  QSeries s = xi_positive_loops(ld, rat(opt.q_order));
  Reporter out("loop-xi", file_hash(opt.input), opt.format);
  out.doc["extra"]["series"] = s.str();
  out.doc["extra"]["q_order"] = opt.q_order;
  out.add("expansion", true, "factors " + std::to_string(xi_positive_loops_raw(ld).size()));
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hypertoric fixed-point combinatorics, stable envelope "
               "restriction matrices, and duality interface checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input, "input arrangement (JSON)");
  app.add_option("--q-order", opt.q_order, "truncation order for q-series");
  app.add_option("--slope", opt.slope_text, "slope coefficients a/b,c/d,...");
  app.add_option("--slope-dual", opt.slope_dual_text, "dual-side slope coefficients");
  app.add_option("--zeta", opt.zeta_text, "override the cocharacter zeta");
  app.add_option("--format", opt.format, "human or json");
  app.add_option("--seed", opt.seed, "seed for random slopes");

  app.add_subcommand("validate", "check the structural invariants of the data");
  app.add_subcommand("fixed-points", "enumerate bases with dual-basis data");
  app.add_subcommand("dual", "emit the Gale dual data");
  app.add_subcommand("xi-matrix", "restriction matrix of xi with vanishing and degree checks");
  app.add_subcommand("stab", "build stable envelopes, check axioms and duality pairing");
  app.add_subcommand("intertwiner-check", "limit of the xi pairing against both envelope families");
  app.add_subcommand("interface-check", "compare xi of positive loops with the theta interface");
  app.add_subcommand("loop-xi", "dump the positive-loop xi series");

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().at(0)->get_name();
  try {
    if (cmd == "validate") return run_validate(opt);
    if (cmd == "fixed-points") return run_fixed_points(opt);
    if (cmd == "dual") return run_dual(opt);
    if (cmd == "xi-matrix") return run_xi_matrix(opt);
    if (cmd == "stab") return run_stab(opt);
    if (cmd == "intertwiner-check") return run_intertwiner(opt);
    if (cmd == "interface-check") return run_interface_check(opt);
    if (cmd == "loop-xi") return run_loop_xi(opt);
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
