#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bqec/analysis.hpp"
#include "bqec/family.hpp"
#include "bqec/quad.hpp"
#include "bqec/tables.hpp"
#include "bqec/torsion.hpp"
#include "verify.hpp"

namespace bqec::cli {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IrrationalN:
    case ErrorCode::NotRealizable:
    case ErrorCode::NotASquare:
    case ErrorCode::ZeroU:
    case ErrorCode::KernelPoint:
    case ErrorCode::MapPole:
    case ErrorCode::BadReduction:
      return kDomainRejection;
    case ErrorCode::DigitCapExceeded:
    case ErrorCode::HeightNotConverged:
      return kCapExceeded;
    default:
      return kInvalidInput;
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_list(const std::string& s, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  for (const auto& p : split(s, ',')) out.push_back(Rational::parse(p));
  if (expected != 0 && out.size() != expected)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  return out;
}

ordered_json point_json(const CurvePoint& p) {
  if (p.is_infinity()) return "O";
  return ordered_json::array({p.x().str(), p.y().str()});
}

std::string pretty(const ordered_json& j) { return j.dump(2); }

// Curve selection shared by height and regulator.
struct CurveArgs {
  std::string a, ab, coeffs;

  Curve build() const {
    const int given = !a.empty() + !ab.empty() + !coeffs.empty();
    if (given != 1) throw Error(ErrorCode::InvalidInput, "give exactly one of --a, --curve, --coeffs");
    if (!a.empty()) return family_curve(Rational::parse(a)).curve;
    if (!ab.empty()) {
      const auto v = parse_list(ab, 2, "--curve");
      return Curve::ab(v[0], v[1]);
    }
    const auto v = parse_list(coeffs, 5, "--coeffs");
    return Curve::general(v[0], v[1], v[2], v[3], v[4]);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "family parameter a");
    cmd->add_option("--curve", ab, "A,B for y^2 = x^3 + A x^2 + B x");
    cmd->add_option("--coeffs", coeffs, "a1,a2,a3,a4,a6 for a general Weierstrass model");
  }
};

std::vector<CurvePoint> parse_points(const Curve& c, const std::vector<std::string>& raw) {
  std::vector<CurvePoint> pts;
  for (const auto& r : raw) {
    const auto v = parse_list(r, 2, "--point");
    CurvePoint p(v[0], v[1]);
    if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str() + " is not on " + c.str());
    pts.push_back(p);
  }
  return pts;
}

int cmd_curve(const std::string& a_text, std::ostream& out) {
  const Rational a = Rational::parse(a_text);
  const FamilyCurve e = family_curve(a);
  const auto named = named_torsion(a);
  std::vector<CurvePoint> hints;
  ordered_json named_json = ordered_json::array();
  for (const auto& t : named) {
    hints.push_back(t.point);
    named_json.push_back({{"point", point_json(t.point)}, {"order", t.order}});
  }
  const TorsionStructure t = torsion_subgroup(e.curve, hints);
  ordered_json gens = ordered_json::array();
  for (const auto& g : t.generators) gens.push_back(point_json(g));

  ordered_json j;
  j["a"] = a.str();
  j["A"] = e.curve.A().str();
  j["B"] = e.curve.B().str();
  j["discriminant"] = e.curve.discriminant().str();
  j["j"] = j_invariant(e.curve).str();
  j["torsion"] = {{"structure", t.str()},
                  {"certainty", t.certainty == Certainty::Proven ? "Proven" : "BoundOnly"},
                  {"bound", t.bound},
                  {"generators", gens}};
  j["named_torsion"] = named_json;
  j["full_two_torsion"] = has_full_two_torsion(a);
  out << pretty(j) << '\n';
  return kOk;
}

ordered_json sides_json(const Quadrilateral& q) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : q.sides()) arr.push_back(s.str());
  return arr;
}

int cmd_quad_sides(const std::string& sides_text, std::ostream& out) {
  const auto v = parse_list(sides_text, 4, "--sides");
  const Quadrilateral q(v[0], v[1], v[2], v[3]);
  const Rational n = n_ratio(q);
  const QuadPoint p = quad_to_point(q);
  ordered_json j;
  j["sides"] = sides_json(q);
  j["N"] = n.str();
  j["a"] = p.a.str();
  j["s"] = p.s.str();
  j["t"] = p.t.str();
  j["u"] = p.u.str();
  j["v"] = p.v.str();
  out << pretty(j) << '\n';
  return kOk;
}

int cmd_quad_point(const std::string& a_text, const std::string& u_text, const std::string& v_text,
                   std::ostream& out) {
  const Rational a = Rational::parse(a_text), u = Rational::parse(u_text), v = Rational::parse(v_text);
  const Rational s = point_to_s(a, u, v);
  ordered_json j;
  j["a"] = a.str();
  j["u"] = u.str();
  j["v"] = v.str();
  j["s"] = s.str();
  try {
    const Quadrilateral q = point_to_quad(a, u, v);
    j["sides"] = sides_json(q);
    j["N"] = n_ratio(q).str();
  } catch (const NotRealizable& e) {
    j["error"] = "NotRealizable";
    j["side"] = e.side();
    j["value"] = e.value().str();
    j["reason"] = e.side() + "=" + e.value().str();
    out << pretty(j) << '\n';
    return kDomainRejection;
  }
  out << pretty(j) << '\n';
  return kOk;
}

int cmd_search(long max_side, const std::string& format, unsigned jobs, std::ostream& out) {
  const auto found = search_quads(max_side, jobs);
  if (format == "csv") {
    out << "a,b,c,d,N\n";
    for (const auto& f : found)
      out << f.sides[0] << ',' << f.sides[1] << ',' << f.sides[2] << ',' << f.sides[3] << ',' << f.n.str() << '\n';
    return kOk;
  }
  // One compact object per line so large corpora can be streamed.
  for (const auto& f : found) out << ordered_json{{"sides", f.sides}, {"N", f.n.str()}}.dump() << '\n';
  return kOk;
}

std::vector<std::pair<int, double>> parse_thresholds(const std::string& text) {
  std::vector<std::pair<int, double>> th;
  for (const auto& item : split(text, ',')) {
    const auto kv = split(item, ':');
    if (kv.size() != 2) throw Error(ErrorCode::InvalidInput, "threshold '" + item + "' is not N:T");
    try {
      std::size_t used = 0;
      const int n = std::stoi(kv[0], &used);
      if (used != kv[0].size() || n < 5) throw std::invalid_argument("bound");
      const double t = std::stod(kv[1], &used);
      if (used != kv[1].size()) throw std::invalid_argument("value");
      th.emplace_back(n, t);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "threshold '" + item + "' is not N:T");
    }
  }
  if (th.empty()) throw Error(ErrorCode::InvalidInput, "empty threshold list");
  return th;
}

std::vector<Rational> read_k_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::vector<Rational> ks;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (!trimmed.empty()) ks.push_back(Rational::parse(trimmed));
  }
  return ks;
}

std::string fixed(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

int cmd_sieve(int sub, const std::string& k_list, const std::string& k_file, const std::string& th_text,
              const std::string& format, unsigned jobs, std::ostream& out) {
  if (sub < 1 || sub > 8) throw Error(ErrorCode::InvalidInput, "subfamily must be 1..8");
  if (k_list.empty() == k_file.empty()) throw Error(ErrorCode::InvalidInput, "give exactly one of --k, --k-file");
  const auto ks = k_list.empty() ? read_k_file(k_file) : parse_list(k_list, 0, "--k");
  const auto th = th_text.empty() ? tables::default_thresholds(sub) : parse_thresholds(th_text);
  const auto records = sieve(sub, ks, th, jobs);

  if (format == "csv") {
    out << "subfamily,k,a";
    for (const auto& [n, t] : th) out << ",S" << n;
    out << ",passed,error\n";
    for (const auto& r : records) {
      out << r.subfamily << ',' << r.k.str() << ',' << (r.a ? r.a->str() : "");
      for (const auto& [n, t] : th) {
        out << ',';
        if (auto it = r.sums.find(n); it != r.sums.end()) out << fixed(it->second);
      }
      out << ',' << (r.passed ? "true" : "false") << ',' << r.error.value_or("") << '\n';
    }
    return kOk;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["subfamily"] = r.subfamily;
    j["k"] = r.k.str();
    j["a"] = r.a ? ordered_json(r.a->str()) : ordered_json(nullptr);
    ordered_json sums = ordered_json::object();
    for (const auto& [n, s] : r.sums) sums[std::to_string(n)] = s;
    j["sums"] = sums;
    ordered_json thj = ordered_json::object();
    for (const auto& [n, t] : th) thj[std::to_string(n)] = t;
    j["thresholds"] = thj;
    j["passed"] = r.passed;
    if (r.error) j["error"] = *r.error;
    arr.push_back(j);
  }
  out << pretty(arr) << '\n';
  return kOk;
}

int cmd_height(const CurveArgs& ca, const std::vector<std::string>& raw, int doublings, std::ostream& out) {
  const Curve c = ca.build();
  const auto pts = parse_points(c, raw);
  if (pts.size() != 1) throw Error(ErrorCode::InvalidInput, "height takes exactly one --point");
  const HeightResult h = canonical_height(c, pts[0], doublings);
  ordered_json j;
  j["curve"] = c.str();
  j["point"] = point_json(pts[0]);
  j["height"] = h.value;
  j["doublings"] = h.doublings_used;
  j["error_bound"] = h.error_bound;
  j["torsion_collapse"] = h.torsion_collapse;
  out << pretty(j) << '\n';
  return kOk;
}

int cmd_regulator(const CurveArgs& ca, const std::vector<std::string>& raw, int doublings, std::ostream& out) {
  const Curve c = ca.build();
  const auto pts = parse_points(c, raw);
  if (pts.empty()) throw Error(ErrorCode::InvalidInput, "regulator needs at least one --point");
  const double reg = regulator(c, pts, doublings);
  ordered_json points = ordered_json::array();
  for (const auto& p : pts) points.push_back(point_json(p));
  ordered_json j;
  j["curve"] = c.str();
  j["points"] = points;
  j["regulator"] = reg;
  j["independent"] = is_probably_independent(c, pts, doublings);
  j["doublings"] = doublings;
  out << pretty(j) << '\n';
  return kOk;
}

int cmd_verify(const std::string& table, const std::string& format, std::ostream& out) {
  const auto reports = verify_table(table);
  int pass = 0, fail = 0, disc = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Fail) ++fail;
    else ++disc;
  }
  if (format == "text") {
    for (const auto& r : reports) out << to_string(r.status) << "  " << r.item << "  " << r.detail << '\n';
    out << pass << " pass, " << fail << " fail, " << disc << " discrepancies in reference data\n";
  } else {
    ordered_json items = ordered_json::array();
    for (const auto& r : reports) items.push_back({{"item", r.item}, {"status", to_string(r.status)}, {"detail", r.detail}});
    ordered_json j;
    j["table"] = table;
    j["items"] = items;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"paper_discrepancy", disc}};
    out << pretty(j) << '\n';
  }
  return fail > 0 ? kVerificationFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on the bicentric-quadrilateral elliptic curve family", "bqec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bqec 0.1.0");

  std::string a_text;
  auto* curve = app.add_subcommand("curve", "curve data and torsion for E_a");
  curve->add_option("--a", a_text, "family parameter")->required();

  std::string sides, qa, qu, qv;
  auto* quad = app.add_subcommand("quad", "quadrilateral to curve point or back");
  auto* sides_opt = quad->add_option("--sides", sides, "a,b,c,d");
  auto* qa_opt = quad->add_option("--a", qa, "curve parameter");
  auto* qu_opt = quad->add_option("--u", qu, "point u-coordinate");
  auto* qv_opt = quad->add_option("--v", qv, "point v-coordinate");
  sides_opt->excludes(qa_opt)->excludes(qu_opt)->excludes(qv_opt);
  qu_opt->needs(qa_opt)->needs(qv_opt);
  qv_opt->needs(qa_opt)->needs(qu_opt);
  qa_opt->needs(qu_opt);

  long max_side = 0;
  std::string format = "json";
  unsigned jobs = 1;
  auto* search = app.add_subcommand("search-quads", "enumerate bicentric quadrilaterals with rational N");
  search->add_option("--max-side", max_side, "largest side")->required()->check(CLI::Range(1L, 20000L));
  search->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  int sub = 0;
  std::string k_list, k_file, thresholds;
  auto* sv = app.add_subcommand("sieve", "Mestre-Nagao sums over a rank-one subfamily");
  sv->add_option("--subfamily", sub)->required();
  sv->add_option("--k", k_list, "comma-separated k values");
  sv->add_option("--k-file", k_file, "file with one k per line");
  sv->add_option("--thresholds", thresholds, "e.g. 523:10,1979:14");
  sv->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sv->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  CurveArgs hc, rc;
  std::vector<std::string> points;
  int doublings = 8;
  auto* height = app.add_subcommand("height", "canonical height of a point");
  hc.attach(height);
  height->add_option("--point", points, "x,y")->required();
  height->add_option("--doublings", doublings)->check(CLI::Range(1, 10));

  auto* reg = app.add_subcommand("regulator", "regulator of a list of points");
  rc.attach(reg);
  reg->add_option("--point", points, "x,y (repeat)")->required();
  reg->add_option("--doublings", doublings)->check(CLI::Range(1, 10));

  std::string table;
  auto* verify = app.add_subcommand("verify", "re-check the embedded reference tables");
  verify->add_option("table", table)->required()->check(
      CLI::IsMember({"examples", "table3", "table4", "table5", "progressions", "all"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "bqec 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*curve) return cmd_curve(a_text, out);
    if (*quad) {
      if (!sides.empty()) return cmd_quad_sides(sides, out);
      if (qa.empty()) throw Error(ErrorCode::InvalidInput, "give --sides or --a/--u/--v");
      return cmd_quad_point(qa, qu, qv, out);
    }
    if (*search) return cmd_search(max_side, format, jobs, out);
    if (*sv) return cmd_sieve(sub, k_list, k_file, thresholds, format, jobs, out);
    if (*height) return cmd_height(hc, points, doublings, out);
    if (*reg) return cmd_regulator(rc, points, doublings, out);
    if (*verify) return cmd_verify(table, format, out);
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = to_string(e.code());
    j["reason"] = e.what();
    out << pretty(j) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInvalidInput;
}

}  // namespace bqec::cli
