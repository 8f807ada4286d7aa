// Command-line front end. Every subcommand takes one input (a braid such as
// "2: 1 1", or a web for web-eval) and prints text or, with --json, a JSON
// object. Exit status: 0 success, 1 unusable input, 2 failed consistency check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkhom/braid.hpp"
#include "linkhom/hecke.hpp"
#include "linkhom/kauffman.hpp"
#include "linkhom/khovanov.hpp"
#include "linkhom/soergel.hpp"
#include "linkhom/webrt.hpp"

using json = nlohmann::json;
using namespace linkhom;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  int k = 2;
  int eta = -1;
  std::vector<int> colors;
  int cutoff = kDefaultCutoff;
  bool json_out = false;
};

// Input could not be used (bad braid, bad web, options that do not fit).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return rational_to_string(q);
}

json laurent_json(const LaurentPoly& p) {
  json j;
  j["text"] = p.to_string();
  json coeffs = json::array();
  int vmin = 0;
  if (!p.is_zero()) {
    vmin = p.terms().begin()->first;
    for (int d = vmin; d <= p.terms().rbegin()->first; ++d) {
      auto it = p.terms().find(d);
      coeffs.push_back(it == p.terms().end() ? json(0) : rational_json(it->second));
    }
  }
  j["vmin"] = vmin;
  j["coeffs"] = coeffs;
  return j;
}

json vseries_json(const TruncatedVSeries& s, int t2, int h2) {
  json coeffs = json::array();
  const int vmin = s.min_degree() <= s.cutoff() ? s.min_degree() : s.cutoff() + 1;
  for (int d = vmin; d <= s.cutoff(); ++d) coeffs.push_back(rational_json(s.coeff(d)));
  return {{"t2", t2}, {"h2", h2}, {"vmin", vmin}, {"coeffs", coeffs}, {"cutoff", s.cutoff()}};
}

json series_json(const TriGradedSeries& s) {
  json out = json::array();
  for (const auto& [key, part] : s.parts()) out.push_back(vseries_json(part, key.first, key.second));
  return out;
}

std::string rational_function_text(const MultiRational& r) {
  return r.is_laurent_in_v() ? r.to_laurent().to_string() : r.to_string();
}

BraidWord read_braid(const std::string& text) {
  try {
    return parse_braid(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// Braids named on the command line: the input itself, or every
// non-comment line when the input is a readable file.
std::vector<BraidWord> read_braids(const std::string& input) {
  std::ifstream in(input);
  if (!in) return {read_braid(input)};
  std::vector<BraidWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(read_braid(line));
  }
  return out;
}

std::string read_web_text(const std::string& input) {
  std::ifstream in(input);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  // Inline webs may separate lines with ';' or a literal "\n".
  std::string text;
  for (size_t i = 0; i < input.size(); ++i) {
    if (input[i] == ';') {
      text += '\n';
    } else if (input[i] == '\\' && i + 1 < input.size() && input[i + 1] == 'n') {
      text += '\n';
      ++i;
    } else {
      text += input[i];
    }
  }
  return text;
}

struct Outcome {
  json data;
  std::string text;
  bool consistent = true;
};

Outcome cross_check_one(const BraidWord& b, int cutoff) {
  const LaurentPoly j = jones(b);
  const LaurentPoly hom = homfly_at(b, 2);
  const MultiRational w = wrt_eval(b, 2, -1);
  const LaurentPoly kh = kh_poincare(b).at_t_minus_one();
  const TruncatedVSeries krj = kr_jones_specialization(kr(b, cutoff).series);

  Outcome o;
  std::ostringstream text;
  text << to_string(b) << "\n";
  json checks = json::array();
  auto report = [&](const std::string& name, const std::string& value, bool ok) {
    text << "  " << name << ": " << value << (ok ? "" : "   MISMATCH") << "\n";
    checks.push_back({{"pipeline", name}, {"value", value}, {"agrees", ok}});
    o.consistent = o.consistent && ok;
  };
  report("jones", j.to_string(), true);
  report("homfly at a=v^2", hom.to_string(), hom == j);
  report("wrt k=2 eta=-1", rational_function_text(w), w == MultiRational::from_laurent(j));
  report("khovanov euler characteristic", kh.to_string(), kh == j);
  // The KR series is exact only up to its cutoff.
  const bool kr_ok = krj == TruncatedVSeries(j, krj.cutoff());
  report("kr at t=-1, a=v^2", krj.to_string(), kr_ok);
  o.text = text.str();
  o.data = {{"braid", to_string(b)}, {"checks", checks}, {"consistent", o.consistent}};
  return o;
}

Outcome moves_check_one(const BraidWord& b, int cutoff) {
  Outcome o;
  std::ostringstream text;
  const LaurentPoly j = jones(b);
  const MultiRational h = homfly(b);
  const BigradedPoly kh = kh_poincare(b);
  const TriGradedSeries krs = kr(b, cutoff).series;
  json moves = json::array();
  text << to_string(b) << "\n";
  for (const auto& m : enumerate_moves(b)) {
    json diffs = json::array();
    if (jones(m) != j) diffs.push_back("jones");
    if (homfly(m) != h) diffs.push_back("homfly");
    if (!(kh_poincare(m) == kh)) diffs.push_back("khovanov");
    if (kr(m, cutoff).series != krs) diffs.push_back("kr");
    text << "  " << to_string(m) << (diffs.empty() ? "  invariant" : "  CHANGED: " + diffs.dump()) << "\n";
    moves.push_back({{"braid", to_string(m)}, {"changed", diffs}});
    o.consistent = o.consistent && diffs.empty();
  }
  o.text = text.str();
  o.data = {{"braid", to_string(b)}, {"moves", moves}, {"consistent", o.consistent}};
  return o;
}

Outcome run(const RunConfig& cfg) {
  Outcome o;
  if (cfg.command == "web-eval") {
    WebWord w;
    try {
      w = parse_web(read_web_text(cfg.input));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const RepContext ctx(cfg.k, cfg.eta);
    bool closed = true;
    for (int l : w.domain) closed = closed && l == cfg.k;
    for (int l : w.codomain()) closed = closed && l == cfg.k;
    if (closed) {
      const LaurentPoly v = closed_web_value(w, ctx);
      o.text = v.to_string();
      o.data = laurent_json(v);
      return o;
    }
    const QMatrix m = phi_eval(w, ctx);
    json rows = json::array();
    std::ostringstream text;
    text << m.rows() << "x" << m.cols() << " matrix\n";
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) {
        const std::string e = rational_function_text(m.at(r, c));
        row.push_back(e);
        text << (c ? "\t" : "") << e;
      }
      rows.push_back(row);
      text << "\n";
    }
    o.text = text.str();
    o.data = {{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", rows}};
    return o;
  }

  if (cfg.command == "cross-check" || cfg.command == "moves-check") {
    json all = json::array();
    for (const auto& b : read_braids(cfg.input)) {
      Outcome one = cfg.command == "cross-check" ? cross_check_one(b, cfg.cutoff) : moves_check_one(b, cfg.cutoff);
      o.text += one.text;
      all.push_back(one.data);
      o.consistent = o.consistent && one.consistent;
    }
    if (cfg.command == "cross-check")
      o.text += o.consistent ? "all pipelines agree\n" : "pipelines disagree\n";
    else
      o.text += o.consistent ? "all moves preserve the invariants\n" : "some move changes an invariant\n";
    o.data = {{"results", all}, {"consistent", o.consistent}};
    return o;
  }

  const BraidWord b = read_braid(cfg.input);
  if (cfg.command == "jones") {
    const LaurentPoly j = jones(b);
    o.text = j.to_string();
    o.data = laurent_json(j);
  } else if (cfg.command == "homfly") {
    const MultiRational h = homfly(b);
    o.text = h.to_string();
    o.data = {{"text", o.text}, {"variables", {"v", "a"}}};
  } else if (cfg.command == "khovanov") {
    const BigradedPoly p = kh_poincare(b);
    o.text = p.to_string();
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) terms.push_back({{"t", key.first}, {"v", key.second}, {"coeff", c}});
    o.data = {{"text", o.text}, {"terms", terms}};
  } else if (cfg.command == "kr") {
    const KRResult r = kr(b, cfg.cutoff);
    o.text = r.series.to_string();
    o.data = series_json(r.series);
  } else if (cfg.command == "wrt") {
    const MultiRational w = wrt_eval(b, cfg.k, cfg.eta);
    o.text = rational_function_text(w);
    o.data = w.is_laurent_in_v() ? laurent_json(w.to_laurent()) : json{{"text", o.text}};
  } else if (cfg.command == "colored-jones") {
    if (static_cast<int>(cfg.colors.size()) != component_count(b))
      throw InputError("--colors needs one colour per component (" + std::to_string(component_count(b)) + ")");
    const MultiRational c = colored_jones(b, cfg.colors);
    o.text = rational_function_text(c);
    o.data = c.is_laurent_in_v() ? laurent_json(c.to_laurent()) : json{{"text", o.text}};
  }
  return o;
}

int default_cutoff() {
  if (const char* env = std::getenv("LINKHOM_CUTOFF")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring LINKHOM_CUTOFF=" << env << "\n";
    }
  }
  return kDefaultCutoff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link invariants and link homologies of braid closures"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.cutoff = default_cutoff();
  std::string colors;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"jones", "Jones polynomial"},
      {"homfly", "HOMFLY-PT polynomial in v and a"},
      {"khovanov", "Khovanov Poincare polynomial"},
      {"kr", "triply graded Khovanov-Rozansky series"},
      {"wrt", "quantum invariant from the web evaluation"},
      {"colored-jones", "coloured Jones polynomial"},
      {"web-eval", "evaluate a web (file or inline text, lines separated by ';')"},
      {"cross-check", "compare all pipelines on a braid or a file of braids"},
      {"moves-check", "check invariance under braid moves"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, name == "web-eval" ? "web" : "braid, e.g. \"2: 1 1\"")->required();
    sub->add_option("--k", cfg.k, "rank of the quantum group")->check(CLI::Range(1, 8));
    sub->add_option("--eta", cfg.eta, "sign convention, -1 or 1")->check(CLI::IsMember({-1, 1}));
    sub->add_option("--colors", colors, "colours per component, m1,m2,...");
    sub->add_option("--cutoff", cfg.cutoff, "highest v-degree of truncated series");
    sub->add_flag("--json", cfg.json_out, "JSON output");
    sub->final_callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::stringstream ss(colors);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        const int m = std::stoi(item, &used);
        if (used != item.size() || m < 0) throw std::invalid_argument(item);
        cfg.colors.push_back(m);
      } catch (const std::exception&) {
        throw InputError("bad colour '" + item + "'");
      }
    }
    const Outcome o = run(cfg);
    if (cfg.json_out) {
      json out = {{"command", cfg.command}, {"input", cfg.input}, {"result", o.data}};
      if (cfg.command == "kr" || cfg.command == "cross-check" || cfg.command == "moves-check") out["cutoff"] = cfg.cutoff;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << o.text << (o.text.empty() || o.text.back() != '\n' ? "\n" : "");
    }
    return o.consistent ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
