// qjones: command-line front end for the colored Jones, Alexander and
// Kashaev pipelines.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/error.hpp"
#include "qjones/format.hpp"
#include "qjones/foxburau.hpp"
#include "qjones/kashaev.hpp"
#include "qjones/mcmahon.hpp"
#include "qjones/verma_oracle.hpp"

namespace {

using qjones::BraidWord;
using json = nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kVerify = 3 };

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct WordArgs {
  std::string word;
  std::optional<int> strands;

  BraidWord braid() const { return qjones::parse_braid(word, strands); }
  json to_json() const {
    json j{{"word", word}};
    if (strands) j["strands"] = *strands;
    return j;
  }
};

void add_word(CLI::App* cmd, WordArgs& w) {
  cmd->add_option("--word,-w", w.word, "braid word, e.g. \"1 -2 1 -2\"")->required();
  cmd->add_option("--strands,-m", w.strands, "strand count (default max|i| + 1)");
}

void emit(bool as_json, const json& doc, const std::string& text) {
  if (as_json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::string complex_text(std::complex<double> c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "*i";
  return os.str();
}

int parse_order(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) throw CLI::ValidationError("--N", "not an integer: '" + tok + "'");
  return v;
}

// "a:b:s", "a:b" or a comma list.
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    std::vector<int> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(parse_order(tok));
    if (parts.size() < 2 || parts.size() > 3) throw CLI::ValidationError("--N", "expected a:b or a:b:s");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw CLI::ValidationError("--N", "step must be positive");
    for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
  } else {
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(parse_order(tok));
  }
  if (out.empty()) throw CLI::ValidationError("--N", "empty range");
  return out;
}

// ---------------------------------------------------------------------------

struct JonesArgs {
  WordArgs w;
  int n = 2;
  std::string engine = "mcmahon";
  std::string mode = "fermionic";
  std::optional<int> adaptive;
};

int run_jones(const JonesArgs& a, bool as_json) {
  const BraidWord b = a.w.braid();
  qjones::InverseSeriesConfig cfg;
  cfg.mode = a.mode == "bosonic" ? qjones::SeriesMode::bosonic : qjones::SeriesMode::fermionic;
  if (a.adaptive) cfg.termination = qjones::Adaptive{*a.adaptive};

  json timings = json::object();
  std::optional<qjones::LaurentPoly> mc, oracle;
  if (a.engine != "oracle") {
    Stopwatch t;
    mc = qjones::colored_jones(b, a.n, cfg);
    timings["mcmahon_ms"] = t.ms();
  }
  if (a.engine != "mcmahon") {
    Stopwatch t;
    oracle = qjones::state_sum_jones(b, a.n);
    timings["oracle_ms"] = t.ms();
  }
  json input = a.w.to_json();
  input["N"] = a.n;
  json doc{{"input", input}, {"engine", a.engine}, {"timings", timings}};
  std::string text;
  int code = kOk;
  if (mc && oracle) {
    const bool equal = *mc == *oracle;
    doc["result"] = {{"mcmahon", qjones::to_string(*mc)}, {"oracle", qjones::to_string(*oracle)}, {"equal", equal}};
    text = "mcmahon: " + qjones::to_string(*mc) + "\noracle:  " + qjones::to_string(*oracle) + "\n" +
           (equal ? "EQUAL" : "MISMATCH") + "\n";
    if (!equal) code = kVerify;
  } else {
    const std::string s = qjones::to_string(mc ? *mc : *oracle);
    doc["result"] = s;
    text = s + "\n";
  }
  emit(as_json, doc, text);
  return code;
}

struct AlexanderArgs {
  WordArgs w;
  std::string engine = "mcmahon";
};

int run_alexander(const AlexanderArgs& a, bool as_json) {
  const BraidWord b = a.w.braid();
  json timings = json::object();
  std::optional<qjones::LaurentPoly> mc, fox;
  if (a.engine != "fox") {
    Stopwatch t;
    mc = qjones::alexander(b);
    timings["mcmahon_ms"] = t.ms();
  }
  if (a.engine != "mcmahon") {
    Stopwatch t;
    fox = qjones::abelianize_check(b).alexander;
    timings["fox_ms"] = t.ms();
  }
  const auto fmt = [](const qjones::LaurentPoly& p) { return qjones::to_string(p, qjones::TermOrder::center_out); };
  json doc{{"input", a.w.to_json()}, {"engine", a.engine}, {"timings", timings}};
  std::string text;
  int code = kOk;
  if (mc && fox) {
    const bool equal = *mc == *fox;
    doc["result"] = {{"mcmahon", fmt(*mc)}, {"fox", fmt(*fox)}, {"equal", equal}};
    text = "mcmahon: " + fmt(*mc) + "\nfox:     " + fmt(*fox) + "\n" + (equal ? "EQUAL" : "MISMATCH") + "\n";
    if (!equal) code = kVerify;
  } else {
    const std::string s = fmt(mc ? *mc : *fox);
    doc["result"] = s;
    text = s + "\n";
  }
  emit(as_json, doc, text);
  return code;
}

struct KashaevArgs {
  WordArgs w;
  int n = 2;
  bool exact = false;
  bool floating = false;
};

int run_kashaev(const KashaevArgs& a, bool as_json) {
  const BraidWord b = a.w.braid();
  const bool exact = !a.floating;
  Stopwatch t;
  const auto v = qjones::kashaev_value(b, a.n, exact ? qjones::KashaevMode::exact : qjones::KashaevMode::floating);
  json input = a.w.to_json();
  input["N"] = a.n;
  json result{{"re", v.approx.real()}, {"im", v.approx.imag()}, {"abs", std::abs(v.approx)}};
  std::string text;
  if (v.exact) {
    result["exact"] = qjones::to_string(*v.exact);
    text = qjones::to_string(*v.exact) + "\n";
  } else {
    text = complex_text(v.approx) + "\n";
  }
  json doc{{"input", input},
           {"engine", exact ? "cyclotomic" : "state_sum"},
           {"result", result},
           {"timings", {{"total_ms", t.ms()}}}};
  emit(as_json, doc, text);
  return kOk;
}

struct VolumeArgs {
  WordArgs w;
  std::string range = "10:100:10";
  unsigned threads = 0;
};

int run_volume(const VolumeArgs& a, bool as_json) {
  const BraidWord b = a.w.braid();
  const auto orders = parse_range(a.range);
  Stopwatch t;
  const auto rates = qjones::volume_rate(b, orders, a.threads);
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "N,abs_value,rate\n";
  for (const auto& r : rates) {
    csv << r.order << ',' << r.abs_value << ',';
    if (r.rate) csv << *r.rate;
    csv << '\n';
    rows.push_back({{"N", r.order}, {"abs_value", r.abs_value}, {"rate", r.rate ? json(*r.rate) : json(nullptr)}});
  }
  json input = a.w.to_json();
  input["N"] = orders;
  emit(as_json, {{"input", input}, {"engine", "state_sum"}, {"result", rows}, {"timings", {{"total_ms", t.ms()}}}},
       csv.str());
  return kOk;
}

struct SeriesArgs {
  WordArgs w;
  int depth = 3;
};

int run_series(const SeriesArgs& a, bool as_json) {
  Stopwatch t;
  const auto s = qjones::kashaev_series(a.w.braid(), a.depth);
  json terms = json::array();
  std::string text = "prefactor: q^" + std::to_string(s.prefactor_exponent) + "\n";
  for (std::size_t n = 0; n < s.terms.size(); ++n) {
    terms.push_back(qjones::to_string(s.terms[n]));
    text += "t_" + std::to_string(n) + " = " + qjones::to_string(s.terms[n]) + "\n";
  }
  json input = a.w.to_json();
  input["depth"] = a.depth;
  emit(as_json,
       {{"input", input},
        {"engine", "generic"},
        {"result", {{"prefactor_exponent", s.prefactor_exponent}, {"terms", terms}}},
        {"timings", {{"total_ms", t.ms()}}}},
       text);
  return kOk;
}

int run_mahler(const std::string& poly, bool as_json) {
  Stopwatch t;
  const double m = qjones::mahler_measure(qjones::parse_laurent(poly));
  std::ostringstream os;
  os.precision(17);
  os << m << "\n";
  emit(as_json, {{"input", {{"poly", poly}}}, {"engine", "companion"}, {"result", m}, {"timings", {{"total_ms", t.ms()}}}},
       os.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string knot;
  std::string name;
  bool pass;
};

std::vector<Check> verify_entry(const qjones::CorpusEntry& e) {
  std::vector<Check> out;
  const BraidWord b = e.braid();
  auto record = [&](const std::string& name, auto&& fn) {
    bool pass = false;
    try {
      pass = fn();
    } catch (const qjones::Error&) {
      pass = false;
    }
    out.push_back({e.name, name, pass});
  };
  record("alexander mcmahon = fox", [&] { return qjones::alexander(b) == qjones::abelianize_check(b).alexander; });
  if (e.alexander) {
    record("alexander = stored", [&] { return qjones::alexander(b) == qjones::parse_laurent(*e.alexander); });
  }
  record("jones mcmahon = oracle (N <= 3)", [&] {
    for (int n = 1; n <= 3; ++n)
      if (!(qjones::colored_jones(b, n) == qjones::state_sum_jones(b, n))) return false;
    return true;
  });
  record("jones fermionic = bosonic (N <= 3)", [&] {
    qjones::InverseSeriesConfig bos;
    bos.mode = qjones::SeriesMode::bosonic;
    for (int n = 1; n <= 3; ++n)
      if (!(qjones::colored_jones(b, n) == qjones::colored_jones(b, n, bos))) return false;
    return true;
  });
  record("kashaev exact = jones at zeta (N <= 5)", [&] {
    for (int n = 1; n <= 5; ++n)
      if (!(*qjones::kashaev_value(b, n).exact == qjones::cyclotomic_reduce(qjones::colored_jones(b, n), n)))
        return false;
    return true;
  });
  record("kashaev exact ~ float (N <= 5)", [&] {
    for (int n = 1; n <= 5; ++n) {
      const auto x = qjones::kashaev_value(b, n).approx;
      const auto y = qjones::kashaev_value(b, n, qjones::KashaevMode::floating).approx;
      if (std::abs(x - y) > 1e-9 * std::max(1.0, std::abs(x))) return false;
    }
    return true;
  });
  return out;
}

int run_verify(const std::optional<std::string>& corpus_path, bool as_json) {
  Stopwatch t;
  const auto corpus = corpus_path ? qjones::load_corpus(*corpus_path) : qjones::bundled_corpus();
  std::vector<Check> checks;
  for (const auto& e : corpus) {
    auto c = verify_entry(e);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  bool all = true;
  json rows = json::array();
  std::ostringstream os;
  for (const auto& c : checks) {
    all = all && c.pass;
    rows.push_back({{"knot", c.knot}, {"check", c.name}, {"pass", c.pass}});
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %-40s %s\n", c.knot.c_str(), c.name.c_str(), c.pass ? "PASS" : "FAIL");
    os << line;
  }
  os << (all ? "all checks passed\n" : "verification FAILED\n");
  json input = corpus_path ? json{{"corpus", *corpus_path}} : json{{"corpus", "bundled"}};
  emit(as_json, {{"input", input}, {"engine", "all"}, {"result", rows}, {"timings", {{"total_ms", t.ms()}}}}, os.str());
  return all ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones, Alexander and Kashaev invariants of braid closures"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON object");

  JonesArgs jones;
  auto* jc = app.add_subcommand("jones", "normalized colored Jones polynomial J'_K(N)");
  add_word(jc, jones.w);
  jc->add_option("-N", jones.n, "color (dimension of the module)")->required()->check(CLI::PositiveNumber);
  jc->add_option("--engine", jones.engine)->check(CLI::IsMember({"mcmahon", "oracle", "both"}));
  jc->add_option("--mode", jones.mode, "inverse-series expansion")->check(CLI::IsMember({"fermionic", "bosonic"}));
  jc->add_option("--adaptive", jones.adaptive, "stop after this many zero terms instead of the graded cutoff");

  AlexanderArgs alex;
  auto* ac = app.add_subcommand("alexander", "normalized Alexander polynomial");
  add_word(ac, alex.w);
  ac->add_option("--engine", alex.engine)->check(CLI::IsMember({"mcmahon", "fox", "both"}));

  KashaevArgs kash;
  auto* kc = app.add_subcommand("kashaev", "Kashaev invariant <K>_N");
  add_word(kc, kash.w);
  kc->add_option("-N", kash.n)->required()->check(CLI::PositiveNumber);
  auto* exact_flag = kc->add_flag("--exact", kash.exact, "exact value in Z[zeta_N] (default)");
  kc->add_flag("--float", kash.floating, "complex state sum")->excludes(exact_flag);

  VolumeArgs vol;
  auto* vc = app.add_subcommand("volume", "growth rates 2 pi ln|<K>_N| / N as CSV");
  add_word(vc, vol.w);
  vc->add_option("--N,-N", vol.range, "a:b:s range or comma list");
  vc->add_option("--threads", vol.threads, "worker threads (default QJONES_THREADS or all cores)");

  SeriesArgs ser;
  auto* sc = app.add_subcommand("series", "terms E_0(C^n) of the Habiro-ring series");
  add_word(sc, ser.w);
  sc->add_option("--depth", ser.depth)->check(CLI::NonNegativeNumber);

  std::string poly;
  auto* mc = app.add_subcommand("mahler", "Mahler measure of a polynomial in z");
  mc->add_option("--poly", poly)->required();

  std::optional<std::string> corpus;
  auto* verc = app.add_subcommand("verify", "cross-engine checks over a corpus");
  verc->add_option("--corpus", corpus, "corpus JSON (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*jc) return run_jones(jones, as_json);
    if (*ac) return run_alexander(alex, as_json);
    if (*kc) return run_kashaev(kash, as_json);
    if (*vc) return run_volume(vol, as_json);
    if (*sc) return run_series(ser, as_json);
    if (*mc) return run_mahler(poly, as_json);
    if (*verc) return run_verify(corpus, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qjones::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qjones::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const qjones::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
