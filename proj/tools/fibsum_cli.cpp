// fibsum: closed forms, evaluation, verification and benchmarks for
// weighted power sums of generalized Fibonacci numbers.

#include <fibsum/golden.hpp>
#include <fibsum/render.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fibsum;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  int r = 0;
  std::string w = "1";
  long k = -1;
  std::string k_list;
  std::string seeds = "0,1";
  std::string basis;
  std::string format = "text";
  std::string out;
  std::string only;
  std::string corpus = FIBSUM_GOLDEN_PATH;
  int max_n = 4;
  int max_r = 4;
  long max_k = 25;
  int trials = 2;
  std::uint64_t rng_seed = 20240601;
  std::string w_grid;
  bool analytic = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

GaussianRational numeric_weight(const std::string& w) {
  if (w == "symbolic") throw UsageError("this command needs a numeric --w");
  return GaussianRational::parse(w);
}

std::vector<long> k_values(const Options& o) {
  std::vector<long> ks;
  if (!o.k_list.empty()) {
    for (const auto& s : split_list(o.k_list)) {
      std::size_t pos = 0;
      long k = 0;
      try {
        k = std::stol(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != s.size() || k < 0) throw UsageError("bad k value '" + s + "'");
      ks.push_back(k);
    }
  }
  if (o.k >= 0) ks.insert(ks.begin(), o.k);
  if (ks.empty()) throw UsageError("--k or --k-list is required");
  return ks;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  throw UsageError("--format " + o.format + " is not supported by this command");
}

template <typename Form>
Form apply_basis(const Form& cf, const std::string& basis) {
  if (basis.empty()) return cf.n == 1 ? rebase_tail(cf) : cf;
  if (basis == "gk1") return cf.n == 1 ? to_shifted(cf) : cf;
  if (cf.n != 1) throw UsageError("--basis gk needs --n 1");
  return rebase_tail(cf);
}

Style style_of(const Options& o) { return o.format == "latex" ? Style::latex : Style::text; }

int cmd_closed_form(const Options& o) {
  require_format(o, {"text", "latex", "json"});
  if (o.w == "symbolic") {
    const auto cf = apply_basis(closed_form(o.n, o.r, Symbolic{}), o.basis);
    emit(o, o.format == "json" ? to_json(cf).dump(2) : render(cf, style_of(o)));
  } else {
    const auto cf = apply_basis(closed_form(o.n, o.r, numeric_weight(o.w)), o.basis);
    emit(o, o.format == "json" ? to_json(cf).dump(2) : render(cf, style_of(o)));
  }
  return kOk;
}

int cmd_eval(const Options& o) {
  require_format(o, {"text", "json", "csv"});
  const auto w = numeric_weight(o.w);
  const auto seeds = Seeds::parse(o.seeds);
  const auto ks = k_values(o);
  const auto cf = closed_form(o.n, o.r, w);
  std::string text;
  Json values = Json::array();
  for (long k : ks) {
    const std::string v = evaluate_closed(cf, k, seeds).str();
    if (o.format == "json") {
      values.push_back({{"k", k}, {"value", v}});
    } else if (o.format == "csv") {
      text += std::to_string(k) + "," + v + "\n";
    } else {
      text += "S(k=" + std::to_string(k) + ") = " + v + "\n";
    }
  }
  if (o.format == "json") {
    text = Json{{"n", o.n}, {"r", o.r}, {"w", w.str()}, {"seeds", seeds.str()}, {"values", values}}.dump(2);
  } else if (o.format == "csv") {
    text = "k,value\n" + text;
  }
  emit(o, text);
  return kOk;
}

int cmd_genfunc(const Options& o) {
  require_format(o, {"text", "latex", "json"});
  if (o.w == "symbolic") {
    const auto cf = generating_function(o.n, o.r, Symbolic{});
    emit(o, o.format == "json" ? to_json(cf).dump(2) : render(cf, style_of(o)));
    return kOk;
  }
  const auto w = numeric_weight(o.w);
  const bool divergent = !converges(w, o.n);
  const auto cf = generating_function(o.n, o.r, w, o.analytic);
  if (o.format == "json") {
    Json j = to_json(cf);
    if (divergent) j["analytic_override"] = true;
    emit(o, j.dump(2));
  } else {
    std::string text = render(cf, style_of(o));
    if (divergent) text += "\n(analytic value only: the series diverges at this weight)";
    emit(o, text);
  }
  return kOk;
}

int cmd_split(const Options& o) {
  require_format(o, {"text", "latex", "json"});
  const auto s = split_alternating(o.n, o.r);
  if (o.format == "json") {
    emit(o, to_json(s).dump(2));
  } else {
    emit(o, "even: " + render(s.even, style_of(o)) + "\nodd:  " + render(s.odd, style_of(o)) + "\n");
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  require_format(o, {"text", "json"});
  SweepConfig config = SweepConfig::defaults();
  config.n_max = o.max_n;
  config.r_max = o.max_r;
  config.k_max = o.max_k;
  config.trials = o.trials;
  config.rng_seed = o.rng_seed;
  if (!o.w_grid.empty()) {
    config.w_grid.clear();
    for (const auto& w : split_list(o.w_grid)) config.w_grid.push_back(GaussianRational::parse(w));
  }
  const auto report = run_sweep(config);
  std::ostringstream summary;
  summary << report.passed() << " pass, " << report.failed() << " fail, " << report.skipped() << " skipped\n";
  if (o.format == "json") {
    emit(o, to_json(report).dump(2));
    std::cerr << "verify: " << summary.str();
  } else {
    std::string text = summary.str();
    for (const auto& c : report.cases) {
      if (c.status != CaseStatus::fail) continue;
      text += "FAIL n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) + " w=" + c.w.str() + " k=" + std::to_string(c.k);
      if (c.counterexample) {
        text += " seeds=" + c.counterexample->seeds.str() + " closed=" + c.counterexample->closed.str() +
                " brute=" + c.counterexample->brute.str();
      }
      text += "\n";
    }
    emit(o, text);
  }
  return report.failed() == 0 ? kOk : kFailed;
}

int cmd_paper_table(const Options& o) {
  require_format(o, {"text", "json"});
  const auto corpus = load_corpus_file(o.corpus);
  const auto results = paper_table(corpus, o.only.empty() ? std::nullopt : std::optional<std::string>(o.only));
  if (results.empty()) throw UsageError("no identity with id '" + o.only + "'");
  std::size_t passed = 0;
  std::string text;
  Json rows = Json::array();
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    rows.push_back({{"id", r.id}, {"pass", r.pass}, {"diffs", r.diffs}});
    text += std::string(r.pass ? "PASS " : "FAIL ") + r.id + "\n";
    for (const auto& d : r.diffs) text += "    " + d + "\n";
  }
  text += std::to_string(passed) + "/" + std::to_string(results.size()) + " identities reproduced\n";
  if (o.format == "json") {
    text = Json{{"summary", {{"pass", passed}, {"fail", results.size() - passed}}}, {"identities", rows}}.dump(2);
  }
  emit(o, text);
  return passed == results.size() ? kOk : kFailed;
}

int cmd_bench(const Options& o) {
  require_format(o, {"text", "csv", "json"});
  const auto w = numeric_weight(o.w);
  const auto seeds = Seeds::parse(o.seeds);
  const auto ks = k_values(o);
  const auto cf = closed_form(o.n, o.r, w);
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

  bool all_equal = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "k,equal,timing_brute_ms,timing_closed_ms,timing_speedup\n";
  for (long k : ks) {
    const auto t0 = Clock::now();
    const auto brute = brute_sum(o.n, o.r, w, k, seeds);
    const auto t1 = Clock::now();
    const auto closed = evaluate_closed(cf, k, seeds);
    const auto t2 = Clock::now();
    const bool equal = brute == closed;
    all_equal = all_equal && equal;
    const double b = ms(t1 - t0), c = ms(t2 - t1);
    const double speedup = c > 0 ? b / c : 0.0;
    rows.push_back({{"k", k}, {"equal", equal}, {"timing", {{"brute_ms", b}, {"closed_ms", c}, {"speedup", speedup}}}});
    csv << k << "," << (equal ? "true" : "false") << "," << b << "," << c << "," << speedup << "\n";
  }
  if (o.format == "json") {
    emit(o, Json{{"n", o.n}, {"r", o.r}, {"w", w.str()}, {"seeds", seeds.str()}, {"all_equal", all_equal}, {"rows", rows}}.dump(2));
  } else {
    emit(o, csv.str());
  }
  return all_equal ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closed forms for sums of w^j j^r G_j^n"};
  app.require_subcommand(1);
  Options o;

  auto add_nrw = [&](CLI::App* sub, bool symbolic_ok) {
    sub->add_option("--n", o.n, "power of G_j")->check(CLI::Range(1, 64));
    sub->add_option("--r", o.r, "power of j")->check(CLI::Range(0, 64));
    sub->add_option("--w", o.w, symbolic_ok ? "weight, or 'symbolic'" : "weight (rational or Gaussian)");
  };
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json", "csv"}))
        ->default_str(def);
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write output to PATH"); };

  auto* closed = app.add_subcommand("closed-form", "print the closed form");
  add_nrw(closed, true);
  closed->add_option("--basis", o.basis, "tail basis for n = 1: gk or gk1")->check(CLI::IsMember({"gk", "gk1"}));
  add_format(closed, "text");
  add_out(closed);

  auto* eval = app.add_subcommand("eval", "evaluate the sum through its closed form");
  add_nrw(eval, false);
  eval->add_option("--k", o.k, "upper limit")->check(CLI::NonNegativeNumber);
  eval->add_option("--k-list", o.k_list, "comma-separated upper limits");
  eval->add_option("--seeds", o.seeds, "G0,G1");
  add_format(eval, "text");
  add_out(eval);

  auto* genfunc = app.add_subcommand("genfunc", "infinite sum");
  add_nrw(genfunc, true);
  genfunc->add_flag("--analytic", o.analytic, "print the analytic value even when the series diverges");
  add_format(genfunc, "text");
  add_out(genfunc);

  auto* split = app.add_subcommand("split", "even and odd alternating sums from w = i");
  split->add_option("--n", o.n, "power of G_j")->check(CLI::Range(1, 64));
  split->add_option("--r", o.r, "power of j")->check(CLI::Range(0, 64));
  add_format(split, "text");
  add_out(split);

  auto* verify = app.add_subcommand("verify", "closed forms against brute-force sums");
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(1, 12));
  verify->add_option("--max-r", o.max_r)->check(CLI::Range(0, 12));
  verify->add_option("--max-k", o.max_k)->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", o.trials, "random rational seed pairs")->check(CLI::NonNegativeNumber);
  verify->add_option("--rng-seed", o.rng_seed);
  verify->add_option("--w-grid", o.w_grid, "comma-separated weights");
  add_format(verify, "json");
  add_out(verify);

  auto* table = app.add_subcommand("paper-table", "regenerate the golden identity corpus");
  table->add_option("--only", o.only, "check a single identity id");
  table->add_option("--corpus", o.corpus, "corpus file")->default_str(FIBSUM_GOLDEN_PATH);
  add_format(table, "text");
  add_out(table);

  auto* bench = app.add_subcommand("bench", "closed form vs direct summation timings");
  add_nrw(bench, false);
  bench->add_option("--k-list", o.k_list, "comma-separated upper limits")->default_str("1000,10000,100000");
  bench->add_option("--seeds", o.seeds, "G0,G1");
  add_format(bench, "csv");
  add_out(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  // Defaults that differ per subcommand.
  auto* chosen = app.get_subcommands().front();
  if (chosen->count("--format") == 0) o.format = chosen == verify ? "json" : chosen == bench ? "csv" : "text";
  if (chosen == bench && o.k_list.empty()) o.k_list = "1000,10000,100000";

  try {
    if (chosen == closed) return cmd_closed_form(o);
    if (chosen == eval) return cmd_eval(o);
    if (chosen == genfunc) return cmd_genfunc(o);
    if (chosen == split) return cmd_split(o);
    if (chosen == verify) return cmd_verify(o);
    if (chosen == table) return cmd_paper_table(o);
    if (chosen == bench) return cmd_bench(o);
  } catch (const SingularWeight& e) {
    std::cerr << "fibsum: " << e.what() << "\n";
    return kDomain;
  } catch (const Divergent& e) {
    std::cerr << "fibsum: " << e.what() << "\n";
    return kDomain;
  } catch (const UsageError& e) {
    std::cerr << "fibsum: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "fibsum: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedBasis& e) {
    std::cerr << "fibsum: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fibsum: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
