#include "freealg/cli.hpp"

#include "freealg/expr.hpp"
#include "freealg/oracle.hpp"
#include "freealg/serialize.hpp"
#include "freealg/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <optional>

namespace freealg {

namespace {

// flag inconsistencies are usage errors (exit 2), unlike domain errors (1)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string f_src;
  std::string expr_src;
  std::string word;
  int m = 0;
  int weight = 0;
  int weight_max = 0;
  int n = 1;
  int cap = kDefaultCap;
  std::uint64_t seed = 20191118;
  std::string format = "text";
};

struct Ambient {
  NCPoly f;
  std::vector<Rational> coeffs;
  int m = 0;
};

Ambient parse_f(const std::string& src, std::optional<int> m_flag) {
  NCPoly f = eval_expr(parse_expr(src), EvalContext{});
  if (!is_poly_in_x(f))
    throw std::domain_error("--f must be a polynomial in X only");
  auto coeffs = coeffs_in_x(f);
  int deg = degree_in_x(coeffs);
  if (deg < 0) throw std::domain_error("--f must be nonzero");
  coeffs.resize(static_cast<std::size_t>(deg) + 1);
  if (m_flag && *m_flag != deg)
    throw UsageError("--m " + std::to_string(*m_flag) +
                     " contradicts deg f = " + std::to_string(deg));
  return Ambient{std::move(f), std::move(coeffs), deg};
}

std::string resolve_expr_source(const std::string& src, std::istream& in) {
  if (src != "-") return src;
  std::string all, line;
  while (std::getline(in, line)) {
    all += line;
    all += '\n';
  }
  while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back())))
    all.pop_back();
  return all;
}

bool structured(const Options& opt) {
  if (opt.format == "structured") return true;
  if (opt.format == "text") return false;
  throw UsageError("--format must be 'text' or 'structured'");
}

OrderedJson poly_field(const NCPoly& p, bool structured_mode) {
  return structured_mode ? poly_to_json(p) : OrderedJson(p.str());
}

void emit(const OrderedJson& report, bool structured_mode, std::ostream& out) {
  if (structured_mode)
    out << report.dump(2) << "\n";
  else
    render_text(report, out);
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out,
             std::ostream& err, std::optional<int> m_flag) {
  bool json_mode = structured(opt);
  OrderedJson report;
  report["command"] = cmd;
  OrderedJson params = OrderedJson::object();
  OrderedJson results = OrderedJson::object();

  if (cmd == "eval") {
    std::optional<Ambient> amb;
    if (!opt.f_src.empty()) amb = parse_f(opt.f_src, m_flag);
    std::string src = resolve_expr_source(opt.expr_src, std::cin);
    params["expr"] = src;
    if (amb) params["f"] = opt.f_src;
    EvalContext ctx;
    if (amb) ctx.f = amb->f;
    results["value"] = poly_field(eval_expr(parse_expr(src), ctx), json_mode);
  } else if (cmd == "derive") {
    Ambient amb = parse_f(opt.f_src, m_flag);
    std::string src = resolve_expr_source(opt.expr_src, std::cin);
    params["f"] = opt.f_src;
    params["m"] = amb.m;
    params["expr"] = src;
    params["n"] = opt.n;
    if (opt.n < 0) throw UsageError("--n must be nonnegative");
    NCPoly p = eval_expr(parse_expr(src), EvalContext{amb.f});
    Derivation d{NCPoly(), amb.f};
    for (int k = 0; k < opt.n; ++k) p = derive(d, p);
    results["value"] = poly_field(p, json_mode);
  } else if (cmd == "expmap") {
    Ambient amb = parse_f(opt.f_src, m_flag);
    std::string src = resolve_expr_source(opt.expr_src, std::cin);
    params["f"] = opt.f_src;
    params["expr"] = src;
    params["cap"] = opt.cap;
    NCPoly p = eval_expr(parse_expr(src), EvalContext{amb.f});
    results["value"] = poly_field(exp_apply(Derivation{NCPoly(), amb.f}, p, opt.cap),
                                  json_mode);
  } else if (cmd == "tseq") {
    Ambient amb = parse_f(opt.f_src, m_flag);
    params["f"] = opt.f_src;
    params["n"] = opt.n;
    if (opt.n < 1) throw UsageError("--n must be >= 1");
    OrderedJson list = OrderedJson::array();
    NCPoly t = t1();
    for (int i = 1; i <= opt.n; ++i) {
      OrderedJson item;
      item["i"] = i;
      item["value"] = poly_field(t, json_mode);
      list.push_back(std::move(item));
      t = box(t, amb.f);
    }
    results["t_sequence"] = std::move(list);
  } else if (cmd == "gens") {
    if (opt.weight_max < 1) throw UsageError("gens requires --weight-max >= 1");
    Ambient amb = parse_f(opt.f_src, m_flag);
    params["f"] = opt.f_src;
    params["m"] = amb.m;
    params["weight_max"] = opt.weight_max;
    GeneratorTable table = enumerate_generators(amb.m, amb.coeffs, opt.weight_max);
    results["count"] = table.entries().size();
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : table.entries()) {
      OrderedJson entry;
      entry["generator"] = e.bw.str();
      entry["weight"] = e.weight;
      entry["leading_monomial"] = e.lm.str();
      entry["value"] = poly_field(e.value, json_mode);
      entries.push_back(std::move(entry));
    }
    results["generators"] = std::move(entries);
  } else if (cmd == "decode") {
    params["m"] = opt.m;
    params["word"] = opt.word;
    BracketedWord bw = decode(Word::from_letters(opt.word), opt.m);
    results["bracketed"] = bw.str();
  } else if (cmd == "kernel") {
    Ambient amb = parse_f(opt.f_src, m_flag);
    params["f"] = opt.f_src;
    params["m"] = amb.m;
    params["weight"] = opt.weight;
    KernelBasis kb = graded_kernel_basis(Derivation{NCPoly(), amb.f}, amb.m, opt.weight);
    results["dimension"] = kb.basis.size();
    results["monomials"] = kb.component.monomials.size();
    OrderedJson basis = OrderedJson::array();
    for (const auto& p : kb.basis) basis.push_back(poly_field(p, json_mode));
    results["basis"] = std::move(basis);
  } else if (cmd == "rewrite") {
    Ambient amb = parse_f(opt.f_src, m_flag);
    std::string src = resolve_expr_source(opt.expr_src, std::cin);
    params["f"] = opt.f_src;
    params["m"] = amb.m;
    params["expr"] = src;
    NCPoly p = eval_expr(parse_expr(src), EvalContext{amb.f});
    long needed = (amb.m == 0) ? p.max_length() : p.max_weight(amb.m);
    int bound = opt.weight_max > 0 ? opt.weight_max
                                   : static_cast<int>(std::max(needed, 1L));
    params["weight_max"] = bound;
    GeneratorTable table = enumerate_generators(amb.m, amb.coeffs, bound);
    FormalPoly fp = rewrite_in_generators(p, table);
    results["rewritten"] = fp.str(table);
    if (json_mode) results["terms"] = formal_to_json(fp, table);
  } else if (cmd == "ak") {
    params["m"] = opt.m;
    params["weight"] = opt.weight;
    auto basis = ak_basis(opt.m, opt.weight);
    results["dimension"] = basis.size();
    OrderedJson list = OrderedJson::array();
    for (const auto& p : basis) list.push_back(poly_field(p, json_mode));
    results["basis"] = std::move(list);
  } else if (cmd == "verify") {
    VerifyConfig cfg;
    if (opt.weight_max > 0) cfg.weight_budget = opt.weight_max;
    cfg.seed = opt.seed;
    params["weight_budget"] = cfg.weight_budget;
    params["seed"] = cfg.seed;
    auto checks = run_verification(cfg);
    bool all = true;
    OrderedJson list = OrderedJson::array();
    for (const auto& c : checks) {
      all = all && c.pass;
      OrderedJson item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      item["detail"] = c.detail;
      list.push_back(std::move(item));
      err << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.seconds
          << " s]\n";
    }
    results["checks"] = std::move(list);
    results["all_pass"] = all;
    report["params"] = std::move(params);
    report["results"] = std::move(results);
    emit(report, json_mode, out);
    return all ? 0 : 1;
  } else {
    throw UsageError("unknown subcommand '" + cmd + "'");
  }

  report["params"] = std::move(params);
  report["results"] = std::move(results);
  emit(report, json_mode, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with locally nilpotent derivations of Q<X,Y>"};
  app.require_subcommand(0, 1);

  Options opt;
  std::optional<int> m_flag;
  int m_value = 0;

  const std::vector<std::string> names = {"eval",   "derive", "expmap", "tseq",
                                          "gens",   "decode", "rewrite", "kernel",
                                          "ak",     "verify"};
  const std::vector<std::string> descriptions = {
      "evaluate an expression",
      "apply D = (0, f(X)) to an expression",
      "apply exp(D) to an expression",
      "print T_1 .. T_n for the ambient F",
      "enumerate the free generators of the constants",
      "decode a leading monomial into its bracketed word",
      "rewrite a constant in the free generators",
      "graded kernel basis by exact elimination",
      "basis of the absolute constants up to a degree",
      "run the verification suite"};

  std::map<std::string, CLI::App*> subs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descriptions[i]);
    sub->add_option("--f", opt.f_src, "ambient F = f(X), an expression in X");
    sub->add_option("--m", m_value, "m = deg f (cross-checked against --f)");
    sub->add_option("--expr", opt.expr_src, "input expression ('-' reads stdin)");
    sub->add_option("--word", opt.word, "word over the letters X and Y");
    sub->add_option("--weight", opt.weight, "weight / degree of the component");
    sub->add_option("--weight-max", opt.weight_max, "weight budget");
    sub->add_option("--n", opt.n, "count / iteration parameter");
    sub->add_option("--cap", opt.cap, "nilpotency iteration cap");
    sub->add_option("--seed", opt.seed, "seed for randomized checks");
    sub->add_option("--format", opt.format, "text|structured");
    subs[names[i]] = sub;
  }

  try {
    std::reverse(args.begin(), args.end());  // CLI11 expects a reversed vector
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string cmd;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd = name;
  if (cmd.empty()) {
    out << app.help();
    return 2;
  }
  if (subs[cmd]->count("--m") > 0) m_flag = m_value;
  if (cmd == "decode" || cmd == "ak") {
    if (!m_flag) {
      err << "usage error: " << cmd << " requires --m\n";
      return 2;
    }
    opt.m = *m_flag;
    m_flag.reset();  // consumed directly, not as a cross-check
  }

  try {
    return dispatch(cmd, opt, out, err, m_flag);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace freealg
