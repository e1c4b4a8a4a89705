#include "bfunc/driver.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "bfunc/dhat_division.hpp"
#include "bfunc/errors.hpp"
#include "bfunc/expr.hpp"
#include "bfunc/localb.hpp"

namespace bfunc {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> session_vars(const RunConfig& cfg, std::vector<std::string> sources) {
  std::vector<std::string> vars = cfg.vars.empty() ? infer_variables(sources) : cfg.vars;
  validate_variables(vars);
  return vars;
}

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

ordered_json ops_json(const std::vector<DiffOp>& v, const std::vector<std::string>& vars, TieOrder tie) {
  ordered_json a = ordered_json::array();
  for (const auto& p : v) a.push_back(format_op(p, vars, tie));
  return a;
}

double ms(double v) { return std::round(v * 1000.0) / 1000.0; }

ordered_json header(const char* command, const std::vector<std::string>& vars, const RunConfig& cfg) {
  ordered_json j;
  j["command"] = command;
  j["vars"] = vars;
  j["tie"] = std::string(tie_order_name(cfg.tie));
  return j;
}

Report guarded(const char* command, const std::function<Report()>& body) {
  Report r;
  auto fail = [&](Status s, const std::string& kind, const std::string& msg) {
    r.status = s;
    r.json = ordered_json{{"command", command}, {"error", {{"kind", kind}, {"message", msg}}}};
    r.text = "error: " + msg + "\n";
  };
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    fail(Status::ResourceLimit, "resource_limit", e.what());
    r.json["error"]["last_n"] = e.last_n();
    r.json["error"]["last_candidate"] = e.last_candidate();
    if (!e.last_candidate().empty()) {
      std::vector<Rational> c;
      for (const auto& t : e.last_candidate()) c.push_back(parse_rational(t));
      r.text += "last candidate at N = " + std::to_string(e.last_n()) + ": " + format_univariate(c) + "\n";
    }
  } catch (const InputError& e) {
    fail(Status::Input, "input", e.what());
  } catch (const UndefinedLeadingTermError& e) {
    fail(Status::Input, "input", e.what());
  } catch (const std::exception& e) {
    fail(Status::Internal, "internal", e.what());
  }
  return r;
}

std::string roots_text(const RootsResult& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    if (i) os << ", ";
    os << to_string(r.roots[i].root);
    if (r.roots[i].multiplicity > 1) os << " (x" << r.roots[i].multiplicity << ")";
  }
  if (r.roots.empty()) os << "none";
  if (r.cofactor.size() > 1) os << "; irreducible rest " << format_univariate(r.cofactor);
  return os.str();
}

}  // namespace

std::vector<std::string> split_vars(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto a = cur.find_first_not_of(" \t"), b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError("empty name in variable list '" + list + "'");
    out.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') flush();
    else cur += c;
  }
  if (!list.empty()) flush();
  validate_variables(out);
  return out;
}

Report run_localb(const std::string& src, const RunConfig& cfg) {
  return guarded("localb", [&] {
    const auto vars = session_vars(cfg, {src});
    const Layout L = Layout::weyl(static_cast<unsigned>(vars.size()));
    const SymbolPoly f = parse_poly(src, vars);
    LocalBOptions o;
    o.tie = cfg.tie;
    o.gb = cfg.gb;
    o.n0 = cfg.n0;
    o.nmax = cfg.nmax;
    const BFunctionResult res = local_b_function(f, L, o);

    Report r;
    const unsigned degree = static_cast<unsigned>(res.b.size() - 1);
    for (const auto& c : res.b) r.b_coefficients.push_back(to_string(c));
    ordered_json& j = r.json;
    j = header("localb", vars, cfg);
    j["f"] = format_poly(f, vars, cfg.tie);
    j["b"] = format_univariate(res.b);
    j["b_coefficients"] = r.b_coefficients;
    j["degree"] = degree;
    ordered_json roots = ordered_json::array();
    for (const auto& rm : res.roots.roots)
      roots.push_back({{"root", to_string(rm.root)}, {"multiplicity", rm.multiplicity}});
    j["roots"] = roots;
    j["irreducible_cofactor"] = rationals(res.roots.cofactor);
    j["N_final"] = res.n_final;
    j["gb_strategy"] = std::string(gb_strategy_name(res.gb_strategy));
    j["annihilator"] = ops_json(res.annihilator, vars, cfg.tie);
    j["standard_basis"] = ops_json(res.basis, vars, cfg.tie);
    ordered_json trace = ordered_json::array();
    for (const auto& st : res.trace)
      trace.push_back({{"N", st.n}, {"degree", st.degree}, {"candidate", rationals(st.candidate)},
                       {"accepted", st.accepted}});
    j["trace"] = trace;
    j["certified"] = res.certificate.remainder.is_zero();
    j["timings_ms"] = {{"ann", ms(res.timings.ann_ms)},
                       {"gb", ms(res.timings.gb_ms)},
                       {"nf", ms(res.timings.nf_ms)},
                       {"total", ms(res.timings.total_ms)}};

    std::ostringstream os;
    os << "f = " << j["f"].get<std::string>() << "\n"
       << "b(s) = " << j["b"].get<std::string>() << "\n"
       << "degree = " << degree << "\n"
       << "roots = " << roots_text(res.roots) << "\n"
       << "N = " << res.n_final << ", gb = " << gb_strategy_name(res.gb_strategy)
       << ", basis size " << res.basis.size() << "\n";
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "time: ann " << res.timings.ann_ms << " ms, gb " << res.timings.gb_ms << " ms, nf "
       << res.timings.nf_ms << " ms, total " << res.timings.total_ms << " ms\n";
    r.text = os.str();
    return r;
  });
}

Report run_ann(const std::string& src, const RunConfig& cfg) {
  return guarded("ann", [&] {
    const auto vars = session_vars(cfg, {src});
    const SymbolPoly f = parse_poly(src, vars);
    const auto ann = ann_fs(f, Layout::weyl(static_cast<unsigned>(vars.size())), cfg.tie);
    Report r;
    r.json = header("ann", vars, cfg);
    r.json["f"] = format_poly(f, vars, cfg.tie);
    r.json["generators"] = ops_json(ann, vars, cfg.tie);
    for (const auto& p : ann) r.text += format_op(p, vars, cfg.tie) + "\n";
    return r;
  });
}

namespace {

std::vector<DiffOp> parse_all(const std::vector<std::string>& srcs, const std::vector<std::string>& vars) {
  std::vector<DiffOp> out;
  for (const auto& s : srcs) out.push_back(parse_op(s, vars));
  return out;
}

std::vector<std::string> joined(const std::string& a, const std::vector<std::string>& rest) {
  std::vector<std::string> v{a};
  v.insert(v.end(), rest.begin(), rest.end());
  return v;
}

}  // namespace

Report run_gb(const std::vector<std::string>& srcs, const RunConfig& cfg) {
  return guarded("gb", [&] {
    if (srcs.empty()) throw InputError("gb needs at least one generator");
    const auto vars = session_vars(cfg, srcs);
    const auto gens = parse_all(srcs, vars);
    const GroebnerBasis gb = standard_basis(gens, cfg.gb, cfg.tie);
    Report r;
    r.json = header("gb", vars, cfg);
    r.json["gb_strategy"] = std::string(gb_strategy_name(cfg.gb));
    r.json["generators"] = ops_json(gens, vars, cfg.tie);
    r.json["standard_basis"] = ops_json(gb.elements, vars, cfg.tie);
    r.json["stats"] = {{"pairs_considered", gb.stats.pairs_considered},
                       {"pairs_skipped", gb.stats.pairs_skipped},
                       {"reductions_to_zero", gb.stats.reductions_to_zero}};
    for (const auto& p : gb.elements) r.text += format_op(p, vars, cfg.tie) + "\n";
    return r;
  });
}

Report run_nf(const std::string& src, const std::vector<std::string>& ideal, unsigned n,
              const RunConfig& cfg) {
  return guarded("nf", [&] {
    if (ideal.empty()) throw InputError("nf needs --ideal");
    if (n == 0) throw InputError("--n must be positive");
    const auto vars = session_vars(cfg, joined(src, ideal));
    const DiffOp p = parse_op(src, vars);
    const auto gens = parse_all(ideal, vars);
    GroebnerBasis gb{gens, MatrixOrder::weyl_local(Layout::weyl(unsigned(vars.size())), cfg.tie), {}};
    if (!cfg.as_basis) gb = standard_basis(gens, cfg.gb, cfg.tie);
    const DiffOp nf = approx_nf(p, gb, n);
    const DiffOp low(nf.layout(), nf.symbol().truncated_below(n));
    Report r;
    r.json = header("nf", vars, cfg);
    r.json["n"] = n;
    r.json["standard_basis"] = ops_json(gb.elements, vars, cfg.tie);
    r.json["normal_form_below_n"] = format_op(low, vars, cfg.tie);
    r.json["remainder"] = format_op(nf, vars, cfg.tie);
    r.text = format_op(low, vars, cfg.tie) + "\n";
    return r;
  });
}

Report run_divide(const std::string& src, const std::vector<std::string>& by, unsigned n,
                  const RunConfig& cfg) {
  return guarded("divide", [&] {
    if (by.empty()) throw InputError("divide needs --by");
    const auto vars = session_vars(cfg, joined(src, by));
    const DiffOp p = parse_op(src, vars);
    const auto divisors = parse_all(by, vars);
    const DhatDivisionResult res = dhat_approx_div(p, divisors, n, cfg.tie);
    Report r;
    r.json = header("divide", vars, cfg);
    r.json["n"] = n;
    r.json["quotients"] = ops_json(res.quotients, vars, cfg.tie);
    r.json["remainder"] = format_op(res.remainder, vars, cfg.tie);
    r.json["bound"] = res.initial_bound;
    ordered_json sched = ordered_json::array();
    for (const auto& st : res.bound_schedule)
      sched.push_back({{"k", st.k}, {"M_k", st.m_k}, {"bound", st.bound_before}});
    r.json["schedule"] = sched;

    std::ostringstream os;
    for (std::size_t i = 0; i < res.quotients.size(); ++i)
      os << "Q" << i + 1 << " = " << format_op(res.quotients[i], vars, cfg.tie) << "\n";
    os << "R = " << format_op(res.remainder, vars, cfg.tie) << "\n"
       << "bound = " << res.initial_bound << "\n";
    for (const auto& st : res.bound_schedule)
      os << "  k = " << st.k << ": M_k = " << st.m_k << ", bound " << st.bound_before << "\n";
    r.text = os.str();
    return r;
  });
}

}  // namespace bfunc
