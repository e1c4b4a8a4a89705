// bfunc command line: thin wrapper over the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfunc/bfunc.h"

namespace {

struct Options {
  std::string vars, tie = "grevlex", gb = "mora", format = "text", file;
  unsigned n0 = 0, nmax = 64, n = 0;
  bool as_basis = false;
  std::vector<std::string> exprs, ideal, by;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  if (s.size() >= 3 && s.compare(0, 3, "\xEF\xBB\xBF") == 0) s.erase(0, 3);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

using Session = std::unique_ptr<bfunc_session, decltype(&bfunc_session_free)>;
using ReportPtr = std::unique_ptr<bfunc_report, decltype(&bfunc_report_free)>;

int configure(bfunc_session* s, const Options& o) {
  int rc = BFUNC_OK;
  if (rc == BFUNC_OK && !o.vars.empty()) rc = bfunc_session_set_vars(s, o.vars.c_str());
  if (rc == BFUNC_OK) rc = bfunc_session_set_tie(s, o.tie.c_str());
  if (rc == BFUNC_OK) rc = bfunc_session_set_gb(s, o.gb.c_str());
  if (rc == BFUNC_OK) rc = bfunc_session_set_n0(s, o.n0);
  if (rc == BFUNC_OK) rc = bfunc_session_set_nmax(s, o.nmax);
  if (rc == BFUNC_OK) rc = bfunc_session_set_as_basis(s, o.as_basis ? 1 : 0);
  if (rc == BFUNC_OK && o.n0 && o.nmax < o.n0) {
    std::cerr << "error: --nmax must be >= --n0\n";
    return BFUNC_ERR_INPUT;
  }
  if (rc != BFUNC_OK) std::cerr << "error: " << bfunc_session_last_error(s) << "\n";
  return rc;
}

int emit(bfunc_report* r, int rc, const Options& o) {
  if (o.format == "json") {
    std::cout << bfunc_report_json(r, 1) << "\n";
  } else if (rc == BFUNC_OK) {
    std::cout << bfunc_report_text(r);
  } else {
    std::cerr << bfunc_report_text(r);
  }
  return rc;
}

// "-dy + x" would look like a short option to the parser; a leading blank
// keeps it an expression (the grammar ignores whitespace).
std::vector<std::string> protect_expressions(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
    args.push_back(std::move(a));
  }
  return args;  // reversed, as CLI::App::parse(std::vector) expects
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local b-functions at the origin, exact arithmetic", "bfunc"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--vars", o.vars, "comma separated variable names (default: inferred)");
  app.add_option("--tie", o.tie, "tie-break term order")->check(CLI::IsMember({"grevlex", "deglex", "lex"}));
  app.add_option("--gb", o.gb, "standard basis strategy")->check(CLI::IsMember({"mora", "lazard"}));
  app.add_option("--n0", o.n0, "initial N for the generator search (default 2(2n+1))");
  app.add_option("--nmax", o.nmax, "largest N tried")->envname("BFUNC_NMAX");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--file", o.file, "read the (first) expression from a file");

  auto* localb = app.add_subcommand("localb", "local b-function of a polynomial");
  localb->add_option("poly", o.exprs, "polynomial f");
  auto* ann = app.add_subcommand("ann", "generators of Ann f^s");
  ann->add_option("poly", o.exprs, "polynomial f");
  auto* gb = app.add_subcommand("gb", "standard basis of the left ideal generated by the operators");
  gb->add_option("ops", o.exprs, "generators");
  auto* nf = app.add_subcommand("nf", "approximate normal form below total degree N");
  nf->add_option("op", o.exprs, "operator");
  nf->add_option("--ideal", o.ideal, "ideal generators")->required();
  nf->add_option("--n", o.n, "truncation degree N")->required();
  nf->add_flag("--basis", o.as_basis, "the ideal list already is a standard basis");
  auto* divide = app.add_subcommand("divide", "approximate division in the completed Weyl algebra");
  divide->add_option("op", o.exprs, "dividend");
  divide->add_option("--by", o.by, "divisors")->required();
  divide->add_option("--n", o.n, "accuracy N")->required();

  for (auto* sub : {localb, ann, gb, nf, divide}) sub->fallthrough();

  try {
    app.parse(protect_expressions(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BFUNC_ERR_INPUT;
  }

  try {
    if (!o.file.empty()) o.exprs.insert(o.exprs.begin(), read_file(o.file));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BFUNC_ERR_INPUT;
  }
  const bool single = !gb->parsed();
  if (o.exprs.empty() || (single && o.exprs.size() != 1)) {
    std::cerr << "error: expected " << (single ? "exactly one expression" : "at least one expression")
              << " (argument or --file)\n";
    return BFUNC_ERR_INPUT;
  }

  bfunc_session* raw = nullptr;
  if (bfunc_session_new(&raw) != BFUNC_OK) return BFUNC_ERR_INTERNAL;
  Session s(raw, bfunc_session_free);
  if (int rc = configure(s.get(), o); rc != BFUNC_OK) return rc;

  bfunc_report* rep = nullptr;
  int rc = BFUNC_ERR_INTERNAL;
  const char* first = o.exprs.front().c_str();
  if (localb->parsed()) {
    rc = bfunc_localb(s.get(), first, &rep);
  } else if (ann->parsed()) {
    rc = bfunc_ann(s.get(), first, &rep);
  } else if (gb->parsed()) {
    const auto v = c_strs(o.exprs);
    rc = bfunc_gb(s.get(), v.data(), v.size(), &rep);
  } else if (nf->parsed()) {
    const auto v = c_strs(o.ideal);
    rc = bfunc_nf(s.get(), first, v.data(), v.size(), o.n, &rep);
  } else {
    const auto v = c_strs(o.by);
    rc = bfunc_divide(s.get(), first, v.data(), v.size(), o.n, &rep);
  }
  if (!rep) {
    std::cerr << "error: " << bfunc_session_last_error(s.get()) << "\n";
    return rc;
  }
  ReportPtr guard(rep, bfunc_report_free);
  return emit(rep, rc, o);
}
