#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfunc/groebner.hpp"

namespace bfunc {

struct RunConfig {
  // Empty means: infer from the inputs (sorted identifiers).
  std::vector<std::string> vars;
  TieOrder tie = TieOrder::Grevlex;
  GbStrategy gb = GbStrategy::Mora;
  std::optional<unsigned> n0;
  unsigned nmax = 64;
  // nf only: take the ideal list as a standard basis instead of computing one.
  bool as_basis = false;
};

// Exit-code compatible status.
enum class Status { Ok = 0, Internal = 1, Input = 2, ResourceLimit = 3 };

struct Report {
  Status status = Status::Ok;
  std::string text;
  nlohmann::ordered_json json;
  // localb only: ascending coefficients of b as text.
  std::vector<std::string> b_coefficients;
};

// Each entry point catches library errors and encodes them in the report.
Report run_localb(const std::string& f, const RunConfig& cfg);
Report run_ann(const std::string& f, const RunConfig& cfg);
Report run_gb(const std::vector<std::string>& ops, const RunConfig& cfg);
Report run_nf(const std::string& p, const std::vector<std::string>& ideal, unsigned n,
              const RunConfig& cfg);
Report run_divide(const std::string& p, const std::vector<std::string>& by, unsigned n,
                  const RunConfig& cfg);

// Parses "x,y,z" (spaces allowed around names) and validates it.
std::vector<std::string> split_vars(const std::string& list);

}  // namespace bfunc
