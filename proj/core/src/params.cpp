#include "cascade/params.hpp"

#include <cmath>
#include <string>

#include "cascade/error.hpp"

namespace cascade {
namespace {

void require(bool ok, const char* field, const char* rule) {
  if (!ok) throw InvalidParameter(std::string(field) + " must be " + rule);
}

void probability(double v, const char* field) {
  require(v >= 0.0 && v <= 1.0, field, "in [0, 1]");
}

}  // namespace

void validate(const ModelParams& p) {
  probability(p.p_r, "p_r");
  require(p.s >= 0.0 && !std::isnan(p.s), "s", ">= 0");
  probability(p.p_e, "p_e");
  require(std::isfinite(p.mu), "mu", "finite");
  require(p.sigma_e >= 0.0 && std::isfinite(p.sigma_e), "sigma_e", ">= 0");
  require(p.n >= 1, "n", ">= 1");
  probability(p.p_c, "p_c");
  require(p.f_m >= 0.0 && p.f_m < 1.0, "f_m", "in [0, 1)");
  probability(p.p_n, "p_n");
  probability(p.p_l, "p_l");
  probability(p.pp_max, "pp_max");
  require(p.cp_half >= 0.0 && std::isfinite(p.cp_half), "cp_half", ">= 0");
  probability(p.rec1, "rec1");
  require(p.failtime >= 1, "failtime", ">= 1");
  require(p.realizations >= 1, "realizations", ">= 1");
  require(std::isfinite(p.init_fp0), "init_fp0", "finite");
  require(std::isfinite(p.init_fp1), "init_fp1", "finite");
  require(p.init_sd >= 0.0 && std::isfinite(p.init_sd), "init_sd", ">= 0");
}

}  // namespace cascade
