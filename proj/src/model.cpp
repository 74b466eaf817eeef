#include "persuasion/model.hpp"

#include <cmath>
#include <sstream>

namespace persuasion {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidShares: return "InvalidShares";
    case ErrorCode::NoMessagePossible: return "NoMessagePossible";
    case ErrorCode::ActionWithoutMessage: return "ActionWithoutMessage";
    case ErrorCode::KFullBias: return "KFullBias";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::DomainExit: return "DomainExit";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

bool ModelParams::is_valid() const noexcept {
  const bool finite = std::isfinite(rho0) && std::isfinite(p) &&
                      std::isfinite(q) && std::isfinite(v) && std::isfinite(k);
  return finite && rho0 >= 0.0 && rho0 <= 1.0 && q > 0.0 && q < 0.5 &&
         p > 0.5 && p < 1.0 && v >= 0.0 && v < 1.0 && k >= 0.0 && k <= 1.0;
}

void ModelParams::validate() const {
  if (is_valid()) return;
  std::ostringstream os;
  os << "invalid model parameters (rho0=" << rho0 << ", p=" << p << ", q=" << q
     << ", v=" << v << ", k=" << k
     << "); need 0<=rho0<=1, 0<q<1/2<p<1, 0<=v<1, 0<=k<=1";
  throw Error(ErrorCode::InvalidParams, os.str());
}

double ModelParams::prior_ratio() const {
  if (rho0 >= 1.0) {
    throw Error(ErrorCode::InvalidParams, "prior ratio undefined at rho0 = 1");
  }
  return rho0 / (1.0 - rho0);
}

ModelParams make_params(double rho0, double p, double q, double v, double k) {
  ModelParams params{rho0, p, q, v, k};
  params.validate();
  return params;
}

void SenderStrategy::validate() const {
  if (!(rG >= 0.0 && rG <= 1.0 && rB >= 0.0 && rB <= 1.0)) {
    std::ostringstream os;
    os << "strategy rates must lie in [0,1] (rG=" << rG << ", rB=" << rB << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

}  // namespace persuasion
