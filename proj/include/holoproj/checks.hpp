#pragma once

#include "holoproj/report.hpp"
#include "holoproj/siegel.hpp"

namespace holoproj {

struct CheckOptions {
  Route route = Route::Transcribed;
  Exec exec = Exec::Serial;
  long kappa = 4;          // -1 keeps kappa symbolic (route-agreement checks only)
  unsigned genus = 2;
  std::vector<Rat> c_values = {Rat(1)};  // residue parameters for the spectral suite
};

Report checks_algebra(const Suspects& s = Suspects::builtin());
Report checks_hc(const Suspects& s = Suspects::builtin());
Report checks_calculus(const CheckOptions& opt, const Suspects& s = Suspects::builtin());
Report checks_spectral(const CheckOptions& opt, const Suspects& s = Suspects::builtin());
Report checks_projection(const Suspects& s = Suspects::builtin());
Report checks_all(const CheckOptions& opt, const Suspects& s = Suspects::builtin());

}  // namespace holoproj
