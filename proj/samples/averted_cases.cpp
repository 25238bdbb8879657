// Averted cases for a range of app adoption levels on the shipped series.

#include <cstdio>

#include "taf/taf.hpp"

int main() {
  const auto series = taf::load_fixture();
  for (double usage : {0.16, 0.30, 0.40}) {
    const auto params = taf::with_param(taf::default_params(), "u_app", usage);
    const auto e = taf::estimate(series, params);
    std::printf("u_app=%.2f  lambda_app+=%.4f  S_ct=%.0f  S_app=%.0f\n", usage,
                e.lambdas.per_type[taf::CaseType::kAppPlus], e.ct.s_total,
                e.app.s_total);
  }
}
