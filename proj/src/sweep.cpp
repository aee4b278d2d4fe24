#include "wedgegroup/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

namespace wg {

namespace {

struct Partial {
  std::vector<double> max;
  std::size_t failures = 0;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  std::string first_message;

  explicit Partial(std::size_t channels) : max(channels, 0.0) {}

  void run(std::size_t i, const SampleKernel& kernel, std::vector<double>& scratch)
  {
    std::fill(scratch.begin(), scratch.end(), 0.0);
    try {
      kernel(i, scratch);
    } catch (const std::exception& e) {
      fail(i, e.what());
      return;
    }
    for (std::size_t c = 0; c < max.size(); ++c) {
      const double r = std::isnan(scratch[c]) ? std::numeric_limits<double>::infinity() : scratch[c];
      max[c] = std::max(max[c], r);
    }
  }

  void fail(std::size_t i, const std::string& what)
  {
    ++failures;
    if (i < first_index) {
      first_index = i;
      first_message = what;
    }
  }

  void merge(const Partial& o)
  {
    for (std::size_t c = 0; c < max.size(); ++c) max[c] = std::max(max[c], o.max[c]);
    failures += o.failures;
    if (o.first_index < first_index) {
      first_index = o.first_index;
      first_message = o.first_message;
    }
  }

  SweepResult finish(std::size_t samples) const
  {
    SweepResult r;
    r.samples = samples;
    r.max_residual = max;
    r.failures = failures;
    if (failures > 0) {
      r.first_failure_index = first_index;
      r.first_failure = first_message;
    }
    return r;
  }
};

}  // namespace

double SweepResult::overall() const
{
  double m = 0.0;
  for (double v : max_residual) m = std::max(m, v);
  return failures > 0 ? std::numeric_limits<double>::infinity() : m;
}

SweepResult sweep_serial(std::size_t samples, std::size_t channels, const SampleKernel& kernel)
{
  Partial acc(channels);
  std::vector<double> scratch(channels);
  for (std::size_t i = 0; i < samples; ++i) acc.run(i, kernel, scratch);
  return acc.finish(samples);
}

SweepResult sweep_parallel(std::size_t samples, std::size_t channels, const SampleKernel& kernel, int threads)
{
  Partial acc(channels);
  const auto n = static_cast<long long>(samples);
#pragma omp parallel num_threads(std::max(1, threads))
  {
    Partial local(channels);
    std::vector<double> scratch(channels);
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) local.run(static_cast<std::size_t>(i), kernel, scratch);
#pragma omp critical(wedgegroup_sweep_merge)
    acc.merge(local);
  }
  return acc.finish(samples);
}

SweepResult run_sweep(std::size_t samples, std::size_t channels, const SampleKernel& kernel, int threads)
{
  if (threads <= 1) return sweep_serial(samples, channels, kernel);
  return sweep_parallel(samples, channels, kernel, threads);
}

CheckReport summarize(const std::string& check, double tolerance, const SweepResult& result,
                      const std::vector<std::string>& channel_names)
{
  CheckReport report;
  report.check = check;
  report.samples = result.samples;
  report.tolerance = tolerance;
  for (std::size_t c = 0; c < result.max_residual.size(); ++c) {
    report.record(result.max_residual[c]);
    const std::string name = c < channel_names.size() ? channel_names[c] : "channel" + std::to_string(c);
    report.details[name] = result.max_residual[c];
  }
  if (result.failures > 0) {
    report.pass = false;
    report.details["failures"] = result.failures;
    report.diagnostics.push_back("sample " + std::to_string(result.first_failure_index) +
                                 " threw: " + result.first_failure);
  }
  if (result.samples == 0) report.diagnostics.push_back("no samples drawn; check is vacuous");
  report.finalize();
  return report;
}

}  // namespace wg
