#include <gtest/gtest.h>

#include <cmath>

#include "wedgegroup/reconstruction.hpp"
#include "wedgegroup/sampling.hpp"
#include "wedgegroup/sweep.hpp"

using namespace wg;

namespace {

void kernel(std::size_t i, std::span<double> out)
{
  Sampler s(5, 0, i);
  out[0] = std::abs(s.normal());
  out[1] = s.uniform(0.0, 1.0);
  if (i % 97 == 13) throw std::runtime_error("sample " + std::to_string(i));
}

}  // namespace

TEST(Sweep, ParallelMatchesSerial)
{
  for (int threads : {1, 2, 4}) {
    const SweepResult a = sweep_serial(1000, 2, kernel);
    const SweepResult b = sweep_parallel(1000, 2, kernel, threads);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.max_residual, b.max_residual);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.first_failure_index, b.first_failure_index);
    EXPECT_EQ(a.first_failure, b.first_failure);
  }
}

TEST(Sweep, FailuresAreCountedAndReported)
{
  const SweepResult r = sweep_serial(200, 2, kernel);
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.first_failure_index, 13u);
  const CheckReport rep = summarize("demo", 10.0, r, {"a", "b"});
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.diagnostics.empty());
  EXPECT_TRUE(rep.details.contains("a"));
}

TEST(Sweep, EmptySweepIsVacuous)
{
  const CheckReport rep = summarize("empty", 1e-9, sweep_serial(0, 1, kernel), {"x"});
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.samples, 0u);
  EXPECT_FALSE(rep.diagnostics.empty());
}

TEST(Sweep, NaNResidualFails)
{
  const SweepResult r = sweep_serial(3, 1, [](std::size_t, std::span<double> out) { out[0] = std::nan(""); });
  EXPECT_FALSE(summarize("nan", 1.0, r, {"x"}).pass);
}

TEST(Sweep, VerificationReportsIndependentOfThreads)
{
  const ReflectionMap j = builtin_map({MapKind::Tautological, {}});
  const CheckReport a = verify_translations(j, 64, 3, 1e-8, 1);
  const CheckReport b = verify_translations(j, 64, 3, 1e-8, 3);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.details, b.details);
}
