#include <gtest/gtest.h>

#include <stdexcept>

#include "rotarr/parallel.hpp"

using namespace rotarr;

TEST(Parallel, ResultsAreIndexOrdered) {
  for (unsigned jobs : {1u, 2u, 7u}) {
    std::vector<std::size_t> out(1000);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = i * i; }, jobs);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(Parallel, RethrowsSmallestFailingIndex) {
  for (unsigned jobs : {1u, 4u}) {
    try {
      parallel_for(
          100,
          [](std::size_t i) {
            if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
          },
          jobs);
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "7");
    }
  }
}

TEST(Parallel, NestedLoopsRunInline) {
  std::vector<int> out(64, 0);
  parallel_for(8, [&](std::size_t i) {
    parallel_for(8, [&](std::size_t j) { out[i * 8 + j] = static_cast<int>(i + j); }, 4);
  }, 4);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(out[i * 8 + j], static_cast<int>(i + j));
  }
}

TEST(Parallel, DefaultJobs) {
  const unsigned before = default_jobs();
  set_default_jobs(3);
  EXPECT_EQ(default_jobs(), 3u);
  set_default_jobs(before);
}
