#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsob/parallel.hpp"

using namespace lsob;

TEST_SUITE("parallel") {

TEST_CASE("every index is visited once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  parallel_for(0, [](std::size_t) { throw std::runtime_error("unreachable"); });
}

TEST_CASE("exceptions propagate") {
  CHECK_THROWS_AS(parallel_for(50,
                               [](std::size_t i) {
                                 if (i == 17) throw std::out_of_range("boom");
                               }),
                  std::out_of_range);
}

TEST_CASE("LSOB_THREADS caps the worker count") {
  const char* old = std::getenv("LSOB_THREADS");
  const std::string saved = old ? old : "";
  setenv("LSOB_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("LSOB_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  if (old)
    setenv("LSOB_THREADS", saved.c_str(), 1);
  else
    unsetenv("LSOB_THREADS");
}

}
