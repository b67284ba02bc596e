#ifndef ANS_SRC_PARALLEL_HPP_
#define ANS_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ans::detail {

  // Splits [0, count) into at most `jobs` contiguous chunks and calls
  // fn(chunk, begin, end) for each, one thread per chunk.  Chunk boundaries
  // depend only on count and jobs.  The first exception thrown by a worker
  // is rethrown after all threads have joined.
  template <typename Fn>
  void parallel_chunks(std::size_t count, std::size_t jobs, Fn&& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs <= 1) {
      if (count > 0) {
        fn(std::size_t(0), std::size_t(0), count);
      }
      return;
    }
    std::vector<std::thread>        threads;
    std::vector<std::exception_ptr> errors(jobs);
    std::size_t const               step = (count + jobs - 1) / jobs;
    for (std::size_t c = 0; c < jobs; ++c) {
      std::size_t const begin = std::min(count, c * step);
      std::size_t const end   = std::min(count, begin + step);
      threads.emplace_back([&, c, begin, end] {
        try {
          fn(c, begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  inline std::size_t chunk_count(std::size_t count, std::size_t jobs) {
    return std::max<std::size_t>(1, std::min(jobs, count));
  }

}  // namespace ans::detail

#endif  // ANS_SRC_PARALLEL_HPP_
