#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "schubert/oracle.hpp"
#include "schubert/report.hpp"

namespace schubert {

ScanResult run_scan(const RootSystem& rs, ScanFilter filter, std::uint64_t budget, unsigned workers) {
  std::vector<WeylElement> all = enumerate(rs, budget);
  const Analyzer analyzer(rs, all, budget);
  const bool type_a = rs.family() == Family::A;

  std::vector<ScanLine> lines(all.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t k = next++; k < all.size(); k = next++) {
      try {
        const SchubertReport r = analyzer.analyze(all[k], reduced_word(rs, all[k]));
        ScanLine& line = lines[k];
        line.word = r.reduced_word;
        line.length = r.length;
        line.pass = r.smooth_necessary.pass();
        line.palindromic = r.rationally_smooth;
        line.te_submodule = r.te_submodule;
        line.euler = r.euler;
        if (type_a) {
          const oracle::Permutation p = oracle::weyl_to_permutation(rs, all[k]);
          line.permutation = oracle::format_permutation(p);
          line.oracle_smooth = oracle::is_smooth_type_a(p);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = all.size();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(all.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  ScanResult out;
  out.type = rs.name();
  out.filter = filter;
  out.total = all.size();
  if (type_a) out.oracle_smooth = 0;
  for (ScanLine& line : lines) {
    out.palindromic += line.palindromic;
    out.necessary_pass += line.pass;
    if (type_a) {
      *out.oracle_smooth += *line.oracle_smooth;
      if (line.pass != line.palindromic || line.pass != *line.oracle_smooth)
        out.mismatches.push_back(format_word(line.word, rs.rank()) + " (" + *line.permutation + "): necessary " +
                                 (line.pass ? "PASS" : "FAIL") + ", palindromic " +
                                 (line.palindromic ? "yes" : "no") + ", pattern oracle " +
                                 (*line.oracle_smooth ? "smooth" : "singular"));
    }
    const bool keep = filter == ScanFilter::All || (filter == ScanFilter::Pass && line.pass) ||
                      (filter == ScanFilter::Fail && !line.pass) ||
                      (filter == ScanFilter::Palindromic && line.palindromic);
    if (keep) out.lines.push_back(std::move(line));
  }
  return out;
}

}  // namespace schubert
