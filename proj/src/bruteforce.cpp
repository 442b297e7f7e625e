#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "latsize/latticesize.hpp"

namespace latsize {
namespace {

struct Best {
  Int value = std::numeric_limits<Int>::max();
  IntMat rows{};

  // Keeps the smaller value, then the lexicographically smaller matrix.
  void offer(Int v, IntMat r) {
    std::sort(r.begin(), r.end());  // l1(AP) does not depend on the row order
    if (v < value || (v == value && r < rows)) {
      value = v;
      rows = r;
    }
  }
};

// Precomputed <h, x> for every candidate h and vertex x.
class TripleSearch {
 public:
  TripleSearch(const LatticePolytope& p, const CandidateSet& cands, bool prune)
      : nv_(p.vertices().size()), prune_(prune) {
    const std::size_t n = cands.directions.size();
    dirs_.reserve(n);
    widths_ = cands.widths;
    dots_.resize(n * nv_);
    mins_.resize(n);
    maxs_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      dirs_.push_back(cands.directions[k].vec());
      Int lo = std::numeric_limits<Int>::max(), hi = std::numeric_limits<Int>::min();
      for (std::size_t x = 0; x < nv_; ++x) {
        const Int t = dot(dirs_[k], p.vertices()[x]);
        dots_[k * nv_ + x] = t;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
      mins_[k] = lo;
      maxs_[k] = hi;
    }
  }

  std::size_t size() const { return dirs_.size(); }

  // Searches all triples whose first row is candidate i.
  void run_first_row(std::size_t i, std::atomic<Int>& global, Best& local) const {
    const std::size_t n = dirs_.size();
    auto over = [&](Int bound) { return prune_ && bound > global.load(std::memory_order_relaxed); };
    std::vector<Int> pair_sum(nv_), signed_sum(nv_);
    if (over(widths_[i])) return;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (over(widths_[j])) break;
      const IntVec c = cross(dirs_[i], dirs_[j]);
      if (content(c) != 1) continue;  // (h_i, h_j) does not extend to a basis
      for (Int sigma : {1, -1}) {
        Int lo = std::numeric_limits<Int>::max(), hi = std::numeric_limits<Int>::min();
        for (std::size_t x = 0; x < nv_; ++x) {
          pair_sum[x] = dots_[i * nv_ + x] + sigma * dots_[j * nv_ + x];
          lo = std::min(lo, pair_sum[x]);
          hi = std::max(hi, pair_sum[x]);
        }
        if (over(hi - lo)) continue;  // w(h_i +- h_j) bounds l1 from below
        for (Int s1 : {1, -1}) {
          // Rows r1 = s1 h_i, r2 = s1 sigma h_j.
          const Int min_sum = (s1 > 0 ? mins_[i] : -maxs_[i]) + (s1 * sigma > 0 ? mins_[j] : -maxs_[j]);
          Int top = std::numeric_limits<Int>::min();
          for (std::size_t x = 0; x < nv_; ++x) {
            signed_sum[x] = s1 * pair_sum[x];
            top = std::max(top, signed_sum[x]);
          }
          // l1(AP) >= max <r1 + r2, x> - min <r1, x> - min <r2, x>.
          if (over(top - min_sum)) continue;
          for (std::size_t k = j + 1; k < n; ++k) {
            if (over(widths_[k])) break;
            const Int d = dot(c, dirs_[k]);
            if (d != 1 && d != -1) continue;
            for (Int s3 : {1, -1}) {
              Int best_top = std::numeric_limits<Int>::min();
              const Int* row = &dots_[k * nv_];
              for (std::size_t x = 0; x < nv_; ++x) best_top = std::max(best_top, signed_sum[x] + s3 * row[x]);
              const Int value = best_top - min_sum - (s3 > 0 ? mins_[k] : -maxs_[k]);
              if (prune_ && value > global.load(std::memory_order_relaxed)) continue;
              const IntMat rows{scale(s1, dirs_[i]), scale(s1 * sigma, dirs_[j]), scale(s3, dirs_[k])};
              local.offer(value, rows);
              Int seen = global.load(std::memory_order_relaxed);
              while (value < seen && !global.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
              }
            }
          }
        }
      }
    }
  }

 private:
  std::size_t nv_;
  bool prune_;
  std::vector<IntVec> dirs_;
  std::vector<Int> widths_;
  std::vector<Int> dots_;
  std::vector<Int> mins_, maxs_;
};

LatticeSizeResult search(const LatticePolytope& p, const BruteForceOptions& options) {
  const auto [naive_value, naive_map] = naive_fit(p);
  Best best;

  const CandidateSet cands = enumerate_short_directions(p, naive_value);
  const TripleSearch searcher(p, cands, options.prune);
  std::atomic<Int> global{naive_value};

  const unsigned workers = std::max(1u, options.threads);
  std::vector<Best> locals(workers, best);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < searcher.size(); i += workers) searcher.run_first_row(i, global, locals[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const Best& b : locals) best.offer(b.value, b.rows);
  // The naive fit is kept unless a triple is strictly better.
  if (best.value >= naive_value) return {naive_value, naive_map, Method::brute};

  const auto linear = UnimodularMap::linear(3, best.rows);
  const IntVec shift = min_corner_shift(transform(p.vertices(), linear), 3);
  return {best.value, linear.then(UnimodularMap::translation(3, shift)), Method::brute};
}

}  // namespace

LatticeSizeResult ls_bruteforce(const LatticePolytope& p, const BruteForceOptions& options) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw std::domain_error("ls_bruteforce: polytope must be full-dimensional in space");
  }
  if (!options.reduce_first) return search(p, options);

  const UnimodularMap reduce = reduce_basis_3d(p).as_map();
  const LatticeSizeResult inner = search(apply_map(p, reduce), options);
  return {inner.value, reduce.then(inner.witness), Method::brute};
}

}  // namespace latsize
