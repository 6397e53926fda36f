#include "gjt/binomial.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace gjt {

namespace {

// Row n holds C(n, 0..n). Rows are only appended, never modified.
class BinomialTable {
 public:
  BigInt get(long n, long k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const std::size_t m = rows_.size();
      std::vector<BigInt> row(m + 1);
      row[0] = 1;
      row[m] = 1;
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BinomialTable& table() {
  static BinomialTable instance;
  return instance;
}

// Beyond this the triangle would be wasteful; fall back to the product formula.
constexpr long kTableLimit = 512;

}  // namespace

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kTableLimit) return table().get(n, k);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace gjt
