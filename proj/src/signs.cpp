#include "cyclo/signs.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

int suspension_sign(const std::vector<int>& degrees) {
  long e = 0;
  const long n = static_cast<long>(degrees.size());
  for (long i = 0; i < n; ++i) e += (n - 1 - i) * degrees[i];
  return parity_sign(e);
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  long e = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) e += static_cast<long>(degrees[perm[i]]) * degrees[perm[j]];
  return parity_sign(e);
}

int rotation_sign(const std::vector<int>& degrees) {
  if (degrees.size() < 2) return 1;
  long rest = std::accumulate(degrees.begin(), degrees.end() - 1, 0L);
  return parity_sign(static_cast<long>(degrees.back()) * rest);
}

namespace {

void assign(const std::vector<int>& parts, std::size_t block, std::vector<int>& owner,
            const std::vector<int>& degrees,
            const std::function<void(const Unshuffle&)>& visit) {
  const int n = static_cast<int>(owner.size());
  if (block + 1 == parts.size()) {
    std::vector<int> perm;
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int i = 0; i < n; ++i)
        if (owner[i] == static_cast<int>(b) || (owner[i] < 0 && b == block)) perm.push_back(i);
    visit({perm, koszul_sign(perm, degrees)});
    return;
  }
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == parts[block]) {
      assign(parts, block + 1, owner, degrees, visit);
      return;
    }
    for (int i = start; i < n; ++i) {
      if (owner[i] >= 0) continue;
      owner[i] = static_cast<int>(block);
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      owner[i] = -1;
    }
  };
  rec(0);
}

}  // namespace

void unshuffles(const std::vector<int>& parts, const std::vector<int>& degrees,
                const std::function<void(const Unshuffle&)>& visit) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("unshuffles: parts must be >= 1");
    n += p;
  }
  if (parts.empty() || n != static_cast<int>(degrees.size()))
    throw std::invalid_argument("unshuffles: parts must sum to the number of degrees");
  std::vector<int> owner(n, -1);
  assign(parts, 0, owner, degrees, visit);
}

std::vector<Unshuffle> unshuffles(const std::vector<int>& parts, const std::vector<int>& degrees) {
  std::vector<Unshuffle> out;
  unshuffles(parts, degrees, [&](const Unshuffle& u) { out.push_back(u); });
  return out;
}

}  // namespace cyclo
