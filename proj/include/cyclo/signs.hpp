#pragma once

#include <functional>
#include <vector>

namespace cyclo {

/// (-1)^k as +1/-1.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Sign of the map v1 (x) ... (x) vn -> v1bar (x) ... (x) vnbar, on un-desuspended degrees.
int suspension_sign(const std::vector<int>& degrees);

/// Koszul sign of moving element perm[i] into slot i, i.e. the output is
/// (x_{perm[0]}, ..., x_{perm[n-1]}). Permutation entries are 0-based.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

/// Sign of one cyclic step (x1..x_{n+1}) -> (x_{n+1}, x1..xn), desuspended degrees.
int rotation_sign(const std::vector<int>& degrees);

struct Unshuffle {
  std::vector<int> perm;
  int sign;
};

/// All permutations increasing inside each consecutive block of sizes `parts`,
/// with the Koszul sign for the given degrees. Emitted in lexicographic order.
void unshuffles(const std::vector<int>& parts, const std::vector<int>& degrees,
                const std::function<void(const Unshuffle&)>& visit);

std::vector<Unshuffle> unshuffles(const std::vector<int>& parts, const std::vector<int>& degrees);

}  // namespace cyclo
