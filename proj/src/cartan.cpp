#include "schubert/cartan.hpp"

#include <cctype>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void check_rank(char f, int rank) {
  auto fail = [&](const char* constraint) {
    throw InvalidInput("RankOutOfBounds", std::string("type ") + f + " requires " +
                                              constraint + ", got rank " +
                                              std::to_string(rank));
  };
  switch (f) {
    case 'A':
      if (rank < 1) fail("rank >= 1");
      break;
    case 'B':
      if (rank < 2) fail("rank >= 2");
      break;
    case 'C':
      if (rank < 2) fail("rank >= 2");
      break;
    case 'D':
      if (rank < 3) fail("rank >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail("rank in {6,7,8}");
      break;
    case 'F':
      if (rank != 4) fail("rank = 4");
      break;
    case 'G':
      if (rank != 2) fail("rank = 2");
      break;
    default:
      throw InvalidInput("InvalidCartanType",
                         std::string("unknown family '") + f + "', expected A..G");
  }
}

unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<unsigned long long>(k);
  return r;
}

}  // namespace

CartanType::CartanType(char f, int r) : family(static_cast<char>(std::toupper(f))), rank(r) {
  check_rank(family, rank);
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2)
    throw InvalidInput("InvalidCartanType",
                       "expected a family letter followed by a rank, e.g. \"B2\"");
  char f = static_cast<char>(std::toupper(text[0]));
  int rank = 0;
  for (size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InvalidInput("InvalidCartanType",
                         "malformed rank in \"" + std::string(text) + "\"");
    rank = rank * 10 + (text[k] - '0');
    if (rank > 1000)
      throw InvalidInput("RankOutOfBounds", "rank too large in \"" + std::string(text) + "\"");
  }
  return CartanType(f, rank);
}

std::string CartanType::to_string() const { return family + std::to_string(rank); }

int CartanType::positive_root_count() const {
  switch (family) {
    case 'A':
      return rank * (rank + 1) / 2;
    case 'B':
    case 'C':
      return rank * rank;
    case 'D':
      return rank * (rank - 1);
    case 'E':
      return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return 0;
}

unsigned long long CartanType::weyl_order() const {
  switch (family) {
    case 'A':
      return factorial(rank + 1);
    case 'B':
    case 'C':
      return (1ull << rank) * factorial(rank);
    case 'D':
      return (1ull << (rank - 1)) * factorial(rank);
    case 'E':
      return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
    case 'F':
      return 1152ull;
    case 'G':
      return 12ull;
  }
  return 0;
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  int n = rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int i, int j) {  // single bond between adjacent nodes
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      if (n >= 2) {
        c[n - 2][n - 1] = -1;
        c[n - 1][n - 2] = -2;
      }
      break;
    case 'C':
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      if (n >= 2) {
        c[n - 2][n - 1] = -2;
        c[n - 1][n - 2] = -1;
      }
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-...-n, node 2 hangs off node 4.
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'F':
      // 1-2 long, 3-4 short: <alpha_2, alpha_3^vee> = -2
      chain(0, 1);
      chain(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case 'G':
      // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace schubert
