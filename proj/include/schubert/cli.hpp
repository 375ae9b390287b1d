#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "schubert/cartan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// A fully parsed command-line request; the front end only fills this in.
struct Query {
  std::string command;  // roots weyl bruhat emult joseph smooth rsmooth locus
                        // gkm-restrict gkm-verify gkm-mult scan
  std::string type_text;
  std::optional<std::string> w_text, x_text, u_text, v_text;
  std::string algorithm = "recursive";  // emult: recursive | subexpr
  std::string predicate = "singular";   // scan: singular | rationally-singular | all
  std::optional<int> max_length;
  std::optional<size_t> cap;
  bool json = false;
  bool yes = false;
  bool all = false;        // locus: list the full locus, not just maximal points
  bool rational = false;   // locus: rationally singular locus
  bool ordinary = false;   // gkm-mult: specialize the expansion
  bool list = false;       // weyl: list elements
  std::string cache_dir;   // empty: consult SCHUBERT_CACHE_DIR
};

// "e", "1 2 1", "s1*s2*s1"; the word need not be reduced.
WeylElt parse_element(const RootSystem& rs, std::string_view text);

// Dispatch and render. Exit code 0 on success, 1 on user error, 2 on an
// internal invariant violation; errors go to err prefixed by their kind.
int run(const Query& q, std::ostream& out, std::ostream& err);

}  // namespace schubert
