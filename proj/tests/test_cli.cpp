#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "schubert/cli.hpp"
#include "schubert/equimult.hpp"
#include "schubert/error.hpp"
#include "schubert/root_fraction.hpp"

using namespace schubert;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run go(Query q) {
  std::ostringstream out, err;
  int code = run(q, out, err);
  return {code, out.str(), err.str()};
}

Query query(const char* command, const char* type) {
  Query q;
  q.command = command;
  q.type_text = type;
  return q;
}

}  // namespace

TEST_CASE("parse_element") {
  RootSystem rs(CartanType('A', 2));
  CHECK(parse_element(rs, "e").is_identity());
  CHECK(parse_element(rs, "1 2 1") == longest_element(rs));
  CHECK(parse_element(rs, "s1*s2*s1") == longest_element(rs));
  CHECK(parse_element(rs, "1 1 2") == WeylElt::simple(rs, 1));  // non-reduced ok
  CHECK_THROWS_AS(parse_element(rs, "3"), InvalidInput);
  CHECK_THROWS_AS(parse_element(rs, "0"), InvalidInput);
  CHECK_THROWS_AS(parse_element(rs, "x"), InvalidInput);
  CHECK_THROWS_AS(parse_element(rs, ""), InvalidInput);
  CHECK_THROWS_AS(parse_element(rs, " * "), InvalidInput);
}

TEST_CASE("emult command text output") {
  Query q = query("emult", "B2");
  q.w_text = "2 1 2";
  q.x_text = "e";
  Run r = go(q);
  CHECK(r.code == 0);
  CHECK(r.out == "2 / (a2 * a1 * (a1+2*a2))\n");
  q.algorithm = "subexpr";
  CHECK(go(q).out == r.out);
  q.algorithm = "nope";
  CHECK(go(q).code == 1);
}

TEST_CASE("smooth command text output") {
  Query q = query("smooth", "B2");
  q.w_text = "2 1 2";
  q.x_text = "e";
  Run r = go(q);
  CHECK(r.code == 0);
  CHECK(r.out == "SINGULAR (J = 2); rationally smooth: yes\n");

  Query q2 = query("smooth", "A2");
  q2.w_text = "1 2 1";
  q2.x_text = "2 1";
  Run r2 = go(q2);
  CHECK(r2.out == "SMOOTH (J = 1); rationally smooth: yes\n");

  Query q3 = query("smooth", "A2");
  q3.w_text = "1";
  q3.x_text = "2";
  CHECK(go(q3).out.find("NOT A POINT") == 0);
}

TEST_CASE("user errors exit with code 1 and a typed name") {
  Query q = query("roots", "D2");
  Run r = go(q);
  CHECK(r.code == 1);
  CHECK(r.err.find("RankOutOfBounds") != std::string::npos);

  Query q2 = query("emult", "A2");
  q2.w_text = "1 2";
  Run r2 = go(q2);  // missing --x
  CHECK(r2.code == 1);

  Query q3 = query("weyl", "E7");
  CHECK(go(q3).code == 1);
}

TEST_CASE("scan guard") {
  Query q = query("scan", "B5");  // |W| = 3840 > 2000
  Run r = go(q);
  CHECK(r.code == 1);
  CHECK(r.err.find("ScanGuard") != std::string::npos);
  q.yes = true;
  q.max_length = 2;  // guard waived; short scan finds nothing singular
  Run r2 = go(q);
  CHECK(r2.code == 0);
  CHECK(r2.out.empty());
}

TEST_CASE("scan output") {
  Query q = query("scan", "B2");
  Run r = go(q);
  CHECK(r.code == 0);
  CHECK(r.out == "2 1 2\tsingular_at: {2}\n");

  q.predicate = "rationally-singular";
  CHECK(go(q).out.empty());  // B2 Schubert varieties are all rationally smooth

  q.predicate = "bogus";
  CHECK(go(q).code == 1);
}

TEST_CASE("json records round-trip to canonical values") {
  Query q = query("emult", "B2");
  q.w_text = "2 1 2";
  q.x_text = "e";
  q.json = true;
  Run r = go(q);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["type"] == "B2");
  CHECK(j["length_w"] == 3);

  RootSystem rs(CartanType('B', 2));
  // rebuild the element and the fraction from the emitted strings
  WeylElt w = parse_element(rs, j["w"].get<std::string>());
  WeylElt x = parse_element(rs, j["x"].get<std::string>());
  CHECK(w == parse_element(rs, "2 1 2"));
  CHECK(x.is_identity());
  std::string text = j["e_num"].get<std::string>();
  if (!j["e_den_roots"].empty()) {
    text += " / (";
    for (size_t k = 0; k < j["e_den_roots"].size(); ++k) {
      if (k) text += " * ";
      std::string root = j["e_den_roots"][k].get<std::string>();
      text += root.find_first_of("+-") != std::string::npos ? "(" + root + ")" : root;
    }
    text += ")";
  }
  EmultEngine eng(rs);
  CHECK(RootFraction::parse(rs, text) == eng.recursive(w, x));
}

TEST_CASE("fraction text emitted by the CLI parses back to the same value") {
  Query q = query("emult", "G2");
  q.w_text = "1 2 1";
  q.x_text = "e";
  Run r = go(q);
  std::string line = r.out.substr(0, r.out.size() - 1);
  RootSystem rs(CartanType('G', 2));
  EmultEngine eng(rs);
  CHECK(RootFraction::parse(rs, line) ==
        eng.recursive(parse_element(rs, "1 2 1"), WeylElt::identity(rs)));
}

TEST_CASE("output is deterministic") {
  Query q = query("gkm-mult", "A2");
  q.u_text = "1 2";
  q.v_text = "2 1";
  q.ordinary = true;
  Run a = go(q), b = go(q);
  CHECK(a.out == b.out);
  CHECK(a.out.find("1 : 1\n") != std::string::npos);
  CHECK(a.out.find("2 : 1\n") != std::string::npos);
}

TEST_CASE("locus command") {
  Query q = query("locus", "A3");
  q.w_text = "2 1 3 2";
  Run r = go(q);
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  Query q2 = query("locus", "A3");
  q2.w_text = "2 1 3 2";
  q2.rational = true;
  CHECK(go(q2).out == "2\n");
  Query q3 = query("locus", "B2");
  q3.w_text = "2 1 2";
  q3.rational = true;
  CHECK(go(q3).out == "rationally smooth everywhere\n");
}

TEST_CASE("gkm commands") {
  Query q = query("gkm-verify", "B2");
  Run r = go(q);
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: 8 class(es)") == 0);

  Query q2 = query("gkm-restrict", "A2");
  q2.w_text = "1 2";
  q2.x_text = "e";
  CHECK(go(q2).out == "a1 + a2\n");
}
