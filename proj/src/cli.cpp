#include "schubert/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "schubert/cache.hpp"
#include "schubert/equimult.hpp"
#include "schubert/error.hpp"
#include "schubert/gkm.hpp"
#include "schubert/singularity.hpp"

namespace schubert {

using json = nlohmann::ordered_json;

WeylElt parse_element(const RootSystem& rs, std::string_view text) {
  std::vector<int> word;
  bool saw_token = false;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    saw_token = true;
    std::string t = token;
    token.clear();
    if (t == "e") return;  // identity factor
    if (t[0] == 's') t = t.substr(1);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("ParseError", "malformed generator token \"" + t + "\"");
    int i = std::stoi(t);
    if (i < 1 || i > rs.rank())
      throw InvalidInput("IndexOutOfRange",
                         "simple index " + std::to_string(i) + " out of range for " +
                             rs.type().to_string());
    word.push_back(i - 1);
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '*' || c == ',')
      flush();
    else
      token += c;
  }
  flush();
  if (!saw_token)
    throw InvalidInput("ParseError", "empty element text; use \"e\" for the identity");
  return WeylElt::from_word(rs, word);
}

namespace {

std::string resolve_cache_dir(const Query& q) {
  if (!q.cache_dir.empty()) return q.cache_dir;
  const char* env = std::getenv("SCHUBERT_CACHE_DIR");
  return env ? env : "";
}

WeylGroup make_group(const RootSystem& rs, const Query& q) {
  WeylGroup wg(rs, q.cap.value_or(WeylGroup::default_cap));
  std::string dir = resolve_cache_dir(q);
  if (!dir.empty()) attach_bruhat_cache(wg, dir);
  return wg;
}

std::vector<std::string> root_strings(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.to_string());
  return out;
}

json base_record(const RootSystem& rs, const WeylElt& w, const WeylElt& x) {
  json j;
  j["schema"] = "1";
  j["type"] = rs.type().to_string();
  j["w"] = w.word_string();
  j["x"] = x.word_string();
  j["length_w"] = w.length();
  return j;
}

void put_fraction(json& j, const RootFraction& e) {
  j["e_num"] = e.num().to_string();
  j["e_den_roots"] = root_strings(e.den_roots());
}

int cmd_roots(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (q.json) {
    json j;
    j["schema"] = "1";
    j["type"] = rs.type().to_string();
    j["rank"] = rs.rank();
    j["positive_root_count"] = rs.positive_roots().size();
    j["weyl_order"] = rs.type().weyl_order();
    json cm = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan(i, k));
      cm.push_back(row);
    }
    j["cartan"] = cm;
    j["positive_roots"] = root_strings(rs.positive_roots());
    out << j.dump() << "\n";
    return 0;
  }
  out << rs.type().to_string() << ": rank " << rs.rank() << ", "
      << rs.positive_roots().size() << " positive roots, |W| = "
      << rs.type().weyl_order() << "\n";
  out << "cartan matrix (entry i j = <a_j, a_i^vee>):\n";
  for (int i = 0; i < rs.rank(); ++i) {
    out << " ";
    for (int k = 0; k < rs.rank(); ++k) out << " " << rs.cartan(i, k);
    out << "\n";
  }
  out << "positive roots (height, lex):\n";
  for (const Root& r : rs.positive_roots()) out << "  " << r.to_string() << "\n";
  return 0;
}

int cmd_weyl(const RootSystem& rs, const Query& q, std::ostream& out) {
  WeylGroup wg = make_group(rs, q);
  if (q.json) {
    json j;
    j["schema"] = "1";
    j["type"] = rs.type().to_string();
    j["order"] = wg.size();
    if (q.list) {
      json elems = json::array();
      for (const WeylElt& w : wg.elements()) {
        if (q.max_length && w.length() > *q.max_length) continue;
        elems.push_back({{"w", w.word_string()}, {"length", w.length()}});
      }
      j["elements"] = elems;
    }
    out << j.dump() << "\n";
    return 0;
  }
  out << rs.type().to_string() << ": |W| = " << wg.size() << "\n";
  if (q.list)
    for (const WeylElt& w : wg.elements()) {
      if (q.max_length && w.length() > *q.max_length) continue;
      out << w.word_string() << "\t" << w.length() << "\n";
    }
  return 0;
}

int cmd_bruhat(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.x_text || !q.w_text)
    throw InvalidInput("MissingArgument", "bruhat requires --x and --w");
  WeylElt x = parse_element(rs, *q.x_text), w = parse_element(rs, *q.w_text);
  bool leq = bruhat_leq(x, w);
  if (q.json) {
    json j = base_record(rs, w, x);
    j["leq"] = leq;
    out << j.dump() << "\n";
  } else {
    out << (leq ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_emult(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.x_text || !q.w_text)
    throw InvalidInput("MissingArgument", "emult requires --x and --w");
  WeylElt x = parse_element(rs, *q.x_text), w = parse_element(rs, *q.w_text);
  EmultEngine eng(rs);
  RootFraction e = RootFraction::zero(rs);
  if (q.algorithm == "recursive")
    e = eng.recursive(w, x);
  else if (q.algorithm == "subexpr")
    e = eng.subexpr(w.word(), x);
  else
    throw InvalidInput("UnknownAlgorithm", "expected recursive or subexpr, got \"" +
                                               q.algorithm + "\"");
  if (q.json) {
    json j = base_record(rs, w, x);
    put_fraction(j, e);
    out << j.dump() << "\n";
  } else {
    out << e.to_string() << "\n";
  }
  return 0;
}

int cmd_joseph(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.x_text || !q.w_text)
    throw InvalidInput("MissingArgument", "joseph requires --x and --w");
  WeylElt x = parse_element(rs, *q.x_text), w = parse_element(rs, *q.w_text);
  EmultEngine eng(rs);
  Poly j_poly = eng.joseph(x, w);
  if (q.json) {
    json j = base_record(rs, w, x);
    put_fraction(j, eng.recursive(w, x));
    j["J"] = j_poly.to_string();
    j["phi"] = root_strings(eng.phi(x, w));
    out << j.dump() << "\n";
  } else {
    out << "J = " << j_poly.to_string() << "\n";
  }
  return 0;
}

json report_record(const RootSystem& rs, const PointReport& r) {
  json j = base_record(rs, r.w, r.x);
  put_fraction(j, r.e);
  j["J"] = r.joseph.to_string();
  j["phi"] = root_strings(r.phi);
  j["smooth"] = r.smooth;
  j["rationally_smooth"] = r.rationally_smooth;
  if (!r.in_variety) j["in_variety"] = false;
  return j;
}

int cmd_point_report(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.x_text || !q.w_text)
    throw InvalidInput("MissingArgument", q.command + " requires --x and --w");
  WeylElt x = parse_element(rs, *q.x_text), w = parse_element(rs, *q.w_text);
  WeylGroup wg = make_group(rs, q);
  EmultEngine eng(rs);
  SingularityAnalyzer an(wg, eng);
  PointReport r = an.report(w, x);
  if (q.json) {
    out << report_record(rs, r).dump() << "\n";
    return 0;
  }
  if (!r.in_variety) {
    out << "NOT A POINT of X(w): " << x.word_string() << " is not below "
        << w.word_string() << "\n";
    return 0;
  }
  if (q.command == "smooth") {
    out << (r.smooth ? "SMOOTH" : "SINGULAR") << " (J = " << r.joseph.to_string()
        << "); rationally smooth: " << (r.rationally_smooth ? "yes" : "no") << "\n";
  } else {
    out << "rationally smooth: " << (r.rationally_smooth ? "yes" : "no");
    if (r.d)
      out << " (J = " << r.joseph.to_string() << ")";
    out << "\n";
  }
  return 0;
}

int cmd_locus(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.w_text) throw InvalidInput("MissingArgument", "locus requires --w");
  WeylElt w = parse_element(rs, *q.w_text);
  WeylGroup wg = make_group(rs, q);
  EmultEngine eng(rs);
  SingularityAnalyzer an(wg, eng);
  std::vector<WeylElt> pts = q.rational ? an.rationally_singular_locus(w, !q.all)
                                        : an.singular_locus(w, !q.all);
  if (q.json) {
    json j;
    j["schema"] = "1";
    j["type"] = rs.type().to_string();
    j["w"] = w.word_string();
    j["length_w"] = w.length();
    j["rational"] = q.rational;
    j["maximal_only"] = !q.all;
    json arr = json::array();
    for (const WeylElt& x : pts) arr.push_back(x.word_string());
    j["locus"] = arr;
    out << j.dump() << "\n";
    return 0;
  }
  if (pts.empty()) {
    out << (q.rational ? "rationally smooth everywhere" : "smooth everywhere") << "\n";
    return 0;
  }
  for (const WeylElt& x : pts) out << x.word_string() << "\n";
  return 0;
}

int cmd_gkm_restrict(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.x_text || !q.w_text)
    throw InvalidInput("MissingArgument", "gkm-restrict requires --x and --w");
  WeylElt x = parse_element(rs, *q.x_text), w = parse_element(rs, *q.w_text);
  WeylGroup wg = make_group(rs, q);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  Poly p = alg.restriction(w, x);
  if (q.json) {
    json j = base_record(rs, w, x);
    j["restriction"] = p.to_string();
    out << j.dump() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_gkm_verify(const RootSystem& rs, const Query& q, std::ostream& out) {
  WeylGroup wg = make_group(rs, q);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  size_t congruences = wg.size() * rs.positive_roots().size();
  size_t classes = 0;
  if (q.w_text) {
    alg.schubert_class(parse_element(rs, *q.w_text));  // verified on build
    classes = 1;
  } else {
    for (size_t wi = 0; wi < wg.size(); ++wi) alg.schubert_class(wi);
    classes = wg.size();
  }
  if (q.json) {
    json j;
    j["schema"] = "1";
    j["type"] = rs.type().to_string();
    j["classes_verified"] = classes;
    j["congruences_per_class"] = congruences;
    out << j.dump() << "\n";
  } else {
    out << "ok: " << classes << " class(es) verified, " << congruences
        << " congruences each\n";
  }
  return 0;
}

int cmd_gkm_mult(const RootSystem& rs, const Query& q, std::ostream& out) {
  if (!q.u_text || !q.v_text)
    throw InvalidInput("MissingArgument", "gkm-mult requires --u and --v");
  WeylElt u = parse_element(rs, *q.u_text), v = parse_element(rs, *q.v_text);
  WeylGroup wg = make_group(rs, q);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  GkmTuple prod = alg.schubert_class(u) * alg.schubert_class(v);
  auto expansion = alg.expand(prod);
  if (q.json) {
    json j;
    j["schema"] = "1";
    j["type"] = rs.type().to_string();
    j["u"] = u.word_string();
    j["v"] = v.word_string();
    json arr = json::array();
    for (const auto& [wi, c] : expansion)
      arr.push_back({{"w", wg[wi].word_string()}, {"coeff", c.to_string()}});
    j["expansion"] = arr;
    if (q.ordinary) {
      json ord = json::array();
      for (const auto& [wi, c] : alg.specialize(expansion))
        ord.push_back({{"w", wg[wi].word_string()}, {"coeff", to_string(c)}});
      j["ordinary"] = ord;
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (q.ordinary) {
    auto ord = alg.specialize(expansion);
    if (ord.empty()) out << "0\n";
    for (const auto& [wi, c] : ord)
      out << wg[wi].word_string() << " : " << to_string(c) << "\n";
    return 0;
  }
  if (expansion.empty()) out << "0\n";
  for (const auto& [wi, c] : expansion)
    out << wg[wi].word_string() << " : " << c.to_string() << "\n";
  return 0;
}

int cmd_scan(const RootSystem& rs, const Query& q, std::ostream& out) {
  WeylGroup wg = make_group(rs, q);
  if (wg.size() > 2000 && !q.yes)
    throw InvalidInput("ScanGuard", "scan over |W| = " + std::to_string(wg.size()) +
                                        " elements; pass --yes to proceed");
  EmultEngine eng(rs);
  int bound = q.max_length.value_or(static_cast<int>(rs.positive_roots().size()));
  bool want_singular = q.predicate == "singular" || q.predicate == "all";
  bool want_rational = q.predicate == "rationally-singular" || q.predicate == "all";
  if (!want_singular && !want_rational)
    throw InvalidInput("UnknownPredicate",
                       "expected singular, rationally-singular or all, got \"" +
                           q.predicate + "\"");
  auto words = [&](const std::vector<WeylElt>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i].word_string();
    }
    return s;
  };
  for (const WeylElt& w : wg.elements()) {
    if (w.length() > bound) continue;
    // fresh per-w analyzer: J values are never shared across w, and the
    // multiplicity memo (which is shared) lives in the engine
    SingularityAnalyzer an(wg, eng);
    std::vector<WeylElt> sing, rsing;
    if (want_singular) sing = an.singular_locus(w);
    if (want_rational) rsing = an.rationally_singular_locus(w);
    bool hit = q.predicate == "all" || (want_singular && !sing.empty()) ||
               (want_rational && !rsing.empty() && !want_singular);
    if (!hit) continue;
    if (q.json) {
      json j;
      j["schema"] = "1";
      j["type"] = rs.type().to_string();
      j["w"] = w.word_string();
      j["length_w"] = w.length();
      if (want_singular) {
        json arr = json::array();
        for (const WeylElt& x : sing) arr.push_back(x.word_string());
        j["singular_locus"] = arr;
      }
      if (want_rational) {
        json arr = json::array();
        for (const WeylElt& x : rsing) arr.push_back(x.word_string());
        j["rationally_singular_locus"] = arr;
      }
      out << j.dump() << "\n";
    } else {
      out << w.word_string();
      if (want_singular) out << "\tsingular_at: {" << words(sing) << "}";
      if (want_rational) out << "\trationally_singular_at: {" << words(rsing) << "}";
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const Query& q, std::ostream& out, std::ostream& err) {
  try {
    RootSystem rs(CartanType::parse(q.type_text));
    if (q.command == "roots") return cmd_roots(rs, q, out);
    if (q.command == "weyl") return cmd_weyl(rs, q, out);
    if (q.command == "bruhat") return cmd_bruhat(rs, q, out);
    if (q.command == "emult") return cmd_emult(rs, q, out);
    if (q.command == "joseph") return cmd_joseph(rs, q, out);
    if (q.command == "smooth" || q.command == "rsmooth")
      return cmd_point_report(rs, q, out);
    if (q.command == "locus") return cmd_locus(rs, q, out);
    if (q.command == "gkm-restrict") return cmd_gkm_restrict(rs, q, out);
    if (q.command == "gkm-verify") return cmd_gkm_verify(rs, q, out);
    if (q.command == "gkm-mult") return cmd_gkm_mult(rs, q, out);
    if (q.command == "scan") return cmd_scan(rs, q, out);
    throw InvalidInput("UnknownCommand", "\"" + q.command + "\"");
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace schubert
