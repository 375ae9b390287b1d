#include <CLI11.hpp>

#include <iostream>

#include "schubert/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"schubert: equivariant multiplicities, singular loci and GKM "
               "restrictions of Schubert varieties"};
  app.require_subcommand(1);

  schubert::Query q;
  q.w_text.emplace();
  q.x_text.emplace();
  q.u_text.emplace();
  q.v_text.emplace();
  q.max_length.emplace(1 << 20);  // sentinel: not provided

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("type", q.type_text, "Cartan type, e.g. A3, B2, G2")->required();
    sub->add_flag("--json", q.json, "machine-readable output (schema 1)");
    sub->add_option("--cache-dir", q.cache_dir,
                    "Bruhat table cache directory (default: $SCHUBERT_CACHE_DIR)");
    sub->add_option("--cap", q.cap, "Weyl group enumeration cap (default 10^6)");
  };
  auto add_w = [&](CLI::App* sub) {
    sub->add_option("--w", *q.w_text, "element word, e.g. \"2 1 2\" or s2*s1*s2")
        ->required();
  };
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", *q.x_text, "fixed point word; \"e\" for the identity")
        ->required();
  };

  add_common(app.add_subcommand("roots", "Cartan matrix and positive roots"));

  {
    auto* sub = app.add_subcommand("weyl", "Weyl group order and elements");
    add_common(sub);
    sub->add_flag("--list", q.list, "list elements (length, ShortLex)");
    sub->add_option("--max-length", *q.max_length, "only elements up to this length");
  }
  {
    auto* sub = app.add_subcommand("bruhat", "decide x <= w in Bruhat order");
    add_common(sub);
    add_w(sub);
    add_x(sub);
  }
  {
    auto* sub = app.add_subcommand("emult", "equivariant multiplicity e_x X(w)");
    add_common(sub);
    add_w(sub);
    add_x(sub);
    sub->add_option("--algorithm", q.algorithm, "recursive (default) or subexpr");
  }
  {
    auto* sub = app.add_subcommand("joseph", "Joseph polynomial J(x,w)");
    add_common(sub);
    add_w(sub);
    add_x(sub);
  }
  {
    auto* sub = app.add_subcommand("smooth", "smoothness of X(w) at x");
    add_common(sub);
    add_w(sub);
    add_x(sub);
  }
  {
    auto* sub = app.add_subcommand("rsmooth", "rational smoothness of X(w) at x");
    add_common(sub);
    add_w(sub);
    add_x(sub);
  }
  {
    auto* sub = app.add_subcommand("locus", "(rationally) singular locus of X(w)");
    add_common(sub);
    add_w(sub);
    sub->add_flag("--rational", q.rational, "rationally singular locus");
    sub->add_flag("--all", q.all, "list every singular point, not just maximal ones");
  }
  {
    auto* sub = app.add_subcommand("gkm-restrict", "restriction xi(w)|_x");
    add_common(sub);
    add_w(sub);
    add_x(sub);
  }
  {
    auto* sub = app.add_subcommand("gkm-verify", "verify congruences of Schubert classes");
    add_common(sub);
    sub->add_option("--w", *q.w_text, "verify only the class of X(w)");
  }
  {
    auto* sub = app.add_subcommand("gkm-mult", "product of two Schubert classes");
    add_common(sub);
    sub->add_option("--u", *q.u_text, "first factor")->required();
    sub->add_option("--v", *q.v_text, "second factor")->required();
    sub->add_flag("--ordinary", q.ordinary, "also specialize to ordinary coefficients");
  }
  {
    auto* sub = app.add_subcommand("scan", "stream (rationally) singular w");
    add_common(sub);
    sub->add_option("--predicate", q.predicate,
                    "singular (default), rationally-singular or all");
    sub->add_option("--max-length", *q.max_length, "scan w up to this length");
    sub->add_flag("--yes", q.yes, "skip the large-group guard");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  q.command = sub->get_name();
  // normalize the sentinel defaults
  if (q.max_length && *q.max_length == (1 << 20)) q.max_length.reset();
  if (q.w_text && q.w_text->empty()) q.w_text.reset();
  if (q.x_text && q.x_text->empty()) q.x_text.reset();
  if (q.u_text && q.u_text->empty()) q.u_text.reset();
  if (q.v_text && q.v_text->empty()) q.v_text.reset();

  return schubert::run(q, std::cout, std::cerr);
}
