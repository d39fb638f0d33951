#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "element.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "io.hpp"
#include "point.hpp"
#include "random_element.hpp"
#include "svg.hpp"
#include "torsion.hpp"

namespace nvcalc {
namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Element load_element(const std::string& path, bool validate = true) {
  return parse_element(slurp(path), validate);
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open file '" + out_path + "'");
  f << text;
}

}  // namespace detail

// Runs one CLI invocation against the given streams.  Exit codes: 0 for a
// completed command (including negative answers such as "not equal"), 1 for
// domain failures (invalid patterns, exhausted budgets, oversized searches,
// unopenable files), 2 for unusable input (malformed documents or arguments).
inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for block-pair elements of the Brin-Thompson groups nV\n"
               "and their finitely twisted variants"};
  app.require_subcommand(1);

  std::string file_a, file_b, out_path, point_text, twists_text;
  long long exponent = 0, bs_m = 0, bs_n = 0;
  long long max_power = 64, powers = 12, max_t = 8, cap = 2000000;
  std::size_t budget = 256;
  int max_blocks = 3, arity = 2, depth = 3;
  std::uint64_t seed = 1;
  bool no_reduce = false, witness = false;

  auto* validate = app.add_subcommand("validate", "check a document's patterns and report verdicts");
  validate->add_option("file", file_a)->required();

  auto* mul = app.add_subcommand("mul", "compose two elements (left applied first)");
  mul->add_option("left", file_a)->required();
  mul->add_option("right", file_b)->required();
  mul->add_option("-o,--output", out_path, "write result here instead of stdout");
  mul->add_flag("--no-reduce", no_reduce, "keep the raw composed presentation");

  auto* inv = app.add_subcommand("inv", "invert an element");
  inv->add_option("file", file_a)->required();
  inv->add_option("-o,--output", out_path);
  inv->add_flag("--no-reduce", no_reduce);

  auto* pw = app.add_subcommand("pow", "raise an element to an integer power");
  pw->add_option("file", file_a)->required();
  pw->add_option("exponent", exponent)->required();
  pw->add_option("-o,--output", out_path);
  pw->add_flag("--no-reduce", no_reduce, "compose without reducing between factors");

  auto* eq = app.add_subcommand("eq", "decide whether two documents define the same map");
  eq->add_option("left", file_a)->required();
  eq->add_option("right", file_b)->required();

  auto* order = app.add_subcommand("order", "exact order when it does not exceed the bound");
  order->add_option("file", file_a)->required();
  order->add_option("--max", max_power, "largest order to consider (default 64)");

  auto* certify = app.add_subcommand("certify-torsion", "find the first power reusing one pattern");
  certify->add_option("file", file_a)->required();
  certify->add_option("--max", max_power, "largest power to scan (default 64)");

  std::vector<std::string> gen_files;
  auto* clo = app.add_subcommand("closure", "close generators under products and inverses");
  clo->add_option("files", gen_files, "generator documents")->required();
  clo->add_option("--budget", budget, "largest closure size to accept (default 256)");
  clo->add_flag("--witness", witness, "also build a pattern the whole group permutes");

  auto* profile = app.add_subcommand("profile", "per-power growth table in CSV form");
  profile->add_option("file", file_a)->required();
  profile->add_option("--powers", powers, "number of powers to tabulate (default 12)");
  profile->add_option("-o,--output", out_path);

  auto* roots = app.add_subcommand("roots", "search for h with h^t equal to the input");
  roots->add_option("file", file_a)->required();
  roots->add_option("--max-blocks", max_blocks, "largest candidate block count (default 3)");
  roots->add_option("--max-t", max_t, "largest exponent tried (default 8)");
  roots->add_option("--cap", cap, "refuse searches over this many candidates");

  auto* bs = app.add_subcommand(
      "bs-check", "test the relation (a inverse) b^m a = b^n, factors applied left to right");
  bs->add_option("a", file_a)->required();
  bs->add_option("b", file_b)->required();
  bs->add_option("m", bs_m)->required();
  bs->add_option("n", bs_n)->required();

  auto* eval = app.add_subcommand("eval", "apply an element to a point of the Cantor cube");
  eval->add_option("file", file_a)->required();
  eval->add_option("--point", point_text, "per axis 'prefix:period', comma separated")->required();

  auto* render = app.add_subcommand("render", "draw an arity-2 element as side-by-side squares");
  render->add_option("file", file_a)->required();
  render->add_option("-o,--output", out_path);

  auto* rnd = app.add_subcommand("rand", "generate a reproducible pseudo-random element");
  rnd->add_option("--seed", seed, "generator seed (default 1)");
  rnd->add_option("--arity", arity, "cube dimension (default 2)");
  rnd->add_option("--depth", depth, "largest total block depth (default 3)");
  rnd->add_option("--twists", twists_text, "comma separated twist generators, e.g. '(1 2)'");
  rnd->add_option("-o,--output", out_path);

  std::vector<const char*> argv;
  argv.push_back("nvcalc");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) {
      const Element e = detail::load_element(file_a, false);
      const PatternCheck cd = validate_pattern(e.dom);
      const PatternCheck cr = validate_pattern(e.ran);
      out << "D: " << cd.to_string() << "\n";
      out << "R: " << cr.to_string() << "\n";
      return (cd.ok() && cr.ok()) ? 0 : 1;
    }

    if (app.got_subcommand(mul)) {
      Element r = compose(detail::load_element(file_a), detail::load_element(file_b));
      if (!no_reduce) r = reduce(r);
      detail::emit(serialize_element(r), out_path, out);
      return 0;
    }

    if (app.got_subcommand(inv)) {
      Element r = invert(detail::load_element(file_a));
      if (!no_reduce) r = reduce(r);
      detail::emit(serialize_element(r), out_path, out);
      return 0;
    }

    if (app.got_subcommand(pw)) {
      const Element r = power(detail::load_element(file_a), exponent, !no_reduce);
      detail::emit(serialize_element(r), out_path, out);
      return 0;
    }

    if (app.got_subcommand(eq)) {
      out << (equals(detail::load_element(file_a), detail::load_element(file_b)) ? "equal"
                                                                                 : "not equal")
          << "\n";
      return 0;
    }

    if (app.got_subcommand(order)) {
      const auto n = order_up_to(detail::load_element(file_a), max_power);
      if (n) {
        out << "order " << *n << "\n";
      } else {
        out << "unknown(" << max_power << ")\n";
      }
      return 0;
    }

    if (app.got_subcommand(certify)) {
      const auto cert = torsion_certificate(detail::load_element(file_a), max_power);
      if (!cert) {
        out << "no-certificate(" << max_power << ")\n";
        return 0;
      }
      out << "certificate power " << cert->power_k << "\n";
      out << "pattern blocks " << cert->pattern.blocks.size() << "\n";
      out << "order-bound " << cert->order_bound << "\n";
      out << "first-segment-match " << cert->first_segment_match << "\n";
      for (std::size_t i = 0; i < cert->pattern.blocks.size(); ++i) {
        out << "block " << i << " : " << detail::address_text(cert->pattern.blocks[i]) << " -> "
            << cert->rigid_perm[i];
        if (!cert->rigid_twists[i].is_identity()) {
          out << " twist " << cert->rigid_twists[i].to_cycle_string();
        }
        out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(clo)) {
      std::vector<Element> gens;
      for (const auto& f : gen_files) gens.push_back(detail::load_element(f));
      if (witness) {
        const SameVWitness w = same_v_witness(gens, budget);
        out << "closure size " << w.group.elements.size() << "\n";
        out << "witness blocks " << w.witness.blocks.size() << "\n";
        for (const auto& b : w.witness.blocks) {
          out << "witness block : " << detail::address_text(b) << "\n";
        }
        return 0;
      }
      const ClosureResult r = closure(gens, budget);
      if (!r.group) {
        out << "budget-exceeded(" << r.size_reached << ")\n";
        return 1;
      }
      out << "closure size " << r.group->elements.size() << "\n";
      return 0;
    }

    if (app.got_subcommand(profile)) {
      const auto rows = power_profile(detail::load_element(file_a), powers);
      detail::emit(profile_csv(rows), out_path, out);
      return 0;
    }

    if (app.got_subcommand(roots)) {
      const Element g = detail::load_element(file_a);
      const auto hits = root_search(g, max_blocks, max_t, cap);
      if (hits.empty()) {
        out << "none-found(" << max_blocks << "," << max_t << ")\n";
        return 0;
      }
      out << "roots found " << hits.size() << "\n";
      for (const auto& h : hits) {
        out << "t " << h.t << "\n";
        out << serialize_element(h.root);
      }
      return 0;
    }

    if (app.got_subcommand(bs)) {
      out << (bs_relation_check(detail::load_element(file_a), detail::load_element(file_b), bs_m,
                                bs_n)
                  ? "holds"
                  : "fails")
          << "\n";
      return 0;
    }

    if (app.got_subcommand(eval)) {
      const Element e = detail::load_element(file_a);
      const CantorPoint x = parse_point(point_text, e.arity);
      out << format_point(apply(e, x)) << "\n";
      return 0;
    }

    if (app.got_subcommand(render)) {
      detail::emit(render_svg(detail::load_element(file_a)), out_path, out);
      return 0;
    }

    if (app.got_subcommand(rnd)) {
      std::vector<CoordPerm> gens;
      if (!twists_text.empty()) {
        for (const auto& part : detail::split_on(twists_text, ',')) {
          gens.push_back(parse_cycles(part, arity));
        }
      }
      detail::emit(serialize_element(random_element(seed, arity, depth, gens)), out_path, out);
      return 0;
    }
  } catch (const parse_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const budget_exceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const enumeration_too_large& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nvcalc
