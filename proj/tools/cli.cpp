#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mgh/corpus.hpp"
#include "mgh/errors.hpp"
#include "mgh/serialization.hpp"
#include "mgh/systems.hpp"

namespace mgh::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

std::size_t gh_size_limit() {
  if (const char* env = std::getenv("MGH_GH_SIZE_LIMIT")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return kGhDefaultSizeLimit;
}

std::vector<std::size_t> parse_csv_indices(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    long v = std::stol(item);
    if (v < 0) throw InputError("indices must be nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<Rational> parse_csv_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

struct Options {
  std::string format = "table";
  long seed = 0;  // reserved for randomized helper subcommands
  std::string command_echo;
};

// Human rendering: the echoed command line, then one "key: value" line per
// top-level field with nested JSON compact. The --format json path emits the
// schema payload verbatim so it re-parses under the documented schemas.
void render(const Json& payload, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << payload.dump(2) << "\n";
    return;
  }
  out << "command: " << opt.command_echo << "\n";
  for (const auto& [key, value] : payload.items()) {
    if (value.is_string())
      out << key << ": " << value.get<std::string>() << "\n";
    else
      out << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite metric spaces: isometry derivatives, Gromov-Hausdorff "
               "distances, orders, metric groups and categorical limits"};
  app.require_subcommand(1);

  Options opt;
  for (const auto& a : args) opt.command_echo += (opt.command_echo.empty() ? "" : " ") + a;
  app.add_option("--format", opt.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized helper subcommands");

  // Deferred handlers so all parsing happens before any work.
  std::function<int()> action;

  // --- validate ------------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "check metric space or group axioms");
  {
    auto in = std::make_shared<std::string>();
    auto as_group = std::make_shared<bool>(false);
    validate_cmd->add_option("--in", *in, "input JSON file")->required();
    validate_cmd->add_flag("--group", *as_group, "validate a metric group");
    validate_cmd->callback([&, in, as_group] {
      action = [&, in, as_group] {
        Json j = load_json(*in);
        try {
          Json payload;
          if (*as_group) {
            FiniteMetricGroup g = group_from_json(j);
            payload = Json{{"valid", true}, {"kind", "group"}, {"size", g.size()},
                           {"bi_invariant", is_bi_invariant(g)}};
          } else {
            FiniteMetricSpace x = space_from_json(j);
            payload = Json{{"valid", true}, {"kind", "space"}, {"size", x.size()},
                           {"diameter", diameter(x).str()}};
          }
          render(payload, opt, out);
          return kOk;
        } catch (const ValidationError& e) {
          render(Json{{"valid", false}, {"error", e.what()}}, opt, out);
          return kNegative;
        }
      };
    });
  }

  // --- isogroup / orbits ----------------------------------------------------
  auto* isogroup_cmd = app.add_subcommand("isogroup", "enumerate the isometry group");
  {
    auto in = std::make_shared<std::string>();
    isogroup_cmd->add_option("--in", *in, "space JSON file")->required();
    isogroup_cmd->callback([&, in] {
      action = [&, in] {
        render(isometry_group_to_json(isometry_group(space_from_json(load_json(*in)))),
               opt, out);
        return kOk;
      };
    });
  }

  auto* orbits_cmd = app.add_subcommand("orbits", "isometry orbit partition");
  {
    auto in = std::make_shared<std::string>();
    orbits_cmd->add_option("--in", *in, "space JSON file")->required();
    orbits_cmd->callback([&, in] {
      action = [&, in] {
        render(orbits_to_json(iso_orbits(isometry_group(space_from_json(load_json(*in))))),
               opt, out);
        return kOk;
      };
    });
  }

  // --- derive / iht ----------------------------------------------------------
  auto* derive_cmd = app.add_subcommand("derive", "iso-derivative (or alpha-derivative)");
  {
    auto in = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    derive_cmd->add_option("--in", *in, "space JSON file")->required();
    derive_cmd->add_option("--alpha", *alpha, "alpha spec JSON file");
    derive_cmd->callback([&, in, alpha] {
      action = [&, in, alpha] {
        FiniteMetricSpace x = space_from_json(load_json(*in));
        DerivativeResult d = alpha->empty()
                                 ? iso_derivative(x)
                                 : alpha_derivative(x, alpha_spec_from_json(load_json(*alpha)));
        render(derivative_to_json(d), opt, out);
        return kOk;
      };
    });
  }

  auto* iht_cmd = app.add_subcommand("iht", "iso-height and the derivative tower");
  {
    auto in = std::make_shared<std::string>();
    iht_cmd->add_option("--in", *in, "space JSON file")->required();
    iht_cmd->callback([&, in] {
      action = [&, in] {
        render(iht_to_json(iso_height(space_from_json(load_json(*in)))), opt, out);
        return kOk;
      };
    });
  }

  // --- gh ---------------------------------------------------------------------
  auto* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff distance and certificates");
  {
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto seq = std::make_shared<std::string>();
    auto tol = std::make_shared<std::string>("1/10");
    auto window = std::make_shared<std::size_t>(3);
    auto exact = std::make_shared<bool>(false);
    auto bounds = std::make_shared<bool>(false);
    auto certify = std::make_shared<bool>(false);
    gh_cmd->add_flag("--exact", *exact, "exact distance (small spaces)");
    gh_cmd->add_flag("--bounds", *bounds, "certified lower/upper bracket");
    gh_cmd->add_flag("--certify", *certify, "convergence certificate over a sequence");
    gh_cmd->add_option("--a", *a, "first space JSON file");
    gh_cmd->add_option("--b", *b, "second space JSON file");
    gh_cmd->add_option("--seq", *seq, "family JSON file ({\"spaces\": [...]})");
    gh_cmd->add_option("--tol", *tol, "tolerance (rational)");
    gh_cmd->add_option("--window", *window, "certificate window");
    gh_cmd->callback([&, a, b, seq, tol, window, exact, bounds, certify] {
      action = [&, a, b, seq, tol, window, exact, bounds, certify] {
        if (*certify) {
          if (seq->empty()) throw InputError("gh --certify needs --seq");
          auto spaces = family_from_json(load_json(*seq));
          ConvergenceReport rep = gh_convergence_certificate(
              [&](std::size_t n) { return spaces[n - 1]; }, spaces.size(),
              Rational::parse(*tol), *window, gh_size_limit());
          render(convergence_report_to_json(rep), opt, out);
          return rep.certified ? kOk : kNegative;
        }
        if (a->empty() || b->empty()) throw InputError("gh needs --a and --b");
        FiniteMetricSpace xa = space_from_json(load_json(*a));
        FiniteMetricSpace xb = space_from_json(load_json(*b));
        GhEstimate est = *bounds && !*exact ? gh_bounds(xa, xb)
                                            : gh_exact(xa, xb, gh_size_limit());
        render(gh_estimate_to_json(est), opt, out);
        return kOk;
      };
    });
  }

  // --- order -------------------------------------------------------------------
  auto* order_cmd = app.add_subcommand(
      "order", "decide X rel Y; --from holds the upper space Y, --to the lower space X");
  {
    auto rel = std::make_shared<std::string>();
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    order_cmd->add_option("--rel", *rel, "relation")
        ->required()
        ->check(CLI::IsMember({"preceq", "preceq_s", "preceq_i"}));
    order_cmd->add_option("--from", *from, "upper space Y (witness source for preceq)")
        ->required();
    order_cmd->add_option("--to", *to, "lower space X")->required();
    order_cmd->callback([&, rel, from, to] {
      action = [&, rel, from, to] {
        FiniteMetricSpace y = space_from_json(load_json(*from));
        FiniteMetricSpace x = space_from_json(load_json(*to));
        OrderRelation r = *rel == "preceq"     ? OrderRelation::preceq
                          : *rel == "preceq_s" ? OrderRelation::preceq_s
                                               : OrderRelation::preceq_i;
        OrderVerdict v = decide_order(r, x, y);
        render(order_verdict_to_json(v), opt, out);
        return v.holds ? kOk : kNegative;
      };
    });
  }

  // --- compactness / superspace ---------------------------------------------------
  auto* compact_cmd = app.add_subcommand("compactness", "epsilon-net report for a family");
  {
    auto family = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    compact_cmd->add_option("--family", *family, "family JSON file")->required();
    compact_cmd->add_option("--eps", *eps, "comma-separated epsilons")->required();
    compact_cmd->callback([&, family, eps] {
      action = [&, family, eps] {
        auto spaces = family_from_json(load_json(*family));
        render(compactness_report_to_json(uniform_compactness(spaces, parse_csv_rationals(*eps))),
               opt, out);
        return kOk;
      };
    });
  }

  auto* super_cmd = app.add_subcommand("superspace", "common superspace for a family");
  {
    auto family = std::make_shared<std::string>();
    super_cmd->add_option("--family", *family, "family JSON file")->required();
    super_cmd->callback([&, family] {
      action = [&, family] {
        render(superspace_to_json(common_superspace(family_from_json(load_json(*family)))),
               opt, out);
        return kOk;
      };
    });
  }

  // --- group ------------------------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "metric group computations");
  group_cmd->require_subcommand(1);
  {
    auto* hat = group_cmd->add_subcommand("hat", "smallest bi-invariant metric above d");
    auto hat_in = std::make_shared<std::string>();
    hat->add_option("--in", *hat_in, "group JSON file")->required();
    hat->callback([&, hat_in] {
      action = [&, hat_in] {
        FiniteMetricGroup g = group_from_json(load_json(*hat_in));
        HatMetricResult r = hat_metric(g);
        render(Json{{"hat", matrix_to_json(r.hat.dist_matrix())},
                    {"equals_input", r.hat.dist_matrix() == g.metric().dist_matrix()},
                    {"bi_invariant_input", is_bi_invariant(g)}},
               opt, out);
        return kOk;
      };
    });

    auto* hom = group_cmd->add_subcommand("check-hom", "verify a homomorphism and its flags");
    auto hom_from = std::make_shared<std::string>();
    auto hom_to = std::make_shared<std::string>();
    auto hom_map = std::make_shared<std::string>();
    auto hom_name = std::make_shared<std::string>();
    auto hom_bond = std::make_shared<std::size_t>(1);
    hom->add_option("--from", *hom_from, "source group JSON file");
    hom->add_option("--to", *hom_to, "target group JSON file");
    hom->add_option("--map", *hom_map, "comma-separated image indices");
    hom->add_option("--name", *hom_name, "corpus bond system (e.g. z2n_system)");
    hom->add_option("--bond", *hom_bond, "1-based bond index within --name");
    hom->callback([&, hom_from, hom_to, hom_map, hom_name, hom_bond] {
      action = [&, hom_from, hom_to, hom_map, hom_name, hom_bond] {
        std::optional<FiniteMetricGroup> gsrc, gdst;
        std::vector<std::size_t> image;
        if (!hom_name->empty()) {
          CorpusObject obj = build_example(*hom_name, Json::object());
          const auto* sys = std::get_if<GroupBondSystem>(&obj);
          if (!sys) throw InputError("--name must denote a group bond system");
          if (*hom_bond < 1 || *hom_bond > sys->bonds.size())
            throw InputError("bond index out of range");
          gsrc = sys->groups[*hom_bond];      // bond maps groups[k] <- groups[k+1]
          gdst = sys->groups[*hom_bond - 1];
          image = sys->bonds[*hom_bond - 1];
        } else {
          if (hom_from->empty() || hom_to->empty() || hom_map->empty())
            throw InputError("check-hom needs --from, --to and --map (or --name)");
          gsrc = group_from_json(load_json(*hom_from));
          gdst = group_from_json(load_json(*hom_to));
          image = parse_csv_indices(*hom_map);
        }
        try {
          GroupHom h = check_hom(image, *gsrc, *gdst);
          bool hat_ok = h.non_expansive && h.surjective ? hat_lemma_check(h) : false;
          Json payload = group_hom_to_json(h);
          payload["is_homomorphism"] = true;
          if (h.non_expansive && h.surjective) payload["hat_lemma"] = hat_ok;
          render(payload, opt, out);
          return kOk;
        } catch (const NotHomomorphismError& e) {
          render(Json{{"is_homomorphism", false},
                      {"witness", Json{e.g1, e.g2}},
                      {"error", e.what()}},
                 opt, out);
          return kNegative;
        }
      };
    });

    auto* floor = group_cmd->add_subcommand("floor", "greatest left-invariant pseudometric");
    auto floor_in = std::make_shared<std::string>();
    auto floor_c = std::make_shared<std::string>();
    floor->add_option("--in", *floor_in, "group JSON file")->required();
    floor->add_option("--constraint", *floor_c, "cost matrix JSON file")->required();
    floor->callback([&, floor_in, floor_c] {
      action = [&, floor_in, floor_c] {
        FiniteMetricGroup g = group_from_json(load_json(*floor_in));
        PseudometricMatrix p = left_invariant_floor(g, matrix_from_json(load_json(*floor_c)));
        render(Json{{"floor", matrix_to_json(p.dist_matrix())}}, opt, out);
        return kOk;
      };
    });

    auto* quot = group_cmd->add_subcommand("quotient", "quotient by the zero set of p");
    auto quot_in = std::make_shared<std::string>();
    auto quot_p = std::make_shared<std::string>();
    quot->add_option("--in", *quot_in, "group JSON file")->required();
    quot->add_option("--p", *quot_p, "pseudometric matrix JSON file")->required();
    quot->callback([&, quot_in, quot_p] {
      action = [&, quot_in, quot_p] {
        FiniteMetricGroup g = group_from_json(load_json(*quot_in));
        PseudometricMatrix p = validate_pseudometric(matrix_from_json(load_json(*quot_p)));
        render(quotient_group_to_json(group_quotient_metric(g, p)), opt, out);
        return kOk;
      };
    });

    auto* limit = group_cmd->add_subcommand("limit", "inductive limit pipeline");
    auto limit_in = std::make_shared<std::string>();
    auto limit_name = std::make_shared<std::string>();
    limit->add_option("--in", *limit_in, "group system JSON file");
    limit->add_option("--name", *limit_name, "corpus group system (s3, z2_system)");
    limit->callback([&, limit_in, limit_name] {
      action = [&, limit_in, limit_name] {
        GroupSystemInput sys;
        if (!limit_name->empty()) {
          CorpusObject obj = build_example(*limit_name, Json::object());
          const auto* g = std::get_if<GroupSystemInput>(&obj);
          if (!g) throw InputError("--name must denote a group system");
          sys = *g;
        } else if (!limit_in->empty()) {
          sys = group_system_from_json(load_json(*limit_in));
        } else {
          throw InputError("group limit needs --in or --name");
        }
        GroupLimitResult r = group_inductive_limit(sys);
        render(group_limit_to_json(r), opt, out);
        return r.exact ? kOk : kNegative;
      };
    });
  }

  // --- system ----------------------------------------------------------------------
  auto* system_cmd = app.add_subcommand("system", "direct and inverse systems");
  system_cmd->require_subcommand(1);
  {
    auto add_input = [](CLI::App* cmd, std::shared_ptr<std::string> in,
                        std::shared_ptr<std::string> name) {
      cmd->add_option("--in", *in, "system JSON file");
      cmd->add_option("--name", *name, "corpus system (discrete_segment_system)");
    };
    auto load_system = [](const std::string& in, const std::string& name) {
      if (!name.empty()) {
        CorpusObject obj = build_example(name, Json::object());
        const auto* s = std::get_if<SystemDescription>(&obj);
        if (!s) throw InputError("--name must denote a space system");
        return *s;
      }
      if (in.empty()) throw InputError("system subcommands need --in or --name");
      return system_from_json(load_json(in));
    };

    auto* val = system_cmd->add_subcommand("validate", "verify bonds and coherence");
    auto val_in = std::make_shared<std::string>();
    auto val_name = std::make_shared<std::string>();
    add_input(val, val_in, val_name);
    val->callback([&, val_in, val_name, load_system] {
      action = [&, val_in, val_name, load_system] {
        SystemDescription s = load_system(*val_in, *val_name);
        std::size_t bonds = 0;
        if (s.kind == "direct")
          bonds = validate_direct_system(s.spaces, s.bonds).bonds.size();
        else
          bonds = validate_inverse_system(s.spaces, s.bonds).bonds.size();
        render(Json{{"valid", true}, {"kind", s.kind}, {"spaces", s.spaces.size()},
                    {"bonds", bonds}},
               opt, out);
        return kOk;
      };
    });

    auto* lim = system_cmd->add_subcommand("limit", "limit object approximation");
    auto lim_in = std::make_shared<std::string>();
    auto lim_name = std::make_shared<std::string>();
    auto lim_tol = std::make_shared<std::string>("1/10");
    auto lim_window = std::make_shared<std::size_t>(3);
    add_input(lim, lim_in, lim_name);
    lim->add_option("--tol", *lim_tol, "tolerance (rational)");
    lim->add_option("--window", *lim_window, "certificate window");
    lim->callback([&, lim_in, lim_name, lim_tol, lim_window, load_system] {
      action = [&, lim_in, lim_name, lim_tol, lim_window, load_system] {
        SystemDescription s = load_system(*lim_in, *lim_name);
        LimitApproximation res;
        if (s.kind == "direct")
          res = direct_limit_approx(validate_direct_system(s.spaces, s.bonds),
                                    Rational::parse(*lim_tol), *lim_window);
        else
          res = inverse_limit_approx(validate_inverse_system(s.spaces, s.bonds),
                                     Rational::parse(*lim_tol), *lim_window, s.growth);
        render(limit_approximation_to_json(res), opt, out);
        return res.status == LimitApproximation::Status::exact ||
                       res.status == LimitApproximation::Status::certified
                   ? kOk
                   : kNegative;
      };
    });

    auto* ex = system_cmd->add_subcommand("exists", "inverse limit existence criterion");
    auto ex_in = std::make_shared<std::string>();
    auto ex_name = std::make_shared<std::string>();
    add_input(ex, ex_in, ex_name);
    ex->callback([&, ex_in, ex_name, load_system] {
      action = [&, ex_in, ex_name, load_system] {
        SystemDescription s = load_system(*ex_in, *ex_name);
        if (s.kind != "inverse") throw InputError("exists applies to inverse systems");
        validate_inverse_system(s.spaces, s.bonds);
        InverseLimitVerdict v = inverse_limit_exists(s.spaces, s.growth);
        render(inverse_limit_verdict_to_json(v), opt, out);
        return v.exists ? kOk : kNegative;
      };
    });
  }

  // --- example -----------------------------------------------------------------------
  auto* example_cmd = app.add_subcommand("example", "emit a corpus object");
  {
    auto name = std::make_shared<std::string>();
    auto params = std::make_shared<std::string>("{}");
    auto out_file = std::make_shared<std::string>();
    auto list = std::make_shared<bool>(false);
    example_cmd->add_option("--name", *name, "corpus entry name");
    example_cmd->add_option("--params", *params, "JSON parameter object");
    example_cmd->add_option("--out", *out_file, "write to file instead of stdout");
    example_cmd->add_flag("--list", *list, "list registered names");
    example_cmd->callback([&, name, params, out_file, list] {
      action = [&, name, params, out_file, list] {
        if (*list) {
          render(Json{{"examples", corpus_names()}}, opt, out);
          return kOk;
        }
        if (name->empty()) throw InputError("example needs --name (or --list)");
        Json payload = corpus_object_to_json(build_example(*name, Json::parse(*params)));
        if (!out_file->empty()) {
          std::ofstream f(*out_file);
          if (!f) throw InputError("cannot write '" + *out_file + "'");
          f << payload.dump(2) << "\n";
          render(Json{{"written", *out_file}}, opt, out);
        } else {
          out << payload.dump(2) << "\n";
        }
        return kOk;
      };
    });
  }

  // Let trailing global options (--format, --seed) reach the parent from
  // any subcommand position.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace mgh::cli
