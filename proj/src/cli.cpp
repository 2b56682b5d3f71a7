#include "symrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symrep/admissible.hpp"
#include "symrep/bounds.hpp"
#include "symrep/errors.hpp"
#include "symrep/induction.hpp"
#include "symrep/json_io.hpp"
#include "symrep/orbits.hpp"
#include "symrep/tableaux.hpp"

namespace symrep {

namespace {

constexpr int iset_weight_limit = 25;

struct Context {
  bool json = false;
  Limits limits;
  std::ostream* out = nullptr;
};

void emit_value(const Context& ctx, const Json& inputs, const Natural& value) {
  if (ctx.json) {
    Json j = inputs;
    j["value"] = to_decimal(value);
    *ctx.out << dump(j);
  } else {
    *ctx.out << value << "\n";
  }
}

void emit_decomposition(const Context& ctx, const Decomposition& d) {
  if (ctx.json) {
    *ctx.out << dump(to_json(d));
  } else {
    *ctx.out << to_string(d) << "\n";
  }
}

void emit_report(const Context& ctx, const BoundReport& r) {
  if (ctx.json) {
    *ctx.out << dump(to_json(r));
    return;
  }
  auto& o = *ctx.out;
  o << "theorem: " << tag(r.theorem) << "\n";
  if (r.target) o << "target: " << to_string(*r.target) << "\n";
  if (r.excluded) {
    o << "excluded: yes (target outside the admissible set, multiplicity is 0)\n";
  } else {
    o << "value: " << r.value << "\n";
  }
  o << "asymptotic: " << r.asymptotic_note << "\n";
}

Partition partition_arg(const std::string& text) { return parse_partition(text); }

std::vector<int> tuple_arg(const std::string& text) { return parse_int_tuple(text); }

std::vector<int> widen(std::vector<int> v, std::size_t arity, const char* name) {
  if (v.size() == 1 && arity > 1) v.assign(arity, v.front());
  if (v.size() != arity) {
    throw DomainError(std::string(name) + " must have the same arity as k");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void refuse_if_over(const Natural& count, const Context& ctx, const std::string& what) {
  if (count > ctx.limits.enumeration_cap) {
    throw CapExceeded(what + " has " + to_decimal(count) + " entries, above the cap of " +
                          std::to_string(ctx.limits.enumeration_cap),
                      ctx.limits.enumeration_cap);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact representation combinatorics of symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.out = &out;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", ctx.limits.enumeration_cap, "Enumeration cap")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--workers", ctx.limits.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::function<void()> action;

  // partitions
  int part_k = 0;
  std::optional<int> max_len;
  auto* partitions = app.add_subcommand("partitions", "Partitions of k in canonical order");
  partitions->add_option("k", part_k)->required()->check(CLI::NonNegativeNumber);
  partitions->add_option("--max-len", max_len, "Largest allowed length")
      ->check(CLI::NonNegativeNumber);
  partitions->callback([&] {
    action = [&] {
      refuse_if_over(count_partitions(part_k, max_len), ctx, "the partition list");
      const auto list = enumerate_partitions(part_k, max_len);
      if (ctx.json) {
        out << dump(to_json(list));
      } else {
        for (const auto& p : list) out << to_string(p) << "\n";
      }
    };
  });

  // dim
  std::string dim_lambda;
  auto* dim = app.add_subcommand("dim", "Dimension of the Specht module");
  dim->add_option("lambda", dim_lambda)->required();
  dim->callback([&] {
    action = [&] {
      const Partition lambda = partition_arg(dim_lambda);
      emit_value(ctx, Json{{"lambda", to_string(lambda)}}, specht_dim(lambda));
    };
  });

  // kostka
  std::string kostka_shape, kostka_content;
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K(mu, lambda)");
  kostka_cmd->add_option("mu", kostka_shape)->required();
  kostka_cmd->add_option("lambda", kostka_content)->required();
  kostka_cmd->callback([&] {
    action = [&] {
      const Partition mu = partition_arg(kostka_shape);
      const Partition lambda = partition_arg(kostka_content);
      emit_value(ctx, Json{{"mu", to_string(mu)}, {"lambda", to_string(lambda)}},
                 kostka(mu, lambda));
    };
  });

  // lr
  std::string lr_nu, lr_lambda, lr_mu;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}");
  lr->add_option("nu", lr_nu)->required();
  lr->add_option("lambda", lr_lambda)->required();
  lr->add_option("mu", lr_mu)->required();
  lr->callback([&] {
    action = [&] {
      const Partition nu = partition_arg(lr_nu);
      const Partition lambda = partition_arg(lr_lambda);
      const Partition mu = partition_arg(lr_mu);
      emit_value(ctx,
                 Json{{"nu", to_string(nu)}, {"lambda", to_string(lambda)}, {"mu", to_string(mu)}},
                 lr_coefficient(nu, lambda, mu));
    };
  });

  // young
  std::string young_lambda;
  auto* young = app.add_subcommand("young", "Decomposition of the Young module M^lambda");
  young->add_option("lambda", young_lambda)->required();
  young->callback([&] {
    action = [&] { emit_decomposition(ctx, young_module(partition_arg(young_lambda))); };
  });

  // split-mult, split-module
  std::string sm_mu, sm_trivial, sm_sign;
  auto* split_mult = app.add_subcommand("split-mult", "Split multiplicity of mu");
  split_mult->add_option("mu", sm_mu)->required();
  split_mult->add_option("trivial", sm_trivial, "lambda'")->required();
  split_mult->add_option("sign", sm_sign, "lambda''")->required();
  split_mult->callback([&] {
    action = [&] {
      const Partition mu = partition_arg(sm_mu);
      const Partition trivial = partition_arg(sm_trivial);
      const Partition sign = partition_arg(sm_sign);
      emit_value(ctx,
                 Json{{"mu", to_string(mu)},
                      {"trivial", to_string(trivial)},
                      {"sign", to_string(sign)}},
                 split_multiplicity(mu, trivial, sign));
    };
  });
  std::string smod_trivial, smod_sign;
  auto* split_mod = app.add_subcommand("split-module", "Module induced from a split");
  split_mod->add_option("trivial", smod_trivial, "lambda'")->required();
  split_mod->add_option("sign", smod_sign, "lambda''")->required();
  split_mod->callback([&] {
    action = [&] {
      emit_decomposition(ctx, split_module(partition_arg(smod_trivial), partition_arg(smod_sign)));
    };
  });

  // iset
  std::string iset_k, iset_d, iset_m, iset_member;
  bool iset_enumerate = false;
  auto* iset = app.add_subcommand("iset", "Admissible set I(k, d, m)");
  iset->add_option("k", iset_k)->required();
  iset->add_option("d", iset_d)->required();
  iset->add_option("m", iset_m)->required();
  auto* enum_flag = iset->add_flag("--enumerate", iset_enumerate, "List the members");
  iset->add_option("--member", iset_member, "Test membership of mu")->excludes(enum_flag);
  iset->callback([&] {
    action = [&] {
      const auto weights = tuple_arg(iset_k);
      const auto degrees = widen(tuple_arg(iset_d), weights.size(), "d");
      const auto widths = widen(tuple_arg(iset_m), weights.size(), "m");
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > iset_weight_limit) {
          throw CapExceeded("refusing k = " + std::to_string(weights[i]) + " > " +
                                std::to_string(iset_weight_limit) +
                                "; the restriction filter alone leaves " +
                                to_decimal(restriction_outer_count(weights[i], degrees[i],
                                                                   widths[i])) +
                                " candidate partitions",
                            ctx.limits.enumeration_cap);
        }
      }
      if (!iset_member.empty()) {
        const PartitionTuple mu = parse_partition_tuple(iset_member);
        const bool member = is_admissible(mu, weights, degrees, widths, ctx.limits);
        if (ctx.json) {
          out << dump(Json{{"mu", to_string(mu)}, {"member", member}});
        } else {
          out << (member ? "member" : "not a member") << "\n";
        }
        return;
      }
      const AdmissibleSet set = admissible_set_tuple(weights, degrees, widths, ctx.limits);
      if (iset_enumerate) {
        const auto members = set.members(ctx.limits);
        if (ctx.json) {
          out << dump(to_json(members));
        } else {
          for (const auto& mu : members) out << to_string(mu) << "\n";
        }
        return;
      }
      emit_value(ctx, Json{{"k", iset_k}, {"d", iset_d}, {"m", iset_m}}, set.size());
    };
  });

  // bound
  std::string bound_kind, bound_k, bound_m = "1", bound_mu, letters = "stated";
  int bound_d = 1;
  std::optional<int> bound_s, bound_degree;
  auto* bound = app.add_subcommand("bound", "Evaluate a multiplicity or Betti bound exactly");
  bound->add_option("kind", bound_kind)
      ->required()
      ->check(CLI::IsMember({"affine", "sa", "complex", "projective", "equivariant", "projection"}));
  bound->add_option("--k", bound_k, "Letter counts, e.g. 4 or 2,3")->required();
  bound->add_option("--m", bound_m, "Block widths (default 1)");
  bound->add_option("--d", bound_d, "Degree bound")->check(CLI::PositiveNumber);
  bound->add_option("--s", bound_s, "Number of polynomials (sa only)");
  bound->add_option("--mu", bound_mu, "Target representation");
  bound->add_option("--letters", letters, "Projective letter count")
      ->check(CLI::IsMember({"stated", "homogeneous"}));
  bound->add_option("--degree", bound_degree, "Cohomological degree (projective only)");
  bound->callback([&] {
    action = [&] {
      const BoundKind kind = parse_bound_kind(bound_kind);
      BoundParams params;
      params.k = tuple_arg(bound_k);
      params.m = widen(tuple_arg(bound_m), params.k.size(), "m");
      params.d = bound_d;
      params.s = bound_s;
      const bool needs_mu = kind != BoundKind::equivariant && kind != BoundKind::projection;
      if (needs_mu && bound_mu.empty()) throw ParseError("bound " + bound_kind + " needs --mu", 0);
      auto scalar = [&](const std::vector<int>& v, const char* name) {
        if (v.size() != 1) throw DomainError(std::string(name) + " must be a single integer here");
        return v.front();
      };
      BoundReport r;
      switch (kind) {
        case BoundKind::affine:
          r = affine_multiplicity_bound(parse_partition_tuple(bound_mu), params, ctx.limits);
          break;
        case BoundKind::semialgebraic:
          r = sa_multiplicity_bound(parse_partition_tuple(bound_mu), params, ctx.limits);
          break;
        case BoundKind::complex:
          r = complex_multiplicity_bound(parse_partition_tuple(bound_mu), params, ctx.limits);
          break;
        case BoundKind::projective:
          r = projective_multiplicity_bound(
              parse_partition(bound_mu), scalar(params.k, "k"), params.d,
              letters == "stated" ? ProjectiveReading::as_stated : ProjectiveReading::homogeneous,
              bound_degree, ctx.limits);
          break;
        case BoundKind::equivariant:
          r = equivariant_bound(params.k, params.m, params.d, ctx.limits);
          break;
        case BoundKind::projection:
          r = projection_image_bound(scalar(params.k, "k"), scalar(params.m, "m"), params.d,
                                     ctx.limits);
          break;
      }
      emit_report(ctx, r);
    };
  });

  // example
  int example_k = 0;
  bool example_top = false, example_identity = false;
  auto* example = app.add_subcommand("example", "H^0 of the symmetric example set in R^k");
  example->add_option("k", example_k)->required();
  example->add_flag("--top", example_top, "Sign-twisted top-degree decomposition instead");
  example->add_flag("--verify-identity", example_identity, "Also check the 2^k identity");
  example->callback([&] {
    action = [&] {
      Decomposition d = h0_decomposition(example_variety(example_k));
      if (example_top) d = top_cohomology(d);
      std::optional<PowerIdentity> identity;
      if (example_identity) identity = verify_power_identity(example_k);
      if (ctx.json) {
        Json j = Json::object();
        j["k"] = std::to_string(example_k);
        j[example_top ? "top" : "h0"] = to_json(d);
        if (identity) {
          j["identity"] = Json{{"lhs", to_decimal(identity->lhs)},
                               {"rhs", to_decimal(identity->rhs)},
                               {"holds", identity->holds}};
        }
        out << dump(j);
        return;
      }
      out << to_string(d) << "\n";
      if (identity) {
        out << "identity: " << identity->lhs << (identity->holds ? " = " : " != ")
            << identity->rhs << "\n";
      }
    };
  });

  // mv-check
  std::string mv_first, mv_second;
  auto* mv = app.add_subcommand("mv-check", "Mayer-Vietoris inequality for two orbit specs");
  mv->add_option("first", mv_first, "OrbitSpec JSON file")->required();
  mv->add_option("second", mv_second, "OrbitSpec JSON file")->required();
  mv->callback([&] {
    action = [&] {
      const OrbitSpec a = orbit_spec_from_json(parse_json(read_file(mv_first)));
      const OrbitSpec b = orbit_spec_from_json(parse_json(read_file(mv_second)));
      const auto d1 = h0_decomposition(a);
      const auto d2 = h0_decomposition(b);
      const auto du = h0_decomposition(orbit_union(a, b));
      const auto di = h0_decomposition(orbit_intersection(a, b));
      const auto bad = mv_violations(d1, d2, du, di);
      if (ctx.json) {
        Json j = Json::object();
        j["holds"] = bad.empty();
        j["first"] = to_json(d1);
        j["second"] = to_json(d2);
        j["union"] = to_json(du);
        j["intersection"] = to_json(di);
        j["violations"] = to_json(bad);
        out << dump(j);
        return;
      }
      out << "first: " << to_string(d1) << "\n"
          << "second: " << to_string(d2) << "\n"
          << "union: " << to_string(du) << "\n"
          << "intersection: " << to_string(di) << "\n";
      if (bad.empty()) {
        out << "holds\n";
      } else {
        out << "fails at";
        for (const auto& key : bad) out << " " << to_string(key);
        out << "\n";
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse_error;
  }
  ctx.json = format == "json";

  try {
    if (action) action();
    return exit_ok;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return exit_cap_exceeded;
  }
}

}  // namespace symrep
