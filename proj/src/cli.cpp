#include "sigvar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "sigvar/io.hpp"
#include "sigvar/lyndon.hpp"
#include "sigvar/signature.hpp"
#include "sigvar/varieties.hpp"

namespace sigvar {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SIGVAR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("SIGVAR_SEED is not an unsigned integer: ") + env);
    }
  }
  return CliConfig{}.seed;
}

TablePtr table_from_list(const std::string& vars) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : vars) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return names.empty() ? constant_table() : make_table(names);
}

std::string compact_word(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

struct FamilyArgs {
  std::string family;
  int dim = 0;
  std::size_t level = 0;
  int pieces = 0;
};

PolynomialMap build_map(const FamilyArgs& a) {
  if (a.dim < 1 || a.level < 1) throw Error("--dim and --level must be positive");
  if (a.family == "universal") return universal_variety_map(a.dim, a.level);
  if (a.family != "pl" && a.family != "poly")
    throw Error("unknown family '" + a.family + "' (expected universal, pl or poly)");
  if (a.pieces < 1) throw Error("--pieces is required for the " + a.family + " family");
  return signature_variety_map(a.family == "pl" ? PathFamily::piecewise_linear : PathFamily::polynomial, a.dim,
                               a.level, a.pieces);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    config.seed = default_seed();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact signatures of piecewise polynomial paths, word algebra, and signature varieties", "sigvar"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string output = "text";
  std::string samples = "auto";
  app.add_option("--seed", config.seed, "Random seed for point sampling (env SIGVAR_SEED)");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trials", config.rank_trials, "Random points for Jacobian rank")->check(CLI::PositiveNumber);
  app.add_option("--samples", samples, "Sample points for ideal counts, or 'auto'");

  std::function<void()> action;
  auto json_out = [&](const json& j) { out << j.dump(2) << "\n"; };
  auto is_json = [&] { return output == "json"; };

  // sig
  auto* sig = app.add_subcommand("sig", "Signature of a path at a word or a level");
  std::string path_arg, word_arg;
  std::size_t level_arg = 0;
  sig->add_option("--path", path_arg, "Path JSON file or inline JSON")->required();
  auto* word_opt = sig->add_option("--word", word_arg, "Word such as \"[1,2]\"");
  auto* level_opt = sig->add_option("--level", level_arg, "Signature level");
  word_opt->excludes(level_opt);
  sig->callback([&] {
    action = [&] {
      Path x = path_from_json(load_json_argument(path_arg));
      if (*level_opt) {
        auto s = signature(x, level_arg);
        if (is_json())
          json_out(signature_to_json(s));
        else
          out << format_tensor(s.tensor) << "\n";
      } else if (*word_opt) {
        Word w = Word::parse(word_arg);
        auto c = sig_word(x, w);
        if (is_json())
          json_out({{"word", w.letters()}, {"coefficient", c.to_string()}});
        else
          out << c.to_string() << "\n";
      } else {
        throw CLI::RequiredError("--word or --level");
      }
    };
  });

  // binary word-algebra products
  std::string lhs, rhs, vars;
  int alphabet = 0;
  auto binary = [&](const char* name, const char* help, std::function<Tensor(const Tensor&, const Tensor&)> op) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("lhs", lhs, "Tensor")->required();
    cmd->add_option("rhs", rhs, "Tensor")->required();
    cmd->add_option("--alphabet", alphabet, "Alphabet size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--vars", vars, "Comma-separated coefficient variables");
    cmd->callback([&, op] {
      action = [&, op] {
        auto table = table_from_list(vars);
        Tensor r = op(parse_tensor(lhs, alphabet, table), parse_tensor(rhs, alphabet, table));
        if (is_json())
          json_out(tensor_to_json(r));
        else
          out << format_tensor(r) << "\n";
      };
    });
  };
  binary("shuffle", "Shuffle product", [](const Tensor& a, const Tensor& b) { return shuffle(a, b); });
  binary("half-shuffle", "Half-shuffle product", [](const Tensor& a, const Tensor& b) { return half_shuffle(a, b); });
  binary("concat", "Concatenation product", [](const Tensor& a, const Tensor& b) { return concat_product(a, b); });

  // lyndon
  auto* lyn = app.add_subcommand("lyndon", "Lyndon words, Lie basis, shuffle decomposition");
  lyn->require_subcommand(1);
  std::size_t max_len = 0;
  auto* lwords = lyn->add_subcommand("words", "Lyndon words up to a length");
  lwords->add_option("--alphabet", alphabet)->required()->check(CLI::PositiveNumber);
  lwords->add_option("--max-len", max_len)->required()->check(CLI::PositiveNumber);
  lwords->callback([&] {
    action = [&] {
      auto ws = lyndon_words(alphabet, max_len);
      if (is_json()) {
        json arr = json::array();
        for (const auto& w : ws) arr.push_back(w.letters());
        json_out(arr);
        return;
      }
      for (std::size_t i = 0; i < ws.size(); ++i) out << (i ? " " : "") << compact_word(ws[i]);
      out << "\n";
    };
  });
  auto* lbasis = lyn->add_subcommand("basis", "Lie bracketing of a Lyndon word");
  lbasis->add_option("word", word_arg)->required();
  lbasis->add_option("--alphabet", alphabet)->required()->check(CLI::PositiveNumber);
  lbasis->callback([&] {
    action = [&] {
      Tensor b = lie_basis(Word::parse(word_arg), alphabet);
      if (is_json())
        json_out(tensor_to_json(b));
      else
        out << format_tensor(b) << "\n";
    };
  });
  auto* ldec = lyn->add_subcommand("decompose", "Shuffle polynomial in Lyndon words");
  ldec->add_option("tensor", lhs)->required();
  ldec->add_option("--alphabet", alphabet)->required()->check(CLI::PositiveNumber);
  ldec->callback([&] {
    action = [&] {
      auto p = lyndon_shuffle(parse_tensor(lhs, alphabet));
      if (is_json())
        json_out(lyndon_polynomial_to_json(p));
      else
        out << p.to_string() << "\n";
    };
  });

  // core tensors
  auto* core = app.add_subcommand("core", "Core signature tensors");
  core->require_subcommand(1);
  int dim = 0;
  for (const char* kind : {"axis", "monomial"}) {
    auto* c = core->add_subcommand(kind, std::string("Canonical ") + kind + " path tensor");
    c->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
    c->add_option("--level", level_arg)->required();
    std::string k = kind;
    c->callback([&, k] {
      action = [&, k] {
        Tensor t = k == "axis" ? caxis_tensor(dim, level_arg) : cmon_tensor(dim, level_arg);
        if (is_json())
          json_out(tensor_to_json(t));
        else
          out << format_tensor(t) << "\n";
      };
    });
  }

  // exp
  auto* expc = app.add_subcommand("exp", "Truncated tensor exponential");
  bool project = false;
  expc->add_option("tensor", lhs)->required();
  expc->add_option("--level", level_arg)->required();
  expc->add_option("--alphabet", alphabet)->required()->check(CLI::PositiveNumber);
  expc->add_option("--vars", vars, "Comma-separated coefficient variables");
  expc->add_flag("--project", project, "Only the level-k component");
  expc->callback([&] {
    action = [&] {
      Tensor l = parse_tensor(lhs, alphabet, table_from_list(vars));
      Tensor e = project ? tensor_exp(l, level_arg) : tensor_exp_series(l, level_arg);
      if (is_json())
        json_out(tensor_to_json(e));
      else
        out << format_tensor(e) << "\n";
    };
  });

  // adjoint
  auto* adj = app.add_subcommand("adjoint", "Adjoint of a polynomial map on a word");
  std::string polys_arg;
  int source_dim = 0;
  adj->add_option("--word", word_arg)->required();
  adj->add_option("--polys", polys_arg, "JSON {variables, polys} file or inline JSON")->required();
  adj->add_option("--source-dim", source_dim)->required()->check(CLI::PositiveNumber);
  adj->callback([&] {
    action = [&] {
      auto polys = polys_from_json(load_json_argument(polys_arg));
      Tensor t = adjoint_word(Word::parse(word_arg), source_dim, polys);
      if (is_json())
        json_out(tensor_to_json(t));
      else
        out << format_tensor(t) << "\n";
    };
  });

  // variety
  auto* var = app.add_subcommand("variety", "Universal and signature variety parametrizations");
  var->require_subcommand(1);
  FamilyArgs fam;
  std::string family_opt;
  unsigned max_degree = 2;
  std::string export_format = "cas-script";
  bool float_rank_flag = false;
  auto family_options = [&](CLI::App* c) {
    c->add_option("kind", fam.family, "Family: universal, pl or poly")->check(CLI::IsMember({"universal", "pl", "poly"}));
    c->add_option("--family", family_opt, "universal, pl or poly")->check(CLI::IsMember({"universal", "pl", "poly"}));
    c->add_option("--dim", fam.dim)->required()->check(CLI::PositiveNumber);
    c->add_option("--level", fam.level)->required()->check(CLI::PositiveNumber);
    c->add_option("--pieces", fam.pieces)->check(CLI::PositiveNumber);
  };
  auto resolve_family = [&] {
    if (!family_opt.empty()) {
      if (!fam.family.empty() && fam.family != family_opt) throw Error("conflicting family arguments");
      fam.family = family_opt;
    }
    if (fam.family.empty()) throw CLI::RequiredError("family");
    return build_map(fam);
  };

  auto* vmap = var->add_subcommand("map", "Print the parametrization");
  family_options(vmap);
  vmap->callback([&] {
    action = [&] {
      auto f = resolve_family();
      if (is_json()) {
        json_out(polynomial_map_to_json(f));
        return;
      }
      for (std::size_t i = 0; i < f.coordinate_count(); ++i)
        out << f.labels[i].to_string() << " -> " << f.entries[i].to_string() << "\n";
    };
  });
  auto* vdim = var->add_subcommand("dim", "Affine and projective dimension of the image");
  family_options(vdim);
  vdim->add_flag("--float-rank", float_rank_flag, "Floating-point rank (SVD) instead of exact elimination");
  vdim->callback([&] {
    action = [&] {
      auto f = resolve_family();
      auto affine = affine_image_dimension(f, config.rank_trials, config.seed,
                                           float_rank_flag ? RankMethod::floating : RankMethod::exact);
      std::size_t projective = affine >= 1 ? affine - 1 : 0;
      if (is_json()) {
        json j{{"affine", affine}};
        j["projective"] = affine >= 1 ? json(projective) : json(nullptr);
        json_out(j);
      } else {
        out << "affine: " << affine;
        if (affine >= 1) out << ", projective: " << projective;
        out << "\n";
      }
    };
  });
  auto* vcounts = var->add_subcommand("ideal-counts", "Linear forms and minimal quadrics vanishing on the image");
  family_options(vcounts);
  vcounts->add_option("--max-degree", max_degree)->check(CLI::IsMember({1, 2}));
  vcounts->callback([&] {
    action = [&] {
      auto f = resolve_family();
      std::size_t n = samples == "auto" ? auto_sample_count(f, max_degree) : std::stoul(samples);
      auto counts = low_degree_ideal_counts(f, max_degree, n, config.seed);
      if (is_json()) {
        json j{{"linear", counts.linear}};
        if (max_degree == 2) j["quadrics"] = counts.quadrics;
        j["samples"] = n;
        json_out(j);
      } else {
        out << "linear: " << counts.linear;
        if (max_degree == 2) out << ", quadrics: " << counts.quadrics;
        out << "\n";
      }
    };
  });
  auto* vexport = var->add_subcommand("export", "Export the parametrization");
  family_options(vexport);
  vexport->add_option("--format", export_format)->check(CLI::IsMember({"cas-script", "json"}));
  vexport->callback([&] {
    action = [&] {
      auto f = resolve_family();
      out << export_map(f, export_format == "json" ? ExportFormat::json : ExportFormat::cas_script);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (samples != "auto") {
    try {
      if (std::stol(samples) < 1) throw std::invalid_argument("samples");
    } catch (const std::exception&) {
      err << "error: --samples must be a positive integer or 'auto'\n";
      return 2;
    }
  }

  try {
    if (action) action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sigvar
