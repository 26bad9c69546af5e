// demazure: enumeration, verification sweeps and character/module output.

#include "suites.hpp"

#include "demazure/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

using namespace demazure;
using io::json;

namespace {

enum class Format { Json, Csv };

struct Common {
  int rank = 0;
  int trunc = 0;
  int bound = -1;
  std::string format = "json";
  int jobs = 1;
  std::uint64_t seed = 1;
  int shift = 0;

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
  cli::RunConfig run_config() const { return {rank, trunc, bound, jobs, seed}; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--rank", c.rank, "rank n of sl_{n+1} (sweeps: largest rank)")->check(CLI::PositiveNumber);
  app->add_option("--trunc", c.trunc, "number of grades to compute (default: until a grade vanishes)")->check(CLI::PositiveNumber);
  app->add_option("--bound", c.bound, "height cutoff for module weights (default: dominant weights plus Weyl orbits)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--jobs", c.jobs, "parallel instances")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed for randomized sweeps");
  app->add_option("--shift", c.shift, "also emit exponent shifts 1..S")->check(CLI::NonNegativeNumber);
}

Weight checked_weight(const std::string& s, int rank) {
  Weight w = io::parse_weight(s);
  if (rank > 0 && w.rank() != rank) throw CLI::ValidationError("--weight", "length does not match --rank");
  return w;
}

std::string loop_weight_cell(const LoopWeight& p) {
  std::string s;
  for (const auto& f : p.factors()) {
    if (!s.empty()) s += ";";
    s += std::to_string(f.node) + ":" + std::to_string(f.exponent);
  }
  return s;
}

int cmd_enumerate(const Common& c, std::optional<int> max_span) {
  const int n = c.rank > 0 ? c.rank : 1;
  if (c.fmt() == Format::Csv) std::cout << "loop_weight,orientation,weight\n";
  std::size_t count = 0;
  for (const LoopWeight& p : enumerate_P1(n)) {
    if (max_span) {
      int lo = 0, hi = 0;
      for (const auto& f : p.factors()) lo = std::min(lo, f.exponent), hi = std::max(hi, f.exponent);
      if (hi - lo > *max_span) continue;
    }
    ++count;
    const char* orient = orientation_of(p) == Orientation::Plus ? "+" : "-";
    for (int s = 0; s <= c.shift; ++s) {
      const LoopWeight q = p.shifted(s);
      if (c.fmt() == Format::Csv)
        std::cout << loop_weight_cell(q) << "," << orient << "," << io::weight_cell(weight_of(q)) << "\n";
      else
        std::cout << json{{"loop_weight", io::to_json(q)}, {"orientation", orient}, {"weight", io::to_json(weight_of(q))}}.dump()
                  << "\n";
    }
  }
  std::cerr << count << " elements of P^+_Z(1) up to shift for n=" << n << "\n";
  return 0;
}

int cmd_verify(const Common& c, const std::string& id) {
  const auto instances = cli::build_sweep(id, c.run_config());
  const auto t0 = std::chrono::steady_clock::now();
  const auto outcomes = cli::run_all(instances, c.jobs);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t passed = 0;
  if (c.fmt() == Format::Csv) std::cout << "check,instance,ok,seconds,error\n";
  for (const auto& o : outcomes) {
    passed += o.ok;
    if (c.fmt() == Format::Csv) {
      std::cout << id << ",\"" << o.key << "\"," << (o.ok ? "pass" : "fail") << "," << o.seconds << ",\"" << o.error << "\"\n";
    } else {
      json rec{{"check", id}, {"instance", o.key}, {"ok", o.ok}, {"seconds", o.seconds}};
      if (!o.error.empty()) rec["error"] = o.error;
      std::cout << rec.dump() << "\n";
    }
  }
  std::cerr << id << ": " << passed << "/" << outcomes.size() << " passed in " << total << " s\n";
  return passed == outcomes.size() ? 0 : 1;
}

void emit(const GradedCharacter& ch, Format f, const std::string& value) {
  if (f == Format::Csv) {
    std::cout << io::to_csv(ch, value);
    return;
  }
  json out = json::array();
  for (const auto& [k, m] : ch.terms) out.push_back({{"weight", io::to_json(k.first)}, {"grade", k.second}, {value, m}});
  std::cout << out.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure modules, loop weights and graded characters for sl_{n+1}"};
  app.require_subcommand(1);
  Common c;

  auto* enumerate = app.add_subcommand("enumerate-p1", "list P^+_Z(1) up to global exponent shift");
  add_common(enumerate, c);
  std::optional<int> max_span;
  enumerate->add_option("--max-span", max_span, "skip elements whose exponents span more than this");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  add_common(verify, c);
  std::string id;
  verify->add_option("id", id, "sweep id")->required();

  auto* character = app.add_subcommand("character", "print a graded or classical character");
  add_common(character, c);
  std::string kind, weight;
  int level = 1;
  character->add_option("kind", kind, "demazure or weyl")->required()->check(CLI::IsMember({"demazure", "weyl"}));
  character->add_option("--weight", weight, "highest weight, comma separated")->required();
  character->add_option("--level", level, "level of the Demazure module")->check(CLI::PositiveNumber);

  auto* module = app.add_subcommand("module", "construct a module from generators and relations");
  add_common(module, c);
  std::string mkind, nu_s, lambda_s;
  int a = 0, b = 0;
  bool refined = false, alternate = false, show_presentation = false;
  module->add_option("kind", mkind, "D, M, V or W")->required()->check(CLI::IsMember({"D", "M", "V", "W"}));
  module->add_option("--weight", weight, "highest weight (D, W)");
  module->add_option("--level", level, "level (D)")->check(CLI::PositiveNumber);
  module->add_flag("--refined", refined, "drop redundant power relations (D)");
  module->add_option("--nu", nu_s, "nu (M)");
  module->add_option("--lambda", lambda_s, "lambda in P^+(1) (M)");
  module->add_option("--a", a, "number of parts 2 (V)")->check(CLI::NonNegativeNumber);
  module->add_option("--b", b, "number of parts 1 (V)")->check(CLI::NonNegativeNumber);
  module->add_flag("--alternate", alternate, "single extra relation form (V)");
  module->add_flag("--presentation", show_presentation, "print the presentation instead of constructing");

  auto* list = app.add_subcommand("list", "list verification sweep ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*list) {
      for (const auto& s : cli::sweep_ids()) std::cout << s << "\n";
      return 0;
    }
    if (*enumerate) return cmd_enumerate(c, max_span);
    if (*verify) {
      const auto& ids = cli::sweep_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::cerr << "unknown verification id '" << id << "'; see `demazure list`\n";
        return 2;
      }
      return cmd_verify(c, id);
    }
    if (*character) {
      const Weight w = checked_weight(weight, c.rank);
      if (kind == "weyl") {
        GradedCharacter g;
        for (const auto& [x, m] : weyl_character(w).terms) g.add(x, 0, m);
        emit(g, c.fmt(), "mult");
      } else {
        emit(demazure_character(level, w), c.fmt(), "mult");
      }
      return 0;
    }
    if (*module) {
      engine::Presentation p;
      if (mkind == "D") {
        if (weight.empty()) throw CLI::ValidationError("--weight", "required for D");
        p = engine::present_D(level, checked_weight(weight, c.rank), refined);
      } else if (mkind == "W") {
        if (weight.empty()) throw CLI::ValidationError("--weight", "required for W");
        p = engine::present_local_weyl(checked_weight(weight, c.rank));
      } else if (mkind == "M") {
        if (nu_s.empty() || lambda_s.empty()) throw CLI::ValidationError("--nu/--lambda", "required for M");
        p = engine::present_M(checked_weight(nu_s, c.rank), checked_weight(lambda_s, c.rank));
      } else {
        p = alternate ? engine::present_V_xi_alternate(a, b) : engine::present_V_xi(a, b);
      }
      if (show_presentation) {
        std::cout << io::to_json(p).dump() << "\n";
        return 0;
      }
      const auto m = engine::construct(p, c.run_config().construct_options());
      emit(m.dims, c.fmt(), "dim");
      std::cerr << p.name << ": dim " << m.dimension() << ", grades < " << m.truncation << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
