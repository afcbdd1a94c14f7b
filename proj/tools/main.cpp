#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wreath/io.hpp"
#include "wreath/structure.hpp"
#include "wreath/version.hpp"

namespace {

constexpr long long kOrderGuard = 512;
constexpr long long kTripleRegularityGuard = 36;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Relative output paths land in $WREATH_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("WREATH_OUT_DIR");
  if (dir == nullptr || *dir == '\0' || path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(dir) / p).string();
}

void emit(const wreath::io::json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    wreath::io::write_text_file(resolve_out(out_path), text);
  }
}

wreath::WreathParams make_params(const std::vector<long long>& factors) {
  for (long long n : factors) {
    if (n < 2) throw CLI::ValidationError("--factors", "every factor must be at least 2");
  }
  return wreath::WreathParams{factors};
}

long long guarded_order(const wreath::WreathParams& params, bool force) {
  const long long v = params.order();
  if (v > kOrderGuard && !force) {
    throw CLI::ValidationError("--factors", "order " + std::to_string(v) + " exceeds " +
                                                std::to_string(kOrderGuard) + "; pass --force to override");
  }
  return v;
}

int run_build(const std::vector<long long>& factors, const std::string& out, bool force) {
  const auto params = make_params(factors);
  guarded_order(params, force);
  emit(wreath::io::scheme_to_json(wreath::build(params)), out);
  return 0;
}

int run_verify(const std::vector<long long>& factors, int base, const std::string& out, bool force, bool timings) {
  const auto params = make_params(factors);
  const long long v = guarded_order(params, force);
  if (base < 0 || base >= v) {
    throw CLI::ValidationError("--base", "base point must lie in 0.." + std::to_string(v - 1));
  }
  const bool with_triple_regularity = v <= kTripleRegularityGuard || force;

  std::map<std::string, long long> elapsed;
  const auto started = std::chrono::steady_clock::now();
  const auto report = wreath::structure_report(params, base, with_triple_regularity);
  if (timings) {
    elapsed["total"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  }

  std::string factor_text;
  for (std::size_t i = 0; i < factors.size(); ++i) factor_text += (i ? "," : "") + std::to_string(factors[i]);
  std::cout << "factors " << factor_text << ": order " << v << ", classes " << params.classes() << ", base point "
            << base << "\n";
  std::cout << "dimensions: algebra " << report.dim_t << ", primary " << report.dim_u << ", central idempotents "
            << report.f_nonzero << ", center " << report.center_dim << "\n";
  if (!report.triple_regularity_run) {
    std::cout << "triple regularity skipped (order above " << kTripleRegularityGuard << "; pass --force to run)\n";
  }
  for (const auto& check : report.checks) {
    std::cout << check.name << ": " << (check.passed ? "pass" : "FAIL") << "\n";
    if (!check.passed) std::cout << "  " << check.witness << "\n";
  }
  std::cout << "result: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks)\n";

  if (!out.empty()) emit(wreath::io::report_to_json(report, elapsed), out);
  return report.all_passed() ? 0 : kExitChecksFailed;
}

int run_recognize(const std::string& in, const std::string& out) {
  const auto scheme = wreath::io::scheme_from_json(wreath::io::read_json_file(in));
  const auto result = wreath::recognize(scheme);
  if (result.is_wreath) {
    std::string factor_text;
    for (std::size_t i = 0; i < result.factors.size(); ++i) {
      factor_text += (i ? "," : "") + std::to_string(result.factors[i]);
    }
    std::cout << "wreath power: yes\nfactors: " << (result.factors.empty() ? "(none)" : factor_text) << "\n";
  } else {
    std::cout << "wreath power: no\nwitness: classes " << result.witness_i << " and " << result.witness_j << "\n";
  }
  if (!out.empty()) emit(wreath::io::recognition_to_json(result), out);
  return result.is_wreath ? 0 : kExitChecksFailed;
}

int run_dump(const std::vector<long long>& factors, const std::string& what, int base, const std::string& out,
             bool force) {
  const auto params = make_params(factors);
  const long long v = guarded_order(params, force);
  if (base < 0 || base >= v) {
    throw CLI::ValidationError("--base", "base point must lie in 0.." + std::to_string(v - 1));
  }
  const auto scheme = wreath::build(params);
  const auto algebra = wreath::terwilliger_algebra(scheme, base);
  const int d = scheme.classes;

  wreath::io::json j;
  j["format"] = "dump.v1";
  j["what"] = what;
  j["factors"] = factors;
  j["base_point"] = base;
  wreath::io::json items = wreath::io::json::array();
  if (what == "triple-products") {
    for (int i = 0; i <= d; ++i) {
      for (int g = 0; g <= d; ++g) {
        for (int h = 0; h <= d; ++h) {
          items.push_back({{"i", i},
                           {"j", g},
                           {"h", h},
                           {"matrix", wreath::io::matrix_to_json(wreath::triple_product(algebra, i, g, h))}});
        }
      }
    }
  } else if (what == "g-basis") {
    const auto pb = wreath::g_basis(algebra);
    for (int i = 0; i <= d; ++i) {
      for (int g = 0; g <= d; ++g) {
        items.push_back({{"i", i}, {"j", g}, {"matrix", wreath::io::matrix_to_json(pb.at(i, g))}});
      }
    }
  } else if (what == "f-idempotents") {
    const auto fs = wreath::f_idempotents(algebra);
    for (const auto& [key, f] : fs.f) {
      items.push_back({{"i", key.first},
                       {"h", key.second},
                       {"nonzero", !f.is_zero()},
                       {"matrix", wreath::io::matrix_to_json(f)}});
    }
  } else if (what == "block-form") {
    const auto bf = wreath::block_form(algebra, wreath::g_basis(algebra));
    j["ordering"] = bf.ordering;
    j["block_sizes"] = bf.block_sizes;
    for (const auto& check : bf.checks) {
      wreath::io::json c;
      c["name"] = check.name;
      c["passed"] = check.passed;
      if (!check.passed) c["witness"] = check.witness;
      items.push_back(std::move(c));
    }
  } else {
    throw CLI::ValidationError("--what", "unknown payload " + what);
  }
  j["items"] = std::move(items);
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure computations for wreath powers of one-class association schemes"};
  app.set_version_flag("--version", std::string("wreath ") + wreath::kVersion);
  app.require_subcommand(1);

  std::vector<long long> factors;
  std::string out;
  std::string in;
  std::string what = "g-basis";
  int base = 0;
  bool force = false;
  bool timings = false;

  auto* build = app.add_subcommand("build", "construct a wreath power and write its scheme");
  build->add_option("--factors", factors, "comma separated factors n_1,...,n_d (each >= 2)")
      ->delimiter(',')
      ->required();
  build->add_option("--out", out, "output path (stdout when omitted)");
  build->add_flag("--force", force, "override the order guard");

  auto* verify = app.add_subcommand("verify", "run every structural check at one base point");
  verify->add_option("--factors", factors, "comma separated factors n_1,...,n_d (each >= 2)")
      ->delimiter(',')
      ->required();
  verify->add_option("--base", base, "base point (default 0)");
  verify->add_option("--out", out, "write the JSON report here");
  verify->add_flag("--timings", timings, "include timings in the report");
  verify->add_flag("--force", force, "override the order and triple regularity guards");

  auto* recognize = app.add_subcommand("recognize", "decide whether a scheme file is a wreath power");
  recognize->add_option("--in", in, "scheme JSON file")->required();
  recognize->add_option("--out", out, "write the JSON result here");

  auto* dump = app.add_subcommand("dump", "write triple products, bases or the block form as JSON");
  dump->add_option("--factors", factors, "comma separated factors n_1,...,n_d (each >= 2)")
      ->delimiter(',')
      ->required();
  dump->add_option("--what", what, "triple-products, g-basis, f-idempotents or block-form");
  dump->add_option("--base", base, "base point (default 0)");
  dump->add_option("--out", out, "output path (stdout when omitted)");
  dump->add_flag("--force", force, "override the order guard");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return run_build(factors, out, force);
    if (verify->parsed()) return run_verify(factors, base, out, force, timings);
    if (recognize->parsed()) return run_recognize(in, out);
    if (dump->parsed()) return run_dump(factors, what, base, out, force);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const wreath::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& violation : e.violations()) {
      std::cerr << "  axiom " << violation.axiom << ": " << violation.witness << "\n";
    }
    return kExitChecksFailed;
  } catch (const wreath::io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const wreath::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
