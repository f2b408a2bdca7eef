// swalk: exact equivariant quantum cohomology of Grassmannians via the
// vicious/osculating walker models, with a verification catalog.

#include <CLI11.hpp>
#include <random>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sw/bethe.hpp"
#include "sw/qhring.hpp"
#include "sw/verify.hpp"

using json = nlohmann::json;
using namespace sw;

namespace {

constexpr int kUsageError = 2;
constexpr int kCapExceeded = 3;

int max_N_cap() {
  if (const char* env = std::getenv("SW_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

struct ShapeArg {
  int n = 0, N = 0;
};

ShapeArg parse_shape(const std::string& s) {
  ShapeArg a;
  if (std::sscanf(s.c_str(), "%d,%d", &a.n, &a.N) != 2 || a.n < 0 || a.N < 1 || a.n > a.N)
    throw CLI::ValidationError("--shape", "expected n,N with 0 <= n <= N");
  return a;
}

std::string key_of(const BoxPartition& nu, int d) {
  return "((" + nu.str() + ")," + std::to_string(d) + ")";
}

void emit(const json& j, const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it)
      text += it.key() + " = " + (it.value().is_string() ? it.value().get<std::string>()
                                                         : it.value().dump()) +
              "\n";
  } else {
    text = j.dump(2) + "\n";
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

int check_cap(int N) {
  if (N > max_N_cap()) {
    std::cerr << "shape exceeds the N cap (" << max_N_cap() << "); set SW_MAX_N to override\n";
    return kCapExceeded;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant quantum cohomology of Gr(n,N) via walker models"};
  app.require_subcommand(1);

  std::string shape_s, lambda_s, mu_s, nu_s = "", alpha_s, out_path, format = "json";
  std::string suite = "all";
  int dval = -1, maxN = 4;
  unsigned seed = 7;
  double tol = 1e-9, qre = 1.0, qim = 0.0;

  auto add_common = [&](CLI::App* cmd, bool need_shape = true) {
    if (need_shape) cmd->add_option("--shape", shape_s, "box shape n,N")->required();
    cmd->add_option("--format", format, "json | text");
    cmd->add_option("--out", out_path, "write output to a file");
  };

  auto* gw_cmd = app.add_subcommand("gw", "structure constants for one product");
  add_common(gw_cmd);
  gw_cmd->add_option("--lambda", lambda_s)->required();
  gw_cmd->add_option("--mu", mu_s)->required();
  gw_cmd->add_option("--nu", nu_s);
  gw_cmd->add_option("--d", dval);

  auto* prod_cmd = app.add_subcommand("product", "quantum product expansion");
  add_common(prod_cmd);
  prod_cmd->add_option("--lambda", lambda_s)->required();
  prod_cmd->add_option("--mu", mu_s)->required();

  auto* zfun_cmd = app.add_subcommand("zfun", "walker partition function Z~");
  add_common(zfun_cmd);
  zfun_cmd->add_option("--lambda", lambda_s)->required();
  zfun_cmd->add_option("--mu", mu_s)->required();
  format = "json";

  auto* pieri_cmd = app.add_subcommand("pieri", "Pieri-Chevalley expansion of H~_1 |lambda>");
  add_common(pieri_cmd);
  pieri_cmd->add_option("--lambda", lambda_s)->required();

  auto* kostka_cmd = app.add_subcommand("kostka", "equivariant quantum Kostka numbers");
  add_common(kostka_cmd);
  kostka_cmd->add_option("--alpha", alpha_s)->required();
  kostka_cmd->add_option("--mu", mu_s)->required();

  auto* table_cmd = app.add_subcommand("table", "full structure-constant table");
  add_common(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
  verify_cmd->add_option("--suite", suite, "ybe | operators | ring | bethe | all");
  verify_cmd->add_option("--N", maxN, "symbolic catalog size cap");
  verify_cmd->add_option("--shape", shape_s, "ring-suite shape n,N");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tol", tol);

  auto* bethe_cmd = app.add_subcommand("bethe", "numeric Bethe certification");
  bethe_cmd->add_option("--shape", shape_s, "box shape n,N")->required();
  bethe_cmd->add_option("--q", qre, "quantum parameter (real part)");
  bethe_cmd->add_option("--qim", qim, "quantum parameter (imaginary part)");
  bethe_cmd->add_option("--seed", seed);
  bethe_cmd->add_option("--tol", tol);
  bethe_cmd->add_option("--format", format);
  bethe_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (gw_cmd->parsed() || prod_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      BoxShape shape(sh.n, sh.N - sh.n);
      VarSpace vs(sh.N, std::max(sh.n, 1));
      auto la = BoxPartition::parse(shape, lambda_s);
      auto mu = BoxPartition::parse(shape, mu_s);
      json j;
      if (gw_cmd->parsed() && !nu_s.empty()) {
        auto nu = BoxPartition::parse(shape, nu_s);
        int d = dval >= 0 ? dval : 0;
        j[key_of(nu, d)] = gw(vs, GWKey{la, mu, nu, d}).str();
      } else {
        auto exp = product_expansion(vs, shape, la, mu);
        for (const auto& [nu, poly] : exp)
          for (int d = 0; d <= 2 * shape.n * shape.k / sh.N + 1; ++d) {
            Poly c = poly.coeff_q(d);
            if (!c.is_zero()) j[key_of(nu, d)] = c.str();
          }
      }
      emit(j, format, out_path);
      return 0;
    }
    if (zfun_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      BoxShape shape(sh.n, sh.N - sh.n);
      VarSpace vs(sh.N, std::max(sh.n, 1));
      auto la = BoxPartition::parse(shape, lambda_s);
      auto mu = BoxPartition::parse(shape, mu_s);
      std::vector<Poly> xs;
      for (int i = 1; i <= sh.n; ++i) xs.push_back(Poly::x(vs, i));
      Poly z = walker_Ztilde(vs, Kind::Vicious, shape, la, mu, xs);
      if (format == "text") {
        std::cout << z.str() << "\n";
      } else {
        json j;
        j["zfun"] = z.str();
        emit(j, format, out_path);
      }
      return 0;
    }
    if (pieri_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      BoxShape shape(sh.n, sh.N - sh.n);
      VarSpace vs(sh.N, 1);
      auto la = BoxPartition::parse(shape, lambda_s);
      json j;
      for (const auto& [mu, coeff] : pieri_chevalley(vs, la))
        for (int d = 0; d <= 1; ++d) {
          Poly c = coeff.coeff_q(d);
          if (!c.is_zero()) j[key_of(mu, d)] = c.str();
        }
      emit(j, format, out_path);
      return 0;
    }
    if (kostka_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      BoxShape shape(sh.n, sh.N - sh.n);
      VarSpace vs(sh.N, 1);
      auto mu = BoxPartition::parse(shape, mu_s);
      std::vector<int> alpha;
      {
        std::stringstream ss(alpha_s);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) alpha.push_back(std::stoi(item));
      }
      json j;
      for (const auto& [la, poly] : kostka(vs, shape, alpha, mu))
        for (int d = 0; d <= sh.n; ++d) {
          Poly c = poly.coeff_q(d);
          if (!c.is_zero()) j[key_of(la, d)] = c.str();
        }
      emit(j, format, out_path);
      return 0;
    }
    if (table_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      BoxShape shape(sh.n, sh.N - sh.n);
      VarSpace vs(sh.N, 1);
      auto table = build_table(vs, shape, SchubertRoute::JacobiTrudi, /*cross_validate=*/true);
      json j;
      j["shape"] = {sh.n, sh.N};
      json entries = json::object();
      for (const auto& [key, poly] : table.entries) {
        entries[key] = {{"value", poly.str()}, {"provenance", table.provenance.at(key)}};
      }
      j["entries"] = entries;
      emit(j, format, out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.maxN = maxN;
      opt.seed = seed;
      opt.tol = tol;
      if (!shape_s.empty()) {
        auto sh = parse_shape(shape_s);
        if (int rc = check_cap(sh.N)) return rc;
        opt.shape_n = sh.n;
        opt.shape_N = sh.N;
      }
      if (int rc = check_cap(opt.maxN)) return rc;
      bool all_pass = true;
      for (const auto& rep : run_suite(suite, opt)) {
        json line;
        line["id"] = rep.id;
        line["params"] = rep.params;
        line["pass"] = rep.pass;
        if (!rep.pass) line["counterexample"] = rep.counterexample;
        std::cout << line.dump() << "\n";
        all_pass = all_pass && rep.pass;
      }
      return all_pass ? 0 : 1;
    }
    if (bethe_cmd->parsed()) {
      auto sh = parse_shape(shape_s);
      if (int rc = check_cap(sh.N)) return rc;
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      std::vector<Complex> ts;
      for (int i = 0; i < sh.N; ++i) ts.emplace_back(2.0 * u(rng), 2.0 * u(rng));
      auto ctx = solve_bae(sh.N, sh.n, ts, Complex(qre, qim));
      BetheTolerances bt;
      bt.orthogonality = tol;
      bt.spectral = tol;
      auto spec = spectral_checks(ctx, bt);
      VarSpace vs(sh.N, 1);
      BoxShape shape(sh.n, sh.N - sh.n);
      std::vector<OpV> sops;
      for (const auto& la : all_partitions(shape))
        sops.push_back(schubert_operator(vs, shape, la));
      auto gkm = gkm_check(ctx, vs, sops, bt);
      json j;
      char buf[64];
      for (const auto* rep : {&spec, &gkm})
        for (const auto& [k, v] : rep->residuals) {
          std::snprintf(buf, sizeof buf, "%.3e", v);
          j[k] = buf;
        }
      j["pass"] = spec.pass() && gkm.pass();
      emit(j, format, out_path);
      return (spec.pass() && gkm.pass()) ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
