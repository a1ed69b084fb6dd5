#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromavar/verify.hpp"

namespace cv = chromavar;
namespace fs = std::filesystem;

namespace {

struct CliOptions {
  std::string format = "json";
  cv::Caps caps;
};

void emit(const CliOptions& opt, const cv::json& j, const std::string& tsv) {
  if (opt.format == "tsv")
    std::cout << tsv;
  else
    std::cout << j.dump(2) << "\n";
}

std::string quotient_summary(const cv::QuotientWitness& w) {
  return std::to_string(w.classes()) + " classes over " + std::to_string(w.ambient);
}

cv::json level_sizes_json(const cv::FinitePresheaf& F) {
  cv::json a = cv::json::array();
  for (int k = 0; k <= F.d; ++k) a.push_back(F.level_size[k]);
  return a;
}

std::string level_sizes_tsv(const cv::FinitePresheaf& F) {
  std::string s;
  for (int k = 0; k <= F.d; ++k) s += (k ? "," : "") + std::to_string(F.level_size[k]);
  return s;
}

cv::json witness_json(const cv::FinitePresheaf& F, const cv::FinitePresheaf& G,
                      const cv::PresheafMap& phi) {
  cv::json w = cv::json::array();
  for (int k = 0; k <= F.d; ++k) {
    cv::json lvl = cv::json::array();
    for (int x = 0; x < F.level_size[k]; ++x)
      lvl.push_back(F.label(k, x) + " -> " + G.label(k, phi.components[k][x]));
    w.push_back(lvl);
  }
  return w;
}

int cmd_group_info(const CliOptions& opt, const std::string& group_path) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::json j;
  j["name"] = G.name;
  j["order"] = G.order;
  j["identity"] = G.labels[G.identity];
  j["generators"] = cv::json::array();
  for (int g : G.generators) j["generators"].push_back(G.labels[g]);
  j["center_size"] = static_cast<int>(cv::center(G).size());
  j["labels"] = G.labels;
  std::string tsv = "name\torder\tcenter\tgenerators\n" + G.name + "\t" +
                    std::to_string(G.order) + "\t" +
                    std::to_string(cv::center(G).size()) + "\t" +
                    std::to_string(G.generators.size()) + "\n";
  emit(opt, j, tsv);
  return 0;
}

int cmd_subgroups(const CliOptions& opt, const std::string& group_path, int p) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  auto subs = cv::elem_abelian_subgroups(G, p);
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["count"] = static_cast<int>(subs.size());
  j["subgroups"] = cv::json::array();
  std::string tsv = "rank\torder\tbasis\telements\n";
  for (const auto& E : subs) {
    cv::json e;
    e["rank"] = E.rank;
    e["order"] = E.size();
    e["basis"] = cv::json::array();
    std::string basis_s, elts_s;
    for (int b : E.basis) {
      e["basis"].push_back(G.labels[b]);
      basis_s += (basis_s.empty() ? "" : " ") + G.labels[b];
    }
    e["elements"] = cv::json::array();
    for (int x : E.elements) {
      e["elements"].push_back(G.labels[x]);
      elts_s += (elts_s.empty() ? "" : " ") + G.labels[x];
    }
    j["subgroups"].push_back(e);
    tsv += std::to_string(E.rank) + "\t" + std::to_string(E.size()) + "\t" +
           basis_s + "\t" + elts_s + "\n";
  }
  emit(opt, j, tsv);
  return 0;
}

int cmd_rep(const CliOptions& opt, const std::string& group_path, int p, int d) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::FinitePresheaf R = cv::rep_presheaf(G, p, d, opt.caps);
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["d"] = d;
  j["level_sizes"] = level_sizes_json(R);
  j["representatives"] = cv::json::array();
  std::string tsv = "level\tsize\trepresentatives\n";
  for (int k = 0; k <= d; ++k) {
    cv::json row = cv::json::array();
    std::string reps;
    for (int c = 0; c < R.level_size[k]; ++c) {
      row.push_back(R.label(k, c));
      reps += (c ? " " : "") + R.label(k, c);
    }
    j["representatives"].push_back(row);
    tsv += std::to_string(k) + "\t" + std::to_string(R.level_size[k]) + "\t" + reps + "\n";
  }
  emit(opt, j, tsv);
  return 0;
}

int cmd_quillen_cat(const CliOptions& opt, const std::string& group_path, int p) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::CategoryInstance C = cv::build_quillen_category(G, p);
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["objects"] = static_cast<int>(C.objects.size());
  j["morphism_counts"] = cv::json::array();
  std::string tsv = "src\tdst\tmorphisms\n";
  for (size_t i = 0; i < C.objects.size(); ++i) {
    cv::json row = cv::json::array();
    for (size_t k = 0; k < C.objects.size(); ++k) {
      row.push_back(static_cast<int>(C.morphisms[i][k].size()));
      tsv += std::to_string(i) + "\t" + std::to_string(k) + "\t" +
             std::to_string(C.morphisms[i][k].size()) + "\n";
    }
    j["morphism_counts"].push_back(row);
  }
  emit(opt, j, tsv);
  return 0;
}

int cmd_green_leary(const CliOptions& opt, const std::string& group_path, int p, int n) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::CategoryInstance C = cv::build_green_leary_category(G, p, n);
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["n"] = n;
  j["objects"] = static_cast<int>(C.objects.size());
  j["morphism_counts"] = cv::json::array();
  std::string tsv = "src\tdst\tmorphisms\n";
  for (size_t i = 0; i < C.objects.size(); ++i) {
    cv::json row = cv::json::array();
    for (size_t k = 0; k < C.objects.size(); ++k) {
      row.push_back(static_cast<int>(C.morphisms[i][k].size()));
      tsv += std::to_string(i) + "\t" + std::to_string(k) + "\t" +
             std::to_string(C.morphisms[i][k].size()) + "\n";
    }
    j["morphism_counts"].push_back(row);
  }
  emit(opt, j, tsv);
  return 0;
}

int cmd_beta(const CliOptions& opt, const std::string& group_path,
             const std::string& presheaf_path, int p, int n, int d) {
  cv::FinitePresheaf F;
  std::string source;
  if (!presheaf_path.empty()) {
    F = cv::load_presheaf(presheaf_path);
    source = presheaf_path;
  } else if (!group_path.empty()) {
    cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
    F = cv::rep_presheaf(G, p, d, opt.caps);
    source = "Rep(-," + G.name + ")";
  } else {
    throw cv::input_error("beta needs --group or --presheaf");
  }
  cv::BetaResult B = cv::beta_quotient(F, n);
  cv::json j;
  j["input"] = source;
  j["n"] = n;
  j["level_sizes"] = level_sizes_json(F);
  j["beta_level_sizes"] = level_sizes_json(B.presheaf);
  std::string tsv = "level\tsize\tbeta_classes\n";
  for (int k = 0; k <= F.d; ++k)
    tsv += std::to_string(k) + "\t" + std::to_string(F.level_size[k]) + "\t" +
           std::to_string(B.presheaf.level_size[k]) + "\n";
  emit(opt, j, tsv);
  return 0;
}

int cmd_coend(const CliOptions& opt, const std::string& group_path,
              const std::string& complex_path, int p, int d) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::CategoryInstance C = cv::build_quillen_category(G, p);
  cv::FinitePresheaf coend;
  std::string functor;
  if (complex_path.empty()) {
    coend = cv::coend_presheaf(C, cv::constant_singleton(C), d, opt.caps);
    functor = "singleton";
  } else {
    cv::GComplex X = cv::load_complex(G, complex_path);
    coend = cv::coend_presheaf(C, cv::fx_functor(G, C, X).fn, d, opt.caps);
    functor = "F_X[" + X.name + "]";
  }
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["d"] = d;
  j["functor"] = functor;
  j["level_sizes"] = level_sizes_json(coend);
  std::string verdict;
  if (complex_path.empty()) {
    cv::FinitePresheaf rep = cv::rep_presheaf(G, p, d, opt.caps);
    cv::IsoResult iso = cv::presheaf_iso_check(coend, rep, opt.caps);
    j["isomorphic_to_rep"] = iso.isomorphic;
    if (iso.witness) j["witness"] = witness_json(coend, rep, *iso.witness);
    verdict = iso.isomorphic ? "pass" : "fail";
  }
  std::string tsv = "functor\tlevel_sizes\trep_comparison\n" + functor + "\t" +
                    level_sizes_tsv(coend) + "\t" + (verdict.empty() ? "-" : verdict) + "\n";
  emit(opt, j, tsv);
  if (!verdict.empty() && verdict == "fail") return 1;
  return 0;
}

int cmd_gl_colimit(const CliOptions& opt, const std::string& group_path, int p, int n,
                   int d) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::FinitePresheaf colim = cv::gl_colimit_presheaf(G, p, n, d, opt.caps);
  cv::FinitePresheaf beta_rep =
      cv::beta_quotient(cv::rep_presheaf(G, p, d, opt.caps), n).presheaf;
  cv::IsoResult iso = cv::presheaf_iso_check(colim, beta_rep, opt.caps);
  cv::json j;
  j["group"] = G.name;
  j["p"] = p;
  j["n"] = n;
  j["d"] = d;
  j["level_sizes"] = level_sizes_json(colim);
  j["isomorphic_to_beta_rep"] = iso.isomorphic;
  if (iso.witness) j["witness"] = witness_json(colim, beta_rep, *iso.witness);
  std::string tsv = "group\tp\tn\td\tlevel_sizes\tverdict\n" + G.name + "\t" +
                    std::to_string(p) + "\t" + std::to_string(n) + "\t" +
                    std::to_string(d) + "\t" + level_sizes_tsv(colim) + "\t" +
                    (iso.isomorphic ? "pass" : "fail") + "\n";
  emit(opt, j, tsv);
  return iso.isomorphic ? 0 : 1;
}

int cmd_yn(const CliOptions& opt, const std::string& group_path,
           const std::string& complex_path, int p, int n) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::GComplex X = complex_path.empty() ? cv::point_complex(G)
                                        : cv::load_complex(G, complex_path);
  cv::YnOrbits Y = cv::yn_mod_g(G, p, n, X, opt.caps);
  cv::json j;
  j["group"] = G.name;
  j["complex"] = X.name;
  j["p"] = p;
  j["n"] = n;
  j["elements"] = static_cast<int>(Y.set.elements.size());
  j["orbits"] = Y.orbits.classes();
  j["orbit_reps"] = cv::json::array();
  for (int c = 0; c < Y.orbits.classes(); ++c) {
    const auto& el = Y.set.elements[Y.orbits.representative[c]];
    std::string hom = "(";
    for (int t = 0; t < n; ++t)
      hom += (t ? "," : "") + G.labels[Y.set.homs[el.hom].images[t]];
    hom += ")";
    j["orbit_reps"].push_back(hom + " comp " + std::to_string(el.component));
  }
  std::string tsv = "group\tcomplex\tp\tn\telements\torbits\n" + G.name + "\t" +
                    X.name + "\t" + std::to_string(p) + "\t" + std::to_string(n) +
                    "\t" + std::to_string(Y.set.elements.size()) + "\t" +
                    std::to_string(Y.orbits.classes()) + "\n";
  emit(opt, j, tsv);
  return 0;
}

int cmd_hkr_rank(const CliOptions& opt, const std::string& group_path,
                 const std::string& complex_path, int p, int n) {
  cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
  cv::GComplex X = complex_path.empty() ? cv::point_complex(G)
                                        : cv::load_complex(G, complex_path);
  int rank = cv::hkr_rank(G, p, n, X, opt.caps);
  cv::json j;
  j["group"] = G.name;
  j["complex"] = X.name;
  j["p"] = p;
  j["n"] = n;
  j["rank"] = rank;
  std::string tsv = "group\tcomplex\tp\tn\trank\n" + G.name + "\t" + X.name + "\t" +
                    std::to_string(p) + "\t" + std::to_string(n) + "\t" +
                    std::to_string(rank) + "\n";
  emit(opt, j, tsv);
  return 0;
}

std::vector<cv::BatteryEntry> battery_from_dir(const std::string& dir,
                                               const cv::Caps& caps,
                                               std::vector<std::pair<std::string, cv::FinitePresheaf>>&
                                                   file_presheaves) {
  std::map<std::string, cv::FiniteGroup> groups;
  std::vector<std::pair<std::string, cv::json>> complex_jsons;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    cv::json j = cv::load_json_file(path.string());
    if (j.contains("vertices"))
      complex_jsons.push_back({path.stem().string(), j});
    else if (j.contains("levels"))
      file_presheaves.push_back({path.stem().string(), cv::presheaf_from_json(j)});
    else {
      cv::FiniteGroup G = cv::group_from_json(j, caps);
      if (G.name.empty()) G.name = path.stem().string();
      groups[G.name] = G;
    }
  }
  std::vector<cv::BatteryEntry> battery;
  for (const auto& [name, G] : groups)
    for (int p : {2, 3}) {
      if (G.order % p != 0 && G.order > 1) continue;
      cv::BatteryEntry entry{G, p, 2, {}};
      for (const auto& [cname, cj] : complex_jsons) {
        if (cj.value("group", "") != name) continue;
        cv::GComplex X = cv::complex_from_json(G, cj);
        if (X.name.empty()) X.name = cname;
        entry.complexes.push_back(X);
      }
      battery.push_back(entry);
    }
  return battery;
}

int cmd_verify(const CliOptions& opt, const std::string& group_path,
               const std::vector<std::string>& complex_paths, std::optional<int> p,
               std::optional<int> d) {
  std::vector<cv::BatteryEntry> battery;
  std::vector<std::pair<std::string, cv::FinitePresheaf>> file_presheaves;
  if (!group_path.empty()) {
    cv::FiniteGroup G = cv::load_group(group_path, opt.caps);
    std::vector<int> ps;
    if (p)
      ps.push_back(*p);
    else
      for (int q : {2, 3})
        if (G.order % q == 0 || G.order == 1) ps.push_back(q);
    if (ps.empty())
      throw cv::input_error("no applicable prime divides |G|; pass -p");
    for (int q : ps) {
      cv::BatteryEntry entry{G, q, d.value_or(2), {}};
      for (const auto& cp : complex_paths)
        entry.complexes.push_back(cv::load_complex(G, cp));
      battery.push_back(entry);
    }
  } else if (const char* env = std::getenv("CHROMAVAR_BATTERY_DIR")) {
    battery = battery_from_dir(env, opt.caps, file_presheaves);
  } else {
    battery = cv::builtin_battery();
  }
  cv::VerificationReport report = cv::run_battery(battery, opt.caps, file_presheaves);
  emit(opt, cv::report_to_json(report), cv::report_to_tsv(report));
  long long total_ms = 0;
  for (const auto& c : report.checks) total_ms += c.wall_ms;
  std::cerr << "verify: " << report.checks.size() - report.failed() << "/"
            << report.checks.size() << " checks passed in " << total_ms << " ms\n";
  return report.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite presheaf calculus on F_p-vector spaces: Quillen "
               "categories, beta quotients, coends, Borel models"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cap-order", opt.caps.max_group_order, "group closure cap");
  app.add_option("--cap-enum", opt.caps.max_enum, "enumeration cap");
  app.add_option("--cap-level", opt.caps.max_level, "level-set cap for iso search");

  std::string group_path, presheaf_path, complex_path;
  std::vector<std::string> complex_paths;
  int p = 2, n = 1, d = 2;
  std::optional<int> opt_p, opt_d;

  auto* c_info = app.add_subcommand("group-info", "order, labels, generators");
  c_info->add_option("--group", group_path)->required();

  auto* c_sub = app.add_subcommand("subgroups", "elementary abelian p-subgroups");
  c_sub->add_option("--group", group_path)->required();
  c_sub->add_option("-p", p)->required();

  auto* c_rep = app.add_subcommand("rep", "Rep(-,G) level sizes and representatives");
  c_rep->add_option("--group", group_path)->required();
  c_rep->add_option("-p", p)->required();
  c_rep->add_option("-n,-d", d, "truncation dimension")->required();

  auto* c_qcat = app.add_subcommand("quillen-cat", "the category A_p(G)");
  c_qcat->add_option("--group", group_path)->required();
  c_qcat->add_option("-p", p)->required();

  auto* c_gl = app.add_subcommand("green-leary", "the category A_n(G)");
  c_gl->add_option("--group", group_path)->required();
  c_gl->add_option("-p", p)->required();
  c_gl->add_option("-n", n)->required();

  auto* c_beta = app.add_subcommand("beta", "beta_n quotient class counts");
  c_beta->add_option("--group", group_path);
  c_beta->add_option("--presheaf", presheaf_path);
  c_beta->add_option("-p", p);
  c_beta->add_option("-n", n)->required();
  c_beta->add_option("-d", d);

  auto* c_coend = app.add_subcommand("coend", "coend over A_p(G)");
  c_coend->add_option("--group", group_path)->required();
  c_coend->add_option("--complex", complex_path);
  c_coend->add_option("-p", p)->required();
  c_coend->add_option("-d", d);

  auto* c_glc = app.add_subcommand("gl-colimit", "colimit over A_n(G) vs beta_n Rep");
  c_glc->add_option("--group", group_path)->required();
  c_glc->add_option("-p", p)->required();
  c_glc->add_option("-n", n)->required();
  c_glc->add_option("-d", d);

  auto* c_yn = app.add_subcommand("yn", "the Y_n set and its G-orbits");
  c_yn->add_option("--group", group_path)->required();
  c_yn->add_option("--complex", complex_path);
  c_yn->add_option("-p", p)->required();
  c_yn->add_option("-n", n)->required();

  auto* c_hkr = app.add_subcommand("hkr-rank", "class-function module rank");
  c_hkr->add_option("--group", group_path)->required();
  c_hkr->add_option("--complex", complex_path);
  c_hkr->add_option("-p", p)->required();
  c_hkr->add_option("-n", n)->required();

  auto* c_verify = app.add_subcommand("verify", "run the statement battery");
  c_verify->add_option("--group", group_path);
  c_verify->add_option("--complex", complex_paths);
  c_verify->add_option_function<int>("-p", [&opt_p](int v) { opt_p = v; });
  c_verify->add_option_function<int>("-d", [&opt_d](int v) { opt_d = v; });
  c_verify->add_option("-n", n, "ignored: the battery fixes its own levels");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt.caps.max_group_order <= 0 || opt.caps.max_enum <= 0 ||
        opt.caps.max_level <= 0)
      throw cv::input_error("caps must be positive");
    if (c_info->parsed()) return cmd_group_info(opt, group_path);
    if (c_sub->parsed()) return cmd_subgroups(opt, group_path, p);
    if (c_rep->parsed()) return cmd_rep(opt, group_path, p, d);
    if (c_qcat->parsed()) return cmd_quillen_cat(opt, group_path, p);
    if (c_gl->parsed()) return cmd_green_leary(opt, group_path, p, n);
    if (c_beta->parsed()) return cmd_beta(opt, group_path, presheaf_path, p, n, d);
    if (c_coend->parsed()) return cmd_coend(opt, group_path, complex_path, p, d);
    if (c_glc->parsed()) return cmd_gl_colimit(opt, group_path, p, n, d);
    if (c_yn->parsed()) return cmd_yn(opt, group_path, complex_path, p, n);
    if (c_hkr->parsed()) return cmd_hkr_rank(opt, group_path, complex_path, p, n);
    if (c_verify->parsed()) return cmd_verify(opt, group_path, complex_paths, opt_p, opt_d);
  } catch (const cv::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cv::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
