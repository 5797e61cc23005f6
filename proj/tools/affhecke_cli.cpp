// affhecke: command-line front end.
//
//   affhecke kl --n 4 --y "[1,2,3,4]" --w "[3,4,1,2]"
//   affhecke verify key1 --n 2 --max-len 8 --json
//   affhecke table build --n 3 --max-len 6 --table t.klv
//   affhecke cells --n 4
//   affhecke orbits --n 5 --json
//
// Exit codes: 0 success / all checks pass, 1 a check failed or a runtime
// error, 2 usage error or unsupported configuration.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "affhecke/cells.hpp"
#include "affhecke/kl_table.hpp"
#include "affhecke/orbits.hpp"
#include "affhecke/suites.hpp"

using namespace affhecke;

namespace {

struct UsageError : Error {
  using Error::Error;
};

AffPerm parse_elem(int n, const std::string& text, const char* what) {
  try {
    return AffPerm::parse(n, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse ") + what + " '" + text + "': " + e.what());
  }
}

void require_rank(int n) {
  if (n < 2 || n > kMaxRank) throw UsageError("--n must be between 2 and " + std::to_string(kMaxRank));
}

std::unique_ptr<KLTable> open_table(int n, const std::string& path) {
  auto t = std::make_unique<KLTable>(n);
  if (path.empty()) return t;
  std::ifstream in(path);
  if (!in) throw Error("cannot open table '" + path + "'");
  t->load(in);
  return t;
}

std::vector<AffPerm> ball_elements(int n, int max_len, bool finite) {
  return finite ? enumerate_ball(n, n * (n - 1) / 2, finite_mask(n)) : enumerate_ball(n, max_len, full_mask(n));
}

int cmd_kl(int n, const std::string& ys, const std::string& ws, const std::string& table) {
  require_rank(n);
  const AffPerm y = parse_elem(n, ys, "--y");
  const AffPerm w = parse_elem(n, ws, "--w");
  auto t = open_table(n, table);
  std::cout << t->P(y, w).q_str() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, SuiteConfig cfg, const std::string& table, bool json) {
  std::unique_ptr<KLTable> t;
  if (!table.empty()) {
    if (cfg.n == 0) cfg.n = default_rank(suite);
    require_rank(cfg.n);
    t = open_table(cfg.n, table);
  }
  const Report r = run_suite(suite, cfg, t.get());
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
    std::cerr << r.summary();
  } else {
    std::cout << r.summary();
  }
  return r.failed() ? 1 : 0;
}

int cmd_table(const std::string& action, int n, int max_len, bool finite, const std::string& path, ExecMode mode) {
  require_rank(n);
  if (path.empty()) throw UsageError("table " + action + " needs --table PATH");
  if (action == "build") {
    if (!finite && max_len < 0) throw UsageError("table build needs --max-len or --finite");
    KLTable t(n);
    t.fill(ball_elements(n, max_len, finite), mode);
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    t.save(out);
    std::cout << "wrote " << t.row_count() << " rows to " << path << "\n";
    return 0;
  }
  if (action == "load") {
    auto t = open_table(n, path);
    int top = 0;
    for (ElemId w : t->computed_rows()) top = std::max(top, t->registry().length(w));
    std::cout << "loaded " << t->row_count() << " rows, max length " << top << "\n";
    return 0;
  }
  if (action == "extend") {
    if (!finite && max_len < 0) throw UsageError("table extend needs --max-len or --finite");
    KLTable t(n);
    std::set<ElemId> old;
    {
      std::ifstream in(path);
      if (!in) throw Error("cannot open table '" + path + "'");
      old = t.load(in);
    }
    t.fill(ball_elements(n, max_len, finite), mode);
    // append-only: existing lines stay byte-identical
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot write '" + path + "'");
    t.save_rows(out, old);
    std::cout << "appended " << t.row_count() - old.size() << " rows to " << path << "\n";
    return 0;
  }
  throw UsageError("unknown table action '" + action + "' (build, load, extend)");
}

int cmd_cells(int n, int max_len, const std::string& table, ExecMode mode) {
  require_rank(n);
  if (max_len < 0 && n > 5) throw UsageError("cells on S_n supports --n 2..5");
  if (max_len >= 0 && ((n == 2 && max_len > 14) || (n == 3 && max_len > 10) || (n == 4 && max_len > 6) || n > 4))
    throw UsageError("affine cells support --n 2 --max-len <= 14, --n 3 --max-len <= 10, --n 4 --max-len <= 6");
  auto t = open_table(n, table);
  CPrimeAlgebra alg(*t);
  ElementRegistry& reg = t->registry();
  const Ball ball = max_len < 0 ? Ball::finite_group(*t) : Ball::affine(*t, max_len);
  const CellData cd = cells_in_ball(ball, alg, {true, mode});

  auto members = [&](const std::vector<int>& cls) {
    Json a = Json::array();
    for (int i : cls) a.push_back(reg.elem(ball.ids[static_cast<std::size_t>(i)]).word_str());
    return a;
  };
  Json j;
  j["schema"] = "affhecke-cells/1";
  j["n"] = n;
  j["ball"] = max_len < 0 ? Json("finite") : Json{{"affine_max_len", max_len}};
  j["elements"] = ball.size();
  Json two = Json::array();
  for (std::size_t c = 0; c < cd.two_sided_classes.size(); ++c) {
    Json e;
    e["id"] = c;
    e["label"] = cd.labels[c] ? Json(cd.labels[c]->str()) : Json(nullptr);
    e["anchors"] = members(cd.anchors[c]);
    const int first = cd.two_sided_classes[c].front();
    const auto a = cd.a_exact[static_cast<std::size_t>(first)];
    int emp = -1;
    for (int i : cd.two_sided_classes[c]) emp = std::max(emp, cd.a_empirical[static_cast<std::size_t>(i)]);
    e["a"] = {{"value", a ? *a : emp}, {"exact", a.has_value()}};
    bool reliable = true;
    for (int i : cd.two_sided_classes[c]) reliable = reliable && ball.reliable(reg.length(ball.ids[static_cast<std::size_t>(i)]));
    e["approximate"] = !ball.finite && !cd.labels[c];
    e["interior"] = reliable;
    Json below = Json::array();
    for (std::size_t b = 0; b < cd.two_sided_classes.size(); ++b)
      if (b != c && cd.below[b][c]) below.push_back(b);
    e["lower_classes"] = below;
    e["members"] = members(cd.two_sided_classes[c]);
    two.push_back(std::move(e));
  }
  j["two_sided"] = two;
  Json left = Json::array(), right = Json::array();
  for (const auto& c : cd.left_classes) left.push_back(members(c));
  for (const auto& c : cd.right_classes) right.push_back(members(c));
  j["left"] = left;
  j["right"] = right;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_orbits(int n, bool json) {
  if (n < 1 || n > 12) throw UsageError("orbits supports --n 1..12");
  const auto parts = partitions(n);
  const auto covers = closure_covers(n);
  if (json) {
    Json j;
    j["schema"] = "affhecke-orbits/1";
    j["n"] = n;
    Json nodes = Json::array();
    for (const auto& r : parts)
      nodes.push_back({{"rho", r.str()}, {"jordan_type", transpose(r).str()}, {"dim", orbit_dim(r)}, {"cell_a", cell_a_value(r)}});
    Json cs = Json::array();
    for (const auto& [x, r] : covers) cs.push_back({{"lower", x.str()}, {"upper", r.str()}});
    j["orbits"] = nodes;
    j["covers"] = cs;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "closure order of nilpotent orbits O_rho, n=" << n << " (Jordan type rho*)\n";
  for (const auto& r : parts) {
    std::cout << r.str() << "  dim " << orbit_dim(r) << "  jordan " << transpose(r).str() << "  covers:";
    for (const auto& [x, up] : covers)
      if (up == r) std::cout << " " << x.str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebras of GL_n: KL polynomials, cells and cell bimodules"};
  app.require_subcommand(1);

  int n = 0;
  int max_len = -1;
  int depth = 12;
  int gen_len = -1;
  int range = -1;
  int threads = 0;
  bool json = false;
  bool serial = false;
  bool finite = false;
  std::string table, ys, ws, suite, action;

  auto common = [&](CLI::App* c) {
    c->add_option("--n", n, "rank n of GL_n");
    c->add_option("--table", table, "KL table file (klv1)");
    c->add_flag("--serial", serial, "use the serial reference kernels");
    c->add_option("--threads", threads, "OpenMP thread count");
  };

  auto* kl = app.add_subcommand("kl", "print P_{y,w} as a polynomial in q");
  common(kl);
  kl->add_option("--y", ys, "element y (window or word)")->required();
  kl->add_option("--w", ws, "element w (window or word)")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-len", max_len, "ball bound");
  verify->add_option("--depth", depth, "star-path search depth");
  verify->add_option("--gen-len", gen_len, "generator length bound");
  verify->add_option("--range", range, "weight entry bound");
  verify->add_flag("--json", json, "emit the JSON report on stdout");

  auto* tab = app.add_subcommand("table", "build, load or extend a KL table file");
  common(tab);
  tab->add_option("action", action, "build | load | extend")->required();
  tab->add_option("--max-len", max_len, "fill W_a up to this length");
  tab->add_flag("--finite", finite, "fill the finite group S_n");

  auto* cells = app.add_subcommand("cells", "cell decomposition of S_n or of an affine ball, as JSON");
  common(cells);
  cells->add_option("--max-len", max_len, "affine ball bound (omit for S_n)");

  auto* orbits = app.add_subcommand("orbits", "closure order of nilpotent orbits");
  orbits->add_option("--n", n, "n")->required();
  orbits->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) set_num_threads(threads);
    const ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;
    if (*kl) return cmd_kl(n, ys, ws, table);
    if (*verify) {
      SuiteConfig cfg;
      cfg.n = n;
      cfg.max_len = max_len;
      cfg.depth = depth;
      cfg.gen_len = gen_len;
      cfg.range = range;
      cfg.mode = mode;
      return cmd_verify(suite, cfg, table, json);
    }
    if (*tab) return cmd_table(action, n, max_len, finite, table, mode);
    if (*cells) return cmd_cells(n, max_len, table, mode);
    if (*orbits) return cmd_orbits(n, json);
  } catch (const UnsupportedConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
