// cmorse-recipes — executes the checked-in dataset recipes through the
// public CLI and evaluates each recipe's claim list against the emitted CSV.
//
// A recipe is a pair of files in the recipes directory:
//   <name>.checks.json   { "id", "runs": [{"name","config"}], "claims": [...] }
//   <name>.config.json   a cmorse --config file per run
// Claims operate on CSV columns; see docs/recipes.md for the claim schema.
// Exit code is the number of failed recipes.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Row {
  std::map<std::string, std::string> cells;

  std::optional<double> num(const std::string& col) const {
    auto it = cells.find(col);
    if (it == cells.end() || it->second.empty()) return std::nullopt;
    return std::stod(it->second);
  }
  std::string str(const std::string& col) const {
    auto it = cells.find(col);
    return it == cells.end() ? std::string{} : it->second;
  }
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Row> parse_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string header;
  std::getline(in, header);
  const auto cols = split(header, ',');
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    Row r;
    for (size_t i = 0; i < cols.size() && i < cells.size(); ++i)
      r.cells[cols[i]] = cells[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<const Row*> apply_where(const std::vector<Row>& rows,
                                    const json& claim) {
  std::vector<const Row*> out;
  for (const auto& r : rows) {
    bool keep = true;
    if (claim.contains("where")) {
      const auto& w = claim.at("where");
      const std::string col = w.at("column");
      const std::string op = w.at("op");
      if (op == "nonempty") {
        keep = r.num(col).has_value();
      } else if (op == "empty") {
        keep = !r.num(col).has_value();
      } else {
        const auto v = r.num(col);
        if (!v) {
          keep = false;
        } else {
          const double bound = w.at("value").get<double>();
          keep = (op == "le" && *v <= bound) || (op == "lt" && *v < bound) ||
                 (op == "ge" && *v >= bound) || (op == "gt" && *v > bound);
        }
      }
    }
    if (keep) out.push_back(&r);
  }
  return out;
}

const Row* nearest(const std::vector<Row>& rows, const std::string& axis,
                   double at) {
  const Row* best = nullptr;
  double best_d = 0.0;
  for (const auto& r : rows) {
    const auto v = r.num(axis);
    if (!v) continue;
    const double d = std::abs(*v - at);
    if (!best || d < best_d) {
      best = &r;
      best_d = d;
    }
  }
  return best;
}

// Returns empty string on pass, reason on failure.
std::string eval_claim(const json& claim,
                       const std::map<std::string, std::vector<Row>>& runs) {
  const std::string type = claim.at("type");
  const std::string run = claim.value("run", "main");
  const auto it = runs.find(run);
  if (it == runs.end()) return "unknown run " + run;
  const auto& rows = it->second;

  if (type == "interior_min_at") {
    const std::string col = claim.at("column");
    const std::string axis = claim.at("axis");
    const double at = claim.at("at").get<double>();
    const int tol_steps = claim.value("tol_steps", 1);
    int argmin = -1;
    double best = 0.0;
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
      const auto a = r.num(axis);
      const auto v = r.num(col);
      if (!a || !v) continue;
      pts.emplace_back(*a, *v);
    }
    for (size_t i = 0; i < pts.size(); ++i)
      if (argmin < 0 || pts[i].second < best) {
        argmin = static_cast<int>(i);
        best = pts[i].second;
      }
    if (pts.size() < 3) return "too few rows";
    if (argmin <= 0 || argmin + 1 >= static_cast<int>(pts.size()))
      return "minimum not interior";
    const double step = pts[1].first - pts[0].first;
    if (std::abs(pts[argmin].first - at) > tol_steps * step + 1e-12)
      return "minimum at " + std::to_string(pts[argmin].first) +
             " expected near " + std::to_string(at);
    return {};
  }

  if (type == "argmin_gt") {
    const std::string col = claim.at("column");
    const std::string axis = claim.at("axis");
    const std::string run_b = claim.at("run_b");
    auto argmin_axis = [&](const std::vector<Row>& rs) -> std::optional<double> {
      std::optional<double> loc;
      double best = 0.0;
      for (const auto& r : rs) {
        const auto a = r.num(axis);
        const auto v = r.num(col);
        if (!a || !v) continue;
        if (!loc || *v < best) {
          loc = *a;
          best = *v;
        }
      }
      return loc;
    };
    const auto ib = runs.find(run_b);
    if (ib == runs.end()) return "unknown run " + run_b;
    const auto la = argmin_axis(rows);
    const auto lb = argmin_axis(ib->second);
    if (!la || !lb) return "no data";
    if (!(*lb > *la))
      return "argmin " + std::to_string(*lb) + " not beyond " + std::to_string(*la);
    return {};
  }

  if (type == "ratio_gt") {
    const std::string col = claim.at("column");
    const std::string axis = claim.at("axis");
    const Row* a = nearest(rows, axis, claim.at("at").get<double>());
    const Row* b = nearest(rows, axis, claim.at("over_at").get<double>());
    if (!a || !b) return "no rows";
    const auto va = a->num(col), vb = b->num(col);
    if (!va || !vb) return "empty cells";
    const double factor = claim.at("factor").get<double>();
    if (!(*va > factor * *vb))
      return "ratio " + std::to_string(*va / *vb) + " not > " + std::to_string(factor);
    return {};
  }

  if (type == "monotone") {
    const std::string col = claim.at("column");
    const bool increasing = claim.at("direction") == "increasing";
    const auto subset = apply_where(rows, claim);
    std::vector<double> vals;
    for (const Row* r : subset) {
      const auto v = r->num(col);
      if (v) vals.push_back(*v);
    }
    if (vals.size() < 2) return "too few rows";
    for (size_t i = 1; i < vals.size(); ++i) {
      if (increasing ? vals[i] <= vals[i - 1] : vals[i] >= vals[i - 1])
        return "not monotone at index " + std::to_string(i);
    }
    return {};
  }

  if (type == "all_empty" || type == "all_nonempty" || type == "all_equal") {
    const std::string col = claim.at("column");
    const auto subset = apply_where(rows, claim);
    if (subset.empty()) return "where-clause selected no rows";
    for (const Row* r : subset) {
      if (type == "all_empty" && r->num(col))
        return col + " not empty at m_i=" + r->str("m_i") + " a_i=" + r->str("a_i");
      if (type == "all_nonempty" && !r->num(col))
        return col + " empty at m_i=" + r->str("m_i") + " a_i=" + r->str("a_i");
      if (type == "all_equal" && r->str(col) != claim.at("value").get<std::string>())
        return col + "=" + r->str(col) + " at m_i=" + r->str("m_i") +
               " a_i=" + r->str("a_i");
    }
    return {};
  }

  return "unknown claim type " + type;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"run the checked-in dataset recipes through the cmorse CLI"};
  std::string cli_path = "cmorse";
  std::string recipes_dir = "recipes";
  std::string work_dir = "recipes_out";
  app.add_option("--cli", cli_path, "path to the cmorse binary");
  app.add_option("--recipes-dir", recipes_dir, "directory with *.checks.json");
  app.add_option("--work-dir", work_dir, "scratch directory for emitted datasets");
  CLI11_PARSE(app, argc, argv);

  std::error_code ec;
  fs::create_directories(work_dir, ec);

  std::vector<fs::path> checks;
  for (const auto& e : fs::directory_iterator(recipes_dir))
    if (e.path().filename().string().ends_with(".checks.json"))
      checks.push_back(e.path());
  std::sort(checks.begin(), checks.end());

  if (checks.empty()) {
    std::cerr << "no recipes found in " << recipes_dir << "\n";
    return 1;
  }

  int failed_recipes = 0;
  for (const auto& path : checks) {
    json spec;
    try {
      std::ifstream in(path);
      in >> spec;
    } catch (const std::exception& ex) {
      std::cout << "FAIL " << path.filename().string() << ": bad JSON: "
                << ex.what() << "\n";
      ++failed_recipes;
      continue;
    }
    const std::string id = spec.value("id", path.stem().string());
    bool recipe_ok = true;

    std::map<std::string, std::vector<Row>> runs;
    for (const auto& run : spec.at("runs")) {
      const std::string name = run.at("name");
      const fs::path cfg = path.parent_path() / run.at("config").get<std::string>();
      const fs::path out = fs::path(work_dir) / (id + "." + name + ".csv");
      const std::string cmd = std::string("\"") + cli_path + "\" --config \"" +
                              cfg.string() + "\" --out \"" + out.string() + "\"";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) {
        std::cout << "FAIL " << id << ": CLI exited with " << rc << " for run "
                  << name << "\n";
        recipe_ok = false;
        break;
      }
      try {
        runs[name] = parse_csv(out);
      } catch (const std::exception& ex) {
        std::cout << "FAIL " << id << ": " << ex.what() << "\n";
        recipe_ok = false;
        break;
      }
    }

    if (recipe_ok) {
      for (const auto& claim : spec.at("claims")) {
        const std::string text = claim.value("text", claim.at("type").get<std::string>());
        std::string err;
        try {
          err = eval_claim(claim, runs);
        } catch (const std::exception& ex) {
          err = ex.what();
        }
        if (err.empty()) {
          std::cout << "PASS " << id << ": " << text << "\n";
        } else {
          std::cout << "FAIL " << id << ": " << text << " (" << err << ")\n";
          recipe_ok = false;
        }
      }
    }
    if (!recipe_ok) ++failed_recipes;
  }

  std::cout << (failed_recipes == 0 ? "all recipes passed"
                                    : std::to_string(failed_recipes) + " recipe(s) failed")
            << "\n";
  return failed_recipes;
}
