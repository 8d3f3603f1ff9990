// Cross-checks docs/concordance.tsv against docs/operations.txt, the
// declaring headers and the test sources. Exit 0 on success, 1 otherwise.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_tsv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '\t');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = ".";
  std::string drop;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--root" && i + 1 < argc) root = argv[++i];
    else if (a == "--drop" && i + 1 < argc) drop = argv[++i];  // test mode: pretend its rows were deleted
    else {
      std::cerr << "usage: check_concordance [--root DIR] [--drop OPERATION]\n";
      return 2;
    }
  }
  std::vector<std::string> problems;

  std::map<std::string, std::string> ops;
  for (const auto& r : read_tsv(root / "docs/operations.txt")) {
    if (r.size() != 2) {
      problems.push_back("malformed registry line");
      continue;
    }
    ops[r[0]] = r[1];
    const auto text = slurp(root / r[1]);
    const std::regex decl("(\\b" + r[0] + "\\s*\\(|class " + r[0] + "\\b)");
    if (!std::regex_search(text, decl)) problems.push_back("operation " + r[0] + " not declared in " + r[1]);
  }

  auto rows = read_tsv(root / "docs/concordance.tsv");
  if (rows.empty() || rows[0][0] != "statement") problems.push_back("concordance header missing");
  else rows.erase(rows.begin());

  const std::set<std::string> statuses{"verified", "sufficiency-only", "erratum-noted", "out-of-scope"};
  std::set<std::string> covered;
  std::map<std::string, std::string> sources;
  for (const auto& e : fs::directory_iterator(root / "tests"))
    if (e.path().extension() == ".cpp" || e.path().extension() == ".c") sources[e.path().filename().string()] = slurp(e.path());
  const auto cmake = slurp(root / "CMakeLists.txt");

  for (const auto& r : rows) {
    if (r.size() != 4) {
      problems.push_back("concordance row with " + std::to_string(r.size()) + " columns: " + (r.empty() ? "" : r[0]));
      continue;
    }
    const auto& [statement, op, test, status] = std::tie(r[0], r[1], r[2], r[3]);
    if (op == drop) continue;
    if (!statuses.count(status)) problems.push_back("bad status '" + status + "' for: " + statement);
    if (status == "out-of-scope") continue;
    if (!ops.count(op)) problems.push_back("orphan entry: operation '" + op + "' is not registered (" + statement + ")");
    covered.insert(op);
    if (auto k = test.find("::"); k != std::string::npos) {
      const auto file = test.substr(0, k), name = test.substr(k + 2);
      if (!sources.count(file) || sources[file].find("TEST_CASE(\"" + name + "\")") == std::string::npos)
        problems.push_back("missing test " + test);
    } else if (test.rfind("acceptance:", 0) == 0) {
      if (sources["acceptance.cpp"].find("criterion(" + test.substr(11) + ",") == std::string::npos)
        problems.push_back("missing acceptance criterion " + test);
    } else if (test.rfind("ctest:", 0) == 0) {
      if (cmake.find("NAME " + test.substr(6) + " ") == std::string::npos) problems.push_back("missing ctest " + test);
    } else {
      problems.push_back("unrecognized test reference '" + test + "'");
    }
  }
  for (const auto& [op, header] : ops)
    if (!covered.count(op)) problems.push_back("orphan operation: '" + op + "' has no concordance entry");

  for (const auto& p : problems) std::cerr << "concordance: " << p << "\n";
  if (problems.empty()) std::cout << "concordance: " << rows.size() << " entries, " << ops.size() << " operations, ok\n";
  return problems.empty() ? 0 : 1;
}
