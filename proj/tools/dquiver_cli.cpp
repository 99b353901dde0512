// Command-line front end: list indecomposables, check candidate sequences,
// enumerate exceptional sequences, cross-validate the geometric model against
// the homological one, and export the derived structures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dquiver/ar_quiver.hpp"
#include "dquiver/curves.hpp"
#include "dquiver/exceptional.hpp"
#include "dquiver/noncross.hpp"
#include "dquiver/quiver.hpp"
#include "dquiver/rep.hpp"

using nlohmann::json;

namespace {

json classJson(const dq::CurveClass& c) { return json{{"i", c.i}, {"j", c.j}}; }

json sequenceJson(const std::vector<dq::CurveClass>& seq, int n) {
  json classes = json::array(), dims = json::array();
  for (const dq::CurveClass& c : seq) {
    classes.push_back(classJson(c));
    dims.push_back(dq::dimsToString(dq::repOf(c, n).dims));
  }
  return json{{"classes", classes}, {"dims", dims}};
}

json partitionJson(const dq::DPartition& p) {
  json blocks = json::array();
  json zero = nullptr;
  for (const auto& b : p.blocks) {
    bool selfNegative = false;
    for (int x : b)
      if (std::find(b.begin(), b.end(), -x) != b.end()) selfNegative = true;
    if (selfNegative)
      zero = b;
    else
      blocks.push_back(b);
  }
  return json{{"blocks", blocks}, {"zeroBlock", zero}};
}

// Splits at commas that sit outside parentheses, so both
// "00101,00001" and "(3,5),(4,5)" come apart correctly.
std::vector<std::string> splitTopLevel(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<dq::CurveClass> parseSequence(int n, const std::string& dimsArg,
                                          const std::string& classesArg) {
  if (dimsArg.empty() == classesArg.empty())
    throw std::invalid_argument("provide exactly one of --dims and --classes");
  std::vector<dq::CurveClass> seq;
  if (!dimsArg.empty()) {
    for (const std::string& tok : splitTopLevel(dimsArg)) {
      dq::DimVec d = dq::dimsFromString(tok, n);
      auto c = dq::classOfDims(d, n);
      if (!c) throw std::invalid_argument("not an indecomposable dimension vector: " + tok);
      seq.push_back(*c);
    }
  } else {
    for (const std::string& tok : splitTopLevel(classesArg))
      seq.push_back(dq::classFromString(tok, n));
  }
  return seq;
}

std::ostream& openOutput(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int cmdIndec(int n, const std::string& format, std::ostream& out) {
  std::vector<dq::CurveClass> classes = dq::allClasses(n);
  if (format == "json") {
    json rows = json::array();
    for (const dq::CurveClass& c : classes)
      rows.push_back(json{{"class", classJson(c)},
                          {"dims", dq::dimsToString(dq::repOf(c, n).dims)}});
    out << rows.dump(2) << "\n";
  } else {
    for (const dq::CurveClass& c : classes)
      out << dq::classToString(c) << "\t" << dq::dimsToString(dq::repOf(c, n).dims)
          << "\n";
  }
  return 0;
}

int cmdCheck(int n, const std::string& dimsArg, const std::string& classesArg,
             const std::string& format, std::ostream& out) {
  std::vector<dq::CurveClass> seq = parseSequence(n, dimsArg, classesArg);
  bool geo = dq::isExceptionalCurveSequence(seq, n);
  bool hom = dq::oracleIsExceptionalSequence(seq, n);
  std::vector<dq::DPartition> chain;
  if (geo) chain = dq::chainOfSequence(seq, n);
  if (format == "json") {
    json rep{{"n", n},
             {"sequence", sequenceJson(seq, n)},
             {"geometric", geo},
             {"homological", hom}};
    if (geo) {
      json jchain = json::array();
      for (const dq::DPartition& p : chain) jchain.push_back(partitionJson(p));
      rep["chain"] = jchain;
    }
    out << rep.dump(2) << "\n";
  } else {
    out << "geometric:   " << (geo ? "pass" : "fail") << "\n";
    out << "homological: " << (hom ? "pass" : "fail") << "\n";
    for (const dq::DPartition& p : chain) out << dq::partitionToString(p) << "\n";
  }
  return geo && hom ? 0 : 1;
}

int cmdEnumerate(int n, int length, const std::string& mode, long long maxResults,
                 std::ostream& out) {
  if (length < 1 || length > n)
    throw std::invalid_argument("--length must lie in 1.." + std::to_string(n));
  if (n > 6) throw dq::ResourceLimitError("enumerate: n > 6 not supported");
  auto all = dq::enumerateSequences(n, length, mode == "oracle");
  long long count = 0;
  bool partial = false;
  for (const auto& seq : all) {
    if (static_cast<int>(seq.size()) != length) continue;
    if (maxResults > 0 && count == maxResults) {
      partial = true;
      break;
    }
    out << sequenceJson(seq, n).dump() << "\n";
    ++count;
  }
  json summary{{"n", n}, {"length", length}, {"mode", mode}, {"count", count}};
  if (partial) summary["partial"] = true;
  out << summary.dump() << "\n";
  return partial ? 3 : 0;
}

int cmdXval(int n, int maxLen, std::ostream& out) {
  auto mismatches = dq::crossValidate(n, maxLen);
  json rep{{"n", n}, {"maxLen", maxLen}, {"mismatches", json::array()}};
  for (const auto& m : mismatches)
    rep["mismatches"].push_back(json{{"sequence", sequenceJson(m.seq, n)},
                                     {"geometric", m.geometric},
                                     {"homological", m.homological}});
  if (n <= 5) {
    dq::BijectionReport b = dq::bijectionCheck(n, /*completeOnly=*/n == 5);
    rep["bijection"] = json{{"ok", b.ok},
                            {"sequences", b.seqCountByLen},
                            {"chains", b.chainCountByLen}};
    if (!b.ok) rep["bijection"]["failure"] = b.failure;
    if (!b.ok) {
      out << rep.dump(2) << "\n";
      return 1;
    }
  }
  out << rep.dump(2) << "\n";
  return mismatches.empty() ? 0 : 1;
}

void exportARQuiver(int n, const std::string& format, std::ostream& out) {
  dq::ARQuiver ar = dq::buildARQuiver(n);
  if (format == "dot") {
    out << "digraph ar_quiver {\n  rankdir=LR;\n";
    for (size_t v = 0; v < ar.verts.size(); ++v) {
      out << "  v" << v << " [label=\"" << dq::dimsToString(ar.verts[v]) << "\"";
      if (ar.projective[v]) out << ",shape=box";
      else if (ar.injective[v]) out << ",shape=diamond";
      out << "];\n";
    }
    for (auto [a, b] : ar.arrows) out << "  v" << a << " -> v" << b << ";\n";
    for (size_t v = 0; v < ar.verts.size(); ++v)
      if (ar.tau[v])
        out << "  v" << v << " -> v" << *ar.tau[v] << " [style=dashed,constraint=false];\n";
    out << "}\n";
  } else {
    json verts = json::array(), tau = json::array();
    for (size_t v = 0; v < ar.verts.size(); ++v) {
      verts.push_back(dq::dimsToString(ar.verts[v]));
      tau.push_back(ar.tau[v] ? json(*ar.tau[v]) : json(nullptr));
    }
    out << json{{"n", n},
                {"vertices", verts},
                {"arrows", ar.arrows},
                {"tau", tau},
                {"projective", ar.projective},
                {"injective", ar.injective}}
               .dump(2)
        << "\n";
  }
}

void exportNCLattice(int n, const std::string& format, std::ostream& out) {
  dq::NCPoset poset = dq::buildNCInterval(n);
  if (format == "dot") {
    out << "graph nc_lattice {\n  rankdir=BT;\n";
    for (size_t v = 0; v < poset.elems.size(); ++v)
      out << "  p" << v << " [label=\"" << dq::partitionToString(poset.elems[v])
          << "\"];\n";
    for (size_t v = 0; v < poset.elems.size(); ++v)
      for (int c : poset.coversOf[v]) out << "  p" << v << " -- p" << c << ";\n";
    out << "}\n";
  } else {
    json elems = json::array();
    for (const dq::DPartition& p : poset.elems) elems.push_back(partitionJson(p));
    json covers = json::array();
    for (size_t v = 0; v < poset.elems.size(); ++v)
      for (int c : poset.coversOf[v]) covers.push_back(json::array({v, c}));
    out << json{{"n", n}, {"elements", elems}, {"rank", poset.rank}, {"covers", covers}}
               .dump(2)
        << "\n";
  }
}

void exportCurves(int n, std::ostream& out) {
  json rows = json::array();
  for (const dq::CurveClass& c : dq::allClasses(n)) {
    dq::Rep r = dq::repOf(c, n);
    rows.push_back(json{{"i", c.i},
                        {"j", c.j},
                        {"dims", dq::dimsToString(r.dims)},
                        {"bar", classJson(dq::bar(c, n))},
                        {"shift", classJson(dq::rho(c, n))}});
  }
  out << json{{"n", n}, {"classes", rows}}.dump(2) << "\n";
}

int cmdExport(int n, const std::string& what, const std::string& format,
              std::ostream& out) {
  if (what == "ar-quiver") {
    exportARQuiver(n, format, out);
  } else if (what == "nc-lattice") {
    exportNCLattice(n, format, out);
  } else if (what == "curves") {
    if (format == "dot") throw std::invalid_argument("curves export has no dot form");
    exportCurves(n, out);
  } else {
    throw std::invalid_argument("unknown export target: " + what);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional sequences on the type-D quiver: representations, "
               "curves on the punctured disk, and noncrossing partitions"};
  app.set_version_flag("--version", "dquiver 1.0.0");
  app.set_config("--config");
  app.require_subcommand(1);

  int n = 5;
  std::string format, output, mode = "geometric";
  std::string dimsArg, classesArg, what;
  int length = 1, maxLen = 2;
  long long maxResults = 0;

  CLI::App* indec = app.add_subcommand("indec", "list classes and dimension vectors");
  indec->add_option("--n", n, "rank")->required()->check(CLI::Range(3, 24));
  indec->add_option("--format", format, "text|json");

  CLI::App* check = app.add_subcommand("check", "test one candidate sequence");
  check->add_option("--n", n, "rank")->required()->check(CLI::Range(3, 24));
  check->add_option("--dims", dimsArg, "comma-separated dimension strings, in order");
  check->add_option("--classes", classesArg, "comma-separated classes, e.g. (3,5),(2,-5)");
  check->add_option("--format", format, "text|json");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream exceptional sequences");
  enumerate->add_option("--n", n, "rank")->required()->check(CLI::Range(3, 24));
  enumerate->add_option("--length", length, "exact sequence length")->required();
  enumerate->add_option("--mode", mode, "geometric|oracle")
      ->check(CLI::IsMember({"geometric", "oracle"}));
  enumerate->add_option("--max-results", maxResults, "stop after this many (0 = all)");

  CLI::App* xval = app.add_subcommand("xval", "cross-validate the two models");
  xval->add_option("--n", n, "rank")->required()->check(CLI::Range(3, 24));
  xval->add_option("--max-len", maxLen, "compare sequences up to this length")->required();

  CLI::App* exp = app.add_subcommand("export", "write derived structures");
  exp->add_option("--n", n, "rank")->required()->check(CLI::Range(3, 24));
  exp->add_option("--what", what, "ar-quiver|nc-lattice|curves")->required();
  exp->add_option("--format", format, "dot|json");
  exp->add_option("--output", output, "file path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad usage exits 2
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    std::ofstream file;
    std::ostream& out = openOutput(output, file);
    if (*indec) {
      rc = cmdIndec(n, format, out);
    } else if (*check) {
      rc = cmdCheck(n, dimsArg, classesArg, format, out);
    } else if (*enumerate) {
      rc = cmdEnumerate(n, length, mode, maxResults, out);
    } else if (*xval) {
      rc = cmdXval(n, maxLen, out);
    } else if (*exp) {
      rc = cmdExport(n, what, format.empty() ? "json" : format, out);
    }
  } catch (const dq::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "; reduce --n or --max-len\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "# wall %.3fs\n", wall.count());
  return rc;
}
