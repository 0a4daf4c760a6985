#pragma once

#include "csmarr/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace csmarr::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

namespace fs = std::filesystem;
using nlohmann::json;

inline Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Arrangement a = parse_arrangement(ss.str());
  if (a.name().empty()) a.set_name(fs::path(path).stem().string());
  return a;
}

inline std::vector<std::int64_t> parse_primes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long p = 0;
    try {
      p = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InputError(0, "malformed prime list '" + text + "'");
    out.push_back(p);
  }
  return out;
}

struct CorpusEntry {
  std::string file;
  std::string status;  // "pass", "fail", "error"
  std::string error;
  std::optional<VerificationReport> verification;
};

inline CorpusEntry verify_file(const fs::path& path) {
  CorpusEntry e;
  e.file = path.filename().string();
  try {
    Arrangement a = load_arrangement(path.string());
    e.verification = verify_routes(a);
    e.status = e.verification->pass ? "pass" : "fail";
  } catch (const std::exception& ex) {
    e.status = "error";
    e.error = ex.what();
  }
  return e;
}

/// Verifies every `.arr` file in `dir`. Files run concurrently; results are
/// ordered by filename.
inline std::vector<CorpusEntry> run_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".arr") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::future<CorpusEntry>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, verify_file, f));
  std::vector<CorpusEntry> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

/// Entry point shared by the `csmarr` binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact CSM classes, logarithmic derivations and Chern class verification for hyperplane arrangements",
               "csmarr"};
  app.require_subcommand(1);

  std::string input, dir, primes_text = "101,103,107";
  bool as_json = false, timing = false;
  int max_degree = -1, m = 3, d = 1, e = 1;
  std::size_t n = 2;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "arrangement file (.arr)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "emit a JSON report");
    sub->add_flag("--timing", timing, "include elapsed time (breaks byte-identical output)");
  };

  auto* lattice = app.add_subcommand("lattice", "intersection lattice and Mobius values");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial with the finite-field check");
  auto* csm = app.add_subcommand("csm", "CSM class of the projective complement");
  auto* derivations = app.add_subcommand("derivations", "graded pieces of the logarithmic derivation module");
  auto* freeness = app.add_subcommand("freeness", "freeness by Saito's criterion");
  auto* verify = app.add_subcommand("verify", "compare every route for c(Der(D)) and the CSM class");
  auto* example41 = app.add_subcommand("example41", "m transversal hypersurfaces of one class: both computations");
  auto* projection = app.add_subcommand("projection", "projection formula for O_X and O_Y");
  auto* full = app.add_subcommand("report", "all analyses for one arrangement");
  auto* corpus = app.add_subcommand("corpus", "verify every .arr file in a directory");

  for (auto* sub : {lattice, charpoly, csm, derivations, freeness, verify, full}) {
    add_input(sub);
    add_common(sub);
  }
  for (auto* sub : {example41, projection, corpus}) add_common(sub);
  for (auto* sub : {charpoly, full}) sub->add_option("--primes", primes_text, "comma-separated primes for the oracle");
  for (auto* sub : {derivations, full})
    sub->add_option("--max-degree", max_degree, "highest degree (default |A|)")->check(CLI::NonNegativeNumber);
  example41->add_option("--m", m, "number of hypersurfaces (>= 2)")->check(CLI::Range(2, 1000));
  example41->add_option("--n", n, "truncation order");
  projection->add_option("--d", d, "degree of X")->check(CLI::PositiveNumber);
  projection->add_option("--e", e, "degree of Y")->check(CLI::PositiveNumber);
  projection->add_option("--n", n, "ambient dimension (>= 2)")->check(CLI::Range(2, 1000));
  corpus->add_option("--dir,dir", dir, "directory of .arr files")->required();

  std::vector<std::string> argv_storage{"csmarr"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  json doc = {{"tool", report::tool_json()}};
  std::ostringstream text;
  int code = kOk;

  try {
    if (*example41) {
      auto j = report::hypersurface_series_json(m, n);
      doc["analyses"] = {"example41"};
      doc["example41"] = j;
      text << "m = " << m << ", n = " << n << "\n"
           << "  csm side:     " << j["csm_side"].get<std::string>() << "\n"
           << "  closed form:  " << j["closed_form"].get<std::string>() << "\n"
           << "  equal: " << (j["equal"].get<bool>() ? "yes" : "NO") << "\n"
           << "  c(O_JD(D)):   " << j["koszul"]["jacobian_class"].get<std::string>() << "\n"
           << "  Koszul route: " << j["koszul"]["derivation_class"].get<std::string>() << " ("
           << (j["koszul"]["equal"].get<bool>() ? "agrees" : "DISAGREES") << ")\n";
      if (!j["equal"].get<bool>() || !j["koszul"]["equal"].get<bool>()) code = kVerificationFailed;
    } else if (*projection) {
      auto j = report::projection_json(d, e, n);
      doc["analyses"] = {"projection"};
      doc["projection"] = j;
      for (const char* sheaf : {"O_X", "O_Y"}) {
        text << sheaf << ": i_*(c(i^*F) cap [X]) = " << j[sheaf]["pushforward"].get<std::string>()
             << ", c(F) cap i_*[X] = " << j[sheaf]["capped"].get<std::string>() << " -> "
             << (j[sheaf]["equal"].get<bool>() ? "equal" : "not equal") << "\n";
      }
      if (j["O_X"]["equal"].get<bool>() || !j["O_Y"]["equal"].get<bool>()) code = kVerificationFailed;
    } else if (*corpus) {
      auto entries = run_corpus(dir);
      json list = json::array();
      std::size_t passed = 0, failed = 0, errors = 0;
      for (const auto& en : entries) {
        json item = {{"file", en.file}, {"status", en.status}};
        if (en.verification) item["verification"] = report::verification_json(*en.verification);
        if (!en.error.empty()) item["error"] = en.error;
        list.push_back(item);
        text << en.file << ": " << en.status;
        if (en.verification) {
          text << " [";
          for (const auto& r : en.verification->computed_routes()) text << " " << r;
          text << " ] " << en.verification->routes.at(kRouteLatticeCsm)->to_string();
        }
        if (!en.error.empty()) text << " (" << en.error << ")";
        text << "\n";
        (en.status == "pass" ? passed : en.status == "fail" ? failed : errors)++;
      }
      doc["analyses"] = {"corpus"};
      doc["entries"] = list;
      doc["summary"] = {{"total", entries.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors}};
      text << "summary: " << entries.size() << " file(s), " << passed << " passed, " << failed << " failed, "
           << errors << " error(s)\n";
      code = errors ? kInputError : failed ? kVerificationFailed : kOk;
    } else {
      Arrangement a = load_arrangement(input);
      doc["arrangement"] = report::arrangement_json(a);
      text << report::arrangement_text(a);
      const bool all = full->parsed();
      json analyses = json::array();
      std::optional<IntersectionLattice> lat;
      auto lattice_of = [&]() -> const IntersectionLattice& {
        if (!lat) lat = build_lattice(a);
        return *lat;
      };
      if (all || lattice->parsed()) {
        analyses.push_back("lattice");
        doc["lattice"] = report::lattice_json(lattice_of());
        text << report::lattice_text(lattice_of());
      }
      if (all || charpoly->parsed()) {
        analyses.push_back("charpoly");
        const IntPoly chi = char_poly(lattice_of());
        auto oracle = report::run_oracle(a, chi, parse_primes(primes_text));
        doc["charpoly"] = report::charpoly_json(chi, oracle);
        text << report::charpoly_text(chi, oracle);
        for (const auto& c : oracle)
          if (c.error.empty() && !c.ok()) code = kVerificationFailed;
      }
      if (all || csm->parsed()) {
        analyses.push_back("csm");
        const CsmClass c = csm_complement(lattice_of());
        doc["csm"] = report::csm_json(c);
        text << report::csm_text(c);
      }
      if (all || derivations->parsed()) {
        analyses.push_back("derivations");
        const int top = max_degree >= 0 ? max_degree : static_cast<int>(a.size());
        doc["derivations"] = report::derivations_json(a, top);
        const auto& dj = doc["derivations"];
        text << "logarithmic derivations up to degree " << top << ":\n";
        for (const auto& piece : dj["degrees"])
          text << "  degree " << piece["degree"].get<int>() << ": dim " << piece["dimension"].get<std::size_t>()
               << "\n";
        text << "  minimal generators:";
        for (const auto& g : dj["minimal_generators"]) text << "\n    " << g.get<std::string>();
        text << "\n";
      }
      if (all || freeness->parsed()) {
        analyses.push_back("freeness");
        const FreenessReport fr = decide_freeness(a);
        doc["freeness"] = report::freeness_json(fr);
        text << report::freeness_text(fr);
      }
      if (all || verify->parsed()) {
        analyses.push_back("verify");
        const VerificationReport v = verify_routes(a);
        doc["verification"] = report::verification_json(v);
        text << report::verification_text(v);
        if (!v.pass) code = kVerificationFailed;
      }
      doc["analyses"] = analyses;
    }
  } catch (const InputError& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputError;
  } catch (const BadPrime& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputError;
  }

  if (timing) {
    const double ms = elapsed_ms();
    doc["timing_ms"] = ms;
    text << "elapsed: " << ms << " ms\n";
  }
  if (as_json) out << doc.dump(2) << "\n";
  else out << text.str();
  return code;
}

}  // namespace csmarr::cli
