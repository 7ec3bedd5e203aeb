// cppforge command line: field-info | construct | classify | scan | verify.
// Exit codes: 0 ok, 1 mismatch, 2 configuration or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cppforge/cppforge.hpp"

using namespace cppforge;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ConfigInvalid, "cannot write '" + path + "'");
  out << text;
}

void emitReport(const scan::ScanReport& rep, const scan::ScanConfig& cfg) {
  if (cfg.format == scan::Format::Csv) {
    emit(scan::witnessesToCsv(rep.witnesses), cfg.output);
  } else {
    emit(scan::reportToJson(rep).dump(2) + "\n", cfg.output);
  }
  std::cerr << "constructed " << rep.counts.constructed << ", predicted good " << rep.counts.predictedGood
            << ", oracle good " << rep.counts.oracleGood << ", witnesses " << rep.witnesses.size() << " ("
            << rep.scalarClassCount << " scalar classes), brute-force verified " << rep.counts.verifiedCpp
            << ", skipped " << rep.counts.skipped << ", mismatches " << rep.mismatches.size() << "\n";
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete permutation monomials from good exceptional polynomials"};
  app.require_subcommand(1);

  scan::ScanConfig cfg;
  std::string family, format = "json";
  std::vector<std::string> ranges;

  auto addField = [&](CLI::App* sub, bool withN) {
    sub->add_option("--p", cfg.p, "characteristic")->required();
    sub->add_option("--m", cfg.m, "q = p^m")->capture_default_str();
    if (withN) sub->add_option("--n", cfg.n, "extension degree n (deg g = n + 1)");
  };
  auto addScanOpts = [&](CLI::App* sub) {
    addField(sub, true);
    sub->add_option("--family", family, "A1 A2 B C D_lin2 D_lin3 D_general Deg8 Deg9")->required();
    sub->add_option("--range", ranges, "parameter values, e.g. e=1,2 or a=1..4 (repeatable)");
    sub->add_option("--brute-bound", cfg.bruteForceBound, "largest field checked exhaustively")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
    sub->add_option("--out", cfg.output, "output path (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* fieldInfo = app.add_subcommand("field-info", "moduli, primitive element and CPP exponent");
  addField(fieldInfo, true);
  auto* construct = app.add_subcommand("construct", "build family members and compare with the goodness oracle");
  addScanOpts(construct);
  auto* classify = app.add_subcommand("classify", "classify a family exhaustively without witnesses");
  addScanOpts(classify);
  auto* scanCmd = app.add_subcommand("scan", "construct, extract witnesses and verify them");
  addScanOpts(scanCmd);
  auto* verify = app.add_subcommand("verify", "re-verify a witness file (JSON or CSV)");
  verify->add_option("file", cfg.input, "witness file")->required();
  verify->add_option("--brute-bound", cfg.bruteForceBound, "largest field checked exhaustively")->capture_default_str();
  verify->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  verify->add_option("--out", cfg.output, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fieldInfo->parsed()) {
      cfg.command = scan::Command::FieldInfo;
      scan::validate(cfg);
      emit(scan::fieldInfo(cfg.p, cfg.m, cfg.n).dump(2) + "\n", cfg.output);
      return 0;
    }
    if (verify->parsed()) {
      cfg.command = scan::Command::Verify;
      scan::validate(cfg);
      const auto rep = scan::verifyWitnessFile(cfg.input, cfg.bruteForceBound, cfg.workers);
      emitReport(rep, cfg);
      return rep.exitCode();
    }
    cfg.command = construct->parsed() ? scan::Command::Construct
                  : classify->parsed() ? scan::Command::Classify
                                       : scan::Command::Scan;
    cfg.family = families::tagFromName(family);
    cfg.format = format == "csv" ? scan::Format::Csv : scan::Format::Json;
    for (const auto& r : ranges) scan::parseRange(cfg.ranges, r);
    const auto rep = scan::runScan(cfg);
    emitReport(rep, cfg);
    return rep.exitCode();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
