// ringprob command-line front end. Everything goes through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringprob/ringprob.h"

namespace {

struct Options {
  std::string mode = "cp";
  std::string format;
  std::uint64_t max_order = 0;
  unsigned jobs = 1;
  std::string objective = "max";
  std::string epsilon;
  std::uint64_t oracle_max = 0;
  std::string out;
};

struct RingHandle {
  ringprob_ring* ring = nullptr;
  ~RingHandle() { ringprob_ring_free(ring); }
};

int fail(ringprob_status st) {
  std::cerr << "ringprob: " << ringprob_last_error() << "\n";
  return st;
}

ringprob_config make_config(const Options& o, ringprob_format fallback) {
  ringprob_config c;
  ringprob_config_init(&c);
  c.mode = o.mode == "zp" ? RINGPROB_MODE_ZP : RINGPROB_MODE_CP;
  c.format = o.format.empty() ? fallback
             : o.format == "csv" ? RINGPROB_FORMAT_CSV
             : o.format == "text" ? RINGPROB_FORMAT_TEXT
                                  : RINGPROB_FORMAT_JSON;
  c.max_order = o.max_order;
  c.jobs = o.jobs;
  c.objective = o.objective == "sum"   ? RINGPROB_OBJECTIVE_SUM
                : o.objective == "lex" ? RINGPROB_OBJECTIVE_LEX
                                       : RINGPROB_OBJECTIVE_MAX;
  c.epsilon = o.epsilon.empty() ? nullptr : o.epsilon.c_str();
  c.oracle_max = o.oracle_max;
  return c;
}

int open_ring(const std::string& path, const std::string& family, RingHandle& h) {
  ringprob_status st;
  if (!family.empty())
    st = ringprob_ring_build(family.c_str(), &h.ring);
  else if (!path.empty())
    st = ringprob_ring_load(path.c_str(), &h.ring);
  else {
    std::cerr << "ringprob: give a ring file or --family\n";
    return RINGPROB_MALFORMED;
  }
  return st == RINGPROB_OK ? 0 : fail(st);
}

// Prints or writes the command output; the status becomes the exit code.
int emit(ringprob_status st, char* text, const std::string& out) {
  if (st != RINGPROB_OK && st != RINGPROB_ASSERTION_FAILED) return fail(st);
  if (out.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
  } else {
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "ringprob: cannot write " << out << "\n";
      ringprob_string_free(text);
      return RINGPROB_ERROR;
    }
  }
  ringprob_string_free(text);
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commuting / zero-product probabilities and ideal extraction for finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ringprob_version()));

  Options o;
  app.add_option("--mode", o.mode, "cp or zp")->check(CLI::IsMember({"cp", "zp"}));
  app.add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-order", o.max_order, "lower the cardinality cap (default 4096)");
  app.add_option("--jobs", o.jobs, "worker threads for scan and enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--objective", o.objective, "oracle objective: max, sum or lex")
      ->check(CLI::IsMember({"max", "sum", "lex"}));
  app.add_option("--epsilon", o.epsilon, "override epsilon (a/b)");
  app.add_option("--oracle-max", o.oracle_max, "scan: largest order with an oracle column");
  app.add_option("--out", o.out, "output file (enumerate: output directory)");

  std::string ring_path, family, suite;
  auto ring_args = [&](CLI::App* sub) {
    sub->add_option("ring", ring_path, "ring file (JSON)");
    sub->add_option("--family", family, "build a family ring instead, e.g. M2:2");
  };

  auto* info = app.add_subcommand("info", "probabilities and orbit maxima");
  ring_args(info);
  auto* extract = app.add_subcommand("extract", "run the extraction pipeline");
  ring_args(extract);
  auto* verify = app.add_subcommand("verify", "run one verification suite");
  ring_args(verify);
  verify->add_option("--suite", suite, "thm1 thm3 prop21 prop31 lemma32 converse eberhard")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm3", "prop21", "prop31", "lemma32", "converse", "eberhard"}));
  auto* oracle = app.add_subcommand("oracle", "brute-force optimal ideal");
  ring_args(oracle);

  std::vector<std::string> grids;
  auto* scan = app.add_subcommand("scan", "sweep family grids, one CSV row per ring");
  scan->add_option("grids", grids, "e.g. Z:2..64 M2:2,3 zero:2..64")->required();

  std::vector<std::uint32_t> orders;
  auto* enumerate = app.add_subcommand("enumerate", "census of structure tables on a shape");
  enumerate->add_option("orders", orders, "cyclic orders, e.g. 2 2 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : RINGPROB_ERROR;
  }

  if (scan->parsed()) {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_CSV);
    std::vector<const char*> ptrs;
    for (const auto& g : grids) ptrs.push_back(g.c_str());
    char* text = nullptr;
    const ringprob_status st = ringprob_scan(ptrs.data(), ptrs.size(), &c, &text);
    return emit(st, text, o.out);
  }
  if (enumerate->parsed()) {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_TEXT);
    char* text = nullptr;
    const ringprob_status st = ringprob_enumerate(orders.data(), orders.size(),
                                                  o.out.empty() ? nullptr : o.out.c_str(), &c, &text);
    return emit(st, text, "");
  }

  RingHandle h;
  if (const int rc = open_ring(ring_path, family, h)) return rc;
  char* text = nullptr;
  ringprob_status st;
  if (info->parsed()) {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_TEXT);
    st = ringprob_info(h.ring, &c, &text);
  } else if (extract->parsed()) {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_JSON);
    st = ringprob_extract(h.ring, &c, &text);
  } else if (verify->parsed()) {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_TEXT);
    st = ringprob_verify(h.ring, suite.c_str(), &c, &text);
  } else {
    const ringprob_config c = make_config(o, RINGPROB_FORMAT_JSON);
    st = ringprob_oracle(h.ring, &c, &text);
  }
  return emit(st, text, o.out);
}
