// Command-line front end. Talks to the engine exclusively through the C
// API in liftreg.h. Exit codes: 0 success, 2 validation error, 3 cap
// exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "liftreg.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { lr_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct BodyDeleter {
  void operator()(lr_body* b) const { lr_body_free(b); }
};
using Body = std::unique_ptr<lr_body, BodyDeleter>;

int exit_code_of(lr_status status) {
  switch (status) {
    case LR_OK: return 0;
    case LR_E_CAP: return 3;
    default: return 2;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const char* data) {
  std::size_t len = std::strlen(data);
  if (path.empty() || path == "-") {
    std::cout << data;
    if (len > 0 && data[len - 1] != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    std::exit(2);
  }
  out << data;
}

[[noreturn]] void bail(lr_status status, const ApiString& err) {
  if (err) std::cout << err.get() << "\n";
  std::exit(exit_code_of(status));
}

Body load_body(const std::string& in_path) {
  std::string text = read_input(in_path);
  lr_body* raw = nullptr;
  char* err = nullptr;
  lr_status st = lr_body_parse(text.c_str(), &raw, &err);
  ApiString guard(err);
  if (st != LR_OK) bail(st, guard);
  return Body(raw);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("LIFTING_ENUM_CAP"))
    lr_set_enum_cap(std::strtoull(cap, nullptr, 10));

  CLI::App app{"exact lifting-region analysis of maximal lattice-free "
               "simplicial polytopes"};
  app.require_subcommand(1);

  std::string in_path, out_path, f_text, family, params;
  int probes = 10;
  int resolution = 32;

  auto add_io = [&](CLI::App* cmd, bool needs_f) {
    cmd->add_option("--in", in_path, "input body JSON file (default: stdin)");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    if (needs_f)
      cmd->add_option("-f,--point", f_text, "point f as rationals 'p/q,p/q,...'")
          ->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "maximality, exact torus volume, verdict");
  add_io(analyze, true);

  CLI::App* sweep = app.add_subcommand("sweep", "affine volume function and dichotomy");
  add_io(sweep, false);
  sweep->add_option("--probes", probes, "number of interior probe points");

  CLI::App* oracle = app.add_subcommand("oracle", "grid covering oracle");
  add_io(oracle, true);
  oracle->add_option("-N,--resolution", resolution, "grid resolution per axis");

  CLI::App* classify = app.add_subcommand("classify", "structural criteria with cross-check");
  add_io(classify, false);

  CLI::App* render = app.add_subcommand("render", "SVG figure of a planar region");
  add_io(render, true);

  CLI::App* generate = app.add_subcommand("generate", "emit a body from a named family");
  generate->add_option("--family", family, "standard | delta | type3cone | search")
      ->required();
  generate->add_option("--params", params, "family parameters as a JSON object");
  generate->add_option("--out", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  char* err = nullptr;
  lr_status st = LR_OK;

  if (generate->parsed()) {
    st = lr_generate(family.c_str(), params.c_str(), &out, &err);
  } else {
    Body body = load_body(in_path);
    if (analyze->parsed()) st = lr_analyze(body.get(), f_text.c_str(), &out, &err);
    else if (sweep->parsed()) st = lr_sweep(body.get(), probes, &out, &err);
    else if (oracle->parsed()) st = lr_oracle(body.get(), f_text.c_str(), resolution, &out, &err);
    else if (classify->parsed()) st = lr_classify(body.get(), &out, &err);
    else if (render->parsed()) st = lr_render(body.get(), f_text.c_str(), &out, &err);
  }

  ApiString out_guard(out), err_guard(err);
  if (st != LR_OK) bail(st, err_guard);
  write_output(out_path, out_guard.get());
  return 0;
}
