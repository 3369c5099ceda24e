// Command-line frontend. All work goes through the C interface in dfam.h;
// data goes to stdout (or --output), diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dfam/dfam.h"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kIoError = 3 };

struct ListDeleter {
  void operator()(dfam_family_list* l) const { dfam_list_free(l); }
};
struct FamilyDeleter {
  void operator()(dfam_family* f) const { dfam_family_free(f); }
};
struct DesignDeleter {
  void operator()(dfam_design* d) const { dfam_design_free(d); }
};
using ListPtr = std::unique_ptr<dfam_family_list, ListDeleter>;
using FamilyPtr = std::unique_ptr<dfam_family, FamilyDeleter>;
using DesignPtr = std::unique_ptr<dfam_design, DesignDeleter>;

// Carries a failed status up to main.
struct Failure {
  dfam_status status;
  std::string message;
};

int exit_code_for(dfam_status s) {
  switch (s) {
    case DFAM_OK:
      return kOk;
    case DFAM_ERR_VERIFICATION:
      return kVerifyFailed;
    case DFAM_ERR_PARSE:
    case DFAM_ERR_RANGE:
    case DFAM_ERR_IO:
      return kIoError;
    default:
      return kInvalid;
  }
}

void check(dfam_status s) {
  if (s != DFAM_OK) throw Failure{s, dfam_last_error_message()};
}

struct Options {
  int v = 0;
  int k = 0;
  int threads = 1;
  int cap = 60;
  std::string dedup = "full-delta";
  std::string format = "jsonl";
  std::string input;
  std::string output;
  bool builtin = false;
  bool base_only = false;
  bool progress = false;
  bool expand = false;
  bool classes = false;
};

dfam_format format_of(const Options& o) { return o.format == "text" ? DFAM_FORMAT_TEXT : DFAM_FORMAT_JSONL; }

int default_threads() {
  if (const char* env = std::getenv("DFAM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{DFAM_ERR_IO, "cannot open " + path + " for writing"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Failure{DFAM_ERR_IO, "write failed"};
  }

 private:
  std::ofstream file_;
};

void print_family(std::ostream& os, const dfam_family* f, dfam_format format) {
  char* s = nullptr;
  check(dfam_family_render(f, format, &s));
  os << s << '\n';
  dfam_string_free(s);
}

void print_list(std::ostream& os, const dfam_family_list* list, dfam_format format) {
  for (size_t i = 0; i < dfam_list_size(list); ++i) print_family(os, dfam_list_at(list, i), format);
}

void require_vk(const Options& o) {
  if (o.v <= 0 || o.k <= 0) throw Failure{DFAM_ERR_INVALID_PARAMETER, "--v and --k are required"};
}

ListPtr load_input(const Options& o) {
  dfam_family_list* raw = nullptr;
  if (o.builtin) {
    require_vk(o);
    check(dfam_builtin(o.v, o.k, &raw));
    ListPtr list(raw);
    if (dfam_list_size(raw) == 0)
      throw Failure{DFAM_ERR_INVALID_PARAMETER,
                    "no builtin families for (v,k)=(" + std::to_string(o.v) + "," + std::to_string(o.k) + ")"};
    return list;
  }
  if (format_of(o) == DFAM_FORMAT_TEXT) require_vk(o);
  check(dfam_read(o.input.empty() || o.input == "-" ? nullptr : o.input.c_str(), format_of(o), o.v, o.k, &raw));
  return ListPtr(raw);
}

ListPtr classes_of(const dfam_family_list* families, bool expand) {
  dfam_family_list* pool = nullptr;
  ListPtr expanded(dfam_list_new());
  for (size_t i = 0; i < dfam_list_size(families); ++i) {
    const dfam_family* f = dfam_list_at(families, i);
    if (!expand) {
      check(dfam_list_push(expanded.get(), f));
      continue;
    }
    check(dfam_mirror_expand(f, &pool));
    ListPtr m(pool);
    for (size_t j = 0; j < dfam_list_size(pool); ++j) check(dfam_list_push(expanded.get(), dfam_list_at(pool, j)));
  }
  dfam_family_list* out = nullptr;
  check(dfam_dedup(expanded.get(), &out));
  return ListPtr(out);
}

int progress_to_stderr(void*, int32_t b2, uint64_t families, uint64_t nodes) {
  std::cerr << "task b2=" << b2 << " families=" << families << " nodes=" << nodes << '\n';
  return 0;
}

int run_search(const Options& o) {
  require_vk(o);
  dfam_search_options opts{};
  opts.threads = o.threads;
  opts.dedup = o.dedup == "mirror-only" ? DFAM_DEDUP_MIRROR_ONLY : DFAM_DEDUP_FULL_DELTA;
  opts.progress = o.progress ? progress_to_stderr : nullptr;
  dfam_family_list* raw = nullptr;
  check(dfam_search(o.v, o.k, &opts, &raw));
  ListPtr base(raw);

  Output out(o.output);
  auto& os = out.stream();
  const auto fmt = format_of(o);
  if (fmt == DFAM_FORMAT_TEXT) os << "# base families\n";
  print_list(os, base.get(), fmt);
  if (o.base_only) {
    os << "base=" << dfam_list_size(base.get()) << '\n';
  } else {
    auto cls = classes_of(base.get(), true);
    if (fmt == DFAM_FORMAT_TEXT) os << "# classes\n";
    print_list(os, cls.get(), fmt);
    os << "classes=" << dfam_list_size(cls.get()) << " base=" << dfam_list_size(base.get()) << '\n';
  }
  out.finish();
  return kOk;
}

int run_verify(const Options& o) {
  auto families = load_input(o);
  Output out(o.output);
  auto& os = out.stream();
  size_t failed = 0;
  for (size_t i = 0; i < dfam_list_size(families.get()); ++i) {
    const dfam_family* f = dfam_list_at(families.get(), i);
    std::string verdict;
    size_t blocks = 0;
    dfam_status s = dfam_verify_family(f);
    if (s == DFAM_OK) {
      dfam_design* raw = nullptr;
      check(dfam_develop(f, &raw));
      DesignPtr d(raw);
      blocks = dfam_design_block_count(raw);
      s = dfam_verify_design(raw);
      if (s != DFAM_OK) verdict = std::string("design ") + dfam_last_error_message();
    } else {
      verdict = std::string("family ") + dfam_last_error_message();
    }
    if (s == DFAM_ERR_VERIFICATION) {
      ++failed;
      os << "FAIL " << (i + 1) << ' ' << verdict << '\n';
      std::cerr << "family " << (i + 1) << " (" << dfam_family_source(f) << "): " << verdict << '\n';
    } else {
      check(s);
      os << "ok " << (i + 1) << " blocks=" << blocks << '\n';
    }
  }
  os << "verified=" << dfam_list_size(families.get()) - failed << " failed=" << failed << '\n';
  out.finish();
  return failed ? kVerifyFailed : kOk;
}

int run_develop(const Options& o) {
  auto families = load_input(o);
  Output out(o.output);
  auto& os = out.stream();
  int code = kOk;
  for (size_t i = 0; i < dfam_list_size(families.get()); ++i) {
    dfam_design* raw = nullptr;
    check(dfam_develop(dfam_list_at(families.get(), i), &raw));
    DesignPtr d(raw);
    const int32_t k = dfam_design_k(raw);
    const size_t n = dfam_design_block_count(raw);
    const auto fmt = format_of(o);
    if (fmt == DFAM_FORMAT_JSONL) {
      os << "{\"v\":" << dfam_family_v(dfam_list_at(families.get(), i)) << ",\"k\":" << k << ",\"blocks\":[";
      for (size_t b = 0; b < n; ++b) {
        const int32_t* e = dfam_design_block(raw, b);
        os << (b ? ",[" : "[");
        for (int32_t j = 0; j < k; ++j) os << (j ? "," : "") << e[j];
        os << ']';
      }
      os << "]}\n";
    } else {
      os << "# design " << (i + 1) << '\n';
      for (size_t b = 0; b < n; ++b) {
        const int32_t* e = dfam_design_block(raw, b);
        os << '{';
        for (int32_t j = 0; j < k; ++j) os << (j ? ", " : "") << e[j];
        os << "}\n";
      }
    }
    const dfam_status s = dfam_verify_design(raw);
    if (s == DFAM_ERR_VERIFICATION) {
      std::cerr << "design " << (i + 1) << ": " << dfam_last_error_message() << '\n';
      code = kVerifyFailed;
    } else {
      check(s);
      std::cerr << "design " << (i + 1) << ": " << n << " blocks, every pair covered once\n";
    }
  }
  out.finish();
  return code;
}

int run_canon(const Options& o) {
  auto families = load_input(o);
  Output out(o.output);
  auto& os = out.stream();
  const auto fmt = format_of(o);
  if (o.expand || o.classes) {
    auto cls = classes_of(families.get(), o.expand);
    print_list(os, cls.get(), fmt);
    os << "classes=" << dfam_list_size(cls.get()) << '\n';
  } else {
    for (size_t i = 0; i < dfam_list_size(families.get()); ++i) {
      dfam_family* raw = nullptr;
      check(dfam_canonical_form(dfam_list_at(families.get(), i), &raw));
      FamilyPtr c(raw);
      print_family(os, raw, fmt);
    }
  }
  out.finish();
  return kOk;
}

int run_autos(const Options& o) {
  auto families = load_input(o);
  Output out(o.output);
  for (size_t i = 0; i < dfam_list_size(families.get()); ++i) {
    uint64_t n = 0;
    check(dfam_multiplier_automorphisms(dfam_list_at(families.get(), i), &n));
    out.stream() << n << '\n';
  }
  out.finish();
  return kOk;
}

int run_oracle(const Options& o) {
  require_vk(o);
  dfam_family_list* raw = nullptr;
  check(dfam_oracle(o.v, o.k, o.cap, &raw));
  ListPtr families(raw);
  auto cls = classes_of(families.get(), false);
  Output out(o.output);
  auto& os = out.stream();
  print_list(os, o.classes ? cls.get() : families.get(), format_of(o));
  os << "classes=" << dfam_list_size(cls.get()) << " families=" << dfam_list_size(families.get()) << '\n';
  out.finish();
  return kOk;
}

int run_catalog(const Options& o) {
  dfam_family_list* raw = nullptr;
  if (o.v > 0 || o.k > 0) {
    require_vk(o);
    check(dfam_builtin(o.v, o.k, &raw));
  } else {
    check(dfam_builtin_all(&raw));
  }
  ListPtr list(raw);
  Output out(o.output);
  print_list(out.stream(), list.get(), format_of(o));
  out.finish();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search, classify and verify cyclic (v,k,1) difference families"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_vk = [&](CLI::App* sub) {
    sub->add_option("--v", o.v, "group order v")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "block size k")->check(CLI::PositiveNumber);
  };
  auto add_io = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--format", o.format, "jsonl or text")->check(CLI::IsMember({"jsonl", "text"}));
    sub->add_option("--output,-o", o.output, "output file (default stdout)");
    if (with_input) {
      sub->add_option("--input,-i", o.input, "input file (default stdin)");
      sub->add_flag("--builtin", o.builtin, "use the builtin families for (v,k)");
    }
  };

  auto* search = app.add_subcommand("search", "exhaustive search for base families and their classes");
  add_vk(search);
  add_io(search, false);
  search->add_option("--threads", o.threads, "worker threads (default DFAM_THREADS or core count)")
      ->check(CLI::PositiveNumber);
  search->add_option("--dedup", o.dedup, "mirror-only or full-delta")
      ->check(CLI::IsMember({"mirror-only", "full-delta"}));
  search->add_flag("--base-only", o.base_only, "skip mirroring and classification");
  search->add_flag("--progress", o.progress, "per-task progress on stderr");

  auto* verify = app.add_subcommand("verify", "check families and their developed designs");
  add_vk(verify);
  add_io(verify, true);
  auto* develop = app.add_subcommand("develop", "develop families into block designs");
  add_vk(develop);
  add_io(develop, true);
  auto* canon = app.add_subcommand("canon", "canonical forms under multipliers");
  add_vk(canon);
  add_io(canon, true);
  canon->add_flag("--classes", o.classes, "print one representative per class");
  canon->add_flag("--expand", o.expand, "mirror-expand each family before classifying");
  auto* autos = app.add_subcommand("autos", "count multiplier automorphisms");
  add_vk(autos);
  add_io(autos, true);
  auto* oracle = app.add_subcommand("oracle", "unpruned brute-force enumeration for small v");
  add_vk(oracle);
  add_io(oracle, false);
  oracle->add_option("--cap", o.cap, "largest v the oracle accepts")->check(CLI::PositiveNumber);
  oracle->add_flag("--classes", o.classes, "print class representatives instead of all families");
  auto* catalog = app.add_subcommand("catalog", "print builtin families");
  add_vk(catalog);
  add_io(catalog, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*search) return run_search(o);
    if (*verify) return run_verify(o);
    if (*develop) return run_develop(o);
    if (*canon) return run_canon(o);
    if (*autos) return run_autos(o);
    if (*oracle) return run_oracle(o);
    if (*catalog) return run_catalog(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << dfam_status_name(f.status) << ": " << f.message << '\n';
    return exit_code_for(f.status);
  }
  return kInvalid;
}
