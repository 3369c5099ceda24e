#include "dfam/dfam.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "dfam/catalog.hpp"
#include "dfam/designer.hpp"
#include "dfam/engine.hpp"
#include "dfam/oracle.hpp"

struct dfam_family {
  dfam::FamilyRecord record;
};

struct dfam_family_list {
  std::vector<std::unique_ptr<dfam_family>> items;
};

struct dfam_design {
  dfam::Design design;
};

namespace {

thread_local std::string last_message;

// Raised from inside a search when a user callback asks to stop.
struct CallbackAbort {
  const char* which;
};

dfam_status status_of(dfam::ErrorKind kind) {
  using dfam::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidParameter:
      return DFAM_ERR_INVALID_PARAMETER;
    case ErrorKind::Collision:
      return DFAM_ERR_COLLISION;
    case ErrorKind::Precondition:
      return DFAM_ERR_PRECONDITION;
    case ErrorKind::Parse:
      return DFAM_ERR_PARSE;
    case ErrorKind::Range:
      return DFAM_ERR_RANGE;
    case ErrorKind::Io:
      return DFAM_ERR_IO;
    case ErrorKind::CapExceeded:
      return DFAM_ERR_CAP_EXCEEDED;
    case ErrorKind::Verification:
      return DFAM_ERR_VERIFICATION;
    case ErrorKind::Worker:
      return DFAM_ERR_WORKER;
  }
  return DFAM_ERR_INTERNAL;
}

dfam_status fail(dfam_status s, std::string message) {
  last_message = std::move(message);
  return s;
}

template <typename F>
dfam_status guarded(F&& body) {
  try {
    last_message.clear();
    return body();
  } catch (const CallbackAbort& a) {
    return fail(DFAM_ERR_CALLBACK, std::string(a.which) + " callback requested abort");
  } catch (const dfam::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DFAM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DFAM_ERR_INTERNAL, e.what());
  }
}

#define DFAM_REQUIRE(cond, what) \
  if (!(cond)) return fail(DFAM_ERR_INVALID_PARAMETER, what)

std::unique_ptr<dfam_family> wrap(dfam::FamilyRecord r) {
  return std::make_unique<dfam_family>(dfam_family{std::move(r)});
}

dfam_family_list* wrap_all(const std::vector<dfam::DifferenceFamily>& fs, const std::string& source) {
  auto list = std::make_unique<dfam_family_list>();
  for (const auto& f : fs) list->items.push_back(wrap(dfam::to_record(f, source)));
  return list.release();
}

dfam_family_list* wrap_records(std::vector<dfam::FamilyRecord> rs) {
  auto list = std::make_unique<dfam_family_list>();
  for (auto& r : rs) list->items.push_back(wrap(std::move(r)));
  return list.release();
}

dfam::DifferenceFamily family_of(const dfam_family* f) { return dfam::to_family(f->record); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const dfam::FamilyRecord& r, dfam_format format) {
  return format == DFAM_FORMAT_TEXT ? dfam::render_text(r) : dfam::to_json_line(r);
}

}  // namespace

extern "C" {

const char* dfam_last_error_message(void) { return last_message.c_str(); }

const char* dfam_status_name(dfam_status status) {
  switch (status) {
    case DFAM_OK:
      return "ok";
    case DFAM_ERR_INVALID_PARAMETER:
      return "invalid parameter";
    case DFAM_ERR_COLLISION:
      return "difference collision";
    case DFAM_ERR_PRECONDITION:
      return "precondition violation";
    case DFAM_ERR_PARSE:
      return "parse error";
    case DFAM_ERR_RANGE:
      return "range error";
    case DFAM_ERR_IO:
      return "I/O error";
    case DFAM_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case DFAM_ERR_VERIFICATION:
      return "verification failed";
    case DFAM_ERR_WORKER:
      return "worker failure";
    case DFAM_ERR_CALLBACK:
      return "aborted by callback";
    case DFAM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void dfam_string_free(char* s) { std::free(s); }

dfam_status dfam_classify(int32_t v, int32_t k, dfam_params* out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto p = dfam::classify(v, k);
    out->v = p.v;
    out->k = p.k;
    out->t = p.t;
    out->admissibility = p.admissibility == dfam::Admissibility::FullOnly         ? DFAM_FULL_ONLY
                         : p.admissibility == dfam::Admissibility::WithShortBlock ? DFAM_WITH_SHORT_BLOCK
                                                                                  : DFAM_INADMISSIBLE;
    return DFAM_OK;
  });
}

dfam_status dfam_family_new(int32_t v, int32_t k, const int32_t* elements, size_t block_count, const char* source,
                            dfam_family** out) {
  DFAM_REQUIRE(out, "out is null");
  DFAM_REQUIRE(elements || block_count == 0, "elements is null");
  return guarded([&] {
    dfam::classify(v, k);
    dfam::FamilyRecord r;
    r.v = v;
    r.k = k;
    r.source = source ? source : "";
    for (size_t i = 0; i < block_count; ++i) {
      std::vector<int32_t> b(elements + i * static_cast<size_t>(k), elements + (i + 1) * static_cast<size_t>(k));
      for (int32_t x : b)
        if (x < 0 || x >= v)
          throw dfam::Error(dfam::ErrorKind::Range, "element " + std::to_string(x) + " outside [0, " +
                                                        std::to_string(v) + ")");
      r.blocks.push_back(std::move(b));
    }
    r.normalized = true;
    for (const auto& b : r.blocks) {
      try {
        if (dfam::normalize_block(b, v).elements != b) r.normalized = false;
      } catch (const dfam::Error&) {
        r.normalized = false;
      }
    }
    *out = wrap(std::move(r)).release();
    return DFAM_OK;
  });
}

dfam_status dfam_family_clone(const dfam_family* f, dfam_family** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = wrap(f->record).release();
    return DFAM_OK;
  });
}

void dfam_family_free(dfam_family* f) { delete f; }
int32_t dfam_family_v(const dfam_family* f) { return f->record.v; }
int32_t dfam_family_k(const dfam_family* f) { return f->record.k; }
size_t dfam_family_block_count(const dfam_family* f) { return f->record.blocks.size(); }
const int32_t* dfam_family_block(const dfam_family* f, size_t i) {
  return i < f->record.blocks.size() ? f->record.blocks[i].data() : nullptr;
}
const char* dfam_family_source(const dfam_family* f) { return f->record.source.c_str(); }
int dfam_family_normalized(const dfam_family* f) { return f->record.normalized ? 1 : 0; }
uint64_t dfam_family_recorded_automorphisms(const dfam_family* f) { return f->record.automorphisms.value_or(0); }

dfam_status dfam_family_normalize(const dfam_family* f, dfam_family** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    auto r = dfam::to_record(family_of(f), f->record.source);
    r.automorphisms = f->record.automorphisms;
    *out = wrap(std::move(r)).release();
    return DFAM_OK;
  });
}

dfam_status dfam_family_render(const dfam_family* f, dfam_format format, char** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = dup_string(render(f->record, format));
    return DFAM_OK;
  });
}

dfam_family_list* dfam_list_new(void) { return new (std::nothrow) dfam_family_list(); }
void dfam_list_free(dfam_family_list* list) { delete list; }
size_t dfam_list_size(const dfam_family_list* list) { return list ? list->items.size() : 0; }
const dfam_family* dfam_list_at(const dfam_family_list* list, size_t i) {
  return list && i < list->items.size() ? list->items[i].get() : nullptr;
}

dfam_status dfam_list_push(dfam_family_list* list, const dfam_family* f) {
  DFAM_REQUIRE(list && f, "null argument");
  return guarded([&] {
    list->items.push_back(wrap(f->record));
    return DFAM_OK;
  });
}

dfam_status dfam_normalize_block(int32_t v, const int32_t* block, size_t k, int32_t* out) {
  DFAM_REQUIRE(block && out, "null argument");
  DFAM_REQUIRE(v > 0 && k <= static_cast<size_t>(v), "need 0 < k <= v");
  return guarded([&] {
    const auto b = dfam::normalize_block(std::span<const int32_t>(block, k), v);
    std::copy(b.elements.begin(), b.elements.end(), out);
    return DFAM_OK;
  });
}

dfam_status dfam_mirror_block(int32_t v, const int32_t* block, size_t k, int32_t* out) {
  DFAM_REQUIRE(block && out, "null argument");
  DFAM_REQUIRE(v > 0 && k <= static_cast<size_t>(v), "need 0 < k <= v");
  return guarded([&] {
    const auto n = dfam::normalize_block(std::span<const int32_t>(block, k), v);
    const auto m = dfam::mirror_block(n, v);
    std::copy(m.elements.begin(), m.elements.end(), out);
    return DFAM_OK;
  });
}

dfam_status dfam_search(int32_t v, int32_t k, const dfam_search_options* options, dfam_family_list** out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto p = dfam::require_admissible(v, k);
    dfam::SearchConfig cfg;
    if (options) {
      if (options->threads < 1) throw dfam::Error(dfam::ErrorKind::InvalidParameter, "threads must be at least 1");
      cfg.thread_count = options->threads;
      cfg.delta_dedup =
          options->dedup == DFAM_DEDUP_MIRROR_ONLY ? dfam::DeltaDedup::MirrorOnly : dfam::DeltaDedup::FullDeltaClass;
      if (options->emit) {
        cfg.emit = [options](const dfam::DifferenceFamily& f) {
          const dfam_family handle{dfam::to_record(f, "search:base")};
          if (options->emit(options->user, &handle) != 0) throw CallbackAbort{"emit"};
        };
      }
      if (options->progress) {
        cfg.progress = [options](const dfam::SearchProgress& pr) {
          if (options->progress(options->user, pr.task.b2, pr.families, pr.nodes) != 0)
            throw CallbackAbort{"progress"};
        };
      }
    }
    *out = wrap_all(dfam::run_parallel(p, cfg), "search:base");
    return DFAM_OK;
  });
}

dfam_status dfam_oracle(int32_t v, int32_t k, int32_t cap, dfam_family_list** out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto p = dfam::require_admissible(v, k);
    *out = wrap_all(dfam::oracle_enumerate(p, cap > 0 ? cap : dfam::kDefaultOracleCap), "oracle");
    return DFAM_OK;
  });
}

dfam_status dfam_mirror_expand(const dfam_family* f, dfam_family_list** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = wrap_all(dfam::mirror_expand(family_of(f)), "mirror");
    return DFAM_OK;
  });
}

dfam_status dfam_canonical_form(const dfam_family* f, dfam_family** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    const auto fam = family_of(f);
    const auto key = dfam::canonical_form(fam);
    *out = wrap(dfam::to_record(dfam::family_from_key(fam.params, key), "canonical")).release();
    return DFAM_OK;
  });
}

dfam_status dfam_dedup(const dfam_family_list* in, dfam_family_list** out) {
  DFAM_REQUIRE(in && out, "null argument");
  return guarded([&] {
    std::vector<dfam::DifferenceFamily> fs;
    for (const auto& item : in->items) {
      fs.push_back(family_of(item.get()));
      if (!(fs.back().params == fs.front().params))
        throw dfam::Error(dfam::ErrorKind::InvalidParameter, "dedup needs families with the same (v,k)");
    }
    *out = wrap_all(dfam::dedup(fs), "class");
    return DFAM_OK;
  });
}

dfam_status dfam_multiplier_automorphisms(const dfam_family* f, uint64_t* out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = dfam::multiplier_automorphisms(family_of(f));
    return DFAM_OK;
  });
}

dfam_status dfam_verify_family(const dfam_family* f) {
  DFAM_REQUIRE(f, "null argument");
  return guarded([&] {
    const auto report = dfam::verify_family(family_of(f));
    if (!report.ok()) return fail(DFAM_ERR_VERIFICATION, report.describe());
    return DFAM_OK;
  });
}

dfam_status dfam_develop(const dfam_family* f, dfam_design** out) {
  DFAM_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = new dfam_design{dfam::develop(family_of(f))};
    return DFAM_OK;
  });
}

void dfam_design_free(dfam_design* d) { delete d; }
size_t dfam_design_block_count(const dfam_design* d) { return d->design.blocks.size(); }
const int32_t* dfam_design_block(const dfam_design* d, size_t i) {
  return i < d->design.blocks.size() ? d->design.blocks[i].data() : nullptr;
}
int32_t dfam_design_k(const dfam_design* d) { return d->design.k; }

dfam_status dfam_verify_design(const dfam_design* d) {
  DFAM_REQUIRE(d, "null argument");
  return guarded([&] {
    const auto report = dfam::verify_design(d->design);
    if (!report.ok()) return fail(DFAM_ERR_VERIFICATION, report.describe());
    return DFAM_OK;
  });
}

dfam_status dfam_builtin(int32_t v, int32_t k, dfam_family_list** out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    *out = wrap_records(dfam::builtin_families(v, k));
    return DFAM_OK;
  });
}

dfam_status dfam_builtin_all(dfam_family_list** out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    *out = wrap_records(dfam::builtin_families());
    return DFAM_OK;
  });
}

dfam_status dfam_parse_text(const char* text, int32_t v, int32_t k, dfam_family** out) {
  DFAM_REQUIRE(text && out, "null argument");
  return guarded([&] {
    dfam::classify(v, k);
    *out = wrap(dfam::parse_text(text, v, k)).release();
    return DFAM_OK;
  });
}

dfam_status dfam_read(const char* path, dfam_format format, int32_t v, int32_t k, dfam_family_list** out) {
  DFAM_REQUIRE(out, "out is null");
  return guarded([&] {
    std::ifstream file;
    if (path) {
      file.open(path, std::ios::binary);
      if (!file) throw dfam::Error(dfam::ErrorKind::Io, std::string("cannot open ") + path);
    }
    std::istream& in = path ? static_cast<std::istream&>(file) : std::cin;
    if (format == DFAM_FORMAT_JSONL) {
      *out = wrap_records(dfam::read_jsonl(in));
      return DFAM_OK;
    }
    dfam::classify(v, k);
    std::vector<dfam::FamilyRecord> rs;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        rs.push_back(dfam::parse_text(line, v, k));
      } catch (const dfam::Error& e) {
        throw dfam::Error(e.kind(), "line " + std::to_string(n) + ": " + e.what());
      }
    }
    *out = wrap_records(std::move(rs));
    return DFAM_OK;
  });
}

dfam_status dfam_write(const char* path, dfam_format format, const dfam_family_list* list) {
  DFAM_REQUIRE(list, "list is null");
  return guarded([&] {
    std::ofstream file;
    if (path) {
      file.open(path, std::ios::binary);
      if (!file) throw dfam::Error(dfam::ErrorKind::Io, std::string("cannot open ") + path + " for writing");
    }
    std::ostream& os = path ? static_cast<std::ostream&>(file) : std::cout;
    for (const auto& item : list->items) os << render(item->record, format) << '\n';
    os.flush();
    if (!os) throw dfam::Error(dfam::ErrorKind::Io, "write failed");
    return DFAM_OK;
  });
}

}  // extern "C"
