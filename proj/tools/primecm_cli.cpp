// primecm command-line tool. JSON records go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 invalid input, 2 search exhausted,
// 3 certificate invalid, 4 internal failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primecm.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalidInput = 1, kExhausted = 2, kBadCertificate = 3, kInternal = 4 };

struct ContextDeleter {
  void operator()(pcm_context* c) const { pcm_context_destroy(c); }
};
struct ResultDeleter {
  void operator()(pcm_result* r) const { pcm_result_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { pcm_string_free(s); }
};
using ContextPtr = std::unique_ptr<pcm_context, ContextDeleter>;
using ResultPtr = std::unique_ptr<pcm_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a status after the diagnostic has been printed.
struct Failure {
  int exit_code;
};

int exit_code_for(pcm_status s) {
  switch (s) {
    case PCM_OK: return kOk;
    case PCM_ERR_SEARCH_EXHAUSTED: return kExhausted;
    case PCM_ERR_INTERNAL: return kInternal;
    default: return kInvalidInput;
  }
}

void require(pcm_context* ctx, pcm_status s) {
  if (s == PCM_OK) return;
  std::cerr << "primecm: " << pcm_status_string(s) << ": " << pcm_last_error(ctx) << '\n';
  throw Failure{exit_code_for(s)};
}

pcm_invariant parse_invariant(const std::string& name) {
  return name == "j" ? PCM_INVARIANT_J : PCM_INVARIANT_GAMMA2;
}

json result_json(pcm_context* ctx, const pcm_result* r) {
  char* raw = nullptr;
  require(ctx, pcm_result_to_json(ctx, r, &raw));
  StringPtr owned(raw);
  return json::parse(owned.get());
}

// Cache record text -> JSON object with the coefficient list.
json poly_json(const std::string& record) {
  std::istringstream in(record);
  std::string d, kind;
  std::size_t degree = 0;
  in >> d >> kind >> degree;
  json coeffs = json::array();
  std::string c;
  std::size_t digits = 0;
  while (in >> c) {
    digits = std::max(digits, c.size() - (c[0] == '-' ? 1 : 0));
    coeffs.push_back(c);
  }
  return {{"D", d},
          {"invariant", kind},
          {"degree", degree},
          {"max_coefficient_digits", digits},
          {"coefficients", coeffs},
          {"record", record}};
}

void emit(const std::string& command, const json& inputs, const json& result,
          std::uint64_t seed, std::chrono::steady_clock::time_point t0) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  json out = {{"command", command},
              {"inputs", inputs},
              {"result", result},
              {"seed", std::to_string(seed)},
              {"timing_ms", ms}};
  std::cout << out.dump(2) << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic curves of prime order by complex multiplication"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = available parallelism)");

  std::uint64_t seed = 0;

  std::string fo_n;
  std::size_t fo_min_h = 0;
  unsigned fo_max_rounds = 64;
  std::string fo_invariant = "gamma2";
  auto* fo = app.add_subcommand("fixed-order", "Curve with exactly N points");
  fo->add_option("N", fo_n, "Prime group order")->required();
  fo->add_option("--min-h", fo_min_h, "Minimum class number");
  fo->add_option("--seed", seed, "Random seed");
  fo->add_option("--max-rounds", fo_max_rounds, "Basis rounds before giving up")
      ->check(CLI::PositiveNumber);
  fo->add_option("--invariant", fo_invariant, "Class invariant")
      ->check(CLI::IsMember({"j", "gamma2"}));

  unsigned fs_k = 0;
  std::string fs_d, fs_from;
  auto* fs = app.add_subcommand("fixed-size", "k-digit primes p, q and a curve with q points");
  fs->add_option("k", fs_k, "Decimal digits")->required();
  fs->add_option("--disc", fs_d, "Discriminant D")->required();
  fs->add_option("--scan-from", fs_from, "Scan consecutive primes from this value");
  fs->add_option("--seed", seed, "Random seed");

  std::string cp_d, cp_invariant = "j", cp_cache;
  auto* cp = app.add_subcommand("classpoly", "Class polynomial of D");
  cp->add_option("D", cp_d, "Discriminant")->required();
  cp->add_option("--invariant", cp_invariant, "Class invariant")
      ->check(CLI::IsMember({"j", "gamma2"}));
  cp->add_option("--cache", cp_cache, "Cache file");

  std::string co_d, co_n;
  auto* co = app.add_subcommand("cornacchia", "Solve x^2 - D y^2 = 4N");
  co->add_option("D", co_d, "Discriminant")->required();
  co->add_option("N", co_n, "Odd prime")->required();

  std::string vf_path;
  auto* vf = app.add_subcommand("verify", "Re-check a result record");
  vf->add_option("file", vf_path, "JSON result or output record")->required();

  std::string ct_p, ct_a, ct_b;
  auto* ct = app.add_subcommand("count", "Naive point count of Y^2 = X^3 + AX + B");
  ct->add_option("p", ct_p, "Prime, at most 10^6")->required();
  ct->add_option("A", ct_a, "Coefficient A")->required();
  ct->add_option("B", ct_b, "Coefficient B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  pcm_context* raw_ctx = nullptr;
  if (pcm_context_create(&raw_ctx) != PCM_OK) return kInternal;
  ContextPtr ctx(raw_ctx);
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (*fo) {
      pcm_search_options opts;
      pcm_search_options_init(&opts);
      opts.seed = seed;
      opts.min_class_number = fo_min_h;
      opts.max_rounds = fo_max_rounds;
      opts.invariant = parse_invariant(fo_invariant);
      opts.threads = threads;
      pcm_result* r = nullptr;
      require(ctx.get(), pcm_fixed_order(ctx.get(), fo_n.c_str(), &opts, &r));
      ResultPtr owned(r);
      json inputs = {{"N", fo_n},
                     {"min_h", fo_min_h},
                     {"max_rounds", fo_max_rounds},
                     {"invariant", fo_invariant}};
      emit("fixed-order", inputs, result_json(ctx.get(), r), seed, t0);
    } else if (*fs) {
      pcm_search_options opts;
      pcm_search_options_init(&opts);
      opts.seed = seed;
      opts.threads = threads;
      if (!fs_from.empty()) opts.scan_from = fs_from.c_str();
      pcm_result* r = nullptr;
      require(ctx.get(), pcm_fixed_size(ctx.get(), fs_k, fs_d.c_str(), &opts, &r));
      ResultPtr owned(r);
      json inputs = {{"k", fs_k}, {"D", fs_d}};
      inputs["scan_from"] = fs_from.empty() ? json(nullptr) : json(fs_from);
      emit("fixed-size", inputs, result_json(ctx.get(), r), seed, t0);
    } else if (*cp) {
      char* rec = nullptr;
      require(ctx.get(), pcm_class_poly(ctx.get(), cp_d.c_str(), parse_invariant(cp_invariant),
                                        cp_cache.empty() ? nullptr : cp_cache.c_str(), threads,
                                        &rec));
      StringPtr owned(rec);
      json inputs = {{"D", cp_d}, {"invariant", cp_invariant}};
      inputs["cache"] = cp_cache.empty() ? json(nullptr) : json(cp_cache);
      emit("classpoly", inputs, poly_json(owned.get()), seed, t0);
    } else if (*co) {
      int found = 0;
      char* x = nullptr;
      char* y = nullptr;
      require(ctx.get(), pcm_cornacchia(ctx.get(), co_d.c_str(), co_n.c_str(), &found, &x, &y));
      StringPtr ox(x), oy(y);
      json result = found ? json{{"x", ox.get()}, {"y", oy.get()}} : json("none");
      emit("cornacchia", {{"D", co_d}, {"N", co_n}}, result, seed, t0);
    } else if (*vf) {
      std::ifstream in(vf_path);
      if (!in) {
        std::cerr << "primecm: cannot open " << vf_path << '\n';
        return kInvalidInput;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      pcm_result* r = nullptr;
      require(ctx.get(), pcm_result_from_json(ctx.get(), buf.str().c_str(), &r));
      ResultPtr owned(r);
      int ok = 0;
      const char* reason = "";
      require(ctx.get(), pcm_result_check(ctx.get(), r, &ok, &reason));
      emit("verify", {{"file", vf_path}}, {{"valid", ok == 1}, {"reason", reason}}, seed, t0);
      if (!ok) {
        std::cerr << "primecm: certificate invalid: " << reason << '\n';
        return kBadCertificate;
      }
    } else if (*ct) {
      char* out = nullptr;
      require(ctx.get(),
              pcm_point_count(ctx.get(), ct_p.c_str(), ct_a.c_str(), ct_b.c_str(), &out));
      StringPtr owned(out);
      emit("count", {{"p", ct_p}, {"A", ct_a}, {"B", ct_b}}, {{"count", owned.get()}}, seed, t0);
    }
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "primecm: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
