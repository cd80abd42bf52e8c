#include "primecm.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <thread>

#include "primecm/classpoly.hpp"
#include "primecm/record.hpp"

struct pcm_context {
  std::string last_error;
};

struct pcm_result {
  primecm::record::Result value;
};

namespace {

using namespace primecm;

pcm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PCM_ERR_INVALID_ARGUMENT;
    case ErrorCode::DomainError: return PCM_ERR_DOMAIN;
    case ErrorCode::NoSquareRoot: return PCM_ERR_NO_SQUARE_ROOT;
    case ErrorCode::BadModulus: return PCM_ERR_BAD_MODULUS;
    case ErrorCode::NonInvertible: return PCM_ERR_NON_INVERTIBLE;
    case ErrorCode::BadWitness: return PCM_ERR_BAD_WITNESS;
    case ErrorCode::InvariantNotApplicable: return PCM_ERR_INVARIANT_NOT_APPLICABLE;
    case ErrorCode::NoRootModP: return PCM_ERR_NO_ROOT;
    case ErrorCode::SpecialJ: return PCM_ERR_SPECIAL_J;
    case ErrorCode::AmbiguousHasse: return PCM_ERR_AMBIGUOUS_HASSE;
    case ErrorCode::OracleRange: return PCM_ERR_ORACLE_RANGE;
    case ErrorCode::SearchExhausted: return PCM_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::Internal: return PCM_ERR_INTERNAL;
  }
  return PCM_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and a context message.
template <typename Fn>
pcm_status guarded(pcm_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return PCM_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return PCM_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = std::string("json: ") + e.what();
    return PCM_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return PCM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return PCM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Integer parse_integer(const char* text, const char* what) {
  if (text == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
  Integer v;
  if (v.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not a decimal integer");
  }
  return v;
}

quadratic::Discriminant parse_discriminant(const char* text) {
  const Integer d = parse_integer(text, "discriminant");
  if (!d.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "discriminant out of range");
  return quadratic::Discriminant(d.get_si());
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

construct::SearchPolicy to_policy(const pcm_search_options* options) {
  pcm_search_options defaults;
  pcm_search_options_init(&defaults);
  const pcm_search_options& o = options != nullptr ? *options : defaults;
  construct::SearchPolicy policy;
  policy.seed = o.seed;
  policy.max_rounds = o.max_rounds;
  policy.min_class_number = o.min_class_number;
  policy.prefer_gamma2 = o.invariant == PCM_INVARIANT_GAMMA2;
  if (o.scan_from != nullptr) {
    policy.scan_mode = construct::ScanMode::Sequential;
    policy.scan_from = parse_integer(o.scan_from, "scan_from");
  } else {
    policy.scan_mode = construct::ScanMode::Random;
  }
  policy.max_candidates = o.max_candidates;
  policy.threads = resolve_threads(o.threads);
  return policy;
}

}  // namespace

extern "C" {

void pcm_search_options_init(pcm_search_options* options) {
  if (options == nullptr) return;
  const construct::SearchPolicy defaults;
  options->seed = defaults.seed;
  options->max_rounds = defaults.max_rounds;
  options->min_class_number = defaults.min_class_number;
  options->invariant = PCM_INVARIANT_GAMMA2;
  options->scan_from = nullptr;
  options->max_candidates = defaults.max_candidates;
  options->threads = 0;
}

pcm_status pcm_context_create(pcm_context** out) {
  if (out == nullptr) return PCM_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) pcm_context();
  return *out != nullptr ? PCM_OK : PCM_ERR_INTERNAL;
}

void pcm_context_destroy(pcm_context* ctx) { delete ctx; }

const char* pcm_last_error(const pcm_context* ctx) {
  return ctx != nullptr ? ctx->last_error.c_str() : "null context";
}

const char* pcm_status_string(pcm_status status) {
  switch (status) {
    case PCM_OK: return "ok";
    case PCM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PCM_ERR_DOMAIN: return "domain error";
    case PCM_ERR_NO_SQUARE_ROOT: return "no square root";
    case PCM_ERR_BAD_MODULUS: return "bad modulus";
    case PCM_ERR_NON_INVERTIBLE: return "non-invertible";
    case PCM_ERR_BAD_WITNESS: return "bad witness";
    case PCM_ERR_INVARIANT_NOT_APPLICABLE: return "invariant not applicable";
    case PCM_ERR_NO_ROOT: return "no root mod p";
    case PCM_ERR_SPECIAL_J: return "special j-invariant";
    case PCM_ERR_AMBIGUOUS_HASSE: return "ambiguous Hasse interval";
    case PCM_ERR_ORACLE_RANGE: return "outside oracle range";
    case PCM_ERR_SEARCH_EXHAUSTED: return "search exhausted";
    case PCM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

pcm_status pcm_fixed_order(pcm_context* ctx, const char* n,
                           const pcm_search_options* options, pcm_result** out) {
  return guarded(ctx, [&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "out is null");
    auto r = construct::fixed_order_curve(parse_integer(n, "N"), to_policy(options));
    *out = new pcm_result{std::move(r)};
  });
}

pcm_status pcm_fixed_size(pcm_context* ctx, unsigned k, const char* discriminant,
                          const pcm_search_options* options, pcm_result** out) {
  return guarded(ctx, [&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "out is null");
    auto r = construct::fixed_size_curve(k, parse_discriminant(discriminant),
                                         to_policy(options));
    *out = new pcm_result{std::move(r)};
  });
}

pcm_status pcm_result_to_json(pcm_context* ctx, const pcm_result* result, char** out) {
  return guarded(ctx, [&] {
    if (result == nullptr || out == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    *out = dup_string(record::to_json(result->value).dump());
  });
}

pcm_status pcm_result_from_json(pcm_context* ctx, const char* json, pcm_result** out) {
  return guarded(ctx, [&] {
    if (json == nullptr || out == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    auto parsed = record::from_json(nlohmann::json::parse(json));
    *out = new pcm_result{std::move(parsed)};
  });
}

pcm_status pcm_result_check(pcm_context* ctx, const pcm_result* result, int* ok,
                            const char** reason) {
  return guarded(ctx, [&] {
    if (result == nullptr || ok == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    const auto report = record::check(result->value);
    *ok = report.ok() ? 1 : 0;
    if (reason != nullptr) *reason = construct::to_string(report.status);
  });
}

void pcm_result_destroy(pcm_result* result) { delete result; }

pcm_status pcm_class_poly(pcm_context* ctx, const char* discriminant,
                          pcm_invariant invariant, const char* cache_path,
                          unsigned threads, char** out_record) {
  return guarded(ctx, [&] {
    if (out_record == nullptr) throw Error(ErrorCode::InvalidArgument, "out is null");
    const auto d = parse_discriminant(discriminant);
    const auto kind = invariant == PCM_INVARIANT_GAMMA2 ? classpoly::InvariantKind::GAMMA2
                                                        : classpoly::InvariantKind::J;
    classpoly::EvalOptions opts;
    opts.threads = resolve_threads(threads);
    classpoly::ClassPolynomial poly;
    if (cache_path != nullptr) {
      poly = classpoly::cached_class_poly(cache_path, d, kind, opts);
    } else if (kind == classpoly::InvariantKind::GAMMA2) {
      poly = classpoly::gamma2_class_poly(d, opts);
    } else {
      poly = classpoly::hilbert_class_poly(d, opts);
    }
    std::ostringstream os;
    classpoly::write_record(os, poly);
    *out_record = dup_string(os.str());
  });
}

pcm_status pcm_cornacchia(pcm_context* ctx, const char* discriminant, const char* n,
                          int* found, char** x, char** y) {
  return guarded(ctx, [&] {
    if (found == nullptr || x == nullptr || y == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    const auto d = parse_discriminant(discriminant);
    const Integer nn = parse_integer(n, "N");
    if (nn < 3 || !arith::is_probable_prime(nn)) {
      throw Error(ErrorCode::InvalidArgument, "N must be an odd prime");
    }
    *found = 0;
    const Integer dd(static_cast<long>(d.value()));
    if (arith::kronecker(dd, nn) == -1) return;
    const auto sol = quadratic::cornacchia(d, nn, arith::sqrt_mod_prime(dd, nn));
    if (!sol) return;
    *x = dup_string(sol->x.get_str());
    *y = dup_string(sol->y.get_str());
    *found = 1;
  });
}

pcm_status pcm_point_count(pcm_context* ctx, const char* p, const char* a, const char* b,
                           char** out) {
  return guarded(ctx, [&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "out is null");
    const Integer pp = parse_integer(p, "p");
    if (pp > ec::kNaiveCountLimit) {
      throw Error(ErrorCode::OracleRange, "count: p must be at most 10^6");
    }
    if (!arith::is_probable_prime(pp)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
    const ec::Curve curve(pp, parse_integer(a, "A"), parse_integer(b, "B"));
    *out = dup_string(ec::naive_point_count(curve).get_str());
  });
}

void pcm_string_free(char* s) { std::free(s); }

}  // extern "C"
