#include "ringprob/ringprob.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "commands.hpp"
#include "probability.hpp"

struct ringprob_ring {
  ringprob::FiniteRing ring;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ringprob_status status_of(ringprob::ErrorCode code) {
  using ringprob::ErrorCode;
  switch (code) {
    case ErrorCode::ill_formed:
    case ErrorCode::symmetry_violated:
    case ErrorCode::non_ideal_input:
    case ErrorCode::invalid_argument: return RINGPROB_MALFORMED;
    case ErrorCode::cap_exceeded: return RINGPROB_CAP_EXCEEDED;
    case ErrorCode::flavor_mismatch:
    case ErrorCode::io: return RINGPROB_ERROR;
  }
  return RINGPROB_ERROR;
}

template <typename F>
ringprob_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const ringprob::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return RINGPROB_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return RINGPROB_ERROR;
  }
}

ringprob::RunConfig to_config(const ringprob_config* c) {
  ringprob::RunConfig rc;
  if (!c) return rc;
  rc.mode = c->mode == RINGPROB_MODE_ZP ? ringprob::Mode::zp : ringprob::Mode::cp;
  switch (c->format) {
    case RINGPROB_FORMAT_CSV: rc.format = ringprob::OutputFormat::csv; break;
    case RINGPROB_FORMAT_TEXT: rc.format = ringprob::OutputFormat::text; break;
    default: rc.format = ringprob::OutputFormat::json;
  }
  if (c->max_order) rc.max_order = c->max_order;
  rc.jobs = c->jobs ? c->jobs : 1;
  switch (c->objective) {
    case RINGPROB_OBJECTIVE_SUM: rc.objective = ringprob::Objective::sum; break;
    case RINGPROB_OBJECTIVE_LEX: rc.objective = ringprob::Objective::lex; break;
    default: rc.objective = ringprob::Objective::max;
  }
  if (c->epsilon) rc.epsilon = ringprob::parse_rational(c->epsilon);
  if (c->oracle_max) rc.oracle_max = c->oracle_max;
  return rc;
}

ringprob_status finish(const ringprob::CommandResult& r, char** out) {
  *out = dup(r.output);
  return r.passed ? RINGPROB_OK : RINGPROB_ASSERTION_FAILED;
}

ringprob_status null_argument() {
  last_error = "null argument";
  return RINGPROB_ERROR;
}

}  // namespace

extern "C" {

void ringprob_config_init(ringprob_config* config) {
  if (!config) return;
  config->mode = RINGPROB_MODE_CP;
  config->format = RINGPROB_FORMAT_JSON;
  config->max_order = 0;
  config->jobs = 1;
  config->objective = RINGPROB_OBJECTIVE_MAX;
  config->epsilon = nullptr;
  config->oracle_max = 0;
}

const char* ringprob_version(void) { return "1.0.0"; }

const char* ringprob_last_error(void) { return last_error.c_str(); }

void ringprob_string_free(char* s) { std::free(s); }

ringprob_status ringprob_ring_load(const char* path, ringprob_ring** out) {
  if (!path || !out) return null_argument();
  return guarded([&] {
    *out = new ringprob_ring{ringprob::load_ring(path).ring};
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_ring_parse(const char* json, ringprob_ring** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new ringprob_ring{ringprob::ring_from_json(json).ring};
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_ring_build(const char* family, ringprob_ring** out) {
  if (!family || !out) return null_argument();
  return guarded([&] {
    *out = new ringprob_ring{ringprob::build_family(std::string(family))};
    return RINGPROB_OK;
  });
}

void ringprob_ring_free(ringprob_ring* ring) { delete ring; }

uint64_t ringprob_ring_cardinality(const ringprob_ring* ring) {
  return ring ? ring->ring.cardinality() : 0;
}

ringprob_status ringprob_ring_to_json(const ringprob_ring* ring, char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] {
    *out = dup(ringprob::ring_to_json(ring->ring));
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_ring_save(const ringprob_ring* ring, const char* path) {
  if (!ring || !path) return null_argument();
  return guarded([&] {
    ringprob::save_ring(ring->ring, path);
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_cp(const ringprob_ring* ring, char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] {
    *out = dup(ringprob::to_string(ringprob::commuting_probability(ring->ring)));
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_zp(const ringprob_ring* ring, char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] {
    *out = dup(ringprob::to_string(ringprob::zero_probability(ring->ring)));
    return RINGPROB_OK;
  });
}

ringprob_status ringprob_info(const ringprob_ring* ring, const ringprob_config* config, char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] { return finish(ringprob::cmd_info(ring->ring, to_config(config)), out); });
}

ringprob_status ringprob_extract(const ringprob_ring* ring, const ringprob_config* config,
                                 char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] { return finish(ringprob::cmd_extract(ring->ring, to_config(config)), out); });
}

ringprob_status ringprob_verify(const ringprob_ring* ring, const char* suite,
                                const ringprob_config* config, char** out) {
  if (!ring || !suite || !out) return null_argument();
  return guarded(
      [&] { return finish(ringprob::cmd_verify(ring->ring, suite, to_config(config)), out); });
}

ringprob_status ringprob_oracle(const ringprob_ring* ring, const ringprob_config* config,
                                char** out) {
  if (!ring || !out) return null_argument();
  return guarded([&] { return finish(ringprob::cmd_oracle(ring->ring, to_config(config)), out); });
}

ringprob_status ringprob_scan(const char* const* grids, size_t count, const ringprob_config* config,
                              char** out) {
  if ((!grids && count) || !out) return null_argument();
  return guarded([&] {
    std::vector<std::string> g(grids, grids + count);
    return finish(ringprob::cmd_scan(g, to_config(config)), out);
  });
}

ringprob_status ringprob_enumerate(const uint32_t* orders, size_t rank, const char* out_dir,
                                   const ringprob_config* config, char** out) {
  if ((!orders && rank) || !out) return null_argument();
  return guarded([&] {
    std::vector<std::uint32_t> o(orders, orders + rank);
    return finish(ringprob::cmd_enumerate(o, out_dir ? out_dir : "", to_config(config)), out);
  });
}

}  // extern "C"
