/* C interface to the misinformation-games library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Functions returning char* hand ownership to the caller; release with
 * mi_string_free. On failure a function returns a non-zero status and
 * mi_last_error() describes the problem for the calling thread. */
#ifndef MISINFO_H
#define MISINFO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MISINFO_BUILDING_LIBRARY)
#    define MI_API __declspec(dllexport)
#  else
#    define MI_API __declspec(dllimport)
#  endif
#else
#  define MI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mi_status {
  MI_OK = 0,
  MI_ERR_DOMAIN = 1,  /* degenerate game, undefined metric, cap exceeded, non-canonical input */
  MI_ERR_PARSE = 2,   /* malformed JSON, schema violation, bad rational */
  MI_ERR_IO = 3,
  MI_ERR_INVALID_ARGUMENT = 4,
  MI_ERR_INTERNAL = 5
} mi_status;

typedef struct mi_game mi_game;       /* normal-form game */
typedef struct mi_misinfo mi_misinfo; /* actual game plus subjective views */
typedef struct mi_options mi_options;

MI_API const char* mi_version(void);
MI_API const char* mi_last_error(void);
MI_API void mi_string_free(char* s);

MI_API mi_options* mi_options_new(void);
MI_API void mi_options_free(mi_options* o);
MI_API mi_status mi_options_set_threads(mi_options* o, size_t threads);
MI_API mi_status mi_options_set_seed(mi_options* o, uint64_t seed);
MI_API mi_status mi_options_set_tolerance(mi_options* o, double tol);
MI_API mi_status mi_options_set_support_eps(mi_options* o, double eps);
MI_API mi_status mi_options_set_allow_degenerate(mi_options* o, int allow);
MI_API mi_status mi_options_set_max_nodes(mi_options* o, size_t max_nodes);
MI_API mi_status mi_options_set_index_base(mi_options* o, int base);

MI_API mi_status mi_game_from_json(const char* json, mi_game** out);
MI_API mi_status mi_game_to_json(const mi_game* g, char** out);
MI_API void mi_game_free(mi_game* g);
MI_API size_t mi_game_num_players(const mi_game* g);

MI_API mi_status mi_misinfo_from_json(const char* json, mi_misinfo** out);
MI_API mi_status mi_misinfo_to_json(const mi_misinfo* mg, char** out);
MI_API void mi_misinfo_free(mi_misinfo* mg);
MI_API int mi_misinfo_is_canonical(const mi_misinfo* mg);

/* Equilibria, social optimum and price of anarchy as JSON. */
MI_API mi_status mi_solve(const mi_game* g, const mi_options* o, char** out_json);
/* Pads g to `players` players with the given strategy counts. */
MI_API mi_status mi_inflate(const mi_game* g, size_t players, const size_t* counts, size_t ncounts, mi_game** out);
MI_API mi_status mi_canonicalize(const mi_misinfo* mg, mi_misinfo** out);
MI_API mi_status mi_nme(const mi_misinfo* mg, const mi_options* o, char** out_json);
MI_API mi_status mi_adapt(const mi_misinfo* mg, const mi_options* o, char** out_json);
MI_API mi_status mi_sme(const mi_misinfo* mg, const mi_options* o, char** out_json);
MI_API mi_status mi_one_sme(const mi_misinfo* mg, const mi_options* o, char** out_json);
MI_API mi_status mi_export_dot(const mi_misinfo* mg, const mi_options* o, int loopless, char** out_dot);

/* Monte Carlo over random games of shape `setting` ("3x2"). format 0 = CSV
 * rows, 1 = JSON aggregate. */
MI_API mi_status mi_experiment(const char* setting, size_t runs, long payoff_lo, long payoff_hi, const mi_options* o,
                               int format, char** out);
/* Instance whose adaptation takes one step per position. */
MI_API mi_status mi_adversarial(const char* setting, mi_misinfo** out);

#ifdef __cplusplus
}
#endif

#endif /* MISINFO_H */
