#ifndef SVCR_H
#define SVCR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SvcrStatus {
  SvcrOk = 0,
  SvcrNullPointer = 1,
  SvcrUtf8Error = 2,
  SvcrParseError = 3,
  SvcrInvalidArgument = 4,
  SvcrTieError = 5,
  SvcrPanic = 6,
} SvcrStatus;

/**
 * Profile encodings accepted by the parsers.
 */
typedef enum SvcrFormat {
  SvcrFormatDense = 0,
  SvcrFormatSparse = 1,
} SvcrFormat;

/**
 * Boundary-tie handling for committee selection.
 */
typedef enum SvcrTiePolicy {
  SvcrTiePolicyLex = 0,
  SvcrTiePolicyError = 1,
  SvcrTiePolicyReport = 2,
} SvcrTiePolicy;

/**
 * Opaque game handle.
 */
typedef struct SvcrGame SvcrGame;

/**
 * Opaque parsed profile handle.
 */
typedef struct SvcrProfile SvcrProfile;

/**
 * Opaque score-vector handle.
 */
typedef struct SvcrScores SvcrScores;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the most recent error message on this thread, or NULL. The
 * caller owns the string and must free it with [`svcr_string_free`].
 */
char *svcr_last_error_message(void);

/**
 * Frees a string allocated by this library. NULL is ignored.
 *
 * # Safety
 * `text` must have been returned by an `svcr_*` function and not freed
 * before.
 */
void svcr_string_free(char *text);

/**
 * Parses a profile document. On success stores a new handle in `out`;
 * the caller frees it with [`svcr_profile_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum SvcrStatus svcr_profile_parse(const char *text,
                                   enum SvcrFormat format,
                                   struct SvcrProfile **out);

/**
 * # Safety
 * `profile` must come from [`svcr_profile_parse`] and not be freed
 * twice. NULL is ignored.
 */
void svcr_profile_free(struct SvcrProfile *profile);

/**
 * Number of voters in the profile; 0 when `profile` is NULL.
 *
 * # Safety
 * `profile` must be a live handle or NULL.
 */
uintptr_t svcr_profile_voter_count(const struct SvcrProfile *profile);

/**
 * Number of alternatives in the profile; 0 when `profile` is NULL.
 *
 * # Safety
 * `profile` must be a live handle or NULL.
 */
uintptr_t svcr_profile_alternative_count(const struct SvcrProfile *profile);

/**
 * Name of alternative `index`, or NULL when out of range. Free with
 * [`svcr_string_free`].
 *
 * # Safety
 * `profile` must be a live handle or NULL.
 */
char *svcr_profile_alternative_name(const struct SvcrProfile *profile, uintptr_t index);

/**
 * Builds the game induced by a profile. The caller frees the handle
 * with [`svcr_game_free`].
 *
 * # Safety
 * `profile` must be a live handle; `out` a valid pointer.
 */
enum SvcrStatus svcr_game_build(const struct SvcrProfile *profile, struct SvcrGame **out);

/**
 * # Safety
 * `game` must come from [`svcr_game_build`] and not be freed twice.
 * NULL is ignored.
 */
void svcr_game_free(struct SvcrGame *game);

/**
 * Worth of the coalition whose members are given by `bits` (bit `i`
 * set means alternative `i` is a member). Returns 0 for NULL handles.
 *
 * # Safety
 * `game` must be a live handle or NULL.
 */
int64_t svcr_game_worth(const struct SvcrGame *game, uint32_t bits);

/**
 * Computes exact Shapley scores for a game. The caller frees the handle
 * with [`svcr_scores_free`].
 *
 * # Safety
 * `game` must be a live handle; `out` a valid pointer.
 */
enum SvcrStatus svcr_scores_compute(const struct SvcrGame *game, struct SvcrScores **out);

/**
 * # Safety
 * `scores` must come from [`svcr_scores_compute`] and not be freed
 * twice. NULL is ignored.
 */
void svcr_scores_free(struct SvcrScores *scores);

/**
 * Number of scores; 0 for NULL handles.
 *
 * # Safety
 * `scores` must be a live handle or NULL.
 */
uintptr_t svcr_scores_len(const struct SvcrScores *scores);

/**
 * Exact score of alternative `index` as a `num/den` string, or NULL
 * when out of range. Free with [`svcr_string_free`].
 *
 * # Safety
 * `scores` must be a live handle or NULL.
 */
char *svcr_scores_exact(const struct SvcrScores *scores, uintptr_t index);

/**
 * Score of alternative `index` rendered with `places` decimal digits,
 * or NULL when out of range. Free with [`svcr_string_free`].
 *
 * # Safety
 * `scores` must be a live handle or NULL.
 */
char *svcr_scores_decimal(const struct SvcrScores *scores, uintptr_t index, uint32_t places);

/**
 * One-shot election: parses `text`, scores the profile, selects a
 * size-`k` committee under `policy`, and stores the results document
 * (JSON) in `out_json`. Free the string with [`svcr_string_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out_json` a valid
 * pointer.
 */
enum SvcrStatus svcr_elect_json(const char *text,
                                enum SvcrFormat format,
                                uintptr_t k,
                                enum SvcrTiePolicy policy,
                                uint32_t decimals,
                                char **out_json);

/**
 * One-shot rule comparison: parses `text` and stores the comparison
 * document (JSON) in `out_json`. Free the string with
 * [`svcr_string_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out_json` a valid
 * pointer.
 */
enum SvcrStatus svcr_compare_json(const char *text,
                                  enum SvcrFormat format,
                                  uintptr_t k,
                                  enum SvcrTiePolicy policy,
                                  uint32_t decimals,
                                  char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SVCR_H */
